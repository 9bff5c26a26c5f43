#ifndef EAVE_ERRORS_HPP
#define EAVE_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace eave {

struct Error : std::runtime_error {
    explicit Error(const std::string& what) : std::runtime_error(what) {}
};

// A polygon with |K| below the degeneracy threshold (1e-14).
struct DegeneratePolygon : Error {
    explicit DegeneratePolygon(const std::string& what) : Error(what) {}
};

// A Voronoi-Delaunay pair failed an orthogonality / midpoint / acuteness /
// bijection check. Carries the offending edge (or -1 when not edge-local).
struct DualityViolation : Error {
    int edge_id;
    DualityViolation(int edge, const std::string& what) : Error(what), edge_id(edge) {}
};

// The voro-dual generator exhausted its perturbation schedule without
// certifying an all-acute interior dual triangulation.
struct AcutenessFailure : Error {
    explicit AcutenessFailure(const std::string& what) : Error(what) {}
};

// An edge of a cell has no dual edge attached.
struct MissingPairing : Error {
    explicit MissingPairing(const std::string& what) : Error(what) {}
};

struct NonpositiveDiffusion : Error {
    explicit NonpositiveDiffusion(const std::string& what) : Error(what) {}
};

struct SolverFailure : Error {
    double residual;
    int iterations;
    SolverFailure(double res, int iters, const std::string& what)
        : Error(what), residual(res), iterations(iters) {}
};

// Mesh file / config file parse error with location diagnostics.
struct ParseError : Error {
    int line;
    ParseError(int line_no, const std::string& what)
        : Error("line " + std::to_string(line_no) + ": " + what), line(line_no) {}
};

struct ConfigError : Error {
    explicit ConfigError(const std::string& what) : Error(what) {}
};

} // namespace eave

#endif
