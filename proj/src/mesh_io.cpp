#include "eave/mesh_io.hpp"

#include "eave/errors.hpp"

#include <cmath>
#include <cstdio>
#include <fstream>
#include <sstream>

namespace eave {

namespace {

std::string fmt_real(double v) {
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%.17g", v);
    return buf;
}

struct LineReader {
    std::istream& is;
    int line_no = 0;

    bool next(std::string& out) {
        while (std::getline(is, out)) {
            ++line_no;
            if (!out.empty() && out.back() == '\r') out.pop_back();
            if (!out.empty()) return true;
        }
        return false;
    }

    std::string expect() {
        std::string s;
        if (!next(s)) throw ParseError(line_no, "unexpected end of file");
        return s;
    }
};

int parse_count(LineReader& lr, const std::string& line, const std::string& keyword) {
    std::istringstream ss(line);
    std::string word;
    long long count = -1;
    if (!(ss >> word >> count) || word != keyword || count < 0)
        throw ParseError(lr.line_no, "expected '" + keyword + " <count>'");
    return static_cast<int>(count);
}

Point2 parse_point(LineReader& lr) {
    const std::string line = lr.expect();
    std::istringstream ss(line);
    double x, y;
    if (!(ss >> x >> y)) throw ParseError(lr.line_no, "expected two reals");
    if (!std::isfinite(x) || !std::isfinite(y))
        throw ParseError(lr.line_no, "non-finite coordinate");
    return {x, y};
}

} // namespace

void write_mesh(std::ostream& os, const PolygonalMesh& mesh) {
    os << "poly-mesh v1\n";
    os << "VERTICES " << mesh.num_vertices() << "\n";
    for (const Point2& p : mesh.vertices) os << fmt_real(p.x) << " " << fmt_real(p.y) << "\n";
    os << "CELLS " << mesh.num_cells() << "\n";
    for (const auto& cyc : mesh.cells) {
        for (std::size_t k = 0; k < cyc.size(); ++k) os << (k ? " " : "") << cyc[k];
        os << "\n";
    }
}

void write_dual(std::ostream& os, const DualMeshPair& pair) {
    write_mesh(os, pair.primary);
    os << "DUAL\n";
    os << "SEEDS " << pair.seeds.size() << "\n";
    for (const Point2& p : pair.seeds) os << fmt_real(p.x) << " " << fmt_real(p.y) << "\n";
    os << "TRIANGLES " << pair.dual_triangles.size() << "\n";
    for (const auto& t : pair.dual_triangles) os << t[0] << " " << t[1] << " " << t[2] << "\n";
    int n_interior = 0;
    for (const auto& dp : pair.pairing)
        if (dp.interior) ++n_interior;
    os << "PAIRING " << n_interior << "\n";
    for (int e = 0; e < static_cast<int>(pair.pairing.size()); ++e) {
        const DualPairing& dp = pair.pairing[e];
        if (!dp.interior) continue;
        os << e << " " << fmt_real(dp.dual_length) << " " << fmt_real(dp.midpoint.x) << " "
           << fmt_real(dp.midpoint.y) << "\n";
    }
}

void write_mesh_file(const std::string& path, const PolygonalMesh& mesh) {
    std::ofstream os(path);
    if (!os) throw Error("cannot open " + path + " for writing");
    write_mesh(os, mesh);
}

void write_dual_file(const std::string& path, const DualMeshPair& pair) {
    std::ofstream os(path);
    if (!os) throw Error("cannot open " + path + " for writing");
    write_dual(os, pair);
}

MeshFile read_mesh(std::istream& is) {
    LineReader lr{is};
    const std::string header = lr.expect();
    if (header != "poly-mesh v1") throw ParseError(lr.line_no, "bad header: " + header);

    const int nv = parse_count(lr, lr.expect(), "VERTICES");
    std::vector<Point2> verts;
    verts.reserve(nv);
    for (int i = 0; i < nv; ++i) verts.push_back(parse_point(lr));

    const int nc = parse_count(lr, lr.expect(), "CELLS");
    std::vector<std::vector<int>> cells(nc);
    for (int c = 0; c < nc; ++c) {
        std::istringstream ss(lr.expect());
        long long v;
        while (ss >> v) {
            if (v < 0 || v >= nv) throw ParseError(lr.line_no, "vertex index out of range");
            cells[c].push_back(static_cast<int>(v));
        }
        if (cells[c].size() < 3) throw ParseError(lr.line_no, "cell with fewer than 3 vertices");
    }

    MeshFile out;
    out.mesh = PolygonalMesh::build(std::move(verts), std::move(cells));

    std::string section;
    if (!lr.next(section)) return out;
    if (section != "DUAL") throw ParseError(lr.line_no, "unexpected section: " + section);

    const int ns = parse_count(lr, lr.expect(), "SEEDS");
    if (ns != out.mesh.num_cells())
        throw ParseError(lr.line_no, "seed count does not match cell count");
    std::vector<Point2> seeds;
    seeds.reserve(ns);
    for (int i = 0; i < ns; ++i) seeds.push_back(parse_point(lr));

    const int nt = parse_count(lr, lr.expect(), "TRIANGLES");
    std::vector<std::array<int, 3>> tris(nt);
    for (int t = 0; t < nt; ++t) {
        std::istringstream ss(lr.expect());
        if (!(ss >> tris[t][0] >> tris[t][1] >> tris[t][2]))
            throw ParseError(lr.line_no, "expected three seed indices");
        for (int v : tris[t])
            if (v < 0 || v >= ns) throw ParseError(lr.line_no, "seed index out of range");
    }

    const int np = parse_count(lr, lr.expect(), "PAIRING");
    struct StoredPairing {
        int edge;
        double len, mx, my;
    };
    std::vector<StoredPairing> stored(np);
    for (int i = 0; i < np; ++i) {
        std::istringstream ss(lr.expect());
        if (!(ss >> stored[i].edge >> stored[i].len >> stored[i].mx >> stored[i].my))
            throw ParseError(lr.line_no, "expected 'e estar_len mx my'");
    }

    out.dual = build_dual_pairing(out.mesh, std::move(seeds), std::move(tris));
    int n_interior = 0;
    for (const MeshEdge& e : out.mesh.edges)
        if (!e.is_boundary()) ++n_interior;
    if (np != n_interior)
        throw ParseError(lr.line_no, "PAIRING lists " + std::to_string(np) + " edges, mesh has " +
                                         std::to_string(n_interior) + " interior edges");
    for (const StoredPairing& sp : stored) {
        if (sp.edge < 0 || sp.edge >= out.mesh.num_edges())
            throw ParseError(lr.line_no, "pairing edge id out of range");
        const DualPairing& dp = out.dual->pairing[sp.edge];
        if (!dp.interior || std::abs(dp.dual_length - sp.len) > 1e-12 ||
            std::abs(dp.midpoint.x - sp.mx) > 1e-12 || std::abs(dp.midpoint.y - sp.my) > 1e-12)
            throw ParseError(lr.line_no, "stored pairing disagrees with the mesh geometry (edge " +
                                             std::to_string(sp.edge) + ")");
    }
    return out;
}

MeshFile read_mesh_file(const std::string& path) {
    std::ifstream is(path);
    if (!is) throw Error("cannot open " + path);
    return read_mesh(is);
}

} // namespace eave
