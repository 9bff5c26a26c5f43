#ifndef EAVE_ASSEMBLE_HPP
#define EAVE_ASSEMBLE_HPP

#include "eave/dual.hpp"
#include "eave/mesh.hpp"
#include "eave/problem.hpp"
#include "eave/solver.hpp"
#include "eave/sparse.hpp"
#include "eave/vem_local.hpp"

#include <string>
#include <vector>

namespace eave {

enum class SchemeKind { FE, SUPG, EAFE, EAVE, MEAVE };

SchemeKind scheme_from_name(const std::string& name);
std::string scheme_name(SchemeKind kind);

// Operator and load assembled over all vertex DoFs, before the Dirichlet
// reduction. For M-EAVE the row of an interior vertex is the balance
// equation of its dual triangle; boundary rows are dropped later.
struct AssembledOperator {
    Triplets matrix;
    std::vector<double> rhs;
};

// Square system over the interior (free) DoFs.
struct LinearSystem {
    SparseMatrix a;
    std::vector<double> b;
    std::vector<int> vertex_of_free;
    std::vector<int> free_of_vertex;     // -1 for boundary vertices
    std::vector<double> boundary_value;  // g at boundary vertices, 0 elsewhere
};

AssembledOperator assemble_fe(const PolygonalMesh& mesh, const ProblemSpec& spec);
AssembledOperator assemble_supg(const PolygonalMesh& mesh, const ProblemSpec& spec);
AssembledOperator assemble_eafe(const PolygonalMesh& mesh, const ProblemSpec& spec);
AssembledOperator assemble_eave(const PolygonalMesh& mesh, const ProblemSpec& spec,
                                StabChoice stab);
AssembledOperator assemble_meave(const DualMeshPair& pair, const ProblemSpec& spec);

// Poisson operators used as degeneracy oracles and monotonicity hypotheses.
AssembledOperator assemble_vem_poisson(const PolygonalMesh& mesh, StabChoice stab);
AssembledOperator assemble_fvm_poisson(const DualMeshPair& pair);

// Petrov-Galerkin load for the dual-cell test space: per interior triangle,
// |T|/3 times the sum of f at the three seeds.
std::vector<double> rhs_fvm(const DualMeshPair& pair, const ScalarField& f);

// F_h: per cell, distribute |K| f(centroid) / N_V to each vertex.
std::vector<double> rhs_fh(const PolygonalMesh& mesh, const ScalarField& f);

// Eliminates boundary DoFs: boundary values from g, their columns moved to
// the right-hand side, rows restricted to interior vertices.
LinearSystem apply_dirichlet(const AssembledOperator& op, const PolygonalMesh& mesh,
                             const ScalarField& g);

// Full vertex-indexed solution (boundary slots carry g).
std::vector<double> solve_system(const LinearSystem& sys, SolveStats* stats = nullptr);

} // namespace eave

#endif
