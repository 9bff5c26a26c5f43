#ifndef EAVE_MESH_IO_HPP
#define EAVE_MESH_IO_HPP

#include "eave/dual.hpp"
#include "eave/mesh.hpp"

#include <iosfwd>
#include <optional>
#include <string>

namespace eave {

// Line-oriented text format, reals printed with 17 significant digits so a
// write/read round trip is bit exact:
//
//   poly-mesh v1
//   VERTICES <n>      n lines "x y"
//   CELLS <m>         m lines of CCW vertex indices
//   DUAL              (optional)
//   SEEDS <m>         one seed per cell
//   TRIANGLES <t>     interior dual triangles "a b c"
//   PAIRING <p>       interior edges "e estar_len mx my"
struct MeshFile {
    PolygonalMesh mesh;
    std::optional<DualMeshPair> dual;
};

void write_mesh(std::ostream& os, const PolygonalMesh& mesh);
void write_dual(std::ostream& os, const DualMeshPair& pair);
void write_mesh_file(const std::string& path, const PolygonalMesh& mesh);
void write_dual_file(const std::string& path, const DualMeshPair& pair);

MeshFile read_mesh(std::istream& is);
MeshFile read_mesh_file(const std::string& path);

} // namespace eave

#endif
