#pragma once

#include "predicates.hpp"
#include "tet_mesh.hpp"

#include <iosfwd>

namespace wct {

/// Full-precision decimal formatting (%.17g); write->read round-trips are
/// bit-exact.
std::string format_double(double value);

// Native mesh format: "dim nv nc", nv coordinate lines, nc index lines
// (dim+1 indices each, 0-based).  Only dim == 3 is supported.
TetMesh read_mesh(std::istream& in);
void write_mesh(std::ostream& out, const TetMesh& mesh);
TetMesh read_mesh_file(const std::string& path);
void write_mesh_file(const std::string& path, const TetMesh& mesh);

// Abstract link format: "m t" followed by t triangle lines.  An OFF-style
// surface file (coordinates ignored) is accepted as well.
SphereTriangulation read_link(std::istream& in);
void write_link(std::ostream& out, const SphereTriangulation& tri);
SphereTriangulation read_link_file(const std::string& path);
void write_link_file(const std::string& path, const SphereTriangulation& tri);

// Region grid: text header (bbox, resolution, facet), then the scalar field
// in z-major rows (one row of nx values per (iz, iy) pair).
void write_region(std::ostream& out, const RegionGrid& grid);
RegionGrid read_region(std::istream& in);
void write_region_file(const std::string& path, const RegionGrid& grid);

}  // namespace wct
