#pragma once

#include "predicates.hpp"
#include "sphere_triangulation.hpp"

#include <array>

namespace wct {

using Vec3 = Eigen::Vector3d;

/// Embedded tetrahedral complex; tets are stored positively oriented.
struct TetMesh {
  std::vector<Vec3> vertices;
  std::vector<std::array<int, 4>> tets;
};

struct MeshDiagnostics {
  bool valid = false;
  std::string first_failure;
};

MeshDiagnostics validate_mesh(const TetMesh& mesh, const Tolerance& tol = {});

/// Normalizes tet orientation and validates; throws on invalid input.
TetMesh make_tet_mesh(std::vector<Vec3> vertices,
                      std::vector<std::array<int, 4>> tets,
                      const Tolerance& tol = {});

Simplex tet_simplex(const TetMesh& mesh, int t);

/// Link of a vertex: the triangles opposite v in the tets incident to v,
/// relabeled 0..m-1 (ascending global id).  is_interior is true exactly when
/// the link validates as a triangulation of S^2.
struct VertexLink {
  SphereTriangulation tri;
  std::vector<int> vertex_ids;  // local -> global
  bool is_interior = false;
};

VertexLink link_of(const TetMesh& mesh, int v);

std::vector<int> interior_vertices(const TetMesh& mesh);

int incident_edge_count(const TetMesh& mesh, int v);

/// All face angles at u (angle at u in each incident triangle) strictly
/// acute; margin is the worst normalized inner product.
WcVerdict face_angles_acute_at(const TetMesh& mesh, int u,
                               const Tolerance& tol = {});

}  // namespace wct
