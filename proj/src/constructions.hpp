#pragma once

#include "tet_mesh.hpp"

#include <optional>

namespace wct {

/// Two (or more) out-of-phase regular k-gon rings between the poles of the
/// unit sphere.  The default heights place vertices exactly on the sphere:
/// 0.936^2 + 0.352^2 = 1.
struct KgonSpec {
  int k = 7;
  double ring_height = 0.352;
  double ring_radius = 0.936;
  int rings = 2;
};

struct SurfaceTriangulation {
  std::vector<Vec3> vertices;
  std::vector<std::array<int, 3>> triangles;

  SphereTriangulation abstract() const;
};

/// Acute triangulation of the unit sphere: pole fans plus antiprism bands.
/// Every triangle is verified acute with plane distance > 1/sqrt(2) at
/// construction time.  k >= 4.
SurfaceTriangulation kgon_sphere(const KgonSpec& spec);

/// One tet per surface triangle with apex at the origin.  Surface vertices
/// must be equidistant from the origin.
TetMesh cone_to_origin(const SurfaceTriangulation& surface,
                       const Tolerance& tol = {});

/// Splits the given tet [u v2 v3 v4] into three around a new vertex placed
/// on the line through u and the tet circumcenter, near the antipode of u.
/// Preconditions: the tet is 3-well-centered and the six face angles
/// angle(u, v_i, v_j) are acute.  Epsilon is found by bisection.
TetMesh insert_degree3_3wc(const TetMesh& mesh, int u, int tet_index,
                           const Tolerance& tol = {});

/// Inserts a degree-3 link vertex into link face [a b c] of the star of u,
/// placed along the centroid direction at the local link radius.  All face
/// angles at u must be (and remain) acute.
TetMesh insert_degree3_2wc(const TetMesh& mesh, int u, std::array<int, 3> face,
                           const Tolerance& tol = {});

/// Inserts a degree-4 link vertex on link edge [a b] (midpoint construction,
/// renormalized to the mean link radius).  All face angles at u must be
/// (and remain) acute.
TetMesh insert_degree4_2wc(const TetMesh& mesh, int u, std::array<int, 2> edge,
                           const Tolerance& tol = {});

/// Named coordinate fixtures; single tetrahedra and the star meshes whose
/// link degree lists are checked during reconstruction.
TetMesh load_fixture(const std::string& name);

std::vector<std::string> fixture_names();

/// Brute-force convex hull of a small 3D point set (facets as triangles).
/// Returns nullopt when the hull is ambiguous (coplanar facets) or does not
/// use every point.
std::optional<std::vector<std::array<int, 3>>> convex_hull_triangles(
    const std::vector<Vec3>& points);

}  // namespace wct
