#include "tet_mesh.hpp"

#include <algorithm>
#include <limits>
#include <map>
#include <set>

namespace wct {

namespace {

double tet_signed_volume(const TetMesh& mesh, const std::array<int, 4>& t) {
  const Vec3& a = mesh.vertices[t[0]];
  Eigen::Matrix3d m;
  for (int i = 0; i < 3; ++i) m.col(i) = mesh.vertices[t[i + 1]] - a;
  return m.determinant() / 6.0;
}

double mesh_scale(const TetMesh& mesh, const std::array<int, 4>& t) {
  double d = 0.0;
  for (int i = 0; i < 4; ++i)
    for (int j = i + 1; j < 4; ++j)
      d = std::max(d, (mesh.vertices[t[i]] - mesh.vertices[t[j]]).norm());
  return d;
}

}  // namespace

MeshDiagnostics validate_mesh(const TetMesh& mesh, const Tolerance& tol) {
  const int nv = static_cast<int>(mesh.vertices.size());
  std::set<std::array<int, 4>> seen;
  std::map<std::array<int, 3>, int> face_count;
  for (size_t ti = 0; ti < mesh.tets.size(); ++ti) {
    const auto& t = mesh.tets[ti];
    for (int v : t)
      if (v < 0 || v >= nv)
        return {false, "tet " + std::to_string(ti) + ": vertex index out of range"};
    std::array<int, 4> s = t;
    std::sort(s.begin(), s.end());
    if (s[0] == s[1] || s[1] == s[2] || s[2] == s[3])
      return {false, "tet " + std::to_string(ti) + ": repeated vertex"};
    if (!seen.insert(s).second)
      return {false, "tet " + std::to_string(ti) + ": duplicate tet"};
    const double vol = tet_signed_volume(mesh, t);
    const double scale = mesh_scale(mesh, t);
    if (std::abs(vol) * 6.0 < tol.rel * scale * scale * scale)
      return {false, "tet " + std::to_string(ti) + ": degenerate"};
    for (int skip = 0; skip < 4; ++skip) {
      std::array<int, 3> f{};
      int k = 0;
      for (int i = 0; i < 4; ++i)
        if (i != skip) f[k++] = s[i];
      if (++face_count[f] > 2)
        return {false, "triangle shared by more than 2 tets"};
    }
  }
  return {true, ""};
}

TetMesh make_tet_mesh(std::vector<Vec3> vertices,
                      std::vector<std::array<int, 4>> tets,
                      const Tolerance& tol) {
  TetMesh mesh{std::move(vertices), std::move(tets)};
  for (auto& t : mesh.tets) {
    bool in_range = true;
    for (int v : t)
      if (v < 0 || v >= static_cast<int>(mesh.vertices.size())) in_range = false;
    if (in_range && tet_signed_volume(mesh, t) < 0.0) std::swap(t[2], t[3]);
  }
  const MeshDiagnostics d = validate_mesh(mesh, tol);
  if (!d.valid)
    throw Error(ErrorCode::InvalidArgument, "invalid mesh: " + d.first_failure);
  return mesh;
}

Simplex tet_simplex(const TetMesh& mesh, int t) {
  if (t < 0 || t >= static_cast<int>(mesh.tets.size()))
    throw Error(ErrorCode::InvalidArgument, "tet index out of range");
  std::vector<Vector> vs;
  for (int v : mesh.tets[t]) vs.push_back(mesh.vertices[v]);
  return make_simplex(std::move(vs));
}

VertexLink link_of(const TetMesh& mesh, int v) {
  if (v < 0 || v >= static_cast<int>(mesh.vertices.size()))
    throw Error(ErrorCode::InvalidArgument, "vertex index out of range");
  VertexLink link;
  std::set<int> ids;
  std::vector<std::array<int, 3>> global_tris;
  for (const auto& t : mesh.tets) {
    if (t[0] != v && t[1] != v && t[2] != v && t[3] != v) continue;
    std::array<int, 3> rest{};
    int k = 0;
    for (int x : t)
      if (x != v) rest[k++] = x;
    // Orient so that (v, x, y, z) is positive: the link then inherits the
    // boundary orientation of the star.
    Eigen::Matrix3d m;
    for (int i = 0; i < 3; ++i) m.col(i) = mesh.vertices[rest[i]] - mesh.vertices[v];
    if (m.determinant() < 0.0) std::swap(rest[1], rest[2]);
    global_tris.push_back(rest);
    ids.insert(rest.begin(), rest.end());
  }
  link.vertex_ids.assign(ids.begin(), ids.end());
  std::map<int, int> local;
  for (size_t i = 0; i < link.vertex_ids.size(); ++i)
    local[link.vertex_ids[i]] = static_cast<int>(i);
  link.tri.num_vertices = static_cast<int>(link.vertex_ids.size());
  for (const auto& t : global_tris)
    link.tri.triangles.push_back({local[t[0]], local[t[1]], local[t[2]]});
  link.is_interior =
      !link.tri.triangles.empty() && validate_sphere(link.tri).valid;
  return link;
}

std::vector<int> interior_vertices(const TetMesh& mesh) {
  std::vector<int> out;
  for (int v = 0; v < static_cast<int>(mesh.vertices.size()); ++v)
    if (link_of(mesh, v).is_interior) out.push_back(v);
  return out;
}

int incident_edge_count(const TetMesh& mesh, int v) {
  std::set<int> nb;
  for (const auto& t : mesh.tets) {
    if (t[0] != v && t[1] != v && t[2] != v && t[3] != v) continue;
    for (int x : t)
      if (x != v) nb.insert(x);
  }
  return static_cast<int>(nb.size());
}

WcVerdict face_angles_acute_at(const TetMesh& mesh, int u,
                               const Tolerance& tol) {
  std::set<std::pair<int, int>> pairs;
  for (const auto& t : mesh.tets) {
    if (t[0] != u && t[1] != u && t[2] != u && t[3] != u) continue;
    std::array<int, 3> rest{};
    int k = 0;
    for (int x : t)
      if (x != u) rest[k++] = x;
    for (int i = 0; i < 3; ++i)
      for (int j = i + 1; j < 3; ++j)
        pairs.insert({std::min(rest[i], rest[j]), std::max(rest[i], rest[j])});
  }
  WcVerdict v;
  v.margin = std::numeric_limits<double>::infinity();
  for (const auto& [a, b] : pairs) {
    const Vec3 da = mesh.vertices[a] - mesh.vertices[u];
    const Vec3 db = mesh.vertices[b] - mesh.vertices[u];
    const double denom = std::max(da.norm() * db.norm(), tol.abs);
    const double margin = da.dot(db) / denom;
    v.detail.push_back({"angle(" + std::to_string(a) + "," + std::to_string(b) + ")",
                        classify_margin(margin, tol), margin});
    v.margin = std::min(v.margin, margin);
  }
  if (pairs.empty()) {
    v.margin = 1.0;
  }
  v.status = classify_margin(v.margin, tol);
  return v;
}

}  // namespace wct
