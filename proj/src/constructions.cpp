#include "constructions.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <set>

namespace wct {

SphereTriangulation SurfaceTriangulation::abstract() const {
  SphereTriangulation tri;
  tri.num_vertices = static_cast<int>(vertices.size());
  tri.triangles = triangles;
  return tri;
}

namespace {

Simplex triangle_simplex(const std::vector<Vec3>& pts,
                         const std::array<int, 3>& t) {
  std::vector<Vector> vs;
  for (int i : t) vs.push_back(pts[i]);
  return make_simplex(std::move(vs));
}

bool triangle_acute(const std::vector<Vec3>& pts, const std::array<int, 3>& t,
                    double band) {
  for (int i = 0; i < 3; ++i) {
    const Vec3& a = pts[t[i]];
    const Vec3& b = pts[t[(i + 1) % 3]];
    const Vec3& c = pts[t[(i + 2) % 3]];
    const double dot = (b - a).dot(c - a) / ((b - a).norm() * (c - a).norm());
    if (dot <= band) return false;
  }
  return true;
}

}  // namespace

SurfaceTriangulation kgon_sphere(const KgonSpec& spec) {
  if (spec.k < 4)
    throw Error(ErrorCode::InvalidArgument, "kgon_sphere requires k >= 4");
  if (spec.rings < 2)
    throw Error(ErrorCode::InvalidArgument, "kgon_sphere requires rings >= 2");
  if (std::abs(spec.ring_radius * spec.ring_radius +
               spec.ring_height * spec.ring_height - 1.0) > 1e-12)
    throw Error(ErrorCode::InvalidArgument,
                "ring_radius^2 + ring_height^2 must equal 1");

  const int k = spec.k;
  SurfaceTriangulation out;
  out.vertices.emplace_back(0.0, 0.0, 1.0);
  out.vertices.emplace_back(0.0, 0.0, -1.0);

  std::vector<double> heights;
  if (spec.rings == 2) {
    heights = {spec.ring_height, -spec.ring_height};
  } else {
    // Equal-area latitude bands; phases alternate per band below.
    for (int j = 1; j <= spec.rings; ++j)
      heights.push_back(1.0 - 2.0 * j / (spec.rings + 1));
  }

  const auto ring_vertex = [&](int ring, int i) { return 2 + ring * k + i; };
  for (int ring = 0; ring < spec.rings; ++ring) {
    const double z = heights[ring];
    const double r = std::sqrt(std::max(0.0, 1.0 - z * z));
    for (int i = 0; i < k; ++i) {
      const double phase = (2.0 * i + ring) * M_PI / k;
      out.vertices.emplace_back(r * std::cos(phase), r * std::sin(phase), z);
    }
  }

  for (int i = 0; i < k; ++i) {
    out.triangles.push_back({0, ring_vertex(0, i), ring_vertex(0, (i + 1) % k)});
    out.triangles.push_back(
        {1, ring_vertex(spec.rings - 1, i), ring_vertex(spec.rings - 1, (i + 1) % k)});
  }
  for (int ring = 0; ring + 1 < spec.rings; ++ring) {
    for (int i = 0; i < k; ++i) {
      const int a = ring_vertex(ring, i);
      const int a1 = ring_vertex(ring, (i + 1) % k);
      const int b = ring_vertex(ring + 1, i);
      const int b1 = ring_vertex(ring + 1, (i + 1) % k);
      out.triangles.push_back({a, b, a1});
      out.triangles.push_back({b, a1, b1});
    }
  }

  require_valid(out.abstract());
  const Tolerance tol;
  const double threshold = 1.0 / std::sqrt(2.0);
  for (const auto& t : out.triangles) {
    if (!triangle_acute(out.vertices, t, tol.rel))
      throw Error(ErrorCode::Precondition, "kgon triangle not acute");
    const Simplex s = triangle_simplex(out.vertices, t);
    if (dist_to_aff(Vector::Zero(3), s, tol) <= threshold + tol.rel)
      throw Error(ErrorCode::Precondition, "kgon triangle plane too close to center");
  }
  return out;
}

TetMesh cone_to_origin(const SurfaceTriangulation& surface, const Tolerance& tol) {
  require_valid(surface.abstract());
  double r = 0.0;
  for (const auto& v : surface.vertices) r += v.norm();
  r /= static_cast<double>(surface.vertices.size());
  for (const auto& v : surface.vertices)
    if (std::abs(v.norm() - r) > tol.rel * r)
      throw Error(ErrorCode::Precondition, "non-spherical input");

  std::vector<Vec3> vertices;
  vertices.emplace_back(0.0, 0.0, 0.0);
  vertices.insert(vertices.end(), surface.vertices.begin(), surface.vertices.end());
  std::vector<std::array<int, 4>> tets;
  for (const auto& t : surface.triangles)
    tets.push_back({0, t[0] + 1, t[1] + 1, t[2] + 1});
  return make_tet_mesh(std::move(vertices), std::move(tets), tol);
}

namespace {

// Normalized cosine of angle(u, a, b), the face angle at vertex a.
double face_angle_cos(const Vec3& u, const Vec3& a, const Vec3& b) {
  const Vec3 ua = u - a;
  const Vec3 ba = b - a;
  return ua.dot(ba) / (ua.norm() * ba.norm());
}

int find_tet(const TetMesh& mesh, std::array<int, 4> key) {
  std::sort(key.begin(), key.end());
  for (size_t i = 0; i < mesh.tets.size(); ++i) {
    std::array<int, 4> s = mesh.tets[i];
    std::sort(s.begin(), s.end());
    if (s == key) return static_cast<int>(i);
  }
  return -1;
}

}  // namespace

TetMesh insert_degree3_3wc(const TetMesh& mesh, int u, int tet_index,
                           const Tolerance& tol) {
  if (tet_index < 0 || tet_index >= static_cast<int>(mesh.tets.size()))
    throw Error(ErrorCode::InvalidArgument, "tet index out of range");
  const auto& tet = mesh.tets[tet_index];
  if (!std::count(tet.begin(), tet.end(), u))
    throw Error(ErrorCode::InvalidArgument, "vertex not incident to tet");
  std::array<int, 3> base{};
  int k = 0;
  for (int x : tet)
    if (x != u) base[k++] = x;

  const Simplex sigma = tet_simplex(mesh, tet_index);
  const WcVerdict wc = is_n_well_centered(sigma, tol);
  if (wc.status != WcStatus::Satisfied)
    throw Error(ErrorCode::Precondition,
                "tet " + std::to_string(tet_index) + " is not 3-well-centered");
  const Vec3 pu = mesh.vertices[u];
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) {
      if (i == j) continue;
      if (face_angle_cos(pu, mesh.vertices[base[i]], mesh.vertices[base[j]]) <= tol.rel)
        throw Error(ErrorCode::Precondition,
                    "face angle at vertex " + std::to_string(base[i]) +
                        " towards " + std::to_string(base[j]) + " is not acute");
    }

  const CircumData cd = circumcenter(sigma, tol);
  const Vec3 center(cd.center(0), cd.center(1), cd.center(2));
  const Vec3 antipode = 2.0 * center - pu;  // second sphere intersection of the line

  // Crossing parameter of segment antipode->u with the base plane.
  const Simplex base_simplex = triangle_simplex(mesh.vertices, base);
  const Vec3 b0 = mesh.vertices[base[0]];
  const Vec3 normal = (mesh.vertices[base[1]] - b0).cross(mesh.vertices[base[2]] - b0);
  const double denom = normal.dot(Vec3(pu - antipode));
  if (std::abs(denom) < tol.abs)
    throw Error(ErrorCode::Degenerate, "line through circumcenter parallel to base");
  const double eps0 = normal.dot(b0 - antipode) / denom;
  if (!(eps0 > 0.0 && eps0 < 1.0))
    throw Error(ErrorCode::Internal, "facet crossing outside segment");

  const std::array<std::array<int, 2>, 3> edges{
      std::array{base[0], base[1]}, std::array{base[1], base[2]},
      std::array{base[2], base[0]}};

  double eps = eps0 / 2.0;
  for (int halving = 0; halving < 64; ++halving, eps /= 2.0) {
    const Vec3 v1 = antipode + eps * (pu - antipode);
    bool ok = true;
    for (const auto& e : edges) {
      std::vector<Vector> vs{mesh.vertices[u], mesh.vertices[e[0]],
                             mesh.vertices[e[1]], v1};
      const CircumData sub = circumcenter(make_simplex(vs), tol);
      if (sub.degenerate ||
          classify_margin(*std::min_element(sub.barycentric.begin(),
                                            sub.barycentric.end()),
                          tol) != WcStatus::Satisfied) {
        ok = false;
        break;
      }
    }
    if (ok) {
      for (int i = 0; i < 3 && ok; ++i) {
        const Vec3& vi = mesh.vertices[base[i]];
        if (face_angle_cos(pu, v1, vi) <= tol.rel ||
            face_angle_cos(pu, vi, v1) <= tol.rel)
          ok = false;
      }
    }
    if (!ok) continue;

    TetMesh out = mesh;
    const int v1_id = static_cast<int>(out.vertices.size());
    out.vertices.push_back(v1);
    out.tets[tet_index] = {u, edges[0][0], edges[0][1], v1_id};
    out.tets.push_back({u, edges[1][0], edges[1][1], v1_id});
    out.tets.push_back({u, edges[2][0], edges[2][1], v1_id});
    return make_tet_mesh(std::move(out.vertices), std::move(out.tets), tol);
  }
  throw Error(ErrorCode::Precondition, "no epsilon found");
}

namespace {

TetMesh replace_star_tets(const TetMesh& mesh, int u,
                          const std::vector<int>& remove,
                          const Vec3& new_vertex,
                          const std::vector<std::array<int, 2>>& fan_edges,
                          const Tolerance& tol) {
  TetMesh out = mesh;
  const int v1 = static_cast<int>(out.vertices.size());
  out.vertices.push_back(new_vertex);
  std::vector<std::array<int, 4>> tets;
  std::set<int> removed(remove.begin(), remove.end());
  for (size_t i = 0; i < out.tets.size(); ++i)
    if (!removed.count(static_cast<int>(i))) tets.push_back(out.tets[i]);
  for (const auto& e : fan_edges) tets.push_back({u, e[0], e[1], v1});
  out.tets = std::move(tets);
  return make_tet_mesh(std::move(out.vertices), std::move(out.tets), tol);
}

void require_acute_star(const TetMesh& mesh, int u, const Tolerance& tol,
                        const char* when) {
  if (face_angles_acute_at(mesh, u, tol).status != WcStatus::Satisfied)
    throw Error(ErrorCode::Precondition,
                std::string("face angles at the star vertex are not all acute ") + when);
}

}  // namespace

TetMesh insert_degree3_2wc(const TetMesh& mesh, int u, std::array<int, 3> face,
                           const Tolerance& tol) {
  const int t = find_tet(mesh, {u, face[0], face[1], face[2]});
  if (t < 0)
    throw Error(ErrorCode::InvalidArgument, "face is not a link face of the vertex");
  require_acute_star(mesh, u, tol, "(precondition)");

  const Vec3 pu = mesh.vertices[u];
  Vec3 dir = Vec3::Zero();
  double radius = 0.0;
  for (int x : face) {
    dir += (mesh.vertices[x] - pu) / 3.0;
    radius += (mesh.vertices[x] - pu).norm() / 3.0;
  }
  const Vec3 v1 = pu + radius * dir.normalized();

  const TetMesh out = replace_star_tets(
      mesh, u, {t}, v1,
      {{face[0], face[1]}, {face[1], face[2]}, {face[2], face[0]}}, tol);
  require_acute_star(out, u, tol, "(postcondition)");
  return out;
}

TetMesh insert_degree4_2wc(const TetMesh& mesh, int u, std::array<int, 2> edge,
                           const Tolerance& tol) {
  // The link edge [a b] is shared by exactly two link triangles, i.e. the
  // triangle (u,a,b) by exactly two tets of the star.
  std::vector<int> incident;
  std::vector<int> opposite;
  for (size_t i = 0; i < mesh.tets.size(); ++i) {
    const auto& t = mesh.tets[i];
    if (std::count(t.begin(), t.end(), u) &&
        std::count(t.begin(), t.end(), edge[0]) &&
        std::count(t.begin(), t.end(), edge[1])) {
      incident.push_back(static_cast<int>(i));
      for (int x : t)
        if (x != u && x != edge[0] && x != edge[1]) opposite.push_back(x);
    }
  }
  if (incident.size() != 2)
    throw Error(ErrorCode::InvalidArgument,
                "edge is not an interior link edge of the vertex");
  require_acute_star(mesh, u, tol, "(precondition)");

  const Vec3 pu = mesh.vertices[u];
  const Vec3 wa = mesh.vertices[edge[0]] - pu;
  const Vec3 wb = mesh.vertices[edge[1]] - pu;
  double mean_radius = 0.0;
  int count = 0;
  for (const auto& t : mesh.tets) {
    if (!std::count(t.begin(), t.end(), u)) continue;
    for (int x : t)
      if (x != u) {
        mean_radius += (mesh.vertices[x] - pu).norm();
        ++count;
      }
  }
  mean_radius /= std::max(count, 1);
  // Midpoint construction; renormalization preserves every inner-product sign.
  const Vec3 v1 = pu + mean_radius * (0.5 * (wa + wb)).normalized();

  const int c = opposite[0], d = opposite[1];
  const TetMesh out = replace_star_tets(
      mesh, u, incident, v1,
      {{edge[0], c}, {c, edge[1]}, {edge[1], d}, {d, edge[0]}}, tol);
  require_acute_star(out, u, tol, "(postcondition)");
  return out;
}

std::optional<std::vector<std::array<int, 3>>> convex_hull_triangles(
    const std::vector<Vec3>& points) {
  const int n = static_cast<int>(points.size());
  if (n < 4) return std::nullopt;
  double scale = 0.0;
  for (const auto& p : points) scale = std::max(scale, p.norm());
  const double eps = 1e-9 * std::max(scale, 1.0);

  std::set<std::array<int, 3>> facets;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j)
      for (int k = j + 1; k < n; ++k) {
        const Vec3 normal =
            (points[j] - points[i]).cross(points[k] - points[i]);
        if (normal.norm() < eps * eps) continue;
        int pos = 0, neg = 0, on = 0;
        for (int l = 0; l < n; ++l) {
          if (l == i || l == j || l == k) continue;
          const double side = normal.dot(points[l] - points[i]);
          if (side > eps)
            ++pos;
          else if (side < -eps)
            ++neg;
          else
            ++on;
        }
        if (on > 0 && (pos == 0 || neg == 0)) return std::nullopt;  // ambiguous
        if (pos == 0 || neg == 0) facets.insert({i, j, k});
      }
  std::set<int> used;
  for (const auto& f : facets) used.insert(f.begin(), f.end());
  if (static_cast<int>(used.size()) != n) return std::nullopt;
  return std::vector<std::array<int, 3>>(facets.begin(), facets.end());
}

namespace {

struct StarFixture {
  const char* name;
  std::vector<Vec3> coordinates;  // u first
  std::vector<int> expected_degrees;
  // Connectivity used when neither hull reconstruction matches the expected
  // degree list (link vertex ids are 0-based rows after u).
  std::vector<std::array<int, 3>> explicit_link;
};

const std::vector<StarFixture>& star_fixtures() {
  static const std::vector<StarFixture> fixtures = {
      {"wc3-deg5554443",
       {{0, 0, 0},
        {0, 0, 1},
        {-0.1041, -0.0601, 0.0117},
        {0.1041, -0.0601, 0.0117},
        {0, 0.1202, 0.0117},
        {0, -0.3622, -0.8656},
        {0.3137, 0.1811, -0.8656},
        {-0.3137, 0.1811, -0.8656}},
       {5, 5, 5, 4, 4, 4, 3},
       {}},
      {"wc3-deg6555333",
       {{0, 0, 0},
        {0, 0, 1},
        {0, 0.8334, -0.8588},
        {-0.7217, -0.4167, -0.8588},
        {0.7217, -0.4167, -0.8588},
        {0, -5.0494, 1.0696},
        {4.3729, 2.5247, 1.0696},
        {-4.3729, 2.5247, 1.0696}},
       {6, 5, 5, 5, 3, 3, 3},
       // The far ring makes this star non-convex and non-Delaunay radially;
       // connectivity transcribed from the figure.
       {{0, 1, 6},
        {0, 6, 2},
        {0, 2, 4},
        {0, 4, 3},
        {0, 3, 5},
        {0, 5, 1},
        {2, 3, 4},
        {3, 1, 5},
        {1, 2, 6},
        {1, 2, 3}}},
      {"cwc-deg555555444",
       {{0, 0, 0},
        {0, 0, 1},
        {0, 0.533, 0.164},
        {0.533, 0, 0.164},
        {0, -0.533, 0.164},
        {-0.533, 0, 0.164},
        {0.63, 0.63, -0.7},
        {-0.63, -0.63, -0.7},
        {0.594, -0.594, -0.9},
        {-0.594, 0.594, -0.9}},
       {5, 5, 5, 5, 5, 5, 4, 4, 4},
       {}},
  };
  return fixtures;
}

std::optional<TetMesh> try_link_triangulation(
    const std::vector<Vec3>& coords,
    const std::vector<std::array<int, 3>>& link_tris,
    const std::vector<int>& expected_degrees) {
  SphereTriangulation tri;
  tri.num_vertices = static_cast<int>(coords.size()) - 1;
  tri.triangles = link_tris;
  if (!validate_sphere(tri).valid) return std::nullopt;
  if (degree_list(tri) != expected_degrees) return std::nullopt;
  std::vector<std::array<int, 4>> tets;
  for (const auto& t : link_tris)
    tets.push_back({0, t[0] + 1, t[1] + 1, t[2] + 1});
  return make_tet_mesh(std::vector<Vec3>(coords), std::move(tets));
}

TetMesh load_star_fixture(const StarFixture& fx) {
  std::vector<Vec3> link(fx.coordinates.begin() + 1, fx.coordinates.end());

  if (auto hull = convex_hull_triangles(link)) {
    if (auto mesh = try_link_triangulation(fx.coordinates, *hull, fx.expected_degrees))
      return *mesh;
  }
  // Star-shaped visibility reconstruction: hull of the radial directions.
  std::vector<Vec3> dirs;
  for (const auto& p : link) dirs.push_back(p.normalized());
  if (auto hull = convex_hull_triangles(dirs)) {
    if (auto mesh = try_link_triangulation(fx.coordinates, *hull, fx.expected_degrees))
      return *mesh;
  }
  if (!fx.explicit_link.empty()) {
    if (auto mesh = try_link_triangulation(fx.coordinates, fx.explicit_link,
                                           fx.expected_degrees))
      return *mesh;
  }
  throw Error(ErrorCode::Internal,
              std::string("fixture reconstruction failed: ") + fx.name);
}

TetMesh single_tet(const std::vector<Vec3>& coords) {
  return make_tet_mesh(std::vector<Vec3>(coords), {{0, 1, 2, 3}});
}

}  // namespace

std::vector<std::string> fixture_names() {
  return {"tet-A",          "tet-B",          "tet-C",         "cube-corner",
          "wc3-deg5554443", "wc3-deg6555333", "cwc-deg555555444"};
}

TetMesh load_fixture(const std::string& name) {
  if (name == "tet-A")
    return single_tet({{-0.152, 0.864, -0.48},
                       {-0.64, -0.6, -0.48},
                       {0.6, -0.64, -0.48},
                       {-0.192, -0.64, 0.744}});
  if (name == "tet-B")
    return single_tet({{-0.01, -0.01, -0.01}, {1, 0, 0}, {0, 1, 0}, {0, 0, 1}});
  if (name == "tet-C")
    return single_tet({{0.224, -0.768, -0.6},
                       {0.8, 0, -0.6},
                       {0.224, 0.768, -0.6},
                       {-0.28, 0, 0.96}});
  if (name == "cube-corner")
    return single_tet({{0, 0, 0}, {1, 0, 0}, {0, 1, 0}, {0, 0, 1}});
  for (const auto& fx : star_fixtures())
    if (name == fx.name) return load_star_fixture(fx);
  throw Error(ErrorCode::InvalidArgument, "unknown fixture: " + name);
}

}  // namespace wct
