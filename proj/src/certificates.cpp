#include "certificates.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <set>

namespace wct {

namespace {

using Tri = std::array<int, 3>;
using Tet = std::array<int, 4>;

std::vector<Tri> tet_faces(const Tet& t) {
  return {{t[1], t[2], t[3]}, {t[0], t[2], t[3]}, {t[0], t[1], t[3]}, {t[0], t[1], t[2]}};
}

std::string tri_name(const Tri& t) {
  return "(" + std::to_string(t[0]) + "," + std::to_string(t[1]) + "," +
         std::to_string(t[2]) + ")";
}

// Link of an edge inside K: one edge {c,d} per tet containing {a,b}; must be
// a simple path or a simple cycle.
bool edge_link_ok(const std::vector<Tet>& tets, int a, int b) {
  std::set<std::pair<int, int>> segs;
  std::map<int, int> deg;
  for (const auto& t : tets) {
    if (!std::count(t.begin(), t.end(), a) || !std::count(t.begin(), t.end(), b))
      continue;
    std::vector<int> rest;
    for (int x : t)
      if (x != a && x != b) rest.push_back(x);
    const auto seg = std::minmax(rest[0], rest[1]);
    if (!segs.insert({seg.first, seg.second}).second) return false;
    ++deg[rest[0]];
    ++deg[rest[1]];
  }
  if (segs.empty()) return true;
  for (const auto& [v, d] : deg)
    if (d > 2) return false;
  // connectivity
  std::map<int, std::vector<int>> adj;
  for (const auto& [c, d] : segs) {
    adj[c].push_back(d);
    adj[d].push_back(c);
  }
  std::set<int> seen{adj.begin()->first};
  std::vector<int> stack{adj.begin()->first};
  while (!stack.empty()) {
    const int x = stack.back();
    stack.pop_back();
    for (int y : adj[x])
      if (seen.insert(y).second) stack.push_back(y);
  }
  return seen.size() == adj.size();
}

// Link of a vertex inside K: the triangles opposite v must form a single
// disk (chi = 1, with boundary) or sphere (chi = 2, closed).
bool vertex_link_ok(const std::vector<Tet>& tets, int v) {
  std::vector<Tri> faces;
  for (const auto& t : tets) {
    if (!std::count(t.begin(), t.end(), v)) continue;
    Tri f{};
    int k = 0;
    for (int x : t)
      if (x != v) f[k++] = x;
    std::sort(f.begin(), f.end());
    faces.push_back(f);
  }
  if (faces.empty()) return true;
  std::map<std::pair<int, int>, std::vector<int>> by_edge;
  std::set<int> verts;
  for (size_t i = 0; i < faces.size(); ++i) {
    const auto& f = faces[i];
    by_edge[{f[0], f[1]}].push_back(static_cast<int>(i));
    by_edge[{f[0], f[2]}].push_back(static_cast<int>(i));
    by_edge[{f[1], f[2]}].push_back(static_cast<int>(i));
    verts.insert(f.begin(), f.end());
  }
  int boundary_edges = 0;
  for (const auto& [e, fs] : by_edge) {
    (void)e;
    if (fs.size() > 2) return false;
    if (fs.size() == 1) ++boundary_edges;
  }
  // connectivity over shared edges
  std::vector<int> comp(faces.size(), -1);
  std::vector<int> stack{0};
  comp[0] = 0;
  while (!stack.empty()) {
    const int i = stack.back();
    stack.pop_back();
    const auto& f = faces[i];
    for (const auto& e : {std::pair{f[0], f[1]}, std::pair{f[0], f[2]},
                          std::pair{f[1], f[2]}}) {
      for (int j : by_edge[e])
        if (comp[j] < 0) {
          comp[j] = 0;
          stack.push_back(j);
        }
    }
  }
  if (std::count(comp.begin(), comp.end(), -1)) return false;
  const int chi = static_cast<int>(verts.size()) -
                  static_cast<int>(by_edge.size()) +
                  static_cast<int>(faces.size());
  return boundary_edges == 0 ? chi == 2 : chi == 1;
}

}  // namespace

CertificateCheck verify_certificate(const CertificateComplex& k,
                                    const SphereTriangulation& link) {
  if (k.tets.empty()) return {false, "empty complex"};
  std::set<Tri> link_tris;
  for (const auto& t : link.triangles) {
    Tri s = t;
    std::sort(s.begin(), s.end());
    link_tris.insert(s);
  }

  std::vector<Tet> tets;
  std::set<Tet> seen;
  for (const auto& raw : k.tets) {
    Tet t = raw;
    std::sort(t.begin(), t.end());
    if (t[0] == t[1] || t[1] == t[2] || t[2] == t[3])
      return {false, "tet with repeated vertex"};
    // Every vertex of K must be a vertex of L.
    if (t[0] < 0 || t[3] >= link.num_vertices)
      return {false, "tet vertex not a vertex of the link"};
    if (!seen.insert(t).second) return {false, "duplicate tet"};
    tets.push_back(t);
  }

  // (iii) every tet has at least two facets in L
  std::map<Tri, int> face_count;
  for (const auto& t : tets) {
    int in_link = 0;
    for (auto f : tet_faces(t)) {
      std::sort(f.begin(), f.end());
      ++face_count[f];
      if (link_tris.count(f)) ++in_link;
    }
    if (in_link < 2)
      return {false, "tet (" + std::to_string(t[0]) + "," + std::to_string(t[1]) +
                         "," + std::to_string(t[2]) + "," + std::to_string(t[3]) +
                         ") has fewer than 2 facets in the link"};
  }

  // (i) manifold-with-boundary
  for (const auto& [f, c] : face_count)
    if (c > 2) return {false, "triangle " + tri_name(f) + " in more than 2 tets"};
  std::set<std::pair<int, int>> edges;
  for (const auto& t : tets)
    for (int i = 0; i < 4; ++i)
      for (int j = i + 1; j < 4; ++j) edges.insert({t[i], t[j]});
  for (const auto& [a, b] : edges)
    if (!edge_link_ok(tets, a, b))
      return {false, "edge (" + std::to_string(a) + "," + std::to_string(b) +
                         ") link is not a path or cycle"};
  std::set<int> verts;
  for (const auto& t : tets) verts.insert(t.begin(), t.end());
  for (int v : verts)
    if (!vertex_link_ok(tets, v))
      return {false, "vertex " + std::to_string(v) + " link is not a disk or sphere"};

  // (ii) boundary equals L
  std::set<Tri> boundary;
  for (const auto& [f, c] : face_count)
    if (c == 1) boundary.insert(f);
  if (boundary != link_tris)
    return {false, "boundary does not equal the link triangulation"};

  return {true, ""};
}

std::optional<CertificateComplex> search_certificate(
    const SphereTriangulation& link, const SearchLimits& limits) {
  require_valid(link);
  const int m = link.num_vertices;
  std::set<Tri> link_tris;
  for (const auto& t : link.triangles) {
    Tri s = t;
    std::sort(s.begin(), s.end());
    link_tris.insert(s);
  }
  const std::vector<Tri> targets(link_tris.begin(), link_tris.end());
  std::map<Tri, int> target_index;
  for (size_t i = 0; i < targets.size(); ++i)
    target_index[targets[i]] = static_cast<int>(i);

  // Candidate pool: 4-subsets with >= 2 facets among the link triangles.
  std::vector<Tet> pool;
  for (int a = 0; a < m; ++a)
    for (int b = a + 1; b < m; ++b)
      for (int c = b + 1; c < m; ++c)
        for (int d = c + 1; d < m; ++d) {
          const Tet t{a, b, c, d};
          int in_link = 0;
          for (auto f : tet_faces(t)) {
            std::sort(f.begin(), f.end());
            if (link_tris.count(f)) ++in_link;
          }
          if (in_link >= 2) pool.push_back(t);
        }
  if (static_cast<int>(pool.size()) > limits.max_pool)
    throw Error(ErrorCode::SearchCap, "search cap exceeded: candidate pool too large");

  std::vector<std::vector<int>> covering(targets.size());
  for (size_t pi = 0; pi < pool.size(); ++pi)
    for (auto f : tet_faces(pool[pi])) {
      std::sort(f.begin(), f.end());
      const auto it = target_index.find(f);
      if (it != target_index.end())
        covering[it->second].push_back(static_cast<int>(pi));
    }

  // Exact-cover DFS: link triangles must end in exactly one tet, interior
  // triangles in zero or two.  Branching on the first uncovered link
  // triangle makes the traversal visit each candidate complex once.
  std::map<Tri, int> count;
  std::vector<int> chosen;
  long long nodes = 0;
  std::optional<CertificateComplex> result;

  std::function<void()> dfs = [&]() {
    if (result) return;
    if (++nodes > limits.max_nodes)
      throw Error(ErrorCode::SearchCap, "search cap exceeded: node limit");
    int target = -1;
    for (size_t i = 0; i < targets.size(); ++i)
      if (count[targets[i]] == 0) {
        target = static_cast<int>(i);
        break;
      }
    if (target < 0) {
      for (const auto& [f, c] : count)
        if (c == 1 && !link_tris.count(f)) return;
      CertificateComplex k;
      for (int pi : chosen) k.tets.push_back(pool[pi]);
      std::sort(k.tets.begin(), k.tets.end());
      if (verify_certificate(k, link).valid) result = std::move(k);
      return;
    }
    for (int pi : covering[target]) {
      std::array<Tri, 4> faces{};
      int fi = 0;
      for (auto f : tet_faces(pool[pi])) {
        std::sort(f.begin(), f.end());
        faces[fi++] = f;
      }
      bool ok = true;
      for (const auto& f : faces) {
        const int limit = link_tris.count(f) ? 1 : 2;
        if (count[f] + 1 > limit) {
          ok = false;
          break;
        }
      }
      if (!ok) continue;
      for (const auto& f : faces) ++count[f];
      chosen.push_back(pi);
      dfs();
      chosen.pop_back();
      for (const auto& f : faces) --count[f];
      if (result) return;
    }
  };
  dfs();
  return result;
}

bool nminus3_blocked(const SphereTriangulation& link) {
  const std::vector<int> deg = degree_list(link);
  return deg.front() >= link.num_vertices - 3;
}

BandFamily generate_band_family(int m, bool open) {
  if (m < 6)
    throw Error(ErrorCode::InvalidArgument, "band family requires m >= 6");
  const int ring = m - 2;
  BandFamily out;
  const int a = 0, b = 1;
  const auto r = [&](int i) { return 2 + ((i % ring) + ring) % ring; };
  const int tet_count = open ? ring - 1 : ring;
  for (int i = 0; i < tet_count; ++i)
    out.certificate.tets.push_back({a, b, r(i), r(i + 1)});

  out.boundary.num_vertices = m;
  for (int i = 0; i < tet_count; ++i) {
    out.boundary.triangles.push_back({a, r(i), r(i + 1)});
    out.boundary.triangles.push_back({b, r(i), r(i + 1)});
  }
  if (open) {
    out.boundary.triangles.push_back({a, b, r(0)});
    out.boundary.triangles.push_back({a, b, r(tet_count)});
  }
  require_valid(out.boundary);
  const auto check = verify_certificate(out.certificate, out.boundary);
  if (!check.valid)
    throw Error(ErrorCode::Internal, "band family certificate failed: " + check.first_failure);
  return out;
}

std::vector<EdgeAuditEntry> min_edge_audit(const TetMesh& mesh) {
  std::vector<EdgeAuditEntry> out;
  for (int v : interior_vertices(mesh)) {
    EdgeAuditEntry e;
    e.vertex = v;
    e.incident_edges = incident_edge_count(mesh, v);
    e.below_wc3_bound = e.incident_edges < 7;
    e.below_wc2_bound = e.incident_edges < 9;
    out.push_back(e);
  }
  return out;
}

}  // namespace wct
