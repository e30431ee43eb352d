#include "sphere_triangulation.hpp"

#include <algorithm>
#include <set>

namespace wct {

namespace {

std::array<int, 3> sorted_tri(const std::array<int, 3>& t) {
  std::array<int, 3> s = t;
  std::sort(s.begin(), s.end());
  return s;
}

std::map<std::pair<int, int>, int> edge_counts(const SphereTriangulation& tri) {
  std::map<std::pair<int, int>, int> ec;
  for (const auto& t : tri.triangles) {
    const auto s = sorted_tri(t);
    ++ec[{s[0], s[1]}];
    ++ec[{s[0], s[2]}];
    ++ec[{s[1], s[2]}];
  }
  return ec;
}

}  // namespace

SphereDiagnostics validate_sphere(const SphereTriangulation& tri) {
  const int m = tri.num_vertices;
  if (m < 4) return {false, "fewer than 4 vertices"};
  std::set<std::array<int, 3>> seen;
  for (const auto& t : tri.triangles) {
    for (int v : t)
      if (v < 0 || v >= m) return {false, "vertex index out of range"};
    if (t[0] == t[1] || t[0] == t[2] || t[1] == t[2])
      return {false, "degenerate triangle"};
    if (!seen.insert(sorted_tri(t)).second)
      return {false, "duplicate triangle"};
  }

  const auto ec = edge_counts(tri);
  for (const auto& [e, c] : ec)
    if (c != 2)
      return {false, "edge (" + std::to_string(e.first) + "," +
                         std::to_string(e.second) + ") in " +
                         std::to_string(c) + " triangles"};

  const int e = static_cast<int>(ec.size());
  const int f = static_cast<int>(tri.triangles.size());
  if (m - e + f != 2) return {false, "Euler formula m - e + f != 2"};

  // Vertex link must be one simple cycle through all neighbors.
  for (int v = 0; v < m; ++v) {
    std::map<int, std::vector<int>> adj;
    for (const auto& t : tri.triangles) {
      if (t[0] != v && t[1] != v && t[2] != v) continue;
      std::vector<int> rest;
      for (int x : t)
        if (x != v) rest.push_back(x);
      adj[rest[0]].push_back(rest[1]);
      adj[rest[1]].push_back(rest[0]);
    }
    if (adj.empty()) return {false, "vertex " + std::to_string(v) + " unused"};
    for (const auto& [u, ns] : adj)
      if (ns.size() != 2)
        return {false, "link of vertex " + std::to_string(v) + " not a cycle"};
    const int start = adj.begin()->first;
    int prev = -1, cur = start;
    size_t steps = 0;
    do {
      const auto& ns = adj[cur];
      const int nxt = (ns[0] != prev) ? ns[0] : ns[1];
      prev = cur;
      cur = nxt;
      if (++steps > adj.size()) break;
    } while (cur != start);
    if (steps != adj.size())
      return {false, "link of vertex " + std::to_string(v) + " disconnected"};
  }
  return {true, ""};
}

void require_valid(const SphereTriangulation& tri) {
  const auto d = validate_sphere(tri);
  if (!d.valid)
    throw Error(ErrorCode::InvalidArgument,
                "invalid sphere triangulation: " + d.first_failure);
}

std::vector<int> degree_list(const SphereTriangulation& tri) {
  require_valid(tri);
  std::vector<int> deg(tri.num_vertices, 0);
  for (const auto& [e, c] : edge_counts(tri)) {
    (void)c;
    ++deg[e.first];
    ++deg[e.second];
  }
  std::sort(deg.rbegin(), deg.rend());
  return deg;
}

std::vector<std::pair<int, int>> edges_of(const SphereTriangulation& tri) {
  std::vector<std::pair<int, int>> out;
  for (const auto& [e, c] : edge_counts(tri)) {
    (void)c;
    out.push_back(e);
  }
  return out;
}

RotationSystem::RotationSystem(const SphereTriangulation& tri) {
  // Orient triangles consistently by breadth-first propagation over shared
  // edges (S^2 is orientable, so this always succeeds on valid input).
  std::map<std::pair<int, int>, std::vector<int>> by_edge;
  for (size_t i = 0; i < tri.triangles.size(); ++i) {
    const auto s = sorted_tri(tri.triangles[i]);
    by_edge[{s[0], s[1]}].push_back(static_cast<int>(i));
    by_edge[{s[0], s[2]}].push_back(static_cast<int>(i));
    by_edge[{s[1], s[2]}].push_back(static_cast<int>(i));
  }
  std::vector<std::array<int, 3>> oriented(tri.triangles.size(), {-1, -1, -1});
  oriented[0] = tri.triangles[0];
  std::vector<int> stack{0};
  while (!stack.empty()) {
    const int i = stack.back();
    stack.pop_back();
    const auto& t = oriented[i];
    const std::array<std::pair<int, int>, 3> des{
        std::pair{t[0], t[1]}, std::pair{t[1], t[2]}, std::pair{t[2], t[0]}};
    for (const auto& de : des) {
      const auto key = de.first < de.second ? de : std::pair{de.second, de.first};
      for (int j : by_edge.at(key)) {
        if (j == i || oriented[j][0] >= 0) continue;
        // Neighbor traverses the shared edge in the opposite direction.
        int third = -1;
        for (int x : tri.triangles[j])
          if (x != de.first && x != de.second) third = x;
        oriented[j] = {de.second, de.first, third};
        stack.push_back(j);
      }
    }
  }
  for (const auto& t : oriented) {
    for (int k = 0; k < 3; ++k) {
      const int a = t[k], b = t[(k + 1) % 3], c = t[(k + 2) % 3];
      succ_[{a, b}] = c;
      pred_[{a, c}] = b;
    }
  }
}

int RotationSystem::next(int v, int u) const { return succ_.at({v, u}); }
int RotationSystem::prev(int v, int u) const { return pred_.at({v, u}); }

std::vector<int> RotationSystem::ring(int v) const {
  const auto it = succ_.lower_bound({v, -1});
  if (it == succ_.end() || it->first.first != v)
    throw Error(ErrorCode::InvalidArgument, "vertex not in triangulation");
  std::vector<int> out{it->first.second};
  int w = next(v, out[0]);
  while (w != out[0]) {
    out.push_back(w);
    w = next(v, w);
  }
  return out;
}

namespace {

// Rooted BFS code of the combinatorial map: process vertices in discovery
// order; for each one, walk its rotation starting at the discovery neighbor
// and emit the walked labels.  The code determines the map up to relabeling.
std::vector<int> bfs_code(const RotationSystem& rot, int r0, int r1, bool mirror,
                          int m) {
  std::vector<int> label(m, -1);
  std::vector<int> order{r0};
  std::vector<int> ref{r1};
  label[r0] = 0;
  label[r1] = 1;
  int next_label = 2;
  std::vector<int> code;
  for (size_t qi = 0; qi < order.size(); ++qi) {
    const int v = order[qi];
    const int u = qi < ref.size() ? ref[qi] : -1;
    int w = u;
    do {
      if (label[w] < 0) {
        label[w] = next_label++;
        order.push_back(w);
        ref.push_back(v);
      }
      code.push_back(label[w]);
      w = mirror ? rot.prev(v, w) : rot.next(v, w);
    } while (w != u);
    code.push_back(-1);
  }
  return code;
}

}  // namespace

std::string canonical_form(const SphereTriangulation& tri) {
  require_valid(tri);
  const RotationSystem rot(tri);
  std::vector<int> best;
  for (const auto& t : tri.triangles) {
    for (int k = 0; k < 3; ++k) {
      for (int dir = 0; dir < 2; ++dir) {
        // All darts appear among oriented triangle edges in both directions.
        const int a = t[k], b = t[(k + 1) % 3];
        for (bool mirror : {false, true}) {
          const auto code = bfs_code(rot, dir ? b : a, dir ? a : b, mirror,
                                     tri.num_vertices);
          if (best.empty() || code < best) best = code;
        }
      }
    }
  }
  std::string out;
  for (size_t i = 0; i < best.size(); ++i) {
    if (best[i] < 0) {
      out += ';';
    } else {
      if (!out.empty() && out.back() != ';') out += ',';
      out += std::to_string(best[i]);
    }
  }
  return out;
}

namespace {

// Splits vertex v along ring positions i < j: v keeps the ring arc
// ring[i..j], the new vertex m takes the complementary arc, and the two
// hinge triangles close the seam.
SphereTriangulation split_vertex(const SphereTriangulation& tri,
                                 const std::vector<int>& ring, int v, int i,
                                 int j) {
  SphereTriangulation out;
  out.num_vertices = tri.num_vertices + 1;
  const int v2 = tri.num_vertices;
  for (const auto& t : tri.triangles)
    if (t[0] != v && t[1] != v && t[2] != v) out.triangles.push_back(t);
  const int d = static_cast<int>(ring.size());
  for (int k = i; k < j; ++k)
    out.triangles.push_back({v, ring[k], ring[k + 1]});
  for (int k = j; k != i; k = (k + 1) % d)
    out.triangles.push_back({v2, ring[k], ring[(k + 1) % d]});
  out.triangles.push_back({v, v2, ring[i]});
  out.triangles.push_back({v, v2, ring[j]});
  return out;
}

}  // namespace

std::vector<SphereTriangulation> enumerate_sphere_triangulations(int m) {
  if (m < 4 || m > 10)
    throw Error(ErrorCode::InvalidArgument, "enumeration supports 4 <= m <= 10");
  std::map<std::string, SphereTriangulation> level;
  SphereTriangulation tet;
  tet.num_vertices = 4;
  tet.triangles = {{0, 1, 2}, {0, 1, 3}, {0, 2, 3}, {1, 2, 3}};
  level[canonical_form(tet)] = tet;

  for (int size = 5; size <= m; ++size) {
    std::map<std::string, SphereTriangulation> next;
    for (const auto& [key, tri] : level) {
      (void)key;
      const RotationSystem rot(tri);
      for (int v = 0; v < tri.num_vertices; ++v) {
        const std::vector<int> ring = rot.ring(v);
        const int d = static_cast<int>(ring.size());
        for (int i = 0; i < d; ++i) {
          for (int j = i + 1; j < d; ++j) {
            const SphereTriangulation cand = split_vertex(tri, ring, v, i, j);
            if (!validate_sphere(cand).valid) continue;
            std::string c = canonical_form(cand);
            if (!next.count(c)) next[std::move(c)] = cand;
          }
        }
      }
    }
    level = std::move(next);
  }

  std::vector<SphereTriangulation> out;
  out.reserve(level.size());
  for (auto& [key, tri] : level) {
    (void)key;
    out.push_back(std::move(tri));
  }
  return out;
}

}  // namespace wct
