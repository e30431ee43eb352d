#pragma once

#include "geometry.hpp"

#include <array>
#include <map>
#include <utility>

namespace wct {

/// Abstract (coordinate-free) triangulation of S^2 on vertices 0..m-1.
struct SphereTriangulation {
  int num_vertices = 0;
  std::vector<std::array<int, 3>> triangles;
};

struct SphereDiagnostics {
  bool valid = false;
  std::string first_failure;
};

/// Checks: indices in range, triangles nondegenerate and distinct, every
/// edge in exactly two triangles, connected edge graph, Euler formula,
/// and single-cycle vertex links.
SphereDiagnostics validate_sphere(const SphereTriangulation& tri);

void require_valid(const SphereTriangulation& tri);

/// Sorted descending; sum is forced to 6(m-2) by validity.
std::vector<int> degree_list(const SphereTriangulation& tri);

std::vector<std::pair<int, int>> edges_of(const SphereTriangulation& tri);

/// Isomorphism-invariant encoding: lexicographic minimum over all rooted
/// breadth-first traversal codes of the combinatorial map (both rotation
/// directions, so mirror images coincide).  Complete for triangulations of
/// S^2, whose maps are unique up to reflection.
std::string canonical_form(const SphereTriangulation& tri);

/// Complete duplicate-free list for 4 <= m <= 10, grown from the
/// tetrahedron boundary by vertex splitting with canonical-form dedupe.
/// Counts for m = 4..9 are 1, 1, 2, 5, 14, 50.
std::vector<SphereTriangulation> enumerate_sphere_triangulations(int m);

/// Rotation system of an orientable triangulation: successor/predecessor of
/// neighbor u in the cyclic order around v.
class RotationSystem {
public:
  explicit RotationSystem(const SphereTriangulation& tri);
  int next(int v, int u) const;
  int prev(int v, int u) const;
  /// Neighbors of v in cyclic order.
  std::vector<int> ring(int v) const;

private:
  std::map<std::pair<int, int>, int> succ_, pred_;
};

}  // namespace wct
