#include "support.hpp"

#include "certificates.hpp"

#include <doctest.h>

using namespace wct;
using namespace wct::testing;

namespace {

TetMesh single_tet() {
  return make_tet_mesh({{0, 0, 0}, {1, 0, 0}, {0, 1, 0}, {0, 0, 1}},
                       {{0, 1, 2, 3}});
}

}  // namespace

TEST_SUITE("tet_mesh") {

TEST_CASE("construction normalizes orientation and validates") {
  const TetMesh mesh = make_tet_mesh({{0, 0, 0}, {1, 0, 0}, {0, 1, 0}, {0, 0, 1}},
                                     {{0, 2, 1, 3}});  // negatively oriented input
  CHECK(signed_volume(tet_simplex(mesh, 0)) > 0.0);

  CHECK_THROWS_AS(make_tet_mesh({{0, 0, 0}, {1, 0, 0}, {2, 0, 0}, {3, 0, 0}},
                                {{0, 1, 2, 3}}),
                  Error);  // degenerate
  CHECK_THROWS_AS(make_tet_mesh({{0, 0, 0}, {1, 0, 0}, {0, 1, 0}, {0, 0, 1}},
                                {{0, 1, 2, 3}, {0, 2, 1, 3}}),
                  Error);  // duplicate as a set
  CHECK_THROWS_AS(make_tet_mesh({{0, 0, 0}, {1, 0, 0}, {0, 1, 0}, {0, 0, 1}},
                                {{0, 1, 2, 4}}),
                  Error);  // out of range
}

TEST_CASE("link of a vertex in a single tetrahedron is one boundary triangle") {
  const VertexLink link = link_of(single_tet(), 0);
  CHECK(link.tri.triangles.size() == 1);
  CHECK(!link.is_interior);
}

TEST_CASE("coned octahedron: interior vertex with octahedral link") {
  const std::vector<Vec3> pts{{0, 0, 0},  {1, 0, 0},  {0, 1, 0}, {-1, 0, 0},
                              {0, -1, 0}, {0, 0, 1},  {0, 0, -1}};
  std::vector<std::array<int, 4>> tets;
  const int square[4] = {1, 2, 3, 4};
  for (int pole : {5, 6})
    for (int i = 0; i < 4; ++i)
      tets.push_back({0, square[i], square[(i + 1) % 4], pole});
  const TetMesh mesh = make_tet_mesh(pts, tets);

  const VertexLink link = link_of(mesh, 0);
  CHECK(link.is_interior);
  CHECK(link.tri.num_vertices == 6);
  CHECK(degree_list(link.tri) == std::vector<int>{4, 4, 4, 4, 4, 4});
  CHECK(interior_vertices(mesh) == std::vector<int>{0});
  CHECK(incident_edge_count(mesh, 0) == 6);

  const auto audit = min_edge_audit(mesh);
  REQUIRE(audit.size() == 1);
  CHECK(audit[0].incident_edges == 6);
  CHECK(audit[0].below_wc3_bound);  // 6 < 7
  CHECK(audit[0].below_wc2_bound);  // 6 < 9
}

TEST_CASE("face angles at a regular tetrahedron vertex are acute") {
  const TetMesh mesh = make_tet_mesh(
      {{1, 1, 1}, {1, -1, -1}, {-1, 1, -1}, {-1, -1, 1}}, {{0, 1, 2, 3}});
  const WcVerdict v = face_angles_acute_at(mesh, 0);
  CHECK(v.status == WcStatus::Satisfied);
  CHECK(v.margin == doctest::Approx(0.5));  // cos of 60 degrees
}

TEST_CASE("obtuse and right face angles at the star vertex are flagged") {
  // face (0,1,2) subtends an obtuse angle at vertex 0
  const TetMesh obtuse = make_tet_mesh(
      {{0, 0, 0}, {1, 0, 0}, {-0.5, 1, 0}, {0, 0, 1}}, {{0, 1, 2, 3}});
  const WcVerdict v = face_angles_acute_at(obtuse, 0);
  CHECK(v.status == WcStatus::Violated);
  CHECK(v.margin < 0.0);

  // cube corner: the right angles sit exactly on the boundary
  const WcVerdict right = face_angles_acute_at(load_fixture("cube-corner"), 0);
  CHECK(right.status == WcStatus::Boundary);
  CHECK(std::abs(right.margin) < 1e-12);
}

TEST_CASE("link-of-cone round trip preserves the canonical form") {
  auto gen = rng(211);
  const SurfaceTriangulation surface = kgon_sphere({.k = 5});
  const TetMesh mesh = cone_to_origin(surface);
  const VertexLink link = link_of(mesh, 0);
  REQUIRE(link.is_interior);
  CHECK(canonical_form(link.tri) == canonical_form(surface.abstract()));
  (void)gen;
}

}  // TEST_SUITE
