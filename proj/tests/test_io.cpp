#include "support.hpp"

#include "cube_audit.hpp"
#include "mesh_io.hpp"
#include "reports.hpp"

#include <doctest.h>

#include <sstream>

using namespace wct;
using namespace wct::testing;

namespace {

TetMesh cube_5tet() {
  const std::vector<Vec3> v{{0, 0, 0}, {1, 0, 0}, {0, 1, 0}, {1, 1, 0},
                            {0, 0, 1}, {1, 0, 1}, {0, 1, 1}, {1, 1, 1}};
  return make_tet_mesh(v, {{0, 1, 2, 4},
                           {3, 1, 2, 7},
                           {5, 1, 4, 7},
                           {6, 2, 4, 7},
                           {1, 2, 4, 7}});
}

TetMesh cube_6tet() {
  const std::vector<Vec3> v{{0, 0, 0}, {1, 0, 0}, {0, 1, 0}, {1, 1, 0},
                            {0, 0, 1}, {1, 0, 1}, {0, 1, 1}, {1, 1, 1}};
  return make_tet_mesh(v, {{0, 1, 3, 7},
                           {0, 3, 2, 7},
                           {0, 2, 6, 7},
                           {0, 6, 4, 7},
                           {0, 4, 5, 7},
                           {0, 5, 1, 7}});
}

}  // namespace

TEST_SUITE("io_reports") {

TEST_CASE("mesh files round-trip byte for byte") {
  auto gen = rng(401);
  TetMesh mesh = load_fixture("cwc-deg555555444");
  // perturb coordinates so full-precision serialization actually matters
  for (auto& v : mesh.vertices) v += 1e-13 * Vec3::Ones() * random_point(1, gen)(0);

  std::ostringstream first;
  write_mesh(first, mesh);
  std::istringstream parse(first.str());
  const TetMesh reread = read_mesh(parse);
  std::ostringstream second;
  write_mesh(second, reread);
  CHECK(first.str() == second.str());
  REQUIRE(reread.vertices.size() == mesh.vertices.size());
  for (size_t i = 0; i < mesh.vertices.size(); ++i)
    CHECK((reread.vertices[i] - mesh.vertices[i]).norm() == 0.0);
}

TEST_CASE("link files round-trip and OFF input is accepted") {
  const SphereTriangulation tri = generate_band_family(8).boundary;
  std::ostringstream out;
  write_link(out, tri);
  std::istringstream in(out.str());
  const SphereTriangulation reread = read_link(in);
  CHECK(canonical_form(reread) == canonical_form(tri));

  std::ostringstream off;
  off << "OFF\n4 4 6\n";
  for (int i = 0; i < 4; ++i) off << "0 0 " << i << "\n";
  off << "3 0 1 2\n3 0 1 3\n3 0 2 3\n3 1 2 3\n";
  std::istringstream off_in(off.str());
  const SphereTriangulation from_off = read_link(off_in);
  CHECK(from_off.num_vertices == 4);
  CHECK(from_off.triangles.size() == 4);
}

TEST_CASE("parse errors carry line numbers") {
  std::istringstream bad("3 2 0\n0 0 0\nnot-a-number 0 0\n");
  try {
    read_mesh(bad);
    FAIL("expected parse error");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::Parse);
    CHECK(std::string(e.what()).find("line 3") != std::string::npos);
  }
}

TEST_CASE("absurd header counts are rejected") {
  std::istringstream bomb("3 999999999999 0\n");
  CHECK_THROWS_AS(read_mesh(bomb), Error);
}

TEST_CASE("region grid files round-trip") {
  const Simplex facet = simplex_from({{0, 0, 0}, {1, 0, 0}, {0.2, 0.9, 0}});
  const RegionGrid grid = sample_region(facet, {-1, 1, -1, 1, -1, 1}, {4, 3, 2});
  std::ostringstream out;
  write_region(out, grid);
  std::istringstream in(out.str());
  const RegionGrid reread = read_region(in);
  CHECK(reread.values == grid.values);
  CHECK(reread.resolution == grid.resolution);
  std::ostringstream again;
  write_region(again, reread);
  CHECK(again.str() == out.str());
}

TEST_CASE("check report on the completely well-centered fixture") {
  const TetMesh mesh = load_fixture("cwc-deg555555444");
  CheckOptions options;
  const AuditReport report = check_mesh(mesh, options);
  CHECK(report.cells == 14);
  CHECK(report.all_satisfied());
  CHECK(report.satisfied == 14 * 3);
  CHECK(report.violated == 0);
  REQUIRE(report.vertex_audit.size() == 1);
  CHECK(report.vertex_audit[0].edges.incident_edges == 9);
  CHECK(report.vertex_audit[0].link_degrees ==
        std::vector<int>{5, 5, 5, 5, 5, 5, 4, 4, 4});
  CHECK(report.vertex_audit[0].wc3 == Wc3Status::Unknown);
  CHECK(report.vertex_audit[0].wc2 == Wc2Status::Unknown);

  const std::string records = render_check(report, ReportFormat::Records);
  CHECK(records.find("\"format\":\"wct-records\"") != std::string::npos);
  CHECK(records.find("\"all_satisfied\":true") != std::string::npos);
  const std::string text = render_check(report, ReportFormat::Text);
  CHECK(text.find("summary:") != std::string::npos);
}

TEST_CASE("check report flags the violated fixture") {
  const TetMesh mesh = load_fixture("tet-A");
  CheckOptions options;
  options.k = 3;
  const AuditReport report = check_mesh(mesh, options);
  CHECK(!report.all_satisfied());
  CHECK(report.violated == 1);
}

TEST_CASE("parallel and sequential checks agree") {
  const TetMesh mesh = cone_to_origin(kgon_sphere({.k = 9}));
  CheckOptions seq;
  CheckOptions par;
  par.parallel = true;
  const std::string a = render_check(check_mesh(mesh, seq), ReportFormat::Records);
  const std::string b = render_check(check_mesh(mesh, par), ReportFormat::Records);
  // the header echoes options, not timing; bodies must match exactly
  CHECK(a == b);
}

TEST_CASE("classification report counts for m=6") {
  ClassifyReportOptions options;
  options.enumerate_m = 6;
  const ClassifyReport report =
      classify_links(enumerate_sphere_triangulations(6), options);
  CHECK(report.links.size() == 2);
  CHECK(report.wc3_blocked == 2);
  CHECK(report.wc2_blocked == 2);
  const std::string records = render_classify(report, ReportFormat::Records);
  CHECK(records.find("\"certificate\"") != std::string::npos);
}

TEST_CASE("cube audit: 5-tet split has corner tets, 6-tet split has face patterns") {
  const CubeAuditReport five = cube_audit(cube_5tet());
  CHECK(five.cells == 5);
  CHECK(five.corner_tets.size() == 4);
  CHECK(!five.meets_3wc_bound);
  CHECK(five.bound_3wc == 9);
  CHECK(five.bound_2wc == 24);

  const CubeAuditReport six = cube_audit(cube_6tet());
  CHECK(six.corner_tets.empty());
  int patterned = 0;
  for (const auto& f : six.faces)
    if (f.two_right_triangles) ++patterned;
  CHECK(patterned == 6);
  CHECK(six.findings() > 0);

  const std::string text = render_cube_audit(six, ReportFormat::Text);
  CHECK(text.find("two right triangles") != std::string::npos);
}

TEST_CASE("cube audit rejects non-cube meshes") {
  CHECK_THROWS_AS(cube_audit(load_fixture("tet-A")), Error);
}

TEST_CASE("empty mesh check exits clean") {
  std::istringstream in("3 0 0\n");
  const TetMesh empty = read_mesh(in);
  const AuditReport report = check_mesh(empty, {});
  CHECK(report.cells == 0);
  CHECK(report.all_satisfied());
}

TEST_CASE("boundary cells are listed separately in the text report") {
  // cube corner tet: every k=2 verdict sits on the boundary (right triangles)
  const AuditReport report = check_mesh(load_fixture("cube-corner"), {});
  CHECK(report.boundary > 0);
  const std::string text = render_check(report, ReportFormat::Text);
  CHECK(text.find("boundary cells:") != std::string::npos);
}

}  // TEST_SUITE
