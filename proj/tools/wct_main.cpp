// Command-line front end; talks to the library exclusively through the
// public C API in wct/wct.h.
#include <wct/wct.h>

#include <CLI11.hpp>

#include <cstdio>
#include <string>
#include <vector>

namespace {

struct CommonFlags {
  double tol_rel = 0.0;
  double tol_abs = 0.0;
  unsigned long long seed = 0;
  std::string format = "text";
  bool parallel = false;
};

void add_common(CLI::App* cmd, CommonFlags& flags) {
  cmd->add_option("--tol", flags.tol_rel, "relative tolerance (default 1e-9)");
  cmd->add_option("--tol-abs", flags.tol_abs, "absolute tolerance floor (default 1e-12)");
  cmd->add_option("--seed", flags.seed, "seed for all randomized subroutines");
  cmd->add_option("--format", flags.format, "output format: text | records")
      ->check(CLI::IsMember({"text", "records"}));
  cmd->add_flag("--parallel", flags.parallel, "analyze items in parallel");
}

wct_tolerance to_tol(const CommonFlags& flags) {
  return wct_tolerance{flags.tol_rel, flags.tol_abs};
}

int to_format(const CommonFlags& flags) {
  return flags.format == "records" ? WCT_FORMAT_RECORDS : WCT_FORMAT_TEXT;
}

[[noreturn]] void die(const std::string& context) {
  std::fprintf(stderr, "error: %s: %s\n", context.c_str(), wct_last_error());
  std::exit(2);
}

void print_report(wct_report* report, int format) {
  char* text = nullptr;
  if (wct_report_render(report, format, &text) != WCT_OK) die("render");
  std::fputs(text, stdout);
  wct_string_free(text);
}

std::vector<double> parse_doubles(const std::string& text, size_t expected,
                                  const char* what) {
  std::vector<double> out;
  std::string token;
  for (char ch : text + ",") {
    if (ch == ',' || ch == ';' || ch == ' ') {
      if (!token.empty()) {
        out.push_back(std::stod(token));
        token.clear();
      }
    } else {
      token += ch;
    }
  }
  if (out.size() != expected) {
    std::fprintf(stderr, "error: %s: expected %zu numbers, got %zu\n", what,
                 expected, out.size());
    std::exit(2);
  }
  return out;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"well-centered triangulation toolkit"};
  app.require_subcommand(1);

  // ---- check -----------------------------------------------------------
  auto* check = app.add_subcommand("check", "well-centeredness audit of a mesh file");
  std::string check_path;
  std::string check_k = "all";
  CommonFlags check_flags;
  check->add_option("mesh", check_path, "mesh file")->required();
  check->add_option("--k", check_k, "dimension to test: 1 | 2 | 3 | all")
      ->check(CLI::IsMember({"1", "2", "3", "all"}));
  add_common(check, check_flags);

  // ---- classify-link ----------------------------------------------------
  auto* classify = app.add_subcommand("classify-link",
                                      "combinatorial classification of vertex links");
  std::string classify_path;
  int enumerate_m = 0;
  bool witnesses = false;
  int restarts = 0, iterations = 0;
  double margin = 0.0;
  CommonFlags classify_flags;
  classify->add_option("link", classify_path, "link triangulation file");
  classify->add_option("--enumerate", enumerate_m,
                       "classify all triangulations with m vertices (4..10)");
  classify->add_flag("--witness", witnesses,
                     "attempt optimization witnesses for non-blocked links");
  classify->add_option("--restarts", restarts, "witness search restarts (default 64)");
  classify->add_option("--margin", margin, "witness acute margin (default 0.05)");
  classify->add_option("--iterations", iterations,
                       "witness iteration cap (default 5000)");
  add_common(classify, classify_flags);

  // ---- generate ----------------------------------------------------------
  auto* generate = app.add_subcommand("generate", "construct meshes and links");
  generate->require_subcommand(1);

  auto* kgon = generate->add_subcommand("kgon", "coned two-ring acute sphere mesh");
  int kgon_k = 7, kgon_rings = 2;
  std::string kgon_out;
  CommonFlags kgon_flags;
  kgon->add_option("--k", kgon_k, "ring size (>= 4)")->required();
  kgon->add_option("--rings", kgon_rings, "number of rings (default 2)");
  kgon->add_option("--out", kgon_out, "output mesh file")->required();
  add_common(kgon, kgon_flags);

  auto* band = generate->add_subcommand("band", "band-family link (m-2 tets around an edge)");
  int band_m = 8;
  bool band_open = false;
  std::string band_out;
  CommonFlags band_flags;
  band->add_option("--m", band_m, "link vertex count (>= 6)")->required();
  band->add_flag("--open", band_open, "open fan variant (one tet removed)");
  band->add_option("--out", band_out, "output link file")->required();
  add_common(band, band_flags);

  auto* fixture = generate->add_subcommand("fixture", "named coordinate fixture");
  std::string fixture_name, fixture_out;
  CommonFlags fixture_flags;
  fixture->add_option("name", fixture_name,
                      "tet-A | tet-B | tet-C | cube-corner | wc3-deg5554443 | "
                      "wc3-deg6555333 | cwc-deg555555444")
      ->required();
  fixture->add_option("--out", fixture_out, "output mesh file")->required();
  add_common(fixture, fixture_flags);

  auto* ins3 = generate->add_subcommand("insert-deg3",
                                        "split a well-centered tet (3-WC preserving)");
  std::string ins3_mesh, ins3_out;
  int ins3_vertex = 0, ins3_tet = 0;
  CommonFlags ins3_flags;
  ins3->add_option("--mesh", ins3_mesh, "input mesh file")->required();
  ins3->add_option("--vertex", ins3_vertex, "star vertex u")->required();
  ins3->add_option("--tet", ins3_tet, "tet index to split")->required();
  ins3->add_option("--out", ins3_out, "output mesh file")->required();
  add_common(ins3, ins3_flags);

  auto* ins3b = generate->add_subcommand(
      "insert-deg3-2wc", "insert a degree-3 link vertex (acute-angle preserving)");
  std::string ins3b_mesh, ins3b_out, ins3b_face;
  int ins3b_vertex = 0;
  CommonFlags ins3b_flags;
  ins3b->add_option("--mesh", ins3b_mesh, "input mesh file")->required();
  ins3b->add_option("--vertex", ins3b_vertex, "star vertex u")->required();
  ins3b->add_option("--face", ins3b_face, "link face a,b,c")->required();
  ins3b->add_option("--out", ins3b_out, "output mesh file")->required();
  add_common(ins3b, ins3b_flags);

  auto* ins4 = generate->add_subcommand(
      "insert-deg4", "insert a degree-4 link vertex (acute-angle preserving)");
  std::string ins4_mesh, ins4_out, ins4_edge;
  int ins4_vertex = 0;
  CommonFlags ins4_flags;
  ins4->add_option("--mesh", ins4_mesh, "input mesh file")->required();
  ins4->add_option("--vertex", ins4_vertex, "star vertex u")->required();
  ins4->add_option("--edge", ins4_edge, "link edge a,b")->required();
  ins4->add_option("--out", ins4_out, "output mesh file")->required();
  add_common(ins4, ins4_flags);

  // ---- region -------------------------------------------------------------
  auto* region = app.add_subcommand("region", "sample the well-centered region of a facet");
  std::string region_facet, region_bbox, region_res = "20,20,20", region_out;
  CommonFlags region_flags;
  region->add_option("--facet", region_facet, "facet vertices x0,y0,z0;x1,y1,z1;x2,y2,z2")
      ->required();
  region->add_option("--bbox", region_bbox, "xmin,xmax,ymin,ymax,zmin,zmax")->required();
  region->add_option("--res", region_res, "nx,ny,nz (default 20,20,20)");
  region->add_option("--out", region_out, "output grid file")->required();
  add_common(region, region_flags);

  // ---- cube-audit ----------------------------------------------------------
  auto* cube = app.add_subcommand("cube-audit", "combinatorial audit of a unit-cube mesh");
  std::string cube_path;
  CommonFlags cube_flags;
  cube->add_option("mesh", cube_path, "mesh file")->required();
  add_common(cube, cube_flags);

  CLI11_PARSE(app, argc, argv);

  if (check->parsed()) {
    wct_mesh* mesh = nullptr;
    if (wct_mesh_load(check_path.c_str(), &mesh) != WCT_OK) die(check_path);
    wct_check_options opts{};
    opts.k = check_k == "all" ? 0 : std::stoi(check_k);
    opts.tol = to_tol(check_flags);
    opts.seed = check_flags.seed;
    opts.parallel = check_flags.parallel ? 1 : 0;
    wct_report* report = nullptr;
    if (wct_check(mesh, &opts, &report) != WCT_OK) die("check");
    print_report(report, to_format(check_flags));
    const int exit_code = wct_report_all_satisfied(report) ? 0 : 1;
    wct_report_free(report);
    wct_mesh_free(mesh);
    return exit_code;
  }

  if (classify->parsed()) {
    wct_classify_options opts{};
    opts.tol = to_tol(classify_flags);
    opts.seed = classify_flags.seed;
    opts.attempt_witnesses = witnesses ? 1 : 0;
    opts.restarts = restarts;
    opts.margin = margin;
    opts.max_iterations = iterations;
    opts.parallel = classify_flags.parallel ? 1 : 0;
    wct_report* report = nullptr;
    if (enumerate_m > 0) {
      if (wct_classify_enumeration(enumerate_m, &opts, &report) != WCT_OK)
        die("classify-link --enumerate");
    } else if (!classify_path.empty()) {
      wct_link* link = nullptr;
      if (wct_link_load(classify_path.c_str(), &link) != WCT_OK) die(classify_path);
      if (wct_classify_link(link, &opts, &report) != WCT_OK) die("classify-link");
      wct_link_free(link);
    } else {
      std::fprintf(stderr, "error: classify-link needs a link file or --enumerate\n");
      return 2;
    }
    print_report(report, to_format(classify_flags));
    wct_report_free(report);
    return 0;
  }

  if (kgon->parsed()) {
    wct_mesh* mesh = nullptr;
    if (wct_generate_kgon(kgon_k, kgon_rings, &mesh) != WCT_OK) die("generate kgon");
    if (wct_mesh_save(mesh, kgon_out.c_str()) != WCT_OK) die(kgon_out);
    std::printf("kgon k=%d rings=%d: %d vertices, %d tets -> %s\n", kgon_k,
                kgon_rings, wct_mesh_vertex_count(mesh), wct_mesh_cell_count(mesh),
                kgon_out.c_str());
    wct_mesh_free(mesh);
    return 0;
  }

  if (band->parsed()) {
    wct_link* link = nullptr;
    if (wct_generate_band(band_m, band_open ? 1 : 0, &link) != WCT_OK)
      die("generate band");
    if (wct_link_save(link, band_out.c_str()) != WCT_OK) die(band_out);
    std::printf("band m=%d%s: %d vertices, %d triangles -> %s\n", band_m,
                band_open ? " (open)" : "", wct_link_vertex_count(link),
                wct_link_triangle_count(link), band_out.c_str());
    wct_link_free(link);
    return 0;
  }

  if (fixture->parsed()) {
    wct_mesh* mesh = nullptr;
    if (wct_generate_fixture(fixture_name.c_str(), &mesh) != WCT_OK)
      die("generate fixture");
    if (wct_mesh_save(mesh, fixture_out.c_str()) != WCT_OK) die(fixture_out);
    std::printf("fixture %s: %d vertices, %d tets -> %s\n", fixture_name.c_str(),
                wct_mesh_vertex_count(mesh), wct_mesh_cell_count(mesh),
                fixture_out.c_str());
    wct_mesh_free(mesh);
    return 0;
  }

  if (ins3->parsed() || ins3b->parsed() || ins4->parsed()) {
    const std::string& in_path = ins3->parsed() ? ins3_mesh
                                 : ins3b->parsed() ? ins3b_mesh
                                                   : ins4_mesh;
    const std::string& out_path = ins3->parsed() ? ins3_out
                                  : ins3b->parsed() ? ins3b_out
                                                    : ins4_out;
    wct_mesh* mesh = nullptr;
    if (wct_mesh_load(in_path.c_str(), &mesh) != WCT_OK) die(in_path);
    wct_mesh* result = nullptr;
    if (ins3->parsed()) {
      if (wct_insert_degree3_3wc(mesh, ins3_vertex, ins3_tet, &result) != WCT_OK)
        die("insert-deg3");
    } else if (ins3b->parsed()) {
      const auto face = parse_doubles(ins3b_face, 3, "--face");
      if (wct_insert_degree3_2wc(mesh, ins3b_vertex, static_cast<int>(face[0]),
                                 static_cast<int>(face[1]),
                                 static_cast<int>(face[2]), &result) != WCT_OK)
        die("insert-deg3-2wc");
    } else {
      const auto edge = parse_doubles(ins4_edge, 2, "--edge");
      if (wct_insert_degree4_2wc(mesh, ins4_vertex, static_cast<int>(edge[0]),
                                 static_cast<int>(edge[1]), &result) != WCT_OK)
        die("insert-deg4");
    }
    if (wct_mesh_save(result, out_path.c_str()) != WCT_OK) die(out_path);
    std::printf("insertion: %d vertices, %d tets -> %s\n",
                wct_mesh_vertex_count(result), wct_mesh_cell_count(result),
                out_path.c_str());
    wct_mesh_free(result);
    wct_mesh_free(mesh);
    return 0;
  }

  if (region->parsed()) {
    const auto facet = parse_doubles(region_facet, 9, "--facet");
    const auto bbox = parse_doubles(region_bbox, 6, "--bbox");
    const auto res_d = parse_doubles(region_res, 3, "--res");
    const int res[3] = {static_cast<int>(res_d[0]), static_cast<int>(res_d[1]),
                        static_cast<int>(res_d[2])};
    if (wct_region_sample(facet.data(), bbox.data(), res, region_out.c_str()) != WCT_OK)
      die("region");
    std::printf("region grid %dx%dx%d -> %s\n", res[0], res[1], res[2],
                region_out.c_str());
    return 0;
  }

  if (cube->parsed()) {
    wct_mesh* mesh = nullptr;
    if (wct_mesh_load(cube_path.c_str(), &mesh) != WCT_OK) die(cube_path);
    wct_cube_audit_options opts{};
    opts.tol = to_tol(cube_flags);
    opts.seed = cube_flags.seed;
    wct_report* report = nullptr;
    if (wct_cube_audit(mesh, &opts, &report) != WCT_OK) die("cube-audit");
    print_report(report, to_format(cube_flags));
    const int exit_code = wct_report_all_satisfied(report) ? 0 : 1;
    wct_report_free(report);
    wct_mesh_free(mesh);
    return exit_code;
  }

  return 2;
}
