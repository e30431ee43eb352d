#include "wct/wct.h"

#include "constructions.hpp"
#include "cube_audit.hpp"
#include "mesh_io.hpp"
#include "reports.hpp"

#include <cstring>
#include <variant>

namespace {

thread_local std::string g_last_error;

wct_status to_status(wct::ErrorCode code) {
  using wct::ErrorCode;
  switch (code) {
    case ErrorCode::InvalidArgument: return WCT_ERROR_INVALID_ARGUMENT;
    case ErrorCode::Degenerate: return WCT_ERROR_DEGENERATE;
    case ErrorCode::Precondition: return WCT_ERROR_PRECONDITION;
    case ErrorCode::Parse: return WCT_ERROR_PARSE;
    case ErrorCode::Io: return WCT_ERROR_IO;
    case ErrorCode::SearchCap: return WCT_ERROR_SEARCH_CAP;
    case ErrorCode::Internal: return WCT_ERROR_INTERNAL;
  }
  return WCT_ERROR_INTERNAL;
}

template <typename Fn>
wct_status guarded(Fn&& fn) {
  try {
    fn();
    return WCT_OK;
  } catch (const wct::Error& e) {
    g_last_error = e.what();
    return to_status(e.code());
  } catch (const std::exception& e) {
    g_last_error = e.what();
    return WCT_ERROR_INTERNAL;
  }
}

wct::Tolerance to_tolerance(const wct_tolerance* tol) {
  wct::Tolerance out;
  if (tol) {
    if (tol->rel > 0.0) out.rel = tol->rel;
    if (tol->abs > 0.0) out.abs = tol->abs;
  }
  return out;
}

wct::Simplex simplex_from_coords(int dim, int ambient, const double* coords) {
  if (dim < 0 || ambient < 1 || !coords)
    throw wct::Error(wct::ErrorCode::InvalidArgument, "bad simplex arguments");
  std::vector<wct::Vector> vs;
  for (int i = 0; i <= dim; ++i)
    vs.push_back(Eigen::Map<const wct::Vector>(coords + i * ambient, ambient));
  return wct::make_simplex(std::move(vs));
}

wct_verdict to_c(const wct::WcVerdict& v) {
  wct_verdict out;
  switch (v.status) {
    case wct::WcStatus::Satisfied: out.status = WCT_SATISFIED; break;
    case wct::WcStatus::Violated: out.status = WCT_VIOLATED; break;
    case wct::WcStatus::Boundary: out.status = WCT_BOUNDARY; break;
  }
  out.margin = v.margin;
  return out;
}

}  // namespace

struct wct_mesh {
  wct::TetMesh impl;
};

struct wct_link {
  wct::SphereTriangulation impl;
};

struct wct_report {
  std::variant<wct::AuditReport, wct::ClassifyReport, wct::CubeAuditReport> impl;
};

extern "C" {

const char* wct_version(void) { return "1.0.0"; }

const char* wct_last_error(void) { return g_last_error.c_str(); }

wct_status wct_circumcenter(int dim, int ambient, const double* coords,
                            const wct_tolerance* tol, double* center,
                            double* radius, double* barycentric, double* lambda,
                            int* degenerate) {
  return guarded([&]() {
    const wct::Simplex s = simplex_from_coords(dim, ambient, coords);
    const wct::CircumData cd = wct::circumcenter(s, to_tolerance(tol));
    if (degenerate) *degenerate = cd.degenerate ? 1 : 0;
    if (cd.degenerate) return;
    if (center)
      for (int a = 0; a < ambient; ++a) center[a] = cd.center(a);
    if (radius) *radius = cd.radius;
    if (barycentric)
      for (int i = 0; i <= dim; ++i) barycentric[i] = cd.barycentric[i];
    if (lambda) *lambda = cd.lambda;
  });
}

wct_status wct_simplex_test(const char* predicate, int k, int dim, int ambient,
                            const double* coords, const wct_tolerance* tol,
                            wct_verdict* out) {
  return guarded([&]() {
    if (!predicate || !out)
      throw wct::Error(wct::ErrorCode::InvalidArgument, "null argument");
    const wct::Simplex s = simplex_from_coords(dim, ambient, coords);
    const wct::Tolerance t = to_tolerance(tol);
    wct::WcVerdict v;
    const std::string p = predicate;
    if (p == "wc-n")
      v = wct::is_n_well_centered(s, t);
    else if (p == "wc-k")
      v = wct::is_k_well_centered(s, k, t);
    else if (p == "wc-complete")
      v = wct::is_completely_well_centered(s, t);
    else if (p == "equatorial")
      v = wct::equatorial_ball_test(s, t);
    else
      throw wct::Error(wct::ErrorCode::InvalidArgument,
                       "unknown predicate: " + p);
    *out = to_c(v);
  });
}

wct_status wct_cone_test(const char* predicate, int facet_dim, int ambient,
                         const double* facet_coords, const double* apex,
                         const wct_tolerance* tol, wct_verdict* out) {
  return guarded([&]() {
    if (!predicate || !apex || !out)
      throw wct::Error(wct::ErrorCode::InvalidArgument, "null argument");
    const wct::Simplex facet = simplex_from_coords(facet_dim, ambient, facet_coords);
    const wct::Vector u = Eigen::Map<const wct::Vector>(apex, ambient);
    const wct::Tolerance t = to_tolerance(tol);
    wct::WcVerdict v;
    const std::string p = predicate;
    if (p == "cylinder")
      v = wct::cylinder_condition(facet, u, t);
    else if (p == "prism")
      v = wct::prism_condition(facet, u, t);
    else if (p == "polynomial")
      v = wct::polynomial_region_test(facet, u, t);
    else if (p == "isosceles")
      v = wct::isosceles_cone_test(u, facet, t);
    else
      throw wct::Error(wct::ErrorCode::InvalidArgument,
                       "unknown predicate: " + p);
    *out = to_c(v);
  });
}

wct_status wct_mesh_load(const char* path, wct_mesh** out) {
  return guarded([&]() {
    if (!path || !out)
      throw wct::Error(wct::ErrorCode::InvalidArgument, "null argument");
    *out = new wct_mesh{wct::read_mesh_file(path)};
  });
}

wct_status wct_mesh_save(const wct_mesh* mesh, const char* path) {
  return guarded([&]() {
    if (!mesh || !path)
      throw wct::Error(wct::ErrorCode::InvalidArgument, "null argument");
    wct::write_mesh_file(path, mesh->impl);
  });
}

wct_status wct_mesh_from_arrays(int nv, const double* xyz, int nt,
                                const int* tets, wct_mesh** out) {
  return guarded([&]() {
    if (nv < 0 || nt < 0 || (nv && !xyz) || (nt && !tets) || !out)
      throw wct::Error(wct::ErrorCode::InvalidArgument, "bad array arguments");
    std::vector<wct::Vec3> vs(nv);
    for (int i = 0; i < nv; ++i)
      vs[i] = wct::Vec3(xyz[3 * i], xyz[3 * i + 1], xyz[3 * i + 2]);
    std::vector<std::array<int, 4>> ts(nt);
    for (int i = 0; i < nt; ++i)
      ts[i] = {tets[4 * i], tets[4 * i + 1], tets[4 * i + 2], tets[4 * i + 3]};
    *out = new wct_mesh{wct::make_tet_mesh(std::move(vs), std::move(ts))};
  });
}

void wct_mesh_free(wct_mesh* mesh) { delete mesh; }

int wct_mesh_vertex_count(const wct_mesh* mesh) {
  return mesh ? static_cast<int>(mesh->impl.vertices.size()) : 0;
}

int wct_mesh_cell_count(const wct_mesh* mesh) {
  return mesh ? static_cast<int>(mesh->impl.tets.size()) : 0;
}

wct_status wct_link_load(const char* path, wct_link** out) {
  return guarded([&]() {
    if (!path || !out)
      throw wct::Error(wct::ErrorCode::InvalidArgument, "null argument");
    *out = new wct_link{wct::read_link_file(path)};
  });
}

wct_status wct_link_save(const wct_link* link, const char* path) {
  return guarded([&]() {
    if (!link || !path)
      throw wct::Error(wct::ErrorCode::InvalidArgument, "null argument");
    wct::write_link_file(path, link->impl);
  });
}

wct_status wct_link_from_arrays(int m, int t, const int* triangles,
                                wct_link** out) {
  return guarded([&]() {
    if (m < 0 || t < 0 || (t && !triangles) || !out)
      throw wct::Error(wct::ErrorCode::InvalidArgument, "bad array arguments");
    wct::SphereTriangulation tri;
    tri.num_vertices = m;
    for (int i = 0; i < t; ++i)
      tri.triangles.push_back(
          {triangles[3 * i], triangles[3 * i + 1], triangles[3 * i + 2]});
    wct::require_valid(tri);
    *out = new wct_link{std::move(tri)};
  });
}

void wct_link_free(wct_link* link) { delete link; }

int wct_link_vertex_count(const wct_link* link) {
  return link ? link->impl.num_vertices : 0;
}

int wct_link_triangle_count(const wct_link* link) {
  return link ? static_cast<int>(link->impl.triangles.size()) : 0;
}

wct_status wct_generate_kgon(int k, int rings, wct_mesh** out) {
  return guarded([&]() {
    if (!out) throw wct::Error(wct::ErrorCode::InvalidArgument, "null argument");
    wct::KgonSpec spec;
    spec.k = k;
    if (rings > 0) spec.rings = rings;
    *out = new wct_mesh{wct::cone_to_origin(wct::kgon_sphere(spec))};
  });
}

wct_status wct_generate_band(int m, int open_fan, wct_link** out) {
  return guarded([&]() {
    if (!out) throw wct::Error(wct::ErrorCode::InvalidArgument, "null argument");
    *out = new wct_link{wct::generate_band_family(m, open_fan != 0).boundary};
  });
}

wct_status wct_generate_fixture(const char* name, wct_mesh** out) {
  return guarded([&]() {
    if (!name || !out)
      throw wct::Error(wct::ErrorCode::InvalidArgument, "null argument");
    *out = new wct_mesh{wct::load_fixture(name)};
  });
}

wct_status wct_insert_degree3_3wc(const wct_mesh* mesh, int u, int tet,
                                  wct_mesh** out) {
  return guarded([&]() {
    if (!mesh || !out)
      throw wct::Error(wct::ErrorCode::InvalidArgument, "null argument");
    *out = new wct_mesh{wct::insert_degree3_3wc(mesh->impl, u, tet)};
  });
}

wct_status wct_insert_degree3_2wc(const wct_mesh* mesh, int u, int a, int b,
                                  int c, wct_mesh** out) {
  return guarded([&]() {
    if (!mesh || !out)
      throw wct::Error(wct::ErrorCode::InvalidArgument, "null argument");
    *out = new wct_mesh{wct::insert_degree3_2wc(mesh->impl, u, {a, b, c})};
  });
}

wct_status wct_insert_degree4_2wc(const wct_mesh* mesh, int u, int a, int b,
                                  wct_mesh** out) {
  return guarded([&]() {
    if (!mesh || !out)
      throw wct::Error(wct::ErrorCode::InvalidArgument, "null argument");
    *out = new wct_mesh{wct::insert_degree4_2wc(mesh->impl, u, {a, b})};
  });
}

namespace {

wct::ClassifyReportOptions to_classify_options(const wct_classify_options* options) {
  wct::ClassifyReportOptions out;
  if (options) {
    out.tol = to_tolerance(&options->tol);
    out.seed = options->seed;
    out.parallel = options->parallel != 0;
    out.classify.attempt_witnesses = options->attempt_witnesses != 0;
    if (options->restarts > 0) out.classify.embedding.restarts = options->restarts;
    if (options->margin > 0.0) out.classify.embedding.margin = options->margin;
    if (options->max_iterations > 0)
      out.classify.embedding.max_iterations = options->max_iterations;
    out.classify.embedding.seed = options->seed;
    if (options->max_pool > 0) out.classify.limits.max_pool = options->max_pool;
    if (options->max_nodes > 0) out.classify.limits.max_nodes = options->max_nodes;
  }
  return out;
}

}  // namespace

wct_status wct_check(const wct_mesh* mesh, const wct_check_options* options,
                     wct_report** out) {
  return guarded([&]() {
    if (!mesh || !out)
      throw wct::Error(wct::ErrorCode::InvalidArgument, "null argument");
    wct::CheckOptions opts;
    if (options) {
      opts.k = options->k;
      opts.tol = to_tolerance(&options->tol);
      opts.seed = options->seed;
      opts.parallel = options->parallel != 0;
    }
    *out = new wct_report{wct::check_mesh(mesh->impl, opts)};
  });
}

wct_status wct_classify_link(const wct_link* link,
                             const wct_classify_options* options,
                             wct_report** out) {
  return guarded([&]() {
    if (!link || !out)
      throw wct::Error(wct::ErrorCode::InvalidArgument, "null argument");
    const auto opts = to_classify_options(options);
    *out = new wct_report{wct::classify_links({link->impl}, opts)};
  });
}

wct_status wct_classify_enumeration(int m, const wct_classify_options* options,
                                    wct_report** out) {
  return guarded([&]() {
    if (!out) throw wct::Error(wct::ErrorCode::InvalidArgument, "null argument");
    auto opts = to_classify_options(options);
    opts.enumerate_m = m;
    *out = new wct_report{
        wct::classify_links(wct::enumerate_sphere_triangulations(m), opts)};
  });
}

wct_status wct_cube_audit(const wct_mesh* mesh,
                          const wct_cube_audit_options* options,
                          wct_report** out) {
  return guarded([&]() {
    if (!mesh || !out)
      throw wct::Error(wct::ErrorCode::InvalidArgument, "null argument");
    wct::Tolerance tol;
    unsigned long long seed = 0;
    if (options) {
      tol = to_tolerance(&options->tol);
      seed = options->seed;
    }
    *out = new wct_report{wct::cube_audit(mesh->impl, tol, seed)};
  });
}

wct_status wct_region_sample(const double* facet, const double* bbox,
                             const int* resolution, const char* out_path) {
  return guarded([&]() {
    if (!facet || !bbox || !resolution || !out_path)
      throw wct::Error(wct::ErrorCode::InvalidArgument, "null argument");
    const wct::Simplex f = simplex_from_coords(2, 3, facet);
    const std::array<double, 6> box{bbox[0], bbox[1], bbox[2],
                                    bbox[3], bbox[4], bbox[5]};
    const std::array<int, 3> res{resolution[0], resolution[1], resolution[2]};
    wct::write_region_file(out_path, wct::sample_region(f, box, res));
  });
}

void wct_report_free(wct_report* report) { delete report; }

int wct_report_all_satisfied(const wct_report* report) {
  if (!report) return 0;
  if (const auto* audit = std::get_if<wct::AuditReport>(&report->impl))
    return audit->all_satisfied() ? 1 : 0;
  if (const auto* cube = std::get_if<wct::CubeAuditReport>(&report->impl))
    return cube->findings() == 0 ? 1 : 0;
  return 1;
}

int wct_report_count(const wct_report* report, const char* key) {
  if (!report || !key) return -1;
  const std::string k = key;
  if (const auto* audit = std::get_if<wct::AuditReport>(&report->impl)) {
    if (k == "cells") return audit->cells;
    if (k == "satisfied") return audit->satisfied;
    if (k == "violated") return audit->violated;
    if (k == "boundary") return audit->boundary;
    if (k == "degenerate") return static_cast<int>(audit->degenerate_cells.size());
    if (k == "interior_vertices") return static_cast<int>(audit->vertex_audit.size());
  } else if (const auto* cls = std::get_if<wct::ClassifyReport>(&report->impl)) {
    if (k == "links") return static_cast<int>(cls->links.size());
    if (k == "wc3_blocked") return cls->wc3_blocked;
    if (k == "wc3_realized") return cls->wc3_realized;
    if (k == "wc3_unknown") return cls->wc3_unknown;
    if (k == "wc2_blocked") return cls->wc2_blocked;
    if (k == "wc2_feasible") return cls->wc2_feasible;
    if (k == "wc2_unknown") return cls->wc2_unknown;
  } else if (const auto* cube = std::get_if<wct::CubeAuditReport>(&report->impl)) {
    if (k == "cells") return cube->cells;
    if (k == "corner_tets") return static_cast<int>(cube->corner_tets.size());
    if (k == "findings") return cube->findings();
  }
  return -1;
}

wct_status wct_report_render(const wct_report* report, int format, char** out) {
  return guarded([&]() {
    if (!report || !out)
      throw wct::Error(wct::ErrorCode::InvalidArgument, "null argument");
    const wct::ReportFormat fmt = format == WCT_FORMAT_RECORDS
                                      ? wct::ReportFormat::Records
                                      : wct::ReportFormat::Text;
    std::string text;
    if (const auto* audit = std::get_if<wct::AuditReport>(&report->impl))
      text = wct::render_check(*audit, fmt);
    else if (const auto* cls = std::get_if<wct::ClassifyReport>(&report->impl))
      text = wct::render_classify(*cls, fmt);
    else if (const auto* cube = std::get_if<wct::CubeAuditReport>(&report->impl))
      text = wct::render_cube_audit(*cube, fmt);
    char* buffer = new char[text.size() + 1];
    std::memcpy(buffer, text.c_str(), text.size() + 1);
    *out = buffer;
  });
}

void wct_string_free(char* s) { delete[] s; }

}  // extern "C"
