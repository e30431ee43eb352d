#include "reports.hpp"

#include <json.hpp>

#include <algorithm>
#include <atomic>
#include <future>
#include <sstream>
#include <thread>

namespace wct {

namespace {

using json = nlohmann::ordered_json;

template <typename Fn>
void parallel_for(int count, bool parallel, Fn&& fn) {
  if (!parallel || count < 2) {
    for (int i = 0; i < count; ++i) fn(i);
    return;
  }
  const int workers = std::min<int>(std::thread::hardware_concurrency(), count);
  std::vector<std::future<void>> futures;
  std::atomic<int> next{0};
  for (int w = 0; w < std::max(workers, 1); ++w)
    futures.push_back(std::async(std::launch::async, [&]() {
      for (int i = next++; i < count; i = next++) fn(i);
    }));
  for (auto& f : futures) f.get();
}

json header(const char* command, const Tolerance& tol, unsigned long long seed) {
  json h;
  h["format"] = "wct-records";
  h["version"] = 1;
  h["command"] = command;
  h["tol_rel"] = tol.rel;
  h["tol_abs"] = tol.abs;
  h["seed"] = seed;
  return h;
}

}  // namespace

AuditReport check_mesh(const TetMesh& mesh, const CheckOptions& options) {
  AuditReport report;
  report.options = options;
  report.cells = static_cast<int>(mesh.tets.size());

  std::vector<int> ks;
  if (options.k == 0)
    ks = {1, 2, 3};
  else if (options.k >= 1 && options.k <= 3)
    ks = {options.k};
  else
    throw Error(ErrorCode::InvalidArgument, "k must be 1..3 or 0 for all");

  std::vector<std::vector<CellRecord>> per_cell(mesh.tets.size());
  std::vector<char> degenerate(mesh.tets.size(), 0);
  parallel_for(report.cells, options.parallel, [&](int c) {
    try {
      const Simplex s = tet_simplex(mesh, c);
      for (int k : ks) {
        const WcVerdict v = is_k_well_centered(s, k, options.tol);
        per_cell[c].push_back({c, k, v.status, v.margin});
      }
    } catch (const Error& e) {
      if (e.code() != ErrorCode::Degenerate) throw;
      degenerate[c] = 1;
    }
  });

  for (int c = 0; c < report.cells; ++c) {
    if (degenerate[c]) {
      report.degenerate_cells.push_back(c);
      continue;
    }
    for (const CellRecord& r : per_cell[c]) {
      report.cell_records.push_back(r);
      switch (r.status) {
        case WcStatus::Satisfied: ++report.satisfied; break;
        case WcStatus::Violated: ++report.violated; break;
        case WcStatus::Boundary: ++report.boundary; break;
      }
      auto [it, fresh] = report.worst_margin_by_k.try_emplace(r.k, r.margin);
      if (!fresh) it->second = std::min(it->second, r.margin);
    }
  }
  const std::vector<EdgeAuditEntry> edge_entries = min_edge_audit(mesh);
  report.vertex_audit.resize(edge_entries.size());
  parallel_for(static_cast<int>(edge_entries.size()), options.parallel, [&](int i) {
    VertexAuditEntry entry;
    entry.edges = edge_entries[i];
    const VertexLink link = link_of(mesh, entry.edges.vertex);
    entry.link_degrees = degree_list(link.tri);
    entry.wc2 = nminus3_blocked(link.tri) ? Wc2Status::Blocked : Wc2Status::Unknown;
    try {
      SearchLimits limits;
      limits.max_nodes = 200'000;
      if (const auto cert = search_certificate(link.tri, limits)) {
        entry.wc3 = Wc3Status::Blocked;
        entry.certificate_tets = static_cast<int>(cert->tets.size());
      }
    } catch (const Error& e) {
      if (e.code() != ErrorCode::SearchCap) throw;  // capped search stays UNKNOWN
    }
    report.vertex_audit[i] = std::move(entry);
  });
  return report;
}

ClassifyReport classify_links(const std::vector<SphereTriangulation>& links,
                              const ClassifyReportOptions& options) {
  ClassifyReport report;
  report.options = options;
  report.links.resize(links.size());
  parallel_for(static_cast<int>(links.size()), options.parallel, [&](int i) {
    report.links[i] = classify_link(links[i], options.classify);
  });
  for (const auto& l : report.links) {
    switch (l.wc3) {
      case Wc3Status::Blocked: ++report.wc3_blocked; break;
      case Wc3Status::Realized: ++report.wc3_realized; break;
      case Wc3Status::Unknown: ++report.wc3_unknown; break;
    }
    switch (l.wc2) {
      case Wc2Status::Blocked: ++report.wc2_blocked; break;
      case Wc2Status::Feasible: ++report.wc2_feasible; break;
      case Wc2Status::Unknown: ++report.wc2_unknown; break;
    }
  }
  return report;
}

std::string render_check(const AuditReport& report, ReportFormat format) {
  std::ostringstream out;
  if (format == ReportFormat::Records) {
    json h = header("check", report.options.tol, report.options.seed);
    h["k"] = report.options.k == 0 ? "all" : std::to_string(report.options.k);
    out << h.dump() << '\n';
    for (const auto& r : report.cell_records) {
      json j;
      j["kind"] = "cell";
      j["cell"] = r.cell;
      j["k"] = r.k;
      j["status"] = to_string(r.status);
      j["margin"] = r.margin;
      out << j.dump() << '\n';
    }
    for (int c : report.degenerate_cells) {
      json j;
      j["kind"] = "degenerate-cell";
      j["cell"] = c;
      out << j.dump() << '\n';
    }
    for (const auto& e : report.vertex_audit) {
      json j;
      j["kind"] = "interior-vertex";
      j["vertex"] = e.edges.vertex;
      j["incident_edges"] = e.edges.incident_edges;
      j["below_wc3_bound"] = e.edges.below_wc3_bound;
      j["below_wc2_bound"] = e.edges.below_wc2_bound;
      j["link_degrees"] = e.link_degrees;
      j["wc3"] = to_string(e.wc3);
      if (e.certificate_tets > 0) j["certificate_tets"] = e.certificate_tets;
      j["wc2"] = to_string(e.wc2);
      out << j.dump() << '\n';
    }
    json s;
    s["kind"] = "summary";
    s["cells"] = report.cells;
    s["checked"] = report.cell_records.size();
    s["satisfied"] = report.satisfied;
    s["violated"] = report.violated;
    s["boundary"] = report.boundary;
    s["degenerate"] = report.degenerate_cells.size();
    for (const auto& [k, margin] : report.worst_margin_by_k)
      s["worst_margin_k" + std::to_string(k)] = margin;
    s["all_satisfied"] = report.all_satisfied();
    out << s.dump() << '\n';
    return out.str();
  }

  out << "check: " << report.cells << " cell(s)\n";
  for (const auto& r : report.cell_records)
    out << "  cell " << r.cell << "  k=" << r.k << "  " << to_string(r.status)
        << "  margin " << r.margin << '\n';
  for (int c : report.degenerate_cells) out << "  cell " << c << "  DEGENERATE\n";
  if (report.boundary > 0) {
    out << "  boundary cells:";
    for (const auto& r : report.cell_records)
      if (r.status == WcStatus::Boundary)
        out << "  (" << r.cell << ", k=" << r.k << ")";
    out << '\n';
  }
  for (const auto& e : report.vertex_audit) {
    out << "  interior vertex " << e.edges.vertex << ": "
        << e.edges.incident_edges << " incident edges, link wc3="
        << to_string(e.wc3) << " wc2=" << to_string(e.wc2);
    if (e.edges.below_wc3_bound) out << "  [below 3-WC minimum of 7]";
    if (e.edges.below_wc2_bound) out << "  [below 2-WC minimum of 9]";
    out << '\n';
  }
  out << "summary: " << report.satisfied << " satisfied, " << report.violated
      << " violated, " << report.boundary << " boundary, "
      << report.degenerate_cells.size() << " degenerate\n";
  return out.str();
}

namespace {

json link_record(const LinkClassification& l, int index) {
  json j;
  j["kind"] = "link";
  j["index"] = index;
  j["m"] = l.link.num_vertices;
  j["degrees"] = l.degrees;
  j["canonical"] = l.canonical;
  j["wc3"] = to_string(l.wc3);
  if (l.wc3_certificate) {
    json tets = json::array();
    for (const auto& t : l.wc3_certificate->tets) tets.push_back(t);
    j["certificate"] = tets;
  }
  if (l.wc3_witness) {
    json w = json::array();
    for (const auto& p : *l.wc3_witness) w.push_back({p(0), p(1), p(2)});
    j["wc3_witness"] = w;
  }
  j["wc2"] = to_string(l.wc2);
  if (l.wc2_degree_blocked) j["wc2_reason"] = "max degree >= m-3";
  if (l.wc2_embedding) {
    json w = json::array();
    for (const auto& p : *l.wc2_embedding) w.push_back({p(0), p(1), p(2)});
    j["wc2_embedding"] = w;
  }
  return j;
}

}  // namespace

std::string render_classify(const ClassifyReport& report, ReportFormat format) {
  std::ostringstream out;
  if (format == ReportFormat::Records) {
    json h = header("classify-link", report.options.tol, report.options.seed);
    if (report.options.enumerate_m > 0) h["enumerate"] = report.options.enumerate_m;
    h["witnesses"] = report.options.classify.attempt_witnesses;
    out << h.dump() << '\n';
    for (size_t i = 0; i < report.links.size(); ++i)
      out << link_record(report.links[i], static_cast<int>(i)).dump() << '\n';
    json s;
    s["kind"] = "summary";
    s["links"] = report.links.size();
    s["wc3_blocked"] = report.wc3_blocked;
    s["wc3_realized"] = report.wc3_realized;
    s["wc3_unknown"] = report.wc3_unknown;
    s["wc2_blocked"] = report.wc2_blocked;
    s["wc2_feasible"] = report.wc2_feasible;
    s["wc2_unknown"] = report.wc2_unknown;
    out << s.dump() << '\n';
    return out.str();
  }

  out << "classify-link: " << report.links.size() << " link(s)\n";
  for (size_t i = 0; i < report.links.size(); ++i) {
    const auto& l = report.links[i];
    out << "  link " << i << "  m=" << l.link.num_vertices << "  degrees (";
    for (size_t d = 0; d < l.degrees.size(); ++d)
      out << (d ? "," : "") << l.degrees[d];
    out << ")  wc3=" << to_string(l.wc3) << "  wc2=" << to_string(l.wc2);
    if (l.wc3_certificate)
      out << "  certificate: " << l.wc3_certificate->tets.size() << " tet(s)";
    out << '\n';
    if (l.wc3_certificate) {
      out << "    certificate tets:";
      for (const auto& t : l.wc3_certificate->tets)
        out << " (" << t[0] << ',' << t[1] << ',' << t[2] << ',' << t[3] << ')';
      out << '\n';
    }
  }
  out << "summary: wc3 " << report.wc3_blocked << " blocked / "
      << report.wc3_realized << " realized / " << report.wc3_unknown
      << " unknown; wc2 " << report.wc2_blocked << " blocked / "
      << report.wc2_feasible << " feasible / " << report.wc2_unknown
      << " unknown\n";
  return out.str();
}

}  // namespace wct
