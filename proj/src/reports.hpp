#pragma once

#include "certificates.hpp"
#include "embedding.hpp"
#include "mesh_io.hpp"

#include <map>

namespace wct {

enum class ReportFormat { Text, Records };

struct CheckOptions {
  int k = 0;  // 1..3 for a single level, 0 for all
  Tolerance tol;
  unsigned long long seed = 0;
  bool parallel = false;
};

struct CellRecord {
  int cell = 0;
  int k = 0;
  WcStatus status = WcStatus::Boundary;
  double margin = 0.0;
};

/// Combinatorial classification of one interior vertex's link, bundled with
/// the edge-count audit.  The certificate search runs under tight limits
/// here; hitting a cap downgrades wc3 to UNKNOWN rather than failing the
/// whole check.
struct VertexAuditEntry {
  EdgeAuditEntry edges;
  std::vector<int> link_degrees;
  Wc3Status wc3 = Wc3Status::Unknown;
  Wc2Status wc2 = Wc2Status::Unknown;
  int certificate_tets = 0;  // 0 when no certificate was found
};

/// Result of checking one mesh: per-cell verdicts for the requested k
/// levels plus the interior-vertex audit.
struct AuditReport {
  CheckOptions options;
  int cells = 0;
  std::vector<CellRecord> cell_records;
  std::vector<int> degenerate_cells;
  std::vector<VertexAuditEntry> vertex_audit;
  int satisfied = 0, violated = 0, boundary = 0;
  std::map<int, double> worst_margin_by_k;

  bool all_satisfied() const {
    return violated == 0 && boundary == 0 && degenerate_cells.empty();
  }
};

AuditReport check_mesh(const TetMesh& mesh, const CheckOptions& options);

struct ClassifyReportOptions {
  ClassifyOptions classify;
  Tolerance tol;
  unsigned long long seed = 0;
  bool parallel = false;
  int enumerate_m = 0;  // 0 = links came from a file
};

struct ClassifyReport {
  ClassifyReportOptions options;
  std::vector<LinkClassification> links;
  int wc3_blocked = 0, wc3_realized = 0, wc3_unknown = 0;
  int wc2_blocked = 0, wc2_feasible = 0, wc2_unknown = 0;
};

ClassifyReport classify_links(const std::vector<SphereTriangulation>& links,
                              const ClassifyReportOptions& options);

std::string render_check(const AuditReport& report, ReportFormat format);
std::string render_classify(const ClassifyReport& report, ReportFormat format);

}  // namespace wct
