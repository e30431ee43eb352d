#pragma once

#include "reports.hpp"

namespace wct {

/// Per cube-face tallies: face "x=0", ..., "z=1".
struct CubeFaceInfo {
  std::string name;
  int triangle_count = 0;
  bool two_right_triangles = false;  // two right triangles along a diagonal
};

struct CubeAuditReport {
  Tolerance tol;
  unsigned long long seed = 0;
  int cells = 0;
  std::vector<int> corner_tets;  // >= 3 facets lying in cube faces
  std::array<CubeFaceInfo, 6> faces;
  int bound_3wc = 0;  // recomputed: ceil(6 faces * 3 triangles / 2)
  int bound_2wc = 0;  // recomputed: ceil(6 faces * 8 triangles / 2)
  bool meets_3wc_bound = false;
  bool meets_2wc_bound = false;

  int findings() const;
};

/// Audits a triangulation of the unit cube for the combinatorial
/// obstructions: corner tetrahedra, cube faces split into two right
/// triangles along a diagonal, and the per-face / total-count lower bounds.
CubeAuditReport cube_audit(const TetMesh& mesh, const Tolerance& tol = {},
                           unsigned long long seed = 0);

std::string render_cube_audit(const CubeAuditReport& report, ReportFormat format);

}  // namespace wct
