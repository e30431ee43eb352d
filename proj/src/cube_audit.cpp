#include "cube_audit.hpp"

#include <json.hpp>

#include <algorithm>
#include <map>
#include <sstream>

namespace wct {

namespace {

using json = nlohmann::ordered_json;
using Tri = std::array<int, 3>;

// Cube faces indexed 0..5: x=0, x=1, y=0, y=1, z=0, z=1.
int face_axis(int f) { return f / 2; }
double face_value(int f) { return f % 2; }

std::string face_name(int f) {
  static const char* names[6] = {"x=0", "x=1", "y=0", "y=1", "z=0", "z=1"};
  return names[f];
}

bool on_face(const Vec3& p, int f, double eps) {
  return std::abs(p(face_axis(f)) - face_value(f)) <= eps;
}

}  // namespace

int CubeAuditReport::findings() const {
  int n = static_cast<int>(corner_tets.size());
  for (const auto& f : faces) {
    if (f.two_right_triangles) ++n;
    if (f.triangle_count < 3) ++n;
    if (f.triangle_count < 8) ++n;
  }
  if (!meets_3wc_bound) ++n;
  if (!meets_2wc_bound) ++n;
  return n;
}

CubeAuditReport cube_audit(const TetMesh& mesh, const Tolerance& tol,
                           unsigned long long seed) {
  const double eps = std::max(tol.abs, 1e-9);
  for (const auto& v : mesh.vertices)
    for (int a = 0; a < 3; ++a)
      if (v(a) < -eps || v(a) > 1.0 + eps)
        throw Error(ErrorCode::Precondition,
                    "mesh not recognizably a cube triangulation: vertex outside the unit cube");

  CubeAuditReport report;
  report.tol = tol;
  report.seed = seed;
  report.cells = static_cast<int>(mesh.tets.size());

  // Boundary triangles are the faces incident to exactly one tet.
  std::map<Tri, int> face_count;
  for (const auto& t : mesh.tets) {
    std::array<int, 4> s = t;
    std::sort(s.begin(), s.end());
    for (int skip = 0; skip < 4; ++skip) {
      Tri f{};
      int k = 0;
      for (int i = 0; i < 4; ++i)
        if (i != skip) f[k++] = s[i];
      ++face_count[f];
    }
  }
  std::vector<Tri> boundary;
  for (const auto& [f, c] : face_count)
    if (c == 1) boundary.push_back(f);

  std::array<std::vector<Tri>, 6> per_face;
  for (const auto& f : boundary) {
    bool placed = false;
    for (int cf = 0; cf < 6 && !placed; ++cf) {
      if (on_face(mesh.vertices[f[0]], cf, eps) &&
          on_face(mesh.vertices[f[1]], cf, eps) &&
          on_face(mesh.vertices[f[2]], cf, eps)) {
        per_face[cf].push_back(f);
        placed = true;
      }
    }
    if (!placed)
      throw Error(ErrorCode::Precondition,
                  "mesh not recognizably a cube triangulation: boundary triangle off the cube surface");
  }

  // Corner tetrahedra: three or more facets lying in cube faces.
  for (size_t ti = 0; ti < mesh.tets.size(); ++ti) {
    const auto& t = mesh.tets[ti];
    int facets_on_cube = 0;
    for (int skip = 0; skip < 4; ++skip) {
      Tri f{};
      int k = 0;
      for (int i = 0; i < 4; ++i)
        if (i != skip) f[k++] = t[i];
      for (int cf = 0; cf < 6; ++cf)
        if (on_face(mesh.vertices[f[0]], cf, eps) &&
            on_face(mesh.vertices[f[1]], cf, eps) &&
            on_face(mesh.vertices[f[2]], cf, eps)) {
          ++facets_on_cube;
          break;
        }
    }
    if (facets_on_cube >= 3) report.corner_tets.push_back(static_cast<int>(ti));
  }

  for (int cf = 0; cf < 6; ++cf) {
    auto& info = report.faces[cf];
    info.name = face_name(cf);
    info.triangle_count = static_cast<int>(per_face[cf].size());
    if (info.triangle_count == 2) {
      const Tri& a = per_face[cf][0];
      const Tri& b = per_face[cf][1];
      std::vector<int> shared;
      for (int x : a)
        if (std::count(b.begin(), b.end(), x)) shared.push_back(x);
      if (shared.size() == 2) {
        // Two right triangles meeting along the shared edge (their common
        // hypotenuse): the angle opposite the shared edge must be right.
        const auto right_at_apex = [&](const Tri& tri) {
          int apex = -1;
          for (int x : tri)
            if (x != shared[0] && x != shared[1]) apex = x;
          const Vec3 e1 = mesh.vertices[shared[0]] - mesh.vertices[apex];
          const Vec3 e2 = mesh.vertices[shared[1]] - mesh.vertices[apex];
          return std::abs(e1.dot(e2)) <= tol.rel * e1.norm() * e2.norm() + tol.abs;
        };
        info.two_right_triangles = right_at_apex(a) && right_at_apex(b);
      }
    }
  }

  // Lower bounds recomputed from the per-face minimums; a tetrahedron can
  // contribute at most two surface facets.
  report.bound_3wc = (6 * 3 + 1) / 2;
  report.bound_2wc = (6 * 8 + 1) / 2;
  report.meets_3wc_bound = report.cells >= report.bound_3wc;
  report.meets_2wc_bound = report.cells >= report.bound_2wc;
  return report;
}

std::string render_cube_audit(const CubeAuditReport& report, ReportFormat format) {
  std::ostringstream out;
  if (format == ReportFormat::Records) {
    json h;
    h["format"] = "wct-records";
    h["version"] = 1;
    h["command"] = "cube-audit";
    h["tol_rel"] = report.tol.rel;
    h["tol_abs"] = report.tol.abs;
    h["seed"] = report.seed;
    out << h.dump() << '\n';
    for (int t : report.corner_tets) {
      json j;
      j["kind"] = "corner-tet";
      j["cell"] = t;
      out << j.dump() << '\n';
    }
    for (const auto& f : report.faces) {
      json j;
      j["kind"] = "face";
      j["face"] = f.name;
      j["triangles"] = f.triangle_count;
      j["two_right_triangles"] = f.two_right_triangles;
      j["meets_3wc_min"] = f.triangle_count >= 3;
      j["meets_2wc_min"] = f.triangle_count >= 8;
      out << j.dump() << '\n';
    }
    json s;
    s["kind"] = "summary";
    s["cells"] = report.cells;
    s["corner_tets"] = report.corner_tets.size();
    s["bound_3wc"] = report.bound_3wc;
    s["bound_2wc"] = report.bound_2wc;
    s["meets_3wc_bound"] = report.meets_3wc_bound;
    s["meets_2wc_bound"] = report.meets_2wc_bound;
    s["findings"] = report.findings();
    out << s.dump() << '\n';
    return out.str();
  }

  out << "cube-audit: " << report.cells << " cell(s)\n";
  if (!report.corner_tets.empty()) {
    out << "  corner tets (cannot be well-centered):";
    for (int t : report.corner_tets) out << ' ' << t;
    out << '\n';
  }
  for (const auto& f : report.faces) {
    out << "  face " << f.name << ": " << f.triangle_count << " triangle(s)";
    if (f.two_right_triangles) out << "  [two right triangles along a diagonal]";
    if (f.triangle_count < 3) out << "  [below 3-WC minimum of 3]";
    if (f.triangle_count < 8) out << "  [below 2-WC minimum of 8]";
    out << '\n';
  }
  out << "  lower bounds: " << report.bound_3wc << " tets (3-WC), "
      << report.bound_2wc << " tets (2-WC); mesh "
      << (report.meets_3wc_bound ? "meets" : "misses") << " 3-WC bound, "
      << (report.meets_2wc_bound ? "meets" : "misses") << " 2-WC bound\n";
  out << "summary: " << report.findings() << " finding(s)\n";
  return out.str();
}

}  // namespace wct
