#include "predicates.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <limits>

namespace wct {

const char* to_string(WcStatus s) {
  switch (s) {
    case WcStatus::Satisfied: return "SATISFIED";
    case WcStatus::Violated: return "VIOLATED";
    case WcStatus::Boundary: return "BOUNDARY";
  }
  return "?";
}

WcStatus classify_margin(double margin, const Tolerance& tol) {
  if (margin > tol.rel) return WcStatus::Satisfied;
  if (margin < -tol.rel) return WcStatus::Violated;
  return WcStatus::Boundary;
}

namespace {

WcVerdict from_margin(double margin, const Tolerance& tol) {
  return {classify_margin(margin, tol), margin, {}};
}

CircumData circum_or_throw(const Simplex& s, const Tolerance& tol) {
  CircumData cd = circumcenter(s, tol);
  if (cd.degenerate) throw Error(ErrorCode::Degenerate, "degenerate simplex");
  return cd;
}

// Enumerates (k+1)-subsets of 0..n.
void for_each_face(int n, int k, const std::function<void(const std::vector<int>&)>& fn) {
  std::vector<int> idx(k + 1);
  for (int i = 0; i <= k; ++i) idx[i] = i;
  while (true) {
    fn(idx);
    int pos = k;
    while (pos >= 0 && idx[pos] == n - k + pos) --pos;
    if (pos < 0) break;
    ++idx[pos];
    for (int i = pos + 1; i <= k; ++i) idx[i] = idx[i - 1] + 1;
  }
}

std::string face_label(const std::vector<int>& idx) {
  std::string out = "face(";
  for (size_t i = 0; i < idx.size(); ++i) {
    if (i) out += ',';
    out += std::to_string(idx[i]);
  }
  out += ')';
  return out;
}

}  // namespace

WcVerdict is_n_well_centered(const Simplex& s, const Tolerance& tol) {
  const CircumData cd = circum_or_throw(s, tol);
  WcVerdict v;
  v.margin = *std::min_element(cd.barycentric.begin(), cd.barycentric.end());
  v.status = classify_margin(v.margin, tol);
  for (int i = 0; i <= s.dim(); ++i)
    v.detail.push_back({"alpha[" + std::to_string(i) + "]",
                        classify_margin(cd.barycentric[i], tol),
                        cd.barycentric[i]});
  return v;
}

WcVerdict is_k_well_centered(const Simplex& s, int k, const Tolerance& tol) {
  const int n = s.dim();
  if (k < 1 || k > n)
    throw Error(ErrorCode::InvalidArgument, "k out of range 1..dim");
  WcVerdict v;
  v.margin = std::numeric_limits<double>::infinity();
  for_each_face(n, k, [&](const std::vector<int>& idx) {
    const WcVerdict face = is_n_well_centered(face_of(s, idx), tol);
    v.detail.push_back({face_label(idx), face.status, face.margin});
    v.margin = std::min(v.margin, face.margin);
  });
  v.status = classify_margin(v.margin, tol);
  return v;
}

WcVerdict is_completely_well_centered(const Simplex& s, const Tolerance& tol) {
  WcVerdict v;
  v.margin = std::numeric_limits<double>::infinity();
  for (int k = 1; k <= s.dim(); ++k) {
    const WcVerdict sub = is_k_well_centered(s, k, tol);
    v.detail.push_back({"k=" + std::to_string(k), sub.status, sub.margin});
    v.margin = std::min(v.margin, sub.margin);
  }
  v.status = classify_margin(v.margin, tol);
  return v;
}

WcVerdict equatorial_ball_test(const Simplex& s, const Tolerance& tol) {
  const int n = s.dim();
  if (n < 1) throw Error(ErrorCode::InvalidArgument, "need dim >= 1");
  WcVerdict v;
  v.margin = std::numeric_limits<double>::infinity();
  for (int i = 0; i <= n; ++i) {
    std::vector<int> rest;
    for (int j = 0; j <= n; ++j)
      if (j != i) rest.push_back(j);
    const CircumData cd = circum_or_throw(face_of(s, rest), tol);
    const double dist = (s.vertices[i] - cd.center).norm();
    const double margin = (dist - cd.radius) / std::max(cd.radius, tol.abs);
    v.detail.push_back({"vertex[" + std::to_string(i) + "]",
                        classify_margin(margin, tol), margin});
    v.margin = std::min(v.margin, margin);
  }
  v.status = classify_margin(v.margin, tol);
  return v;
}

WcVerdict cylinder_condition(const Simplex& facet, const Vector& apex,
                             const Tolerance& tol) {
  const CircumData cd = circum_or_throw(facet, tol);
  const Vector p = project_to_aff(apex, facet, tol);
  const double dist = (p - cd.center).norm();
  return from_margin((cd.radius - dist) / std::max(cd.radius, tol.abs), tol);
}

WcVerdict prism_condition(const Simplex& facet, const Vector& apex,
                          const Tolerance& tol) {
  const CircumData cd = circum_or_throw(facet, tol);

  const WcVerdict wc = facet.dim() >= 1
                           ? is_n_well_centered(facet, tol)
                           : WcVerdict{WcStatus::Satisfied, 1.0, {}};

  const double dist = (apex - cd.center).norm();
  const double outside = (dist - cd.radius) / std::max(cd.radius, tol.abs);

  const Vector reflected = 2.0 * cd.center - project_to_aff(apex, facet, tol);
  const std::vector<double> bary = barycentric_in(reflected, facet, tol);
  const double interior = *std::min_element(bary.begin(), bary.end());

  WcVerdict v;
  v.detail = {
      {"facet-well-centered", wc.status, wc.margin},
      {"outside-equatorial-ball", classify_margin(outside, tol), outside},
      {"reflection-interior", classify_margin(interior, tol), interior},
  };
  v.margin = std::min({wc.margin, outside, interior});
  v.status = classify_margin(v.margin, tol);
  return v;
}

WcVerdict polynomial_region_test(const Simplex& facet, const Vector& apex,
                                 const Tolerance& tol) {
  const CircumData cd = circum_or_throw(facet, tol);
  if (dist_to_aff(apex, facet, tol) < tol.rel * std::max(cd.radius, tol.abs))
    throw Error(ErrorCode::Precondition, "apex in facet plane");

  const int n = facet.dim() + 1;
  const double da = det_a(facet, apex);
  WcVerdict v;
  v.margin = std::numeric_limits<double>::infinity();
  for (int i = 0; i <= n; ++i) {
    const double dai = det_ai(facet, apex, i);
    const double margin = -dai / std::max(std::abs(da), tol.abs);
    v.detail.push_back({"det_A" + std::to_string(i),
                        classify_margin(margin, tol), margin});
    v.margin = std::min(v.margin, margin);
  }
  v.status = classify_margin(v.margin, tol);
  return v;
}

WcVerdict isosceles_cone_test(const Vector& apex, const Simplex& facet,
                              const Tolerance& tol) {
  double r = 0.0;
  for (const Vector& v : facet.vertices) r += (v - apex).norm();
  r /= static_cast<double>(facet.vertices.size());
  if (r <= tol.abs) throw Error(ErrorCode::Degenerate, "apex coincides with facet");
  for (const Vector& v : facet.vertices)
    if (std::abs((v - apex).norm() - r) > tol.rel * r)
      throw Error(ErrorCode::Precondition, "not isosceles");

  const WcVerdict wc = facet.dim() >= 1
                           ? is_n_well_centered(facet, tol)
                           : WcVerdict{WcStatus::Satisfied, 1.0, {}};
  // The height threshold is stated for a unit cone; dividing by r rescales it.
  const double z = dist_to_aff(apex, facet, tol);
  const double height = (z - r / std::sqrt(2.0)) / r;

  WcVerdict v;
  v.detail = {
      {"facet-well-centered", wc.status, wc.margin},
      {"height-above-threshold", classify_margin(height, tol), height},
  };
  v.margin = std::min(wc.margin, height);
  v.status = classify_margin(v.margin, tol);

  if (v.status == WcStatus::Satisfied) {
    std::vector<Vector> cone_vertices = facet.vertices;
    cone_vertices.push_back(apex);
    const WcVerdict cone = is_n_well_centered(make_simplex(cone_vertices), tol);
    v.detail.push_back({"cone-well-centered", cone.status, cone.margin});
    if (cone.status != WcStatus::Satisfied) {
      v.status = WcStatus::Boundary;
      v.margin = std::min(v.margin, cone.margin);
    }
  }
  return v;
}

Vector RegionGrid::node(int ix, int iy, int iz) const {
  Vector p(3);
  const std::array<int, 3> idx{ix, iy, iz};
  for (int a = 0; a < 3; ++a) {
    const double lo = bbox[2 * a], hi = bbox[2 * a + 1];
    p(a) = lo + (hi - lo) * idx[a] / (resolution[a] - 1);
  }
  return p;
}

RegionGrid sample_region(const Simplex& facet, const std::array<double, 6>& bbox,
                         const std::array<int, 3>& resolution) {
  if (facet.dim() != 2 || facet.ambient_dim() != 3)
    throw Error(ErrorCode::InvalidArgument,
                "region sampling expects a triangle facet in ambient dim 3");
  circum_or_throw(facet, {});
  for (int a = 0; a < 3; ++a) {
    if (resolution[a] < 2)
      throw Error(ErrorCode::InvalidArgument, "resolution must be >= 2 per axis");
    if (!(bbox[2 * a] < bbox[2 * a + 1]))
      throw Error(ErrorCode::InvalidArgument, "empty bbox");
  }

  RegionGrid grid;
  grid.bbox = bbox;
  grid.resolution = resolution;
  grid.facet = facet;
  grid.values.resize(static_cast<size_t>(resolution[0]) * resolution[1] *
                     resolution[2]);
  size_t at = 0;
  for (int iz = 0; iz < resolution[2]; ++iz)
    for (int iy = 0; iy < resolution[1]; ++iy)
      for (int ix = 0; ix < resolution[0]; ++ix, ++at) {
        const Vector u = grid.node(ix, iy, iz);
        double worst = -std::numeric_limits<double>::infinity();
        for (int i = 0; i <= 3; ++i)
          worst = std::max(worst, det_ai(facet, u, i));
        grid.values[at] = worst;
      }
  return grid;
}

}  // namespace wct
