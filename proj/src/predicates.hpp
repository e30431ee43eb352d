#pragma once

#include "geometry.hpp"

#include <array>

namespace wct {

enum class WcStatus { Satisfied, Violated, Boundary };

const char* to_string(WcStatus s);

/// Three-valued verdict for one strict inequality of the theory:
/// margin > +tol.rel means strictly satisfied, margin < -tol.rel strictly
/// violated, anything in between is reported as BOUNDARY.  Margins are
/// dimensionless (quantities with length units are divided by the governing
/// circumradius before comparison).
struct DetailItem {
  std::string label;
  WcStatus status = WcStatus::Boundary;
  double margin = 0.0;
};

struct WcVerdict {
  WcStatus status = WcStatus::Boundary;
  double margin = 0.0;
  std::vector<DetailItem> detail;
};

WcStatus classify_margin(double margin, const Tolerance& tol);

/// Circumcenter strictly interior: min_i alpha_i > 0.
WcVerdict is_n_well_centered(const Simplex& s, const Tolerance& tol = {});

/// Every k-face is k-well-centered (k=1 is trivially satisfied).
WcVerdict is_k_well_centered(const Simplex& s, int k, const Tolerance& tol = {});

/// k-well-centered for every 1 <= k <= n.
WcVerdict is_completely_well_centered(const Simplex& s, const Tolerance& tol = {});

/// Every vertex lies strictly outside the equatorial ball of its opposite
/// facet.  Equivalent to is_n_well_centered.
WcVerdict equatorial_ball_test(const Simplex& s, const Tolerance& tol = {});

/// Necessary condition: the apex projects to the interior of the facet's
/// circumball.
WcVerdict cylinder_condition(const Simplex& facet, const Vector& apex,
                             const Tolerance& tol = {});

/// Sufficient condition: (a) facet well-centered, (b) apex outside the
/// equatorial ball, (c) reflection of P(apex) through c(facet) interior to
/// the facet.  detail reports a/b/c separately.
WcVerdict prism_condition(const Simplex& facet, const Vector& apex,
                          const Tolerance& tol = {});

/// Exact algebraic condition: max_i det(A_i) < 0.  The apex must not lie in
/// aff(facet) (open-halfspace precondition).
WcVerdict polynomial_region_test(const Simplex& facet, const Vector& apex,
                                 const Tolerance& tol = {});

/// For a cone whose base vertices are equidistant (= r) from the apex:
/// well-centered base plus base-plane distance > r/sqrt(2) imply the cone is
/// well-centered.  The implication is re-checked on the cone itself.
WcVerdict isosceles_cone_test(const Vector& apex, const Simplex& facet,
                              const Tolerance& tol = {});

/// Scalar field max_i det(A_i)(u) sampled on a regular grid; a node value is
/// negative exactly where cone(node, facet) is well-centered.
struct RegionGrid {
  std::array<double, 6> bbox{};       // xmin xmax ymin ymax zmin zmax
  std::array<int, 3> resolution{};    // nx ny nz (>= 2 each)
  Simplex facet;
  std::vector<double> values;         // ix fastest, iy next, iz slowest

  double at(int ix, int iy, int iz) const {
    return values[static_cast<size_t>(iz) * resolution[1] * resolution[0] +
                  static_cast<size_t>(iy) * resolution[0] + ix];
  }
  Vector node(int ix, int iy, int iz) const;
};

RegionGrid sample_region(const Simplex& facet, const std::array<double, 6>& bbox,
                         const std::array<int, 3>& resolution);

}  // namespace wct
