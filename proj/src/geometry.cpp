#include "geometry.hpp"

#include <cmath>

namespace wct {

Simplex make_simplex(std::vector<Vector> vertices) {
  if (vertices.empty())
    throw Error(ErrorCode::InvalidArgument, "simplex needs at least one vertex");
  const int m = static_cast<int>(vertices.front().size());
  const int n = static_cast<int>(vertices.size()) - 1;
  if (m < n)
    throw Error(ErrorCode::InvalidArgument,
                "ambient dimension smaller than simplex dimension");
  for (const Vector& v : vertices) {
    if (static_cast<int>(v.size()) != m)
      throw Error(ErrorCode::InvalidArgument, "mixed ambient dimensions");
    if (!v.allFinite())
      throw Error(ErrorCode::InvalidArgument, "non-finite vertex coordinate");
  }
  Simplex s;
  s.vertices = std::move(vertices);
  return s;
}

Simplex simplex_from(const std::vector<std::vector<double>>& coords) {
  std::vector<Vector> vs;
  vs.reserve(coords.size());
  for (const auto& c : coords)
    vs.push_back(Eigen::Map<const Vector>(c.data(), c.size()));
  return make_simplex(std::move(vs));
}

Simplex face_of(const Simplex& s, const std::vector<int>& indices) {
  std::vector<Vector> vs;
  vs.reserve(indices.size());
  for (int i : indices) {
    if (i < 0 || i > s.dim())
      throw Error(ErrorCode::InvalidArgument, "face index out of range");
    vs.push_back(s.vertices[i]);
  }
  return make_simplex(std::move(vs));
}

double diameter(const Simplex& s) {
  double d = 0.0;
  for (size_t i = 0; i < s.vertices.size(); ++i)
    for (size_t j = i + 1; j < s.vertices.size(); ++j)
      d = std::max(d, (s.vertices[i] - s.vertices[j]).norm());
  return d;
}

namespace {

// Columns are the translated edge vectors v_i - v_0.
Eigen::MatrixXd edge_matrix(const Simplex& s) {
  const int n = s.dim();
  Eigen::MatrixXd w(s.ambient_dim(), n);
  for (int i = 0; i < n; ++i) w.col(i) = s.vertices[i + 1] - s.vertices[0];
  return w;
}

}  // namespace

CircumData circumcenter(const Simplex& s, const Tolerance& tol) {
  const int n = s.dim();
  CircumData out;
  if (n == 0) {
    out.barycentric = {1.0};
    out.center = s.vertices[0];
    out.radius = 0.0;
    out.lambda = -s.vertices[0].squaredNorm();
    return out;
  }

  const Eigen::MatrixXd w = edge_matrix(s);
  const Eigen::MatrixXd gram = w.transpose() * w;

  const double diam = diameter(s);
  // det(gram) = det(V~)^2; scale test keeps the flag similarity invariant.
  const double vol_sq = std::max(gram.determinant(), 0.0);
  if (std::sqrt(vol_sq) < tol.rel * std::pow(diam, n) || diam == 0.0) {
    out.degenerate = true;
    out.center = s.vertices[0];
    out.barycentric.assign(n + 1, 0.0);
    return out;
  }

  Eigen::VectorXd rhs(n);
  for (int i = 0; i < n; ++i) rhs(i) = gram(i, i);
  const Eigen::VectorXd alpha_tail = (2.0 * gram).partialPivLu().solve(rhs);

  out.barycentric.resize(n + 1);
  out.barycentric[0] = 1.0 - alpha_tail.sum();
  for (int i = 0; i < n; ++i) out.barycentric[i + 1] = alpha_tail(i);
  out.center = s.vertices[0] + w * alpha_tail;
  out.radius = (out.center - s.vertices[0]).norm();
  out.lambda = out.radius * out.radius - out.center.squaredNorm();
  return out;
}

namespace {

// Builds the (n+2)x(n+2) system matrix for cone(apex, facet) after the
// translate-by-(-v0) simplification (the determinant is unchanged by it)
// and optionally swaps in the right-hand side at `rhs_column`.
Eigen::MatrixXd cone_system_matrix(const Simplex& facet, const Vector& apex,
                                   int rhs_column) {
  const int n = facet.dim() + 1;
  if (static_cast<int>(apex.size()) != facet.ambient_dim())
    throw Error(ErrorCode::InvalidArgument, "apex ambient dimension mismatch");

  std::vector<Vector> w(n + 1);
  w[0] = Vector::Zero(facet.ambient_dim());
  for (int i = 1; i < n; ++i) w[i] = facet.vertices[i] - facet.vertices[0];
  w[n] = apex - facet.vertices[0];

  Eigen::MatrixXd a = Eigen::MatrixXd::Zero(n + 2, n + 2);
  for (int r = 0; r <= n; ++r) {
    for (int c = 0; c <= n; ++c) a(r, c) = 2.0 * w[r].dot(w[c]);
    a(r, n + 1) = 1.0;
    a(n + 1, r) = 1.0;
  }
  if (rhs_column >= 0) {
    for (int r = 0; r <= n; ++r) a(r, rhs_column) = w[r].squaredNorm();
    a(n + 1, rhs_column) = 1.0;
  }
  return a;
}

}  // namespace

double det_a(const Simplex& facet, const Vector& apex) {
  return cone_system_matrix(facet, apex, -1).determinant();
}

double det_ai(const Simplex& facet, const Vector& apex, int i) {
  const int n = facet.dim() + 1;
  if (i < 0 || i > n)
    throw Error(ErrorCode::InvalidArgument, "det_ai index out of range");
  return cone_system_matrix(facet, apex, i).determinant();
}

namespace {

// Orthonormal basis of span{v_i - v_0}; throws when rank-deficient.
Eigen::MatrixXd aff_basis(const Simplex& s, const Tolerance& tol) {
  const int n = s.dim();
  const Eigen::MatrixXd w = edge_matrix(s);
  Eigen::ColPivHouseholderQR<Eigen::MatrixXd> qr(w);
  qr.setThreshold(tol.rel);
  if (qr.rank() < n)
    throw Error(ErrorCode::Degenerate, "degenerate affine hull");
  Eigen::MatrixXd q =
      qr.householderQ() * Eigen::MatrixXd::Identity(w.rows(), n);
  return q;
}

}  // namespace

Vector project_to_aff(const Vector& point, const Simplex& s,
                      const Tolerance& tol) {
  if (s.dim() == 0) return s.vertices[0];
  const Eigen::MatrixXd q = aff_basis(s, tol);
  const Vector d = point - s.vertices[0];
  return s.vertices[0] + q * (q.transpose() * d);
}

double dist_to_aff(const Vector& point, const Simplex& s,
                   const Tolerance& tol) {
  return (point - project_to_aff(point, s, tol)).norm();
}

std::vector<double> barycentric_in(const Vector& point, const Simplex& s,
                                   const Tolerance& tol) {
  const int n = s.dim();
  if (n == 0) return {1.0};
  const Eigen::MatrixXd w = edge_matrix(s);
  Eigen::ColPivHouseholderQR<Eigen::MatrixXd> qr(w);
  qr.setThreshold(tol.rel);
  if (qr.rank() < n)
    throw Error(ErrorCode::Degenerate, "degenerate affine hull");
  const Eigen::VectorXd tail = qr.solve(point - s.vertices[0]);
  std::vector<double> b(n + 1);
  b[0] = 1.0 - tail.sum();
  for (int i = 0; i < n; ++i) b[i + 1] = tail(i);
  return b;
}

double signed_volume(const Simplex& s) {
  const int n = s.dim();
  if (s.ambient_dim() != n)
    throw Error(ErrorCode::InvalidArgument,
                "signed_volume requires ambient dim == simplex dim");
  if (n == 0) return 1.0;
  const Eigen::MatrixXd w = edge_matrix(s);
  double fact = 1.0;
  for (int i = 2; i <= n; ++i) fact *= i;
  return w.determinant() / fact;
}

}  // namespace wct
