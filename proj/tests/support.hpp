#pragma once

#include "constructions.hpp"
#include "predicates.hpp"

#include <random>

namespace wct::testing {

inline std::mt19937_64 rng(unsigned long long seed) {
  return std::mt19937_64(seed);
}

inline Vector random_point(int ambient, std::mt19937_64& gen) {
  std::uniform_real_distribution<double> coord(-1.0, 1.0);
  Vector p(ambient);
  for (int i = 0; i < ambient; ++i) p(i) = coord(gen);
  return p;
}

/// Uniform vertices in [-1,1]^m, rejecting slivers so verdicts stay clear of
/// the tolerance band.
inline Simplex random_simplex(int dim, int ambient, std::mt19937_64& gen,
                              double min_quality = 1e-3) {
  while (true) {
    std::vector<Vector> vs;
    for (int i = 0; i <= dim; ++i) vs.push_back(random_point(ambient, gen));
    Simplex s = make_simplex(std::move(vs));
    const CircumData cd = circumcenter(s);
    if (cd.degenerate) continue;
    if (dim == ambient && std::abs(signed_volume(s)) <
                              min_quality * std::pow(diameter(s), dim))
      continue;
    return s;
  }
}

/// Random rotation (det +1) via QR of a Gaussian matrix.
inline Eigen::MatrixXd random_rotation(int n, std::mt19937_64& gen) {
  std::normal_distribution<double> gauss(0.0, 1.0);
  Eigen::MatrixXd a(n, n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) a(i, j) = gauss(gen);
  Eigen::HouseholderQR<Eigen::MatrixXd> qr(a);
  Eigen::MatrixXd q = qr.householderQ();
  if (q.determinant() < 0) q.col(0) = -q.col(0);
  return q;
}

inline Simplex transformed(const Simplex& s, const Eigen::MatrixXd& rot,
                           const Vector& shift, double scale = 1.0) {
  std::vector<Vector> vs;
  for (const auto& v : s.vertices) vs.push_back(scale * (rot * v) + shift);
  return make_simplex(std::move(vs));
}

/// Dot-product acuteness oracle for triangles (2-well-centered == acute).
inline bool triangle_acute_oracle(const Simplex& tri) {
  for (int i = 0; i < 3; ++i) {
    const Vector& a = tri.vertices[i];
    const Vector& b = tri.vertices[(i + 1) % 3];
    const Vector& c = tri.vertices[(i + 2) % 3];
    if ((b - a).dot(c - a) <= 0.0) return false;
  }
  return true;
}

/// Interior point of a simplex with strictly positive barycentrics.
inline Vector random_interior_point(const Simplex& s, std::mt19937_64& gen) {
  std::exponential_distribution<double> expo(1.0);
  std::vector<double> w(s.vertices.size());
  double total = 0.0;
  for (double& x : w) {
    x = expo(gen) + 1e-3;
    total += x;
  }
  Vector p = Vector::Zero(s.ambient_dim());
  for (size_t i = 0; i < w.size(); ++i) p += (w[i] / total) * s.vertices[i];
  return p;
}

}  // namespace wct::testing
