#pragma once

#include <Eigen/Dense>

#include <stdexcept>
#include <string>
#include <vector>

namespace wct {

using Vector = Eigen::VectorXd;

/// Error taxonomy shared by the whole library; the C API maps these
/// one-to-one onto status codes.
enum class ErrorCode {
  InvalidArgument,
  Degenerate,
  Precondition,
  Parse,
  Io,
  SearchCap,
  Internal,
};

class Error : public std::runtime_error {
public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(what), code_(code) {}
  ErrorCode code() const { return code_; }

private:
  ErrorCode code_;
};

/// Tolerance contract for all strict inequalities.  Normalized
/// (dimensionless) margins are compared against +-rel; abs is the floor
/// used to guard divisions by near-zero scales.
struct Tolerance {
  double rel = 1e-9;
  double abs = 1e-12;
};

/// An n-simplex [v0 v1 ... vn] with vertices in ambient dimension m >= n.
struct Simplex {
  std::vector<Vector> vertices;

  int dim() const { return static_cast<int>(vertices.size()) - 1; }
  int ambient_dim() const {
    return vertices.empty() ? 0 : static_cast<int>(vertices.front().size());
  }
};

/// Validates vertex count/ambient/finiteness and returns the simplex.
Simplex make_simplex(std::vector<Vector> vertices);

/// Convenience: simplex from an initializer list of coordinate lists.
Simplex simplex_from(const std::vector<std::vector<double>>& coords);

/// The face spanned by the given vertex indices.
Simplex face_of(const Simplex& s, const std::vector<int>& indices);

/// Circumcenter data.  barycentric holds alpha_0..alpha_n (sums to 1),
/// lambda = R^2 - |c|^2 for the untranslated system.
struct CircumData {
  std::vector<double> barycentric;
  double lambda = 0.0;
  Vector center;
  double radius = 0.0;
  bool degenerate = false;
};

double diameter(const Simplex& s);

/// Solves the reduced n x n Gram system B = 2 W^T W (first vertex moved to
/// the origin) with partial pivoting; lambda is reconstructed afterwards.
/// Flags degenerate when |det(V~)| < tol.rel * diam^n.
CircumData circumcenter(const Simplex& s, const Tolerance& tol = {});

/// Determinant of the (n+2)x(n+2) circumcenter system matrix A for the cone
/// simplex [facet..., apex].  Translation by -v0 is applied internally; the
/// determinant value is unchanged by it.  Always <= 0 (up to rounding);
/// strictly negative iff the cone simplex is nondegenerate.
double det_a(const Simplex& facet, const Vector& apex);

/// Determinant of A with column i replaced by the right-hand side b,
/// 0 <= i <= n.  As a function of the apex it is a polynomial of total
/// degree <= 3.
double det_ai(const Simplex& facet, const Vector& apex, int i);

/// Orthogonal projection onto aff(s) via an orthonormal basis of the edge
/// vectors.  Throws Degenerate for a degenerate affine hull.
Vector project_to_aff(const Vector& point, const Simplex& s,
                      const Tolerance& tol = {});

double dist_to_aff(const Vector& point, const Simplex& s,
                   const Tolerance& tol = {});

/// Affine (barycentric) coordinates of a point of aff(s) with respect to s.
std::vector<double> barycentric_in(const Vector& point, const Simplex& s,
                                   const Tolerance& tol = {});

/// Signed n-volume; requires ambient dim == simplex dim.
double signed_volume(const Simplex& s);

}  // namespace wct
