#include "embedding.hpp"

#include <algorithm>
#include <cmath>
#include <random>
#include <set>

namespace wct {

const char* to_string(Wc3Status s) {
  switch (s) {
    case Wc3Status::Blocked: return "BLOCKED";
    case Wc3Status::Unknown: return "UNKNOWN";
    case Wc3Status::Realized: return "REALIZED";
  }
  return "?";
}

const char* to_string(Wc2Status s) {
  switch (s) {
    case Wc2Status::Blocked: return "BLOCKED";
    case Wc2Status::Unknown: return "UNKNOWN";
    case Wc2Status::Feasible: return "FEASIBLE";
  }
  return "?";
}

namespace {

std::vector<std::array<int, 3>> oriented_triangles(const SphereTriangulation& link) {
  const RotationSystem rot(link);
  // Recover one consistent orientation from the rotation system.
  std::vector<std::array<int, 3>> out;
  for (const auto& t : link.triangles) {
    // Orientation of (a,b,c): c == next(a, b) in the chosen rotation.
    std::array<int, 3> o = t;
    if (rot.next(o[0], o[1]) != o[2]) std::swap(o[1], o[2]);
    out.push_back(o);
  }
  return out;
}

double solid_angle(const Vec3& a, const Vec3& b, const Vec3& c) {
  // Van Oosterom-Strackee.
  const double num = a.dot(b.cross(c));
  const double den = a.norm() * b.norm() * c.norm() + a.dot(b) * c.norm() +
                     b.dot(c) * a.norm() + c.dot(a) * b.norm();
  return 2.0 * std::atan2(num, den);
}

std::vector<Vec3> random_unit_vectors(int n, std::mt19937_64& rng) {
  std::normal_distribution<double> gauss(0.0, 1.0);
  std::vector<Vec3> out(n);
  for (auto& v : out) {
    do {
      v = Vec3(gauss(rng), gauss(rng), gauss(rng));
    } while (v.norm() < 1e-6);
    v.normalize();
  }
  return out;
}

std::mt19937_64 restart_rng(unsigned long long seed, int restart) {
  std::seed_seq seq{static_cast<unsigned long long>(0x77c7u), seed,
                    static_cast<unsigned long long>(restart)};
  return std::mt19937_64(seq);
}

// Tutte spring layout with triangles[0] pinned as the outer face, lifted to
// the sphere by inverse stereographic projection.  For a valid triangulation
// the planar drawing is an embedding, so the lift is untangled; it makes a
// far better optimizer start than random directions.
std::vector<Vec3> tutte_spherical_layout(const SphereTriangulation& link) {
  const int m = link.num_vertices;
  const auto& outer = link.triangles.front();
  std::vector<Eigen::Vector2d> plane(m, Eigen::Vector2d::Zero());
  std::vector<char> pinned(m, 0);
  const double outer_radius = 3.0;
  for (int i = 0; i < 3; ++i) {
    const double angle = M_PI / 2.0 + 2.0 * M_PI * i / 3.0;
    plane[outer[i]] =
        outer_radius * Eigen::Vector2d(std::cos(angle), std::sin(angle));
    pinned[outer[i]] = 1;
  }

  std::vector<std::set<int>> nbrs(m);
  for (const auto& t : link.triangles)
    for (int i = 0; i < 3; ++i)
      for (int j = 0; j < 3; ++j)
        if (i != j) nbrs[t[i]].insert(t[j]);

  std::vector<int> free_ids;
  std::vector<int> slot(m, -1);
  for (int v = 0; v < m; ++v)
    if (!pinned[v]) {
      slot[v] = static_cast<int>(free_ids.size());
      free_ids.push_back(v);
    }
  const int nf = static_cast<int>(free_ids.size());
  Eigen::MatrixXd laplacian = Eigen::MatrixXd::Zero(nf, nf);
  Eigen::MatrixXd rhs = Eigen::MatrixXd::Zero(nf, 2);
  for (int r = 0; r < nf; ++r) {
    const int v = free_ids[r];
    laplacian(r, r) = static_cast<double>(nbrs[v].size());
    for (int w : nbrs[v]) {
      if (pinned[w])
        rhs.row(r) += plane[w].transpose();
      else
        laplacian(r, slot[w]) -= 1.0;
    }
  }
  if (nf > 0) {
    const Eigen::MatrixXd solution = laplacian.partialPivLu().solve(rhs);
    for (int r = 0; r < nf; ++r) plane[free_ids[r]] = solution.row(r);
  }

  std::vector<Vec3> out(m);
  for (int v = 0; v < m; ++v) {
    const double norm2 = plane[v].squaredNorm();
    out[v] = Vec3(2.0 * plane[v](0), 2.0 * plane[v](1), norm2 - 1.0) / (norm2 + 1.0);
  }
  return out;
}

std::vector<Vec3> restart_init(const SphereTriangulation& link, int restart,
                               std::mt19937_64& gen) {
  if (restart == 0) return tutte_spherical_layout(link);
  if (restart % 2 == 1) {
    // jittered layout
    std::normal_distribution<double> gauss(0.0, 0.15 + 0.1 * (restart % 5));
    std::vector<Vec3> x = tutte_spherical_layout(link);
    for (auto& v : x) {
      v += Vec3(gauss(gen), gauss(gen), gauss(gen));
      v.normalize();
    }
    return x;
  }
  return random_unit_vectors(link.num_vertices, gen);
}

}  // namespace

bool star_embedding_ok(const SphereTriangulation& link,
                       const std::vector<Vec3>& pos) {
  const auto tris = oriented_triangles(link);
  int sign = 0;
  double total = 0.0;
  for (const auto& t : tris) {
    Eigen::Matrix3d m;
    m.col(0) = pos[t[0]];
    m.col(1) = pos[t[1]];
    m.col(2) = pos[t[2]];
    const double det = m.determinant();
    const int s = det > 0 ? 1 : (det < 0 ? -1 : 0);
    if (s == 0) return false;
    if (sign == 0) sign = s;
    if (s != sign) return false;
    total += solid_angle(pos[t[0]], pos[t[1]], pos[t[2]]);
  }
  const double degree = total / (4.0 * M_PI);
  return std::abs(std::abs(degree) - 1.0) < 1e-6;
}

std::optional<std::vector<Vec3>> acute_link_embedding(
    const SphereTriangulation& link, const EmbeddingOptions& opts) {
  require_valid(link);
  const int m = link.num_vertices;
  const auto edge_pairs = edges_of(link);
  std::vector<std::pair<int, int>> nonadjacent;
  {
    std::set<std::pair<int, int>> eset(edge_pairs.begin(), edge_pairs.end());
    for (int i = 0; i < m; ++i)
      for (int j = i + 1; j < m; ++j)
        if (!eset.count({i, j})) nonadjacent.push_back({i, j});
  }
  const double spread = 0.9;  // keep non-neighbors from collapsing together
  const double spread_weight = 0.25;
  // Aim past the required margin so success triggers before the penalty
  // fully converges.
  const double target = opts.margin + 0.05;

  const auto penalty = [&](const std::vector<Vec3>& x) {
    double f = 0.0;
    for (const auto& [i, j] : edge_pairs) {
      const double gap = target - x[i].dot(x[j]);
      if (gap > 0.0) f += gap * gap;
    }
    for (const auto& [i, j] : nonadjacent) {
      const double over = x[i].dot(x[j]) - spread;
      if (over > 0.0) f += spread_weight * over * over;
    }
    return f;
  };

  const auto success = [&](const std::vector<Vec3>& x) {
    for (const auto& [i, j] : edge_pairs)
      if (x[i].dot(x[j]) < opts.margin) return false;
    return star_embedding_ok(link, x);
  };

  for (int restart = 0; restart < opts.restarts; ++restart) {
    auto rng = restart_rng(opts.seed, restart);
    std::vector<Vec3> x = restart_init(link, restart, rng);
    double f = penalty(x);
    double step = 0.5;
    for (int it = 0; it < opts.max_iterations; ++it) {
      if (success(x)) return x;
      std::vector<Vec3> grad(m, Vec3::Zero());
      for (const auto& [i, j] : edge_pairs) {
        const double gap = target - x[i].dot(x[j]);
        if (gap > 0.0) {
          grad[i] += -2.0 * gap * x[j];
          grad[j] += -2.0 * gap * x[i];
        }
      }
      for (const auto& [i, j] : nonadjacent) {
        const double over = x[i].dot(x[j]) - spread;
        if (over > 0.0) {
          grad[i] += 2.0 * spread_weight * over * x[j];
          grad[j] += 2.0 * spread_weight * over * x[i];
        }
      }
      double gnorm2 = 0.0;
      for (int i = 0; i < m; ++i) {
        grad[i] -= grad[i].dot(x[i]) * x[i];  // tangent projection
        gnorm2 += grad[i].squaredNorm();
      }
      if (gnorm2 < 1e-18) break;
      // backtracking line search
      double s = step;
      std::vector<Vec3> trial(m);
      double ftrial = f;
      for (int bt = 0; bt < 40; ++bt) {
        for (int i = 0; i < m; ++i) trial[i] = (x[i] - s * grad[i]).normalized();
        ftrial = penalty(trial);
        if (ftrial <= f - 0.25 * s * gnorm2) break;
        s *= 0.5;
      }
      if (ftrial >= f) break;
      x = trial;
      f = ftrial;
      step = std::min(1.0, s * 2.0);
    }
    if (success(x)) return x;
  }
  return std::nullopt;
}

namespace {

double wc3_penalty(const SphereTriangulation& link, const std::vector<Vec3>& x,
                   double margin) {
  double f = 0.0;
  for (const auto& t : link.triangles) {
    std::vector<Vector> vs(4);
    vs[0] = Vector::Zero(3);
    for (int i = 0; i < 3; ++i) vs[i + 1] = x[t[i]];
    const CircumData cd = circumcenter(make_simplex(vs));
    if (cd.degenerate) {
      f += 10.0;
      continue;
    }
    for (double a : cd.barycentric) {
      const double gap = margin - a;
      if (gap > 0.0) f += gap * gap;
    }
  }
  return f;
}

}  // namespace

std::optional<std::vector<Vec3>> wc3_link_embedding(
    const SphereTriangulation& link, const EmbeddingOptions& opts) {
  require_valid(link);
  const int m = link.num_vertices;
  const Tolerance tol;

  const auto success = [&](const std::vector<Vec3>& x) {
    for (const auto& t : link.triangles) {
      std::vector<Vector> vs(4);
      vs[0] = Vector::Zero(3);
      for (int i = 0; i < 3; ++i) vs[i + 1] = x[t[i]];
      const CircumData cd = circumcenter(make_simplex(vs), tol);
      if (cd.degenerate ||
          classify_margin(*std::min_element(cd.barycentric.begin(),
                                            cd.barycentric.end()),
                          tol) != WcStatus::Satisfied)
        return false;
    }
    return star_embedding_ok(link, x);
  };

  for (int restart = 0; restart < opts.restarts; ++restart) {
    auto rng = restart_rng(opts.seed * 2654435761ull + 17, restart);
    std::vector<Vec3> x = restart_init(link, restart, rng);
    double f = wc3_penalty(link, x, opts.margin);
    double step = 0.1;
    const double h = 1e-6;
    for (int it = 0; it < opts.max_iterations; ++it) {
      if (success(x)) return x;
      // forward-difference gradient; the objective is cheap at these sizes
      std::vector<Vec3> grad(m);
      double gnorm2 = 0.0;
      for (int i = 0; i < m; ++i) {
        for (int a = 0; a < 3; ++a) {
          std::vector<Vec3> xp = x;
          xp[i](a) += h;
          grad[i](a) = (wc3_penalty(link, xp, opts.margin) - f) / h;
        }
        gnorm2 += grad[i].squaredNorm();
      }
      if (gnorm2 < 1e-18) break;
      double s = step;
      std::vector<Vec3> trial(m);
      double ftrial = f;
      for (int bt = 0; bt < 30; ++bt) {
        for (int i = 0; i < m; ++i) trial[i] = x[i] - s * grad[i];
        ftrial = wc3_penalty(link, trial, opts.margin);
        if (ftrial < f) break;
        s *= 0.5;
      }
      if (ftrial >= f) break;
      x = trial;
      f = ftrial;
      step = std::min(0.5, s * 2.0);
    }
    if (success(x)) return x;
  }
  return std::nullopt;
}

LinkClassification classify_link(const SphereTriangulation& link,
                                 const ClassifyOptions& opts) {
  require_valid(link);
  LinkClassification out;
  out.link = link;
  out.degrees = degree_list(link);
  out.canonical = canonical_form(link);

  out.wc3_certificate = search_certificate(link, opts.limits);
  if (out.wc3_certificate) {
    out.wc3 = Wc3Status::Blocked;
  } else if (opts.attempt_witnesses) {
    out.wc3_witness = wc3_link_embedding(link, opts.embedding);
    out.wc3 = out.wc3_witness ? Wc3Status::Realized : Wc3Status::Unknown;
  }

  out.wc2_degree_blocked = nminus3_blocked(link);
  if (out.wc2_degree_blocked) {
    out.wc2 = Wc2Status::Blocked;
  } else if (opts.attempt_witnesses) {
    out.wc2_embedding = acute_link_embedding(link, opts.embedding);
    out.wc2 = out.wc2_embedding ? Wc2Status::Feasible : Wc2Status::Unknown;
  }
  return out;
}

}  // namespace wct
