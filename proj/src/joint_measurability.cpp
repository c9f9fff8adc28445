#include "unsharp/joint_measurability.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

namespace unsharp {

const std::array<std::string, 4> kGridOutcomes = {"++", "+-", "-+", "--"};

std::string to_string(JMVerdict v) {
  switch (v) {
    case JMVerdict::JointlyMeasurable: return "JointlyMeasurable";
    case JMVerdict::NotJointlyMeasurable: return "NotJointlyMeasurable";
    case JMVerdict::Boundary: return "Boundary";
  }
  return "Boundary";
}

namespace {

double radicand_root(double v) {
  if (v < -tol::pos) throw std::invalid_argument("invalid effect: negative radicand");
  return std::sqrt(std::max(v, 0.0));
}

// sqrt(a0^2 - |a|^2) and sqrt((1-a0)^2 - |a|^2)
std::pair<double, double> sharpness_roots(const QubitEffect& q) {
  const double n2 = q.a.squaredNorm();
  return {radicand_root(q.a0 * q.a0 - n2), radicand_root((1.0 - q.a0) * (1.0 - q.a0) - n2)};
}

JMVerdict verdict_from_margin(double margin) {
  if (margin >= kBoundaryBand) return JMVerdict::JointlyMeasurable;
  if (margin <= -kBoundaryBand) return JMVerdict::NotJointlyMeasurable;
  return JMVerdict::Boundary;
}

void check_unbiased_length(const Vec3& v, const char* name) {
  if (!v.allFinite()) throw std::invalid_argument(std::string(name) + ": non-finite vector");
  if (v.norm() > 0.5 + tol::pos)
    throw std::invalid_argument(std::string(name) + ": |vector| > 1/2");
}

}  // namespace

double unsharpness(const QubitEffect& q) {
  const auto [u, v] = sharpness_roots(q);
  return u + v;
}

double bias(const QubitEffect& q) {
  const auto [u, v] = sharpness_roots(q);
  return u - v;
}

JMReport jm_closed_form(const QubitEffect& qa, const QubitEffect& qb) {
  const auto [ua, va] = sharpness_roots(qa);
  const auto [ub, vb] = sharpness_roots(qb);
  JMReport r;
  r.phiA = ua + va;
  r.phiB = ub + vb;
  r.betaA = ua - va;
  r.betaB = ub - vb;
  r.F = r.phiA * r.phiA + r.phiB * r.phiB;
  r.B = r.betaA * r.betaA + r.betaB * r.betaB;
  r.x = 2.0 * qa.a0 - 1.0;
  r.y = 2.0 * qb.a0 - 1.0;
  r.dot_ab = qa.a.dot(qb.a);
  const double cross = r.x * r.y - 4.0 * r.dot_ab;
  const double lhs = 0.5 * (r.F * (2.0 - r.B) + r.B * (2.0 - r.F)) + cross * cross;
  r.margin = lhs - 1.0;
  r.verdict = verdict_from_margin(r.margin);
  return r;
}

UnbiasedVectorCheck jm_unbiased_vector_form(const Vec3& a, const Vec3& b) {
  check_unbiased_length(a, "jm_unbiased_vector_form(a)");
  check_unbiased_length(b, "jm_unbiased_vector_form(b)");
  const double lhs = 16.0 * a.cross(b).squaredNorm();
  const double rhs = (1.0 - 4.0 * a.squaredNorm()) * (1.0 - 4.0 * b.squaredNorm());
  return {lhs <= rhs, rhs - lhs};
}

UnbiasedSumCheck jm_unbiased_sum_form(const Vec3& a, const Vec3& b) {
  check_unbiased_length(a, "jm_unbiased_sum_form(a)");
  check_unbiased_length(b, "jm_unbiased_sum_form(b)");
  const double value = (a + b).norm() + (a - b).norm();
  return {value <= 1.0, value};
}

DiscretePOM JointObservableCandidate::as_pom() const {
  std::vector<Effect> out;
  out.reserve(4);
  for (const auto& e : effects) out.emplace_back(bloch_operator(e.c0, e.c));
  return DiscretePOM({kGridOutcomes.begin(), kGridOutcomes.end()}, std::move(out));
}

namespace {

// The four grid effects forced by the marginal constraints, as functions of
// the free parameters (g0, g).
struct CandidateGrid {
  double a0, b0;
  Vec3 a, b;

  std::array<BlochComponents, 4> effects(double g0, const Vec3& g) const {
    return {BlochComponents{g0, g}, BlochComponents{a0 - g0, a - g},
            BlochComponents{b0 - g0, b - g}, BlochComponents{1.0 - a0 - b0 + g0, g - a - b}};
  }

  // max over the four effects of |c| - c0; negative strictly inside the
  // feasible cone, so minimizing the signed value avoids the flat plateau of
  // the clipped objective.
  double signed_defect(double g0, const Vec3& g) const {
    double worst = g.norm() - g0;
    worst = std::max(worst, (a - g).norm() - (a0 - g0));
    worst = std::max(worst, (b - g).norm() - (b0 - g0));
    worst = std::max(worst, (g - a - b).norm() - (1.0 - a0 - b0 + g0));
    return worst;
  }
};

using Point4 = Eigen::Vector4d;

// Projection onto the cone |w| <= s, the building block of the feasibility
// polish below.
std::pair<double, Vec3> cone_project(double s, const Vec3& w) {
  const double n = w.norm();
  if (n <= s) return {s, w};
  if (n <= -s) return {0.0, Vec3::Zero()};
  const double alpha = 0.5 * (s + n);
  return {alpha, (alpha / n) * w};
}

// Cyclic projection onto the four positivity cones.  Each constraint is the
// standard cone seen through an affine isometry, so the projections are
// closed-form, and for feasible instances the iteration converges into the
// intersection -- including the tiny feasible bodies near the coexistence
// boundary where a simplex search stalls at ~1e-7.
Point4 project_feasible(const CandidateGrid& grid, Point4 x, int max_iter) {
  double g0 = x(0);
  Vec3 g(x(1), x(2), x(3));
  for (int iter = 0; iter < max_iter; ++iter) {
    auto p0 = cone_project(g0, g);
    g0 = p0.first;
    g = p0.second;
    auto p1 = cone_project(grid.a0 - g0, grid.a - g);
    g0 = grid.a0 - p1.first;
    g = grid.a - p1.second;
    auto p2 = cone_project(grid.b0 - g0, grid.b - g);
    g0 = grid.b0 - p2.first;
    g = grid.b - p2.second;
    auto p3 = cone_project(1.0 - grid.a0 - grid.b0 + g0, g - grid.a - grid.b);
    g0 = p3.first - 1.0 + grid.a0 + grid.b0;
    g = p3.second + grid.a + grid.b;
    if (grid.signed_defect(g0, g) <= 0.0) break;
  }
  Point4 out;
  out << g0, g.x(), g.y(), g.z();
  return out;
}

double simplex_diameter(const std::array<Point4, 5>& xs) {
  double d = 0.0;
  for (int i = 0; i < 5; ++i)
    for (int j = i + 1; j < 5; ++j) d = std::max(d, (xs[i] - xs[j]).norm());
  return d;
}

// Derivative-free simplex descent; the objective is convex, so the local
// minimum it settles into is the global one.
template <typename F>
std::pair<Point4, double> nelder_mead(const F& f, Point4 start, double scale, int max_iter,
                                      bool* converged) {
  std::array<Point4, 5> xs;
  std::array<double, 5> fs;
  xs[0] = start;
  for (int i = 1; i < 5; ++i) {
    xs[i] = start;
    xs[i](i - 1) += scale;
  }
  for (int i = 0; i < 5; ++i) fs[i] = f(xs[i]);

  *converged = false;
  for (int iter = 0; iter < max_iter; ++iter) {
    // order ascending
    std::array<int, 5> idx = {0, 1, 2, 3, 4};
    std::sort(idx.begin(), idx.end(), [&](int l, int r) { return fs[l] < fs[r]; });
    std::array<Point4, 5> oxs;
    std::array<double, 5> ofs;
    for (int i = 0; i < 5; ++i) {
      oxs[i] = xs[idx[i]];
      ofs[i] = fs[idx[i]];
    }
    xs = oxs;
    fs = ofs;

    if (fs[4] - fs[0] <= 1e-14 * std::max(1.0, std::abs(fs[0])) &&
        simplex_diameter(xs) <= 1e-12) {
      *converged = true;
      break;
    }

    Point4 centroid = Point4::Zero();
    for (int i = 0; i < 4; ++i) centroid += xs[i];
    centroid /= 4.0;

    const Point4 xr = centroid + (centroid - xs[4]);
    const double fr = f(xr);
    if (fr < fs[0]) {
      const Point4 xe = centroid + 2.0 * (centroid - xs[4]);
      const double fe = f(xe);
      if (fe < fr) {
        xs[4] = xe;
        fs[4] = fe;
      } else {
        xs[4] = xr;
        fs[4] = fr;
      }
    } else if (fr < fs[3]) {
      xs[4] = xr;
      fs[4] = fr;
    } else {
      const bool outside = fr < fs[4];
      const double step = outside ? 0.5 : -0.5;
      const Point4 xc = centroid + step * (centroid - xs[4]);
      const double fc = f(xc);
      if (fc < std::min(fr, fs[4])) {
        xs[4] = xc;
        fs[4] = fc;
      } else {
        for (int i = 1; i < 5; ++i) {
          xs[i] = xs[0] + 0.5 * (xs[i] - xs[0]);
          fs[i] = f(xs[i]);
        }
      }
    }
  }

  int best = 0;
  for (int i = 1; i < 5; ++i)
    if (fs[i] < fs[best]) best = i;
  return {xs[best], fs[best]};
}

}  // namespace

JointObservableCandidate evaluate_joint_candidate(const QubitEffect& qa, const QubitEffect& qb,
                                                  double g0, const Vec3& g) {
  const CandidateGrid grid{qa.a0, qb.a0, qa.a, qb.a};
  JointObservableCandidate c;
  c.g0 = g0;
  c.g = g;
  c.effects = grid.effects(g0, g);
  c.max_violation = std::max(0.0, grid.signed_defect(g0, g));
  return c;
}

OracleResult jm_oracle(const QubitEffect& qa, const QubitEffect& qb, double tol) {
  if (!(tol > 0.0)) throw std::invalid_argument("jm_oracle: tol must be positive");
  const CandidateGrid grid{qa.a0, qb.a0, qa.a, qb.a};

  // Coarse grid stage: 21 points per axis, g0 in [0,1], g in [-1/2,1/2]^3.
  constexpr int kGridPoints = 21;
  const auto coord0 = [](int i) { return static_cast<double>(i) / (kGridPoints - 1); };
  const auto coord = [&](int i) { return coord0(i) - 0.5; };

  Point4 best_x = Point4::Zero();
  double best_f = std::numeric_limits<double>::infinity();
  bool feasible_found = false;
  for (int i0 = 0; i0 < kGridPoints && !feasible_found; ++i0)
    for (int i1 = 0; i1 < kGridPoints && !feasible_found; ++i1)
      for (int i2 = 0; i2 < kGridPoints && !feasible_found; ++i2)
        for (int i3 = 0; i3 < kGridPoints; ++i3) {
          const double g0 = coord0(i0);
          const Vec3 g(coord(i1), coord(i2), coord(i3));
          const double f = grid.signed_defect(g0, g);
          if (f < best_f) {
            best_f = f;
            best_x << g0, g.x(), g.y(), g.z();
            if (f <= 0.0) {
              feasible_found = true;
              break;
            }
          }
        }

  if (!feasible_found) {
    // feasibility polish first: exact for tight feasible regions
    const Point4 polished = project_feasible(grid, best_x, 5000);
    const double polished_f = grid.signed_defect(polished(0), Vec3(polished(1), polished(2), polished(3)));
    if (polished_f < best_f) {
      best_f = polished_f;
      best_x = polished;
    }
  }

  if (!feasible_found && best_f > 0.0) {
    const auto objective = [&](const Point4& x) {
      return grid.signed_defect(x(0), Vec3(x(1), x(2), x(3)));
    };
    bool converged = false;
    for (double scale : {0.05, 1e-3, 1e-5, 1e-8}) {
      auto [x, f] = nelder_mead(objective, best_x, scale, 2000, &converged);
      if (f < best_f) {
        best_f = f;
        best_x = x;
      }
      if (converged && best_f <= 0.0) break;
    }
    if (!converged) throw NumericalError("jm_oracle: simplex refinement did not converge");
  }

  JointObservableCandidate candidate =
      evaluate_joint_candidate(qa, qb, best_x(0), Vec3(best_x(1), best_x(2), best_x(3)));
  JMVerdict verdict;
  if (candidate.max_violation <= tol)
    verdict = JMVerdict::JointlyMeasurable;
  else if (candidate.max_violation > 10.0 * tol)
    verdict = JMVerdict::NotJointlyMeasurable;
  else
    verdict = JMVerdict::Boundary;
  return {verdict, candidate};
}

std::pair<DiscretePOM, DiscretePOM> margins_of_joint(const DiscretePOM& grid) {
  if (grid.size() != 4) throw std::invalid_argument("margins_of_joint: grid must have 4 outcomes");
  for (std::size_t i = 0; i < 4; ++i)
    if (grid.outcomes()[i] != kGridOutcomes[i])
      throw std::invalid_argument("margins_of_joint: outcomes must be ++, +-, -+, -- in order");

  std::vector<Effect> first;
  first.emplace_back(grid.effect(0).matrix() + grid.effect(1).matrix());
  first.emplace_back(grid.effect(2).matrix() + grid.effect(3).matrix());
  std::vector<Effect> second;
  second.emplace_back(grid.effect(0).matrix() + grid.effect(2).matrix());
  second.emplace_back(grid.effect(1).matrix() + grid.effect(3).matrix());
  return {DiscretePOM({"+", "-"}, std::move(first)), DiscretePOM({"+", "-"}, std::move(second))};
}

}  // namespace unsharp
