#pragma once

#include "unsharp/operators.hpp"

#include <array>
#include <string>
#include <utility>

namespace unsharp {

enum class JMVerdict { JointlyMeasurable, NotJointlyMeasurable, Boundary };

std::string to_string(JMVerdict v);

/// Margins within this band of the coexistence threshold are reported as
/// Boundary instead of forcing a binary call.
inline constexpr double kBoundaryBand = 1e-9;

/// Unsharpness phi(A) = sqrt(a0^2 - |a|^2) + sqrt((1-a0)^2 - |a|^2).
double unsharpness(const QubitEffect& q);

/// Bias beta(A) = sqrt(a0^2 - |a|^2) - sqrt((1-a0)^2 - |a|^2).
double bias(const QubitEffect& q);

/// Verdict plus every intermediate quantity of the coexistence criterion
///   (1/2)[F(2-B) + B(2-F)] + (xy - 4 a.b)^2 >= 1.
struct JMReport {
  double phiA = 0, phiB = 0;  // unsharpness measures
  double betaA = 0, betaB = 0;  // bias measures
  double F = 0;       // phiA^2 + phiB^2
  double B = 0;       // betaA^2 + betaB^2
  double x = 0, y = 0;  // 2 a0 - 1 and 2 b0 - 1
  double dot_ab = 0;
  double margin = 0;  // LHS - 1
  JMVerdict verdict = JMVerdict::Boundary;
};

JMReport jm_closed_form(const QubitEffect& qa, const QubitEffect& qb);

/// Unbiased criterion 16|a x b|^2 <= (1 - 4|a|^2)(1 - 4|b|^2);
/// margin = RHS - LHS.
struct UnbiasedVectorCheck {
  bool holds;
  double margin;
};
UnbiasedVectorCheck jm_unbiased_vector_form(const Vec3& a, const Vec3& b);

/// Equivalent unbiased criterion |a+b| + |a-b| <= 1; value is the left side.
struct UnbiasedSumCheck {
  bool holds;
  double value;
};
UnbiasedSumCheck jm_unbiased_sum_form(const Vec3& a, const Vec3& b);

/// Candidate joint observable on the 2x2 outcome grid, parametrized by the
/// free effect Gwhere the rest is forced by the marginal constraints:
///   G(+,+) = g0 I + g.sigma,   G(+,-) = A - G(+,+),
///   G(-,+) = B - G(+,+),       G(-,-) = I - A - B + G(+,+).
/// Both marginals reproduce A and B exactly by construction; only positivity
/// of the four effects can fail, measured per effect as (|c| - c0)+.
struct JointObservableCandidate {
  double g0 = 0;
  Vec3 g = Vec3::Zero();
  std::array<BlochComponents, 4> effects{};  // order ++, +-, -+, --
  double max_violation = 0;

  /// Materialize as a POM (throws if max_violation exceeds tol::pos).
  DiscretePOM as_pom() const;
};

/// Positivity defect of the candidate grid at the given free parameters.
JointObservableCandidate evaluate_joint_candidate(const QubitEffect& qa, const QubitEffect& qb,
                                                  double g0, const Vec3& g);

struct OracleResult {
  JMVerdict verdict;
  JointObservableCandidate candidate;
};

/// Constructive feasibility check: search (g0, g) minimizing the worst
/// positivity defect over the four grid effects.  The objective is a max of
/// convex functions, so the coarse grid (21^4 over [0,1] x [-1/2,1/2]^3)
/// followed by simplex refinement reaches the global minimum.  Verdict is
/// JointlyMeasurable when the minimum is <= tol, NotJointlyMeasurable when it
/// exceeds 10*tol, Boundary in between.
OracleResult jm_oracle(const QubitEffect& qa, const QubitEffect& qb, double tol = 1e-7);

/// Cartesian marginals of a joint observable on the 2x2 grid with outcomes
/// "++", "+-", "-+", "--": first margin (+) = G(+,+) + G(+,-), second
/// margin (+) = G(+,+) + G(-,+).
std::pair<DiscretePOM, DiscretePOM> margins_of_joint(const DiscretePOM& grid);

extern const std::array<std::string, 4> kGridOutcomes;

}  // namespace unsharp
