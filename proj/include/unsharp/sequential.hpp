#pragma once

#include "unsharp/operators.hpp"

#include <vector>

namespace unsharp {

/// Measurement with the Luders state update rho -> sqrt(E) rho sqrt(E) per
/// outcome; square roots are cached at construction.
class LudersInstrument {
 public:
  explicit LudersInstrument(DiscretePOM pom);
  const DiscretePOM& pom() const { return pom_; }
  const ComplexMatrix& sqrt_effect(std::size_t i) const { return sqrt_effects_.at(i); }

  /// Unnormalized post-measurement branch sqrt(E_i) rho sqrt(E_i); its trace
  /// is the outcome probability.
  ComplexMatrix branch(const DensityOperator& rho, std::size_t outcome) const;

 private:
  DiscretePOM pom_;
  std::vector<ComplexMatrix> sqrt_effects_;
};

/// First measurement: binary Luders instrument with effects
/// (1/2)(I +- sharpness * n.sigma); second: sharp observable along m.
struct SequentialScheme {
  LudersInstrument first;
  DiscretePOM second;
  Vec3 first_axis;
  double sharpness;
  Vec3 second_axis;
};

SequentialScheme make_sequential_scheme(const Vec3& n, double sharpness, const Vec3& m);

/// Joint observable measured by the whole sequence: G(i,j) = sqrt(A_i) B_j
/// sqrt(A_i) on the grid "++", "+-", "-+", "--".  Its first margin is the
/// first instrument's POM exactly.
DiscretePOM effective_joint_pom(const SequentialScheme& s);

/// Second margin G2(j) = sum_i sqrt(A_i) B_j sqrt(A_i): the observable the
/// second measurement actually realizes on the disturbed state.
DiscretePOM distorted_second_observable(const SequentialScheme& s);

/// Grid probabilities computed the operational way: update the state through
/// the first instrument, then measure the second observable.
std::vector<double> two_step_probabilities(const SequentialScheme& s, const DensityOperator& rho);

/// One row of the accuracy/disturbance trade-off: Bloch lengths of the two
/// margins and their unbiased coexistence sum |a+b| + |a-b| (which the
/// sequential construction pins to 1 for orthogonal axes).
struct TradeoffRow {
  double lambda;
  double first_acc;
  double second_acc;
  double jm_sum;
};

std::vector<TradeoffRow> disturbance_tradeoff_scan(const Vec3& n, const Vec3& m,
                                                   const std::vector<double>& lambdas);

}  // namespace unsharp
