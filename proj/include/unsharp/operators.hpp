#pragma once

#include "unsharp/matrix.hpp"

#include <string>
#include <vector>

namespace unsharp {

const ComplexMatrix& sigma_x();
const ComplexMatrix& sigma_y();
const ComplexMatrix& sigma_z();

/// c0 * I + c . sigma as a 2x2 matrix.
ComplexMatrix bloch_operator(double c0, const Vec3& c);

/// The (c0, c) components of a Hermitian 2x2 matrix, with no effect-validity
/// check attached.
struct BlochComponents {
  double c0;
  Vec3 c;
};
BlochComponents matrix_to_bloch(const ComplexMatrix& m);

/// Rank-1 projection (1/2)(I + n.sigma) onto the axis direction.
ComplexMatrix projector(const Vec3& axis);

/// Positive operator with spectrum in [0,1]; a yes/no measurement outcome.
/// Validated on construction: Hermitian within tol::herm and eigenvalues in
/// [-tol::pos, 1 + tol::pos].
class Effect {
 public:
  explicit Effect(ComplexMatrix m);
  const ComplexMatrix& matrix() const { return m_; }
  Eigen::Index dim() const { return m_.rows(); }

 private:
  ComplexMatrix m_;
};

/// Hermitian, positive semidefinite, unit trace; validated on construction.
class DensityOperator {
 public:
  explicit DensityOperator(ComplexMatrix m);
  const ComplexMatrix& matrix() const { return m_; }
  Eigen::Index dim() const { return m_.rows(); }
  /// Bloch vector r with rho = (1/2)(I + r.sigma); dim 2 only.
  Vec3 bloch_vector() const;

 private:
  ComplexMatrix m_;
};

DensityOperator pure_state(const Vec3& axis);

/// Bloch parametrization a0*I + a.sigma of a 2x2 effect, constrained by
/// |a| <= min(a0, 1 - a0).
struct QubitEffect {
  double a0;
  Vec3 a;
  QubitEffect(double a0_, const Vec3& a_);
};

Effect qubit_effect_to_matrix(const QubitEffect& q);
QubitEffect matrix_to_qubit_effect(const Effect& e);

/// Finite outcome set mapped to effects that sum to the identity.
class DiscretePOM {
 public:
  DiscretePOM(std::vector<std::string> outcomes, std::vector<Effect> effects);
  std::size_t size() const { return effects_.size(); }
  Eigen::Index dim() const { return effects_.front().dim(); }
  const std::vector<std::string>& outcomes() const { return outcomes_; }
  const std::vector<Effect>& effects() const { return effects_; }
  const Effect& effect(std::size_t i) const { return effects_.at(i); }
  const Effect& effect(const std::string& outcome) const;
  bool is_projective(double tau = tol::pos) const;

 private:
  std::vector<std::string> outcomes_;
  std::vector<Effect> effects_;
};

/// Sharp binary observable {P(n), P(-n)} with outcomes "+", "-".
DiscretePOM sharp_binary_pom(const Vec3& axis);

/// tr(rho E), real part; the imaginary residue must stay below tol::herm.
double born_probability(const DensityOperator& rho, const Effect& e);

std::vector<double> outcome_probabilities(const DensityOperator& rho, const DiscretePOM& pom);

/// True iff the supports of rho1 and rho2 are orthogonal, decided as
/// ||rho1 rho2|| <= tol::orth.  Orthogonal supports are exactly what a
/// single-shot measurement can tell apart with certainty.
bool single_shot_distinguishable(const DensityOperator& rho1, const DensityOperator& rho2);

using ConfusionMatrix = Eigen::Matrix2d;  // row-stochastic post-processing kernel

/// Post-process a binary observable by a confusion kernel: output effect j is
/// sum_i confusion(i,j) * E_i.  The canonical use smears a sharp observable
/// into a fuzzy one, but any valid binary POM composes the same way.
DiscretePOM smear_binary(const DiscretePOM& binary, const ConfusionMatrix& confusion);

}  // namespace unsharp
