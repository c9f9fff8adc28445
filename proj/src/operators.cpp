#include "unsharp/operators.hpp"

#include <algorithm>
#include <cmath>

namespace unsharp {

namespace {

const Complex kI{0.0, 1.0};

Vec3 normalized_axis(const Vec3& axis) {
  const double n = axis.norm();
  if (n < 1e-12) throw std::invalid_argument("axis is (numerically) the zero vector");
  return axis / n;
}

void check_square_finite(const ComplexMatrix& m, const char* what) {
  if (m.rows() == 0 || m.rows() != m.cols())
    throw std::invalid_argument(std::string(what) + ": matrix must be square and nonempty");
  if (!is_finite(m)) throw std::invalid_argument(std::string(what) + ": matrix has NaN/Inf entries");
}

}  // namespace

const ComplexMatrix& sigma_x() {
  static const ComplexMatrix s = [] {
    ComplexMatrix m(2, 2);
    m << 0, 1, 1, 0;
    return m;
  }();
  return s;
}

const ComplexMatrix& sigma_y() {
  static const ComplexMatrix s = [] {
    ComplexMatrix m(2, 2);
    m << 0, -kI, kI, 0;
    return m;
  }();
  return s;
}

const ComplexMatrix& sigma_z() {
  static const ComplexMatrix s = [] {
    ComplexMatrix m(2, 2);
    m << 1, 0, 0, -1;
    return m;
  }();
  return s;
}

ComplexMatrix bloch_operator(double c0, const Vec3& c) {
  ComplexMatrix m(2, 2);
  m(0, 0) = Complex(c0 + c.z(), 0.0);
  m(1, 1) = Complex(c0 - c.z(), 0.0);
  m(0, 1) = Complex(c.x(), -c.y());
  m(1, 0) = Complex(c.x(), c.y());
  return m;
}

BlochComponents matrix_to_bloch(const ComplexMatrix& m) {
  check_square_finite(m, "matrix_to_bloch");
  if (m.rows() != 2) throw std::invalid_argument("matrix_to_bloch: dim != 2");
  if (hermiticity_defect(m) > tol::herm)
    throw std::invalid_argument("matrix_to_bloch: matrix not Hermitian");
  BlochComponents out;
  out.c0 = 0.5 * (m(0, 0).real() + m(1, 1).real());
  out.c = Vec3(m(1, 0).real(), m(1, 0).imag(), 0.5 * (m(0, 0).real() - m(1, 1).real()));
  return out;
}

ComplexMatrix projector(const Vec3& axis) {
  return bloch_operator(0.5, 0.5 * normalized_axis(axis));
}

Effect::Effect(ComplexMatrix m) : m_(std::move(m)) {
  check_square_finite(m_, "Effect");
  if (hermiticity_defect(m_) > tol::herm) throw std::invalid_argument("Effect: matrix not Hermitian");
  const auto ev = hermitian_eigenvalues(m_);
  if (ev(0) < -tol::pos || ev(ev.size() - 1) > 1.0 + tol::pos)
    throw std::invalid_argument("Effect: spectrum outside [0, 1]");
}

DensityOperator::DensityOperator(ComplexMatrix m) : m_(std::move(m)) {
  check_square_finite(m_, "DensityOperator");
  if (hermiticity_defect(m_) > tol::herm)
    throw std::invalid_argument("DensityOperator: matrix not Hermitian");
  const auto ev = hermitian_eigenvalues(m_);
  if (ev(0) < -tol::pos) throw std::invalid_argument("DensityOperator: not positive semidefinite");
  const Complex tr = m_.trace();
  if (std::abs(tr.imag()) > tol::herm || std::abs(tr.real() - 1.0) > tol::trace)
    throw std::invalid_argument("DensityOperator: trace != 1");
}

Vec3 DensityOperator::bloch_vector() const {
  if (dim() != 2) throw std::invalid_argument("bloch_vector: dim != 2");
  return 2.0 * matrix_to_bloch(m_).c;
}

DensityOperator pure_state(const Vec3& axis) {
  return DensityOperator(projector(axis));
}

QubitEffect::QubitEffect(double a0_, const Vec3& a_) : a0(a0_), a(a_) {
  if (!std::isfinite(a0) || !a.allFinite())
    throw std::invalid_argument("QubitEffect: non-finite parameters");
  if (a.norm() > std::min(a0, 1.0 - a0) + tol::pos)
    throw std::invalid_argument("QubitEffect: |a| > min(a0, 1-a0)");
}

Effect qubit_effect_to_matrix(const QubitEffect& q) {
  return Effect(bloch_operator(q.a0, q.a));
}

QubitEffect matrix_to_qubit_effect(const Effect& e) {
  if (e.dim() != 2) throw std::invalid_argument("matrix_to_qubit_effect: dim != 2");
  const auto b = matrix_to_bloch(e.matrix());
  return QubitEffect(b.c0, b.c);
}

DiscretePOM::DiscretePOM(std::vector<std::string> outcomes, std::vector<Effect> effects)
    : outcomes_(std::move(outcomes)), effects_(std::move(effects)) {
  if (effects_.empty()) throw std::invalid_argument("DiscretePOM: no outcomes");
  if (outcomes_.size() != effects_.size())
    throw std::invalid_argument("DiscretePOM: outcome/effect count mismatch");
  const Eigen::Index d = effects_.front().dim();
  ComplexMatrix sum = ComplexMatrix::Zero(d, d);
  for (const auto& e : effects_) {
    if (e.dim() != d) throw std::invalid_argument("DiscretePOM: mixed dimensions");
    sum += e.matrix();
  }
  if (max_abs_diff(sum, identity_matrix(d)) > tol::sum)
    throw std::invalid_argument("DiscretePOM: effects do not sum to identity");
}

const Effect& DiscretePOM::effect(const std::string& outcome) const {
  for (std::size_t i = 0; i < outcomes_.size(); ++i)
    if (outcomes_[i] == outcome) return effects_[i];
  throw std::invalid_argument("DiscretePOM: unknown outcome label " + outcome);
}

bool DiscretePOM::is_projective(double tau) const {
  for (const auto& e : effects_)
    if (max_abs_diff(e.matrix() * e.matrix(), e.matrix()) > tau) return false;
  return true;
}

DiscretePOM sharp_binary_pom(const Vec3& axis) {
  const Vec3 n = normalized_axis(axis);
  std::vector<Effect> effects;
  effects.emplace_back(bloch_operator(0.5, 0.5 * n));
  effects.emplace_back(bloch_operator(0.5, -0.5 * n));
  return DiscretePOM({"+", "-"}, std::move(effects));
}

double born_probability(const DensityOperator& rho, const Effect& e) {
  if (rho.dim() != e.dim()) throw std::invalid_argument("born_probability: dimension mismatch");
  const Complex tr = (rho.matrix() * e.matrix()).trace();
  if (std::abs(tr.imag()) >= tol::herm)
    throw NumericalError("born_probability: trace has a non-negligible imaginary part");
  return tr.real();
}

std::vector<double> outcome_probabilities(const DensityOperator& rho, const DiscretePOM& pom) {
  std::vector<double> p;
  p.reserve(pom.size());
  for (const auto& e : pom.effects()) p.push_back(born_probability(rho, e));
  return p;
}

bool single_shot_distinguishable(const DensityOperator& rho1, const DensityOperator& rho2) {
  if (rho1.dim() != rho2.dim())
    throw std::invalid_argument("single_shot_distinguishable: dimension mismatch");
  return operator_norm(rho1.matrix() * rho2.matrix()) <= tol::orth;
}

DiscretePOM smear_binary(const DiscretePOM& binary, const ConfusionMatrix& confusion) {
  if (binary.size() != 2) throw std::invalid_argument("smear_binary: POM is not binary");
  for (int i = 0; i < 2; ++i) {
    double row = 0.0;
    for (int j = 0; j < 2; ++j) {
      if (confusion(i, j) < -tol::sum || confusion(i, j) > 1.0 + tol::sum)
        throw std::invalid_argument("smear_binary: confusion entry outside [0, 1]");
      row += confusion(i, j);
    }
    if (std::abs(row - 1.0) > tol::sum)
      throw std::invalid_argument("smear_binary: confusion row does not sum to 1");
  }
  std::vector<Effect> effects;
  for (int j = 0; j < 2; ++j)
    effects.emplace_back(confusion(0, j) * binary.effect(0).matrix() +
                         confusion(1, j) * binary.effect(1).matrix());
  return DiscretePOM(binary.outcomes(), std::move(effects));
}

}  // namespace unsharp
