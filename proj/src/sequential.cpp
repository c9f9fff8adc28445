#include "unsharp/sequential.hpp"

#include "unsharp/joint_measurability.hpp"

#include <cmath>

namespace unsharp {

namespace {

Vec3 unit(const Vec3& v, const char* what) {
  const double n = v.norm();
  if (n < 1e-12) throw std::invalid_argument(std::string(what) + ": zero axis");
  return v / n;
}

}  // namespace

LudersInstrument::LudersInstrument(DiscretePOM pom) : pom_(std::move(pom)) {
  sqrt_effects_.reserve(pom_.size());
  for (const auto& e : pom_.effects()) {
    ComplexMatrix root = psd_sqrt(e.matrix());
    if (max_abs_diff(root * root, e.matrix()) > 1e-10)
      throw NumericalError("LudersInstrument: operator square root is inaccurate");
    sqrt_effects_.push_back(std::move(root));
  }
}

ComplexMatrix LudersInstrument::branch(const DensityOperator& rho, std::size_t outcome) const {
  if (rho.dim() != pom_.dim()) throw std::invalid_argument("branch: dimension mismatch");
  const ComplexMatrix& r = sqrt_effects_.at(outcome);
  return r * rho.matrix() * r;
}

SequentialScheme make_sequential_scheme(const Vec3& n, double sharpness, const Vec3& m) {
  if (!(sharpness >= 0.0 && sharpness <= 1.0))
    throw std::invalid_argument("make_sequential_scheme: sharpness outside [0, 1]");
  const Vec3 nn = unit(n, "make_sequential_scheme");
  const Vec3 mm = unit(m, "make_sequential_scheme");
  std::vector<Effect> first_effects;
  first_effects.emplace_back(bloch_operator(0.5, 0.5 * sharpness * nn));
  first_effects.emplace_back(bloch_operator(0.5, -0.5 * sharpness * nn));
  DiscretePOM first({"+", "-"}, std::move(first_effects));
  return {LudersInstrument(std::move(first)), sharp_binary_pom(mm), nn, sharpness, mm};
}

DiscretePOM effective_joint_pom(const SequentialScheme& s) {
  std::vector<Effect> effects;
  effects.reserve(4);
  for (std::size_t i = 0; i < 2; ++i) {
    const ComplexMatrix& root = s.first.sqrt_effect(i);
    for (std::size_t j = 0; j < 2; ++j)
      effects.emplace_back(root * s.second.effect(j).matrix() * root);
  }
  return DiscretePOM({kGridOutcomes.begin(), kGridOutcomes.end()}, std::move(effects));
}

DiscretePOM distorted_second_observable(const SequentialScheme& s) {
  std::vector<Effect> effects;
  for (std::size_t j = 0; j < 2; ++j) {
    ComplexMatrix sum = ComplexMatrix::Zero(2, 2);
    for (std::size_t i = 0; i < 2; ++i) {
      const ComplexMatrix& root = s.first.sqrt_effect(i);
      sum += root * s.second.effect(j).matrix() * root;
    }
    effects.emplace_back(std::move(sum));
  }
  return DiscretePOM({"+", "-"}, std::move(effects));
}

std::vector<double> two_step_probabilities(const SequentialScheme& s, const DensityOperator& rho) {
  std::vector<double> p;
  p.reserve(4);
  for (std::size_t i = 0; i < 2; ++i) {
    const ComplexMatrix branch = s.first.branch(rho, i);
    for (std::size_t j = 0; j < 2; ++j)
      p.push_back((branch * s.second.effect(j).matrix()).trace().real());
  }
  return p;
}

std::vector<TradeoffRow> disturbance_tradeoff_scan(const Vec3& n, const Vec3& m,
                                                   const std::vector<double>& lambdas) {
  const Vec3 nn = unit(n, "disturbance_tradeoff_scan");
  const Vec3 mm = unit(m, "disturbance_tradeoff_scan");
  if (std::abs(nn.dot(mm)) > 1e-9)
    throw std::invalid_argument("disturbance_tradeoff_scan: axes are not orthogonal");

  std::vector<TradeoffRow> rows;
  rows.reserve(lambdas.size());
  for (double lambda : lambdas) {
    const SequentialScheme s = make_sequential_scheme(nn, lambda, mm);
    const auto [first_margin, second_margin] = margins_of_joint(effective_joint_pom(s));
    const Vec3 a = matrix_to_qubit_effect(first_margin.effect(0)).a;
    const Vec3 b = matrix_to_qubit_effect(second_margin.effect(0)).a;
    rows.push_back({lambda, a.norm(), b.norm(), jm_unbiased_sum_form(a, b).value});
  }
  return rows;
}

}  // namespace unsharp
