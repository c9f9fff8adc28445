#include "unsharp/classical.hpp"

#include <cmath>
#include <numbers>

namespace unsharp {

PurePoint::PurePoint(const Vec3& b) : bloch(b) {
  if (!b.allFinite() || std::abs(b.norm() - 1.0) > 1e-12)
    throw std::invalid_argument("PurePoint: Bloch vector must be unit length");
}

PurePoint PurePoint::from_direction(const Vec3& v) {
  const double n = v.norm();
  if (n < 1e-12) throw std::invalid_argument("PurePoint: zero direction");
  return PurePoint(v / n);
}

ClassicalState::ClassicalState(std::vector<Atom> atoms) : atoms_(std::move(atoms)) {
  if (atoms_.empty()) throw std::invalid_argument("ClassicalState: no atoms");
  double sum = 0.0;
  for (const auto& a : atoms_) {
    if (!(a.weight > 0.0)) throw std::invalid_argument("ClassicalState: weights must be positive");
    sum += a.weight;
  }
  if (std::abs(sum - 1.0) > 1e-12)
    throw std::invalid_argument("ClassicalState: weights must sum to 1");
}

PointMap::PointMap(const Eigen::Matrix3d& m) : m_(m) {
  if (!m.allFinite() ||
      (m.transpose() * m - Eigen::Matrix3d::Identity()).cwiseAbs().maxCoeff() > 1e-9)
    throw std::invalid_argument("PointMap: matrix is not orthogonal");
}

PointMap PointMap::identity() { return PointMap(Eigen::Matrix3d::Identity()); }

PointMap PointMap::rotation(const Eigen::Matrix3d& r) { return PointMap(r); }

PointMap PointMap::rotation_about(const Vec3& axis, double angle) {
  const double n = axis.norm();
  if (n < 1e-12) throw std::invalid_argument("PointMap: zero rotation axis");
  return PointMap(Eigen::AngleAxisd(angle, axis / n).toRotationMatrix());
}

PointMap PointMap::antipodal() { return PointMap(-Eigen::Matrix3d::Identity()); }

PurePoint PointMap::operator()(const PurePoint& w) const {
  return PurePoint((m_ * w.bloch).normalized());
}

PointMap PointMap::inverse() const { return PointMap(Eigen::Matrix3d(m_.transpose())); }

ICObservable::ICObservable(DiscretePOM pom, Eigen::MatrixX4d frame)
    : pom_(std::move(pom)), frame_(std::move(frame)) {}

ICObservable ICObservable::tetrahedral() {
  // t1 = z, the rest at z = -1/3 spaced 120 degrees in azimuth
  const double z = -1.0 / 3.0;
  const double r = std::sqrt(1.0 - z * z);
  std::vector<Vec3> axes = {Vec3(0, 0, 1)};
  for (int k = 0; k < 3; ++k) {
    const double phi = 2.0 * std::numbers::pi * k / 3.0;
    axes.emplace_back(r * std::cos(phi), r * std::sin(phi), z);
  }
  return from_axes(axes);
}

ICObservable ICObservable::from_axes(const std::vector<Vec3>& axes) {
  if (axes.size() < 4) throw std::invalid_argument("ICObservable: need at least 4 axes");
  Vec3 sum = Vec3::Zero();
  for (const auto& t : axes) {
    if (!t.allFinite() || t.norm() > 1.0 + 1e-12)
      throw std::invalid_argument("ICObservable: axis length must be <= 1");
    sum += t;
  }
  if (sum.norm() > 1e-9) throw std::invalid_argument("ICObservable: axes must sum to zero");
  const double w = 1.0 / static_cast<double>(axes.size());
  std::vector<Effect> effects;
  std::vector<std::string> outcomes;
  for (std::size_t i = 0; i < axes.size(); ++i) {
    effects.emplace_back(bloch_operator(w, w * axes[i]));
    outcomes.push_back(std::to_string(i + 1));
  }
  return from_pom(DiscretePOM(std::move(outcomes), std::move(effects)));
}

ICObservable ICObservable::from_pom(DiscretePOM pom) {
  if (pom.dim() != 2) throw std::invalid_argument("ICObservable: qubit POMs only");
  if (pom.size() < 4) throw std::invalid_argument("ICObservable: need at least 4 outcomes");
  Eigen::MatrixX4d frame(pom.size(), 4);
  for (std::size_t i = 0; i < pom.size(); ++i) {
    const auto b = matrix_to_bloch(pom.effect(i).matrix());
    frame(static_cast<Eigen::Index>(i), 0) = b.c0;
    frame.row(static_cast<Eigen::Index>(i)).tail<3>() = b.c.transpose();
  }
  Eigen::JacobiSVD<Eigen::MatrixXd> svd(frame);
  if (svd.singularValues()(3) <= 1e-10)
    throw std::invalid_argument("ICObservable: frame is rank deficient (not informationally complete)");
  return ICObservable(std::move(pom), std::move(frame));
}

Eigen::VectorXd embed(const DensityOperator& rho, const ICObservable& a) {
  Eigen::Vector4d x;
  x(0) = 1.0;
  x.tail<3>() = rho.bloch_vector();
  return a.frame() * x;
}

DensityOperator reconstruct(const Eigen::VectorXd& p, const ICObservable& a) {
  if (p.size() != static_cast<Eigen::Index>(a.outcome_count()))
    throw std::invalid_argument("reconstruct: probability vector has wrong length");
  if (!p.allFinite()) throw std::invalid_argument("reconstruct: non-finite probabilities");
  const Eigen::Vector4d x =
      a.frame().jacobiSvd(Eigen::ComputeThinU | Eigen::ComputeThinV).solve(p);
  if ((a.frame() * x - p).cwiseAbs().maxCoeff() > 1e-8)
    throw std::invalid_argument("reconstruct: probabilities are not in the range of embed");
  return DensityOperator(bloch_operator(0.5 * x(0), 0.5 * x.tail<3>()));
}

Quantization quantize(const Eigen::VectorXd& f, const ICObservable& a) {
  if (f.size() != static_cast<Eigen::Index>(a.outcome_count()))
    throw std::invalid_argument("quantize: function vector has wrong length");
  if (!f.allFinite()) throw std::invalid_argument("quantize: non-finite entries");
  ComplexMatrix op = ComplexMatrix::Zero(2, 2);
  for (Eigen::Index i = 0; i < f.size(); ++i)
    op += f(i) * a.pom().effect(static_cast<std::size_t>(i)).matrix();

  Quantization out;
  out.op = std::move(op);
  const auto ev = hermitian_eigenvalues(out.op);
  out.is_effect = ev(0) >= -tol::pos && ev(1) <= 1.0 + tol::pos;
  out.proper_function = (f.array() >= -tol::pos).all() && (f.array() <= 1.0 + tol::pos).all();
  return out;
}

SurjectivityWitness surjectivity_witness(const Effect& target, const ICObservable& a) {
  if (target.dim() != 2) throw std::invalid_argument("surjectivity_witness: qubit effects only");
  if (a.outcome_count() != 4)
    throw std::invalid_argument("surjectivity_witness: needs a 4-outcome observable");
  const auto b = matrix_to_bloch(target.matrix());
  Eigen::Vector4d rhs;
  rhs(0) = b.c0;
  rhs.tail<3>() = b.c;

  const Eigen::Matrix4d system = a.frame().transpose();
  Eigen::FullPivLU<Eigen::Matrix4d> lu(system);
  if (!lu.isInvertible())
    throw std::invalid_argument("surjectivity_witness: frame is rank deficient");

  SurjectivityWitness out;
  out.f = lu.solve(rhs);
  out.violates_lower = (out.f.array() < -tol::pos).any();
  out.violates_upper = (out.f.array() > 1.0 + tol::pos).any();
  out.proper = !out.violates_lower && !out.violates_upper;
  return out;
}

DensityOperator misra_reduce(const ClassicalState& mu) {
  Vec3 barycenter = Vec3::Zero();
  double total = 0.0;
  for (const auto& atom : mu.atoms()) {
    barycenter += atom.weight * atom.point.bloch;
    total += atom.weight;
  }
  return DensityOperator(bloch_operator(0.5 * total, 0.5 * barycenter));
}

ClassicalEffect misra_dual(const Effect& e) {
  if (e.dim() != 2) throw std::invalid_argument("misra_dual: qubit effects only");
  const auto b = matrix_to_bloch(e.matrix());
  return ClassicalEffect(
      [e0 = b.c0, ev = b.c](const PurePoint& w) { return e0 + ev.dot(w.bloch); });
}

DensityOperator relabeled_reduce(const ClassicalState& mu, const PointMap& iota) {
  std::vector<ClassicalState::Atom> pushed;
  pushed.reserve(mu.atoms().size());
  for (const auto& atom : mu.atoms()) pushed.push_back({iota(atom.point), atom.weight});
  return misra_reduce(ClassicalState(std::move(pushed)));
}

DualityPair duality_check(const ClassicalState& mu, const Effect& e) {
  const ClassicalEffect f = misra_dual(e);
  double rhs = 0.0;
  for (const auto& atom : mu.atoms()) rhs += atom.weight * f(atom.point);
  return {born_probability(misra_reduce(mu), e), rhs};
}

ClassicalState mesh_classical_state(const SphereMesh& mesh,
                                    const std::function<double(const PurePoint&)>& density) {
  std::vector<ClassicalState::Atom> atoms;
  double total = 0.0;
  for (const auto& cell : mesh.cells()) {
    const PurePoint point(cell.center);
    const double d = density(point);
    if (!std::isfinite(d) || d < 0.0)
      throw std::invalid_argument("mesh_classical_state: density must be finite and nonnegative");
    if (d <= 0.0) continue;
    atoms.push_back({point, d * cell.solid_angle});
    total += d * cell.solid_angle;
  }
  if (atoms.empty()) throw std::invalid_argument("mesh_classical_state: density vanishes everywhere");
  double assigned = 0.0;
  for (std::size_t i = 0; i + 1 < atoms.size(); ++i) {
    atoms[i].weight /= total;
    assigned += atoms[i].weight;
  }
  atoms.back().weight = 1.0 - assigned;
  return ClassicalState(std::move(atoms));
}

ClassicalState eigenstate_decomposition(const DensityOperator& rho) {
  const Vec3 r = rho.bloch_vector();
  const double len = r.norm();
  std::vector<ClassicalState::Atom> atoms;
  if (len < 1e-14) {
    atoms.push_back({PurePoint(Vec3(0, 0, 1)), 0.5});
    atoms.push_back({PurePoint(Vec3(0, 0, -1)), 0.5});
  } else {
    const Vec3 axis = r / len;
    const double w_plus = 0.5 * (1.0 + len);
    const double w_minus = 1.0 - w_plus;
    atoms.push_back({PurePoint(axis), w_plus});
    if (w_minus > 1e-14) atoms.push_back({PurePoint(-axis), w_minus});
  }
  return ClassicalState(std::move(atoms));
}

}  // namespace unsharp
