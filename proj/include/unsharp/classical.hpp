#pragma once

#include "unsharp/operators.hpp"
#include "unsharp/sphere_pom.hpp"

#include <functional>
#include <vector>

namespace unsharp {

/// Point on the pure-state manifold: the Bloch sphere surface, labelling
/// omega = (1/2)(I + bloch.sigma).
struct PurePoint {
  Vec3 bloch;
  explicit PurePoint(const Vec3& b);
  static PurePoint from_direction(const Vec3& v);  // normalizes any nonzero v
};

/// Finitely supported probability measure on pure states.
class ClassicalState {
 public:
  struct Atom {
    PurePoint point;
    double weight;
  };
  explicit ClassicalState(std::vector<Atom> atoms);
  const std::vector<Atom>& atoms() const { return atoms_; }

 private:
  std::vector<Atom> atoms_;
};

/// [0,1]-valued function on pure states (a fuzzy set).  The bound is a
/// property of the functions this library produces, not enforced per call.
class ClassicalEffect {
 public:
  explicit ClassicalEffect(std::function<double(const PurePoint&)> f) : f_(std::move(f)) {}
  double operator()(const PurePoint& w) const { return f_(w); }

 private:
  std::function<double(const PurePoint&)> f_;
};

/// Invertible relabeling of the pure-state manifold: an orthogonal 3x3
/// matrix, covering rotations, the antipodal map, and their composites.
class PointMap {
 public:
  static PointMap identity();
  static PointMap rotation(const Eigen::Matrix3d& r);
  static PointMap rotation_about(const Vec3& axis, double angle);
  static PointMap antipodal();
  PurePoint operator()(const PurePoint& w) const;
  PointMap inverse() const;
  const Eigen::Matrix3d& matrix() const { return m_; }

 private:
  explicit PointMap(const Eigen::Matrix3d& m);
  Eigen::Matrix3d m_;
};

/// Qubit observable whose statistics determine the state: >= 4 outcomes and
/// a rank-4 frame.  Frame row i holds the Bloch components (alpha_i, a_i) of
/// effect A_i, so outcome probabilities are p_i = alpha_i + a_i . r.
class ICObservable {
 public:
  static ICObservable tetrahedral();
  /// A_i = (1/k)(I + t_i.sigma) from unit axes t_i summing to zero.
  static ICObservable from_axes(const std::vector<Vec3>& axes);
  static ICObservable from_pom(DiscretePOM pom);

  const DiscretePOM& pom() const { return pom_; }
  const Eigen::MatrixX4d& frame() const { return frame_; }
  std::size_t outcome_count() const { return pom_.size(); }

 private:
  ICObservable(DiscretePOM pom, Eigen::MatrixX4d frame);
  DiscretePOM pom_;
  Eigen::MatrixX4d frame_;
};

/// Informationally complete embedding of a state: its outcome statistics.
Eigen::VectorXd embed(const DensityOperator& rho, const ICObservable& a);

/// Inverse of embed on its range: least-squares against the frame with a
/// residual check (1e-8) rejecting probability vectors no state produces.
DensityOperator reconstruct(const Eigen::VectorXd& p, const ICObservable& a);

/// Quantization sum_i f_i A_i of a function on outcomes.  The result can
/// leave the effect cone; that extension is the point, so it is returned
/// unvalidated with flags.
struct Quantization {
  ComplexMatrix op;
  bool is_effect;         // spectrum within [0,1] and Hermitian
  bool proper_function;   // all f_i within [0,1]
};
Quantization quantize(const Eigen::VectorXd& f, const ICObservable& a);

/// Unique f with sum_i f_i A_i = target for a 4-outcome frame, plus which
/// [0,1] bound (if any) it violates.
struct SurjectivityWitness {
  Eigen::Vector4d f;
  bool proper;
  bool violates_lower;
  bool violates_upper;
};
SurjectivityWitness surjectivity_witness(const Effect& target, const ICObservable& a);

/// Barycenter map: mu -> sum_k w_k (1/2)(I + b_k.sigma).
DensityOperator misra_reduce(const ClassicalState& mu);

/// Dual of the barycenter map: E -> f_E with f_E(omega) = tr(omega E); for a
/// qubit effect (e0, e) this is f(b) = e0 + e.b.
ClassicalEffect misra_dual(const Effect& e);

/// Reduction relabeled by iota: equals misra_reduce of the pushforward of mu
/// through iota.
DensityOperator relabeled_reduce(const ClassicalState& mu, const PointMap& iota);

/// Both sides of tr(rho_mu E) = sum_k w_k f_E(omega_k).
struct DualityPair {
  double lhs;
  double rhs;
};
DualityPair duality_check(const ClassicalState& mu, const Effect& e);

/// Classical state carrying rho's eigendecomposition: atoms at +-r/|r| with
/// weights (1 +- |r|)/2 (zero-weight branch dropped; the maximally mixed
/// state decomposes along z).
ClassicalState eigenstate_decomposition(const DensityOperator& rho);

/// Atomic approximation of a continuous density on the sphere: one atom per
/// mesh cell, weighted by density(center) * solid_angle and normalized to
/// unit mass.  Cells where the density vanishes are dropped.
ClassicalState mesh_classical_state(const SphereMesh& mesh,
                                    const std::function<double(const PurePoint&)>& density);

}  // namespace unsharp
