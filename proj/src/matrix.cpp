#include "unsharp/matrix.hpp"

#include <algorithm>
#include <cmath>

namespace unsharp {

bool is_finite(const ComplexMatrix& m) {
  for (Eigen::Index i = 0; i < m.rows(); ++i)
    for (Eigen::Index j = 0; j < m.cols(); ++j)
      if (!std::isfinite(m(i, j).real()) || !std::isfinite(m(i, j).imag())) return false;
  return true;
}

double hermiticity_defect(const ComplexMatrix& m) {
  return max_abs(m - m.adjoint());
}

bool is_hermitian(const ComplexMatrix& m, double tau) {
  return m.rows() == m.cols() && hermiticity_defect(m) <= tau;
}

ComplexMatrix identity_matrix(Eigen::Index dim) {
  return ComplexMatrix::Identity(dim, dim);
}

std::array<double, 2> hermitian_eigenvalues_2x2(const ComplexMatrix& m) {
  if (m.rows() != 2 || m.cols() != 2) throw std::invalid_argument("hermitian_eigenvalues_2x2: dim != 2");
  const double mean = 0.5 * (m(0, 0).real() + m(1, 1).real());
  // mean^2 - det, factored as a sum of squares so near-degenerate spectra do
  // not lose half the precision to cancellation
  const double disc = std::hypot(0.5 * (m(0, 0).real() - m(1, 1).real()), std::abs(m(0, 1)));
  return {mean - disc, mean + disc};
}

Eigen::VectorXd hermitian_eigenvalues_solver(const ComplexMatrix& m) {
  Eigen::SelfAdjointEigenSolver<ComplexMatrix> solver(m, Eigen::EigenvaluesOnly);
  if (solver.info() != Eigen::Success) throw NumericalError("hermitian eigensolver failed");
  return solver.eigenvalues();
}

Eigen::VectorXd hermitian_eigenvalues(const ComplexMatrix& m) {
  if (m.rows() != m.cols()) throw std::invalid_argument("hermitian_eigenvalues: matrix not square");
  if (m.rows() == 2) {
    const auto ev = hermitian_eigenvalues_2x2(m);
    Eigen::VectorXd out(2);
    out << ev[0], ev[1];
    return out;
  }
  return hermitian_eigenvalues_solver(m);
}

double operator_norm(const ComplexMatrix& m) {
  Eigen::JacobiSVD<ComplexMatrix> svd(m);
  return svd.singularValues().size() > 0 ? svd.singularValues()(0) : 0.0;
}

double hermitian_norm(const ComplexMatrix& m) {
  const auto ev = hermitian_eigenvalues(m);
  return std::max(std::abs(ev(0)), std::abs(ev(ev.size() - 1)));
}

double commutator_norm(const ComplexMatrix& a, const ComplexMatrix& b) {
  return operator_norm(a * b - b * a);
}

ComplexMatrix psd_sqrt(const ComplexMatrix& m) {
  Eigen::SelfAdjointEigenSolver<ComplexMatrix> solver(m);
  if (solver.info() != Eigen::Success) throw NumericalError("psd_sqrt: eigensolver failed");
  Eigen::VectorXd ev = solver.eigenvalues();
  for (Eigen::Index i = 0; i < ev.size(); ++i) {
    if (ev(i) < -tol::pos) throw std::invalid_argument("psd_sqrt: matrix not positive semidefinite");
    ev(i) = std::sqrt(std::max(ev(i), 0.0));
  }
  return solver.eigenvectors() * ev.asDiagonal() * solver.eigenvectors().adjoint();
}

double max_abs(const ComplexMatrix& m) {
  double worst = 0.0;
  for (Eigen::Index i = 0; i < m.rows(); ++i)
    for (Eigen::Index j = 0; j < m.cols(); ++j) worst = std::max(worst, std::abs(m(i, j)));
  return worst;
}

double max_abs_diff(const ComplexMatrix& a, const ComplexMatrix& b) {
  if (a.rows() != b.rows() || a.cols() != b.cols())
    throw std::invalid_argument("max_abs_diff: shape mismatch");
  return max_abs(a - b);
}

double trace_distance(const ComplexMatrix& a, const ComplexMatrix& b) {
  const auto ev = hermitian_eigenvalues(a - b);
  double sum = 0.0;
  for (Eigen::Index i = 0; i < ev.size(); ++i) sum += std::abs(ev(i));
  return 0.5 * sum;
}

}  // namespace unsharp
