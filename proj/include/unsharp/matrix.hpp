#pragma once

#include <Eigen/Dense>

#include <array>
#include <complex>
#include <stdexcept>

namespace unsharp {

using Complex = std::complex<double>;
using ComplexMatrix = Eigen::MatrixXcd;
using Vec3 = Eigen::Vector3d;

/// Validation tolerances shared across the library.  All operator arithmetic
/// happens on matrices of dimension <= 8, where double precision keeps
/// roundoff far below these bands.
namespace tol {
inline constexpr double herm = 1e-9;   // hermiticity defect
inline constexpr double pos = 1e-9;    // eigenvalue bounds
inline constexpr double sum = 1e-9;    // POM normalization
inline constexpr double trace = 1e-9;  // density trace
inline constexpr double orth = 1e-9;   // support orthogonality (operator norm)
}  // namespace tol

/// Thrown when an iterative numerical routine fails to converge.  Input
/// validation problems throw std::invalid_argument instead.
class NumericalError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

bool is_finite(const ComplexMatrix& m);

/// max entry magnitude of m - m^dagger
double hermiticity_defect(const ComplexMatrix& m);
bool is_hermitian(const ComplexMatrix& m, double tau = tol::herm);

ComplexMatrix identity_matrix(Eigen::Index dim);

/// Eigenvalues of a Hermitian matrix, ascending.  Dimension 2 is dispatched
/// to the closed-form trace/determinant path; larger dimensions use the
/// self-adjoint solver.
Eigen::VectorXd hermitian_eigenvalues(const ComplexMatrix& m);

/// Closed form for dim 2: mean +- sqrt(mean^2 - det).
std::array<double, 2> hermitian_eigenvalues_2x2(const ComplexMatrix& m);

/// Solver path regardless of dimension (cross-check for the closed form).
Eigen::VectorXd hermitian_eigenvalues_solver(const ComplexMatrix& m);

/// Largest singular value.
double operator_norm(const ComplexMatrix& m);

/// Largest |eigenvalue|; requires a Hermitian input.
double hermitian_norm(const ComplexMatrix& m);

double commutator_norm(const ComplexMatrix& a, const ComplexMatrix& b);

/// Hermitian square root of a positive semidefinite matrix.  Eigenvalues in
/// [-tol::pos, 0) are clamped to zero; anything lower throws.
ComplexMatrix psd_sqrt(const ComplexMatrix& m);

double max_abs(const ComplexMatrix& m);
double max_abs_diff(const ComplexMatrix& a, const ComplexMatrix& b);

/// (1/2) * sum |eigenvalues of a - b|, for Hermitian a, b.
double trace_distance(const ComplexMatrix& a, const ComplexMatrix& b);

}  // namespace unsharp
