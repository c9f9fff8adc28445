#pragma once

#include "unsharp/joint_measurability.hpp"
#include "unsharp/operators.hpp"

#include <cstdint>
#include <memory>
#include <variant>
#include <vector>

namespace unsharp {

/// Triangular partition of the unit sphere with exact spherical-triangle
/// solid angles as quadrature weights.
class SphereMesh {
 public:
  struct Cell {
    Vec3 center;
    double solid_angle;
  };

  /// Icosahedron subdivided `subdivisions` times: 20 * 4^k cells.  The
  /// default (k = 3) gives 1280 cells.
  static SphereMesh icosahedral(int subdivisions = 3);

  std::size_t cell_count() const { return cells_.size(); }
  const Cell& cell(std::size_t i) const { return cells_.at(i); }
  const std::vector<Cell>& cells() const { return cells_; }
  double total_solid_angle() const;

 private:
  explicit SphereMesh(std::vector<Cell> cells) : cells_(std::move(cells)) {}
  std::vector<Cell> cells_;
};

struct Cap {
  Vec3 axis;
  double half_angle;  // radians, in [0, pi]
};

struct Hemisphere {
  Vec3 axis;
};

struct MeshCells {
  std::shared_ptr<const SphereMesh> mesh;
  std::vector<std::size_t> cells;  // strictly increasing cell indices
};

using SphereRegion = std::variant<Cap, Hemisphere, MeshCells>;

MeshCells full_sphere_cells(std::shared_ptr<const SphereMesh> mesh);
MeshCells hemisphere_cells(std::shared_ptr<const SphereMesh> mesh, const Vec3& axis);

/// Effect of the covariant sphere POM G(Z) = (1/2pi) Int_Z (1/2)(I + n.sigma) dOmega.
/// Caps use the closed form (1/2)(1-cos t) I + (1/4) sin^2 t (m.sigma);
/// hemispheres the exact (1/2)(I + (1/2) n.sigma); mesh regions the
/// quadrature sum.
Effect covariant_effect(const SphereRegion& region);

/// Binary fuzzy spin observable from the two opposite hemisphere effects,
/// outcomes "+", "-"; sums to identity exactly.
DiscretePOM hemisphere_binary_pom(const Vec3& n0);

/// Checks the smearing identity: the hemisphere effect equals the sharp
/// binary observable along n0 post-processed by confusion rows
/// (3/4, 1/4), (1/4, 3/4), to 1e-12.
bool verify_smearing(const Vec3& n0);

/// Coexistence report for the two hemisphere observables along n0 and n0p.
JMReport pairwise_hemisphere_jm(const Vec3& n0, const Vec3& n0p);

/// Joint observable for a hemisphere pair, obtained by coarse-graining G to
/// the 2x2 grid of hemisphere intersections.  The lune integrals are exact:
/// the intersection of the hemispheres around u and v has solid angle
/// 2(pi - gamma) and Int n dOmega = (pi/2)(u + v), gamma the angle between
/// the axes.  Its marginals are the two hemisphere binary POMs exactly.
DiscretePOM hemisphere_pair_joint(const Vec3& u, const Vec3& v);

/// Quadrature counterpart of hemisphere_pair_joint: mesh cells classified by
/// the signs of (u . center, v . center).
DiscretePOM hemisphere_pair_joint_mesh(std::shared_ptr<const SphereMesh> mesh, const Vec3& u,
                                       const Vec3& v);

/// Monte Carlo estimate of the covariant matrix of a cap or hemisphere
/// region (uniform sphere sampling, seeded).  The estimate is Hermitian but
/// deliberately not forced through Effect validation; standard errors are
/// reported per entry for real and imaginary parts.
struct MonteCarloEstimate {
  ComplexMatrix mean;
  Eigen::MatrixXd std_error_re;
  Eigen::MatrixXd std_error_im;
  std::size_t samples;
};
MonteCarloEstimate monte_carlo_covariant_matrix(const SphereRegion& region, std::size_t samples,
                                                std::uint64_t seed);

}  // namespace unsharp
