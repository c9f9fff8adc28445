#include "unsharp/sphere_pom.hpp"

#include "unsharp/random.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

namespace unsharp {

namespace {

constexpr double kPi = std::numbers::pi;

Vec3 unit(const Vec3& v, const char* what) {
  const double n = v.norm();
  if (n < 1e-12) throw std::invalid_argument(std::string(what) + ": zero axis");
  return v / n;
}

double spherical_triangle_solid_angle(const Vec3& v1, const Vec3& v2, const Vec3& v3) {
  const double num = std::abs(v1.dot(v2.cross(v3)));
  const double den = 1.0 + v1.dot(v2) + v2.dot(v3) + v3.dot(v1);
  return 2.0 * std::atan2(num, den);
}

struct Triangle {
  Vec3 a, b, c;
};

}  // namespace

SphereMesh SphereMesh::icosahedral(int subdivisions) {
  if (subdivisions < 0 || subdivisions > 7)
    throw std::invalid_argument("SphereMesh: subdivisions out of range [0, 7]");

  const double t = (1.0 + std::sqrt(5.0)) / 2.0;
  const std::array<Vec3, 12> raw = {
      Vec3(-1, t, 0), Vec3(1, t, 0),  Vec3(-1, -t, 0), Vec3(1, -t, 0),
      Vec3(0, -1, t), Vec3(0, 1, t),  Vec3(0, -1, -t), Vec3(0, 1, -t),
      Vec3(t, 0, -1), Vec3(t, 0, 1),  Vec3(-t, 0, -1), Vec3(-t, 0, 1)};
  std::array<Vec3, 12> verts;
  for (std::size_t i = 0; i < raw.size(); ++i) verts[i] = raw[i].normalized();
  const int faces[20][3] = {{0, 11, 5}, {0, 5, 1},  {0, 1, 7},   {0, 7, 10}, {0, 10, 11},
                            {1, 5, 9},  {5, 11, 4}, {11, 10, 2}, {10, 7, 6}, {7, 1, 8},
                            {3, 9, 4},  {3, 4, 2},  {3, 2, 6},   {3, 6, 8},  {3, 8, 9},
                            {4, 9, 5},  {2, 4, 11}, {6, 2, 10},  {8, 6, 7},  {9, 8, 1}};

  std::vector<Triangle> tris;
  tris.reserve(20u << (2 * subdivisions));
  for (const auto& f : faces) tris.push_back({verts[f[0]], verts[f[1]], verts[f[2]]});

  for (int s = 0; s < subdivisions; ++s) {
    std::vector<Triangle> next;
    next.reserve(tris.size() * 4);
    for (const auto& tr : tris) {
      const Vec3 ab = (tr.a + tr.b).normalized();
      const Vec3 bc = (tr.b + tr.c).normalized();
      const Vec3 ca = (tr.c + tr.a).normalized();
      next.push_back({tr.a, ab, ca});
      next.push_back({ab, tr.b, bc});
      next.push_back({ca, bc, tr.c});
      next.push_back({ab, bc, ca});
    }
    tris = std::move(next);
  }

  std::vector<Cell> cells;
  cells.reserve(tris.size());
  for (const auto& tr : tris) {
    Cell c;
    c.center = (tr.a + tr.b + tr.c).normalized();
    c.solid_angle = spherical_triangle_solid_angle(tr.a, tr.b, tr.c);
    cells.push_back(c);
  }
  return SphereMesh(std::move(cells));
}

double SphereMesh::total_solid_angle() const {
  double sum = 0.0;
  for (const auto& c : cells_) sum += c.solid_angle;
  return sum;
}

MeshCells full_sphere_cells(std::shared_ptr<const SphereMesh> mesh) {
  if (!mesh) throw std::invalid_argument("full_sphere_cells: null mesh");
  MeshCells out;
  out.cells.resize(mesh->cell_count());
  for (std::size_t i = 0; i < out.cells.size(); ++i) out.cells[i] = i;
  out.mesh = std::move(mesh);
  return out;
}

MeshCells hemisphere_cells(std::shared_ptr<const SphereMesh> mesh, const Vec3& axis) {
  if (!mesh) throw std::invalid_argument("hemisphere_cells: null mesh");
  const Vec3 n = unit(axis, "hemisphere_cells");
  MeshCells out;
  for (std::size_t i = 0; i < mesh->cell_count(); ++i)
    if (n.dot(mesh->cell(i).center) >= 0.0) out.cells.push_back(i);
  out.mesh = std::move(mesh);
  return out;
}

namespace {

Effect cap_effect(const Cap& cap) {
  if (!(cap.half_angle >= 0.0 && cap.half_angle <= kPi))
    throw std::invalid_argument("covariant_effect: cap half-angle outside [0, pi]");
  const Vec3 m = unit(cap.axis, "covariant_effect");
  const double c = std::cos(cap.half_angle);
  const double s2 = std::sin(cap.half_angle) * std::sin(cap.half_angle);
  return Effect(bloch_operator(0.5 * (1.0 - c), 0.25 * s2 * m));
}

Effect hemisphere_effect(const Hemisphere& h) {
  return Effect(bloch_operator(0.5, 0.25 * unit(h.axis, "covariant_effect")));
}

Effect mesh_effect(const MeshCells& region) {
  if (!region.mesh) throw std::invalid_argument("covariant_effect: null mesh");
  if (!std::is_sorted(region.cells.begin(), region.cells.end()) ||
      std::adjacent_find(region.cells.begin(), region.cells.end()) != region.cells.end())
    throw std::invalid_argument("covariant_effect: cell indices must be strictly increasing");
  ComplexMatrix sum = ComplexMatrix::Zero(2, 2);
  for (std::size_t idx : region.cells) {
    if (idx >= region.mesh->cell_count())
      throw std::invalid_argument("covariant_effect: cell index out of range");
    const auto& c = region.mesh->cell(idx);
    sum += (c.solid_angle / (4.0 * kPi)) * bloch_operator(1.0, c.center);
  }
  return Effect(sum);
}

}  // namespace

Effect covariant_effect(const SphereRegion& region) {
  return std::visit(
      [](const auto& r) -> Effect {
        using T = std::decay_t<decltype(r)>;
        if constexpr (std::is_same_v<T, Cap>) return cap_effect(r);
        else if constexpr (std::is_same_v<T, Hemisphere>) return hemisphere_effect(r);
        else return mesh_effect(r);
      },
      region);
}

DiscretePOM hemisphere_binary_pom(const Vec3& n0) {
  const Vec3 n = unit(n0, "hemisphere_binary_pom");
  std::vector<Effect> effects;
  effects.emplace_back(bloch_operator(0.5, 0.25 * n));
  effects.emplace_back(bloch_operator(0.5, -0.25 * n));
  return DiscretePOM({"+", "-"}, std::move(effects));
}

bool verify_smearing(const Vec3& n0) {
  const Vec3 n = unit(n0, "verify_smearing");
  ConfusionMatrix confusion;
  confusion << 0.75, 0.25, 0.25, 0.75;
  const DiscretePOM smeared = smear_binary(sharp_binary_pom(n), confusion);
  const DiscretePOM hemi = hemisphere_binary_pom(n);
  return max_abs_diff(smeared.effect(0).matrix(), hemi.effect(0).matrix()) <= 1e-12 &&
         max_abs_diff(smeared.effect(1).matrix(), hemi.effect(1).matrix()) <= 1e-12;
}

JMReport pairwise_hemisphere_jm(const Vec3& n0, const Vec3& n0p) {
  const QubitEffect a(0.5, 0.25 * unit(n0, "pairwise_hemisphere_jm"));
  const QubitEffect b(0.5, 0.25 * unit(n0p, "pairwise_hemisphere_jm"));
  return jm_closed_form(a, b);
}

DiscretePOM hemisphere_pair_joint(const Vec3& u0, const Vec3& v0) {
  const Vec3 u = unit(u0, "hemisphere_pair_joint");
  const Vec3 v = unit(v0, "hemisphere_pair_joint");
  const double gamma = std::acos(std::clamp(u.dot(v), -1.0, 1.0));
  const double same = (kPi - gamma) / (2.0 * kPi);  // lune solid angle / 2pi
  const double diff = gamma / (2.0 * kPi);
  std::vector<Effect> effects;
  effects.emplace_back(bloch_operator(same, 0.125 * (u + v)));
  effects.emplace_back(bloch_operator(diff, 0.125 * (u - v)));
  effects.emplace_back(bloch_operator(diff, 0.125 * (v - u)));
  effects.emplace_back(bloch_operator(same, -0.125 * (u + v)));
  return DiscretePOM({kGridOutcomes.begin(), kGridOutcomes.end()}, std::move(effects));
}

DiscretePOM hemisphere_pair_joint_mesh(std::shared_ptr<const SphereMesh> mesh, const Vec3& u0,
                                       const Vec3& v0) {
  if (!mesh) throw std::invalid_argument("hemisphere_pair_joint_mesh: null mesh");
  const Vec3 u = unit(u0, "hemisphere_pair_joint_mesh");
  const Vec3 v = unit(v0, "hemisphere_pair_joint_mesh");
  std::array<ComplexMatrix, 4> sums;
  sums.fill(ComplexMatrix::Zero(2, 2));
  for (const auto& c : mesh->cells()) {
    const int i = u.dot(c.center) >= 0.0 ? 0 : 1;
    const int j = v.dot(c.center) >= 0.0 ? 0 : 1;
    sums[2 * i + j] += (c.solid_angle / (4.0 * kPi)) * bloch_operator(1.0, c.center);
  }
  std::vector<Effect> effects;
  for (auto& s : sums) effects.emplace_back(std::move(s));
  return DiscretePOM({kGridOutcomes.begin(), kGridOutcomes.end()}, std::move(effects));
}

MonteCarloEstimate monte_carlo_covariant_matrix(const SphereRegion& region, std::size_t samples,
                                                std::uint64_t seed) {
  if (samples == 0) throw std::invalid_argument("monte_carlo_covariant_matrix: zero samples");

  Vec3 axis;
  double cos_limit;
  if (const Cap* cap = std::get_if<Cap>(&region)) {
    if (!(cap->half_angle >= 0.0 && cap->half_angle <= kPi))
      throw std::invalid_argument("monte_carlo_covariant_matrix: cap half-angle outside [0, pi]");
    axis = unit(cap->axis, "monte_carlo_covariant_matrix");
    cos_limit = std::cos(cap->half_angle);
  } else if (const Hemisphere* h = std::get_if<Hemisphere>(&region)) {
    axis = unit(h->axis, "monte_carlo_covariant_matrix");
    cos_limit = 0.0;
  } else {
    throw std::invalid_argument("monte_carlo_covariant_matrix: mesh regions not supported");
  }

  // Per-entry running moments of T = chi_region(n) * (I + n.sigma); the
  // estimator (1/N) sum T has mean G(region).
  Eigen::Matrix2d sum_re = Eigen::Matrix2d::Zero(), sumsq_re = Eigen::Matrix2d::Zero();
  Eigen::Matrix2d sum_im = Eigen::Matrix2d::Zero(), sumsq_im = Eigen::Matrix2d::Zero();
  Rng rng(seed);
  for (std::size_t k = 0; k < samples; ++k) {
    const Vec3 n = rng.unit_vector();
    ComplexMatrix term = ComplexMatrix::Zero(2, 2);
    if (axis.dot(n) >= cos_limit) term = bloch_operator(1.0, n);
    for (int i = 0; i < 2; ++i)
      for (int j = 0; j < 2; ++j) {
        sum_re(i, j) += term(i, j).real();
        sumsq_re(i, j) += term(i, j).real() * term(i, j).real();
        sum_im(i, j) += term(i, j).imag();
        sumsq_im(i, j) += term(i, j).imag() * term(i, j).imag();
      }
  }

  MonteCarloEstimate out;
  out.samples = samples;
  out.mean = ComplexMatrix::Zero(2, 2);
  out.std_error_re = Eigen::MatrixXd::Zero(2, 2);
  out.std_error_im = Eigen::MatrixXd::Zero(2, 2);
  const double n = static_cast<double>(samples);
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 2; ++j) {
      const double mre = sum_re(i, j) / n;
      const double mim = sum_im(i, j) / n;
      out.mean(i, j) = Complex(mre, mim);
      out.std_error_re(i, j) = std::sqrt(std::max(0.0, sumsq_re(i, j) / n - mre * mre) / n);
      out.std_error_im(i, j) = std::sqrt(std::max(0.0, sumsq_im(i, j) / n - mim * mim) / n);
    }
  return out;
}

}  // namespace unsharp
