#include "unsharp/sequential.hpp"

#include "unsharp/joint_measurability.hpp"
#include "unsharp/random.hpp"

#include <doctest.h>

#include <cmath>

using namespace unsharp;

TEST_SUITE("sequential") {

TEST_CASE("cached square roots square back to the effects") {
  Rng rng(501);
  for (int k = 0; k < 50; ++k) {
    const SequentialScheme s =
        make_sequential_scheme(Vec3(0, 0, 1), rng.uniform(), Vec3(1, 0, 0));
    for (std::size_t i = 0; i < 2; ++i) {
      const ComplexMatrix& r = s.first.sqrt_effect(i);
      CHECK(max_abs_diff(r * r, s.first.pom().effect(i).matrix()) <= 1e-10);
    }
  }
}

TEST_CASE("branches are trace-nonincreasing and sum to a trace-preserving map") {
  Rng rng(502);
  for (int k = 0; k < 50; ++k) {
    const SequentialScheme s = make_sequential_scheme(rng.unit_vector(), rng.uniform(), rng.unit_vector());
    const DensityOperator rho = rng.qubit_density();
    double total = 0.0;
    for (std::size_t i = 0; i < 2; ++i) {
      const double t = s.first.branch(rho, i).trace().real();
      CHECK(t >= -1e-12);
      CHECK(t <= 1.0 + 1e-12);
      total += t;
    }
    CHECK(std::abs(total - 1.0) <= 1e-12);
  }
}

TEST_CASE("trivial first measurement leaves the second observable untouched") {
  const SequentialScheme s = make_sequential_scheme(Vec3(0, 0, 1), 0.0, Vec3(1, 0, 0));
  const DiscretePOM joint = effective_joint_pom(s);
  for (std::size_t i = 0; i < 2; ++i)
    for (std::size_t j = 0; j < 2; ++j)
      CHECK(max_abs_diff(joint.effect(2 * i + j).matrix(),
                         0.5 * s.second.effect(j).matrix()) <= 1e-12);

  const DiscretePOM g2 = distorted_second_observable(s);
  for (std::size_t j = 0; j < 2; ++j)
    CHECK(max_abs_diff(g2.effect(j).matrix(), s.second.effect(j).matrix()) <= 1e-12);
}

TEST_CASE("repeatable sharp chain: same axis, full sharpness") {
  const SequentialScheme s = make_sequential_scheme(Vec3(0, 0, 1), 1.0, Vec3(0, 0, 1));
  const DiscretePOM joint = effective_joint_pom(s);
  CHECK(max_abs_diff(joint.effect(0).matrix(), projector(Vec3(0, 0, 1))) <= 1e-12);
  CHECK(max_abs(joint.effect(1).matrix()) <= 1e-12);
  CHECK(max_abs(joint.effect(2).matrix()) <= 1e-12);
  CHECK(max_abs_diff(joint.effect(3).matrix(), projector(Vec3(0, 0, -1))) <= 1e-12);
}

TEST_CASE("sharp first measurement erases an orthogonal second observable") {
  const SequentialScheme s = make_sequential_scheme(Vec3(0, 0, 1), 1.0, Vec3(1, 0, 0));
  const DiscretePOM g2 = distorted_second_observable(s);
  for (std::size_t j = 0; j < 2; ++j)
    CHECK(max_abs_diff(g2.effect(j).matrix(), 0.5 * identity_matrix(2)) <= 1e-12);
  // the distorted observable commutes with the first observable
  for (std::size_t i = 0; i < 2; ++i)
    for (std::size_t j = 0; j < 2; ++j)
      CHECK(commutator_norm(s.first.pom().effect(i).matrix(), g2.effect(j).matrix()) <= 1e-12);
}

TEST_CASE("distorted second observable shrinks the Bloch part to (1/2)sqrt(1-lambda^2)") {
  const SequentialScheme s = make_sequential_scheme(Vec3(0, 0, 1), 0.6, Vec3(1, 0, 0));
  const DiscretePOM g2 = distorted_second_observable(s);
  const QubitEffect q = matrix_to_qubit_effect(g2.effect(0));
  CHECK(q.a0 == doctest::Approx(0.5).epsilon(1e-12));
  CHECK(q.a.norm() == doctest::Approx(0.4).epsilon(1e-12));
  CHECK((q.a.normalized() - Vec3(1, 0, 0)).norm() <= 1e-12);
}

TEST_CASE("first margin equals the first observable for every sharpness") {
  Rng rng(503);
  for (double lambda : {0.0, 0.1, 0.25, 0.5, 0.75, 0.9, 1.0}) {
    const Vec3 n = rng.unit_vector();
    Vec3 m = rng.unit_vector();
    m = (m - m.dot(n) * n).normalized();
    const SequentialScheme s = make_sequential_scheme(n, lambda, m);
    const auto [first, second] = margins_of_joint(effective_joint_pom(s));
    for (std::size_t i = 0; i < 2; ++i)
      CHECK(max_abs_diff(first.effect(i).matrix(), s.first.pom().effect(i).matrix()) <= 1e-12);
  }
}

TEST_CASE("grid probabilities match the explicit two-step simulation") {
  Rng rng(504);
  for (int k = 0; k < 50; ++k) {
    const Vec3 n = rng.unit_vector();
    const SequentialScheme s = make_sequential_scheme(n, rng.uniform(), rng.unit_vector());
    const DensityOperator rho = rng.qubit_density();
    const auto direct = outcome_probabilities(rho, effective_joint_pom(s));
    const auto stepped = two_step_probabilities(s, rho);
    for (std::size_t i = 0; i < 4; ++i) CHECK(std::abs(direct[i] - stepped[i]) <= 1e-12);
  }
}

TEST_CASE("trade-off scan endpoints and the lambda = 0.8 row") {
  const auto rows =
      disturbance_tradeoff_scan(Vec3(0, 0, 1), Vec3(1, 0, 0), {0.0, 0.8, 1.0});
  REQUIRE(rows.size() == 3);
  CHECK(rows[0].first_acc == doctest::Approx(0.0).epsilon(1e-12));
  CHECK(rows[0].second_acc == doctest::Approx(0.5).epsilon(1e-12));
  CHECK(rows[0].jm_sum == doctest::Approx(1.0).epsilon(1e-12));
  CHECK(rows[1].first_acc == doctest::Approx(0.4).epsilon(1e-12));
  CHECK(rows[1].second_acc == doctest::Approx(0.3).epsilon(1e-12));
  CHECK(rows[1].jm_sum == doctest::Approx(1.0).epsilon(1e-12));
  CHECK(rows[2].first_acc == doctest::Approx(0.5).epsilon(1e-12));
  CHECK(rows[2].second_acc == doctest::Approx(0.0).epsilon(1e-12));
  CHECK(rows[2].jm_sum == doctest::Approx(1.0).epsilon(1e-12));
}

TEST_CASE("the margin pair saturates the unbiased boundary for all sharpness values") {
  std::vector<double> lambdas;
  for (int i = 0; i <= 100; ++i) lambdas.push_back(i / 100.0);
  for (const auto& row : disturbance_tradeoff_scan(Vec3(0, 1, 0), Vec3(0, 0, 1), lambdas))
    CHECK(std::abs(row.jm_sum - 1.0) <= 1e-9);
}

TEST_CASE("scan validation") {
  CHECK_THROWS_AS(disturbance_tradeoff_scan(Vec3(0, 0, 1), Vec3(0.1, 0, 1), {0.5}),
                  std::invalid_argument);
  CHECK_THROWS_AS(make_sequential_scheme(Vec3(0, 0, 1), 1.5, Vec3(1, 0, 0)),
                  std::invalid_argument);
  CHECK_THROWS_AS(make_sequential_scheme(Vec3(0, 0, 1), -0.1, Vec3(1, 0, 0)),
                  std::invalid_argument);
  CHECK_THROWS_AS(make_sequential_scheme(Vec3::Zero(), 0.5, Vec3(1, 0, 0)),
                  std::invalid_argument);
}

}  // TEST_SUITE
