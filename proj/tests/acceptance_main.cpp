// Acceptance suite: one line per criterion, nonzero exit when any fails.
// Run through ctest, or directly:  acceptance --cli <path-to-unsharp-cli>

#include "unsharp/classical.hpp"
#include "unsharp/joint_measurability.hpp"
#include "unsharp/json_io.hpp"
#include "unsharp/operators.hpp"
#include "unsharp/random.hpp"
#include "unsharp/sequential.hpp"
#include "unsharp/sphere_pom.hpp"

#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <functional>
#include <numbers>
#include <sstream>
#include <string>
#include <vector>

using namespace unsharp;
namespace fs = std::filesystem;

namespace {

struct Check {
  bool ok = true;
  std::string detail;
  void require(bool cond, const std::string& msg) {
    if (!cond && ok) {
      ok = false;
      detail = msg;
    }
  }
};

std::string cli_path;

double elapsed_s(std::chrono::steady_clock::time_point t0) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

// ---------------------------------------------------------------------------
// 1. closed form vs constructive oracle on 1000 seeded pairs
void criterion_oracle_agreement(Check& c) {
  const auto t0 = std::chrono::steady_clock::now();
  Rng rng(20250801);
  int compared = 0;
  for (int k = 0; k < 1000; ++k) {
    const QubitEffect a = rng.qubit_effect();
    const QubitEffect b = rng.qubit_effect();
    const JMReport rep = jm_closed_form(a, b);
    const OracleResult orc = jm_oracle(a, b, 1e-7);
    if (std::abs(rep.margin) <= 1e-6) continue;
    ++compared;
    c.require(orc.verdict == rep.verdict,
              "verdict mismatch at pair " + std::to_string(k) + " (margin " +
                  std::to_string(rep.margin) + ")");
  }
  c.require(compared > 900, "too few pairs outside the boundary band");
  const double dt = elapsed_s(t0);
  c.require(dt < 60.0, "runtime " + std::to_string(dt) + " s exceeds 60 s");
}

// ---------------------------------------------------------------------------
// 2. the two unbiased criteria agree, and the general margin reduces to the
//    unbiased margin
void criterion_unbiased_equivalence(Check& c) {
  Rng rng(20250802);
  for (int k = 0; k < 100000; ++k) {
    const Vec3 a = rng.unbiased_bloch();
    const Vec3 b = rng.unbiased_bloch();
    const auto vec = jm_unbiased_vector_form(a, b);
    const auto sum = jm_unbiased_sum_form(a, b);
    if (std::abs(vec.margin) > 1e-12 && std::abs(sum.value - 1.0) > 1e-12)
      c.require(vec.holds == sum.holds, "unbiased forms disagree at sample " + std::to_string(k));
    const JMReport rep = jm_closed_form(QubitEffect(0.5, a), QubitEffect(0.5, b));
    c.require(std::abs(rep.margin - vec.margin) <= 1e-12,
              "general margin does not reduce to the unbiased margin at sample " +
                  std::to_string(k));
  }
}

// ---------------------------------------------------------------------------
// 3. hemisphere effects coexist for every axis pair, saturating sqrt(2)/2 at
//    orthogonal axes
void criterion_hemisphere_pairs(Check& c) {
  Rng rng(20250803);
  for (int k = 0; k < 1000; ++k) {
    const Vec3 n = rng.unit_vector();
    const Vec3 np = rng.unit_vector();
    const JMReport rep = pairwise_hemisphere_jm(n, np);
    c.require(rep.verdict == JMVerdict::JointlyMeasurable,
              "hemisphere pair not jointly measurable at sample " + std::to_string(k));
    const double value = jm_unbiased_sum_form(0.25 * n, 0.25 * np).value;
    c.require(value <= 1.0 + 1e-12, "sum-form value exceeds 1");
  }
  for (int k = 0; k < 100; ++k) {
    const Vec3 n = rng.unit_vector();
    Vec3 m = rng.unit_vector();
    m = (m - m.dot(n) * n).normalized();
    const double value = jm_unbiased_sum_form(0.25 * n, 0.25 * m).value;
    c.require(std::abs(value - std::sqrt(2.0) / 2.0) <= 1e-12,
              "orthogonal-axis sum-form value is not sqrt(2)/2");
  }
}

// ---------------------------------------------------------------------------
// 4. sphere POM: exact hemisphere value, Monte Carlo 3 sigma, mesh
//    normalization, smearing identity
void criterion_sphere_pom(Check& c) {
  Rng rng(20250804);
  for (int k = 0; k < 50; ++k) {
    const Vec3 n = rng.unit_vector();
    c.require(max_abs_diff(covariant_effect(Hemisphere{n}).matrix(),
                           bloch_operator(0.5, 0.25 * n)) <= 1e-15,
              "hemisphere effect is not exactly (1/2)(I + n.sigma/2)");
  }

  for (const Vec3& axis : {Vec3(0, 0, 1), rng.unit_vector()}) {
    const Effect exact = covariant_effect(Hemisphere{axis});
    const auto mc = monte_carlo_covariant_matrix(Hemisphere{axis}, 1000000, 424242);
    for (int i = 0; i < 2; ++i)
      for (int j = 0; j < 2; ++j) {
        c.require(std::abs(mc.mean(i, j).real() - exact.matrix()(i, j).real()) <=
                      3.0 * mc.std_error_re(i, j) + 1e-12,
                  "Monte Carlo real part off by more than 3 sigma");
        c.require(std::abs(mc.mean(i, j).imag() - exact.matrix()(i, j).imag()) <=
                      3.0 * mc.std_error_im(i, j) + 1e-12,
                  "Monte Carlo imaginary part off by more than 3 sigma");
      }
  }

  const auto mesh = std::make_shared<const SphereMesh>(SphereMesh::icosahedral(3));
  c.require(max_abs_diff(covariant_effect(full_sphere_cells(mesh)).matrix(),
                         identity_matrix(2)) <= 1e-6,
            "mesh full-sphere effect does not normalize to the identity");

  for (int k = 0; k < 100; ++k)
    c.require(verify_smearing(rng.unit_vector()), "smearing identity failed");
}

// ---------------------------------------------------------------------------
// 5. sharp observables: jointly measurable exactly when they commute
void criterion_sharp_commutation(Check& c) {
  Rng rng(20250805);
  for (int k = 0; k < 1000; ++k) {
    QubitEffect a(0.5, 0.5 * rng.unit_vector());
    QubitEffect b(0.5, 0.5 * rng.unit_vector());
    const double dice = rng.uniform();
    if (dice < 0.05) b = a;  // identical
    else if (dice < 0.10) b = QubitEffect(0.5, -a.a);  // complementary
    else if (dice < 0.15) b = QubitEffect(rng.uniform() < 0.5 ? 1.0 : 0.0, Vec3::Zero());  // trivial

    const bool commute = commutator_norm(bloch_operator(a.a0, a.a), bloch_operator(b.a0, b.a)) < 1e-10;
    // the coexistence inequality is closed: boundary cases are measurable
    const bool measurable = jm_closed_form(a, b).verdict != JMVerdict::NotJointlyMeasurable;
    c.require(measurable == commute, "verdict and commutation disagree at sample " + std::to_string(k));
  }
}

// ---------------------------------------------------------------------------
// 6. sequential measurement: undisturbed first margin, erased orthogonal
//    observable at full sharpness, boundary saturation along the sweep
void criterion_sequential(Check& c) {
  Rng rng(20250806);
  const Vec3 n = rng.unit_vector();
  Vec3 m = rng.unit_vector();
  m = (m - m.dot(n) * n).normalized();

  std::vector<double> lambdas;
  for (int i = 0; i <= 100; ++i) lambdas.push_back(i / 100.0);

  for (double lambda : lambdas) {
    const SequentialScheme s = make_sequential_scheme(n, lambda, m);
    const auto [first, second] = margins_of_joint(effective_joint_pom(s));
    for (std::size_t i = 0; i < 2; ++i)
      c.require(max_abs_diff(first.effect(i).matrix(), s.first.pom().effect(i).matrix()) <= 1e-12,
                "first margin deviates from the first observable");
  }

  const SequentialScheme sharp = make_sequential_scheme(n, 1.0, m);
  const DiscretePOM g2 = distorted_second_observable(sharp);
  for (std::size_t j = 0; j < 2; ++j) {
    c.require(max_abs_diff(g2.effect(j).matrix(), 0.5 * identity_matrix(2)) <= 1e-12,
              "sharp first measurement does not erase the orthogonal observable");
    for (std::size_t i = 0; i < 2; ++i)
      c.require(commutator_norm(sharp.first.pom().effect(i).matrix(), g2.effect(j).matrix()) <= 1e-12,
                "distorted observable fails to commute with the first observable");
  }

  for (const auto& row : disturbance_tradeoff_scan(n, m, lambdas))
    c.require(std::abs(row.jm_sum - 1.0) <= 1e-9, "sweep does not saturate the boundary");
}

// ---------------------------------------------------------------------------
// 7. tomography round trip through the tetrahedral frame
void criterion_tomography(Check& c) {
  const ICObservable tetra = ICObservable::tetrahedral();
  Rng rng(20250807);
  for (int k = 0; k < 1000; ++k) {
    const DensityOperator rho = rng.qubit_density();
    const DensityOperator back = reconstruct(embed(rho, tetra), tetra);
    c.require(trace_distance(back.matrix(), rho.matrix()) <= 1e-10,
              "round trip exceeded 1e-10 at sample " + std::to_string(k));
  }
}

// ---------------------------------------------------------------------------
// 8. non-surjectivity witness for P(z)
void criterion_witness(Check& c) {
  const ICObservable tetra = ICObservable::tetrahedral();
  const auto w = surjectivity_witness(Effect(projector(Vec3(0, 0, 1))), tetra);
  c.require(std::abs(w.f(0) - 2.0) <= 1e-12, "witness f1 is not 2");
  for (int i = 1; i < 4; ++i) c.require(std::abs(w.f(i)) <= 1e-12, "witness tail is not 0");
  c.require(!w.proper, "witness should be improper");
  c.require(w.violates_upper && !w.violates_lower, "witness should break the upper bound only");

  Eigen::VectorXd f(4);
  f << 2.0, 0.0, 0.0, 0.0;
  c.require(max_abs_diff(quantize(f, tetra).op, projector(Vec3(0, 0, 1))) <= 1e-12,
            "quantizing (2,0,0,0) does not give P(z)");
}

// ---------------------------------------------------------------------------
// 9. Misra representation: surjectivity, duality, universal fuzziness,
//    non-separation
void criterion_misra(Check& c) {
  Rng rng(20250809);
  for (int k = 0; k < 1000; ++k) {
    const DensityOperator rho = rng.qubit_density();
    c.require(max_abs_diff(misra_reduce(eigenstate_decomposition(rho)).matrix(), rho.matrix()) <=
                  1e-12,
              "eigendecomposition does not reduce back");
  }

  for (int k = 0; k < 1000; ++k) {
    std::vector<ClassicalState::Atom> atoms;
    const int count = 1 + static_cast<int>(rng.uniform(0.0, 10.0));
    std::vector<double> w(count);
    double total = 0.0;
    for (double& x : w) {
      x = rng.uniform(0.05, 1.0);
      total += x;
    }
    double assigned = 0.0;
    for (int i = 0; i < count - 1; ++i) {
      atoms.push_back({PurePoint(rng.unit_vector()), w[i] / total});
      assigned += w[i] / total;
    }
    atoms.push_back({PurePoint(rng.unit_vector()), 1.0 - assigned});
    const ClassicalState mu(std::move(atoms));
    const auto pair = duality_check(mu, qubit_effect_to_matrix(rng.qubit_effect()));
    c.require(std::abs(pair.lhs - pair.rhs) <= 1e-12, "duality mismatch");
  }

  for (int k = 0; k < 100; ++k) {
    const ClassicalEffect f = misra_dual(Effect(projector(rng.unit_vector())));
    int interior = 0;
    Rng sampler(90000 + k);
    for (int s = 0; s < 10000; ++s) {
      const double v = f(PurePoint(sampler.unit_vector()));
      if (v >= 0.01 && v <= 0.99) ++interior;
    }
    c.require(interior > 9000, "projection does not look fuzzy enough classically");
  }

  const ClassicalState mu1({{PurePoint(Vec3(0, 0, 1)), 0.5}, {PurePoint(Vec3(0, 0, -1)), 0.5}});
  const ClassicalState mu2({{PurePoint(Vec3(1, 0, 0)), 0.5}, {PurePoint(Vec3(-1, 0, 0)), 0.5}});
  for (int k = 0; k < 100; ++k) {
    const Effect e = qubit_effect_to_matrix(rng.qubit_effect());
    c.require(std::abs(duality_check(mu1, e).lhs - duality_check(mu2, e).lhs) <= 1e-12,
              "states with one barycenter were separated");
  }
}

// ---------------------------------------------------------------------------
// 10. single-shot distinguishability on handcrafted pairs
void criterion_single_shot(Check& c) {
  Rng rng(20250810);

  for (int k = 0; k < 25; ++k) {  // orthogonal pure qubit pairs
    const Vec3 n = rng.unit_vector();
    c.require(single_shot_distinguishable(pure_state(n), pure_state(-n)),
              "antipodal pure pair not distinguishable");
  }

  for (int k = 0; k < 25; ++k) {  // nonorthogonal pure qubit pairs
    const Vec3 n = rng.unit_vector();
    Vec3 m = rng.unit_vector();
    if ((n + m).norm() < 0.2) m = -m;  // keep away from antipodal
    c.require(!single_shot_distinguishable(pure_state(n), pure_state(m)),
              "nonorthogonal pure pair flagged distinguishable");
  }

  for (int k = 0; k < 25; ++k) {  // orthogonal mixed pairs on disjoint blocks (dim 4)
    ComplexMatrix r1 = ComplexMatrix::Zero(4, 4);
    ComplexMatrix r2 = ComplexMatrix::Zero(4, 4);
    const double p = rng.uniform(0.2, 0.8);
    const double q = rng.uniform(0.2, 0.8);
    r1(0, 0) = p;
    r1(1, 1) = 1.0 - p;
    r2(2, 2) = q;
    r2(3, 3) = 1.0 - q;
    c.require(single_shot_distinguishable(DensityOperator(r1), DensityOperator(r2)),
              "block-orthogonal mixed pair not distinguishable");
  }

  for (int k = 0; k < 25; ++k) {  // full-rank mixed qubit pairs share support
    const DensityOperator r1(bloch_operator(0.5, 0.5 * rng.uniform(0.0, 0.9) * rng.unit_vector()));
    const DensityOperator r2(bloch_operator(0.5, 0.5 * rng.uniform(0.0, 0.9) * rng.unit_vector()));
    c.require(!single_shot_distinguishable(r1, r2),
              "overlapping mixed pair flagged distinguishable");
  }
}

// ---------------------------------------------------------------------------
// 11. CLI determinism: byte-identical outputs across two runs, plus exit codes
struct Scenario {
  std::string name;
  std::string args;  // after the binary, before -o
  std::string input_json;
  bool via_stdin = false;
};

int run_cli(const std::string& args, const std::string& stdin_file, const std::string& out_file) {
  std::string cmd = "'" + cli_path + "' " + args;
  if (!stdin_file.empty()) cmd += " < '" + stdin_file + "'";
  cmd += " > '" + out_file + "' 2> '" + out_file + ".err'";
  const int status = std::system(cmd.c_str());
  if (status < 0) return -1;
  return WEXITSTATUS(status);
}

std::string slurp(const fs::path& p) {
  std::ifstream f(p, std::ios::binary);
  std::ostringstream ss;
  ss << f.rdbuf();
  return ss.str();
}

void criterion_cli_determinism(Check& c) {
  if (cli_path.empty()) {
    c.require(false, "no --cli path given");
    return;
  }

  const fs::path root = fs::path("acceptance_cli");
  fs::remove_all(root);
  fs::create_directories(root / "runA");
  fs::create_directories(root / "runB");

  const std::vector<Scenario> scenarios = {
      {"jm-check-fuzzy", "jm-check",
       R"({"A": {"a0": 0.5, "a": [0, 0, 0.25]}, "B": {"a0": 0.5, "a": [0.25, 0, 0]}})", false},
      {"jm-check-sharp", "jm-check",
       R"({"A": {"a0": 0.5, "a": [0, 0, 0.5]}, "B": {"a0": 0.5, "a": [0.5, 0, 0]}})", false},
      {"jm-check-stdin", "jm-check -i -",
       R"({"A": {"a0": 0.6, "a": [0.1, 0, 0.2]}, "B": {"a0": 0.5, "a": [0, 0.3, 0]}})", true},
      {"jm-scan", "jm-scan",
       R"({"abs_a": {"min": 0.05, "max": 0.45, "steps": 3},
           "abs_b": {"min": 0.05, "max": 0.45, "steps": 3},
           "angle_deg": {"min": 0, "max": 90, "steps": 3}})",
       false},
      {"oracle", "oracle",
       R"({"A": {"a0": 0.5, "a": [0, 0, 0.25]}, "B": {"a0": 0.5, "a": [0.25, 0, 0]}})", false},
      {"spin-pom", "spin-pom --seed 7",
       R"({"region": {"cap": {"axis": [0, 0, 1], "half_angle_deg": 60}}, "mc_samples": 20000})",
       false},
      {"seq-scan", "seq-scan",
       R"({"n": [0, 0, 1], "m": [1, 0, 0], "lambdas": [0, 0.25, 0.5, 0.75, 1]})", false},
      {"tomo-embed", "tomo", R"({"rho": [[1, 0], [0, 0]]})", false},
      {"tomo-reconstruct", "tomo", R"({"p": [0.25, 0.25, 0.25, 0.25]})", false},
      {"classical-reduce", "classical",
       R"({"op": "misra-reduce",
           "state": {"atoms": [{"bloch": [0,0,1], "w": 0.5}, {"bloch": [1,0,0], "w": 0.5}]}})",
       false},
      {"classical-witness", "classical",
       R"({"op": "witness", "target": {"a0": 0.5, "a": [0, 0, 0.5]}})", false},
      {"classical-duality", "classical",
       R"({"op": "duality",
           "state": {"atoms": [{"bloch": [0,0,1], "w": 0.5}, {"bloch": [1,0,0], "w": 0.5}]},
           "effect": {"a0": 0.5, "a": [0, 0, 0.5]}})",
       false},
      {"classical-relabel", "classical",
       R"({"op": "relabel",
           "state": {"atoms": [{"bloch": [0,0,1], "w": 0.5}, {"bloch": [0,0,-1], "w": 0.5}]},
           "map": {"antipodal": true}})",
       false},
  };

  for (const char* run : {"runA", "runB"}) {
    for (const auto& s : scenarios) {
      const fs::path dir = root / run;
      const fs::path in = dir / (s.name + ".in.json");
      const fs::path out = dir / (s.name + ".out");
      {
        std::ofstream f(in);
        f << s.input_json;
      }
      int code;
      if (s.via_stdin)
        code = run_cli(s.args, in.string(), out.string());
      else
        code = run_cli(s.args + " -i '" + in.string() + "'", "", out.string());
      c.require(code == 0, s.name + " exited with code " + std::to_string(code));
    }
  }

  for (const auto& s : scenarios) {
    const std::string a = slurp(root / "runA" / (s.name + ".out"));
    const std::string b = slurp(root / "runB" / (s.name + ".out"));
    c.require(!a.empty(), s.name + " produced no output");
    c.require(a == b, s.name + " output differs between runs");
  }

  // jm-scan row count: header + 27 grid rows
  {
    std::istringstream scan(slurp(root / "runA" / "jm-scan.out"));
    int lines = 0;
    std::string line;
    while (std::getline(scan, line))
      if (!line.empty()) ++lines;
    c.require(lines == 28, "jm-scan should emit 28 lines, got " + std::to_string(lines));
  }

  // seq-scan row count: header + one row per sharpness value
  {
    const fs::path in = root / "seq-scan-rows.in.json";
    const fs::path out = root / "seq-scan-rows.out";
    {
      std::ofstream f(in);
      f << R"({"n": [0, 0, 1], "m": [1, 0, 0], "lambdas": [0, 0.5, 1]})";
    }
    c.require(run_cli("seq-scan -i '" + in.string() + "'", "", out.string()) == 0,
              "seq-scan row scenario failed");
    std::istringstream scan(slurp(out));
    int lines = 0;
    std::string line;
    while (std::getline(scan, line))
      if (!line.empty()) ++lines;
    c.require(lines == 4, "seq-scan should emit 4 lines for 3 sharpness values, got " +
                              std::to_string(lines));
  }

  // jm-scan row contents at the worked grid points
  {
    const fs::path in = root / "jm-scan-content.in.json";
    const fs::path out = root / "jm-scan-content.out";
    {
      std::ofstream f(in);
      f << R"({"abs_a": {"min": 0.25, "max": 0.5, "steps": 2},
               "abs_b": {"min": 0.25, "max": 0.5, "steps": 2},
               "angle_deg": {"min": 90, "max": 90, "steps": 1}})";
    }
    c.require(run_cli("jm-scan -i '" + in.string() + "'", "", out.string()) == 0,
              "jm-scan content scenario failed");
    const std::string text = slurp(out);
    c.require(text.find("0.25,0.25,90,0.5,JointlyMeasurable") != std::string::npos,
              "missing the jointly measurable row at (1/4, 1/4, 90 deg)");
    c.require(text.find("0.5,0.5,90,-1,NotJointlyMeasurable") != std::string::npos,
              "missing the infeasible row at (1/2, 1/2, 90 deg)");
  }

  // exit-code contract: 2 for bad input, 0 for help
  const fs::path err_out = root / "err.out";
  c.require(run_cli("jm-check -i '{\"A\": {\"a0\": 0.5, \"a\": [0.6, 0, 0]}, \"B\": {\"a0\": 0.5, "
                    "\"a\": [0, 0, 0.1]}}'",
                    "", err_out.string()) == 2,
            "invalid effect should exit 2");
  c.require(run_cli("seq-scan -i '{\"n\": [0,0,1], \"m\": [0.3,0,1], \"lambdas\": [0.5]}'", "",
                    err_out.string()) == 2,
            "non-orthogonal axes should exit 2");
  c.require(run_cli("seq-scan -i '{\"n\": [0,0,1], \"m\": [1,0,0], \"lambdas\": []}'", "",
                    err_out.string()) == 2,
            "empty lambda list should exit 2");
  c.require(run_cli("jm-scan -i '{\"abs_a\": {\"min\": 0, \"max\": 0.4, \"steps\": 0}, \"abs_b\": "
                    "{\"min\": 0, \"max\": 0.4, \"steps\": 2}, \"angle_deg\": {\"min\": 0, "
                    "\"max\": 90, \"steps\": 2}}'",
                    "", err_out.string()) == 2,
            "empty range should exit 2");
  c.require(run_cli("jm-check --bogus-flag -i '{}'", "", err_out.string()) == 2,
            "unknown flag should exit 2");
  c.require(run_cli("tomo -i '{\"p\": [0.3, 0.3, 0.3, 0.3]}'", "", err_out.string()) == 2,
            "inconsistent probabilities should exit 2");
  c.require(run_cli("--help", "", err_out.string()) == 0, "--help should exit 0");
}

}  // namespace

int main(int argc, char** argv) {
  for (int i = 1; i + 1 < argc; ++i)
    if (std::string(argv[i]) == "--cli") cli_path = argv[i + 1];

  struct Criterion {
    const char* name;
    std::function<void(Check&)> run;
  };
  const std::vector<Criterion> criteria = {
      {"01 closed-form vs oracle verdicts agree on 1000 seeded pairs, under 60 s",
       criterion_oracle_agreement},
      {"02 unbiased criteria agree on 1e5 pairs; general margin reduces to unbiased margin",
       criterion_unbiased_equivalence},
      {"03 hemisphere effects coexist for all axis pairs; sqrt(2)/2 at orthogonal axes",
       criterion_hemisphere_pairs},
      {"04 sphere POM: exact hemisphere, Monte Carlo 3 sigma, mesh normalization, smearing",
       criterion_sphere_pom},
      {"05 sharp observables commute iff jointly measurable (1000 pairs)",
       criterion_sharp_commutation},
      {"06 sequential: exact first margin, erased orthogonal observable, boundary saturation",
       criterion_sequential},
      {"07 tomography round trip within 1e-10 on 1000 states", criterion_tomography},
      {"08 non-surjectivity witness (2,0,0,0) and its quantization", criterion_witness},
      {"09 Misra maps: surjectivity, duality, universal fuzziness, non-separation",
       criterion_misra},
      {"10 single-shot distinguishability on 100 handcrafted pairs", criterion_single_shot},
      {"11 CLI determinism: byte-identical outputs and exit-code contract",
       criterion_cli_determinism},
  };

  int failures = 0;
  for (const auto& criterion : criteria) {
    const auto t0 = std::chrono::steady_clock::now();
    Check c;
    try {
      criterion.run(c);
    } catch (const std::exception& e) {
      c.require(false, std::string("exception: ") + e.what());
    }
    const double dt = elapsed_s(t0);
    if (c.ok) {
      std::printf("[PASS] %s (%.2f s)\n", criterion.name, dt);
    } else {
      ++failures;
      std::printf("[FAIL] %s: %s\n", criterion.name, c.detail.c_str());
    }
  }
  return failures;
}
