// Command-line front end: JSON in, JSON/CSV out, deterministic under a fixed
// seed.  Exit codes: 0 success, 2 input error, 3 numerical failure.

#include "unsharp/classical.hpp"
#include "unsharp/joint_measurability.hpp"
#include "unsharp/json_io.hpp"
#include "unsharp/operators.hpp"
#include "unsharp/sequential.hpp"
#include "unsharp/sphere_pom.hpp"

#include <CLI11.hpp>

#include <charconv>
#include <cmath>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <numbers>
#include <sstream>
#include <string>

namespace {

using namespace unsharp;

struct Options {
  std::string input = "-";
  std::string output = "-";
  std::uint64_t seed = 0;
  std::string format;  // per-command default applied later
};

// All floating output carries 12 significant digits, '.' decimal separator.
std::string fmt12(double v) {
  char buf[40];
  const auto res = std::to_chars(buf, buf + sizeof(buf), v, std::chars_format::general, 12);
  return std::string(buf, res.ptr);
}

double round12(double v) {
  if (v == 0.0) return 0.0;  // flush -0
  const std::string s = fmt12(v);
  double out = v;
  std::from_chars(s.data(), s.data() + s.size(), out);
  return out;
}

void round_numbers(Json& j) {
  if (j.is_number_float())
    j = round12(j.get<double>());
  else if (j.is_array() || j.is_object())
    for (auto& item : j) round_numbers(item);
}

Json read_input(const std::string& source) {
  std::string text;
  if (source == "-") {
    std::ostringstream ss;
    ss << std::cin.rdbuf();
    text = ss.str();
  } else if (!source.empty() && (source.front() == '{' || source.front() == '[')) {
    text = source;
  } else {
    std::ifstream file(source);
    if (!file) throw std::invalid_argument("cannot open input file: " + source);
    std::ostringstream ss;
    ss << file.rdbuf();
    text = ss.str();
  }
  return Json::parse(text);
}

void write_output(const std::string& dest, const std::string& text) {
  if (dest == "-") {
    std::cout << text;
    return;
  }
  std::ofstream file(dest, std::ios::binary);
  if (!file) throw std::invalid_argument("cannot open output file: " + dest);
  file << text;
}

std::string dump(Json j) {
  round_numbers(j);
  return j.dump(2) + "\n";
}

struct Linspace {
  double lo = 0, hi = 0;
  int steps = 0;
  double at(int i) const {
    return steps == 1 ? lo : lo + (hi - lo) * static_cast<double>(i) / (steps - 1);
  }
};

Linspace linspace_from_json(const Json& j, const char* name) {
  if (!j.is_object() || !j.contains("min") || !j.contains("max") || !j.contains("steps"))
    throw std::invalid_argument(std::string(name) +
                                ": expected {\"min\": ., \"max\": ., \"steps\": n}");
  Linspace out;
  out.lo = j["min"].get<double>();
  out.hi = j["max"].get<double>();
  out.steps = j["steps"].get<int>();
  if (out.steps < 1) throw std::invalid_argument(std::string(name) + ": empty range");
  if (out.hi < out.lo) throw std::invalid_argument(std::string(name) + ": max < min");
  return out;
}

std::string run_jm_check(const Json& in, const Options&) {
  if (!in.is_object() || !in.contains("A") || !in.contains("B"))
    throw std::invalid_argument("jm-check: expected {\"A\": effect, \"B\": effect}");
  const QubitEffect a = qubit_effect_from_json(in["A"]);
  const QubitEffect b = qubit_effect_from_json(in["B"]);
  const JMReport report = jm_closed_form(a, b);
  const OracleResult oracle = jm_oracle(a, b, in.value("tol", 1e-7));

  Json out = jm_report_to_json(report);
  out["oracle"] = oracle_result_to_json(oracle);
  out["agreement"] = to_string(report.verdict) == to_string(oracle.verdict);
  return dump(out);
}

std::string run_jm_scan(const Json& in, const Options& opt) {
  if (!in.is_object()) throw std::invalid_argument("jm-scan: expected a grid object");
  const Linspace la = linspace_from_json(in.value("abs_a", Json()), "abs_a");
  const Linspace lb = linspace_from_json(in.value("abs_b", Json()), "abs_b");
  const Linspace lt = linspace_from_json(in.value("angle_deg", Json()), "angle_deg");

  Json rows = Json::array();
  std::ostringstream csv;
  csv << "abs_a,abs_b,angle_deg,margin,verdict\n";
  for (int i = 0; i < la.steps; ++i)
    for (int j = 0; j < lb.steps; ++j)
      for (int k = 0; k < lt.steps; ++k) {
        const double ra = la.at(i), rb = lb.at(j), deg = lt.at(k);
        const double rad = deg * std::numbers::pi / 180.0;
        const Vec3 a(ra, 0, 0);
        const Vec3 b(rb * std::cos(rad), rb * std::sin(rad), 0);
        const JMReport rep = jm_closed_form(QubitEffect(0.5, a), QubitEffect(0.5, b));
        if (opt.format == "csv")
          csv << fmt12(ra) << ',' << fmt12(rb) << ',' << fmt12(deg) << ',' << fmt12(rep.margin)
              << ',' << to_string(rep.verdict) << "\n";
        else
          rows.push_back(Json{{"abs_a", ra},
                              {"abs_b", rb},
                              {"angle_deg", deg},
                              {"margin", rep.margin},
                              {"verdict", to_string(rep.verdict)}});
      }
  return opt.format == "csv" ? csv.str() : dump(rows);
}

std::string run_oracle(const Json& in, const Options&) {
  if (!in.is_object() || !in.contains("A") || !in.contains("B"))
    throw std::invalid_argument("oracle: expected {\"A\": effect, \"B\": effect}");
  const QubitEffect a = qubit_effect_from_json(in["A"]);
  const QubitEffect b = qubit_effect_from_json(in["B"]);
  return dump(oracle_result_to_json(jm_oracle(a, b, in.value("tol", 1e-7))));
}

std::string run_spin_pom(const Json& in, const Options& opt) {
  if (!in.is_object() || !in.contains("region"))
    throw std::invalid_argument("spin-pom: expected {\"region\": ...}");
  const SphereRegion region = region_from_json(in["region"]);
  const Effect e = covariant_effect(region);
  Json out{{"matrix", matrix_to_json(e.matrix())},
           {"qubit", qubit_effect_to_json(matrix_to_qubit_effect(e))}};
  if (in.contains("mc_samples")) {
    const auto samples = in["mc_samples"].get<std::int64_t>();
    if (samples <= 0) throw std::invalid_argument("spin-pom: mc_samples must be positive");
    const auto mc =
        monte_carlo_covariant_matrix(region, static_cast<std::size_t>(samples), opt.seed);
    double worst_se = 0.0;
    for (int i = 0; i < 2; ++i)
      for (int j = 0; j < 2; ++j)
        worst_se = std::max({worst_se, mc.std_error_re(i, j), mc.std_error_im(i, j)});
    out["mc"] = Json{{"matrix", matrix_to_json(mc.mean)},
                     {"std_error", worst_se},
                     {"samples", mc.samples},
                     {"seed", opt.seed}};
  }
  return dump(out);
}

std::string run_seq_scan(const Json& in, const Options& opt) {
  if (!in.is_object() || !in.contains("n") || !in.contains("m") || !in.contains("lambdas"))
    throw std::invalid_argument("seq-scan: expected {\"n\": [...], \"m\": [...], \"lambdas\": [...]}");
  const Vec3 n = vec3_from_json(in["n"]);
  const Vec3 m = vec3_from_json(in["m"]);
  const auto lambdas = in["lambdas"].get<std::vector<double>>();
  if (lambdas.empty()) throw std::invalid_argument("seq-scan: empty lambda list");
  const auto rows = disturbance_tradeoff_scan(n, m, lambdas);

  if (opt.format == "csv") {
    std::ostringstream csv;
    csv << "lambda,first_acc,second_acc,jm_sum\n";
    for (const auto& r : rows)
      csv << fmt12(r.lambda) << ',' << fmt12(r.first_acc) << ',' << fmt12(r.second_acc) << ','
          << fmt12(r.jm_sum) << "\n";
    return csv.str();
  }
  Json out = Json::array();
  for (const auto& r : rows)
    out.push_back(Json{{"lambda", r.lambda},
                       {"first_acc", r.first_acc},
                       {"second_acc", r.second_acc},
                       {"jm_sum", r.jm_sum}});
  return dump(out);
}

ICObservable frame_from_json(const Json& in) {
  if (in.contains("frame_axes")) {
    std::vector<Vec3> axes;
    for (const auto& t : in["frame_axes"]) axes.push_back(vec3_from_json(t));
    return ICObservable::from_axes(axes);
  }
  return ICObservable::tetrahedral();
}

std::string run_tomo(const Json& in, const Options&) {
  if (!in.is_object() || in.contains("rho") == in.contains("p"))
    throw std::invalid_argument("tomo: expected exactly one of \"rho\" or \"p\"");
  const ICObservable frame = frame_from_json(in);
  if (in.contains("rho")) {
    const Eigen::VectorXd p = embed(density_from_json(in["rho"]), frame);
    Json out{{"p", std::vector<double>(p.data(), p.data() + p.size())}};
    return dump(out);
  }
  const auto pv = in["p"].get<std::vector<double>>();
  const DensityOperator rho =
      reconstruct(Eigen::Map<const Eigen::VectorXd>(pv.data(), static_cast<Eigen::Index>(pv.size())),
                  frame);
  return dump(Json{{"rho", matrix_to_json(rho.matrix())}});
}

std::string run_classical(const Json& in, const Options&) {
  if (!in.is_object() || !in.contains("op"))
    throw std::invalid_argument("classical: expected {\"op\": ...}");
  const std::string op = in["op"].get<std::string>();
  if (op == "misra-reduce") {
    const DensityOperator rho = misra_reduce(classical_state_from_json(in.at("state")));
    return dump(Json{{"rho", matrix_to_json(rho.matrix())}});
  }
  if (op == "witness") {
    const auto w = surjectivity_witness(effect_from_json(in.at("target")),
                                        frame_from_json(in));
    return dump(witness_to_json(w));
  }
  if (op == "duality") {
    const auto pair =
        duality_check(classical_state_from_json(in.at("state")), effect_from_json(in.at("effect")));
    return dump(Json{{"lhs", pair.lhs}, {"rhs", pair.rhs}});
  }
  if (op == "relabel") {
    const DensityOperator rho = relabeled_reduce(classical_state_from_json(in.at("state")),
                                                 point_map_from_json(in.at("map")));
    return dump(Json{{"rho", matrix_to_json(rho.matrix())}});
  }
  if (op == "dual-eval") {
    const ClassicalEffect f = misra_dual(effect_from_json(in.at("effect")));
    std::vector<double> values;
    for (const auto& pt : in.at("points"))
      values.push_back(f(PurePoint::from_direction(vec3_from_json(pt))));
    return dump(Json{{"values", values}});
  }
  throw std::invalid_argument("classical: unknown op " + op);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"unsharp: joint measurability, covariant spin observables, and the classical "
               "representations of qubit statistics"};
  app.require_subcommand(1);

  Options opt;
  app.add_option("-i,--input", opt.input, "input path, inline JSON, or - for stdin");
  app.add_option("-o,--output", opt.output, "output path or - for stdout");
  app.add_option("--seed", opt.seed, "seed for sampled paths (UNSHARP_SEED overrides)");
  app.add_option("--format", opt.format, "output format (json|csv)");

  CLI::App* jm_check = app.add_subcommand("jm-check", "coexistence verdict for two qubit effects");
  CLI::App* jm_scan = app.add_subcommand("jm-scan", "margin over an unbiased |a|, |b|, angle grid");
  CLI::App* oracle = app.add_subcommand("oracle", "constructive joint-observable search");
  CLI::App* spin_pom = app.add_subcommand("spin-pom", "covariant sphere POM effects");
  CLI::App* seq_scan = app.add_subcommand("seq-scan", "sequential accuracy/disturbance trade-off");
  CLI::App* tomo = app.add_subcommand("tomo", "informationally complete embed/reconstruct");
  CLI::App* classical = app.add_subcommand("classical", "Misra reduction and friends");
  for (CLI::App* sub : {jm_check, jm_scan, oracle, spin_pom, seq_scan, tomo, classical})
    sub->fallthrough();

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  if (const char* env = std::getenv("UNSHARP_SEED")) {
    // environment beats the flag
    char* end = nullptr;
    const unsigned long long v = std::strtoull(env, &end, 10);
    if (end == env || *end != '\0') {
      std::cerr << "error: UNSHARP_SEED is not an unsigned integer\n";
      return 2;
    }
    opt.seed = v;
  }

  const bool is_scan = jm_scan->parsed() || seq_scan->parsed();
  if (opt.format.empty()) opt.format = is_scan ? "csv" : "json";
  if (opt.format != "json" && opt.format != "csv") {
    std::cerr << "error: --format must be json or csv\n";
    return 2;
  }
  if (!is_scan && opt.format == "csv") {
    std::cerr << "error: csv output is only available for jm-scan and seq-scan\n";
    return 2;
  }

  try {
    const Json in = read_input(opt.input);
    std::string out;
    if (jm_check->parsed()) out = run_jm_check(in, opt);
    else if (jm_scan->parsed()) out = run_jm_scan(in, opt);
    else if (oracle->parsed()) out = run_oracle(in, opt);
    else if (spin_pom->parsed()) out = run_spin_pom(in, opt);
    else if (seq_scan->parsed()) out = run_seq_scan(in, opt);
    else if (tomo->parsed()) out = run_tomo(in, opt);
    else if (classical->parsed()) out = run_classical(in, opt);
    write_output(opt.output, out);
    return 0;
  } catch (const NumericalError& e) {
    std::cerr << "numerical failure: " << e.what() << "\n";
    return 3;
  } catch (const Json::exception& e) {
    std::cerr << "input error: " << e.what() << "\n";
    return 2;
  } catch (const std::invalid_argument& e) {
    std::cerr << "input error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "numerical failure: " << e.what() << "\n";
    return 3;
  }
}
