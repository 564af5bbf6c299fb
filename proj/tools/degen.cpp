#include <CLI11.hpp>

#include <atomic>
#include <chrono>
#include <fstream>
#include <iostream>
#include <mutex>
#include <sstream>
#include <thread>

#include "degen/config_fuzzer.hpp"
#include "degen/degeneration.hpp"
#include "degen/json_io.hpp"
#include "degen/stabilizer.hpp"
#include "degen/symmetric.hpp"
#include "degen/toric_git.hpp"
#include "degen/verify.hpp"

using namespace degen;

namespace {

constexpr int kOk = 0;
constexpr int kFail = 1;
constexpr int kBadArgs = 2;
constexpr int kIoError = 3;
constexpr int kTooLarge = 4;

struct BadArgs : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};
struct IoError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

Json read_json(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw IoError("cannot open " + path);
  try {
    return Json::parse(in);
  } catch (const Json::exception& e) {
    throw BadArgs(path + ": " + e.what());
  }
}

void write_output(const Json& j, const std::string& path) {
  const std::string text = j.dump(1) + "\n";
  if (path.empty() || path == "-") {
    std::cout << text;
    return;
  }
  std::ofstream out(path);
  if (!out || !(out << text)) throw IoError("cannot write " + path);
}

Json matrices(const std::vector<RatMatrix>& ms) {
  Json out = Json::array();
  for (const auto& m : ms) out.push_back(to_json(m));
  return out;
}

Json build_object(std::size_t n, const std::string& object) {
  auto require = [&](std::size_t lo, std::size_t hi) {
    if (n < lo || n > hi)
      throw BadArgs(object + " needs " + std::to_string(lo) + " <= n <= " + std::to_string(hi));
  };
  if (object == "expanded") {
    require(1, 5);
    return to_json(canonicalize(build_bundle(n).tildeP_X), true);
  }
  if (object == "product") {
    require(1, 5);
    return to_json(build_bundle(n).tildeP_W, n <= 3);
  }
  if (object == "ghh-expanded" || object == "ghh-product") {
    require(1, 5);
    const auto b = build_bundle(n);
    const Linearization lin = object == "ghh-expanded" ? ghh_linearization_X(b) : ghh_linearization_W(b);
    return {{"alpha", to_json(lin.alpha.matrix())}, {"b", to_json(lin.b)}};
  }
  if (object == "permutahedron") {
    require(2, 6);
    return to_json(canonicalize(build_symmetric(n).permutahedron), true);
  }
  if (object == "symmetric") {
    require(2, 6);
    const auto m = build_symmetric(n);
    return {{"n", n},
            {"perm_action_Nbar", matrices(m.perm_action_Nbar)},
            {"perm_action_N", matrices(m.perm_action_N)},
            {"delta_n", to_json(m.delta_n)},
            {"delta_bar", to_json(m.delta_bar)},
            {"sigma_n", to_json(m.sigma_cone)},
            {"Delta_fan", to_json(m.Delta_fan)},
            {"permutahedron", to_json(m.permutahedron)},
            {"tildeP_n", to_json(m.tildeP_n)},
            {"Be", to_json(m.Be)}};
  }
  throw BadArgs("unknown object: " + object);
}

Json report_json(const VerificationReport& r) {
  return {{"tool_version", kToolVersion}, {"check", r.check},   {"n", r.n},
          {"status", r.status},           {"witness", r.witness}, {"elapsed_ms", r.elapsed_ms}};
}

int cmd_verify(std::size_t n, const std::string& check, bool all, std::size_t jobs, std::size_t fuzz_runs) {
  if (n < 1 || n > 5) throw BadArgs("verify needs 1 <= n <= 5");
  std::vector<std::string> checks;
  if (all) {
    for (const auto& c : check_names()) {
      const auto [lo, hi] = check_range(c);
      if (n >= lo && n <= hi) checks.push_back(c);
    }
  } else if (!check.empty()) {
    const auto [lo, hi] = check_range(check);
    if (n < lo || n > hi) throw BadArgs(check + " needs " + std::to_string(lo) + " <= n <= " + std::to_string(hi));
    checks.push_back(check);
  } else if (fuzz_runs == 0) {
    throw BadArgs("verify needs --check, --all or --fuzz");
  }

  std::vector<VerificationReport> reports(checks.size());
  std::mutex out_mutex;
  auto emit = [&](const VerificationReport& r) {
    std::lock_guard lock(out_mutex);
    std::cout << report_json(r).dump() << std::endl;
  };
  {
    std::atomic<std::size_t> next{0};
    std::vector<std::jthread> workers;
    for (std::size_t w = 0; w < std::max<std::size_t>(1, jobs); ++w)
      workers.emplace_back([&] {
        for (std::size_t i; (i = next++) < checks.size();) {
          reports[i] = verify(n, checks[i]);
          emit(reports[i]);
        }
      });
  }
  if (fuzz_runs > 0) {
    if (n < 2) throw BadArgs("comparison fuzzing needs n >= 2");
    const auto start = std::chrono::steady_clock::now();
    const std::uint64_t seed = fuzz_seed();
    const FuzzSummary s = fuzz_comparison(n, fuzz_runs, seed, jobs);
    VerificationReport r{"comparison_fuzz", n, s.passed == s.runs ? "pass" : "fail", nullptr, 0};
    Json failures = Json::array();
    for (const auto& c : s.failures) failures.push_back(to_json(c));
    r.witness = {{"seed", seed}, {"runs", s.runs}, {"passed", s.passed}, {"failures", failures}};
    r.elapsed_ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
    emit(r);
    reports.push_back(r);
  }
  bool ok = true;
  for (const auto& r : reports) {
    std::cerr << r.check << " n=" << r.n << ": " << r.status << "\n";
    ok = ok && r.status == "pass";
  }
  return ok ? kOk : kFail;
}

int cmd_quotient(const std::string& poly_path, const std::string& alpha_path, const std::string& b_text) {
  const Json pj = read_json(poly_path);
  const Json aj = read_json(alpha_path);
  LatticePolyhedron p;
  RatMatrix alpha;
  RatVector b;
  try {
    p = polyhedron_from_json(pj);
    alpha = matrix_from_json(aj.contains("alpha") ? aj.at("alpha") : aj);
    std::stringstream in(b_text);
    for (std::string part; std::getline(in, part, ',');) b.push_back(parse_rational(part));
  } catch (const std::exception& e) {
    throw BadArgs(e.what());
  }
  if (!alpha.is_integral()) throw BadArgs("alpha must have integer entries");
  if (alpha.cols() != p.ambient_rank()) throw BadArgs("alpha columns differ from the polyhedron rank");
  if (b.size() != alpha.rows()) throw BadArgs("b length differs from the rows of alpha");
  const Linearization lin{LatticeMap(alpha), b};
  const QuotientPolyhedron q = quotient_polyhedron(p, lin);
  if (q.ambient.is_empty()) {
    std::cout << Json{{"empty", true}}.dump() << "\n";
    return kOk;
  }
  Json out{{"empty", false},
           {"ambient", to_json(q.ambient)},
           {"local", to_json(q.local)},
           {"basis", to_json(q.basis)},
           {"origin", to_json(q.origin)}};
  // The slice of the polytopal part can be empty or too small when the recession cone reaches
  // the slice on its own; the split is then reported as inexact.
  try {
    const SplitQuotient split = split_quotient(p, lin);
    const std::size_t d = p.ambient_rank();
    out["polytopal"] = to_json(split.polytopal);
    out["conical"] = to_json(split.conical);
    out["split_exact"] = minkowski_sum(split.polytopal, LatticePolyhedron(d, {RatVector(d)}, split.conical)) == q.ambient;
  } catch (const std::domain_error&) {
    out["polytopal"] = nullptr;
    out["conical"] = nullptr;
    out["split_exact"] = false;
  }
  std::cout << out.dump(1) << "\n";
  return kOk;
}

int cmd_stab(const std::string& path, std::size_t bound, std::size_t jobs) {
  const Json j = read_json(path);
  CycleConfiguration c;
  try {
    c = configuration_from_json(j);
  } catch (const std::exception& e) {
    throw BadArgs(e.what());
  }
  if (c.n > bound) {
    std::cerr << "n = " << c.n << " exceeds the brute-force bound " << bound << "\n";
    return kTooLarge;
  }
  if (!check_stability(c)) throw BadArgs("configuration is not stable");
  const QuotientPoint q = project_to_quotient(c);
  ComparisonReport rep;
  try {
    rep = verify_comparison(c, bound, jobs);
  } catch (const QuotientStructureError& e) {
    std::cout << Json{{"comparison", "FAIL"}, {"error", e.what()}}.dump() << "\n";
    return kFail;
  }
  Json f = Json::array();
  for (const auto& v : q.f) f.push_back(to_json(v));
  Json stab = Json::array(), blocks = Json::array();
  for (const auto& s : rep.sym.stab) stab.push_back(cycle_string(s));
  for (const auto& b : rep.sym.young_blocks) {
    Json block = Json::array();
    for (auto i : b) block.push_back(i + 1);
    blocks.push_back(block);
  }
  Json out{{"tool_version", kToolVersion},
           {"n", c.n},
           {"quotient_point", {{"f", f}, {"a1", q.a1_coords}}},
           {"torus_stabilizer", to_json(rep.torus)},
           {"stab_order", rep.sym.stab.size()},
           {"stab", stab},
           {"stab0_order", rep.sym.stab0.size()},
           {"stab0_young_blocks", blocks},
           {"quotient", to_json(rep.sym.quotient)},
           {"blocks_preserved", rep.blocks_preserved},
           {"comparison", rep.pass ? "PASS" : "FAIL"}};
  std::cout << out.dump(1) << "\n";
  return rep.pass ? kOk : kFail;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact polyhedral and toric GIT computations for expanded degenerations"};
  app.set_version_flag("--version", kToolVersion);
  app.require_subcommand(1);

  std::size_t n = 0, jobs = 1, fuzz_runs = 0, bound = 9;
  std::string object, out_path, check, poly_path, alpha_path, b_text, config_path;
  bool all = false;

  auto* build = app.add_subcommand("build", "Write the canonical JSON of a constructed object");
  build->add_option("--n", n, "Size parameter")->required();
  build->add_option("--object", object, "expanded, product, symmetric, permutahedron, ghh-expanded or ghh-product")
      ->required();
  build->add_option("--out", out_path, "Output file (standard output when omitted)");

  auto* verify_cmd = app.add_subcommand("verify", "Run verification checks, one JSON report per line");
  verify_cmd->add_option("--n", n, "Size parameter")->required();
  auto* check_opt = verify_cmd->add_option("--check", check, "Check name");
  verify_cmd->add_flag("--all", all, "Run every check that accepts this n")->excludes(check_opt);
  verify_cmd->add_option("--jobs", jobs, "Worker threads")->check(CLI::PositiveNumber);
  verify_cmd->add_option("--fuzz", fuzz_runs, "Also run the stabilizer comparison on this many random configurations");

  auto* quotient = app.add_subcommand("quotient", "Quotient polyhedron of a polyhedron by a subtorus");
  quotient->add_option("polyhedron", poly_path, "Polyhedron JSON")->required();
  quotient->add_option("alpha", alpha_path, "Matrix JSON of alpha")->required();
  quotient->add_option("b", b_text, "Comma-separated rationals")->required();

  auto* stab = app.add_subcommand("stab", "Stabilizers of a 0-cycle configuration");
  stab->add_option("config", config_path, "Configuration JSON")->required();
  stab->add_option("--brute-force-max", bound, "Largest n for the S_n search");
  stab->add_option("--jobs", jobs, "Worker threads")->check(CLI::PositiveNumber);

  try {
    app.parse(argc, argv);
  } catch (const CLI::Success& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kBadArgs;
  }

  try {
    if (*build) {
      write_output(build_object(n, object), out_path);
      return kOk;
    }
    if (*verify_cmd) return cmd_verify(n, check, all, jobs, fuzz_runs);
    if (*quotient) return cmd_quotient(poly_path, alpha_path, b_text);
    if (*stab) return cmd_stab(config_path, bound, jobs);
  } catch (const IoError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kIoError;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kBadArgs;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kFail;
  }
  return kBadArgs;
}
