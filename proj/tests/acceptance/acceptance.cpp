// Acceptance suite: one PASS/FAIL line per criterion. Exit status 0 iff all pass.
#include <algorithm>
#include <chrono>
#include <cstdio>
#include <functional>
#include <numeric>
#include <random>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include "chebvar/bridge.hpp"
#include "chebvar/chebyshev.hpp"
#include "chebvar/oracle.hpp"
#include "chebvar/poly_json.hpp"
#include "chebvar/suites.hpp"
#include "chebvar/twist.hpp"
#include "cli/commands.hpp"

using namespace chebvar;
using suites::Case;
using Outcome = std::optional<std::string>;

namespace {

int g_jobs = 1;

struct CriterionResult {
  bool ok;
  std::string detail;
};

CriterionResult from_suite(const suites::SuiteResult& r) {
  std::string detail = std::to_string(r.cases) + " cases";
  if (!r.passed()) {
    detail += ", " + std::to_string(r.failures.size()) + " failed, first: " + r.failures.front().id + " (" +
              r.failures.front().detail + ")";
  }
  return {r.passed(), detail};
}

CriterionResult run_suite(const std::string& name, const std::vector<Case>& cases) {
  return from_suite(suites::run_cases(name, cases, g_jobs));
}

Outcome expect(const twist::IdentityCheck& c) {
  if (c.holds) return std::nullopt;
  return "difference " + suites::digest(c.difference.str());
}

template <class Fn>
void add_range(std::vector<Case>& cases, const std::string& name, int lo, int hi, Fn fn) {
  for (int i = lo; i <= hi; ++i) cases.push_back({name + " " + std::to_string(i), [fn, i] { return fn(i); }});
}

// 1 ------------------------------------------------------------------------
CriterionResult chebyshev_suite() { return run_suite("chebyshev", suites::chebyshev_cases(200)); }

// 2 ------------------------------------------------------------------------
CriterionResult x_consistency() {
  auto tab = std::make_shared<const twist::TwistTables>(301, 0);
  std::vector<Case> cases;
  add_range(cases, "X closed form m=", 1, 300, [tab](int m) { return expect(twist::check_x_closed_form(m, *tab)); });
  add_range(cases, "R via X m=", 0, 300, [tab](int m) { return expect(twist::check_r_via_x(m, *tab)); });
  return run_suite("x-consistency", cases);
}

// 3 ------------------------------------------------------------------------
CriterionResult x_invariant() {
  auto tab = std::make_shared<const twist::TwistTables>(200, 0);
  std::vector<Case> cases;
  add_range(cases, "X invariant m=", 1, 200, [tab](int m) { return expect(twist::check_x_invariant(m, *tab)); });
  return run_suite("x-invariant", cases);
}

// 4 ------------------------------------------------------------------------
CriterionResult r_product_x_two_step() {
  auto tab = std::make_shared<const twist::TwistTables>(202, 0);
  std::vector<Case> cases;
  add_range(cases, "R product m=", 1, 200, [tab](int m) { return expect(twist::check_r_product(m, *tab)); });
  add_range(cases, "X two-step m=", 2, 200, [tab](int m) { return expect(twist::check_x_two_step(m, *tab)); });
  return run_suite("r-product-x-two-step", cases);
}

// 5 ------------------------------------------------------------------------
CriterionResult pull_backs() { return run_suite("maps", suites::maps_cases(200, 50)); }

// 6 ------------------------------------------------------------------------
CriterionResult replays() {
  auto tab = std::make_shared<const twist::TwistTables>(0, 100);
  std::vector<Case> cases;
  add_range(cases, "replay L n=", 0, 100, [tab](int n) { return expect(twist::check_replay_l(n, *tab)); });
  add_range(cases, "replay L' n=", 0, 100, [tab](int n) { return expect(twist::check_replay_l_prime(n, *tab)); });
  return run_suite("replays", cases);
}

// 7 ------------------------------------------------------------------------
CriterionResult oracle_twist() { return run_suite("oracle-twist", suites::oracle_twist_cases(15)); }

// 8 ------------------------------------------------------------------------
CriterionResult triple_agreement() {
  std::vector<Case> cases = suites::bridge3_oracle_cases(101);
  constexpr VarPair xz{Var::x, Var::z};
  const BiPoly z = BiPoly::variable(xz, Var::z);
  const BiPoly x2 = BiPoly::monomial(xz, 1, 2, 0);
  auto c = [xz](long v) { return BiPoly::constant(xz, v); };
  const BiPoly p5 = z * z - z - c(1) + x2 * (c(2) - z);
  const BiPoly p7 = z * z * z - z * z - c(2) * z + c(1) + x2 * (c(2) - z) * (z - c(1));
  cases.push_back({"spot p=5", [p5]() -> Outcome {
                     if (bridge::phi_closed_p3(5) == p5 && bridge::phi_recursive_p3(5) == p5) return std::nullopt;
                     return "p=5 spot value";
                   }});
  cases.push_back({"spot p=7", [p7]() -> Outcome {
                     if (bridge::phi_closed_p3(7) == p7 && bridge::phi_recursive_p3(7) == p7) return std::nullopt;
                     return "p=7 spot value";
                   }});
  CriterionResult v = run_suite("triple-agreement", cases);
  if (v.ok) {
    int minus = 0;
    const auto ps = suites::valid_p3(101);
    for (const int p : ps) minus += oracle::sign_match(oracle::defining_poly(p, 3, Coords::BridgeXZ).phi, bridge::phi_closed_p3(p)) < 0;
    v.detail += "; oracle sign -1 for " + std::to_string(minus) + "/" + std::to_string(ps.size()) + " p";
  }
  return v;
}

// 9 ------------------------------------------------------------------------
CriterionResult certificates() {
  std::vector<Case> cases;
  add_range(cases, "R~ certificate m=", 1, 500, [](int m) -> Outcome {
    const auto rep = twist::check_r_tilde_irreducible(m);
    if (rep.irreducible() && rep.degree_gap == 1) return std::nullopt;
    return std::string(verdict_name(rep.verdict));
  });
  for (const int p : suites::valid_p3(1001)) {
    cases.push_back({"Phi certificate p=" + std::to_string(p), [p]() -> Outcome {
                       const auto cert = bridge::check_phi_irreducible_p3(p);
                       if (cert.gcd_index != 1) return "gcd(2d+1, 2[l/2]+1) = " + std::to_string(cert.gcd_index);
                       if (!cert.passed()) return std::string(verdict_name(cert.report.verdict));
                       return std::nullopt;
                     }});
  }
  return run_suite("certificates", cases);
}

// 10 -----------------------------------------------------------------------
CriterionResult roots_numeric() {
  std::vector<Case> cases;
  add_range(cases, "roots n=", 1, 50, [](int n) -> Outcome {
    const UniPoly& s = cheb_s(n);
    const double tol_s = 1e-9 * (1.0 + s.abs_coeff_sum());
    for (const double r : cheb_s_roots(n)) {
      if (std::abs(s.eval(r)) > tol_s) return "S_n root " + std::to_string(r);
    }
    const UniPoly d = cheb_s(n) - cheb_s(n - 1);
    const double tol_d = 1e-9 * (1.0 + d.abs_coeff_sum());
    for (const double r : cheb_s_diff_roots(n)) {
      if (std::abs(d.eval(r)) > tol_d) return "S_n - S_{n-1} root " + std::to_string(r);
    }
    return std::nullopt;
  });
  return run_suite("roots", cases);
}

// 11 -----------------------------------------------------------------------
CriterionResult abelian_slice() {
  std::vector<std::pair<int, int>> pairs;
  for (int p = 3; p <= 45; p += 2) {
    for (int q = 1; q < p; ++q) {
      if (std::gcd(p, q) == 1) pairs.emplace_back(p, q);
    }
  }
  std::mt19937_64 rng(20240611);
  std::shuffle(pairs.begin(), pairs.end(), rng);
  pairs.resize(20);
  std::sort(pairs.begin(), pairs.end());
  std::vector<Case> cases;
  std::string listed;
  for (const auto& [p, q] : pairs) {
    listed += (listed.empty() ? "" : " ") + std::to_string(p) + "/" + std::to_string(q);
    cases.push_back({"slice b(" + std::to_string(p) + "," + std::to_string(q) + ")", [p, q]() -> Outcome {
                       const auto r = oracle::defining_poly(p, q, Coords::BridgeXZ);
                       const int d = (p - 1) / 2;
                       const UniPoly slice = r.phi.coefficient_of(Var::x, 0);
                       const UniPoly expected = cheb_s(d) - cheb_s(d - 1);
                       if (slice == expected || slice == -expected) return std::nullopt;
                       return "slice " + slice.str();
                     }});
  }
  CriterionResult v = run_suite("abelian-slice", cases);
  v.detail += " [" + listed + "]";
  return v;
}

// 12 -----------------------------------------------------------------------
struct CliRun {
  int status;
  std::string out;
};

CliRun cli_run(const std::vector<std::string>& args) {
  std::ostringstream out;
  std::ostringstream err;
  const int status = cli::run(args, out, err);
  return {status, out.str()};
}

// Every polynomial-shaped object inside a JSON document.
void collect_polys(const json& j, std::vector<json>& out) {
  if (j.is_object()) {
    if (j.contains("vars") && j.contains("terms")) {
      out.push_back(j);
      return;
    }
    for (const auto& [k, v] : j.items()) collect_polys(v, out);
  } else if (j.is_array()) {
    for (const auto& v : j) collect_polys(v, out);
  }
}

CriterionResult cli_contract() {
  const std::vector<std::vector<std::string>> json_cmds{
      {"twist", "--m", "7", "--format", "json"},
      {"twist", "--m", "8", "--format", "json"},
      {"twist", "--m", "6", "--form", "skein", "--format", "json"},
      {"bridge", "--p", "13", "--q", "3", "--method", "recursion", "--format", "json"},
      {"bridge", "--p", "13", "--q", "3", "--method", "closed", "--coords", "trace-even", "--format", "json"},
      {"bridge", "--p", "17", "--q", "5", "--method", "oracle", "--format", "json"},
      {"bridge", "--p", "11", "--q", "3", "--method", "all", "--coords", "trace-odd", "--format", "json"},
      {"irreducible", "twist:9", "--format", "json"},
      {"irreducible", "bridge3:25", "--format", "json"},
      {"minimality", "--p", "11", "--format", "json"},
      {"verify", "bridge3", "--max", "31", "--format", "json"},
  };
  int polys = 0;
  for (const auto& cmd : json_cmds) {
    const CliRun a = cli_run(cmd);
    const CliRun b = cli_run(cmd);
    if (a.status != 0) return {false, "non-zero exit for " + cmd[0]};
    if (a.out != b.out) return {false, "output differs between runs for " + cmd[0]};
    std::vector<json> found;
    collect_polys(json::parse(a.out), found);
    for (const json& pj : found) {
      const auto parsed = poly_from_json(pj);
      const json again = std::visit([](const auto& p) { return to_json(p); }, parsed);
      if (again != pj) return {false, "JSON round trip failed in " + cmd[0]};
      ++polys;
    }
  }
  const CliRun serial = cli_run({"verify", "oracle", "--max", "21", "--jobs", "1"});
  const CliRun parallel = cli_run({"verify", "oracle", "--max", "21", "--jobs", "4"});
  if (serial.out != parallel.out) return {false, "output depends on --jobs"};

  const std::vector<std::pair<std::vector<std::string>, int>> codes{
      {{"twist", "--m", "4"}, 0},
      {{"verify", "twist", "--max", "12"}, 0},
      {{"irreducible", "bridge3:7"}, 0},
      {{"twist", "--m", "-3"}, 2},
      {{"bridge", "--p", "9", "--q", "3"}, 2},
      {{"bridge", "--p", "11", "--q", "2", "--method", "closed"}, 2},
      {{"irreducible", "bridge3:6"}, 2},
      {{"verify", "everything", "--max", "5"}, 2},
      {{"minimality", "--m", "1"}, 2},
      {{"frobnicate"}, 2},
  };
  for (const auto& [cmd, expected] : codes) {
    if (cli_run(cmd).status != expected) return {false, "unexpected exit status for " + cmd[0]};
  }
  suites::SuiteResult failing;
  failing.cases = 1;
  failing.failures.push_back({"synthetic", "difference 0"});
  if (cli::suite_exit_status(failing) != 1 || cli::suite_exit_status(suites::SuiteResult{}) != 0) {
    return {false, "suite exit status mapping"};
  }
  return {true, std::to_string(json_cmds.size()) + " commands byte-stable, " + std::to_string(polys) +
                    " polynomials round-tripped, " + std::to_string(codes.size()) + " exit codes"};
}

struct Criterion {
  int id;
  const char* name;
  double limit_s;  // 0: no runtime limit
  std::function<CriterionResult()> run;
};

}  // namespace

int main(int argc, char** argv) {
  g_jobs = static_cast<int>(std::max(1u, std::thread::hardware_concurrency()));
  if (argc > 1) g_jobs = std::max(1, std::atoi(argv[1]));

  const std::vector<Criterion> criteria{
      {1, "Chebyshev product-sum, Cassini, square-sum and reflection identities to 200", 30, chebyshev_suite},
      {2, "X_m recursion = closed form, R_m via X_m to 300", 0, x_consistency},
      {3, "X_m quadratic invariant to 200", 0, x_invariant},
      {4, "R_m product and X_m two-step recursion to 200", 0, r_product_x_two_step},
      {5, "Pull-backs gf (200), fg and odd (50), L_n divisibility", 0, pull_backs},
      {6, "L_n and L'_n derivation replays to 100", 0, replays},
      {7, "oracle Delta = +-L_n, +-L'_n for n <= 15", 60, oracle_twist},
      {8, "b(p,3) recursion = closed = +-oracle, p <= 101", 0, triple_agreement},
      {9, "irreducibility certificates (m <= 500, p <= 1001)", 120, certificates},
      {10, "Chebyshev roots numeric, n <= 50", 0, roots_numeric},
      {11, "abelian slice for 20 random (p,q), p <= 45", 0, abelian_slice},
      {12, "CLI contract: JSON round trip, exit codes, byte stability", 0, cli_contract},
  };

  int failed = 0;
  for (const Criterion& c : criteria) {
    const auto start = std::chrono::steady_clock::now();
    CriterionResult v{false, ""};
    try {
      v = c.run();
    } catch (const std::exception& e) {
      v = {false, std::string("exception: ") + e.what()};
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (c.limit_s > 0 && secs > c.limit_s) {
      v.ok = false;
      v.detail += "; over the " + std::to_string(static_cast<int>(c.limit_s)) + " s limit";
    }
    failed += v.ok ? 0 : 1;
    std::printf("%s %2d  %s: %s (%.1f s)\n", v.ok ? "PASS" : "FAIL", c.id, c.name, v.detail.c_str(), secs);
    std::fflush(stdout);
  }
  std::printf("%d/%zu criteria passed\n", static_cast<int>(criteria.size()) - failed, criteria.size());
  return failed == 0 ? 0 : 1;
}
