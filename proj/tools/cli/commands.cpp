#include "cli/commands.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <optional>
#include <ostream>
#include <sstream>
#include <string>
#include <thread>

#include "chebvar/bridge.hpp"
#include "chebvar/coords.hpp"
#include "chebvar/errors.hpp"
#include "chebvar/oracle.hpp"
#include "chebvar/poly_json.hpp"
#include "chebvar/suites.hpp"
#include "chebvar/twist.hpp"

namespace chebvar::cli {
namespace {

struct UsageError : Error {
  using Error::Error;
};

struct Output {
  std::ostream& out;
  std::ostream& err;
  bool json = false;
};

void emit(Output& o, const json& j, const std::vector<std::pair<std::string, std::string>>& lines) {
  if (o.json) {
    o.out << j.dump() << '\n';
    return;
  }
  for (const auto& [k, v] : lines) o.out << k << ": " << v << '\n';
}

Coords coords_arg(const std::string& name) {
  const auto c = parse_coords(name);
  if (!c) throw UsageError("unknown coordinate system '" + name + "'");
  return *c;
}

std::string knot_name(int p, int q) { return "b(" + std::to_string(p) + "," + std::to_string(q) + ")"; }

// ---------------------------------------------------------------------------

int cmd_twist(Output& o, int m, const std::string& form) {
  const twist::TwistKnot knot(m);
  BiPoly poly;
  Coords coords = Coords::Skein;
  if (form == "skein") {
    poly = twist::r_m(m);
  } else {
    coords = knot.trace_coords();
    poly = knot.even() ? twist::l_n(knot.n()) : twist::l_prime_n(knot.n());
  }
  const std::string knot_str = "K_" + std::to_string(m);
  const json j{{"knot", knot_str}, {"form", form}, {"coords", coords_name(coords)}, {"poly", to_json(poly)}};
  emit(o, j, {{"knot", knot_str}, {"form", form}, {"coords", std::string(coords_name(coords))}, {"poly", poly.str()}});
  return kOk;
}

int cmd_bridge(Output& o, int p, int q, const std::string& method, const std::string& coords_str) {
  const bridge::BridgeParams bp(p, q);
  const Coords coords = coords_arg(coords_str);
  if (coords == Coords::Skein) throw UsageError("Phi_w is not available in skein coordinates");
  const bool q3 = q == 3 && p > 3;
  if ((method == "recursion" || method == "closed") && !q3) {
    throw UsageError("--method " + method + " requires q = 3 and p > 3");
  }

  json j{{"knot", knot_name(p, q)}, {"method", method}, {"coords", coords_name(coords)}};
  std::vector<std::pair<std::string, std::string>> lines{
      {"knot", knot_name(p, q)}, {"method", method}, {"coords", std::string(coords_name(coords))}};
  auto put_poly = [&](const BiPoly& poly) {
    j["poly"] = to_json(poly);
    lines.emplace_back("poly", poly.str());
  };

  if (method == "recursion" || method == "closed") {
    const BiPoly xz = method == "recursion" ? bridge::phi_recursive_p3(p) : bridge::phi_closed_p3(p);
    put_poly(bridge::from_bridge_xz(xz, coords));
    emit(o, j, lines);
    return kOk;
  }

  const oracle::OracleResult orc = oracle::defining_poly(bp.p(), bp.q(), coords);
  if (method == "oracle") {
    put_poly(orc.phi);
    j["source"] = "oracle";
    j["sign"] = orc.sign;
    lines.emplace_back("source", "oracle");
    lines.emplace_back("sign", std::to_string(orc.sign));
    emit(o, j, lines);
    return kOk;
  }

  // all
  std::string verdict;
  int status = kOk;
  if (!q3) {
    put_poly(orc.phi);
    verdict = "1 method available (oracle sign " + std::to_string(orc.sign) + ")";
    j["sign"] = orc.sign;
  } else {
    const BiPoly closed = bridge::phi_closed_p3(p);
    const bool rec_ok = bridge::phi_recursive_p3(p) == closed;
    const int sign = oracle::sign_match(orc.phi, bridge::from_bridge_xz(closed, coords));
    put_poly(bridge::from_bridge_xz(closed, coords));
    if (rec_ok && sign != 0) {
      verdict = "3 methods agree (oracle sign " + std::to_string(sign) + ")";
      j["sign"] = sign;
    } else {
      verdict = std::string("methods disagree (recursion ") + (rec_ok ? "=" : "!=") + " closed, oracle " +
                (sign != 0 ? "=" : "!=") + " closed up to sign)";
      status = kFailure;
    }
  }
  j["agreement"] = verdict;
  lines.emplace_back("agreement", verdict);
  emit(o, j, lines);
  return status;
}

int cmd_verify(Output& o, const std::string& suite, int max, int jobs, bool timing) {
  if (max < 1) throw UsageError("--max must be at least 1");
  if (jobs < 1) throw UsageError("--jobs must be at least 1");
  const auto cases = suites::named_suite(suite, max);
  if (!cases) throw UsageError("unknown suite '" + suite + "'");
  const suites::SuiteResult r = suites::run_cases(suite, *cases, jobs);

  json failures = json::array();
  for (const auto& f : r.failures) failures.push_back({{"case", f.id}, {"detail", f.detail}});
  json j{{"suite", r.suite}, {"max", max}, {"cases", r.cases}, {"failures", failures}};
  if (timing) j["ms"] = static_cast<long long>(r.ms);

  if (o.json) {
    o.out << j.dump() << '\n';
  } else {
    o.out << "suite: " << r.suite << "\nmax: " << max << "\ncases: " << r.cases
          << "\nfailures: " << r.failures.size() << '\n';
    for (const auto& f : r.failures) o.out << "FAIL " << f.id << ": " << f.detail << '\n';
    if (timing) o.out << "ms: " << static_cast<long long>(r.ms) << '\n';
  }
  return suite_exit_status(r);
}

std::pair<std::string, int> parse_target(const std::string& target) {
  const auto colon = target.find(':');
  if (colon == std::string::npos) throw UsageError("target must look like twist:M or bridge3:P");
  const std::string kind = target.substr(0, colon);
  const std::string num = target.substr(colon + 1);
  if (kind != "twist" && kind != "bridge3") throw UsageError("unknown target kind '" + kind + "'");
  int value = 0;
  std::size_t used = 0;
  try {
    value = std::stoi(num, &used);
  } catch (const std::exception&) {
    used = 0;
  }
  if (num.empty() || used != num.size()) throw UsageError("target index '" + num + "' is not an integer");
  return {kind, value};
}

int cmd_irreducible(Output& o, const std::string& target) {
  const auto [kind, value] = parse_target(target);
  if (kind == "twist") {
    const twist::TwistKnot knot(value);
    if (value < 1) throw UsageError("the twist certificate needs m >= 1");
    const IrreducibilityReport rep = twist::check_r_tilde_irreducible(value);
    const std::string name = "K_" + std::to_string(value);
    const json j{{"knot", name},        {"coords", coords_name(Coords::Skein)}, {"f", to_json(rep.f)},
                 {"g", to_json(rep.g)}, {"degree_gap", rep.degree_gap},           {"gcd", rep.gcd.str()},
                 {"verdict", verdict_name(rep.verdict)}};
    emit(o, j,
         {{"knot", name},
          {"coords", std::string(coords_name(Coords::Skein))},
          {"f", rep.f.str()},
          {"g", rep.g.str()},
          {"degree_gap", std::to_string(rep.degree_gap)},
          {"gcd", rep.gcd.str()},
          {"verdict", std::string(verdict_name(rep.verdict))}});
    return rep.irreducible() ? kOk : kFailure;
  }

  const bridge::BridgeCertificate cert = bridge::check_phi_irreducible_p3(value);
  const std::string name = knot_name(value, 3);
  json gcds = json::array();
  std::string gcd_line;
  for (const UniPoly& g : cert.factor_gcds) {
    gcds.push_back(g.str());
    gcd_line += (gcd_line.empty() ? "" : ", ") + g.str();
  }
  const json j{{"knot", name},
               {"coords", coords_name(Coords::BridgeXZ)},
               {"P", to_json(cert.pqr.P)},
               {"Q", to_json(cert.pqr.Q)},
               {"R", to_json(cert.pqr.R)},
               {"degree_gap", cert.report.degree_gap},
               {"gcd", cert.report.gcd.str()},
               {"index_gcd", cert.gcd_index},
               {"factor_gcds", gcds},
               {"verdict", verdict_name(cert.report.verdict)}};
  emit(o, j,
       {{"knot", name},
        {"coords", std::string(coords_name(Coords::BridgeXZ))},
        {"P", cert.pqr.P.str()},
        {"Q", cert.pqr.Q.str()},
        {"R", cert.pqr.R.str()},
        {"degree_gap", std::to_string(cert.report.degree_gap)},
        {"gcd", cert.report.gcd.str()},
        {"index_gcd", std::to_string(cert.gcd_index)},
        {"factor_gcds", gcd_line},
        {"verdict", std::string(verdict_name(cert.report.verdict))}});
  return cert.passed() ? kOk : kFailure;
}

int cmd_minimality(Output& o, std::optional<int> m, std::optional<int> p) {
  if (m.has_value() == p.has_value()) throw UsageError("give exactly one of --m or --p");
  const bridge::MinimalityReport rep = m ? bridge::minimality_twist(*m) : bridge::minimality_bridge3(*p);
  const json j{{"knot", rep.knot},
               {"certificate", rep.certificate},
               {"verdict", verdict_name(rep.verdict)},
               {"minimal", rep.minimal},
               {"assumptions", rep.assumptions}};
  std::vector<std::pair<std::string, std::string>> lines{{"knot", rep.knot},
                                                         {"certificate", rep.certificate},
                                                         {"verdict", std::string(verdict_name(rep.verdict))},
                                                         {"minimal", rep.minimal ? "true" : "false"}};
  for (const auto& a : rep.assumptions) lines.emplace_back("assumption", a);
  emit(o, j, lines);
  return rep.minimal ? kOk : kFailure;
}

}  // namespace

int suite_exit_status(const suites::SuiteResult& r) { return r.passed() ? kOk : kFailure; }

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Character varieties of twist knots and 2-bridge knots b(p,3)", "chebvar"};
  app.require_subcommand(1);

  std::string format = "text";
  auto add_format = [&](CLI::App* sub) {
    sub->add_option("--format", format, "Output format")->check(CLI::IsMember({"text", "json"}));
  };

  int m = 0;
  std::string form = "trace";
  auto* twist_cmd = app.add_subcommand("twist", "Defining polynomial of X(K_m)");
  twist_cmd->add_option("--m", m, "Number of twists")->required();
  twist_cmd->add_option("--form", form, "trace: L_n / L'_n, skein: R_m")->check(CLI::IsMember({"trace", "skein"}));
  add_format(twist_cmd);

  int p = 0;
  int q = 3;
  std::string method = "closed";
  std::string coords = "bridge-xz";
  auto* bridge_cmd = app.add_subcommand("bridge", "Phi_w for the 2-bridge knot b(p, q)");
  bridge_cmd->add_option("--p", p, "Odd p")->required();
  bridge_cmd->add_option("--q", q, "0 < q < p, coprime to p");
  bridge_cmd->add_option("--method", method, "recursion, closed, oracle or all")
      ->check(CLI::IsMember({"recursion", "closed", "oracle", "all"}));
  bridge_cmd->add_option("--coords", coords, "bridge-xz, trace-even or trace-odd");
  add_format(bridge_cmd);

  std::string suite;
  int max = 0;
  int jobs = static_cast<int>(std::max(1u, std::thread::hardware_concurrency()));
  bool timing = false;
  auto* verify_cmd = app.add_subcommand("verify", "Run an identity suite");
  verify_cmd->add_option("suite", suite, "chebyshev, twist, maps, bridge3 or oracle")->required();
  verify_cmd->add_option("--max", max, "Index bound")->required();
  verify_cmd->add_option("--jobs", jobs, "Worker threads");
  verify_cmd->add_flag("--timing", timing, "Report wall time");
  add_format(verify_cmd);

  std::string target;
  auto* irr_cmd = app.add_subcommand("irreducible", "Irreducibility certificate");
  irr_cmd->add_option("target", target, "twist:M or bridge3:P")->required();
  add_format(irr_cmd);

  std::optional<int> min_m;
  std::optional<int> min_p;
  auto* min_cmd = app.add_subcommand("minimality", "Minimality report for K_m or b(p, 3)");
  min_cmd->add_option("--m", min_m, "Twist knot K_m");
  min_cmd->add_option("--p", min_p, "2-bridge knot b(p, 3)");
  add_format(min_cmd);

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << '\n';
    return kUsage;
  }

  Output o{out, err, format == "json"};
  try {
    if (*twist_cmd) return cmd_twist(o, m, form);
    if (*bridge_cmd) return cmd_bridge(o, p, q, method, coords);
    if (*verify_cmd) return cmd_verify(o, suite, max, jobs, timing);
    if (*irr_cmd) return cmd_irreducible(o, target);
    if (*min_cmd) return cmd_minimality(o, min_m, min_p);
  } catch (const UsageError& e) {
    err << "error: " << e.what() << '\n';
    return kUsage;
  } catch (const InvalidParams& e) {
    err << "error: " << e.what() << '\n';
    return kUsage;
  } catch (const OutOfScope& e) {
    err << "error: " << e.what() << '\n';
    return kUsage;
  } catch (const NegativeIndex& e) {
    err << "error: " << e.what() << '\n';
    return kUsage;
  } catch (const std::exception& e) {
    err << "internal error: " << e.what() << '\n';
    return kFailure;
  }
  return kUsage;
}

}  // namespace chebvar::cli
