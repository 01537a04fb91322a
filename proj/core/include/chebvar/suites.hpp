#pragma once

#include <functional>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace chebvar::suites {

/// One check. `run` returns nullopt on success or a short failure detail.
struct Case {
  std::string id;
  std::function<std::optional<std::string>()> run;
};

struct Failure {
  std::string id;
  std::string detail;
};

struct SuiteResult {
  std::string suite;
  int cases = 0;
  std::vector<Failure> failures;  // in case order
  double ms = 0.0;

  bool passed() const { return failures.empty(); }
};

/// Runs every case on up to `jobs` worker threads. Failures are reported in
/// case order, so the result does not depend on scheduling. An exception
/// thrown by a case counts as a failure.
SuiteResult run_cases(std::string name, const std::vector<Case>& cases, int jobs);

/// 16 hex digits of the FNV-1a hash of `text`.
std::string digest(std::string_view text);

/// S_r S_{r+s} sums (0 <= r, s <= max); Cassini, square-sum, reflection and
/// product-sum identities (|m| <= max); the T_n = S_n - S_{n-2} link; numeric
/// root checks up to min(max, 50).
std::vector<Case> chebyshev_cases(int max);

/// X_m closed form and R_m = -(X_{m+1} + X_m + x^2) up to max_x; the X_m
/// invariant, R_m product and X_m two-step recursion up to max_identity;
/// L_n / L'_n replays up to max_replay; both delta identities; R~_m
/// certificates up to max_cert.
struct TwistBounds {
  int max_x = 0;
  int max_identity = 0;
  int max_replay = 0;
  int max_cert = 0;
};
std::vector<Case> twist_cases(const TwistBounds& b);

/// gf pull-back for 1 <= m <= max_gf; fg and odd pull-backs and the L_n
/// divisibility for 0 <= n <= max_n.
std::vector<Case> maps_cases(int max_gf, int max_n);

/// For valid p <= max: recursion vs closed form, the P/Q/R split, the
/// irreducibility certificate; eps_{p-j} = (-1)^(q-1) eps_j for every valid (p, q).
std::vector<Case> bridge3_cases(int max);

/// Valid odd p with p > 3 and gcd(p, 3) = 1, up to max.
std::vector<int> valid_p3(int max);

/// Recursion vs closed form vs oracle for b(p, 3), p <= max.
std::vector<Case> bridge3_oracle_cases(int max);

/// Oracle Delta against L_n (K_{2n}) and L'_n (K_{2n-1}) for n <= max_n.
std::vector<Case> oracle_twist_cases(int max_n);

/// For every valid (p, q) with p <= max: Delta divisible by u, Phi(0, z) =
/// +-(S_d - S_{d-1}), and the TraceEven / BridgeXZ coordinate duality.
std::vector<Case> oracle_cases(int max);

/// Named suites for the CLI: chebyshev, twist, maps, bridge3, oracle.
std::optional<std::vector<Case>> named_suite(std::string_view name, int max);
std::vector<std::string_view> suite_names();

}  // namespace chebvar::suites
