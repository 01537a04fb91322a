#include "chebvar/suites.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cmath>
#include <cstdint>
#include <cstdio>
#include <memory>
#include <numeric>
#include <thread>

#include "chebvar/bridge.hpp"
#include "chebvar/chebyshev.hpp"
#include "chebvar/errors.hpp"
#include "chebvar/oracle.hpp"
#include "chebvar/twist.hpp"

namespace chebvar::suites {
namespace {

using Outcome = std::optional<std::string>;

template <class Poly>
Outcome expect_equal(const Poly& lhs, const Poly& rhs) {
  if (lhs == rhs) return std::nullopt;
  return "difference " + digest((lhs - rhs).str());
}

Outcome expect(const twist::IdentityCheck& c) {
  if (c.holds) return std::nullopt;
  return "difference " + digest(c.difference.str());
}

Outcome expect_up_to_sign(const BiPoly& lhs, const BiPoly& rhs) {
  if (oracle::sign_match(lhs, rhs) != 0) return std::nullopt;
  return "difference " + digest((lhs - rhs).str());
}

std::string id(std::string_view family, std::string_view key, long v) {
  return std::string(family) + " " + std::string(key) + "=" + std::to_string(v);
}

const UniPoly& z_var() {
  static const UniPoly z = UniPoly::variable(Var::z);
  return z;
}

}  // namespace

std::string digest(std::string_view text) {
  std::uint64_t h = 14695981039346656037ull;
  for (const unsigned char c : text) {
    h ^= c;
    h *= 1099511628211ull;
  }
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
  return buf;
}

SuiteResult run_cases(std::string name, const std::vector<Case>& cases, int jobs) {
  const auto start = std::chrono::steady_clock::now();
  std::vector<Outcome> outcomes(cases.size());
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t i = next++; i < cases.size(); i = next++) {
      try {
        outcomes[i] = cases[i].run();
      } catch (const std::exception& e) {
        outcomes[i] = std::string("exception: ") + e.what();
      }
    }
  };
  const auto n_threads =
      std::clamp<std::size_t>(static_cast<std::size_t>(std::max(jobs, 1)), 1, std::max<std::size_t>(cases.size(), 1));
  {
    std::vector<std::jthread> pool;
    for (std::size_t t = 1; t < n_threads; ++t) pool.emplace_back(worker);
    worker();
  }

  SuiteResult out;
  out.suite = std::move(name);
  out.cases = static_cast<int>(cases.size());
  for (std::size_t i = 0; i < cases.size(); ++i) {
    if (outcomes[i]) out.failures.push_back({cases[i].id, *outcomes[i]});
  }
  out.ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
  return out;
}

std::vector<Case> chebyshev_cases(int max) {
  std::vector<Case> cases;

  // Same-parity prefix sums E_k = S_k + S_{k-2} + ... , so that
  // S_{2r+s} + S_{2r+s-2} + ... + S_s = E_{2r+s} - E_{s-2}.
  auto prefix = std::make_shared<std::vector<UniPoly>>();
  for (int k = 0; k <= 3 * max; ++k) {
    UniPoly e = cheb_s(k);
    if (k >= 2) e += (*prefix)[static_cast<std::size_t>(k - 2)];
    prefix->push_back(std::move(e));
  }
  for (int r = 0; r <= max; ++r) {
    cases.push_back({id("S product sum", "r", r), [r, max, prefix]() -> Outcome {
                       for (int s = 0; s <= max; ++s) {
                         UniPoly rhs = (*prefix)[static_cast<std::size_t>(2 * r + s)];
                         if (s >= 2) rhs -= (*prefix)[static_cast<std::size_t>(s - 2)];
                         if (auto bad = expect_equal(cheb_s(r) * cheb_s(r + s), rhs)) {
                           return "s=" + std::to_string(s) + " " + *bad;
                         }
                       }
                       return std::nullopt;
                     }});
  }

  // S_n for negative n by running the recurrence downward from S_1, S_0.
  auto down = std::make_shared<std::vector<UniPoly>>();  // down[k] = S_{1-k}
  down->push_back(z_var());
  down->push_back(UniPoly::constant(Var::z, 1));
  for (int k = 2; k <= max + 3; ++k) {
    const auto i = static_cast<std::size_t>(k);
    down->push_back(z_var() * (*down)[i - 1] - (*down)[i - 2]);
  }
  const UniPoly z2m2 = z_var() * z_var() - UniPoly::constant(Var::z, 2);

  for (int m = -max; m <= max; ++m) {
    cases.push_back({id("S Cassini", "m", m), [m] {
                       return expect_equal(cheb_s(m) * cheb_s(m - 2) - cheb_s(m - 1) * cheb_s(m - 1),
                                           UniPoly::constant(Var::z, -1));
                     }});
    cases.push_back({id("S square sum", "m", m), [m, z2m2] {
                       const UniPoly& a = cheb_s(m + 1);
                       const UniPoly& b = cheb_s(m - 1);
                       const UniPoly& c = cheb_s(m);
                       return expect_equal(a * a + b * b - z2m2 * c * c, UniPoly::constant(Var::z, 2));
                     }});
    cases.push_back({id("reflection", "n", m), [m, down]() -> Outcome {
                       if (auto bad = expect_equal(cheb_s(-m), -cheb_s(m - 2))) return bad;
                       if (m > 0) return expect_equal(cheb_s(-m), (*down)[static_cast<std::size_t>(m + 1)]);
                       return std::nullopt;
                     }});
    cases.push_back({id("product-sum", "n", m), [m, z2m2] {
                       const UniPoly lhs = cheb_s(m + 1) * cheb_s(m) + cheb_s(m - 1) * cheb_s(m - 2) -
                                           z2m2 * cheb_s(m) * cheb_s(m - 1);
                       return expect_equal(lhs, z_var());
                     }});
  }
  for (int n = 0; n <= max; ++n) {
    cases.push_back({id("T=S-S", "n", n), [n] { return expect_equal(cheb_t(n), cheb_s(n) - cheb_s(n - 2)); }});
  }
  for (int n = 1; n <= std::min(max, 50); ++n) {
    cases.push_back({id("roots", "n", n), [n]() -> Outcome {
                       const UniPoly& s = cheb_s(n);
                       const double tol_s = 1e-9 * (1.0 + s.abs_coeff_sum());
                       for (const double r : cheb_s_roots(n)) {
                         if (std::abs(s.eval(r)) > tol_s) return "S_n(" + std::to_string(r) + ") off";
                       }
                       const UniPoly diff = cheb_s(n) - cheb_s(n - 1);
                       const double tol_d = 1e-9 * (1.0 + diff.abs_coeff_sum());
                       for (const double r : cheb_s_diff_roots(n)) {
                         if (std::abs(diff.eval(r)) > tol_d) return "(S_n-S_{n-1})(" + std::to_string(r) + ") off";
                       }
                       return std::nullopt;
                     }});
  }
  return cases;
}

std::vector<Case> twist_cases(const TwistBounds& b) {
  std::vector<Case> cases;
  auto tab = std::make_shared<const twist::TwistTables>(std::max(b.max_x + 1, b.max_identity + 2),
                                                        std::max(b.max_replay, 1));
  for (int m = 1; m <= b.max_x; ++m) {
    cases.push_back({id("X closed form", "m", m), [m, tab] { return expect(twist::check_x_closed_form(m, *tab)); }});
  }
  for (int m = 0; m <= b.max_x; ++m) {
    cases.push_back({id("R via X", "m", m), [m, tab] { return expect(twist::check_r_via_x(m, *tab)); }});
  }
  for (int m = 1; m <= b.max_identity; ++m) {
    cases.push_back({id("X invariant", "m", m), [m, tab] { return expect(twist::check_x_invariant(m, *tab)); }});
    cases.push_back({id("R product", "m", m), [m, tab] { return expect(twist::check_r_product(m, *tab)); }});
  }
  for (int m = 2; m <= b.max_identity; ++m) {
    cases.push_back({id("X two-step", "m", m), [m, tab] { return expect(twist::check_x_two_step(m, *tab)); }});
  }
  for (int n = 0; n <= b.max_replay; ++n) {
    cases.push_back({id("replay L", "n", n), [n, tab] { return expect(twist::check_replay_l(n, *tab)); }});
    cases.push_back({id("replay L'", "n", n), [n, tab] { return expect(twist::check_replay_l_prime(n, *tab)); }});
  }
  cases.push_back({"delta even", [] { return expect(twist::check_delta_even()); }});
  cases.push_back({"delta odd", [] { return expect(twist::check_delta_odd()); }});
  for (int m = 1; m <= b.max_cert; ++m) {
    cases.push_back({id("R~ certificate", "m", m), [m]() -> Outcome {
                       const auto rep = twist::check_r_tilde_irreducible(m);
                       if (rep.irreducible() && rep.degree_gap == 1) return std::nullopt;
                       return "verdict " + std::string(verdict_name(rep.verdict)) + ", gap " +
                              std::to_string(rep.degree_gap) + ", gcd " + rep.gcd.str();
                     }});
  }
  return cases;
}

std::vector<Case> maps_cases(int max_gf, int max_n) {
  std::vector<Case> cases;
  auto tab = std::make_shared<const twist::TwistTables>(std::max(max_gf, 2 * max_n + 1), std::max(max_n, 0));
  for (int m = 1; m <= max_gf; ++m) {
    cases.push_back({id("gf pull-back", "m", m), [m, tab] { return expect(twist::check_gf_pull_back(m, *tab)); }});
  }
  for (int n = 0; n <= max_n; ++n) {
    cases.push_back({id("fg pull-back", "n", n), [n, tab] { return expect(twist::check_fg_pull_back(n, *tab)); }});
    cases.push_back({id("odd pull-back", "n", n), [n, tab] { return expect(twist::check_odd_pull_back(n, *tab)); }});
    cases.push_back({id("L_n divides", "n", n), [n, tab] { return expect(twist::check_fg_divisible(n, *tab)); }});
  }
  return cases;
}

std::vector<int> valid_p3(int max) {
  std::vector<int> ps;
  for (int p = 5; p <= max; p += 2) {
    if (p % 3 != 0) ps.push_back(p);
  }
  return ps;
}

std::vector<Case> bridge3_cases(int max) {
  std::vector<Case> cases;
  for (const int p : valid_p3(max)) {
    cases.push_back({id("recursion = closed", "p", p),
                     [p] { return expect_equal(bridge::phi_recursive_p3(p), bridge::phi_closed_p3(p)); }});
    cases.push_back({id("P Q R", "p", p), [p]() -> Outcome {
                       const auto pqr = bridge::pqr_p3(p);
                       const int d = (p - 1) / 2;
                       if (pqr.P.degree() != d || (pqr.Q * pqr.R).degree() != d - 1) return "degree profile";
                       return std::nullopt;
                     }});
    cases.push_back({id("certificate", "p", p), [p]() -> Outcome {
                       if (bridge::check_phi_irreducible_p3(p).passed()) return std::nullopt;
                       return "certificate failed";
                     }});
  }
  for (int p = 3; p <= max; p += 2) {
    cases.push_back({id("epsilon symmetry", "p", p), [p]() -> Outcome {
                       for (int q = 1; q < p; ++q) {
                         if (std::gcd(p, q) != 1) continue;
                         const auto eps = bridge::epsilon_seq(p, q);
                         // eps_{p-j} = (-1)^(q-1) eps_j: palindromic for odd q only.
                         const int mirror = q % 2 == 1 ? 1 : -1;
                         for (std::size_t j = 0; j < eps.size(); ++j) {
                           if (eps[eps.size() - 1 - j] != mirror * eps[j]) return "q=" + std::to_string(q);
                         }
                         const auto word = bridge::bridge_word(bridge::BridgeParams(p, q));
                         if (!std::equal(word.begin(), word.end(), word.rbegin(), [](const auto& l, const auto& r) {
                               return l.exp == r.exp;
                             })) {
                           return "word exponents q=" + std::to_string(q);
                         }
                         if (q == 3) {
                           const int l = p / 3;
                           for (int j = 1; j <= (p - 1) / 2; ++j) {
                             if (eps[static_cast<std::size_t>(j - 1)] != (j <= l ? 1 : -1)) return "q=3 split";
                           }
                         }
                       }
                       return std::nullopt;
                     }});
  }
  return cases;
}

std::vector<Case> bridge3_oracle_cases(int max) {
  std::vector<Case> cases;
  for (const int p : valid_p3(max)) {
    cases.push_back({id("oracle = closed", "p", p), [p]() -> Outcome {
                       const auto o = oracle::defining_poly(p, 3, Coords::BridgeXZ);
                       const BiPoly closed = bridge::phi_closed_p3(p);
                       if (auto bad = expect_up_to_sign(o.phi, closed)) return bad;
                       return expect_equal(bridge::phi_recursive_p3(p), closed);
                     }});
  }
  return cases;
}

std::vector<Case> oracle_twist_cases(int max_n) {
  std::vector<Case> cases;
  for (int n = 1; n <= max_n; ++n) {
    cases.push_back({id("oracle = L_n", "n", n), [n] {
                       const auto [p, q] = twist::TwistKnot(2 * n).bridge_params();
                       return expect_up_to_sign(oracle::defining_poly(p, q, Coords::TraceEven).delta, twist::l_n(n));
                     }});
    cases.push_back({id("oracle = L'_n", "n", n), [n] {
                       const auto [p, q] = twist::TwistKnot(2 * n - 1).bridge_params();
                       return expect_up_to_sign(oracle::defining_poly(p, q, Coords::TraceOdd).delta,
                                                twist::l_prime_n(n));
                     }});
  }
  return cases;
}

std::vector<Case> oracle_cases(int max) {
  std::vector<Case> cases;
  for (int p = 3; p <= max; p += 2) {
    for (int q = 1; q < p; ++q) {
      if (std::gcd(p, q) != 1) continue;
      cases.push_back({"oracle b(" + std::to_string(p) + "," + std::to_string(q) + ")", [p, q]() -> Outcome {
                         const auto xz = oracle::defining_poly(p, q, Coords::BridgeXZ);
                         const int d = (p - 1) / 2;
                         const UniPoly slice = xz.phi.coefficient_of(Var::x, 0);
                         const UniPoly expected = cheb_s(d) - cheb_s(d - 1);
                         if (!(slice == expected) && !(slice == -expected)) return "abelian slice";
                         const auto ev = oracle::defining_poly(p, q, Coords::TraceEven);
                         const VarPair xy{Var::x, Var::y};
                         const BiPoly z_of_y = BiPoly::monomial(xy, 1, 2, 0) - BiPoly::variable(xy, Var::y);
                         if (auto bad = expect_equal(substitute(xz.phi, Var::z, z_of_y), ev.phi)) {
                           return "coordinate duality " + *bad;
                         }
                         return std::nullopt;
                       }});
    }
  }
  return cases;
}

std::optional<std::vector<Case>> named_suite(std::string_view name, int max) {
  if (name == "chebyshev") return chebyshev_cases(max);
  if (name == "twist") return twist_cases({max, max, max, max});
  if (name == "maps") return maps_cases(max, max);
  if (name == "bridge3") return bridge3_cases(max);
  if (name == "oracle") {
    auto cases = oracle_cases(max);
    for (auto& c : bridge3_oracle_cases(max)) cases.push_back(std::move(c));
    for (auto& c : oracle_twist_cases((max - 1) / 4)) cases.push_back(std::move(c));
    return cases;
  }
  return std::nullopt;
}

std::vector<std::string_view> suite_names() { return {"chebyshev", "twist", "maps", "bridge3", "oracle"}; }

}  // namespace chebvar::suites
