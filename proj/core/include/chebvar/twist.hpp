#pragma once

#include <utility>
#include <vector>

#include "chebvar/bipoly.hpp"
#include "chebvar/chebyshev.hpp"
#include "chebvar/coords.hpp"
#include "chebvar/identity.hpp"
#include "chebvar/irreducibility.hpp"

namespace chebvar::twist {

/// The m-twist knot K_m = [2, m].
class TwistKnot {
 public:
  /// Throws InvalidParams for m < 0; mirrors are reached through
  /// X(K_{-m}) = X(K_{m-1}) instead.
  explicit TwistKnot(int m);

  int m() const { return m_; }
  bool even() const { return m_ % 2 == 0; }
  /// m = 2n for even m, m = 2n - 1 for odd m.
  int n() const { return even() ? m_ / 2 : (m_ + 1) / 2; }
  /// Coordinates of the trace presentation: L_n for even m, L'_n for odd m.
  Coords trace_coords() const { return even() ? Coords::TraceEven : Coords::TraceOdd; }
  /// K_m = b(2m+1, m). For even m the word is built from the mirror
  /// parameter m+1 and equals u^n; for odd m it is v^(n-1) a b. Requires m >= 1.
  std::pair<int, int> bridge_params() const;

 private:
  int m_;
};

/// t = y^2 - y x^2 + 2x^2 - 2 in (x, y).
BiPoly t_poly();

/// X_0 .. X_max by X_{m+1} = y X_m - X_{m-1} - 2x^2, X_0 = -2, X_1 = -x^2 - y.
std::vector<BiPoly> x_sequence(int max_m);
/// X_m by the recursion. Throws NegativeIndex for m < 0.
BiPoly x_m(int m);
/// -S_m(y) + S_{m-2}(y) - x^2 (S_{m-1}(y) + 2 sum_{i=0}^{m-2} S_i(y)).
BiPoly x_m_closed(int m);

/// L_n = (y-2)(S_n(t) + (y+1-x^2) S_{n-1}(t)), TraceEven coordinates.
BiPoly l_n(int n);
BiPoly l_n(int n, const ChebyshevSeq& st);
/// L'_n = (x^2-y-2)((y-1) S_{n-1}(t) - S_{n-2}(t)), TraceOdd coordinates.
BiPoly l_prime_n(int n);
BiPoly l_prime_n(int n, const ChebyshevSeq& st);

/// R~_m = S_m(y) - S_{m-1}(y) + x^2 sum_{i=0}^{m-1} S_i(y), Skein coordinates.
BiPoly r_tilde_m(int m);
/// R_m = (y+2) R~_m. Also checks R_m = -(X_{m+1} + X_m + x^2) and throws
/// IdentityViolation if it fails.
BiPoly r_m(int m);

struct Point {
  Integer x;
  Integer y;
  friend bool operator==(const Point&, const Point&) = default;
};

/// f(x, y) = (-x, -t(x, y)).
Point map_f_point(const Point& p);
/// g(x, y) = (-x, -X_m(x, y)).
Point map_g_point(int m, const Point& p);
/// p o f, i.e. p(-x, -t(x, y)).
BiPoly pull_back_f(const BiPoly& p);
/// p o g, i.e. p(-x, -X_m(x, y)).
BiPoly pull_back_g(int m, const BiPoly& p);

using IdentityCheck = Identity<BiPoly>;

/// -X_m^2 - x^2 X_m - 2x^2 + 2 == y - (y+2) R~_m R~_{m-1}; the left side is
/// formed as -t(-x, -X_m). Requires m >= 1.
IdentityCheck verify_prop_gf(int m);
/// -X_{2n}(-x, -t) - y == (y-2) gamma_n.
IdentityCheck verify_prop_fg(int n);
/// -X_{2n+1}(-x, -t) - y == -(x^2-y-2) gamma'_n.
IdentityCheck verify_prop_odd(int n);

/// (S_n(t) + (y+1-x^2) S_{n-1}(t)) ((y+1-x^2) S_{n-1}(t) + S_{n-2}(t))
BiPoly gamma_n(int n, const ChebyshevSeq& st);
/// (S_n(t) + (1-y) S_{n-1}(t)) ((1-y) S_n(t) + S_{n-1}(t))
BiPoly gamma_prime_n(int n, const ChebyshevSeq& st);
/// (y+1-x^2)(t+y+1-x^2) + 1, so that gamma_n = delta S_{n-1}(t)^2 - 1.
BiPoly delta_even();
/// (1-y)(t+1-y) + 1, so that gamma'_n = delta' S_n(t) S_{n-1}(t) + 1 - y.
BiPoly delta_odd();

/// Certificate that R~_m is irreducible: f = S_m - S_{m-1},
/// g = (S_m - S_{m-1} - 1) / (y - 2). Requires m >= 1.
IrreducibilityReport check_r_tilde_irreducible(int m);

/// Precomputed X_m and S_k(t) tables for running identity families over a
/// range of indices without recomputing prefixes.
class TwistTables {
 public:
  TwistTables(int max_m, int max_n);

  const BiPoly& x(int m) const;
  const std::vector<BiPoly>& xs() const { return x_; }
  const ChebyshevSeq& st() const { return st_; }
  const BiPoly& t() const { return st_.arg(); }

 private:
  std::vector<BiPoly> x_;
  ChebyshevSeq st_;
};

// Identity families over the twist-knot polynomials.
IdentityCheck check_x_closed_form(int m, const TwistTables& tab);
IdentityCheck check_r_via_x(int m, const TwistTables& tab);
IdentityCheck check_x_invariant(int m, const TwistTables& tab);
IdentityCheck check_r_product(int m, const TwistTables& tab);
IdentityCheck check_x_two_step(int m, const TwistTables& tab);
IdentityCheck check_gf_pull_back(int m, const TwistTables& tab);
IdentityCheck check_fg_pull_back(int n, const TwistTables& tab);
IdentityCheck check_odd_pull_back(int n, const TwistTables& tab);
/// -X_{2n}(-x, -t) - y is exactly divisible by L_n; the difference on failure
/// is the dividend.
IdentityCheck check_fg_divisible(int n, const TwistTables& tab);
/// recurrence_closed_form(y-2, y-t, n, t) == L_n.
IdentityCheck check_replay_l(int n, const TwistTables& tab);
/// (x^2-t-y) S_{n-1}(t) - (x^2-2-y) S_{n-2}(t) == L'_n.
IdentityCheck check_replay_l_prime(int n, const TwistTables& tab);
/// 2 delta + t^2 - 4 == -(y+2-x^2)(2x^2 - (t+2)y).
IdentityCheck check_delta_even();
/// t delta' - (t^2-4)(1-y) == (2-y)(2x^2 - (t+2)y).
IdentityCheck check_delta_odd();

}  // namespace chebvar::twist
