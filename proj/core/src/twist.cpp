#include "chebvar/twist.hpp"

#include <algorithm>
#include <string>

#include "chebvar/errors.hpp"

namespace chebvar::twist {
namespace {

constexpr VarPair kXY{Var::x, Var::y};

BiPoly c(long v) { return BiPoly::constant(kXY, v); }
BiPoly X() { return BiPoly::variable(kXY, Var::x); }
BiPoly Y() { return BiPoly::variable(kXY, Var::y); }
BiPoly X2() { return BiPoly::monomial(kXY, 1, 2, 0); }
BiPoly sy(int k) { return BiPoly::lift(cheb_s(k, Var::y), kXY); }

// sum_{i=0}^{top} S_i(y); empty (zero) for top < 0.
BiPoly sy_sum(int top) {
  UniPoly acc(Var::y);
  for (int i = 0; i <= top; ++i) acc += cheb_s(i, Var::y);
  return BiPoly::lift(acc, kXY);
}

IdentityCheck holds_if(bool ok, BiPoly diff) { return IdentityCheck{ok, std::move(diff)}; }

}  // namespace

TwistKnot::TwistKnot(int m) : m_(m) {
  if (m < 0) {
    throw InvalidParams("negative twist count m=" + std::to_string(m) +
                        ": use the mirror rule X(K_{-m})=X(K_{m-1})");
  }
}

std::pair<int, int> TwistKnot::bridge_params() const {
  if (m_ < 1) throw InvalidParams("K_0 is the unknot and has no 2-bridge word");
  return {2 * m_ + 1, m_};
}

BiPoly t_poly() {
  return BiPoly(kXY, {{{0, 2}, 1}, {{2, 1}, -1}, {{2, 0}, 2}, {{0, 0}, -2}});
}

std::vector<BiPoly> x_sequence(int max_m) {
  if (max_m < 0) throw NegativeIndex("X_m requires m >= 0");
  std::vector<BiPoly> xs;
  xs.reserve(static_cast<std::size_t>(max_m) + 1);
  xs.push_back(c(-2));
  if (max_m >= 1) xs.push_back(-X2() - Y());
  const BiPoly y = Y();
  const BiPoly two_x2 = X2() * Integer(2);
  for (int m = 1; m < max_m; ++m) {
    const auto k = static_cast<std::size_t>(m);
    xs.push_back(y * xs[k] - xs[k - 1] - two_x2);
  }
  return xs;
}

BiPoly x_m(int m) { return x_sequence(m).back(); }

BiPoly x_m_closed(int m) {
  if (m < 0) throw NegativeIndex("X_m requires m >= 0");
  return -sy(m) + sy(m - 2) - X2() * (sy(m - 1) + sy_sum(m - 2) * Integer(2));
}

BiPoly l_n(int n) {
  const ChebyshevSeq st(t_poly(), std::max(std::abs(n), std::abs(n - 1)));
  return l_n(n, st);
}

BiPoly l_n(int n, const ChebyshevSeq& st) {
  return (Y() - c(2)) * (st[n] + (Y() + c(1) - X2()) * st[n - 1]);
}

BiPoly l_prime_n(int n) {
  const ChebyshevSeq st(t_poly(), std::max(std::abs(n - 1), std::abs(n - 2)));
  return l_prime_n(n, st);
}

BiPoly l_prime_n(int n, const ChebyshevSeq& st) {
  return (X2() - Y() - c(2)) * ((Y() - c(1)) * st[n - 1] - st[n - 2]);
}

BiPoly r_tilde_m(int m) {
  if (m < 0) throw NegativeIndex("R_m requires m >= 0");
  return sy(m) - sy(m - 1) + X2() * sy_sum(m - 1);
}

BiPoly r_m(int m) {
  BiPoly r = (Y() + c(2)) * r_tilde_m(m);
  const auto xs = x_sequence(m + 1);
  const BiPoly via_x = -(xs[static_cast<std::size_t>(m + 1)] + xs[static_cast<std::size_t>(m)] + X2());
  if (!(r == via_x)) {
    throw IdentityViolation("R_" + std::to_string(m) + " != -(X_{m+1} + X_m + x^2); difference " +
                            (r - via_x).str());
  }
  return r;
}

Point map_f_point(const Point& p) { return {-p.x, -t_poly().eval(p.x, p.y)}; }

Point map_g_point(int m, const Point& p) { return {-p.x, -x_m(m).eval(p.x, p.y)}; }

BiPoly pull_back_f(const BiPoly& p) {
  return substitute(substitute(p, Var::x, -X()), Var::y, -t_poly());
}

BiPoly pull_back_g(int m, const BiPoly& p) {
  return substitute(substitute(p, Var::x, -X()), Var::y, -x_m(m));
}

IdentityCheck verify_prop_gf(int m) {
  if (m < 1) throw NegativeIndex("The gf pull-back is checked for m >= 1");
  return check_gf_pull_back(m, TwistTables(m, 0));
}

IdentityCheck verify_prop_fg(int n) {
  if (n < 0) throw NegativeIndex("fg identity is checked for n >= 0");
  return check_fg_pull_back(n, TwistTables(2 * n, n));
}

IdentityCheck verify_prop_odd(int n) {
  if (n < 0) throw NegativeIndex("odd identity is checked for n >= 0");
  return check_odd_pull_back(n, TwistTables(2 * n + 1, n));
}

BiPoly gamma_n(int n, const ChebyshevSeq& st) {
  const BiPoly k = Y() + c(1) - X2();
  return (st[n] + k * st[n - 1]) * (k * st[n - 1] + st[n - 2]);
}

BiPoly gamma_prime_n(int n, const ChebyshevSeq& st) {
  const BiPoly k = c(1) - Y();
  return (st[n] + k * st[n - 1]) * (k * st[n] + st[n - 1]);
}

BiPoly delta_even() {
  const BiPoly k = Y() + c(1) - X2();
  return k * (t_poly() + k) + c(1);
}

BiPoly delta_odd() {
  const BiPoly k = c(1) - Y();
  return k * (t_poly() + k) + c(1);
}

IrreducibilityReport check_r_tilde_irreducible(int m) {
  if (m < 1) throw NegativeIndex("the R~_m certificate needs m >= 1");
  const UniPoly f = cheb_s(m, Var::y) - cheb_s(m - 1, Var::y);
  const UniPoly g = exact_div(f - UniPoly::constant(Var::y, 1), UniPoly(Var::y, {-2, 1}));
  const BiPoly rt = r_tilde_m(m);
  const BiPoly split = BiPoly::lift(f, kXY) + X2() * BiPoly::lift(g, kXY);
  if (!(rt == split)) {
    throw IdentityViolation("R~_" + std::to_string(m) + " != f + x^2 g; difference " + (rt - split).str());
  }
  return irreducible_by_parity_gcd(f, g);
}

TwistTables::TwistTables(int max_m, int max_n)
    : x_(x_sequence(std::max(max_m, 0))), st_(t_poly(), std::max(max_n, 0) + 2) {}

const BiPoly& TwistTables::x(int m) const {
  if (m < 0 || m >= static_cast<int>(x_.size())) {
    throw std::out_of_range("X_" + std::to_string(m) + " outside the table");
  }
  return x_[static_cast<std::size_t>(m)];
}

IdentityCheck check_x_closed_form(int m, const TwistTables& tab) {
  return IdentityCheck::compare(tab.x(m), x_m_closed(m));
}

IdentityCheck check_r_via_x(int m, const TwistTables& tab) {
  const BiPoly r = (Y() + c(2)) * r_tilde_m(m);
  return IdentityCheck::compare(r, -(tab.x(m + 1) + tab.x(m) + X2()));
}

IdentityCheck check_x_invariant(int m, const TwistTables& tab) {
  const BiPoly& a = tab.x(m);
  const BiPoly& b = tab.x(m - 1);
  const BiPoly lhs = a * a + b * b - Y() * a * b + X2() * Integer(2) * (a + b);
  // -y^2 - 2x^2 y - x^4 - 4x^2 + 4
  const BiPoly rhs(kXY, {{{0, 2}, -1}, {{2, 1}, -2}, {{4, 0}, -1}, {{2, 0}, -4}, {{0, 0}, 4}});
  return IdentityCheck::compare(lhs, rhs);
}

IdentityCheck check_r_product(int m, const TwistTables& tab) {
  const BiPoly y2 = Y() + c(2);
  const BiPoly lhs = (y2 * r_tilde_m(m)) * (y2 * r_tilde_m(m - 1));
  const BiPoly& xm = tab.x(m);
  const BiPoly rhs = y2 * (xm * xm + X2() * xm + Y() + X2() * Integer(2) - c(2));
  return IdentityCheck::compare(lhs, rhs);
}

IdentityCheck check_x_two_step(int m, const TwistTables& tab) {
  const BiPoly lhs = tab.x(m + 2) + tab.x(m - 2) - (Y() * Y() - c(2)) * tab.x(m);
  const BiPoly rhs = -(Y() * Integer(2) + c(4)) * X2();
  return IdentityCheck::compare(lhs, rhs);
}

IdentityCheck check_gf_pull_back(int m, const TwistTables& tab) {
  // -t(-x, -X_m): the composite g o f read off on the second coordinate.
  const BiPoly minus_x = -X();
  const BiPoly lhs = -substitute(substitute(t_poly(), Var::x, minus_x), Var::y, -tab.x(m));
  const BiPoly rhs = Y() - (Y() + c(2)) * r_tilde_m(m) * r_tilde_m(m - 1);
  return IdentityCheck::compare(lhs, rhs);
}

IdentityCheck check_fg_pull_back(int n, const TwistTables& tab) {
  const BiPoly lhs = -pull_back_f(tab.x(2 * n)) - Y();
  const BiPoly rhs = (Y() - c(2)) * gamma_n(n, tab.st());
  return IdentityCheck::compare(lhs, rhs);
}

IdentityCheck check_odd_pull_back(int n, const TwistTables& tab) {
  const BiPoly lhs = -pull_back_f(tab.x(2 * n + 1)) - Y();
  const BiPoly rhs = -(X2() - Y() - c(2)) * gamma_prime_n(n, tab.st());
  return IdentityCheck::compare(lhs, rhs);
}

IdentityCheck check_fg_divisible(int n, const TwistTables& tab) {
  const BiPoly dividend = -pull_back_f(tab.x(2 * n)) - Y();
  try {
    const BiPoly q = exact_div(dividend, l_n(n, tab.st()));
    return holds_if(true, BiPoly(kXY));
  } catch (const NotDivisible&) {
    return holds_if(false, dividend);
  }
}

IdentityCheck check_replay_l(int n, const TwistTables& tab) {
  const BiPoly& t = tab.t();
  const BiPoly replay = recurrence_closed_form(Y() - c(2), Y() - t, n, tab.st());
  return IdentityCheck::compare(replay, l_n(n, tab.st()));
}

IdentityCheck check_replay_l_prime(int n, const TwistTables& tab) {
  const BiPoly& t = tab.t();
  const BiPoly replay =
      recurrence_closed_form(X2() - t - Y(), X2() - c(2) - Y(), n - 1, tab.st());
  return IdentityCheck::compare(replay, l_prime_n(n, tab.st()));
}

IdentityCheck check_delta_even() {
  const BiPoly t = t_poly();
  const BiPoly lhs = delta_even() * Integer(2) + t * t - c(4);
  const BiPoly rhs = -(Y() + c(2) - X2()) * (X2() * Integer(2) - (t + c(2)) * Y());
  return IdentityCheck::compare(lhs, rhs);
}

IdentityCheck check_delta_odd() {
  const BiPoly t = t_poly();
  const BiPoly lhs = t * delta_odd() - (t * t - c(4)) * (c(1) - Y());
  const BiPoly rhs = (c(2) - Y()) * (X2() * Integer(2) - (t + c(2)) * Y());
  return IdentityCheck::compare(lhs, rhs);
}

}  // namespace chebvar::twist
