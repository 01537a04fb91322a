#pragma once

#include <gmpxx.h>

#include <initializer_list>
#include <string>
#include <vector>

#include "chebvar/var.hpp"

namespace chebvar {

using Integer = mpz_class;

/// Dense univariate polynomial over arbitrary-precision integers.
///
/// `coeffs()[k]` is the coefficient of `var^k`. The leading coefficient is
/// nonzero unless the polynomial is zero, so two equal polynomials always
/// have identical coefficient vectors.
class UniPoly {
 public:
  /// Degree reported for the zero polynomial.
  static constexpr int kZeroDegree = -1;

  explicit UniPoly(Var var = Var::z) : var_(var) {}
  UniPoly(Var var, std::vector<Integer> coeffs);
  /// Ascending coefficients: `{c0, c1, c2}` is c0 + c1*v + c2*v^2.
  UniPoly(Var var, std::initializer_list<long> coeffs);

  static UniPoly constant(Var var, Integer c);
  static UniPoly monomial(Var var, Integer c, int exp);
  static UniPoly variable(Var var) { return monomial(var, 1, 1); }

  Var var() const { return var_; }
  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
  bool is_zero() const { return coeffs_.empty(); }
  bool is_constant() const { return coeffs_.size() <= 1; }
  bool is_one() const { return coeffs_.size() == 1 && coeffs_[0] == 1; }

  const std::vector<Integer>& coeffs() const { return coeffs_; }
  /// Coefficient of var^exp; zero outside the stored range.
  const Integer& operator[](int exp) const;
  /// Leading coefficient; zero for the zero polynomial.
  const Integer& leading() const;

  /// Non-negative gcd of the coefficients (0 for the zero polynomial).
  Integer content() const;
  /// p / content(p), sign-normalized so the leading coefficient is positive.
  UniPoly primitive_part() const;

  UniPoly with_var(Var var) const;

  Integer eval(const Integer& at) const;
  double eval(double at) const;
  /// Sum of absolute values of the coefficients, as a double.
  double abs_coeff_sum() const;

  UniPoly operator-() const;
  UniPoly& operator+=(const UniPoly& rhs);
  UniPoly& operator-=(const UniPoly& rhs);
  UniPoly& operator*=(const UniPoly& rhs);
  UniPoly& operator*=(const Integer& c);

  friend UniPoly operator+(UniPoly lhs, const UniPoly& rhs) { return lhs += rhs; }
  friend UniPoly operator-(UniPoly lhs, const UniPoly& rhs) { return lhs -= rhs; }
  friend UniPoly operator*(const UniPoly& lhs, const UniPoly& rhs);
  friend UniPoly operator*(UniPoly lhs, const Integer& c) { return lhs *= c; }
  friend UniPoly operator*(const Integer& c, UniPoly rhs) { return rhs *= c; }

  /// Canonical equality. Constants compare equal regardless of variable tag.
  friend bool operator==(const UniPoly& lhs, const UniPoly& rhs);

  /// Text rendering, descending exponents: "z^3 - 2*z + 1".
  std::string str() const;

 private:
  void trim();
  void add_scaled(const UniPoly& rhs, int sign);

  Var var_;
  std::vector<Integer> coeffs_;
};

/// Exact quotient p / d over the integers. Throws NotDivisible when the
/// remainder is nonzero or a quotient coefficient is not integral, and
/// DivisionByZero for d == 0.
UniPoly exact_div(const UniPoly& p, const UniPoly& d);

/// Pseudo-remainder lc(d)^(deg p - deg d + 1) * p mod d.
UniPoly pseudo_rem(const UniPoly& p, const UniPoly& d);

/// Generator of the ideal (p, q) in Q[v], returned primitive with positive
/// leading coefficient; the constant 1 iff p and q are coprime over Q.
/// gcd(0, 0) is 0.
UniPoly uni_gcd(const UniPoly& p, const UniPoly& q);

}  // namespace chebvar
