#pragma once

#include <array>
#include <string>
#include <vector>

#include "chebvar/unipoly.hpp"
#include "chebvar/var.hpp"

namespace chebvar {

/// One monomial: coefficient times vars[0]^exp[0] * vars[1]^exp[1].
struct Term {
  std::array<int, 2> exp;
  Integer coeff;

  friend bool operator==(const Term&, const Term&) = default;
};

/// Graded order: larger total degree first, ties broken by larger first
/// exponent. This is both the storage order and the text rendering order,
/// and its first element is the leading term used by exact division.
bool graded_before(const std::array<int, 2>& a, const std::array<int, 2>& b);

/// Sparse bivariate polynomial with non-negative exponents.
///
/// Terms are kept sorted by `graded_before` with no zero coefficients, so
/// equality is equality of term lists.
class BiPoly {
 public:
  explicit BiPoly(VarPair vars = {Var::x, Var::y}) : vars_(vars) {}
  /// Accepts terms in any order; merges duplicates and drops zeros.
  BiPoly(VarPair vars, std::vector<Term> terms);

  static BiPoly constant(VarPair vars, Integer c);
  static BiPoly monomial(VarPair vars, Integer c, int e0, int e1);
  /// The polynomial `v`; throws UnknownVariable if v is not in `vars`.
  static BiPoly variable(VarPair vars, Var v);
  /// Embeds a univariate polynomial; its variable must belong to `vars`
  /// unless it is constant.
  static BiPoly lift(const UniPoly& p, VarPair vars);

  const VarPair& vars() const { return vars_; }
  /// Index of v in vars(), or -1.
  int slot(Var v) const;
  const std::vector<Term>& terms() const { return terms_; }
  std::size_t size() const { return terms_.size(); }

  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const;
  /// Degree in one variable (UniPoly::kZeroDegree for zero).
  int degree_in(Var v) const;
  int total_degree() const;
  /// Coefficient of vars[0]^e0 vars[1]^e1.
  Integer coeff(int e0, int e1) const;
  /// The coefficient of v^k, as a polynomial in the other variable.
  UniPoly coefficient_of(Var v, int k) const;
  /// Converts a polynomial that involves at most one variable.
  UniPoly to_uni(Var v) const;

  Integer eval(const Integer& a0, const Integer& a1) const;
  double eval(double a0, double a1) const;

  /// Same terms, variables renamed.
  BiPoly with_vars(VarPair vars) const;

  BiPoly operator-() const;
  BiPoly& operator+=(const BiPoly& rhs);
  BiPoly& operator-=(const BiPoly& rhs);
  BiPoly& operator*=(const BiPoly& rhs);
  BiPoly& operator*=(const Integer& c);

  friend BiPoly operator+(BiPoly lhs, const BiPoly& rhs) { return lhs += rhs; }
  friend BiPoly operator-(BiPoly lhs, const BiPoly& rhs) { return lhs -= rhs; }
  friend BiPoly operator*(const BiPoly& lhs, const BiPoly& rhs);
  friend BiPoly operator*(BiPoly lhs, const Integer& c) { return lhs *= c; }
  friend BiPoly operator*(const Integer& c, BiPoly rhs) { return rhs *= c; }

  friend bool operator==(const BiPoly& lhs, const BiPoly& rhs);

  /// "-x^2*y + 2*x^2 + y^2 - 2"
  std::string str() const;

 private:
  void merge(const BiPoly& rhs, int sign);

  VarPair vars_;
  std::vector<Term> terms_;
};

/// Exact quotient by iterated leading-term elimination in graded order.
/// Throws NotDivisible on any nonzero remainder; DivisionByZero if d == 0.
BiPoly exact_div(const BiPoly& p, const BiPoly& d);

/// Replaces every occurrence of `which` by `value` and expands. The result
/// lives in value's variable pair (p's pair when value is constant).
/// Throws UnknownVariable if `which` is not one of p's variables.
BiPoly substitute(const BiPoly& p, Var which, const BiPoly& value);

/// f(value), expanded.
BiPoly compose(const UniPoly& f, const BiPoly& value);

}  // namespace chebvar
