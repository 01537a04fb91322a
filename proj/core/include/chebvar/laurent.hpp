#pragma once

#include <string>
#include <vector>

#include "chebvar/bipoly.hpp"

namespace chebvar {

/// Element of Z[s, 1/s][u]. Terms use `Term::exp = {s-exponent, u-exponent}`;
/// the s-exponent may be negative.
class LaurentBi {
 public:
  LaurentBi() = default;
  explicit LaurentBi(std::vector<Term> terms);

  static LaurentBi constant(Integer c);
  static LaurentBi monomial(Integer c, int s_exp, int u_exp);

  const std::vector<Term>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  bool is_one() const;

  /// Coefficient of s^es u^eu.
  Integer coeff(int es, int eu) const;
  int u_degree() const;

  LaurentBi operator-() const;
  LaurentBi& operator+=(const LaurentBi& rhs);
  LaurentBi& operator-=(const LaurentBi& rhs);
  friend LaurentBi operator+(LaurentBi lhs, const LaurentBi& rhs) { return lhs += rhs; }
  friend LaurentBi operator-(LaurentBi lhs, const LaurentBi& rhs) { return lhs -= rhs; }
  friend LaurentBi operator*(const LaurentBi& lhs, const LaurentBi& rhs);
  friend bool operator==(const LaurentBi&, const LaurentBi&) = default;

  double eval(double s, double u) const;
  std::string str() const;

 private:
  void merge(const LaurentBi& rhs, int sign);

  // Sorted by u-exponent descending, then s-exponent descending.
  std::vector<Term> terms_;
};

}  // namespace chebvar
