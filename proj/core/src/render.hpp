#pragma once

#include <string>

#include "chebvar/unipoly.hpp"

namespace chebvar::detail {

/// Appends one signed term "c*m" to `out`, where `monomial` is already
/// rendered ("" for the constant monomial).
inline void append_term(std::string& out, const Integer& c, const std::string& monomial) {
  const bool negative = sgn(c) < 0;
  if (out.empty()) {
    if (negative) out += '-';
  } else {
    out += negative ? " - " : " + ";
  }
  const Integer mag = abs(c);
  if (monomial.empty()) {
    out += mag.get_str();
  } else {
    if (mag != 1) {
      out += mag.get_str();
      out += '*';
    }
    out += monomial;
  }
}

inline std::string power(std::string_view var, int exp) {
  if (exp == 0) return {};
  std::string s(var);
  if (exp != 1) s += "^" + std::to_string(exp);
  return s;
}

}  // namespace chebvar::detail
