#pragma once

#include <array>
#include <complex>
#include <map>
#include <random>
#include <utility>
#include <vector>

#include "chebvar/bipoly.hpp"
#include "chebvar/bridge.hpp"
#include "chebvar/unipoly.hpp"
#include "support/frozen_types.hpp"

namespace testing_support {

using chebvar::BiPoly;
using chebvar::Integer;
using chebvar::Term;
using chebvar::UniPoly;
using chebvar::Var;
using chebvar::VarPair;

inline UniPoly uni(const std::vector<frozen::UTerm>& terms, Var v = Var::z) {
  std::vector<Integer> c;
  for (const auto& t : terms) {
    if (static_cast<int>(c.size()) <= t.e) c.resize(static_cast<std::size_t>(t.e) + 1);
    c[static_cast<std::size_t>(t.e)] = Integer(t.c);
  }
  return UniPoly(v, std::move(c));
}

inline BiPoly bi(const std::vector<frozen::BTerm>& terms, VarPair vars) {
  std::vector<Term> out;
  for (const auto& t : terms) out.push_back({{t.e0, t.e1}, Integer(t.c)});
  return BiPoly(vars, std::move(out));
}

/// Binomial closed forms, independent of the recurrence:
/// S_n(z) = sum_k (-1)^k C(n-k, k) z^(n-2k),
/// T_n(z) = sum_k (-1)^k n/(n-k) C(n-k, k) z^(n-2k).
inline Integer binom(long n, long k) {
  Integer r;
  mpz_bin_uiui(r.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
  return r;
}

inline UniPoly binomial_s(int n) {
  std::vector<Integer> c(static_cast<std::size_t>(n) + 1);
  for (int k = 0; 2 * k <= n; ++k) {
    const Integer b = binom(n - k, k);
    c[static_cast<std::size_t>(n - 2 * k)] = k % 2 == 0 ? b : Integer(-b);
  }
  return UniPoly(Var::z, std::move(c));
}

inline UniPoly binomial_t(int n) {
  if (n == 0) return UniPoly::constant(Var::z, 2);
  std::vector<Integer> c(static_cast<std::size_t>(n) + 1);
  for (int k = 0; 2 * k <= n; ++k) {
    Integer b = binom(n - k, k) * n / (n - k);
    c[static_cast<std::size_t>(n - 2 * k)] = k % 2 == 0 ? b : Integer(-b);
  }
  return UniPoly(Var::z, std::move(c));
}

/// Map-based schoolbook product, independent of the packed multiplication.
inline BiPoly naive_mul(const BiPoly& a, const BiPoly& b) {
  std::map<std::pair<int, int>, Integer> acc;
  for (const Term& s : a.terms()) {
    for (const Term& t : b.terms()) acc[{s.exp[0] + t.exp[0], s.exp[1] + t.exp[1]}] += s.coeff * t.coeff;
  }
  std::vector<Term> out;
  for (const auto& [e, c] : acc) out.push_back({{e.first, e.second}, c});
  const VarPair vars = a.is_constant() ? b.vars() : a.vars();
  return BiPoly(vars, std::move(out));
}

inline BiPoly random_bipoly(std::mt19937_64& rng, VarPair vars, int max_deg, int n_terms, long bound) {
  std::uniform_int_distribution<int> deg(0, max_deg);
  std::uniform_int_distribution<long> coef(-bound, bound);
  std::vector<Term> terms;
  for (int i = 0; i < n_terms; ++i) terms.push_back({{deg(rng), deg(rng)}, Integer(coef(rng))});
  return BiPoly(vars, std::move(terms));
}

inline UniPoly random_unipoly(std::mt19937_64& rng, Var v, int max_deg, long bound) {
  std::uniform_int_distribution<int> deg(0, max_deg);
  std::uniform_int_distribution<long> coef(-bound, bound);
  std::vector<Integer> c(static_cast<std::size_t>(deg(rng)) + 1);
  for (auto& e : c) e = coef(rng);
  return UniPoly(v, std::move(c));
}

/// Numeric Riley representation: traces of words as complex numbers.
using cplx = std::complex<double>;
using Mat = std::array<cplx, 4>;

inline Mat mat_mul(const Mat& a, const Mat& b) {
  return {a[0] * b[0] + a[1] * b[2], a[0] * b[1] + a[1] * b[3], a[2] * b[0] + a[3] * b[2],
          a[2] * b[1] + a[3] * b[3]};
}

inline cplx numeric_trace(const chebvar::bridge::Word& w, cplx s, cplx u) {
  const Mat a{s, 1.0, 0.0, 1.0 / s};
  const Mat ai{1.0 / s, -1.0, 0.0, s};
  const Mat b{s, 0.0, u, 1.0 / s};
  const Mat bi{1.0 / s, 0.0, -u, s};
  Mat m{1.0, 0.0, 0.0, 1.0};
  for (const auto& l : w) {
    const bool is_a = l.gen == chebvar::bridge::Gen::a;
    m = mat_mul(m, is_a ? (l.exp > 0 ? a : ai) : (l.exp > 0 ? b : bi));
  }
  return m[0] + m[3];
}

}  // namespace testing_support
