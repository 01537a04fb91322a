#include "chebvar/bipoly.hpp"

#include <algorithm>
#include <cmath>

#include "chebvar/errors.hpp"
#include "packed_mul.hpp"
#include "render.hpp"

namespace chebvar {
namespace {

std::string pair_name(const VarPair& v) {
  return "(" + std::string(var_name(v[0])) + "," + std::string(var_name(v[1])) + ")";
}

VarPair common_vars(const BiPoly& a, const BiPoly& b) {
  if (a.is_constant()) return b.vars();
  if (b.is_constant() || a.vars() == b.vars()) return a.vars();
  throw VariableMismatch("bivariate operands in " + pair_name(a.vars()) + " and " +
                         pair_name(b.vars()));
}

bool term_before(const Term& a, const Term& b) { return graded_before(a.exp, b.exp); }

std::vector<Term> canonicalize(std::vector<Term> terms) {
  std::sort(terms.begin(), terms.end(), term_before);
  std::vector<Term> out;
  out.reserve(terms.size());
  for (auto& t : terms) {
    if (!out.empty() && out.back().exp == t.exp) {
      out.back().coeff += t.coeff;
      continue;
    }
    if (!out.empty() && sgn(out.back().coeff) == 0) out.pop_back();
    out.push_back(std::move(t));
  }
  if (!out.empty() && sgn(out.back().coeff) == 0) out.pop_back();
  return out;
}

}  // namespace

bool graded_before(const std::array<int, 2>& a, const std::array<int, 2>& b) {
  const int ta = a[0] + a[1];
  const int tb = b[0] + b[1];
  if (ta != tb) return ta > tb;
  return a[0] > b[0];
}

BiPoly::BiPoly(VarPair vars, std::vector<Term> terms) : vars_(vars) {
  for (const auto& t : terms) {
    if (t.exp[0] < 0 || t.exp[1] < 0) throw NegativeIndex("negative exponent in BiPoly term");
  }
  terms_ = canonicalize(std::move(terms));
}

BiPoly BiPoly::constant(VarPair vars, Integer c) { return monomial(vars, std::move(c), 0, 0); }

BiPoly BiPoly::monomial(VarPair vars, Integer c, int e0, int e1) {
  std::vector<Term> t;
  t.push_back({{e0, e1}, std::move(c)});
  return BiPoly(vars, std::move(t));
}

BiPoly BiPoly::variable(VarPair vars, Var v) {
  if (vars[0] == v) return monomial(vars, 1, 1, 0);
  if (vars[1] == v) return monomial(vars, 1, 0, 1);
  throw UnknownVariable(std::string(var_name(v)) + " is not one of " + pair_name(vars));
}

BiPoly BiPoly::lift(const UniPoly& p, VarPair vars) {
  if (p.is_constant()) return constant(vars, p[0]);
  const int s = vars[0] == p.var() ? 0 : vars[1] == p.var() ? 1 : -1;
  if (s < 0) {
    throw UnknownVariable(std::string(var_name(p.var())) + " is not one of " + pair_name(vars));
  }
  std::vector<Term> terms;
  for (int e = p.degree(); e >= 0; --e) {
    if (sgn(p[e]) == 0) continue;
    Term t{{0, 0}, p[e]};
    t.exp[static_cast<std::size_t>(s)] = e;
    terms.push_back(std::move(t));
  }
  BiPoly r(vars);
  r.terms_ = std::move(terms);  // descending single-variable exponents are graded order
  return r;
}

int BiPoly::slot(Var v) const {
  if (vars_[0] == v) return 0;
  if (vars_[1] == v) return 1;
  return -1;
}

bool BiPoly::is_constant() const {
  return terms_.empty() || (terms_.size() == 1 && terms_[0].exp == std::array<int, 2>{0, 0});
}

int BiPoly::degree_in(Var v) const {
  if (terms_.empty()) return UniPoly::kZeroDegree;
  const int s = slot(v);
  if (s < 0) return 0;
  int d = 0;
  for (const auto& t : terms_) d = std::max(d, t.exp[static_cast<std::size_t>(s)]);
  return d;
}

int BiPoly::total_degree() const {
  if (terms_.empty()) return UniPoly::kZeroDegree;
  return terms_.front().exp[0] + terms_.front().exp[1];
}

Integer BiPoly::coeff(int e0, int e1) const {
  const std::array<int, 2> key{e0, e1};
  auto it = std::lower_bound(terms_.begin(), terms_.end(), key,
                             [](const Term& t, const std::array<int, 2>& k) {
                               return graded_before(t.exp, k);
                             });
  if (it != terms_.end() && it->exp == key) return it->coeff;
  return 0;
}

UniPoly BiPoly::coefficient_of(Var v, int k) const {
  const int s = slot(v);
  if (s < 0) throw UnknownVariable(std::string(var_name(v)) + " is not one of " + pair_name(vars_));
  const auto o = static_cast<std::size_t>(1 - s);
  std::vector<Integer> c;
  for (const auto& t : terms_) {
    if (t.exp[static_cast<std::size_t>(s)] != k) continue;
    const auto e = static_cast<std::size_t>(t.exp[o]);
    if (c.size() <= e) c.resize(e + 1);
    c[e] = t.coeff;
  }
  return UniPoly(vars_[o], std::move(c));
}

UniPoly BiPoly::to_uni(Var v) const {
  const int s = slot(v);
  if (s < 0) {
    if (is_constant()) return UniPoly::constant(v, coeff(0, 0));
    throw UnknownVariable(std::string(var_name(v)) + " is not one of " + pair_name(vars_));
  }
  const Var other = vars_[static_cast<std::size_t>(1 - s)];
  if (degree_in(other) > 0) {
    throw VariableMismatch(str() + " depends on " + std::string(var_name(other)));
  }
  return coefficient_of(other, 0);
}

Integer BiPoly::eval(const Integer& a0, const Integer& a1) const {
  Integer acc, p0, p1;
  for (const auto& t : terms_) {
    mpz_pow_ui(p0.get_mpz_t(), a0.get_mpz_t(), static_cast<unsigned long>(t.exp[0]));
    mpz_pow_ui(p1.get_mpz_t(), a1.get_mpz_t(), static_cast<unsigned long>(t.exp[1]));
    acc += t.coeff * p0 * p1;
  }
  return acc;
}

double BiPoly::eval(double a0, double a1) const {
  long double acc = 0;
  for (const auto& t : terms_) {
    acc += static_cast<long double>(t.coeff.get_d()) * std::pow(static_cast<long double>(a0), t.exp[0]) *
           std::pow(static_cast<long double>(a1), t.exp[1]);
  }
  return static_cast<double>(acc);
}

BiPoly BiPoly::with_vars(VarPair vars) const {
  BiPoly r = *this;
  r.vars_ = vars;
  return r;
}

BiPoly BiPoly::operator-() const {
  BiPoly r = *this;
  for (auto& t : r.terms_) t.coeff = -t.coeff;
  return r;
}

void BiPoly::merge(const BiPoly& rhs, int sign) {
  if (&rhs == this) {
    const BiPoly copy = rhs;
    merge(copy, sign);
    return;
  }
  vars_ = common_vars(*this, rhs);
  std::vector<Term> out;
  out.reserve(terms_.size() + rhs.terms_.size());
  auto a = terms_.begin();
  auto b = rhs.terms_.begin();
  while (a != terms_.end() || b != rhs.terms_.end()) {
    if (b == rhs.terms_.end() || (a != terms_.end() && term_before(*a, *b))) {
      out.push_back(std::move(*a++));
    } else if (a == terms_.end() || term_before(*b, *a)) {
      out.push_back({b->exp, sign > 0 ? b->coeff : Integer(-b->coeff)});
      ++b;
    } else {
      if (sign > 0) {
        a->coeff += b->coeff;
      } else {
        a->coeff -= b->coeff;
      }
      if (sgn(a->coeff) != 0) out.push_back(std::move(*a));
      ++a;
      ++b;
    }
  }
  terms_ = std::move(out);
}

BiPoly& BiPoly::operator+=(const BiPoly& rhs) {
  merge(rhs, +1);
  return *this;
}

BiPoly& BiPoly::operator-=(const BiPoly& rhs) {
  merge(rhs, -1);
  return *this;
}

BiPoly operator*(const BiPoly& lhs, const BiPoly& rhs) {
  BiPoly r(common_vars(lhs, rhs));
  auto prod = detail::multiply_terms(lhs.terms_, rhs.terms_);
  std::sort(prod.begin(), prod.end(), term_before);
  r.terms_ = std::move(prod);
  return r;
}

BiPoly& BiPoly::operator*=(const BiPoly& rhs) {
  *this = *this * rhs;
  return *this;
}

BiPoly& BiPoly::operator*=(const Integer& c) {
  if (sgn(c) == 0) {
    terms_.clear();
    return *this;
  }
  for (auto& t : terms_) t.coeff *= c;
  return *this;
}

bool operator==(const BiPoly& lhs, const BiPoly& rhs) {
  if (lhs.terms_ != rhs.terms_) return false;
  return lhs.is_constant() || lhs.vars_ == rhs.vars_;
}

std::string BiPoly::str() const {
  if (terms_.empty()) return "0";
  std::string out;
  for (const auto& t : terms_) {
    std::string m = detail::power(var_name(vars_[0]), t.exp[0]);
    const std::string m1 = detail::power(var_name(vars_[1]), t.exp[1]);
    if (!m.empty() && !m1.empty()) m += '*';
    m += m1;
    detail::append_term(out, t.coeff, m);
  }
  return out;
}

BiPoly exact_div(const BiPoly& p, const BiPoly& d) {
  if (d.is_zero()) throw DivisionByZero("exact_div by the zero polynomial");
  const VarPair vars = common_vars(p, d);
  if (p.is_zero()) return BiPoly(vars);
  auto fail = [&]() { return NotDivisible(p.str() + " is not divisible by " + d.str()); };

  if (d.is_constant()) {
    const Integer& c = d.terms().front().coeff;
    std::vector<Term> q;
    for (const auto& t : p.terms()) {
      if (!mpz_divisible_p(t.coeff.get_mpz_t(), c.get_mpz_t())) throw fail();
      Term qt{t.exp, 0};
      mpz_divexact(qt.coeff.get_mpz_t(), t.coeff.get_mpz_t(), c.get_mpz_t());
      q.push_back(std::move(qt));
    }
    return BiPoly(vars, std::move(q));
  }

  const BiPoly pp = p.with_vars(vars);
  const BiPoly dd = d.with_vars(vars);
  const int rows = pp.degree_in(vars[0]) + 1;
  const int cols = pp.degree_in(vars[1]) + 1;
  const int qmax0 = rows - 1 - dd.degree_in(vars[0]);
  const int qmax1 = cols - 1 - dd.degree_in(vars[1]);
  if (qmax0 < 0 || qmax1 < 0) throw fail();

  // Every quotient term times d stays inside p's degree box when the
  // division is exact, so a dense remainder over that box suffices. Terms of
  // d trail its leading term, so subtractions only touch monomials the scan
  // has not reached yet.
  std::vector<Integer> rem(static_cast<std::size_t>(rows) * static_cast<std::size_t>(cols));
  auto at = [cols](int e0, int e1) {
    return static_cast<std::size_t>(e0) * static_cast<std::size_t>(cols) + static_cast<std::size_t>(e1);
  };
  for (const auto& t : pp.terms()) rem[at(t.exp[0], t.exp[1])] = t.coeff;

  const Term& lead = dd.terms().front();
  std::vector<Term> q;
  Integer qc;
  for (int total = rows + cols - 2; total >= 0; --total) {
    for (int e0 = std::min(total, rows - 1); e0 >= 0 && total - e0 < cols; --e0) {
      const int e1 = total - e0;
      Integer& r = rem[at(e0, e1)];
      if (sgn(r) == 0) continue;
      const int q0 = e0 - lead.exp[0];
      const int q1 = e1 - lead.exp[1];
      if (q0 < 0 || q1 < 0 || q0 > qmax0 || q1 > qmax1) throw fail();
      if (!mpz_divisible_p(r.get_mpz_t(), lead.coeff.get_mpz_t())) throw fail();
      mpz_divexact(qc.get_mpz_t(), r.get_mpz_t(), lead.coeff.get_mpz_t());
      for (const auto& dt : dd.terms()) {
        mpz_submul(rem[at(q0 + dt.exp[0], q1 + dt.exp[1])].get_mpz_t(), qc.get_mpz_t(),
                   dt.coeff.get_mpz_t());
      }
      q.push_back({{q0, q1}, qc});
    }
  }
  return BiPoly(vars, std::move(q));
}

BiPoly substitute(const BiPoly& p, Var which, const BiPoly& value) {
  const int s = p.slot(which);
  if (s < 0) {
    throw UnknownVariable(std::string(var_name(which)) + " is not one of " + pair_name(p.vars()));
  }
  const auto si = static_cast<std::size_t>(s);
  const auto oi = static_cast<std::size_t>(1 - s);
  const Var other = p.vars()[oi];
  const VarPair out = value.is_constant() ? p.vars() : value.vars();
  const int out_slot = out[0] == other ? 0 : out[1] == other ? 1 : -1;
  if (out_slot < 0 && p.degree_in(other) > 0) {
    throw VariableMismatch("substituted value in " + pair_name(out) + " cannot carry " +
                           std::string(var_name(other)));
  }

  // p = sum_k c_k(other) * which^k, evaluated by Horner in `value`.
  const int top = p.degree_in(which);
  if (top < 0) return BiPoly(out);
  std::vector<std::vector<Term>> slices(static_cast<std::size_t>(top) + 1);
  for (const auto& t : p.terms()) {
    Term lifted{{0, 0}, t.coeff};
    if (out_slot >= 0) lifted.exp[static_cast<std::size_t>(out_slot)] = t.exp[oi];
    slices[static_cast<std::size_t>(t.exp[si])].push_back(std::move(lifted));
  }
  BiPoly acc(out, std::move(slices.back()));
  for (int k = top - 1; k >= 0; --k) {
    acc = acc * value;
    acc += BiPoly(out, std::move(slices[static_cast<std::size_t>(k)]));
  }
  return acc;
}

BiPoly compose(const UniPoly& f, const BiPoly& value) {
  BiPoly acc(value.vars());
  for (int e = f.degree(); e >= 0; --e) {
    acc = acc * value;
    acc += BiPoly::constant(value.vars(), f[e]);
  }
  return acc;
}

}  // namespace chebvar
