#include "chebvar/unipoly.hpp"

#include <algorithm>
#include <cmath>

#include "chebvar/errors.hpp"
#include "packed_mul.hpp"
#include "render.hpp"

namespace chebvar {
namespace {

const Integer& zero_integer() {
  static const Integer zero;
  return zero;
}

Var common_var(const UniPoly& a, const UniPoly& b) {
  if (a.is_constant()) return b.var();
  if (b.is_constant() || a.var() == b.var()) return a.var();
  throw VariableMismatch("univariate operands in " + std::string(var_name(a.var())) + " and " +
                         std::string(var_name(b.var())));
}

}  // namespace

UniPoly::UniPoly(Var var, std::vector<Integer> coeffs) : var_(var), coeffs_(std::move(coeffs)) {
  trim();
}

UniPoly::UniPoly(Var var, std::initializer_list<long> coeffs) : var_(var) {
  coeffs_.reserve(coeffs.size());
  for (long c : coeffs) coeffs_.emplace_back(c);
  trim();
}

UniPoly UniPoly::constant(Var var, Integer c) {
  std::vector<Integer> v;
  v.push_back(std::move(c));
  return UniPoly(var, std::move(v));
}

UniPoly UniPoly::monomial(Var var, Integer c, int exp) {
  if (exp < 0) throw NegativeIndex("negative exponent in monomial");
  std::vector<Integer> v(static_cast<std::size_t>(exp) + 1);
  v.back() = std::move(c);
  return UniPoly(var, std::move(v));
}

void UniPoly::trim() {
  while (!coeffs_.empty() && sgn(coeffs_.back()) == 0) coeffs_.pop_back();
}

const Integer& UniPoly::operator[](int exp) const {
  if (exp < 0 || exp > degree()) return zero_integer();
  return coeffs_[static_cast<std::size_t>(exp)];
}

const Integer& UniPoly::leading() const {
  return coeffs_.empty() ? zero_integer() : coeffs_.back();
}

Integer UniPoly::content() const {
  Integer g;
  for (const auto& c : coeffs_) {
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), c.get_mpz_t());
    if (g == 1) break;
  }
  return g;
}

UniPoly UniPoly::primitive_part() const {
  if (is_zero()) return *this;
  Integer g = content();
  if (sgn(leading()) < 0) g = -g;
  UniPoly r(var_);
  r.coeffs_.resize(coeffs_.size());
  for (std::size_t i = 0; i < coeffs_.size(); ++i) {
    mpz_divexact(r.coeffs_[i].get_mpz_t(), coeffs_[i].get_mpz_t(), g.get_mpz_t());
  }
  return r;
}

UniPoly UniPoly::with_var(Var var) const {
  UniPoly r = *this;
  r.var_ = var;
  return r;
}

Integer UniPoly::eval(const Integer& at) const {
  Integer acc;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) {
    acc *= at;
    acc += *it;
  }
  return acc;
}

double UniPoly::eval(double at) const {
  long double acc = 0;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) {
    acc = acc * at + static_cast<long double>(it->get_d());
  }
  return static_cast<double>(acc);
}

double UniPoly::abs_coeff_sum() const {
  double s = 0;
  for (const auto& c : coeffs_) s += std::fabs(c.get_d());
  return s;
}

UniPoly UniPoly::operator-() const {
  UniPoly r = *this;
  for (auto& c : r.coeffs_) c = -c;
  return r;
}

void UniPoly::add_scaled(const UniPoly& rhs, int sign) {
  var_ = common_var(*this, rhs);
  if (rhs.coeffs_.size() > coeffs_.size()) coeffs_.resize(rhs.coeffs_.size());
  for (std::size_t i = 0; i < rhs.coeffs_.size(); ++i) {
    if (sign > 0) {
      coeffs_[i] += rhs.coeffs_[i];
    } else {
      coeffs_[i] -= rhs.coeffs_[i];
    }
  }
  trim();
}

UniPoly& UniPoly::operator+=(const UniPoly& rhs) {
  add_scaled(rhs, +1);
  return *this;
}

UniPoly& UniPoly::operator-=(const UniPoly& rhs) {
  add_scaled(rhs, -1);
  return *this;
}

UniPoly operator*(const UniPoly& lhs, const UniPoly& rhs) {
  const Var v = common_var(lhs, rhs);
  return UniPoly(v, detail::multiply_dense(lhs.coeffs_, rhs.coeffs_));
}

UniPoly& UniPoly::operator*=(const UniPoly& rhs) {
  *this = *this * rhs;
  return *this;
}

UniPoly& UniPoly::operator*=(const Integer& c) {
  if (sgn(c) == 0) {
    coeffs_.clear();
    return *this;
  }
  for (auto& k : coeffs_) k *= c;
  return *this;
}

bool operator==(const UniPoly& lhs, const UniPoly& rhs) {
  if (lhs.coeffs_ != rhs.coeffs_) return false;
  return lhs.is_constant() || lhs.var_ == rhs.var_;
}

std::string UniPoly::str() const {
  if (is_zero()) return "0";
  std::string out;
  for (int e = degree(); e >= 0; --e) {
    const Integer& c = coeffs_[static_cast<std::size_t>(e)];
    if (sgn(c) == 0) continue;
    detail::append_term(out, c, detail::power(var_name(var_), e));
  }
  return out;
}

UniPoly exact_div(const UniPoly& p, const UniPoly& d) {
  if (d.is_zero()) throw DivisionByZero("exact_div by the zero polynomial");
  if (p.is_zero()) return UniPoly(p.var());
  const Var v = p.is_constant() ? d.var() : p.var();
  if (!p.is_constant() && !d.is_constant() && p.var() != d.var()) {
    throw VariableMismatch("exact_div operands in different variables");
  }
  if (p.degree() < d.degree()) throw NotDivisible(p.str() + " is not divisible by " + d.str());

  std::vector<Integer> rem = p.coeffs();
  const auto& dc = d.coeffs();
  const int dd = d.degree();
  const Integer& lead = d.leading();
  std::vector<Integer> q(static_cast<std::size_t>(p.degree() - dd + 1));
  Integer qc;
  for (int k = p.degree() - dd; k >= 0; --k) {
    Integer& top = rem[static_cast<std::size_t>(k + dd)];
    if (sgn(top) == 0) continue;
    if (!mpz_divisible_p(top.get_mpz_t(), lead.get_mpz_t())) {
      throw NotDivisible(p.str() + " is not divisible by " + d.str());
    }
    mpz_divexact(qc.get_mpz_t(), top.get_mpz_t(), lead.get_mpz_t());
    for (int i = 0; i <= dd; ++i) {
      const auto& di = dc[static_cast<std::size_t>(i)];
      if (sgn(di) == 0) continue;
      mpz_submul(rem[static_cast<std::size_t>(k + i)].get_mpz_t(), qc.get_mpz_t(), di.get_mpz_t());
    }
    q[static_cast<std::size_t>(k)] = qc;
  }
  for (int i = 0; i < dd; ++i) {
    if (sgn(rem[static_cast<std::size_t>(i)]) != 0) {
      throw NotDivisible(p.str() + " is not divisible by " + d.str());
    }
  }
  return UniPoly(v, std::move(q));
}

UniPoly pseudo_rem(const UniPoly& p, const UniPoly& d) {
  if (d.is_zero()) throw DivisionByZero("pseudo_rem by the zero polynomial");
  const Var v = p.is_constant() ? d.var() : p.var();
  if (p.degree() < d.degree()) return p;

  // Row operations r <- lc(d) * r - top * x^k * d, one per degree drop; the
  // missing lc(d) factors for skipped degrees are restored at the end.
  std::vector<Integer> r = p.coeffs();
  const auto& dc = d.coeffs();
  const int dd = d.degree();
  const Integer& lead = d.leading();
  for (int top = p.degree(); top >= dd; --top) {
    Integer t = r[static_cast<std::size_t>(top)];
    if (lead != 1) {
      for (int i = 0; i < top; ++i) r[static_cast<std::size_t>(i)] *= lead;
    }
    r[static_cast<std::size_t>(top)] = 0;
    if (sgn(t) != 0) {
      const int shift = top - dd;
      for (int i = 0; i < dd; ++i) {
        mpz_submul(r[static_cast<std::size_t>(shift + i)].get_mpz_t(), t.get_mpz_t(),
                   dc[static_cast<std::size_t>(i)].get_mpz_t());
      }
    }
  }
  r.resize(static_cast<std::size_t>(dd));
  return UniPoly(v, std::move(r));
}

UniPoly uni_gcd(const UniPoly& p, const UniPoly& q) {
  if (p.is_zero()) return q.primitive_part();
  if (q.is_zero()) return p.primitive_part();
  const Var v = p.is_constant() ? q.var() : p.var();
  if (p.is_constant() || q.is_constant()) return UniPoly::constant(v, 1);

  // Primitive pseudo-remainder sequence; content stripped at every step.
  UniPoly a = p.primitive_part();
  UniPoly b = q.primitive_part();
  if (a.degree() < b.degree()) std::swap(a, b);
  while (!b.is_zero()) {
    if (b.is_constant()) return UniPoly::constant(v, 1);
    UniPoly r = pseudo_rem(a, b);
    a = std::move(b);
    b = r.primitive_part();
  }
  return a.primitive_part().with_var(v);
}

}  // namespace chebvar
