#include "chebvar/laurent.hpp"

#include <algorithm>
#include <cmath>

#include "packed_mul.hpp"
#include "render.hpp"

namespace chebvar {
namespace {

bool laurent_before(const Term& a, const Term& b) {
  if (a.exp[1] != b.exp[1]) return a.exp[1] > b.exp[1];
  return a.exp[0] > b.exp[0];
}

}  // namespace

LaurentBi::LaurentBi(std::vector<Term> terms) {
  std::sort(terms.begin(), terms.end(), laurent_before);
  for (auto& t : terms) {
    if (!terms_.empty() && terms_.back().exp == t.exp) {
      terms_.back().coeff += t.coeff;
      continue;
    }
    if (!terms_.empty() && sgn(terms_.back().coeff) == 0) terms_.pop_back();
    terms_.push_back(std::move(t));
  }
  if (!terms_.empty() && sgn(terms_.back().coeff) == 0) terms_.pop_back();
}

LaurentBi LaurentBi::constant(Integer c) { return monomial(std::move(c), 0, 0); }

LaurentBi LaurentBi::monomial(Integer c, int s_exp, int u_exp) {
  std::vector<Term> t;
  t.push_back({{s_exp, u_exp}, std::move(c)});
  return LaurentBi(std::move(t));
}

bool LaurentBi::is_one() const {
  return terms_.size() == 1 && terms_[0].exp == std::array<int, 2>{0, 0} && terms_[0].coeff == 1;
}

Integer LaurentBi::coeff(int es, int eu) const {
  for (const auto& t : terms_) {
    if (t.exp[0] == es && t.exp[1] == eu) return t.coeff;
  }
  return 0;
}

int LaurentBi::u_degree() const { return terms_.empty() ? -1 : terms_.front().exp[1]; }

LaurentBi LaurentBi::operator-() const {
  LaurentBi r = *this;
  for (auto& t : r.terms_) t.coeff = -t.coeff;
  return r;
}

void LaurentBi::merge(const LaurentBi& rhs, int sign) {
  if (&rhs == this) {
    const LaurentBi copy = rhs;
    merge(copy, sign);
    return;
  }
  std::vector<Term> out;
  out.reserve(terms_.size() + rhs.terms_.size());
  auto a = terms_.begin();
  auto b = rhs.terms_.begin();
  while (a != terms_.end() || b != rhs.terms_.end()) {
    if (b == rhs.terms_.end() || (a != terms_.end() && laurent_before(*a, *b))) {
      out.push_back(std::move(*a++));
    } else if (a == terms_.end() || laurent_before(*b, *a)) {
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

LaurentBi& LaurentBi::operator+=(const LaurentBi& rhs) {
  merge(rhs, +1);
  return *this;
}

LaurentBi& LaurentBi::operator-=(const LaurentBi& rhs) {
  merge(rhs, -1);
  return *this;
}

LaurentBi operator*(const LaurentBi& lhs, const LaurentBi& rhs) {
  auto prod = detail::multiply_terms(lhs.terms_, rhs.terms_);
  std::sort(prod.begin(), prod.end(), laurent_before);
  LaurentBi r;
  r.terms_ = std::move(prod);
  return r;
}

double LaurentBi::eval(double s, double u) const {
  long double acc = 0;
  for (const auto& t : terms_) {
    acc += static_cast<long double>(t.coeff.get_d()) * std::pow(static_cast<long double>(s), t.exp[0]) *
           std::pow(static_cast<long double>(u), t.exp[1]);
  }
  return static_cast<double>(acc);
}

std::string LaurentBi::str() const {
  if (terms_.empty()) return "0";
  std::string out;
  for (const auto& t : terms_) {
    std::string m;
    if (t.exp[0] != 0) m = t.exp[0] == 1 ? "s" : "s^" + std::to_string(t.exp[0]);
    const std::string mu = detail::power("u", t.exp[1]);
    if (!m.empty() && !mu.empty()) m += '*';
    m += mu;
    detail::append_term(out, t.coeff, m);
  }
  return out;
}

}  // namespace chebvar
