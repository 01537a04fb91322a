#include "chebvar/oracle.hpp"

#include <map>
#include <string>

#include "chebvar/chebyshev.hpp"
#include "chebvar/errors.hpp"

namespace chebvar::oracle {
namespace {

constexpr VarPair kXU{Var::x, Var::u};

LaurentBi mono(long c, int es, int eu) { return LaurentBi::monomial(c, es, eu); }

void require_det_one(const SymMat& m) {
  if (!m.det().is_one()) throw IdentityViolation("word product left SL2: det = " + m.det().str());
}

}  // namespace

LaurentBi SymMat::det() const { return (*this)(0, 0) * (*this)(1, 1) - (*this)(0, 1) * (*this)(1, 0); }

LaurentBi SymMat::trace() const { return (*this)(0, 0) + (*this)(1, 1); }

SymMat SymMat::adjugate() const {
  return SymMat{{(*this)(1, 1), -(*this)(0, 1), -(*this)(1, 0), (*this)(0, 0)}};
}

SymMat operator*(const SymMat& a, const SymMat& b) {
  SymMat out;
  for (int r = 0; r < 2; ++r) {
    for (int c = 0; c < 2; ++c) {
      out.e[static_cast<std::size_t>(2 * r + c)] = a(r, 0) * b(0, c) + a(r, 1) * b(1, c);
    }
  }
  return out;
}

RepMatrices rep_matrices() {
  return {SymMat{{mono(1, 1, 0), mono(1, 0, 0), LaurentBi(), mono(1, -1, 0)}},
          SymMat{{mono(1, 1, 0), LaurentBi(), mono(1, 0, 1), mono(1, -1, 0)}}};
}

SymMat word_matrix(const bridge::Word& w, DetCheck check) {
  const RepMatrices rep = rep_matrices();
  const std::array<SymMat, 4> gens{rep.a, rep.a.adjugate(), rep.b, rep.b.adjugate()};
  SymMat m{{LaurentBi::constant(1), LaurentBi(), LaurentBi(), LaurentBi::constant(1)}};
  for (const bridge::Letter& l : w) {
    const std::size_t k = (l.gen == bridge::Gen::a ? 0 : 2) + (l.exp > 0 ? 0 : 1);
    m = m * gens[k];
    if (check == DetCheck::Every) require_det_one(m);
  }
  if (check == DetCheck::Final) require_det_one(m);
  return m;
}

LaurentBi word_trace(const bridge::Word& w, DetCheck check) { return word_matrix(w, check).trace(); }

BiPoly symmetrize(const LaurentBi& lp) {
  std::map<std::pair<int, int>, Integer> by_exp;  // (u, s) -> coeff
  for (const Term& t : lp.terms()) by_exp[{t.exp[1], t.exp[0]}] = t.coeff;

  BiPoly out(kXU);
  for (const auto& [key, c] : by_exp) {
    const auto [eu, es] = key;
    if (es < 0) continue;
    const auto mirror = by_exp.find({eu, -es});
    if (es > 0 && (mirror == by_exp.end() || mirror->second != c)) {
      throw NotSymmetric("coefficient of s^" + std::to_string(es) + " u^" + std::to_string(eu) +
                         " has no matching s^" + std::to_string(-es) + " term");
    }
    const UniPoly tk = es == 0 ? UniPoly::constant(Var::x, c) : cheb_t(es, Var::x) * UniPoly::constant(Var::x, c);
    out += BiPoly::lift(tk, kXU) * BiPoly::monomial(kXU, 1, 0, eu);
  }
  for (const auto& [key, c] : by_exp) {
    if (key.second < 0 && !by_exp.contains({key.first, -key.second})) {
      throw NotSymmetric("coefficient of s^" + std::to_string(key.second) + " u^" +
                         std::to_string(key.first) + " has no matching positive power");
    }
  }
  return out;
}

BiPoly to_coords(const BiPoly& xu, Coords coords) {
  const VarPair vars = coords_vars(coords);
  const BiPoly x2 = BiPoly::monomial(vars, 1, 2, 0);
  const BiPoly v = BiPoly::monomial(vars, 1, 0, 1);
  const BiPoly two = BiPoly::constant(vars, 2);
  const BiPoly in_pair = xu.with_vars({Var::x, Var::u});
  switch (coords) {
    case Coords::BridgeXZ:
    case Coords::TraceOdd:
      return substitute(in_pair, Var::u, v - x2 + two);
    case Coords::TraceEven:
      return substitute(in_pair, Var::u, two - v);
    case Coords::Skein:
      break;
  }
  throw InvalidParams("the oracle does not produce skein coordinates");
}

BiPoly trace_difference(const bridge::BridgeParams& bp, DetCheck check) {
  const bridge::Word w = bridge::bridge_word(bp);
  const SymMat mw = word_matrix(w, check);
  const RepMatrices rep = rep_matrices();
  const SymMat lhs = rep.b * mw * rep.a.adjugate();
  return symmetrize(lhs.trace() - mw.trace());
}

OracleResult defining_poly(int p, int q, Coords coords, DetCheck check) {
  const bridge::BridgeParams bp(p, q);
  const BiPoly delta = trace_difference(bp, check);
  const BiPoly phi = exact_div(delta, BiPoly::variable(kXU, Var::u));

  OracleResult out{to_coords(delta, coords), to_coords(phi, coords), 1};
  const UniPoly slice = out.phi.coefficient_of(Var::x, 0);
  if (!slice.is_zero() && sgn(slice.leading()) < 0) out.sign = -1;
  return out;
}

int sign_match(const BiPoly& a, const BiPoly& b) {
  if (a == b) return 1;
  if (a == -b) return -1;
  return 0;
}

}  // namespace chebvar::oracle
