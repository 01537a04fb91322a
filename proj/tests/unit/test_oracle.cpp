#include <doctest.h>

#include <complex>
#include <random>

#include "chebvar/bridge.hpp"
#include "chebvar/chebyshev.hpp"
#include "chebvar/errors.hpp"
#include "chebvar/oracle.hpp"
#include "chebvar/twist.hpp"
#include "support/frozen.hpp"
#include "support/helpers.hpp"

using namespace chebvar;
using namespace chebvar::oracle;
using testing_support::bi;

namespace {

constexpr VarPair kXZ{Var::x, Var::z};
constexpr VarPair kXU{Var::x, Var::u};

bridge::Word parse_word(const std::string& w) {
  bridge::Word out;
  for (char c : w) {
    const bool inv = c == 'A' || c == 'B';
    out.push_back({(c == 'a' || c == 'A') ? bridge::Gen::a : bridge::Gen::b, inv ? -1 : 1});
  }
  return out;
}

}  // namespace

TEST_CASE("representation matrices") {
  const RepMatrices rep = rep_matrices();
  CHECK(rep.a.det().is_one());
  CHECK(rep.b.det().is_one());
  CHECK((rep.a * rep.a.adjugate()).trace() == LaurentBi::constant(2));
  // tr(a b^-1) = 2 - u
  CHECK((rep.a * rep.b.adjugate()).trace() == LaurentBi::constant(2) - LaurentBi::monomial(1, 0, 1));
  // tr(ab) + tr(ab^-1) = (s + 1/s)^2
  const LaurentBi x = LaurentBi::monomial(1, 1, 0) + LaurentBi::monomial(1, -1, 0);
  CHECK((rep.a * rep.b).trace() + (rep.a * rep.b.adjugate()).trace() == x * x);
}

TEST_CASE("word traces") {
  const LaurentBi x = LaurentBi::monomial(1, 1, 0) + LaurentBi::monomial(1, -1, 0);
  CHECK(word_trace(parse_word("a")) == x);
  CHECK(word_trace(parse_word("aA")) == LaurentBi::constant(2));
  // ab^-1a^-1b: u^2 + (s^2 + s^-2 - 2) u + 2, which is t after y = 2 - u.
  const LaurentBi u = LaurentBi::monomial(1, 0, 1);
  const LaurentBi expected =
      u * u + (LaurentBi::monomial(1, 2, 0) + LaurentBi::monomial(1, -2, 0) - LaurentBi::constant(2)) * u +
      LaurentBi::constant(2);
  CHECK(word_trace(parse_word("aBAb")) == expected);
  CHECK(to_coords(symmetrize(expected), Coords::TraceEven) == twist::t_poly());
  CHECK(word_trace(parse_word("abAB"), DetCheck::Every) == word_trace(parse_word("abAB"), DetCheck::None));
}

TEST_CASE("word traces against numeric matrices") {
  std::mt19937_64 rng(17);
  std::uniform_int_distribution<int> letter(0, 3);
  const char letters[] = {'a', 'A', 'b', 'B'};
  for (int i = 0; i < 40; ++i) {
    std::string w;
    for (int k = 0; k < 1 + i % 12; ++k) w.push_back(letters[letter(rng)]);
    const LaurentBi tr = word_trace(parse_word(w), DetCheck::Every);
    const double s = 1.3;
    const double u = -0.7;
    const auto num = testing_support::numeric_trace(parse_word(w), s, u);
    CHECK(tr.eval(s, u) == doctest::Approx(num.real()).epsilon(1e-9));
    const BiPoly sym = symmetrize(tr);
    CHECK(sym.eval(s + 1 / s, u) == doctest::Approx(num.real()).epsilon(1e-9));
  }
}

TEST_CASE("symmetrize") {
  const LaurentBi s1 = LaurentBi::monomial(1, 1, 0);
  const LaurentBi sm1 = LaurentBi::monomial(1, -1, 0);
  const BiPoly x = BiPoly::variable(kXU, Var::x);
  CHECK(symmetrize(s1 + sm1) == x);
  CHECK(symmetrize(LaurentBi::monomial(1, 2, 0) + LaurentBi::monomial(1, -2, 0)) == x * x - BiPoly::constant(kXU, 2));
  CHECK_THROWS_AS(symmetrize(s1), NotSymmetric);
  CHECK_THROWS_AS(symmetrize(sm1), NotSymmetric);
}

TEST_CASE("defining polynomials against sympy values") {
  CHECK(defining_poly(3, 1, Coords::BridgeXZ).phi == bi(frozen::oracle_3_1, kXZ));
  CHECK(defining_poly(7, 3, Coords::BridgeXZ).phi == bi(frozen::oracle_7_3, kXZ));
  CHECK(defining_poly(9, 5, Coords::BridgeXZ).phi == bi(frozen::oracle_9_5, kXZ));
  CHECK(defining_poly(11, 2, Coords::BridgeXZ).phi == bi(frozen::oracle_11_2, kXZ));
  CHECK(defining_poly(13, 5, Coords::BridgeXZ).phi == bi(frozen::oracle_13_5, kXZ));
}

TEST_CASE("defining polynomial signs") {
  const OracleResult trefoil = defining_poly(3, 1, Coords::BridgeXZ);
  CHECK(sign_match(trefoil.phi, BiPoly::variable(kXZ, Var::z) - BiPoly::constant(kXZ, 1)) == -1);
  CHECK(trefoil.sign == -1);
  const OracleResult fig8 = defining_poly(5, 3, Coords::BridgeXZ);
  CHECK(sign_match(fig8.phi, bridge::phi_closed_p3(5)) == fig8.sign);
  // Figure-eight in trace-even coordinates: the nonabelian factor of L_1.
  constexpr VarPair xy{Var::x, Var::y};
  const BiPoly y = BiPoly::variable(xy, Var::y);
  const BiPoly x2 = BiPoly::monomial(xy, 1, 2, 0);
  const BiPoly factor = twist::t_poly() + y + BiPoly::constant(xy, 1) - x2;
  CHECK(sign_match(defining_poly(5, 3, Coords::TraceEven).phi, factor) != 0);
  CHECK(sign_match(defining_poly(5, 2, Coords::TraceEven).phi, factor) != 0);
}

TEST_CASE("twist knots through the oracle") {
  for (int n = 1; n <= 5; ++n) {
    const auto [pe, qe] = twist::TwistKnot(2 * n).bridge_params();
    CHECK(sign_match(defining_poly(pe, qe, Coords::TraceEven).delta, twist::l_n(n)) != 0);
    const auto [po, qo] = twist::TwistKnot(2 * n - 1).bridge_params();
    CHECK(sign_match(defining_poly(po, qo, Coords::TraceOdd).delta, twist::l_prime_n(n)) != 0);
  }
}

TEST_CASE("abelian slice and divisibility") {
  for (int p = 3; p <= 45; p += 2) {
    for (int q = 1; q < p; ++q) {
      if (std::gcd(p, q) != 1) continue;
      const OracleResult r = defining_poly(p, q, Coords::BridgeXZ, DetCheck::Every);
      const int d = (p - 1) / 2;
      const UniPoly slice = r.phi.coefficient_of(Var::x, 0);
      CHECK((slice == cheb_s(d) - cheb_s(d - 1) || slice == -(cheb_s(d) - cheb_s(d - 1))));
      CHECK(r.delta.degree_in(Var::z) == d + 1);
    }
  }
}

TEST_CASE("skein coordinates are not produced") {
  CHECK_THROWS_AS(defining_poly(5, 3, Coords::Skein), InvalidParams);
  CHECK_THROWS_AS(defining_poly(9, 3, Coords::BridgeXZ), InvalidParams);
}
