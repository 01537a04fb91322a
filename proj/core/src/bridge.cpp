#include "chebvar/bridge.hpp"

#include <numeric>
#include <string>

#include "chebvar/chebyshev.hpp"
#include "chebvar/errors.hpp"
#include "chebvar/twist.hpp"

namespace chebvar::bridge {
namespace {

constexpr VarPair kXZ{Var::x, Var::z};

BiPoly lift(const UniPoly& p) { return BiPoly::lift(p, kXZ); }

}  // namespace

BridgeParams::BridgeParams(int p, int q) : p_(p), q_(q) {
  const std::string tag = "b(" + std::to_string(p) + "," + std::to_string(q) + ")";
  if (p < 3 || p % 2 == 0) throw InvalidParams(tag + ": p must be odd and at least 3");
  if (q <= 0 || q >= p) throw InvalidParams(tag + ": q must satisfy 0 < q < p");
  if (std::gcd(p, q) != 1) throw InvalidParams(tag + ": gcd(p, q) != 1");
}

std::vector<int> epsilon_seq(int p, int q) {
  const BridgeParams bp(p, q);
  std::vector<int> eps;
  eps.reserve(static_cast<std::size_t>(p - 1));
  for (long j = 1; j < p; ++j) eps.push_back((j * q / p) % 2 == 0 ? 1 : -1);
  return eps;
}

Word bridge_word(const BridgeParams& bp) {
  const auto eps = epsilon_seq(bp.p(), bp.word_q());
  Word w;
  w.reserve(eps.size());
  for (std::size_t i = 0; i < eps.size(); ++i) {
    w.push_back({i % 2 == 0 ? Gen::a : Gen::b, eps[i]});
  }
  return w;
}

std::string word_str(const Word& w) {
  std::string out;
  for (const Letter& l : w) {
    const char c = l.gen == Gen::a ? 'a' : 'b';
    out.push_back(l.exp > 0 ? c : static_cast<char>(c - 'a' + 'A'));
  }
  return out;
}

BridgeParams params_p3(int p) {
  if (p <= 3) throw InvalidParams("b(" + std::to_string(p) + ",3): p must exceed 3");
  return BridgeParams(p, 3);
}

BiPoly phi_recursive_p3(int p) {
  const BridgeParams bp = params_p3(p);
  const int d = bp.d();
  const auto eps = epsilon_seq(p, 3);
  auto e = [&](int j) { return eps[static_cast<std::size_t>(j - 1)]; };

  const BiPoly z = BiPoly::variable(kXZ, Var::z);
  const BiPoly x2 = BiPoly::monomial(kXZ, 1, 2, 0);

  // tr w_j for j = 1 .. d+1; xu/xv hold x tr u_{j}, x tr v_{j} for the current j.
  std::vector<BiPoly> tw(static_cast<std::size_t>(d) + 2, BiPoly(kXZ));
  tw[static_cast<std::size_t>(d) + 1] = BiPoly::constant(kXZ, 2);
  tw[static_cast<std::size_t>(d)] = z;
  BiPoly xu = x2;
  BiPoly xv = x2;
  bool mixed = false;

  for (int j = d - 1; j >= 1; --j) {
    const auto k = static_cast<std::size_t>(j);
    if (e(j) == e(j + 1)) {
      tw[k] = z * tw[k + 1] - tw[k + 2];
      if (!mixed) {
        xu = x2 * tw[k + 1] - xu;
        xv = x2 * tw[k + 1] - xv;
      }
    } else {
      if (mixed) throw InvalidParams("the trace recursion handles a single sign change only");
      tw[k] = (z - x2) * tw[k + 1] - tw[k + 2] + xu + xv;
      mixed = true;
    }
  }

  BiPoly phi = BiPoly::constant(kXZ, d % 2 == 0 ? 1 : -1);
  for (int j = 1; j <= d; ++j) {
    const BiPoly& term = tw[static_cast<std::size_t>(j)];
    if (j % 2 == 1) {
      phi += term;
    } else {
      phi -= term;
    }
  }
  return phi;
}

BiPoly phi_closed_p3(int p) {
  const BridgeParams bp = params_p3(p);
  const int d = bp.d();
  const int l = bp.ell();
  const int h = l / 2;
  const UniPoly two_minus_z(Var::z, {2, -1});
  const UniPoly g = two_minus_z * cheb_s(d - l - 1) * cheb_s(l - 1 - h) * (cheb_s(h) - cheb_s(h - 1));
  return lift(cheb_s(d) - cheb_s(d - 1)) + BiPoly::monomial(kXZ, 1, 2, 0) * lift(g);
}

PQR pqr_p3(int p) {
  const BridgeParams bp = params_p3(p);
  const int d = bp.d();
  const int l = bp.ell();
  PQR out{cheb_s(d) - cheb_s(d - 1), alt_sum_alpha(l - 1), alt_sum_beta(d - l - 1)};

  const UniPoly at_zero = phi_recursive_p3(p).coefficient_of(Var::x, 0);
  if (!(at_zero == out.P)) {
    throw IdentityViolation("b(" + std::to_string(p) + ",3): Phi(0,z) != S_d - S_{d-1}");
  }
  const BiPoly split = lift(out.P) + BiPoly::monomial(kXZ, 1, 2, 0) * lift(out.Q * out.R);
  if (!(split == phi_closed_p3(p))) {
    throw IdentityViolation("b(" + std::to_string(p) + ",3): Phi != P + x^2 Q R");
  }
  return out;
}

bool BridgeCertificate::passed() const {
  if (!report.irreducible() || gcd_index != 1) return false;
  for (const UniPoly& g : factor_gcds) {
    if (!g.is_one()) return false;
  }
  return true;
}

BridgeCertificate check_phi_irreducible_p3(int p) {
  const BridgeParams bp = params_p3(p);
  BridgeCertificate cert;
  cert.p = p;
  cert.d = bp.d();
  cert.ell = bp.ell();
  cert.pqr = pqr_p3(p);
  cert.report = irreducible_by_parity_gcd(cert.pqr.P, cert.pqr.Q * cert.pqr.R);

  const int h = cert.ell / 2;
  cert.gcd_index = std::gcd(2 * cert.d + 1, 2 * h + 1);
  const UniPoly& P = cert.pqr.P;
  cert.factor_gcds = {
      uni_gcd(P, cheb_s(h) - cheb_s(h - 1)),
      uni_gcd(P, cheb_s(cert.ell - 1 - h)),
      uni_gcd(P, cheb_s(cert.d - cert.ell - 1)),
      uni_gcd(P, UniPoly(Var::z, {2, -1})),
  };
  return cert;
}

BiPoly from_bridge_xz(const BiPoly& xz, Coords coords) {
  const BiPoly in_pair = xz.with_vars(kXZ);
  switch (coords) {
    case Coords::BridgeXZ:
      return in_pair;
    case Coords::TraceOdd:
      return in_pair.with_vars({Var::x, Var::y});
    case Coords::TraceEven: {
      constexpr VarPair xy{Var::x, Var::y};
      return substitute(in_pair, Var::z, BiPoly::monomial(xy, 1, 2, 0) - BiPoly::variable(xy, Var::y));
    }
    case Coords::Skein:
      break;
  }
  throw InvalidParams("Phi_w is not available in skein coordinates");
}

namespace {

const char* kHyperbolic = "the knot is hyperbolic (cited, not verified)";

}  // namespace

MinimalityReport minimality_twist(int m) {
  const twist::TwistKnot knot(m);
  if (m == 0) throw OutOfScope("K_0 is the unknot; the minimality criterion does not apply");
  if (m == 1) {
    throw OutOfScope("K_1 is the trefoil knot (i.e., non-hyperbolic); the minimality criterion does not apply");
  }
  const IrreducibilityReport rep = twist::check_r_tilde_irreducible(m);
  MinimalityReport out;
  out.knot = "K_" + std::to_string(m);
  out.certificate = "R~_m = f(y) + x^2 g(y) with f = S_m - S_{m-1}, g = (f - 1)/(y - 2)";
  out.verdict = rep.verdict;
  out.minimal = rep.irreducible();
  out.assumptions = {kHyperbolic};
  return out;
}

MinimalityReport minimality_bridge3(int p) {
  const BridgeCertificate cert = check_phi_irreducible_p3(p);
  MinimalityReport out;
  out.knot = "b(" + std::to_string(p) + ",3)";
  out.certificate = "Phi_w = P(z) + x^2 Q(z) R(z) with gcd(P, QR) = 1 and odd degree gap";
  out.verdict = cert.report.verdict;
  out.minimal = cert.passed();
  out.assumptions = {kHyperbolic};
  return out;
}

}  // namespace chebvar::bridge
