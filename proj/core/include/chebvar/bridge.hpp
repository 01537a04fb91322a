#pragma once

#include <string>
#include <vector>

#include "chebvar/bipoly.hpp"
#include "chebvar/coords.hpp"
#include "chebvar/irreducibility.hpp"
#include "chebvar/unipoly.hpp"

namespace chebvar::bridge {

/// Validated parameters of the 2-bridge knot b(p, q): p odd, 0 < q < p,
/// gcd(p, q) = 1. Any such q is accepted, odd or even; an even q is
/// presented through its mirror b(p, p - q).
class BridgeParams {
 public:
  /// Throws InvalidParams when the constraints fail.
  BridgeParams(int p, int q);

  int p() const { return p_; }
  int q() const { return q_; }
  /// d = (p - 1) / 2.
  int d() const { return (p_ - 1) / 2; }
  /// l = floor(p / 3), the sign-change index when q = 3.
  int ell() const { return p_ / 3; }
  /// The odd parameter the word is built from: q, or p - q when q is even.
  int word_q() const { return q_ % 2 == 1 ? q_ : p_ - q_; }

 private:
  int p_;
  int q_;
};

/// eps_j = (-1)^floor(j q / p) for j = 1 .. p-1 (index 0 holds eps_1).
/// Satisfies eps_{p-j} = (-1)^(q-1) eps_j, so it is palindromic only for odd q.
std::vector<int> epsilon_seq(int p, int q);

enum class Gen { a, b };

struct Letter {
  Gen gen;
  int exp;  // +1 or -1
  friend bool operator==(const Letter&, const Letter&) = default;
};

using Word = std::vector<Letter>;

/// w = a^eps_1 b^eps_2 ... a^eps_{p-2} b^eps_{p-1}, with eps taken for
/// word_q(). Then <a, b | w a = b w> presents the knot group.
Word bridge_word(const BridgeParams& bp);

/// "a", "B" (= b^-1), ... concatenated.
std::string word_str(const Word& w);

/// Validates p for the q = 3 family: odd, p > 3, gcd(p, 3) = 1.
BridgeParams params_p3(int p);

/// Phi_w(x, z) for b(p, 3) by the trace recursion over the subwords w_j,
/// descending from the seeds tr w_{d+1} = 2, tr w_d = z, x tr u_d = x tr v_d = x^2,
/// followed by the alternating sum tr w_1 - tr w_2 + ... + (-1)^d.
BiPoly phi_recursive_p3(int p);

/// S_d - S_{d-1} + x^2 (2-z) S_{d-l-1} S_{l-1-[l/2]} (S_{[l/2]} - S_{[l/2]-1}).
BiPoly phi_closed_p3(int p);

struct PQR {
  UniPoly P;
  UniPoly Q;
  UniPoly R;
};

/// P = S_d - S_{d-1}, Q = alpha_{l-1}, R = beta_{d-l-1}. Checks P = Phi(0, z)
/// against the recursion and Phi = P + x^2 Q R against the closed form; throws
/// IdentityViolation otherwise.
PQR pqr_p3(int p);

/// Irreducibility certificate for Phi_w of b(p, 3).
struct BridgeCertificate {
  int p = 0;
  int d = 0;
  int ell = 0;
  PQR pqr;
  IrreducibilityReport report;  // f = P, g = Q R
  /// gcd(2d+1, 2[l/2]+1), required to be 1.
  int gcd_index = 0;
  /// gcd(P, S_{[l/2]} - S_{[l/2]-1}), gcd(P, S_{l-1-[l/2]}), gcd(P, S_{d-l-1}),
  /// gcd(P, 2-z), each required to be 1.
  std::vector<UniPoly> factor_gcds;

  bool passed() const;
};

/// Builds the certificate; a failed arithmetic or root-disjointness check
/// shows up in passed(), not as an exception.
BridgeCertificate check_phi_irreducible_p3(int p);

/// Rewrites a polynomial in (x, z) with z = tr(ab): unchanged for BridgeXZ,
/// z -> y for TraceOdd, z -> x^2 - y for TraceEven. Skein throws InvalidParams.
BiPoly from_bridge_xz(const BiPoly& xz, Coords coords);

/// Minimality record: which certificate was produced, and the hypotheses
/// the conclusion rests on without being checked here.
struct MinimalityReport {
  std::string knot;
  std::string certificate;
  Verdict verdict = Verdict::CriterionInapplicable;
  bool minimal = false;
  std::vector<std::string> assumptions;
};

/// Twist knot K_m. Throws OutOfScope for m = 0 (unknot) and m = 1 (trefoil,
/// not hyperbolic), InvalidParams for m < 0.
MinimalityReport minimality_twist(int m);
/// b(p, 3), p as in params_p3.
MinimalityReport minimality_bridge3(int p);

}  // namespace chebvar::bridge
