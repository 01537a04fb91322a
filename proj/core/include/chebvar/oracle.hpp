#pragma once

#include <array>

#include "chebvar/bipoly.hpp"
#include "chebvar/bridge.hpp"
#include "chebvar/coords.hpp"
#include "chebvar/laurent.hpp"

namespace chebvar::oracle {

/// 2x2 matrix over Z[s, 1/s][u], row-major.
struct SymMat {
  std::array<LaurentBi, 4> e;

  const LaurentBi& operator()(int r, int c) const { return e[static_cast<std::size_t>(2 * r + c)]; }
  LaurentBi det() const;
  LaurentBi trace() const;
  /// Adjugate; the inverse for determinant-one matrices.
  SymMat adjugate() const;
  friend SymMat operator*(const SymMat& a, const SymMat& b);
  friend bool operator==(const SymMat&, const SymMat&) = default;
};

struct RepMatrices {
  SymMat a;  // [[s, 1], [0, 1/s]]
  SymMat b;  // [[s, 0], [u, 1/s]]
};

RepMatrices rep_matrices();

/// When to confirm det = 1 on word products.
enum class DetCheck { Every, Final, None };

/// rho of a word, multiplied left to right. A determinant other than 1 throws
/// IdentityViolation.
SymMat word_matrix(const bridge::Word& w, DetCheck check = DetCheck::Final);
LaurentBi word_trace(const bridge::Word& w, DetCheck check = DetCheck::Final);

/// Rewrites an s <-> 1/s symmetric element in x = s + 1/s via
/// s^k + s^-k = T_k(x). Result lives in (x, u). Throws NotSymmetric.
BiPoly symmetrize(const LaurentBi& lp);

/// Moves a polynomial in (x, u) to the given coordinates:
/// u = z - x^2 + 2 (BridgeXZ), u = 2 - y (TraceEven), u = y - x^2 + 2 (TraceOdd).
/// Skein coordinates are not reachable and throw InvalidParams.
BiPoly to_coords(const BiPoly& xu, Coords coords);

/// Delta = tr(b w a^-1) - tr(w) in (x, u).
BiPoly trace_difference(const bridge::BridgeParams& bp, DetCheck check = DetCheck::Final);

struct OracleResult {
  BiPoly delta;  // Delta in the requested coordinates
  BiPoly phi;    // Delta / u in the requested coordinates, as measured
  /// Sign of the leading coefficient of phi(0, v) in the second variable;
  /// sign * phi is the normalized generator.
  int sign = 1;
};

/// Delta / u with the divisibility by u checked exactly (NotDivisible
/// otherwise), then converted to `coords`.
OracleResult defining_poly(int p, int q, Coords coords, DetCheck check = DetCheck::Final);

/// +1 if a == b, -1 if a == -b, 0 otherwise.
int sign_match(const BiPoly& a, const BiPoly& b);

}  // namespace chebvar::oracle
