#pragma once

#include <vector>

#include "chebvar/bipoly.hpp"
#include "chebvar/unipoly.hpp"

namespace chebvar {

/// Second-kind Chebyshev polynomial: S_0 = 1, S_1 = v, S_n = v S_{n-1} - S_{n-2},
/// extended to negative n by S_{-n} = -S_{n-2}.
///
/// Values are memoized in a process-wide table guarded by a shared mutex; the
/// returned reference stays valid for the lifetime of the process.
const UniPoly& cheb_s(int n, Var var = Var::z);

/// First-kind (trace-normalized) Chebyshev polynomial: T_0 = 2, T_1 = v.
/// Throws NegativeIndex for n < 0.
const UniPoly& cheb_t(int n, Var var = Var::z);

/// The n roots 2cos(j*pi/(n+1)), j = 1..n, in descending order.
std::vector<double> cheb_s_roots(int n);

/// The n roots 2cos((2j+1)*pi/(2n+1)), j = 0..n-1, of S_n - S_{n-1}, descending.
std::vector<double> cheb_s_diff_roots(int n);

/// alpha_n = S_n - S_{n-1} + ... + (-1)^n S_0. Computed as the sum and checked
/// against S_{n-[(n+1)/2]} (S_{[(n+1)/2]} - S_{[(n-1)/2]}); a mismatch throws
/// IdentityViolation.
UniPoly alt_sum_alpha(int n, Var var = Var::z);

/// beta_n = -T_{n+1} + 2(T_n - T_{n-1} + ... + (-1)^{n-1} T_1 + (-1)^n), checked
/// against (2 - v) S_n.
UniPoly alt_sum_beta(int n, Var var = Var::z);

/// S_n evaluated at a bivariate argument, built with the three-term recurrence
/// in the argument's ring.
BiPoly cheb_s_at(int n, const BiPoly& arg);

/// f_n = f_0 S_n(t) - f_{-1} S_{n-1}(t): the general solution of
/// f_{n+1} = t f_n - f_{n-1} with the given seeds.
BiPoly recurrence_closed_form(const BiPoly& f0, const BiPoly& f_neg1, int n, const BiPoly& t);

class ChebyshevSeq;
/// Same, reading S_n(t) and S_{n-1}(t) from a precomputed sequence.
BiPoly recurrence_closed_form(const BiPoly& f0, const BiPoly& f_neg1, int n, const ChebyshevSeq& st);

/// S_k(arg) for every -(max+2) <= k <= max, precomputed once. Owned by the
/// caller, so sharing it between threads is read-only.
class ChebyshevSeq {
 public:
  ChebyshevSeq(BiPoly arg, int max_index);

  const BiPoly& arg() const { return arg_; }
  int max_index() const { return static_cast<int>(pos_.size()) - 1; }
  /// Throws std::out_of_range outside the precomputed window.
  const BiPoly& operator[](int n) const;

 private:
  BiPoly arg_;
  std::vector<BiPoly> pos_;  // S_0 .. S_max
  std::vector<BiPoly> neg_;  // neg_[k] = S_{-k}, k = 0 .. max+2 (neg_[0] unused)
};

}  // namespace chebvar
