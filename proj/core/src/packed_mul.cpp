#include "packed_mul.hpp"

#include <algorithm>
#include <bit>
#include <cstring>

namespace chebvar::detail {
namespace {

// Below this length on the shorter side the schoolbook loop wins.
constexpr std::size_t kKroneckerThreshold = 24;

std::size_t max_bits(std::span<const Integer> v) {
  std::size_t bits = 0;
  for (const auto& c : v) {
    if (sgn(c) != 0) bits = std::max(bits, mpz_sizeinbase(c.get_mpz_t(), 2));
  }
  return bits;
}

// Writes sum_i v[i] * 2^(i * limbs * GMP_NUMB_BITS) into an mpz. Positive and
// negative coefficients are packed separately and subtracted once.
Integer pack(std::span<const Integer> v, std::size_t limbs) {
  const std::size_t n = v.size() * limbs;
  Integer pos;
  Integer neg;
  mp_limb_t* pp = mpz_limbs_write(pos.get_mpz_t(), static_cast<mp_size_t>(n));
  mp_limb_t* np = mpz_limbs_write(neg.get_mpz_t(), static_cast<mp_size_t>(n));
  std::fill_n(pp, n, mp_limb_t{0});
  std::fill_n(np, n, mp_limb_t{0});
  for (std::size_t i = 0; i < v.size(); ++i) {
    const int s = sgn(v[i]);
    if (s == 0) continue;
    const mpz_srcptr c = v[i].get_mpz_t();
    const std::size_t sz = mpz_size(c);
    std::memcpy((s > 0 ? pp : np) + i * limbs, mpz_limbs_read(c), sz * sizeof(mp_limb_t));
  }
  mpz_limbs_finish(pos.get_mpz_t(), static_cast<mp_size_t>(n));
  mpz_limbs_finish(neg.get_mpz_t(), static_cast<mp_size_t>(n));
  return pos - neg;
}

// Inverse of pack for a product with `count` coefficients, each of absolute
// value below 2^(slot_bits - 1). Digits are read in balanced form.
std::vector<Integer> unpack(const Integer& packed, std::size_t count, std::size_t limbs) {
  const bool negative = sgn(packed) < 0;
  const Integer mag = abs(packed);
  const mp_limb_t* rp = mpz_limbs_read(mag.get_mpz_t());
  const std::size_t rn = mpz_size(mag.get_mpz_t());
  const std::size_t slot_bits = limbs * GMP_NUMB_BITS;

  Integer full;
  mpz_setbit(full.get_mpz_t(), slot_bits);
  Integer half;
  mpz_setbit(half.get_mpz_t(), slot_bits - 1);

  std::vector<Integer> out(count);
  bool carry = false;
  for (std::size_t i = 0; i < count; ++i) {
    const std::size_t start = i * limbs;
    const std::size_t avail = start < rn ? std::min(limbs, rn - start) : 0;
    Integer d;
    if (avail > 0) {
      mp_limb_t* dp = mpz_limbs_write(d.get_mpz_t(), static_cast<mp_size_t>(avail));
      std::memcpy(dp, rp + start, avail * sizeof(mp_limb_t));
      mpz_limbs_finish(d.get_mpz_t(), static_cast<mp_size_t>(avail));
    }
    if (carry) d += 1;
    carry = d >= half;
    if (carry) d -= full;
    if (negative) d = -d;
    out[i] = std::move(d);
  }
  return out;
}

}  // namespace

std::vector<Integer> multiply_schoolbook(std::span<const Integer> a, std::span<const Integer> b) {
  if (a.empty() || b.empty()) return {};
  std::vector<Integer> r(a.size() + b.size() - 1);
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (sgn(a[i]) == 0) continue;
    const mpz_srcptr ai = a[i].get_mpz_t();
    for (std::size_t j = 0; j < b.size(); ++j) {
      if (sgn(b[j]) == 0) continue;
      mpz_addmul(r[i + j].get_mpz_t(), ai, b[j].get_mpz_t());
    }
  }
  return r;
}

std::vector<Integer> multiply_kronecker(std::span<const Integer> a, std::span<const Integer> b) {
  if (a.empty() || b.empty()) return {};
  const std::size_t shorter = std::min(a.size(), b.size());
  // |coefficient of product| < shorter * 2^ba * 2^bb; one more bit for the
  // balanced-digit sign.
  const std::size_t bits = max_bits(a) + max_bits(b) + std::bit_width(shorter) + 2;
  const std::size_t limbs = (bits + GMP_NUMB_BITS - 1) / GMP_NUMB_BITS;
  const Integer pa = pack(a, limbs);
  Integer prod;
  if (a.data() == b.data() && a.size() == b.size()) {
    prod = pa * pa;
  } else {
    prod = pa * pack(b, limbs);
  }
  return unpack(prod, a.size() + b.size() - 1, limbs);
}

std::vector<Integer> multiply_dense(std::span<const Integer> a, std::span<const Integer> b) {
  if (std::min(a.size(), b.size()) < kKroneckerThreshold) return multiply_schoolbook(a, b);
  return multiply_kronecker(a, b);
}

std::vector<Term> multiply_terms(std::span<const Term> a, std::span<const Term> b) {
  if (a.empty() || b.empty()) return {};

  std::array<int, 2> lo_a = a[0].exp, hi_a = a[0].exp, lo_b = b[0].exp, hi_b = b[0].exp;
  for (const auto& t : a) {
    for (int k = 0; k < 2; ++k) {
      lo_a[k] = std::min(lo_a[k], t.exp[k]);
      hi_a[k] = std::max(hi_a[k], t.exp[k]);
    }
  }
  for (const auto& t : b) {
    for (int k = 0; k < 2; ++k) {
      lo_b[k] = std::min(lo_b[k], t.exp[k]);
      hi_b[k] = std::max(hi_b[k], t.exp[k]);
    }
  }
  const std::array<int, 2> lo{lo_a[0] + lo_b[0], lo_a[1] + lo_b[1]};
  const std::size_t rows = static_cast<std::size_t>(hi_a[0] - lo_a[0] + hi_b[0] - lo_b[0] + 1);
  const std::size_t cols = static_cast<std::size_t>(hi_a[1] - lo_a[1] + hi_b[1] - lo_b[1] + 1);
  const std::size_t box = rows * cols;
  const std::size_t work = a.size() * b.size();

  auto collect = [&](std::vector<Integer>& dense) {
    std::vector<Term> out;
    for (std::size_t k = 0; k < dense.size(); ++k) {
      if (sgn(dense[k]) == 0) continue;
      out.push_back({{lo[0] + static_cast<int>(k / cols), lo[1] + static_cast<int>(k % cols)},
                     std::move(dense[k])});
    }
    return out;
  };

  // Very sparse operands: multiply term by term and merge by sorting.
  if (box > 8 * work + 4096) {
    std::vector<Term> prods;
    prods.reserve(work);
    for (const auto& ta : a) {
      for (const auto& tb : b) {
        prods.push_back({{ta.exp[0] + tb.exp[0], ta.exp[1] + tb.exp[1]}, ta.coeff * tb.coeff});
      }
    }
    std::sort(prods.begin(), prods.end(),
              [](const Term& l, const Term& r) { return l.exp < r.exp; });
    std::vector<Term> out;
    for (auto& t : prods) {
      if (!out.empty() && out.back().exp == t.exp) {
        out.back().coeff += t.coeff;
      } else {
        if (!out.empty() && sgn(out.back().coeff) == 0) out.pop_back();
        out.push_back(std::move(t));
      }
    }
    if (!out.empty() && sgn(out.back().coeff) == 0) out.pop_back();
    return out;
  }

  if (std::min(a.size(), b.size()) < kKroneckerThreshold || work < 4096) {
    std::vector<Integer> dense(box);
    for (const auto& ta : a) {
      const std::size_t r0 = static_cast<std::size_t>(ta.exp[0] - lo_a[0]);
      const std::size_t c0 = static_cast<std::size_t>(ta.exp[1] - lo_a[1]);
      for (const auto& tb : b) {
        const std::size_t r = r0 + static_cast<std::size_t>(tb.exp[0] - lo_b[0]);
        const std::size_t c = c0 + static_cast<std::size_t>(tb.exp[1] - lo_b[1]);
        mpz_addmul(dense[r * cols + c].get_mpz_t(), ta.coeff.get_mpz_t(), tb.coeff.get_mpz_t());
      }
    }
    return collect(dense);
  }

  // Kronecker substitution v0 -> v1^cols turns the product into a univariate
  // one without overlap, since each operand's v1-span is below cols.
  auto flatten = [cols](std::span<const Term> ts, const std::array<int, 2>& lo_t,
                        const std::array<int, 2>& hi_t) {
    std::vector<Integer> flat(static_cast<std::size_t>(hi_t[0] - lo_t[0]) * cols +
                              static_cast<std::size_t>(hi_t[1] - lo_t[1]) + 1);
    for (const auto& t : ts) {
      flat[static_cast<std::size_t>(t.exp[0] - lo_t[0]) * cols +
           static_cast<std::size_t>(t.exp[1] - lo_t[1])] = t.coeff;
    }
    return flat;
  };
  const auto fa = flatten(a, lo_a, hi_a);
  std::vector<Integer> prod;
  if (a.data() == b.data() && a.size() == b.size()) {
    prod = multiply_dense(fa, fa);
  } else {
    prod = multiply_dense(fa, flatten(b, lo_b, hi_b));
  }
  prod.resize(box);
  return collect(prod);
}

}  // namespace chebvar::detail
