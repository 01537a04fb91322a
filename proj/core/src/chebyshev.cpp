#include "chebvar/chebyshev.hpp"

#include <array>
#include <cmath>
#include <deque>
#include <mutex>
#include <numbers>
#include <shared_mutex>
#include <stdexcept>

#include "chebvar/errors.hpp"

namespace chebvar {
namespace {

// Grows on demand; std::deque keeps references to existing elements stable
// across push_back.
class Memo {
 public:
  explicit Memo(Var var) : var_(var) {}

  const UniPoly& s(int n) {
    if (n >= 0) return lookup(s_pos_, n, [this](std::deque<UniPoly>& v) {
      const auto k = v.size();
      if (k == 0) return UniPoly::constant(var_, 1);
      if (k == 1) return UniPoly::variable(var_);
      return UniPoly::variable(var_) * v[k - 1] - v[k - 2];
    });
    // S_{-m} = -S_{m-2}; s_neg_[m] holds S_{-m}. The generator reads s_pos_
    // directly because the table lock is already held.
    const int m = -n;
    if (m >= 2) s(m - 2);
    return lookup(s_neg_, m, [this](std::deque<UniPoly>& v) {
      const auto k = v.size();
      if (k < 2) return UniPoly(var_);  // slot 0 unused, S_{-1} = 0
      return -s_pos_[k - 2];
    });
  }

  const UniPoly& t(int n) {
    if (n < 0) throw NegativeIndex("T_n requires n >= 0, got " + std::to_string(n));
    return lookup(t_, n, [this](std::deque<UniPoly>& v) {
      const auto k = v.size();
      if (k == 0) return UniPoly::constant(var_, 2);
      if (k == 1) return UniPoly::variable(var_);
      return UniPoly::variable(var_) * v[k - 1] - v[k - 2];
    });
  }

 private:
  template <class Next>
  const UniPoly& lookup(std::deque<UniPoly>& table, int n, Next next) {
    const auto idx = static_cast<std::size_t>(n);
    {
      std::shared_lock lock(mutex_);
      if (idx < table.size()) return table[idx];
    }
    std::unique_lock lock(mutex_);
    while (table.size() <= idx) {
      UniPoly value = next(table);
      table.push_back(std::move(value));
    }
    return table[idx];
  }

  Var var_;
  std::shared_mutex mutex_;
  std::deque<UniPoly> s_pos_;
  std::deque<UniPoly> s_neg_;
  std::deque<UniPoly> t_;
};

Memo& memo(Var var) {
  static std::array<Memo, 5> tables{Memo(Var::x), Memo(Var::y), Memo(Var::z), Memo(Var::u),
                                    Memo(Var::s)};
  return tables[static_cast<std::size_t>(var)];
}

}  // namespace

const UniPoly& cheb_s(int n, Var var) { return memo(var).s(n); }

const UniPoly& cheb_t(int n, Var var) { return memo(var).t(n); }

std::vector<double> cheb_s_roots(int n) {
  if (n < 1) throw NegativeIndex("cheb_s_roots requires n >= 1");
  std::vector<double> roots;
  roots.reserve(static_cast<std::size_t>(n));
  for (int j = 1; j <= n; ++j) roots.push_back(2.0 * std::cos(j * std::numbers::pi / (n + 1)));
  return roots;
}

std::vector<double> cheb_s_diff_roots(int n) {
  if (n < 1) throw NegativeIndex("cheb_s_diff_roots requires n >= 1");
  std::vector<double> roots;
  roots.reserve(static_cast<std::size_t>(n));
  for (int j = 0; j < n; ++j) {
    roots.push_back(2.0 * std::cos((2 * j + 1) * std::numbers::pi / (2 * n + 1)));
  }
  return roots;
}

UniPoly alt_sum_alpha(int n, Var var) {
  if (n < 0) throw NegativeIndex("alpha_n requires n >= 0");
  UniPoly sum(var);
  for (int k = 0; k <= n; ++k) {
    if ((n - k) % 2 == 0) {
      sum += cheb_s(k, var);
    } else {
      sum -= cheb_s(k, var);
    }
  }
  const int half_up = (n + 1) / 2;
  const int half_down = (n - 1 < 0) ? -1 : (n - 1) / 2;
  const UniPoly closed = cheb_s(n - half_up, var) * (cheb_s(half_up, var) - cheb_s(half_down, var));
  if (!(sum == closed)) {
    throw IdentityViolation("alpha_" + std::to_string(n) + ": sum " + sum.str() +
                            " != closed form " + closed.str());
  }
  return sum;
}

UniPoly alt_sum_beta(int n, Var var) {
  if (n < 0) throw NegativeIndex("beta_n requires n >= 0");
  // T_n - T_{n-1} + ... + (-1)^{n-1} T_1 + (-1)^n
  UniPoly tail = UniPoly::constant(var, n % 2 == 0 ? 1 : -1);
  for (int k = 1; k <= n; ++k) {
    if ((n - k) % 2 == 0) {
      tail += cheb_t(k, var);
    } else {
      tail -= cheb_t(k, var);
    }
  }
  UniPoly beta = tail * Integer(2) - cheb_t(n + 1, var);
  const UniPoly closed = UniPoly(var, {2, -1}) * cheb_s(n, var);
  if (!(beta == closed)) {
    throw IdentityViolation("beta_" + std::to_string(n) + ": sum " + beta.str() +
                            " != (2-v)S_n = " + closed.str());
  }
  return beta;
}

BiPoly cheb_s_at(int n, const BiPoly& arg) {
  const int reach = n >= 0 ? n : -n;
  return ChebyshevSeq(arg, reach)[n];
}

BiPoly recurrence_closed_form(const BiPoly& f0, const BiPoly& f_neg1, int n, const BiPoly& t) {
  const int reach = std::max(std::abs(n), std::abs(n - 1));
  const ChebyshevSeq seq(t, reach);
  return recurrence_closed_form(f0, f_neg1, n, seq);
}

BiPoly recurrence_closed_form(const BiPoly& f0, const BiPoly& f_neg1, int n, const ChebyshevSeq& st) {
  return f0 * st[n] - f_neg1 * st[n - 1];
}

ChebyshevSeq::ChebyshevSeq(BiPoly arg, int max_index) : arg_(std::move(arg)) {
  if (max_index < 0) max_index = 0;
  const VarPair vars = arg_.vars();
  pos_.reserve(static_cast<std::size_t>(max_index) + 1);
  pos_.push_back(BiPoly::constant(vars, 1));
  if (max_index >= 1) pos_.push_back(arg_);
  for (int k = 2; k <= max_index; ++k) {
    pos_.push_back(arg_ * pos_[static_cast<std::size_t>(k - 1)] - pos_[static_cast<std::size_t>(k - 2)]);
  }
  neg_.resize(static_cast<std::size_t>(max_index) + 3, BiPoly(vars));
  for (int m = 2; m <= max_index + 2; ++m) {
    neg_[static_cast<std::size_t>(m)] = -pos_[static_cast<std::size_t>(m - 2)];
  }
}

const BiPoly& ChebyshevSeq::operator[](int n) const {
  if (n >= 0) {
    if (n >= static_cast<int>(pos_.size())) throw std::out_of_range("ChebyshevSeq index above window");
    return pos_[static_cast<std::size_t>(n)];
  }
  if (-n >= static_cast<int>(neg_.size())) throw std::out_of_range("ChebyshevSeq index below window");
  return neg_[static_cast<std::size_t>(-n)];
}

}  // namespace chebvar
