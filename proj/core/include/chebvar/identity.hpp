#pragma once

namespace chebvar {

/// Outcome of an exact identity check lhs == rhs. On failure `difference`
/// carries lhs - rhs so the violation can be inspected.
template <class Poly>
struct Identity {
  bool holds = false;
  Poly difference;

  static Identity compare(const Poly& lhs, const Poly& rhs) {
    Poly diff = lhs - rhs;
    const bool ok = diff.is_zero();
    return Identity{ok, std::move(diff)};
  }

  explicit operator bool() const { return holds; }
};

}  // namespace chebvar
