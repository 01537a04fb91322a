#pragma once

#include <string>
#include <string_view>

#include "chebvar/unipoly.hpp"

namespace chebvar {

enum class Verdict { Irreducible, CriterionInapplicable };

std::string_view verdict_name(Verdict v);

/// Certificate for Phi(x, v) = f(v) + x^2 g(v) by the degree-parity / gcd
/// criterion. The criterion is only sufficient, so the negative outcome is
/// "inapplicable", never "reducible".
struct IrreducibilityReport {
  UniPoly f;
  UniPoly g;
  int degree_gap = 0;  // deg f - deg g
  UniPoly gcd;
  Verdict verdict = Verdict::CriterionInapplicable;

  bool irreducible() const { return verdict == Verdict::Irreducible; }
};

/// Irreducible iff deg f - deg g is odd and gcd(f, g) = 1 over Q. A zero f or
/// g leaves the criterion inapplicable.
IrreducibilityReport irreducible_by_parity_gcd(const UniPoly& f, const UniPoly& g);

}  // namespace chebvar
