#include "chebvar/irreducibility.hpp"

namespace chebvar {

std::string_view verdict_name(Verdict v) {
  return v == Verdict::Irreducible ? "Irreducible" : "CriterionInapplicable";
}

IrreducibilityReport irreducible_by_parity_gcd(const UniPoly& f, const UniPoly& g) {
  IrreducibilityReport r{f, g, f.degree() - g.degree(), uni_gcd(f, g),
                         Verdict::CriterionInapplicable};
  if (f.is_zero() || g.is_zero()) return r;
  if (r.degree_gap % 2 != 0 && r.gcd.is_one()) r.verdict = Verdict::Irreducible;
  return r;
}

}  // namespace chebvar
