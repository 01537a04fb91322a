#include "chebvar/poly_json.hpp"

#include "chebvar/errors.hpp"

namespace chebvar {
namespace {

Var var_from_json(const json& j) {
  if (!j.is_string()) throw ParseError("variable name must be a string");
  auto v = parse_var(j.get<std::string>());
  if (!v) throw ParseError("unknown variable '" + j.get<std::string>() + "'");
  return *v;
}

int exponent_from_json(const json& j) {
  if (!j.is_number_integer()) throw ParseError("exponent must be an integer");
  const auto e = j.get<long long>();
  if (e < 0 || e > (1LL << 30)) throw ParseError("exponent out of range");
  return static_cast<int>(e);
}

Integer coeff_from_json(const json& j) {
  if (!j.is_string()) throw ParseError("coefficient must be a decimal string");
  const auto s = j.get<std::string>();
  const std::size_t start = (!s.empty() && s[0] == '-') ? 1 : 0;
  if (s.size() == start) throw ParseError("empty coefficient");
  for (std::size_t i = start; i < s.size(); ++i) {
    if (s[i] < '0' || s[i] > '9') throw ParseError("bad coefficient '" + s + "'");
  }
  Integer c;
  if (c.set_str(s, 10) != 0) throw ParseError("bad coefficient '" + s + "'");
  return c;
}

const json& field(const json& j, const char* key) {
  if (!j.is_object() || !j.contains(key)) throw ParseError(std::string("missing key '") + key + "'");
  return j.at(key);
}

}  // namespace

json to_json(const BiPoly& p) {
  json terms = json::array();
  for (const auto& t : p.terms()) terms.push_back({t.exp[0], t.exp[1], t.coeff.get_str()});
  return {{"vars", {var_name(p.vars()[0]), var_name(p.vars()[1])}}, {"terms", std::move(terms)}};
}

json to_json(const UniPoly& p) {
  json terms = json::array();
  for (int e = p.degree(); e >= 0; --e) {
    if (sgn(p[e]) != 0) terms.push_back({e, p[e].get_str()});
  }
  return {{"vars", {var_name(p.var())}}, {"terms", std::move(terms)}};
}

BiPoly bipoly_from_json(const json& j) {
  const auto& vars = field(j, "vars");
  if (!vars.is_array() || vars.size() != 2) throw ParseError("bivariate \"vars\" needs two names");
  const VarPair pair{var_from_json(vars[0]), var_from_json(vars[1])};
  if (pair[0] == pair[1]) throw ParseError("repeated variable");
  const auto& terms = field(j, "terms");
  if (!terms.is_array()) throw ParseError("\"terms\" must be an array");
  std::vector<Term> out;
  for (const auto& t : terms) {
    if (!t.is_array() || t.size() != 3) throw ParseError("bivariate term must be [e0, e1, coeff]");
    out.push_back({{exponent_from_json(t[0]), exponent_from_json(t[1])}, coeff_from_json(t[2])});
  }
  return BiPoly(pair, std::move(out));
}

UniPoly unipoly_from_json(const json& j) {
  const auto& vars = field(j, "vars");
  if (!vars.is_array() || vars.size() != 1) throw ParseError("univariate \"vars\" needs one name");
  const Var v = var_from_json(vars[0]);
  const auto& terms = field(j, "terms");
  if (!terms.is_array()) throw ParseError("\"terms\" must be an array");
  std::vector<Integer> c;
  for (const auto& t : terms) {
    if (!t.is_array() || t.size() != 2) throw ParseError("univariate term must be [e, coeff]");
    const auto e = static_cast<std::size_t>(exponent_from_json(t[0]));
    if (c.size() <= e) c.resize(e + 1);
    c[e] += coeff_from_json(t[1]);
  }
  return UniPoly(v, std::move(c));
}

std::variant<UniPoly, BiPoly> poly_from_json(const json& j) {
  const auto& vars = field(j, "vars");
  if (vars.is_array() && vars.size() == 1) return unipoly_from_json(j);
  return bipoly_from_json(j);
}

}  // namespace chebvar
