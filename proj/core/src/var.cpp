#include "chebvar/var.hpp"

namespace chebvar {

std::string_view var_name(Var v) {
  switch (v) {
    case Var::x: return "x";
    case Var::y: return "y";
    case Var::z: return "z";
    case Var::u: return "u";
    case Var::s: return "s";
  }
  return "?";
}

std::optional<Var> parse_var(std::string_view name) {
  if (name == "x") return Var::x;
  if (name == "y") return Var::y;
  if (name == "z") return Var::z;
  if (name == "u") return Var::u;
  if (name == "s") return Var::s;
  return std::nullopt;
}

}  // namespace chebvar
