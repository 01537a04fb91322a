#include "chebvar/coords.hpp"

namespace chebvar {

std::string_view coords_name(Coords c) {
  switch (c) {
    case Coords::TraceEven: return "trace-even";
    case Coords::TraceOdd: return "trace-odd";
    case Coords::Skein: return "skein";
    case Coords::BridgeXZ: return "bridge-xz";
  }
  return "?";
}

std::optional<Coords> parse_coords(std::string_view name) {
  if (name == "trace-even") return Coords::TraceEven;
  if (name == "trace-odd") return Coords::TraceOdd;
  if (name == "skein") return Coords::Skein;
  if (name == "bridge-xz" || name == "xz") return Coords::BridgeXZ;
  return std::nullopt;
}

VarPair coords_vars(Coords c) {
  return c == Coords::BridgeXZ ? VarPair{Var::x, Var::z} : VarPair{Var::x, Var::y};
}

}  // namespace chebvar
