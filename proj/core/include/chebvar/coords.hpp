#pragma once

#include <optional>
#include <string_view>

#include "chebvar/var.hpp"

namespace chebvar {

/// Coordinate systems on the character variety.
///   TraceEven: x = tr a = tr b, y = tr(a b^-1)
///   TraceOdd:  x = tr a = tr b, y = tr(a b)
///   Skein:     x = -tr(a'), y = -tr(a' b^-1)
///   BridgeXZ:  x = tr a = tr b, z = tr(a b)
enum class Coords { TraceEven, TraceOdd, Skein, BridgeXZ };

std::string_view coords_name(Coords c);
std::optional<Coords> parse_coords(std::string_view name);
VarPair coords_vars(Coords c);

}  // namespace chebvar
