#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <string_view>

namespace chebvar {

/// Variable tags used by every polynomial type. `s` only appears as the
/// Laurent variable of the representation oracle.
enum class Var : std::uint8_t { x, y, z, u, s };

using VarPair = std::array<Var, 2>;

std::string_view var_name(Var v);
std::optional<Var> parse_var(std::string_view name);

}  // namespace chebvar
