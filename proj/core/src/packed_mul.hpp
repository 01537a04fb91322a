#pragma once

#include <span>
#include <vector>

#include "chebvar/bipoly.hpp"

namespace chebvar::detail {

/// Dense product of coefficient vectors (ascending exponents). Uses the
/// schoolbook loop for short inputs and Kronecker packing into a single
/// GMP multiplication otherwise.
std::vector<Integer> multiply_dense(std::span<const Integer> a, std::span<const Integer> b);

std::vector<Integer> multiply_schoolbook(std::span<const Integer> a, std::span<const Integer> b);
std::vector<Integer> multiply_kronecker(std::span<const Integer> a, std::span<const Integer> b);

/// Product of two sparse term lists with arbitrary (possibly negative)
/// exponents. The result has no zero coefficients but is unsorted.
std::vector<Term> multiply_terms(std::span<const Term> a, std::span<const Term> b);

}  // namespace chebvar::detail
