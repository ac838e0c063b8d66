#pragma once

#include <string>
#include <utility>
#include <vector>

#include "heisenweyl/scalar.hpp"

namespace heisenweyl {

/// Renders sum c_k * m_k in the given order, e.g. "q*x*y - 2*z + (1 + q)".
/// An empty monomial string denotes the unit. Empty input renders as "0".
std::string format_sum(const std::vector<std::pair<std::string, Scalar>>& terms, const VariableNames& names = {});

/// "x", "x^3", "x^-2" (empty for exponent 0).
std::string format_power(const std::string& base, int exponent);

}  // namespace heisenweyl
