#pragma once

#include <string_view>

#include "heisenweyl/expression_grammar.hpp"
#include "heisenweyl/parameters.hpp"

namespace heisenweyl {

/// Parser hooks for coefficient syntax; reused by the free-algebra parser.
struct ScalarHooks {
  const Parameters& params;

  /// True for p, q, i, and t on one-parameter instances.
  bool is_symbol(const std::string& name) const;
  Scalar identifier(const std::string& name, std::size_t at) const;
  Scalar integer(long v) const { return Scalar(v); }
  Scalar bracket(int n, std::size_t) const { return params.bracket(n); }
  Scalar bracket_factorial(int n, std::size_t at) const;
  Scalar power(const Scalar& base, WrittenExponent e, const std::optional<std::string>& atom, std::size_t at) const;
  Scalar divide(const Scalar& a, const Scalar& b, std::size_t at) const;
};

/// Parse a coefficient such as "(1-p*q)^(-1)", "p^(1/2)", "[4]_{p,q}" or
/// "2*i*q". Symbols p, q, i resolve against params; t is accepted only for
/// one-parameter instances. Throws ParseError.
Scalar parse_scalar(std::string_view text, const Parameters& params = Parameters::generic());

}  // namespace heisenweyl
