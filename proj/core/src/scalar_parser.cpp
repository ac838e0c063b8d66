#include "heisenweyl/scalar_parser.hpp"

namespace heisenweyl {

Scalar ScalarHooks::identifier(const std::string& name, std::size_t at) const {
  if (name == "p") return params.p;
  if (name == "q") return params.q;
  if (name == "i") return Scalar::i();
  if (name == "t" && params.names.first == "t") return LaurentPoly::monomial({2, 0});
  throw ParseError("unknown symbol '" + name + "'", at);
}

bool ScalarHooks::is_symbol(const std::string& name) const {
  return name == "p" || name == "q" || name == "i" || (name == "t" && params.names.first == "t");
}

Scalar ScalarHooks::bracket_factorial(int n, std::size_t at) const {
  if (n < 0) throw ParseError("factorial of a negative bracket", at);
  return params.bracket_factorial(n);
}

Scalar ScalarHooks::power(const Scalar& base, WrittenExponent e, const std::optional<std::string>& atom,
                          std::size_t at) const {
  if (e.den == 1) {
    if (base.is_zero() && e.num < 0) throw ParseError("negative power of zero", at);
    return base.pow(e.num);
  }
  Scalar root;
  if (atom == "p") root = params.sqrt_p;
  else if (atom == "q") root = params.sqrt_q;
  else if (atom == "t" && params.names.first == "t") root = LaurentPoly::monomial({1, 0});
  else throw ParseError("half-integer exponents apply only to p, q, t", at);
  return root.pow(e.num);
}

Scalar ScalarHooks::divide(const Scalar& a, const Scalar& b, std::size_t at) const {
  if (b.is_zero()) throw ParseError("division by zero", at);
  return a / b;
}

Scalar parse_scalar(std::string_view text, const Parameters& params) {
  ScalarHooks hooks{params};
  return ExpressionParser<Scalar, ScalarHooks>(text, hooks).parse();
}

}  // namespace heisenweyl
