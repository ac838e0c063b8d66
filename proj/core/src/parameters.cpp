#include "heisenweyl/parameters.hpp"

#include <numeric>
#include <stdexcept>

namespace heisenweyl {

Scalar pq_number(int n) {
  const Scalar p = Scalar::p(), q = Scalar::q();
  Scalar num = q.pow(n) - p.pow(-n);
  Scalar den = q - p.inverse();
  return Scalar::fraction(num.num(), den.num());
}

Scalar pq_factorial(int n) {
  if (n < 0) throw std::invalid_argument("factorial of a negative integer");
  Scalar acc = 1;
  for (int k = 1; k <= n; ++k) acc *= pq_number(k);
  return acc;
}

Parameters Parameters::one_param(int r, int s) {
  if (r <= 0 || s <= 0) throw std::invalid_argument("one-parameter exponents must be positive");
  if (std::gcd(r, s) != 1) throw std::invalid_argument("one-parameter exponents must be coprime");
  Parameters out;
  // First slot holds t^(1/2); p = t^r has doubled exponent 2r.
  out.p = LaurentPoly::monomial({2 * r, 0});
  out.q = LaurentPoly::monomial({2 * s, 0});
  out.sqrt_p = LaurentPoly::monomial({r, 0});
  out.sqrt_q = LaurentPoly::monomial({s, 0});
  out.names = {"t", "q"};
  out.label = "oneparam:" + std::to_string(r) + "," + std::to_string(s);
  return out;
}

Parameters Parameters::equal() {
  Parameters out;
  out.p = out.q;
  out.sqrt_p = out.sqrt_q;
  out.label = "p=q";
  return out;
}

Parameters Parameters::inverted() const {
  Parameters out = *this;
  out.p = p.inverse();
  out.q = q.inverse();
  out.sqrt_p = sqrt_p.inverse();
  out.sqrt_q = sqrt_q.inverse();
  out.label = label + "/inverted";
  return out;
}

Parameters Parameters::swapped() const {
  Parameters out = *this;
  std::swap(out.p, out.q);
  std::swap(out.sqrt_p, out.sqrt_q);
  out.label = label + "/swapped";
  return out;
}

Scalar Parameters::bracket(int n) const {
  if (n == 0) return {};
  if (n < 0) return -(p.pow(-n) * q.pow(n)) * bracket(-n);
  const Scalar pinv = p.inverse();
  Scalar acc, qi = 1;
  Scalar pk = pinv.pow(n - 1);
  for (int i = 0; i < n; ++i) {
    acc += qi * pk;
    qi *= q;
    pk *= p;
  }
  return acc;
}

Scalar Parameters::bracket_factorial(int n) const {
  if (n < 0) throw std::invalid_argument("factorial of a negative integer");
  Scalar acc = 1;
  for (int k = 1; k <= n; ++k) acc *= bracket(k);
  return acc;
}

}  // namespace heisenweyl
