#pragma once

#include <string>

#include "heisenweyl/scalar.hpp"

namespace heisenweyl {

/// [n]_{p,q} = (q^n - p^-n) / (q - p^-1), reduced. Always a Laurent
/// polynomial after reduction.
Scalar pq_number(int n);
/// prod_{k=1}^{n} [k]_{p,q}; empty product is 1.
Scalar pq_factorial(int n);

/// Values of the deformation parameters used to instantiate an algebra.
///
/// The generic field uses the formal p, q. A one-parameter instance puts
/// p = t^r, q = t^s, with t occupying the first variable slot.
struct Parameters {
  Scalar p = Scalar::p();
  Scalar q = Scalar::q();
  Scalar sqrt_p = Scalar::sqrt_p();
  Scalar sqrt_q = Scalar::sqrt_q();
  VariableNames names;
  std::string label = "generic";

  static Parameters generic() { return {}; }
  /// p = t^r, q = t^s (so q^r = p^s). Requires r, s > 0, gcd(r, s) = 1.
  static Parameters one_param(int r, int s);
  /// The diagonal p = q (both equal to the formal q).
  static Parameters equal();

  /// (p^-1, q^-1)
  Parameters inverted() const;
  /// (q, p)
  Parameters swapped() const;

  /// [n]_{p,q} evaluated at these parameter values, via
  /// sum_{i=0}^{n-1} q^i p^{-(n-1-i)} and [-m] = -p^m q^-m [m].
  Scalar bracket(int n) const;
  Scalar bracket_factorial(int n) const;

  std::string format(const Scalar& s) const { return s.to_string(names); }
};

}  // namespace heisenweyl
