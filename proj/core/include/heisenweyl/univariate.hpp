#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "heisenweyl/gaussian_rational.hpp"

namespace heisenweyl {

/// Dense univariate polynomial over Q(i). coeffs()[k] is the coefficient of
/// u^k; trailing zeros are never stored, so the zero polynomial is empty.
class UnivariatePoly {
 public:
  UnivariatePoly() = default;
  explicit UnivariatePoly(std::vector<GaussianRational> coeffs);
  UnivariatePoly(const GaussianRational& c);  // NOLINT(google-explicit-constructor)

  static UnivariatePoly monomial(int degree, GaussianRational c = 1);

  const std::vector<GaussianRational>& coeffs() const { return c_; }
  bool is_zero() const { return c_.empty(); }
  /// -1 for the zero polynomial.
  int degree() const { return static_cast<int>(c_.size()) - 1; }
  const GaussianRational& leading() const { return c_.back(); }
  GaussianRational coeff(int k) const;

  UnivariatePoly operator-() const;
  UnivariatePoly& operator+=(const UnivariatePoly& o);
  UnivariatePoly& operator-=(const UnivariatePoly& o);
  friend UnivariatePoly operator+(UnivariatePoly a, const UnivariatePoly& b) { return a += b; }
  friend UnivariatePoly operator-(UnivariatePoly a, const UnivariatePoly& b) { return a -= b; }
  friend UnivariatePoly operator*(const UnivariatePoly& a, const UnivariatePoly& b);
  UnivariatePoly scaled(const GaussianRational& c) const;
  friend bool operator==(const UnivariatePoly& a, const UnivariatePoly& b) = default;

  /// Euclidean division over the field Q(i): returns (quotient, remainder).
  std::pair<UnivariatePoly, UnivariatePoly> divmod(const UnivariatePoly& d) const;
  UnivariatePoly mod(const UnivariatePoly& d) const { return divmod(d).second; }
  /// Quotient if d divides *this exactly.
  std::optional<UnivariatePoly> divide_exact(const UnivariatePoly& d) const;
  UnivariatePoly monic() const;

  GaussianRational evaluate(const GaussianRational& at) const;
  std::string to_string(std::string_view var = "u") const;

 private:
  void trim();
  std::vector<GaussianRational> c_;
};

/// Monic gcd; gcd(0, 0) = 0.
UnivariatePoly gcd(UnivariatePoly a, UnivariatePoly b);

/// (g, s) with s*a = g (mod m), g = gcd(a, m) monic.
std::pair<UnivariatePoly, UnivariatePoly> half_extended_gcd(const UnivariatePoly& a,
                                                            const UnivariatePoly& m);

/// The N-th cyclotomic polynomial over Q.
UnivariatePoly cyclotomic(int n);

}  // namespace heisenweyl
