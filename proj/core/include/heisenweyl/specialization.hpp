#pragma once

#include <complex>
#include <optional>
#include <stdexcept>
#include <string>
#include <variant>

#include "heisenweyl/parameters.hpp"
#include "heisenweyl/scalar.hpp"
#include "heisenweyl/univariate.hpp"

namespace heisenweyl {

/// p -> t^r, q -> t^s with gcd(r, s) = 1.
struct OneParam {
  int r = 1;
  int s = 1;
};

/// p, q -> complex doubles. Square roots use the principal branch.
struct Numeric {
  std::complex<double> p;
  std::complex<double> q;
};

/// p, q -> residues in Q(i)[u]/(modulus).
struct Quotient {
  UnivariatePoly modulus;
  UnivariatePoly p_image;
  UnivariatePoly q_image;
  std::optional<UnivariatePoly> sqrt_p_image;
  std::optional<UnivariatePoly> sqrt_q_image;

  /// modulus = Phi_n(u), p = u^ep, q = u^eq. Square-root images are set when
  /// an even exponent representative of u^ep (resp. u^eq) exists mod n.
  static Quotient cyclotomic(int n, int ep, int eq);
};

using Specialization = std::variant<OneParam, Numeric, Quotient>;

/// Raised when a denominator (or a needed square root) is unavailable in the
/// target ring. factor() names the offending element.
class SpecializationError : public std::runtime_error {
 public:
  SpecializationError(const std::string& what, std::string factor)
      : std::runtime_error(what + ": " + factor), factor_(std::move(factor)) {}
  const std::string& factor() const { return factor_; }

 private:
  std::string factor_;
};

/// Element of Q(i)[u]/(modulus), kept reduced.
class Residue {
 public:
  Residue(UnivariatePoly value, UnivariatePoly modulus);

  const UnivariatePoly& value() const { return value_; }
  const UnivariatePoly& modulus() const { return modulus_; }
  bool is_zero() const { return value_.is_zero(); }
  /// Throws SpecializationError if not a unit.
  Residue inverse() const;
  Residue pow(int n) const;

  friend Residue operator+(const Residue& a, const Residue& b) { return {a.value_ + b.value_, a.modulus_}; }
  friend Residue operator-(const Residue& a, const Residue& b) { return {a.value_ - b.value_, a.modulus_}; }
  friend Residue operator*(const Residue& a, const Residue& b) { return {a.value_ * b.value_, a.modulus_}; }
  friend bool operator==(const Residue& a, const Residue& b) { return a.value_ == b.value_; }

  std::string to_string() const { return value_.to_string("u"); }

 private:
  UnivariatePoly value_;
  UnivariatePoly modulus_;
};

/// Image of a Scalar: exact rational function in t, complex double, or residue.
using SpecializedValue = std::variant<Scalar, std::complex<double>, Residue>;

void validate(const Specialization& spec);

Scalar specialize(const Scalar& s, const OneParam& spec);
std::complex<double> specialize(const Scalar& s, const Numeric& spec);
Residue specialize(const Scalar& s, const Quotient& spec);
SpecializedValue specialize(const Scalar& s, const Specialization& spec);

bool is_zero(const SpecializedValue& v, double numeric_tolerance = 0.0);
std::string to_string(const SpecializedValue& v);

/// Parse "generic" is not a Specialization; accepted forms:
/// "oneparam:R,S", "cyclotomic:N:EP,EQ", "numeric:P,Q".
Specialization parse_specialization(const std::string& text);
std::string describe(const Specialization& spec);

/// Parameters for the algebra instance matching a one-parameter spec.
inline Parameters parameters_for(const OneParam& spec) { return Parameters::one_param(spec.r, spec.s); }

}  // namespace heisenweyl
