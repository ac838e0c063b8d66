#pragma once

#include <string>

#include "heisenweyl/laurent.hpp"

namespace heisenweyl {

/// Element of the coefficient field Q(i)(p^(1/2), q^(1/2)).
///
/// Stored as num/den with den a genuine polynomial that has no monomial
/// factor, is coprime to num, and has leading coefficient 1 (lex order,
/// p-slot major). Under these rules every value has exactly one
/// representation, so == is structural.
class Scalar {
 public:
  Scalar() = default;
  Scalar(long c) : num_(c) {}  // NOLINT(google-explicit-constructor)
  Scalar(const GaussianRational& c) : num_(c) {}  // NOLINT(google-explicit-constructor)
  Scalar(LaurentPoly num) : num_(std::move(num)) {}  // NOLINT(google-explicit-constructor)

  /// num / den in reduced form. Throws std::domain_error if den == 0.
  static Scalar fraction(const LaurentPoly& num, const LaurentPoly& den);

  static Scalar p() { return LaurentPoly::monomial({2, 0}); }
  static Scalar q() { return LaurentPoly::monomial({0, 2}); }
  static Scalar sqrt_p() { return LaurentPoly::monomial({1, 0}); }
  static Scalar sqrt_q() { return LaurentPoly::monomial({0, 1}); }
  static Scalar i() { return GaussianRational::i(); }

  const LaurentPoly& num() const { return num_; }
  const LaurentPoly& den() const { return den_; }

  bool is_zero() const { return num_.is_zero(); }
  bool is_one() const { return num_.is_one() && den_.is_one(); }
  /// True when the value lies in the Laurent ring (denominator 1).
  bool is_laurent() const { return den_.is_one(); }

  Scalar operator-() const;
  Scalar& operator+=(const Scalar& o);
  Scalar& operator-=(const Scalar& o);
  Scalar& operator*=(const Scalar& o);
  Scalar& operator/=(const Scalar& o);
  friend Scalar operator+(Scalar a, const Scalar& b) { return a += b; }
  friend Scalar operator-(Scalar a, const Scalar& b) { return a -= b; }
  friend Scalar operator*(Scalar a, const Scalar& b) { return a *= b; }
  friend Scalar operator/(Scalar a, const Scalar& b) { return a /= b; }

  Scalar inverse() const;
  Scalar pow(int n) const;

  friend bool operator==(const Scalar&, const Scalar&) = default;

  /// "num" or "(num)/(den)".
  std::string to_string(const VariableNames& names = {}) const;
  /// Whether a product "c*word" needs parentheses around c.
  bool needs_parens() const { return !is_laurent() || num_.size() > 1 || (num_.size() == 1 && num_.terms().begin()->second.is_compound()); }

 private:
  Scalar(LaurentPoly num, LaurentPoly den) : num_(std::move(num)), den_(std::move(den)) {}
  static Scalar reduce(LaurentPoly num, LaurentPoly den);

  LaurentPoly num_;
  LaurentPoly den_ = LaurentPoly(1);
};

}  // namespace heisenweyl
