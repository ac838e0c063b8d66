#pragma once

#include <compare>
#include <map>
#include <optional>
#include <string>
#include <utility>

#include "heisenweyl/gaussian_rational.hpp"

namespace heisenweyl {

/// Exponent pair of p^(p2/2) q^(q2/2). Half-integer exponents are stored
/// doubled so keys stay integral.
struct HalfExponent {
  int p2 = 0;
  int q2 = 0;
  friend auto operator<=>(const HalfExponent&, const HalfExponent&) = default;
  HalfExponent operator+(const HalfExponent& o) const { return {p2 + o.p2, q2 + o.q2}; }
  HalfExponent operator-() const { return {-p2, -q2}; }
};

/// Display names for the two variable slots. The first slot is "p" in the
/// generic field and "t" in a one-parameter specialization.
struct VariableNames {
  std::string first = "p";
  std::string second = "q";
};

/// Sparse Laurent polynomial in p^(1/2), q^(1/2) over Q(i).
class LaurentPoly {
 public:
  using TermMap = std::map<HalfExponent, GaussianRational>;

  LaurentPoly() = default;
  LaurentPoly(const GaussianRational& c);  // NOLINT(google-explicit-constructor)
  LaurentPoly(long c) : LaurentPoly(GaussianRational(c)) {}  // NOLINT(google-explicit-constructor)
  static LaurentPoly monomial(HalfExponent e, GaussianRational c = 1);

  const TermMap& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const;
  bool is_one() const;
  bool is_monomial() const { return terms_.size() == 1; }
  std::size_t size() const { return terms_.size(); }

  /// Componentwise minimum exponent over the support (zero poly: {0,0}).
  HalfExponent min_exponent() const;
  /// Leading term under lex order with the p-slot major.
  const std::pair<const HalfExponent, GaussianRational>& leading_term() const { return *terms_.rbegin(); }

  LaurentPoly operator-() const;
  LaurentPoly& operator+=(const LaurentPoly& o);
  LaurentPoly& operator-=(const LaurentPoly& o);
  friend LaurentPoly operator+(LaurentPoly a, const LaurentPoly& b) { return a += b; }
  friend LaurentPoly operator-(LaurentPoly a, const LaurentPoly& b) { return a -= b; }
  friend LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b);
  LaurentPoly scaled(const GaussianRational& c) const;
  LaurentPoly shifted(HalfExponent e) const;
  /// Integer power; negative powers only for monomials.
  LaurentPoly pow(int n) const;

  friend bool operator==(const LaurentPoly&, const LaurentPoly&) = default;

  /// Evaluate under a ring map described by the image of each monomial.
  template <class R, class MonomialImage>
  R evaluate(MonomialImage&& image, R zero) const {
    R acc = zero;
    for (const auto& [e, c] : terms_) acc = acc + image(e, c);
    return acc;
  }

  std::string to_string(const VariableNames& names = {}) const;

 private:
  void add_term(const HalfExponent& e, const GaussianRational& c);
  TermMap terms_;
};

/// Exact quotient a / b when b divides a in the Laurent ring.
std::optional<LaurentPoly> divide_exact(const LaurentPoly& a, const LaurentPoly& b);

/// A gcd of a and b, unique up to a unit monomial. Monomial factors are
/// cleared first; the result is a polynomial with no monomial content and
/// leading coefficient 1 (lex, p-slot major). Computed by primitive
/// subresultant-style pseudo-remainder sequences with p^(1/2) as main
/// variable over Q(i)[q^(1/2)].
LaurentPoly laurent_gcd(const LaurentPoly& a, const LaurentPoly& b);

}  // namespace heisenweyl
