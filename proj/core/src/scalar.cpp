#include "heisenweyl/scalar.hpp"

#include <stdexcept>

namespace heisenweyl {

Scalar Scalar::fraction(const LaurentPoly& num, const LaurentPoly& den) { return reduce(num, den); }

Scalar Scalar::reduce(LaurentPoly num, LaurentPoly den) {
  if (den.is_zero()) throw std::domain_error("division by zero");
  if (num.is_zero()) return {};
  if (den.is_monomial()) {
    const auto& [e, c] = *den.terms().begin();
    return Scalar(num.shifted(-e).scaled(c.inverse()));
  }
  // Units of the Laurent ring move into the numerator.
  HalfExponent m = den.min_exponent();
  if (m != HalfExponent{}) {
    num = num.shifted(-m);
    den = den.shifted(-m);
  }
  if (auto q = divide_exact(num, den)) return Scalar(std::move(*q));
  LaurentPoly g = laurent_gcd(num, den);
  if (!g.is_one()) {
    num = *divide_exact(num, g);
    den = *divide_exact(den, g);
    HalfExponent m2 = den.min_exponent();
    num = num.shifted(-m2);
    den = den.shifted(-m2);
  }
  GaussianRational lc = den.leading_term().second;
  if (!lc.is_one()) {
    GaussianRational inv = lc.inverse();
    num = num.scaled(inv);
    den = den.scaled(inv);
  }
  if (den.is_one()) return Scalar(std::move(num));
  return Scalar(std::move(num), std::move(den));
}

Scalar Scalar::operator-() const { return Scalar(-num_, den_); }

Scalar& Scalar::operator+=(const Scalar& o) {
  if (o.is_zero()) return *this;
  if (is_zero()) return *this = o;
  if (den_ == o.den_) {
    if (den_.is_one()) {
      num_ += o.num_;
      return *this;
    }
    return *this = reduce(num_ + o.num_, den_);
  }
  return *this = reduce(num_ * o.den_ + o.num_ * den_, den_ * o.den_);
}

Scalar& Scalar::operator-=(const Scalar& o) { return *this += -o; }

Scalar& Scalar::operator*=(const Scalar& o) {
  if (is_zero()) return *this;
  if (o.is_zero()) return *this = Scalar{};
  if (den_.is_one() && o.den_.is_one()) {
    num_ = num_ * o.num_;
    return *this;
  }
  return *this = reduce(num_ * o.num_, den_ * o.den_);
}

Scalar& Scalar::operator/=(const Scalar& o) { return *this *= o.inverse(); }

Scalar Scalar::inverse() const {
  if (is_zero()) throw std::domain_error("division by zero");
  return reduce(den_, num_);
}

Scalar Scalar::pow(int n) const {
  if (n < 0) return inverse().pow(-n);
  if (is_laurent()) return Scalar(num_.pow(n));
  return Scalar(num_.pow(n), den_.pow(n));  // coprimality and leading coeff 1 are preserved
}

std::string Scalar::to_string(const VariableNames& names) const {
  if (den_.is_one()) return num_.to_string(names);
  return "(" + num_.to_string(names) + ")/(" + den_.to_string(names) + ")";
}

}  // namespace heisenweyl
