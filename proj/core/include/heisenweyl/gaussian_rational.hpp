#pragma once

#include <gmpxx.h>

#include <compare>
#include <string>

namespace heisenweyl {

/// An element re + i*im of Q(i). Both parts are kept in canonical (reduced)
/// form by GMP, so equality is structural.
class GaussianRational {
 public:
  GaussianRational() = default;
  GaussianRational(long v) : re_(v) {}  // NOLINT(google-explicit-constructor)
  GaussianRational(mpq_class re, mpq_class im = 0);

  static GaussianRational i() { return {0, 1}; }

  const mpq_class& re() const { return re_; }
  const mpq_class& im() const { return im_; }

  bool is_zero() const { return sgn(re_) == 0 && sgn(im_) == 0; }
  bool is_one() const { return re_ == 1 && sgn(im_) == 0; }
  bool is_real() const { return sgn(im_) == 0; }

  GaussianRational conj() const { return {re_, -im_}; }
  /// re^2 + im^2
  mpq_class norm() const { return re_ * re_ + im_ * im_; }
  GaussianRational inverse() const;

  GaussianRational operator-() const { return {-re_, -im_}; }
  GaussianRational& operator+=(const GaussianRational& o);
  GaussianRational& operator-=(const GaussianRational& o);
  GaussianRational& operator*=(const GaussianRational& o);
  GaussianRational& operator/=(const GaussianRational& o);

  friend GaussianRational operator+(GaussianRational a, const GaussianRational& b) { return a += b; }
  friend GaussianRational operator-(GaussianRational a, const GaussianRational& b) { return a -= b; }
  friend GaussianRational operator*(GaussianRational a, const GaussianRational& b) { return a *= b; }
  friend GaussianRational operator/(GaussianRational a, const GaussianRational& b) { return a /= b; }

  friend bool operator==(const GaussianRational& a, const GaussianRational& b) {
    return a.re_ == b.re_ && a.im_ == b.im_;
  }

  /// True when printing needs parentheses as a product factor ("(1+2i)").
  bool is_compound() const { return sgn(re_) != 0 && sgn(im_) != 0; }
  /// True if the leading printed sign is '-'.
  bool is_negative_looking() const;

  std::string to_string() const;

 private:
  mpq_class re_ = 0;
  mpq_class im_ = 0;
};

}  // namespace heisenweyl
