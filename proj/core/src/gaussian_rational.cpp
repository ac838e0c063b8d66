#include "heisenweyl/gaussian_rational.hpp"

#include <stdexcept>

namespace heisenweyl {

GaussianRational::GaussianRational(mpq_class re, mpq_class im) : re_(std::move(re)), im_(std::move(im)) {
  re_.canonicalize();
  im_.canonicalize();
}

GaussianRational GaussianRational::inverse() const {
  if (is_zero()) throw std::domain_error("division by zero in Q(i)");
  mpq_class n = norm();
  return {re_ / n, -im_ / n};
}

GaussianRational& GaussianRational::operator+=(const GaussianRational& o) {
  re_ += o.re_;
  im_ += o.im_;
  return *this;
}

GaussianRational& GaussianRational::operator-=(const GaussianRational& o) {
  re_ -= o.re_;
  im_ -= o.im_;
  return *this;
}

GaussianRational& GaussianRational::operator*=(const GaussianRational& o) {
  if (sgn(im_) == 0 && sgn(o.im_) == 0) {
    re_ *= o.re_;
    return *this;
  }
  mpq_class re = re_ * o.re_ - im_ * o.im_;
  mpq_class im = re_ * o.im_ + im_ * o.re_;
  re_ = std::move(re);
  im_ = std::move(im);
  return *this;
}

GaussianRational& GaussianRational::operator/=(const GaussianRational& o) {
  if (sgn(o.im_) == 0) {
    if (sgn(o.re_) == 0) throw std::domain_error("division by zero in Q(i)");
    re_ /= o.re_;
    im_ /= o.re_;
    return *this;
  }
  return *this *= o.inverse();
}

bool GaussianRational::is_negative_looking() const {
  if (is_compound()) return false;
  if (sgn(re_) != 0) return sgn(re_) < 0;
  return sgn(im_) < 0;
}

std::string GaussianRational::to_string() const {
  if (sgn(im_) == 0) return re_.get_str();
  std::string imag;
  if (im_ == 1) {
    imag = "i";
  } else if (im_ == -1) {
    imag = "-i";
  } else {
    imag = im_.get_str() + "i";
  }
  if (sgn(re_) == 0) return imag;
  std::string s = re_.get_str();
  if (sgn(im_) > 0) s += "+";
  return "(" + s + imag + ")";
}

}  // namespace heisenweyl
