#include "heisenweyl/univariate.hpp"

#include <stdexcept>

namespace heisenweyl {

UnivariatePoly::UnivariatePoly(std::vector<GaussianRational> coeffs) : c_(std::move(coeffs)) { trim(); }

UnivariatePoly::UnivariatePoly(const GaussianRational& c) {
  if (!c.is_zero()) c_.push_back(c);
}

UnivariatePoly UnivariatePoly::monomial(int degree, GaussianRational c) {
  if (degree < 0) throw std::invalid_argument("negative degree");
  std::vector<GaussianRational> v(static_cast<std::size_t>(degree) + 1);
  v.back() = std::move(c);
  return UnivariatePoly(std::move(v));
}

void UnivariatePoly::trim() {
  while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
}

GaussianRational UnivariatePoly::coeff(int k) const {
  if (k < 0 || k >= static_cast<int>(c_.size())) return {};
  return c_[static_cast<std::size_t>(k)];
}

UnivariatePoly UnivariatePoly::operator-() const {
  UnivariatePoly r = *this;
  for (auto& c : r.c_) c = -c;
  return r;
}

UnivariatePoly& UnivariatePoly::operator+=(const UnivariatePoly& o) {
  if (o.c_.size() > c_.size()) c_.resize(o.c_.size());
  for (std::size_t k = 0; k < o.c_.size(); ++k) c_[k] += o.c_[k];
  trim();
  return *this;
}

UnivariatePoly& UnivariatePoly::operator-=(const UnivariatePoly& o) {
  if (o.c_.size() > c_.size()) c_.resize(o.c_.size());
  for (std::size_t k = 0; k < o.c_.size(); ++k) c_[k] -= o.c_[k];
  trim();
  return *this;
}

UnivariatePoly operator*(const UnivariatePoly& a, const UnivariatePoly& b) {
  if (a.is_zero() || b.is_zero()) return {};
  std::vector<GaussianRational> r(a.c_.size() + b.c_.size() - 1);
  for (std::size_t i = 0; i < a.c_.size(); ++i) {
    if (a.c_[i].is_zero()) continue;
    for (std::size_t j = 0; j < b.c_.size(); ++j) r[i + j] += a.c_[i] * b.c_[j];
  }
  return UnivariatePoly(std::move(r));
}

UnivariatePoly UnivariatePoly::scaled(const GaussianRational& c) const {
  if (c.is_zero()) return {};
  UnivariatePoly r = *this;
  for (auto& x : r.c_) x *= c;
  return r;
}

std::pair<UnivariatePoly, UnivariatePoly> UnivariatePoly::divmod(const UnivariatePoly& d) const {
  if (d.is_zero()) throw std::domain_error("polynomial division by zero");
  if (degree() < d.degree()) return {UnivariatePoly{}, *this};
  std::vector<GaussianRational> rem = c_;
  std::vector<GaussianRational> quo(c_.size() - d.c_.size() + 1);
  GaussianRational lc_inv = d.leading().inverse();
  int dd = d.degree();
  for (int k = degree(); k >= dd; --k) {
    auto& top = rem[static_cast<std::size_t>(k)];
    if (top.is_zero()) continue;
    GaussianRational f = top * lc_inv;
    for (int j = 0; j <= dd; ++j) rem[static_cast<std::size_t>(k - dd + j)] -= f * d.c_[static_cast<std::size_t>(j)];
    quo[static_cast<std::size_t>(k - dd)] = std::move(f);
  }
  rem.resize(static_cast<std::size_t>(dd));
  return {UnivariatePoly(std::move(quo)), UnivariatePoly(std::move(rem))};
}

std::optional<UnivariatePoly> UnivariatePoly::divide_exact(const UnivariatePoly& d) const {
  auto [q, r] = divmod(d);
  if (!r.is_zero()) return std::nullopt;
  return q;
}

UnivariatePoly UnivariatePoly::monic() const {
  if (is_zero()) return {};
  return scaled(leading().inverse());
}

GaussianRational UnivariatePoly::evaluate(const GaussianRational& at) const {
  GaussianRational acc;
  for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * at + *it;
  return acc;
}

std::string UnivariatePoly::to_string(std::string_view var) const {
  if (is_zero()) return "0";
  std::string out;
  for (int k = degree(); k >= 0; --k) {
    const auto& c = c_[static_cast<std::size_t>(k)];
    if (c.is_zero()) continue;
    bool neg = c.is_negative_looking();
    GaussianRational mag = neg ? -c : c;
    if (!out.empty()) out += neg ? " - " : " + ";
    else if (neg) out += "-";
    std::string mono;
    if (k == 1) mono = std::string(var);
    else if (k > 1) mono = std::string(var) + "^" + std::to_string(k);
    if (mono.empty()) out += mag.to_string();
    else if (mag.is_one()) out += mono;
    else out += mag.to_string() + "*" + mono;
  }
  return out;
}

UnivariatePoly gcd(UnivariatePoly a, UnivariatePoly b) {
  while (!b.is_zero()) {
    UnivariatePoly r = a.mod(b);
    a = std::move(b);
    b = std::move(r);
  }
  return a.monic();
}

std::pair<UnivariatePoly, UnivariatePoly> half_extended_gcd(const UnivariatePoly& a, const UnivariatePoly& m) {
  UnivariatePoly r0 = m, r1 = a.mod(m);
  UnivariatePoly s0, s1 = UnivariatePoly(GaussianRational(1));
  if (r1.is_zero()) return {m.monic(), UnivariatePoly{}};
  while (!r1.is_zero()) {
    auto [quo, rem] = r0.divmod(r1);
    UnivariatePoly s2 = s0 - quo * s1;
    r0 = std::move(r1);
    r1 = std::move(rem);
    s0 = std::move(s1);
    s1 = std::move(s2);
  }
  GaussianRational lc_inv = r0.leading().inverse();
  return {r0.scaled(lc_inv), s0.scaled(lc_inv).mod(m)};
}

UnivariatePoly cyclotomic(int n) {
  if (n < 1) throw std::invalid_argument("cyclotomic index must be positive");
  // u^n - 1 = prod_{d | n} Phi_d(u)
  UnivariatePoly acc = UnivariatePoly::monomial(n) - UnivariatePoly(GaussianRational(1));
  for (int d = 1; d < n; ++d) {
    if (n % d != 0) continue;
    acc = *acc.divide_exact(cyclotomic(d));
  }
  return acc;
}

}  // namespace heisenweyl
