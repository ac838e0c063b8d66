#include "heisenweyl/laurent.hpp"

#include <algorithm>
#include <stdexcept>
#include <vector>

#include "heisenweyl/univariate.hpp"

namespace heisenweyl {

LaurentPoly::LaurentPoly(const GaussianRational& c) {
  if (!c.is_zero()) terms_.emplace(HalfExponent{}, c);
}

LaurentPoly LaurentPoly::monomial(HalfExponent e, GaussianRational c) {
  LaurentPoly r;
  if (!c.is_zero()) r.terms_.emplace(e, std::move(c));
  return r;
}

bool LaurentPoly::is_constant() const {
  return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first == HalfExponent{});
}

bool LaurentPoly::is_one() const {
  return terms_.size() == 1 && terms_.begin()->first == HalfExponent{} && terms_.begin()->second.is_one();
}

HalfExponent LaurentPoly::min_exponent() const {
  if (terms_.empty()) return {};
  HalfExponent m = terms_.begin()->first;
  for (const auto& [e, c] : terms_) {
    m.p2 = std::min(m.p2, e.p2);
    m.q2 = std::min(m.q2, e.q2);
  }
  return m;
}

void LaurentPoly::add_term(const HalfExponent& e, const GaussianRational& c) {
  if (c.is_zero()) return;
  auto [it, inserted] = terms_.try_emplace(e, c);
  if (!inserted) {
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

LaurentPoly LaurentPoly::operator-() const {
  LaurentPoly r = *this;
  for (auto& [e, c] : r.terms_) c = -c;
  return r;
}

LaurentPoly& LaurentPoly::operator+=(const LaurentPoly& o) {
  for (const auto& [e, c] : o.terms_) add_term(e, c);
  return *this;
}

LaurentPoly& LaurentPoly::operator-=(const LaurentPoly& o) {
  for (const auto& [e, c] : o.terms_) add_term(e, -c);
  return *this;
}

LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b) {
  LaurentPoly r;
  for (const auto& [ea, ca] : a.terms_)
    for (const auto& [eb, cb] : b.terms_) r.add_term(ea + eb, ca * cb);
  return r;
}

LaurentPoly LaurentPoly::scaled(const GaussianRational& c) const {
  if (c.is_zero()) return {};
  LaurentPoly r = *this;
  for (auto& [e, x] : r.terms_) x *= c;
  return r;
}

LaurentPoly LaurentPoly::shifted(HalfExponent s) const {
  LaurentPoly r;
  for (const auto& [e, c] : terms_) r.terms_.emplace_hint(r.terms_.end(), e + s, c);
  return r;
}

LaurentPoly LaurentPoly::pow(int n) const {
  if (n < 0) {
    if (!is_monomial()) throw std::domain_error("negative power of a non-monomial Laurent polynomial");
    const auto& [e, c] = *terms_.begin();
    GaussianRational ci = c.inverse();
    GaussianRational cp = 1;
    for (int k = 0; k < -n; ++k) cp *= ci;
    return monomial({e.p2 * n, e.q2 * n}, cp);
  }
  if (is_monomial()) {
    const auto& [e, c] = *terms_.begin();
    GaussianRational cp = 1;
    for (int k = 0; k < n; ++k) cp *= c;
    return monomial({e.p2 * n, e.q2 * n}, cp);
  }
  LaurentPoly result(1), base = *this;
  while (n > 0) {
    if (n & 1) result = result * base;
    n >>= 1;
    if (n) base = base * base;
  }
  return result;
}

namespace {

std::string exponent_suffix(int doubled) {
  if (doubled == 2) return "";
  if (doubled % 2 == 0) return "^" + std::to_string(doubled / 2);
  return "^(" + std::to_string(doubled) + "/2)";
}

std::string monomial_string(const HalfExponent& e, const VariableNames& names) {
  std::string s;
  if (e.p2 != 0) s += names.first + exponent_suffix(e.p2);
  if (e.q2 != 0) {
    if (!s.empty()) s += "*";
    s += names.second + exponent_suffix(e.q2);
  }
  return s;
}

}  // namespace

std::string LaurentPoly::to_string(const VariableNames& names) const {
  if (terms_.empty()) return "0";
  std::vector<const TermMap::value_type*> order;
  order.reserve(terms_.size());
  for (const auto& t : terms_) order.push_back(&t);
  std::sort(order.begin(), order.end(), [](auto* a, auto* b) {
    int da = a->first.p2 + a->first.q2, db = b->first.p2 + b->first.q2;
    if (da != db) return da > db;
    return a->first.p2 > b->first.p2;
  });
  std::string out;
  for (auto* t : order) {
    const auto& c = t->second;
    bool neg = c.is_negative_looking();
    GaussianRational mag = neg ? -c : c;
    if (!out.empty()) out += neg ? " - " : " + ";
    else if (neg) out += "-";
    std::string mono = monomial_string(t->first, names);
    if (mono.empty()) out += mag.to_string();
    else if (mag.is_one()) out += mono;
    else out += mag.to_string() + "*" + mono;
  }
  return out;
}

// ---------------------------------------------------------------------------
// Dense bivariate polynomials for gcd and exact division. Outer index is the
// exponent of the p-slot variable, inner UnivariatePoly is in the q-slot.

namespace {

using Bivariate = std::vector<UnivariatePoly>;

void trim(Bivariate& a) {
  while (!a.empty() && a.back().is_zero()) a.pop_back();
}

Bivariate to_dense(const LaurentPoly& f, HalfExponent shift) {
  Bivariate out;
  for (const auto& [e, c] : f.terms()) {
    int i = e.p2 - shift.p2, j = e.q2 - shift.q2;
    if (static_cast<int>(out.size()) <= i) out.resize(static_cast<std::size_t>(i) + 1);
    out[static_cast<std::size_t>(i)] += UnivariatePoly::monomial(j, c);
  }
  trim(out);
  return out;
}

LaurentPoly from_dense(const Bivariate& a, HalfExponent shift = {}) {
  LaurentPoly r;
  for (std::size_t i = 0; i < a.size(); ++i) {
    const auto& cs = a[i].coeffs();
    for (std::size_t j = 0; j < cs.size(); ++j)
      if (!cs[j].is_zero())
        r += LaurentPoly::monomial({static_cast<int>(i) + shift.p2, static_cast<int>(j) + shift.q2}, cs[j]);
  }
  return r;
}

UnivariatePoly content(const Bivariate& a) {
  UnivariatePoly g;
  for (const auto& c : a) {
    g = gcd(g, c);
    if (g.degree() == 0) break;
  }
  return g;
}

Bivariate divide_by(const Bivariate& a, const UnivariatePoly& c) {
  Bivariate r;
  r.reserve(a.size());
  for (const auto& x : a) r.push_back(*x.divide_exact(c));
  return r;
}

Bivariate primitive_part(const Bivariate& a) {
  if (a.empty()) return a;
  UnivariatePoly c = content(a);
  if (c.degree() == 0 && c.leading().is_one()) return a;
  return divide_by(a, c);
}

// lc(b)^k * a reduced modulo b in the main variable.
Bivariate pseudo_remainder(Bivariate a, const Bivariate& b) {
  const std::size_t n = b.size() - 1;
  const UnivariatePoly& lc = b.back();
  while (!a.empty() && a.size() - 1 >= n) {
    std::size_t k = a.size() - 1;
    UnivariatePoly top = a.back();
    for (auto& x : a) x = x * lc;
    for (std::size_t j = 0; j <= n; ++j) a[k - n + j] -= top * b[j];
    trim(a);
  }
  return a;
}

Bivariate normalize_leading(Bivariate a) {
  if (a.empty()) return a;
  GaussianRational inv = a.back().leading().inverse();
  for (auto& x : a) x = x.scaled(inv);
  return a;
}

std::optional<Bivariate> divide_exact_dense(Bivariate a, const Bivariate& b) {
  if (b.empty()) throw std::domain_error("division by zero polynomial");
  const std::size_t n = b.size() - 1;
  Bivariate quo;
  while (!a.empty()) {
    if (a.size() - 1 < n) return std::nullopt;
    std::size_t k = a.size() - 1 - n;
    auto t = a.back().divide_exact(b.back());
    if (!t) return std::nullopt;
    if (quo.size() <= k) quo.resize(k + 1);
    quo[k] += *t;
    for (std::size_t j = 0; j <= n; ++j) a[k + j] -= *t * b[j];
    trim(a);
  }
  trim(quo);
  return quo;
}

}  // namespace

std::optional<LaurentPoly> divide_exact(const LaurentPoly& a, const LaurentPoly& b) {
  if (b.is_zero()) throw std::domain_error("division by zero");
  if (a.is_zero()) return LaurentPoly{};
  if (b.is_monomial()) {
    const auto& [e, c] = *b.terms().begin();
    return a.shifted(-e).scaled(c.inverse());
  }
  HalfExponent sa = a.min_exponent(), sb = b.min_exponent();
  auto q = divide_exact_dense(to_dense(a, sa), to_dense(b, sb));
  if (!q) return std::nullopt;
  return from_dense(*q, {sa.p2 - sb.p2, sa.q2 - sb.q2});
}

LaurentPoly laurent_gcd(const LaurentPoly& a, const LaurentPoly& b) {
  if (a.is_zero() && b.is_zero()) throw std::invalid_argument("gcd(0, 0) is undefined");
  Bivariate A = a.is_zero() ? Bivariate{} : to_dense(a, a.min_exponent());
  Bivariate B = b.is_zero() ? Bivariate{} : to_dense(b, b.min_exponent());
  if (A.empty()) return from_dense(normalize_leading(B));
  if (B.empty()) return from_dense(normalize_leading(A));
  // Shortcut: a constant (after clearing monomials) has trivial gcd.
  if ((A.size() == 1 && A[0].degree() == 0) || (B.size() == 1 && B[0].degree() == 0)) return LaurentPoly(1);

  UnivariatePoly ca = content(A), cb = content(B);
  A = normalize_leading(divide_by(A, ca));
  B = normalize_leading(divide_by(B, cb));
  UnivariatePoly c = gcd(ca, cb);
  if (A.size() < B.size()) std::swap(A, B);
  while (!B.empty()) {
    Bivariate R = pseudo_remainder(A, B);
    A = std::move(B);
    // Rescaling by a unit of Q(i) keeps the rational coefficients small.
    B = normalize_leading(primitive_part(R));
  }
  Bivariate G = primitive_part(A);
  for (auto& x : G) x = x * c;
  return from_dense(normalize_leading(std::move(G)));
}

}  // namespace heisenweyl
