#include "heisenweyl/hpq.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

#include "heisenweyl/format.hpp"

namespace heisenweyl {

PBWElement::PBWElement(const Scalar& c) {
  if (!c.is_zero()) terms_.emplace(Exponents{0, 0, 0}, c);
}

PBWElement PBWElement::monomial(int i, int j, int k, const Scalar& c) {
  if (j < 0) throw std::invalid_argument("negative power of y");
  PBWElement e;
  if (!c.is_zero()) e.terms_.emplace(Exponents{i, j, k}, c);
  return e;
}

Scalar PBWElement::coefficient(const Exponents& e) const {
  auto it = terms_.find(e);
  return it == terms_.end() ? Scalar{} : it->second;
}

bool PBWElement::is_polynomial() const {
  return std::all_of(terms_.begin(), terms_.end(), [](const auto& t) { return t.first[0] >= 0 && t.first[2] >= 0; });
}

void PBWElement::add_term(const Exponents& e, const Scalar& c) {
  if (c.is_zero()) return;
  auto [it, inserted] = terms_.try_emplace(e, c);
  if (inserted) return;
  it->second += c;
  if (it->second.is_zero()) terms_.erase(it);
}

PBWElement PBWElement::operator-() const {
  PBWElement out = *this;
  for (auto& [e, c] : out.terms_) c = -c;
  return out;
}

PBWElement& PBWElement::operator+=(const PBWElement& o) {
  for (const auto& [e, c] : o.terms_) add_term(e, c);
  return *this;
}

PBWElement& PBWElement::operator-=(const PBWElement& o) {
  for (const auto& [e, c] : o.terms_) add_term(e, -c);
  return *this;
}

PBWElement PBWElement::scaled(const Scalar& c) const {
  if (c.is_zero()) return {};
  PBWElement out = *this;
  for (auto& [e, x] : out.terms_) x *= c;
  return out;
}

std::string PBWElement::to_string(const VariableNames& names) const {
  std::vector<const TermMap::value_type*> order;
  for (const auto& t : terms_) order.push_back(&t);
  std::sort(order.begin(), order.end(), [](auto* a, auto* b) {
    int da = a->first[0] + a->first[1] + a->first[2], db = b->first[0] + b->first[1] + b->first[2];
    if (da != db) return da > db;
    return a->first > b->first;
  });
  std::vector<std::pair<std::string, Scalar>> parts;
  for (auto* t : order) {
    std::string mono;
    const char* letters[] = {"x", "y", "z"};
    for (int v = 0; v < 3; ++v) {
      std::string piece = format_power(letters[v], t->first[static_cast<std::size_t>(v)]);
      if (piece.empty()) continue;
      if (!mono.empty()) mono += "*";
      mono += piece;
    }
    parts.emplace_back(mono, t->second);
  }
  return format_sum(parts, names);
}

// ---------------------------------------------------------------------------

HeisenbergAlgebra::HeisenbergAlgebra(Parameters params) : params_(std::move(params)) {
  brackets_.reserve(2 * kCachedBrackets + 1);
  for (int n = -kCachedBrackets; n <= kCachedBrackets; ++n) brackets_.push_back(params_.bracket(n));
}

const Scalar& HeisenbergAlgebra::bracket(int n) const {
  if (n >= -kCachedBrackets && n <= kCachedBrackets) return brackets_[static_cast<std::size_t>(n + kCachedBrackets)];
  thread_local Scalar scratch;
  scratch = params_.bracket(n);
  return scratch;
}

void HeisenbergAlgebra::multiply_monomials(const Exponents& left, const Exponents& right, const Scalar& coeff,
                                           PBWElement& out) const {
  const auto [a, b, c] = left;
  const auto [i, j, k] = right;
  // z^c x^i y^j = p^(-ci + cj) x^i y^j z^c
  Scalar start = coeff;
  if (c != 0 && i != j) start *= params_.p.pow(c * (j - i));
  std::map<Exponents, Scalar> cur{{{i, j, k + c}, start}};
  // y x^i y^j z^k = q^i x^i y^(j+1) z^k + [i] p^j x^(i-1) y^j z^(k+1)
  for (int step = 0; step < b; ++step) {
    std::map<Exponents, Scalar> next;
    auto add = [&next](const Exponents& e, Scalar v) {
      auto [it, inserted] = next.try_emplace(e, v);
      if (!inserted) it->second += v;
    };
    for (const auto& [e, v] : cur) {
      const auto [ei, ej, ek] = e;
      add({ei, ej + 1, ek}, ei == 0 ? v : v * params_.q.pow(ei));
      const Scalar& br = bracket(ei);
      if (!br.is_zero()) add({ei - 1, ej, ek + 1}, ej == 0 ? v * br : v * br * params_.p.pow(ej));
    }
    cur = std::move(next);
  }
  for (const auto& [e, v] : cur) out.add_term({e[0] + a, e[1], e[2]}, v);
}

PBWElement HeisenbergAlgebra::multiply(const PBWElement& f, const PBWElement& g) const {
  PBWElement out;
  for (const auto& [ef, cf] : f.terms())
    for (const auto& [eg, cg] : g.terms()) multiply_monomials(ef, eg, cf * cg, out);
  return out;
}

PBWElement HeisenbergAlgebra::pow(const PBWElement& f, int n) const {
  if (n < 0) throw std::invalid_argument("negative power");
  PBWElement acc(Scalar(1)), base = f;
  while (n > 0) {
    if (n & 1) acc = multiply(acc, base);
    n >>= 1;
    if (n > 0) base = multiply(base, base);
  }
  return acc;
}

PBWElement HeisenbergAlgebra::quommutator(const PBWElement& f, const PBWElement& g, const Scalar& lambda) const {
  return multiply(f, g) - multiply(g, f).scaled(lambda);
}

PBWElement HeisenbergAlgebra::from_free(const FreeElement& e) const {
  PBWElement out;
  for (const auto& [w, c] : e.terms()) {
    PBWElement acc(c);
    for (const auto& l : w) {
      int sign = l.inverse ? -1 : 1;
      if (l.index == 1 && l.inverse) throw std::invalid_argument("y is not invertible");
      Exponents g{0, 0, 0};
      g[static_cast<std::size_t>(l.index)] = sign;
      acc = multiply(acc, PBWElement::monomial(g[0], g[1], g[2]));
    }
    out += acc;
  }
  return out;
}

FreeElement HeisenbergAlgebra::to_free(const PBWElement& f) {
  FreeElement out;
  for (const auto& [e, c] : f.terms()) {
    Word w;
    for (int v = 0; v < 3; ++v) {
      int n = e[static_cast<std::size_t>(v)];
      for (int r = 0; r < std::abs(n); ++r) w.push_back({v, n < 0});
    }
    out.add_term(w, c);
  }
  return out;
}

PBWElement HeisenbergAlgebra::theta() const {
  return multiply(y(), x()).scaled(Scalar(1) - params_.p * params_.q) - z();
}

PBWElement HeisenbergAlgebra::omega(int r, int s) const {
  if (r <= 0 || s <= 0 || std::gcd(r, s) != 1) throw std::invalid_argument("omega needs positive coprime r, s");
  PBWElement base = quommutator(y(), x(), params_.p.inverse());
  return multiply(pow(base, r), pow(z(), s));
}

PBWElement HeisenbergAlgebra::ident1_closed(int n) const {
  return PBWElement::monomial(n, 1, 0, params_.q.pow(n)) + PBWElement::monomial(n - 1, 0, 1, bracket(n));
}

PBWElement HeisenbergAlgebra::ident2_closed(int n) const {
  // z y^(n-1) = p^(n-1) y^(n-1) z
  return PBWElement::monomial(1, n, 0, params_.q.pow(n)) +
         PBWElement::monomial(0, n - 1, 1, bracket(n) * params_.p.pow(n - 1));
}

std::vector<FreeElement> HeisenbergAlgebra::relations() const {
  const Letter lx{0}, ly{1}, lz{2};
  auto w = [](Word word, const Scalar& c = 1) { return FreeElement::word(std::move(word), c); };
  return {
      w({ly, lx}) - w({lx, ly}, params_.q) - w({lz}),
      w({lz, lx}) - w({lx, lz}, params_.p.inverse()),
      w({lz, ly}) - w({ly, lz}, params_.p),
  };
}

// ---------------------------------------------------------------------------

CheckEntry verify_ident(const HeisenbergAlgebra& alg, int n, Ident which) {
  std::string name = which == Ident::one ? "ident1" : "ident2";
  std::string anchor = which == Ident::one ? "y x^n = q^n x^n y + [n] x^(n-1) z" : "y^n x = q^n x y^n + [n] z y^(n-1)";
  return run_check("identities", name + " n=" + std::to_string(n), anchor, alg.params().label,
                   [&]() -> std::optional<std::string> {
                     if (n < 1) throw std::invalid_argument("n must be positive");
                     PBWElement lhs, rhs;
                     if (which == Ident::one) {
                       lhs = alg.y();
                       for (int k = 0; k < n; ++k) lhs = alg.multiply(lhs, alg.x());
                       rhs = alg.ident1_closed(n);
                     } else {
                       lhs = alg.x();
                       for (int k = 0; k < n; ++k) lhs = alg.multiply(alg.y(), lhs);
                       rhs = alg.ident2_closed(n);
                     }
                     PBWElement diff = lhs - rhs;
                     if (diff.is_zero()) return std::nullopt;
                     return diff.to_string(alg.params().names);
                   });
}

namespace {

bool vanishes(const PBWElement& f, const std::optional<Specialization>& spec) {
  if (!spec) return f.is_zero();
  return std::all_of(f.terms().begin(), f.terms().end(),
                     [&](const auto& t) { return is_zero(specialize(t.second, *spec)); });
}

}  // namespace

bool is_central(const HeisenbergAlgebra& alg, const PBWElement& f, const std::optional<Specialization>& spec) {
  for (const auto& g : {alg.x(), alg.y(), alg.z()})
    if (!vanishes(alg.commutator(f, g), spec)) return false;
  return true;
}

bool check_normal(const HeisenbergAlgebra& alg, const PBWElement& f, const ScalarTwist& twist) {
  const std::pair<PBWElement, Scalar> gens[] = {{alg.x(), twist.x}, {alg.y(), twist.y}, {alg.z(), twist.z}};
  for (const auto& [g, c] : gens)
    if (!(alg.multiply(f, g) == alg.multiply(g, f).scaled(c))) return false;
  return true;
}

// ---------------------------------------------------------------------------

PBWElement apply_morphism(const AlgebraMorphism& phi, const PBWElement& f) {
  HeisenbergAlgebra target(phi.target);
  PBWElement out;
  for (const auto& [e, c] : f.terms()) {
    if (e[0] < 0 || e[2] < 0) throw std::invalid_argument("morphisms act on H, not its localization");
    PBWElement term = target.multiply(target.multiply(target.pow(phi.x, e[0]), target.pow(phi.y, e[1])),
                                      target.pow(phi.z, e[2]));
    out += term.scaled(c);
  }
  return out;
}

std::vector<PBWElement> morphism_residuals(const AlgebraMorphism& phi) {
  HeisenbergAlgebra target(phi.target);
  const Scalar& p = phi.source.p;
  const Scalar& q = phi.source.q;
  auto m = [&](const PBWElement& a, const PBWElement& b) { return target.multiply(a, b); };
  return {
      m(phi.y, phi.x) - m(phi.x, phi.y).scaled(q) - phi.z,
      m(phi.z, phi.x) - m(phi.x, phi.z).scaled(p.inverse()),
      m(phi.z, phi.y) - m(phi.y, phi.z).scaled(p),
  };
}

bool verify_morphism(const AlgebraMorphism& phi) {
  auto res = morphism_residuals(phi);
  return std::all_of(res.begin(), res.end(), [](const PBWElement& r) { return r.is_zero(); });
}

AlgebraMorphism compose(const AlgebraMorphism& second, const AlgebraMorphism& first) {
  return {second.name + " o " + first.name, first.source, second.target, apply_morphism(second, first.x),
          apply_morphism(second, first.y), apply_morphism(second, first.z)};
}

AlgebraMorphism identity_morphism(const Parameters& params) {
  HeisenbergAlgebra h(params);
  return {"identity", params, params, h.x(), h.y(), h.z()};
}

AlgebraMorphism inversion_morphism(const Parameters& params) {
  HeisenbergAlgebra h(params);
  return {"inversion", params, params.inverted(), h.y(), h.x(), h.z().scaled(-params.q)};
}

AlgebraMorphism swap_morphism(const Parameters& params) {
  Parameters target = params.swapped();
  HeisenbergAlgebra h(target);
  Scalar c = Scalar::i() * params.sqrt_p;
  return {"swap", params, target, h.y().scaled(c), h.x().scaled(c), -h.theta()};
}

AlgebraMorphism tau_involution() {
  Parameters params = Parameters::equal();
  HeisenbergAlgebra h(params);
  return {"tau", params, params, h.y().scaled(params.sqrt_q), h.x().scaled(params.sqrt_q), h.theta()};
}

// ---------------------------------------------------------------------------

std::vector<PBWElement> downup_residuals(const HeisenbergAlgebra& alg, const Scalar& alpha, const Scalar& beta) {
  auto m = [&](std::initializer_list<PBWElement> fs) {
    PBWElement acc(Scalar(1));
    for (const auto& f : fs) acc = alg.multiply(acc, f);
    return acc;
  };
  const PBWElement x = alg.x(), y = alg.y();
  return {
      m({y, x, x}) - m({x, y, x}).scaled(alpha) - m({x, x, y}).scaled(beta),
      m({y, y, x}) - m({y, x, y}).scaled(alpha) - m({x, y, y}).scaled(beta),
  };
}

bool verify_downup(const HeisenbergAlgebra& alg) {
  const Scalar pinv = alg.params().p.inverse();
  auto res = downup_residuals(alg, pinv + alg.params().q, -pinv * alg.params().q);
  return res[0].is_zero() && res[1].is_zero();
}

int twist_degree(const Exponents& e) { return e[0] + e[1] + 2 * e[2]; }

PBWElement zhang_twist_product(const HeisenbergAlgebra& alg, const PBWElement& f, const PBWElement& g) {
  const Scalar& root = alg.params().sqrt_p;
  PBWElement out;
  for (const auto& [ef, cf] : f.terms()) {
    int n = twist_degree(ef);
    // tau^n(x^i y^j z^k) = sqrt(p)^(n(i - j)) x^i y^j z^k
    PBWElement twisted;
    for (const auto& [eg, cg] : g.terms()) twisted.add_term(eg, cg * root.pow(n * (eg[0] - eg[1])));
    out += alg.multiply(PBWElement::monomial(ef[0], ef[1], ef[2], cf), twisted);
  }
  return out;
}

std::vector<PBWElement> zhang_twist_residuals(const HeisenbergAlgebra& alg) {
  auto star = [&](const PBWElement& a, const PBWElement& b) { return zhang_twist_product(alg, a, b); };
  const PBWElement x = alg.x(), y = alg.y(), z = alg.z();
  const Scalar pq = alg.params().p * alg.params().q;
  return {
      star(z, x) - star(x, z),
      star(z, y) - star(y, z),
      star(y, x) - star(x, y).scaled(pq) - z.scaled(alg.params().sqrt_p),
  };
}

bool root_of_unity_centrality(const HeisenbergAlgebra& alg, int n, int m, const Quotient& spec) {
  if (n < 1 || m < 1) throw std::invalid_argument("orders must be positive");
  Specialization s = spec;
  return is_central(alg, alg.pow(alg.z(), n), s) && is_central(alg, alg.pow(alg.x(), m * n), s) &&
         is_central(alg, alg.pow(alg.y(), m * n), s);
}

}  // namespace heisenweyl
