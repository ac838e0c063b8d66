#include "heisenweyl/gwa.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

#include "heisenweyl/format.hpp"

namespace heisenweyl {

// --- BasePoly ----------------------------------------------------------------

BasePoly::BasePoly(const Scalar& c, std::size_t nvars) {
  if (!c.is_zero()) terms_.emplace(Key(nvars, 0), c);
}

BasePoly BasePoly::monomial(const Key& exponents, const Scalar& c) {
  BasePoly out;
  out.add_term(exponents, c);
  return out;
}

BasePoly BasePoly::variable(std::size_t index, std::size_t nvars, int power) {
  Key e(nvars, 0);
  e.at(index) = power;
  return monomial(e);
}

void BasePoly::add_term(const Key& e, const Scalar& c) {
  if (c.is_zero()) return;
  auto [it, inserted] = terms_.emplace(e, c);
  if (inserted) return;
  it->second += c;
  if (it->second.is_zero()) terms_.erase(it);
}

BasePoly BasePoly::operator-() const {
  BasePoly out = *this;
  for (auto& [e, c] : out.terms_) c = -c;
  return out;
}

BasePoly& BasePoly::operator+=(const BasePoly& o) {
  for (const auto& [e, c] : o.terms_) add_term(e, c);
  return *this;
}

BasePoly& BasePoly::operator-=(const BasePoly& o) {
  for (const auto& [e, c] : o.terms_) add_term(e, -c);
  return *this;
}

BasePoly operator*(const BasePoly& a, const BasePoly& b) {
  BasePoly out;
  for (const auto& [ea, ca] : a.terms_)
    for (const auto& [eb, cb] : b.terms_) {
      BasePoly::Key e = ea;
      for (std::size_t v = 0; v < e.size(); ++v) e[v] += eb.at(v);
      out.add_term(e, ca * cb);
    }
  return out;
}

BasePoly BasePoly::scaled(const Scalar& c) const {
  if (c.is_zero()) return {};
  BasePoly out = *this;
  for (auto& [e, v] : out.terms_) v *= c;
  return out;
}

BasePoly BasePoly::inverse() const {
  if (terms_.size() != 1) throw std::invalid_argument("only single-term base elements are invertible");
  const auto& [e, c] = *terms_.begin();
  Key neg = e;
  for (auto& v : neg) v = -v;
  return monomial(neg, c.inverse());
}

BasePoly BasePoly::pow(int n) const {
  if (n < 0) return inverse().pow(-n);
  if (is_zero()) {
    if (n == 0) throw std::invalid_argument("0^0 has no ring size");
    return {};
  }
  BasePoly base = *this, acc(Scalar(1), nvars());
  while (n > 0) {
    if (n & 1) acc = acc * base;
    n >>= 1;
    if (n > 0) base = base * base;
  }
  return acc;
}

namespace {

std::string base_monomial(const BaseRing& ring, const BasePoly::Key& e) {
  std::string out;
  for (std::size_t v = 0; v < e.size(); ++v) {
    std::string piece = format_power(ring.names.at(v), e[v]);
    if (piece.empty()) continue;
    if (!out.empty()) out += "*";
    out += piece;
  }
  return out;
}

}  // namespace

std::string BasePoly::to_string(const BaseRing& ring, const VariableNames& names) const {
  std::vector<std::pair<std::string, Scalar>> parts;
  for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) parts.emplace_back(base_monomial(ring, it->first), it->second);
  return format_sum(parts, names);
}

// --- BaseAuto ----------------------------------------------------------------

BaseAuto::BaseAuto(BaseRing ring, std::vector<BasePoly> images, std::vector<BasePoly> inverse_images)
    : ring_(std::move(ring)), images_(std::move(images)), inverse_images_(std::move(inverse_images)) {
  const std::size_t n = ring_.size();
  if (images_.size() != n || inverse_images_.size() != n)
    throw std::invalid_argument("automorphism needs one image per base generator");
  for (std::size_t g = 0; g < n; ++g) {
    if (ring_.laurent.at(g) && (images_[g].size() != 1 || inverse_images_[g].size() != 1))
      throw std::invalid_argument("Laurent generator " + ring_.names[g] + " must map to a unit monomial");
    BasePoly var = BasePoly::variable(g, n);
    if (substitute(images_[g], inverse_images_) != var || substitute(inverse_images_[g], images_) != var)
      throw std::invalid_argument("inverse images do not invert the automorphism on " + ring_.names[g]);
  }
}

BasePoly BaseAuto::substitute(const BasePoly& f, const std::vector<BasePoly>& images) const {
  const std::size_t n = ring_.size();
  BasePoly out;
  for (const auto& [e, c] : f.terms()) {
    BasePoly term(c, n);
    for (std::size_t g = 0; g < n; ++g)
      if (e.at(g) != 0) term = term * images[g].pow(e[g]);
    out += term;
  }
  return out;
}

BasePoly BaseAuto::apply_power(const BasePoly& f, int n) const {
  BasePoly out = f;
  for (int k = 0; k < n; ++k) out = apply(out);
  for (int k = 0; k > n; --k) out = apply_inverse(out);
  return out;
}

std::optional<std::string> check_gwa_data(const GWAData& data) {
  const std::size_t n = data.components(), nv = data.base.size();
  if (data.a.size() != n) return "number of a_i differs from number of automorphisms";
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      if (i == j) continue;
      if (data.rho[i].apply(data.a[j]) != data.a[j])
        return "rho_" + std::to_string(i + 1) + " does not fix a_" + std::to_string(j + 1);
      for (std::size_t g = 0; g < nv; ++g) {
        BasePoly v = BasePoly::variable(g, nv);
        if (data.rho[i].apply(data.rho[j].apply(v)) != data.rho[j].apply(data.rho[i].apply(v)))
          return "rho_" + std::to_string(i + 1) + " and rho_" + std::to_string(j + 1) + " do not commute";
      }
    }
  return std::nullopt;
}

// --- GWAElement --------------------------------------------------------------

GWAElement GWAElement::term(const Degree& d, const BasePoly& c) {
  GWAElement out;
  out.add_term(d, c);
  return out;
}

GWAElement GWAElement::base(const BasePoly& c, std::size_t components) { return term(Degree(components, 0), c); }

BasePoly GWAElement::coefficient(const Degree& d) const {
  auto it = terms_.find(d);
  return it == terms_.end() ? BasePoly() : it->second;
}

void GWAElement::add_term(const Degree& d, const BasePoly& c) {
  if (c.is_zero()) return;
  auto [it, inserted] = terms_.emplace(d, c);
  if (inserted) return;
  it->second += c;
  if (it->second.is_zero()) terms_.erase(it);
}

GWAElement GWAElement::operator-() const {
  GWAElement out = *this;
  for (auto& [d, c] : out.terms_) c = -c;
  return out;
}

GWAElement& GWAElement::operator+=(const GWAElement& o) {
  for (const auto& [d, c] : o.terms_) add_term(d, c);
  return *this;
}

GWAElement& GWAElement::operator-=(const GWAElement& o) {
  for (const auto& [d, c] : o.terms_) add_term(d, -c);
  return *this;
}

GWAElement GWAElement::scaled(const Scalar& c) const {
  if (c.is_zero()) return {};
  GWAElement out = *this;
  for (auto& [d, v] : out.terms_) v = v.scaled(c);
  return out;
}

std::string GWAElement::to_string(const GWAData& data) const {
  const bool single = data.components() == 1;
  auto letter = [&](char base, std::size_t i) { return std::string(1, base) + (single ? "" : std::to_string(i + 1)); };
  std::vector<std::pair<std::string, Scalar>> parts;
  for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
    std::string x_part;
    for (std::size_t i = 0; i < it->first.size(); ++i) {
      int d = it->first[i];
      std::string piece = d > 0 ? format_power(letter('x', i), d) : format_power(letter('y', i), -d);
      if (piece.empty()) continue;
      if (!x_part.empty()) x_part += "*";
      x_part += piece;
    }
    const auto& coeff = it->second.terms();
    for (auto c = coeff.rbegin(); c != coeff.rend(); ++c) {
      std::string mono = base_monomial(data.base, c->first);
      if (!mono.empty() && !x_part.empty()) mono += "*";
      parts.emplace_back(mono + x_part, c->second);
    }
  }
  return format_sum(parts, data.params.names);
}

// --- multiplication ------------------------------------------------------------

namespace {

// x^m y^k or y^k x^m in one component, as f * X^(m-k).
BasePoly fold_component(const BaseAuto& rho, const BasePoly& a, int left, int right, std::size_t nvars) {
  BasePoly f(Scalar(1), nvars);
  if (left > 0 && right < 0) {
    // x^m y^k = rho^m(a) x^(m-1) y^(k-1)
    int m = left, k = -right;
    for (int l = 0; l < std::min(m, k); ++l) f = f * rho.apply_power(a, m - l);
  } else if (left < 0 && right > 0) {
    // y^k x^m = rho^-(k-1)(a) y^(k-1) x^(m-1)
    int k = -left, m = right;
    for (int l = 0; l < std::min(m, k); ++l) f = f * rho.apply_power(a, -(k - 1 - l));
  }
  return f;
}

}  // namespace

GWAElement gwa_multiply(const GWAElement& u, const GWAElement& v, const GWAData& data) {
  const std::size_t n = data.components(), nv = data.base.size();
  GWAElement out;
  for (const auto& [d, b] : u.terms())
    for (const auto& [e, c] : v.terms()) {
      // (b X^d)(c X^e) = b rho^d(c) X^d X^e, then fold each component.
      BasePoly coeff = c;
      for (std::size_t i = 0; i < n; ++i) coeff = data.rho[i].apply_power(coeff, d[i]);
      coeff = b * coeff;
      GWAElement::Degree total(n);
      // prod_i f_i X_i^(k_i): f_i is moved left past X_1^k_1 ... X_(i-1)^k_(i-1).
      std::vector<int> shift(n, 0);
      for (std::size_t i = 0; i < n; ++i) {
        BasePoly f = fold_component(data.rho[i], data.a[i], d[i], e[i], nv);
        for (std::size_t j = 0; j < i; ++j) f = data.rho[j].apply_power(f, total[j]);
        coeff = coeff * f;
        total[i] = d[i] + e[i];
      }
      out.add_term(total, coeff);
    }
  return out;
}

// --- GWA -----------------------------------------------------------------------

GWA::GWA(GWAData data) : data_(std::move(data)) {
  if (auto problem = check_gwa_data(data_)) throw std::invalid_argument("invalid GWA data: " + *problem);
}

GWAElement GWA::one() const { return constant(1); }

GWAElement GWA::constant(const Scalar& c) const { return base(BasePoly(c, data_.base.size())); }

GWAElement GWA::base(const BasePoly& c) const { return GWAElement::base(c, components()); }

GWAElement GWA::base_variable(std::size_t index, int power) const {
  if (power < 0 && !data_.base.laurent.at(index))
    throw std::invalid_argument(data_.base.names[index] + " is not invertible");
  return base(BasePoly::variable(index, data_.base.size(), power));
}

GWAElement GWA::x(std::size_t i) const {
  GWAElement::Degree d(components(), 0);
  d.at(i) = 1;
  return GWAElement::term(d, BasePoly(Scalar(1), data_.base.size()));
}

GWAElement GWA::y(std::size_t i) const {
  GWAElement::Degree d(components(), 0);
  d.at(i) = -1;
  return GWAElement::term(d, BasePoly(Scalar(1), data_.base.size()));
}

GWAElement GWA::product(std::initializer_list<GWAElement> factors) const {
  GWAElement acc = one();
  for (const auto& f : factors) acc = multiply(acc, f);
  return acc;
}

GWAElement GWA::pow(const GWAElement& u, int n) const {
  if (n < 0) return pow(base_inverse(u), -n);
  GWAElement acc = one();
  for (int k = 0; k < n; ++k) acc = multiply(acc, u);
  return acc;
}

GWAElement GWA::commutator(const GWAElement& u, const GWAElement& v) const { return multiply(u, v) - multiply(v, u); }

GWAElement GWA::base_inverse(const GWAElement& u) const {
  if (u.terms().size() != 1) throw std::invalid_argument("not a unit of the base ring");
  const auto& [d, c] = *u.terms().begin();
  if (std::any_of(d.begin(), d.end(), [](int v) { return v != 0; }))
    throw std::invalid_argument("not a unit of the base ring");
  if (c.size() == 1)
    for (std::size_t g = 0; g < data_.base.size(); ++g)
      if (c.terms().begin()->first[g] < 0 && !data_.base.laurent[g])
        throw std::invalid_argument("not a unit of the base ring");
  BasePoly inv = c.inverse();
  for (std::size_t g = 0; g < data_.base.size(); ++g)
    if (inv.terms().begin()->first[g] < 0 && !data_.base.laurent[g])
      throw std::invalid_argument("not a unit of the base ring");
  return base(inv);
}

void GWA::define(const std::string& name, GWAElement value, std::optional<GWAElement> inverse) {
  for (auto& entry : named_)
    if (entry.name == name) {
      entry.value = std::move(value);
      entry.inverse = std::move(inverse);
      return;
    }
  named_.push_back({name, std::move(value), std::move(inverse)});
}

const GWAElement& GWA::named(const std::string& name) const {
  for (const auto& entry : named_)
    if (entry.name == name) return entry.value;
  throw std::out_of_range("unknown generator '" + name + "'");
}

Alphabet GWA::alphabet() const {
  std::vector<Generator> gens;
  for (const auto& entry : named_) gens.push_back({entry.name, entry.inverse.has_value()});
  return Alphabet(std::move(gens));
}

GWAElement GWA::from_free(const FreeElement& e) const {
  GWAElement out;
  for (const auto& [word, c] : e.terms()) {
    GWAElement term = constant(c);
    for (const Letter& l : word) {
      const auto& entry = named_.at(static_cast<std::size_t>(l.index));
      if (l.inverse && !entry.inverse) throw std::invalid_argument(entry.name + " is not invertible");
      term = multiply(term, l.inverse ? *entry.inverse : entry.value);
    }
    out += term;
  }
  return out;
}

GWAElement GWA::parse(std::string_view text) const { return from_free(parse_expression(text, alphabet(), data_.params)); }

// --- constructions ---------------------------------------------------------------

namespace {

std::optional<std::string> witness(const GWA& g, const GWAElement& residual) {
  if (residual.is_zero()) return std::nullopt;
  return residual.to_string(g.data());
}

std::string rs_label(int r, int s) { return "r=" + std::to_string(r) + ",s=" + std::to_string(s); }

void require_coprime(int r, int s) {
  if (r <= 0 || s <= 0 || std::gcd(r, s) != 1) throw std::invalid_argument("r and s must be positive and coprime");
}

}  // namespace

GWA hpq_as_gwa(const Parameters& params) {
  const Scalar& p = params.p;
  const Scalar& q = params.q;
  BaseRing ring{{"c", "z"}, {false, false}};
  BasePoly c = BasePoly::variable(0, 2), z = BasePoly::variable(1, 2);
  BaseAuto rho(ring, {(c - z).scaled(q.inverse()), z.scaled(p)},
               {c.scaled(q) + z.scaled(p.inverse()), z.scaled(p.inverse())});
  GWA g(GWAData{"hpq", params, ring, {rho}, {c}});
  g.define("x", g.x());
  g.define("y", g.y());
  g.define("z", g.base_variable(1));
  g.define("c", g.base_variable(0));
  return g;
}

GWAElement pbw_to_gwa(const GWA& gwa, const PBWElement& f) {
  GWAElement out;
  for (const auto& [e, c] : f.terms()) {
    if (e[0] < 0 || e[1] < 0 || e[2] < 0) throw std::invalid_argument("pbw_to_gwa needs a polynomial element");
    out += gwa.product({gwa.constant(c), gwa.pow(gwa.x(), e[0]), gwa.pow(gwa.y(), e[1]), gwa.pow(gwa.named("z"), e[2])});
  }
  return out;
}

std::vector<CheckEntry> verify_hpq_gwa() {
  GWA g = hpq_as_gwa();
  HeisenbergAlgebra h;
  std::vector<CheckEntry> out;
  const Scalar p = Scalar::p(), q = Scalar::q();
  GWAElement x = g.x(), y = g.y(), z = g.named("z");
  out.push_back(run_check("gwa", "hpq yx - qxy = z", "yx - q xy = z", "generic", [&] {
    return witness(g, g.multiply(y, x) - g.multiply(x, y).scaled(q) - z);
  }));
  out.push_back(run_check("gwa", "hpq zx = p^-1 xz", "zx - p^-1 xz = 0", "generic", [&] {
    return witness(g, g.multiply(z, x) - g.multiply(x, z).scaled(p.inverse()));
  }));
  out.push_back(run_check("gwa", "hpq zy = p yz", "zy - p yz = 0", "generic", [&] {
    return witness(g, g.multiply(z, y) - g.multiply(y, z).scaled(p));
  }));
  out.push_back(run_check("gwa", "hpq functor on monomials", "phi(f g) = phi(f) phi(g), deg <= 3", "generic",
                          [&]() -> std::optional<std::string> {
                            std::vector<PBWElement> monos;
                            for (int i = 0; i <= 3; ++i)
                              for (int j = 0; i + j <= 3; ++j)
                                for (int k = 0; i + j + k <= 3; ++k) monos.push_back(PBWElement::monomial(i, j, k));
                            for (const auto& f : monos)
                              for (const auto& m : monos) {
                                GWAElement lhs = pbw_to_gwa(g, h.multiply(f, m));
                                GWAElement rhs = g.multiply(pbw_to_gwa(g, f), pbw_to_gwa(g, m));
                                if (lhs != rhs)
                                  return f.to_string() + " * " + m.to_string() + ": " + (lhs - rhs).to_string(g.data());
                              }
                            return std::nullopt;
                          }));
  return out;
}

GWA apq_indep_gwa() {
  Parameters params;
  const Scalar& p = params.p;
  const Scalar& q = params.q;
  BaseRing ring{{"z", "w"}, {true, true}};
  BasePoly z = BasePoly::variable(0, 2), w = BasePoly::variable(1, 2), w_inv = BasePoly::variable(1, 2, -1);
  BaseAuto rho(ring, {z.scaled(p), w.scaled(q)}, {z.scaled(p.inverse()), w.scaled(q.inverse())});
  Scalar beta = (Scalar(1) - p * q).inverse();
  BasePoly a = (z - w_inv.scaled(p * q)).scaled(beta);
  GWA g(GWAData{"apq", params, ring, {rho}, {a}});
  g.define("x", g.x());
  g.define("y", g.y());
  g.define("z", g.base_variable(0), g.base_variable(0, -1));
  g.define("w", g.base_variable(1), g.base_variable(1, -1));
  return g;
}

std::vector<CheckEntry> verify_apq_gwa() {
  GWA g = apq_indep_gwa();
  const Scalar& p = g.data().params.p;
  const Scalar& q = g.data().params.q;
  GWAElement x = g.x(), y = g.y(), z = g.named("z"), w = g.named("w"), w_inv = g.base_variable(1, -1);
  std::vector<CheckEntry> out;
  auto add = [&](const std::string& name, const std::string& anchor, auto residual) {
    out.push_back(run_check("gwa", "apq " + name, anchor, "generic", [&] { return witness(g, residual()); }));
  };
  add("zx", "zx - p^-1 xz = 0", [&] { return g.multiply(z, x) - g.multiply(x, z).scaled(p.inverse()); });
  add("zy", "zy - p yz = 0", [&] { return g.multiply(z, y) - g.multiply(y, z).scaled(p); });
  add("wx", "wx - q^-1 xw = 0", [&] { return g.multiply(w, x) - g.multiply(x, w).scaled(q.inverse()); });
  add("wy", "wy - q yw = 0", [&] { return g.multiply(w, y) - g.multiply(y, w).scaled(q); });
  add("yx - qxy", "yx - q xy = z", [&] { return g.multiply(y, x) - g.multiply(x, y).scaled(q) - z; });
  add("yx - p^-1xy", "yx - p^-1 xy = w^-1",
      [&] { return g.multiply(y, x) - g.multiply(x, y).scaled(p.inverse()) - w_inv; });
  return out;
}

GWA aprs_as_gwa(int r, int s) {
  require_coprime(r, s);
  Parameters params = Parameters::one_param(r, s);
  const Scalar t = LaurentPoly::monomial({2, 0});
  const Scalar& p = params.p;
  const Scalar& q = params.q;
  BaseRing ring{{"u"}, {true}};
  BasePoly u = BasePoly::variable(0, 1);
  BaseAuto rho(ring, {u.scaled(t)}, {u.scaled(t.inverse())});
  Scalar beta = (Scalar(1) - p * q).inverse();
  BasePoly a = (BasePoly::variable(0, 1, r) - BasePoly::variable(0, 1, -s).scaled(p * q)).scaled(beta);
  GWA g(GWAData{"aprs:" + std::to_string(r) + "," + std::to_string(s), params, ring, {rho}, {a}});
  g.define("x", g.x());
  g.define("y", g.y());
  g.define("z", g.base_variable(0, r), g.base_variable(0, -r));
  g.define("w", g.base_variable(0, s), g.base_variable(0, -s));
  g.define("u", g.base_variable(0), g.base_variable(0, -1));
  return g;
}

std::vector<CheckEntry> verify_aprs_gwa(int r, int s) {
  GWA g = aprs_as_gwa(r, s);
  const Parameters& params = g.data().params;
  const Scalar& p = params.p;
  const Scalar& q = params.q;
  const Scalar beta = (Scalar(1) - p * q).inverse();
  GWAElement x = g.x(), y = g.y(), z = g.named("z"), w = g.named("w");
  GWAElement z_inv = g.base_inverse(z), w_inv = g.base_inverse(w);
  GWAElement yx = g.multiply(y, x), xy = g.multiply(x, y);
  GWAElement e = yx - xy.scaled(p.inverse());
  std::vector<CheckEntry> out;
  auto add = [&](const std::string& name, const std::string& anchor, auto residual) {
    out.push_back(
        run_check("gwa", "aprs " + name + " " + rs_label(r, s), anchor, params.label, [&] { return witness(g, residual()); }));
  };
  add("zx", "zx - p^-1 xz = 0", [&] { return g.multiply(z, x) - g.multiply(x, z).scaled(p.inverse()); });
  add("zy", "zy - p yz = 0", [&] { return g.multiply(z, y) - g.multiply(y, z).scaled(p); });
  add("yx - qxy", "yx - q xy = z", [&] { return yx - xy.scaled(q) - z; });
  add("power", "(yx - p^-1 xy)^r = z^-s", [&] { return g.pow(e, r) - g.pow(z_inv, s); });
  add("yx - p^-1xy", "yx - p^-1 xy = w^-1", [&] { return e - w_inv; });
  add("yx", "yx = (1-pq)^-1 (z - pq w^-1)", [&] { return yx - (z - w_inv.scaled(p * q)).scaled(beta); });
  add("xy", "xy = p (1-pq)^-1 (z - w^-1)", [&] { return xy - (z - w_inv).scaled(p * beta); });
  add("wx", "wx - q^-1 xw = 0", [&] { return g.multiply(w, x) - g.multiply(x, w).scaled(q.inverse()); });
  add("wy", "wy - q yw = 0", [&] { return g.multiply(w, y) - g.multiply(y, w).scaled(q); });
  add("wz", "wz - zw = 0", [&] { return g.commutator(w, z); });
  add("w definition", "w = (yx - p^-1 xy)^(r-1) z^s", [&] { return g.multiply(g.pow(e, r - 1), g.pow(z, s)) - w; });
  add("Omega", "(yx - p^-1 xy)^r z^s = 1", [&] { return g.multiply(g.pow(e, r), g.pow(z, s)) - g.one(); });
  return out;
}

GWA tensor_power(int n, int r, int s) {
  require_coprime(r, s);
  if (n < 1) throw std::invalid_argument("tensor power needs n >= 1");
  Parameters params = Parameters::one_param(r, s);
  const Scalar t = LaurentPoly::monomial({2, 0});
  const Scalar beta = (Scalar(1) - params.p * params.q).inverse();
  const auto nv = static_cast<std::size_t>(n);
  BaseRing ring;
  for (int i = 1; i <= n; ++i) {
    ring.names.push_back("u" + std::to_string(i));
    ring.laurent.push_back(true);
  }
  std::vector<BaseAuto> rho;
  std::vector<BasePoly> a;
  for (std::size_t i = 0; i < nv; ++i) {
    std::vector<BasePoly> images, inverse_images;
    for (std::size_t j = 0; j < nv; ++j) {
      BasePoly u = BasePoly::variable(j, nv);
      images.push_back(i == j ? u.scaled(t) : u);
      inverse_images.push_back(i == j ? u.scaled(t.inverse()) : u);
    }
    rho.emplace_back(ring, images, inverse_images);
    a.push_back((BasePoly::variable(i, nv, r) - BasePoly::variable(i, nv, -s).scaled(params.p * params.q)).scaled(beta));
  }
  GWA g(GWAData{"tensor:" + std::to_string(n) + ":" + std::to_string(r) + "," + std::to_string(s), params, ring,
                std::move(rho), std::move(a)});
  for (std::size_t i = 0; i < nv; ++i) {
    const std::string k = std::to_string(i + 1);
    g.define("x" + k, g.x(i));
    g.define("y" + k, g.y(i));
    g.define("z" + k, g.base_variable(i, r), g.base_variable(i, -r));
    g.define("w" + k, g.base_variable(i, s), g.base_variable(i, -s));
    g.define("u" + k, g.base_variable(i), g.base_variable(i, -1));
  }
  return g;
}

namespace {

// Recovers r, s from the base degrees of z1 and w1.
std::pair<int, int> tensor_rs(const GWA& g) {
  auto degree = [&](const std::string& name) { return g.named(name).terms().begin()->second.terms().begin()->first[0]; };
  return {degree("z1"), degree("w1")};
}

}  // namespace

GWAElement tensor_z(const GWA& g, std::size_t i, int power) {
  return g.base_variable(i, tensor_rs(g).first * power);
}

GWAElement tensor_w(const GWA& g, std::size_t i, int power) {
  return g.base_variable(i, tensor_rs(g).second * power);
}

namespace {

GWAElement cross_lhs(const GWA& g, std::size_t i, std::size_t j) {
  return g.commutator(g.multiply(g.y(i), g.x(j)), g.multiply(g.y(j), g.x(i)));
}

GWAElement cross_rhs_core(const GWA& g, std::size_t i, std::size_t j) {
  return g.multiply(tensor_z(g, j), tensor_w(g, i, -1)) - g.multiply(tensor_z(g, i), tensor_w(g, j, -1));
}

}  // namespace

GWAElement cross_identity_residual(const GWA& g, std::size_t i, std::size_t j) {
  GWAElement out = cross_lhs(g, i, j);
  if (i == j) out -= cross_rhs_core(g, i, j);
  return out;
}

bool verify_cross_identity(std::size_t i, std::size_t j, const GWA& g) {
  return cross_identity_residual(g, i, j).is_zero();
}

GWAElement cross_identity_corrected_residual(const GWA& g, std::size_t i, std::size_t j) {
  const Scalar& p = g.data().params.p;
  const Scalar& q = g.data().params.q;
  return cross_lhs(g, i, j) - cross_rhs_core(g, i, j).scaled(p / (Scalar(1) - p * q));
}

std::vector<CheckEntry> verify_tensor_relations(const GWA& g, int r, int s) {
  const Parameters& params = g.data().params;
  const Scalar& p = params.p;
  const Scalar& q = params.q;
  const std::size_t n = g.components();
  std::vector<CheckEntry> out;
  auto add = [&](const std::string& name, const std::string& anchor, auto residual) {
    out.push_back(run_check("gwa", "tensor n=" + std::to_string(n) + " " + name + " " + rs_label(r, s), anchor,
                            params.label, [&] { return witness(g, residual()); }));
  };
  auto pow_scalar = [](const Scalar& base, bool on) { return on ? base : Scalar(1); };
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      const std::string ij = std::to_string(i + 1) + std::to_string(j + 1);
      const bool same = i == j;
      GWAElement zi = tensor_z(g, i), wi = tensor_w(g, i), zj = tensor_z(g, j), wj = tensor_w(g, j);
      add("[x,x] " + ij, "[x_i, x_j] = 0", [&] { return g.commutator(g.x(i), g.x(j)); });
      add("[y,y] " + ij, "[y_i, y_j] = 0", [&] { return g.commutator(g.y(i), g.y(j)); });
      add("[z,z] " + ij, "[z_i, z_j] = 0", [&] { return g.commutator(zi, zj); });
      add("[w,w] " + ij, "[w_i, w_j] = 0", [&] { return g.commutator(wi, wj); });
      add("[z,w] " + ij, "[z_i, w_j] = 0", [&] { return g.commutator(zi, wj); });
      if (!same) add("[x,y] " + ij, "[x_i, y_j] = 0 (i != j)", [&] { return g.commutator(g.x(i), g.y(j)); });
      add("z x " + ij, "z_i x_j = p^-delta x_j z_i",
          [&] { return g.multiply(zi, g.x(j)) - g.multiply(g.x(j), zi).scaled(pow_scalar(p.inverse(), same)); });
      add("z y " + ij, "z_i y_j = p^delta y_j z_i",
          [&] { return g.multiply(zi, g.y(j)) - g.multiply(g.y(j), zi).scaled(pow_scalar(p, same)); });
      add("w x " + ij, "w_i x_j = q^-delta x_j w_i",
          [&] { return g.multiply(wi, g.x(j)) - g.multiply(g.x(j), wi).scaled(pow_scalar(q.inverse(), same)); });
      add("w y " + ij, "w_i y_j = q^delta y_j w_i",
          [&] { return g.multiply(wi, g.y(j)) - g.multiply(g.y(j), wi).scaled(pow_scalar(q, same)); });
    }
  for (std::size_t i = 0; i < n; ++i) {
    const std::string k = std::to_string(i + 1);
    GWAElement yx = g.multiply(g.y(i), g.x(i)), xy = g.multiply(g.x(i), g.y(i));
    GWAElement e = yx - xy.scaled(p.inverse());
    add("yx - qxy " + k, "y_i x_i - q x_i y_i = z_i", [&] { return yx - xy.scaled(q) - tensor_z(g, i); });
    add("yx - p^-1xy " + k, "y_i x_i - p^-1 x_i y_i = w_i^-1", [&] { return e - tensor_w(g, i, -1); });
    add("w definition " + k, "w_i = (y_i x_i - p^-1 x_i y_i)^(r-1) z_i^s",
        [&] { return g.multiply(g.pow(e, r - 1), tensor_z(g, i, s)) - tensor_w(g, i); });
  }
  return out;
}

}  // namespace heisenweyl
