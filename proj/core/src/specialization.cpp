#include "heisenweyl/specialization.hpp"

#include <cmath>
#include <numeric>
#include <sstream>

namespace heisenweyl {

namespace {

UnivariatePoly u_power(int e) { return UnivariatePoly::monomial(e); }

std::optional<UnivariatePoly> even_root(int n, int e) {
  int r = ((e % n) + n) % n;
  if (r % 2 == 0) return u_power(r / 2);
  if ((r + n) % 2 == 0) return u_power((r + n) / 2);
  return std::nullopt;
}

}  // namespace

Quotient Quotient::cyclotomic(int n, int ep, int eq) {
  if (n < 1) throw std::invalid_argument("cyclotomic order must be positive");
  Quotient out;
  out.modulus = heisenweyl::cyclotomic(n);
  out.p_image = u_power(((ep % n) + n) % n).mod(out.modulus);
  out.q_image = u_power(((eq % n) + n) % n).mod(out.modulus);
  if (auto r = even_root(n, ep)) out.sqrt_p_image = r->mod(out.modulus);
  if (auto r = even_root(n, eq)) out.sqrt_q_image = r->mod(out.modulus);
  return out;
}

Residue::Residue(UnivariatePoly value, UnivariatePoly modulus)
    : value_(value.mod(modulus)), modulus_(std::move(modulus)) {}

Residue Residue::inverse() const {
  auto [g, s] = half_extended_gcd(value_, modulus_);
  if (g.degree() != 0) throw SpecializationError("not invertible in the quotient ring", value_.to_string("u"));
  return {s, modulus_};
}

Residue Residue::pow(int n) const {
  if (n < 0) return inverse().pow(-n);
  Residue acc(UnivariatePoly(GaussianRational(1)), modulus_), base = *this;
  while (n > 0) {
    if (n & 1) acc = acc * base;
    n >>= 1;
    if (n) base = base * base;
  }
  return acc;
}

void validate(const Specialization& spec) {
  if (auto* o = std::get_if<OneParam>(&spec)) {
    if (o->r <= 0 || o->s <= 0 || std::gcd(o->r, o->s) != 1)
      throw std::invalid_argument("oneparam requires positive coprime r, s");
  } else if (auto* n = std::get_if<Numeric>(&spec)) {
    if (std::abs(n->p) == 0.0 || std::abs(n->q) == 0.0) throw std::invalid_argument("numeric p, q must be nonzero");
  } else {
    const auto& qt = std::get<Quotient>(spec);
    if (qt.modulus.degree() < 1 || !qt.modulus.leading().is_one())
      throw std::invalid_argument("quotient modulus must be monic and nonconstant");
    Residue(qt.p_image, qt.modulus).inverse();
    Residue(qt.q_image, qt.modulus).inverse();
  }
}

Scalar specialize(const Scalar& s, const OneParam& spec) {
  auto map = [&](const LaurentPoly& f) {
    LaurentPoly out;
    for (const auto& [e, c] : f.terms())
      out += LaurentPoly::monomial({spec.r * e.p2 + spec.s * e.q2, 0}, c);
    return out;
  };
  LaurentPoly den = map(s.den());
  if (den.is_zero())
    throw SpecializationError("denominator vanishes under oneparam:" + std::to_string(spec.r) + "," +
                                  std::to_string(spec.s),
                              s.den().to_string());
  return Scalar::fraction(map(s.num()), den);
}

std::complex<double> specialize(const Scalar& s, const Numeric& spec) {
  const std::complex<double> sp = std::sqrt(spec.p), sq = std::sqrt(spec.q);
  // Even doubled exponents use integer powers of p, q directly to avoid sqrt rounding.
  auto power = [](std::complex<double> full, std::complex<double> half, int doubled) {
    return doubled % 2 == 0 ? std::pow(full, doubled / 2) : std::pow(half, doubled);
  };
  double scale = 0;
  auto eval = [&](const LaurentPoly& f) {
    std::complex<double> acc = 0;
    scale = 0;
    for (const auto& [e, c] : f.terms()) {
      std::complex<double> term =
          std::complex<double>(c.re().get_d(), c.im().get_d()) * power(spec.p, sp, e.p2) * power(spec.q, sq, e.q2);
      acc += term;
      scale += std::abs(term);
    }
    return acc;
  };
  std::complex<double> den = eval(s.den());
  if (std::abs(den) <= 1e-12 * scale)
    throw SpecializationError("denominator vanishes numerically", s.den().to_string());
  return eval(s.num()) / den;
}

Residue specialize(const Scalar& s, const Quotient& spec) {
  const Residue one(UnivariatePoly(GaussianRational(1)), spec.modulus);
  auto image_of = [&](int doubled, const UnivariatePoly& full, const std::optional<UnivariatePoly>& half,
                      const char* name) {
    if (doubled % 2 == 0) return Residue(full, spec.modulus).pow(doubled / 2);
    if (!half) throw SpecializationError("no square root available in the quotient ring", std::string(name) + "^(1/2)");
    return Residue(*half, spec.modulus).pow(doubled);
  };
  auto eval = [&](const LaurentPoly& f) {
    Residue acc(UnivariatePoly{}, spec.modulus);
    for (const auto& [e, c] : f.terms()) {
      Residue m = image_of(e.p2, spec.p_image, spec.sqrt_p_image, "p") *
                  image_of(e.q2, spec.q_image, spec.sqrt_q_image, "q");
      acc = acc + Residue(m.value().scaled(c), spec.modulus);
    }
    return acc;
  };
  Residue den = eval(s.den());
  Residue num = eval(s.num());
  if (s.is_laurent()) return num;
  try {
    return num * den.inverse();
  } catch (const SpecializationError&) {
    throw SpecializationError("denominator vanishes in the quotient ring", s.den().to_string());
  }
}

SpecializedValue specialize(const Scalar& s, const Specialization& spec) {
  return std::visit([&](const auto& sp) -> SpecializedValue { return specialize(s, sp); }, spec);
}

bool is_zero(const SpecializedValue& v, double numeric_tolerance) {
  if (auto* s = std::get_if<Scalar>(&v)) return s->is_zero();
  if (auto* c = std::get_if<std::complex<double>>(&v)) return std::abs(*c) <= numeric_tolerance;
  return std::get<Residue>(v).is_zero();
}

std::string to_string(const SpecializedValue& v) {
  if (auto* s = std::get_if<Scalar>(&v)) return s->to_string({"t", "q"});
  if (auto* c = std::get_if<std::complex<double>>(&v)) {
    std::ostringstream os;
    os.precision(17);
    if (c->imag() == 0.0) os << c->real();
    else os << "(" << c->real() << (c->imag() < 0 ? "-" : "+") << std::abs(c->imag()) << "i)";
    return os.str();
  }
  return std::get<Residue>(v).to_string();
}

namespace {

std::vector<std::string> split(const std::string& s, char sep) {
  std::vector<std::string> out;
  std::string cur;
  std::istringstream is(s);
  while (std::getline(is, cur, sep)) out.push_back(cur);
  return out;
}

int to_int(const std::string& s) {
  std::size_t pos = 0;
  int v = std::stoi(s, &pos);
  if (pos != s.size()) throw std::invalid_argument("bad integer '" + s + "'");
  return v;
}

double to_double(const std::string& s) {
  std::size_t pos = 0;
  double v = std::stod(s, &pos);
  if (pos != s.size()) throw std::invalid_argument("bad number '" + s + "'");
  return v;
}

}  // namespace

Specialization parse_specialization(const std::string& text) {
  auto parts = split(text, ':');
  try {
    if (parts.size() == 2 && parts[0] == "oneparam") {
      auto rs = split(parts[1], ',');
      if (rs.size() != 2) throw std::invalid_argument("expected oneparam:R,S");
      Specialization spec = OneParam{to_int(rs[0]), to_int(rs[1])};
      validate(spec);
      return spec;
    }
    if (parts.size() == 3 && parts[0] == "cyclotomic") {
      auto e = split(parts[2], ',');
      if (e.size() != 2) throw std::invalid_argument("expected cyclotomic:N:EP,EQ");
      Specialization spec = Quotient::cyclotomic(to_int(parts[1]), to_int(e[0]), to_int(e[1]));
      validate(spec);
      return spec;
    }
    if (parts.size() == 2 && parts[0] == "numeric") {
      auto pq = split(parts[1], ',');
      if (pq.size() != 2) throw std::invalid_argument("expected numeric:P,Q");
      Specialization spec = Numeric{to_double(pq[0]), to_double(pq[1])};
      validate(spec);
      return spec;
    }
  } catch (const std::invalid_argument& e) {
    throw std::invalid_argument("invalid specialization '" + text + "': " + e.what());
  } catch (const std::out_of_range&) {
    throw std::invalid_argument("invalid specialization '" + text + "': number out of range");
  }
  throw std::invalid_argument("unknown specialization '" + text + "'");
}

std::string describe(const Specialization& spec) {
  if (auto* o = std::get_if<OneParam>(&spec)) return "oneparam:" + std::to_string(o->r) + "," + std::to_string(o->s);
  if (auto* n = std::get_if<Numeric>(&spec)) {
    std::ostringstream os;
    os << "numeric:" << n->p.real() << "," << n->q.real();
    return os.str();
  }
  const auto& q = std::get<Quotient>(spec);
  return "quotient:" + q.modulus.to_string("u") + ":p=" + q.p_image.to_string("u") + ",q=" + q.q_image.to_string("u");
}

}  // namespace heisenweyl
