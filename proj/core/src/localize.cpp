#include "heisenweyl/localize.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace heisenweyl {

bool is_torus_element(const LocalElement& f) {
  return std::all_of(f.terms().begin(), f.terms().end(), [](const auto& t) { return t.first[1] == 0; });
}

LocalElement LocalizedAlgebra::product(std::initializer_list<LocalElement> factors) const {
  LocalElement acc(Scalar(1));
  for (const auto& f : factors) acc = multiply(acc, f);
  return acc;
}

LocalElement LocalizedAlgebra::inverse(const LocalElement& unit) const {
  if (unit.size() != 1) throw std::invalid_argument("only single terms are invertible");
  const auto& [e, c] = *unit.terms().begin();
  if (e[1] != 0) throw std::invalid_argument("y is not invertible");
  // (x^i z^k)^-1 = z^-k x^-i = p^(-ik) x^-i z^-k
  return PBWElement::monomial(-e[0], 0, -e[2], c.inverse() * params().p.pow(-e[0] * e[2]));
}

LocalElement LocalizedAlgebra::pow(const LocalElement& f, int n) const {
  if (n >= 0) return h_.pow(f, n);
  return h_.pow(inverse(f), -n);
}

LocalElement LocalizedAlgebra::virasoro_L(int n) const {
  return product({z_inv(), PBWElement::monomial(n + 1, 0, 0), y()});
}

std::optional<std::map<std::pair<int, int>, Scalar>> LocalizedAlgebra::b_coordinates(const LocalElement& f) const {
  // x^i D^j = c_j x^i y^j z^-j, so a term x^i y^j z^k belongs to B only if k = -j.
  std::map<int, Scalar> d_scale;
  std::map<std::pair<int, int>, Scalar> out;
  for (const auto& [e, c] : f.terms()) {
    if (e[2] != -e[1]) return std::nullopt;
    auto it = d_scale.find(e[1]);
    if (it == d_scale.end()) {
      LocalElement dj = h_.pow(weyl_D(), e[1]);
      it = d_scale.emplace(e[1], dj.coefficient({0, e[1], -e[1]})).first;
    }
    out.emplace(std::make_pair(e[0], e[1]), c / it->second);
  }
  return out;
}

// ---------------------------------------------------------------------------

LocalElement virasoro_residual(const LocalizedAlgebra& alg, int n, int m) {
  const Scalar& p = alg.params().p;
  const Scalar& q = alg.params().q;
  LocalElement ln = alg.virasoro_L(n), lm = alg.virasoro_L(m);
  return alg.multiply(ln, lm).scaled(p.pow(n - m)) - alg.multiply(lm, ln).scaled(q.pow(m - n)) -
         alg.virasoro_L(m + n).scaled(alg.base().bracket(m - n));
}

bool verify_virasoro(const LocalizedAlgebra& alg, int n, int m) { return virasoro_residual(alg, n, m).is_zero(); }

namespace {

std::optional<std::string> witness_if_nonzero(const LocalElement& residual, const Parameters& params) {
  if (residual.is_zero()) return std::nullopt;
  return residual.to_string(params.names);
}

}  // namespace

std::vector<CheckEntry> verify_inner(int r, int s) {
  if (r <= 0 || s <= 0 || std::gcd(r, s) != 1) throw std::invalid_argument("verify_inner needs positive coprime r, s");
  std::vector<CheckEntry> out;
  const std::string rs = "r=" + std::to_string(r) + ",s=" + std::to_string(s);

  LocalizedAlgebra gen;
  const Scalar& p = gen.params().p;
  const Scalar& q = gen.params().q;
  const Scalar beta = (Scalar(1) - p * q).inverse();
  const LocalElement t = gen.multiply(gen.z(), gen.x_inv()).scaled(beta);

  out.push_back(run_check("inner", "t z - sigma(z) t", "t z - p^-1 z t = 0, t = beta z x^-1", "generic", [&] {
    return witness_if_nonzero(gen.multiply(t, gen.z()) - gen.multiply(gen.z(), t).scaled(p.inverse()), gen.params());
  }));
  out.push_back(run_check("inner", "t x - sigma(x) t", "t x - q x t = z, t = beta z x^-1", "generic", [&] {
    return witness_if_nonzero(gen.multiply(t, gen.x()) - gen.multiply(gen.x(), t).scaled(q) - gen.z(), gen.params());
  }));

  auto conjugation = [&](const LocalizedAlgebra& alg, const std::string& mode, const Scalar& x_factor,
                         const Scalar& z_factor, const std::string& label) {
    const Parameters& pr = alg.params();
    LocalElement a = alg.multiply(PBWElement::monomial(0, 0, s, pr.q.pow(r)), PBWElement::monomial(r, 0, 0));
    LocalElement a_inv = alg.inverse(a);
    out.push_back(run_check("inner", "a a^-1 = 1 " + rs, "a = q^r z^s x^r", mode, [&] {
      return witness_if_nonzero(alg.multiply(a, a_inv) - PBWElement(1), pr);
    }));
    out.push_back(run_check("inner", "a^-1 x a " + rs, "a^-1 x a = " + label + " x", mode, [&] {
      return witness_if_nonzero(alg.product({a_inv, alg.x(), a}) - alg.x().scaled(x_factor), pr);
    }));
    out.push_back(run_check("inner", "a^-1 z a " + rs, "a^-1 z a = p^-r z", mode, [&] {
      return witness_if_nonzero(alg.product({a_inv, alg.z(), a}) - alg.z().scaled(z_factor), pr);
    }));
  };
  conjugation(gen, "generic", p.pow(s), p.pow(-r), "p^s");
  // With p = t^r, q = t^s: p^s = q^r, so conjugation by a is sigma^r.
  LocalizedAlgebra dep(Parameters::one_param(r, s));
  conjugation(dep, dep.params().label, dep.params().q.pow(r), dep.params().p.pow(-r), "q^r");
  return out;
}

bool verify_theta_factorization(const LocalizedAlgebra& alg) {
  const Scalar& p = alg.params().p;
  const Scalar& q = alg.params().q;
  Scalar one_minus_pq = Scalar(1) - p * q;
  if (one_minus_pq.is_zero()) throw std::invalid_argument("theta factorization needs pq != 1");
  LocalElement t = alg.multiply(alg.z(), alg.x_inv()).scaled(one_minus_pq.inverse());
  LocalElement lhs = alg.multiply(alg.x(), alg.y() - t);
  return lhs == alg.base().theta().scaled((one_minus_pq * q).inverse());
}

bool verify_theta_factorization_squared(const LocalizedAlgebra& alg) {
  const Scalar& p = alg.params().p;
  const Scalar& q = alg.params().q;
  Scalar one_minus_pq = Scalar(1) - p * q;
  if (one_minus_pq.is_zero()) throw std::invalid_argument("theta factorization needs pq != 1");
  LocalElement t = alg.multiply(alg.z(), alg.x_inv()).scaled(one_minus_pq.inverse());
  LocalElement ymt = alg.y() - t;
  LocalElement lhs = alg.product({alg.pow(alg.x(), 2), ymt, ymt});
  Scalar lambda = (one_minus_pq * q).inverse();
  LocalElement theta = alg.base().theta();
  return lhs == alg.multiply(theta, theta).scaled(lambda * lambda * q.inverse());
}

bool quantum_weyl_subring_check(const LocalizedAlgebra& alg) {
  const Scalar pq = alg.params().p * alg.params().q;
  LocalElement d = alg.weyl_D();
  return alg.multiply(d, alg.x()) - alg.multiply(alg.x(), d).scaled(pq) == PBWElement(1);
}

bool in_left_ideal(const LocalizedAlgebra& alg, const LocalElement& f) {
  auto coords = alg.b_coordinates(f);
  if (!coords) return false;
  return std::all_of(coords->begin(), coords->end(), [](const auto& t) { return t.first.second >= 1; });
}

bool idealizes(const LocalizedAlgebra& alg, const LocalElement& mu) {
  return in_left_ideal(alg, alg.multiply(alg.weyl_D(), mu));
}

bool idealizer_generator_check(const LocalizedAlgebra& alg, int bound) {
  LocalElement d = alg.weyl_D();
  for (int n = 0; n <= bound; ++n)
    if (!idealizes(alg, alg.multiply(PBWElement::monomial(n, 0, 0), d))) return false;
  return true;
}

}  // namespace heisenweyl
