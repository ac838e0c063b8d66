#pragma once

#include <map>
#include <optional>
#include <utility>
#include <vector>

#include "heisenweyl/hpq.hpp"

namespace heisenweyl {

/// Element of the localization of H at the Ore set generated by x and z,
/// in the basis x^i y^j z^k with i, k in Z and j >= 0.
using LocalElement = PBWElement;

/// True when f lies in the quantum torus k[x^{+-1}, z^{+-1}] (no y).
bool is_torus_element(const LocalElement& f);

/// H_{p,q} localized at x and z.
class LocalizedAlgebra {
 public:
  explicit LocalizedAlgebra(Parameters params = Parameters::generic()) : h_(std::move(params)) {}

  const HeisenbergAlgebra& base() const { return h_; }
  const Parameters& params() const { return h_.params(); }

  LocalElement x() const { return h_.x(); }
  LocalElement y() const { return h_.y(); }
  LocalElement z() const { return h_.z(); }
  LocalElement x_inv() const { return PBWElement::monomial(-1, 0, 0); }
  LocalElement z_inv() const { return PBWElement::monomial(0, 0, -1); }

  LocalElement multiply(const LocalElement& f, const LocalElement& g) const { return h_.multiply(f, g); }
  LocalElement product(std::initializer_list<LocalElement> factors) const;
  /// Integer powers; negative n requires a unit c x^i z^k.
  LocalElement pow(const LocalElement& f, int n) const;
  /// Inverse of a single term c x^i z^k. Throws std::invalid_argument otherwise.
  LocalElement inverse(const LocalElement& unit) const;

  /// L_n = z^-1 x^(n+1) y, whose normal form is p^n x^(n+1) y z^-1.
  LocalElement virasoro_L(int n) const;
  /// D = z^-1 y
  LocalElement weyl_D() const { return multiply(z_inv(), y()); }

  /// Coefficients c_{ij} with f = sum c_{ij} x^i D^j, if f lies in the
  /// subring generated by x^{+-1} and D.
  std::optional<std::map<std::pair<int, int>, Scalar>> b_coordinates(const LocalElement& f) const;

 private:
  HeisenbergAlgebra h_;
};

/// p^(n-m) L_n L_m - q^(m-n) L_m L_n - [m-n] L_(m+n); zero when the relation holds.
LocalElement virasoro_residual(const LocalizedAlgebra& alg, int n, int m);
bool verify_virasoro(const LocalizedAlgebra& alg, int n, int m);

/// With t = beta z x^-1 (beta = (1-pq)^-1), sigma(x) = qx, sigma(z) = p^-1 z,
/// and a = q^r z^s x^r: t z - sigma(z) t = 0, t x - sigma(x) t = z,
/// a^-1 x a = p^s x, a^-1 z a = p^-r z, and under p = t^r, q = t^s the
/// conjugation by a equals sigma^r on x and z.
std::vector<CheckEntry> verify_inner(int r, int s);

/// x (y - beta z x^-1) = (1-pq)^-1 q^-1 theta. Throws std::invalid_argument if pq = 1.
bool verify_theta_factorization(const LocalizedAlgebra& alg);
/// x^2 (y - t)^2 = lambda^2 q^-1 theta^2 with lambda = (1-pq)^-1 q^-1.
bool verify_theta_factorization_squared(const LocalizedAlgebra& alg);

/// D x - pq x D = 1
bool quantum_weyl_subring_check(const LocalizedAlgebra& alg);

/// Whether f lies in the left ideal I = B D, i.e. every x^i D^j term has j >= 1.
bool in_left_ideal(const LocalizedAlgebra& alg, const LocalElement& f);
/// Whether I mu is contained in I, tested as D mu in I.
bool idealizes(const LocalizedAlgebra& alg, const LocalElement& mu);
/// idealizes(x^n D) for 0 <= n <= bound.
bool idealizer_generator_check(const LocalizedAlgebra& alg, int bound = 8);

}  // namespace heisenweyl
