#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "heisenweyl/freealg.hpp"
#include "heisenweyl/hpq.hpp"
#include "heisenweyl/report.hpp"

namespace heisenweyl {

/// Commutative base ring k[g_1, ..., g_n] where each generator is either
/// polynomial or Laurent (invertible).
struct BaseRing {
  std::vector<std::string> names;
  std::vector<bool> laurent;
  std::size_t size() const { return names.size(); }
};

/// Element of a BaseRing: exponent vector -> coefficient.
class BasePoly {
 public:
  using Key = std::vector<int>;
  using TermMap = std::map<Key, Scalar>;

  BasePoly() = default;
  BasePoly(const Scalar& c, std::size_t nvars);
  static BasePoly monomial(const Key& exponents, const Scalar& c = 1);
  static BasePoly variable(std::size_t index, std::size_t nvars, int power = 1);

  const TermMap& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  std::size_t size() const { return terms_.size(); }
  /// Number of base generators; 0 for the zero element built by default.
  std::size_t nvars() const { return terms_.empty() ? 0 : terms_.begin()->first.size(); }

  void add_term(const Key& e, const Scalar& c);

  BasePoly operator-() const;
  BasePoly& operator+=(const BasePoly& o);
  BasePoly& operator-=(const BasePoly& o);
  friend BasePoly operator+(BasePoly a, const BasePoly& b) { return a += b; }
  friend BasePoly operator-(BasePoly a, const BasePoly& b) { return a -= b; }
  friend BasePoly operator*(const BasePoly& a, const BasePoly& b);
  BasePoly scaled(const Scalar& c) const;
  /// Nonnegative powers for any element; negative powers for unit monomials.
  BasePoly pow(int n) const;
  /// Inverse of a single term. Throws std::invalid_argument otherwise.
  BasePoly inverse() const;

  friend bool operator==(const BasePoly&, const BasePoly&) = default;

  std::string to_string(const BaseRing& ring, const VariableNames& names = {}) const;

 private:
  TermMap terms_;
};

/// Ring automorphism given by generator images and explicit inverse images.
class BaseAuto {
 public:
  /// Throws std::invalid_argument unless the inverse images undo the images
  /// and Laurent generators map to unit monomials.
  BaseAuto(BaseRing ring, std::vector<BasePoly> images, std::vector<BasePoly> inverse_images);

  const std::vector<BasePoly>& images() const { return images_; }
  const std::vector<BasePoly>& inverse_images() const { return inverse_images_; }

  BasePoly apply(const BasePoly& f) const { return substitute(f, images_); }
  BasePoly apply_inverse(const BasePoly& f) const { return substitute(f, inverse_images_); }
  /// rho^n(f) for any integer n.
  BasePoly apply_power(const BasePoly& f, int n) const;
  BaseAuto inverse() const { return BaseAuto(ring_, inverse_images_, images_); }

 private:
  BasePoly substitute(const BasePoly& f, const std::vector<BasePoly>& images) const;

  BaseRing ring_;
  std::vector<BasePoly> images_;
  std::vector<BasePoly> inverse_images_;
};

/// Generalized Weyl algebra D(rho_1..rho_n, a_1..a_n).
struct GWAData {
  std::string name;
  Parameters params;
  BaseRing base;
  std::vector<BaseAuto> rho;
  std::vector<BasePoly> a;

  std::size_t components() const { return rho.size(); }
};

/// Checks that automorphisms of distinct components commute on generators
/// and that rho_i fixes a_j for i != j. Returns a description of the first
/// violation, or nullopt.
std::optional<std::string> check_gwa_data(const GWAData& data);

/// sum_d c_d X^d where X^d = prod_i x_i^{d_i} (d_i > 0) or y_i^{-d_i} (d_i < 0).
class GWAElement {
 public:
  using Degree = std::vector<int>;
  using TermMap = std::map<Degree, BasePoly>;

  GWAElement() = default;
  static GWAElement term(const Degree& d, const BasePoly& c);
  static GWAElement base(const BasePoly& c, std::size_t components);

  const TermMap& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  BasePoly coefficient(const Degree& d) const;

  void add_term(const Degree& d, const BasePoly& c);

  GWAElement operator-() const;
  GWAElement& operator+=(const GWAElement& o);
  GWAElement& operator-=(const GWAElement& o);
  friend GWAElement operator+(GWAElement a, const GWAElement& b) { return a += b; }
  friend GWAElement operator-(GWAElement a, const GWAElement& b) { return a -= b; }
  GWAElement scaled(const Scalar& c) const;

  friend bool operator==(const GWAElement&, const GWAElement&) = default;

  std::string to_string(const GWAData& data) const;

 private:
  TermMap terms_;
};

/// Product using x d = rho(d) x, y d = rho^-1(d) y, yx = a, xy = rho(a).
GWAElement gwa_multiply(const GWAElement& u, const GWAElement& v, const GWAData& data);

/// Convenience wrapper around one GWAData.
class GWA {
 public:
  explicit GWA(GWAData data);

  const GWAData& data() const { return data_; }
  std::size_t components() const { return data_.components(); }

  GWAElement one() const;
  GWAElement constant(const Scalar& c) const;
  GWAElement base(const BasePoly& c) const;
  /// Base generator g^power.
  GWAElement base_variable(std::size_t index, int power = 1) const;
  /// x_i (component index i from 0).
  GWAElement x(std::size_t i = 0) const;
  GWAElement y(std::size_t i = 0) const;

  GWAElement multiply(const GWAElement& u, const GWAElement& v) const { return gwa_multiply(u, v, data_); }
  GWAElement product(std::initializer_list<GWAElement> factors) const;
  GWAElement pow(const GWAElement& u, int n) const;
  GWAElement commutator(const GWAElement& u, const GWAElement& v) const;
  /// Inverse of a unit c * monomial in the base.
  GWAElement base_inverse(const GWAElement& u) const;

  /// Registers a parser name such as "z" or "w1". Units also get name^-1.
  void define(const std::string& name, GWAElement value, std::optional<GWAElement> inverse = std::nullopt);
  /// Throws std::out_of_range for unknown names.
  const GWAElement& named(const std::string& name) const;
  /// Generators in definition order; the rank order matters only for
  /// printing free words.
  Alphabet alphabet() const;
  GWAElement from_free(const FreeElement& e) const;
  GWAElement parse(std::string_view text) const;

 private:
  struct Named {
    std::string name;
    GWAElement value;
    std::optional<GWAElement> inverse;
  };
  GWAData data_;
  std::vector<Named> named_;
};

/// H_{p,q} as D(rho, c) with D = k[c, z], rho(z) = pz, rho(c) = q^-1 (c - z).
GWA hpq_as_gwa(const Parameters& params = Parameters::generic());
/// Image of a PBW element under x -> x, y -> y, z -> z.
GWAElement pbw_to_gwa(const GWA& gwa, const PBWElement& f);
std::vector<CheckEntry> verify_hpq_gwa();

/// A_{p,q}: D = k[z^{+-1}, omega^{+-1}], rho(z) = pz, rho(omega) = q omega,
/// a = (1-pq)^-1 (z - pq omega^-1).
GWA apq_indep_gwa();
std::vector<CheckEntry> verify_apq_gwa();

/// A_p(r,s) over p = t^r, q = t^s: D = k[u^{+-1}], rho(u) = tu, z = u^r,
/// w = u^s, a = (1-pq)^-1 (u^r - pq u^-s).
GWA aprs_as_gwa(int r, int s);
std::vector<CheckEntry> verify_aprs_gwa(int r, int s);

/// n-fold tensor power of A_p(r,s): D = k[u_1^{+-1}, ..., u_n^{+-1}],
/// rho_i(u_j) = t^{delta_ij} u_j.
GWA tensor_power(int n, int r, int s);
/// z_i = u_i^r, w_i = u_i^s (0-based component index).
GWAElement tensor_z(const GWA& g, std::size_t i, int power = 1);
GWAElement tensor_w(const GWA& g, std::size_t i, int power = 1);

/// [y_i x_j, y_j x_i] - delta_ij (z_j w_i^-1 - z_i w_j^-1), the identity as
/// displayed with the Kronecker delta.
GWAElement cross_identity_residual(const GWA& g, std::size_t i, std::size_t j);
bool verify_cross_identity(std::size_t i, std::size_t j, const GWA& g);
/// [y_i x_j, y_j x_i] - p (1-pq)^-1 (z_j w_i^-1 - z_i w_j^-1), which holds
/// for every pair i, j.
GWAElement cross_identity_corrected_residual(const GWA& g, std::size_t i, std::size_t j);
/// Relations of A_p^n(r,s) between generators with distinct or equal
/// indices (commutations, z/w twists, the two quadratic relations, and the
/// definition of w).
std::vector<CheckEntry> verify_tensor_relations(const GWA& g, int r, int s);

}  // namespace heisenweyl
