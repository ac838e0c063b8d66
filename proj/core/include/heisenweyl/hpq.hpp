#pragma once

#include <array>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "heisenweyl/freealg.hpp"
#include "heisenweyl/parameters.hpp"
#include "heisenweyl/report.hpp"
#include "heisenweyl/specialization.hpp"

namespace heisenweyl {

/// (i, j, k) for x^i y^j z^k. j >= 0 always; i and k may be negative in the
/// localization at powers of x and z.
using Exponents = std::array<int, 3>;

/// Sum of c_{ijk} x^i y^j z^k.
class PBWElement {
 public:
  using TermMap = std::map<Exponents, Scalar>;

  PBWElement() = default;
  PBWElement(const Scalar& c);  // NOLINT(google-explicit-constructor)
  static PBWElement monomial(int i, int j, int k, const Scalar& c = 1);

  const TermMap& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  std::size_t size() const { return terms_.size(); }
  Scalar coefficient(const Exponents& e) const;
  /// All exponents nonnegative (an element of H itself).
  bool is_polynomial() const;

  void add_term(const Exponents& e, const Scalar& c);

  PBWElement operator-() const;
  PBWElement& operator+=(const PBWElement& o);
  PBWElement& operator-=(const PBWElement& o);
  friend PBWElement operator+(PBWElement a, const PBWElement& b) { return a += b; }
  friend PBWElement operator-(PBWElement a, const PBWElement& b) { return a -= b; }
  PBWElement scaled(const Scalar& c) const;

  friend bool operator==(const PBWElement&, const PBWElement&) = default;

  /// Highest total degree first, e.g. "q^2*x^2*y + (q + p^-1)*x*z".
  std::string to_string(const VariableNames& names = {}) const;

 private:
  TermMap terms_;
};

/// H_{p,q} = k<x,y,z>/(yx - qxy - z, zx - p^-1 xz, zy - p yz) over the given
/// parameter values, with PBW basis x^i y^j z^k. Multiplication also covers
/// the localization at x and z (negative i, k).
class HeisenbergAlgebra {
 public:
  explicit HeisenbergAlgebra(Parameters params = Parameters::generic());

  const Parameters& params() const { return params_; }

  PBWElement x() const { return PBWElement::monomial(1, 0, 0); }
  PBWElement y() const { return PBWElement::monomial(0, 1, 0); }
  PBWElement z() const { return PBWElement::monomial(0, 0, 1); }

  /// [n]_{p,q} at this algebra's parameters; cached for small |n|.
  const Scalar& bracket(int n) const;

  PBWElement multiply(const PBWElement& f, const PBWElement& g) const;
  PBWElement pow(const PBWElement& f, int n) const;
  PBWElement commutator(const PBWElement& f, const PBWElement& g) const { return quommutator(f, g, 1); }
  /// fg - lambda gf
  PBWElement quommutator(const PBWElement& f, const PBWElement& g, const Scalar& lambda) const;

  /// Product of the letters of each word. Inverse letters x^-1, z^-1 are
  /// allowed; y^-1 is not.
  PBWElement from_free(const FreeElement& e) const;
  /// The image of a PBW element in the free algebra over {x, y, z}.
  static FreeElement to_free(const PBWElement& f);

  /// theta = (1 - pq) yx - z
  PBWElement theta() const;
  /// Omega = (yx - p^-1 xy)^r z^s
  PBWElement omega(int r, int s) const;

  /// q^n x^n y + [n] x^(n-1) z
  PBWElement ident1_closed(int n) const;
  /// q^n x y^n + [n] z y^(n-1)
  PBWElement ident2_closed(int n) const;

  /// The three defining relations, each as an element of the free algebra.
  std::vector<FreeElement> relations() const;

 private:
  // Adds c * (x^a y^b z^c) * (x^i y^j z^k) to out.
  void multiply_monomials(const Exponents& left, const Exponents& right, const Scalar& coeff, PBWElement& out) const;

  Parameters params_;
  static constexpr int kCachedBrackets = 64;
  std::vector<Scalar> brackets_;  // index n + kCachedBrackets
};

enum class Ident { one, two };

/// Compares y x^n (ident one) or y^n x (ident two) computed by repeated
/// generator multiplication against the closed form.
CheckEntry verify_ident(const HeisenbergAlgebra& alg, int n, Ident which);

/// Whether f commutes with x, y, z; with a specialization, the commutator
/// coefficients are mapped first.
bool is_central(const HeisenbergAlgebra& alg, const PBWElement& f,
                const std::optional<Specialization>& spec = std::nullopt);

/// Scalar images of x, y, z describing g -> twist(g).
struct ScalarTwist {
  Scalar x = 1;
  Scalar y = 1;
  Scalar z = 1;
};

/// Whether f g = twist(g) f for g in {x, y, z}.
bool check_normal(const HeisenbergAlgebra& alg, const PBWElement& f, const ScalarTwist& twist);

/// Homomorphism H_source -> H_target given by images of x, y, z.
struct AlgebraMorphism {
  std::string name;
  Parameters source;
  Parameters target;
  PBWElement x;
  PBWElement y;
  PBWElement z;
};

/// phi(f) computed in the target algebra.
PBWElement apply_morphism(const AlgebraMorphism& phi, const PBWElement& f);
/// Images of the source relations; all zero iff phi is well defined.
std::vector<PBWElement> morphism_residuals(const AlgebraMorphism& phi);
bool verify_morphism(const AlgebraMorphism& phi);
/// second o first
AlgebraMorphism compose(const AlgebraMorphism& second, const AlgebraMorphism& first);

AlgebraMorphism identity_morphism(const Parameters& params = Parameters::generic());
/// H_{p,q} -> H_{p^-1,q^-1}: x -> y, y -> x, z -> -q z
AlgebraMorphism inversion_morphism(const Parameters& params = Parameters::generic());
/// H_{p,q} -> H_{q,p}: x -> i sqrt(p) y, y -> i sqrt(p) x, z -> -theta'
AlgebraMorphism swap_morphism(const Parameters& params = Parameters::generic());
/// On H_{q,q}: x -> sqrt(q) y, y -> sqrt(q) x, z -> theta. Its square is
/// x -> qx, y -> qy, z -> q^2 z.
AlgebraMorphism tau_involution();

/// The two cubic relations y x^2 - alpha xyx - beta x^2 y and
/// y^2 x - alpha yxy - beta xy^2, evaluated in H.
std::vector<PBWElement> downup_residuals(const HeisenbergAlgebra& alg, const Scalar& alpha, const Scalar& beta);
/// Both relations vanish with alpha = p^-1 + q, beta = -p^-1 q.
bool verify_downup(const HeisenbergAlgebra& alg);

/// Total degree with x, y of degree one and z of degree two.
int twist_degree(const Exponents& e);
/// sum_n f_n tau^n(g) where f_n is the degree-n part of f and
/// tau(x) = sqrt(p) x, tau(y) = sqrt(p)^-1 y, tau(z) = z.
PBWElement zhang_twist_product(const HeisenbergAlgebra& alg, const PBWElement& f, const PBWElement& g);
/// z*x - x*z, z*y - y*z, y*x - pq x*y - sqrt(p) z under the twisted product.
std::vector<PBWElement> zhang_twist_residuals(const HeisenbergAlgebra& alg);

/// z^n, x^(mn), y^(mn) central after mapping to the quotient ring.
bool root_of_unity_centrality(const HeisenbergAlgebra& alg, int n, int m, const Quotient& spec);

}  // namespace heisenweyl
