#pragma once

#include <complex>
#include <map>
#include <string>
#include <vector>

#include <Eigen/Dense>

#include "heisenweyl/freealg.hpp"
#include "heisenweyl/localize.hpp"
#include "heisenweyl/report.hpp"

namespace heisenweyl {

// --- Fock representation of the n-fold tensor power of A_p(r,s) -------------

/// sum c_m xi^m over m in N^n, coefficients in the one-parameter field.
class FockVector {
 public:
  using Key = std::vector<int>;
  using TermMap = std::map<Key, Scalar>;

  FockVector() = default;
  static FockVector basis(const Key& m, const Scalar& c = 1);

  const TermMap& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  Scalar coefficient(const Key& m) const;
  void add_term(const Key& m, const Scalar& c);

  FockVector& operator+=(const FockVector& o);
  friend FockVector operator+(FockVector a, const FockVector& b) { return a += b; }
  FockVector scaled(const Scalar& c) const;

  friend bool operator==(const FockVector&, const FockVector&) = default;

  std::string to_string(const VariableNames& names = {}) const;

 private:
  TermMap terms_;
};

struct FockConfig {
  int n = 1;
  int r = 1;
  int s = 1;
  /// Sentinel: act by z_i = p^{+m_i} instead of p^{-m_i}.
  bool perturb_z = false;

  Parameters params() const { return Parameters::one_param(r, s); }
};

/// x1, y1, z1, w1, x2, ... with z_i and w_i invertible.
Alphabet fock_alphabet(int n);

/// x_i xi^m = xi^(m+e_i), y_i xi^m = [m_i] xi^(m-e_i), z_i^{+-1} = p^{-+m_i},
/// w_i^{+-1} = q^{-+m_i}. op is a word sum over fock_alphabet(cfg.n); words
/// act right to left.
FockVector fock_apply(const FreeElement& op, const FockVector& v, const FockConfig& cfg);
FockVector fock_apply(std::string_view op, const FockVector& v, const FockConfig& cfg);

/// Named defining relations of A_p^n(r,s) as operator expressions, plus the
/// closed forms of y_i x_i and x_i y_i they imply.
std::vector<std::pair<std::string, FreeElement>> tensor_relation_operators(const FockConfig& cfg);
/// [y_i x_j, y_j x_i] - delta_ij (z_j w_i^-1 - z_i w_j^-1) as an operator.
FreeElement cross_identity_operator(const FockConfig& cfg, int i, int j);
/// Same bracket minus p (1-pq)^-1 (z_j w_i^-1 - z_i w_j^-1).
FreeElement cross_identity_corrected_operator(const FockConfig& cfg, int i, int j);

/// One entry per defining relation, applied to all xi^m with |m| <= degree_bound.
std::vector<CheckEntry> verify_fock_relations(const FockConfig& cfg, int degree_bound);
/// One entry per (i, j) for the cross identity, literal or corrected.
std::vector<CheckEntry> verify_fock_cross_identity(const FockConfig& cfg, int degree_bound, bool corrected);

/// Constant coefficient of y_1^{m_1} ... y_n^{m_n} . xi^m.
Scalar fock_descent(const std::vector<int>& m, const FockConfig& cfg);

// --- truncated oscillator -------------------------------------------------------

struct OscillatorMatrices {
  int dimension = 0;
  std::complex<double> p;
  std::complex<double> q;
  Eigen::MatrixXcd a;
  Eigen::MatrixXcd a_plus;
  /// diag(p^-k)
  Eigen::MatrixXcd p_powN;
  /// diag(q^k)
  Eigen::MatrixXcd q_powN;
  /// diag(k)
  Eigen::MatrixXcd number;
};

/// a e_k = sqrt([k]) e_(k-1), a+ e_k = sqrt([k+1]) e_(k+1) on C^N.
/// Throws std::invalid_argument unless N >= 3 and p, q > 0.
OscillatorMatrices build_oscillator(int N, double p, double q);

struct OscillatorResidual {
  std::string relation;
  /// max |R_ij| over the checked columns
  double absolute = 0;
  /// max |R_ij| / max(1, sum of |term_ij|) over the checked columns
  double relative = 0;
  int columns = 0;
};

/// aa+ - q a+a - p^-N, aa+ - p^-1 a+a - q^N, N a+ - a+ N - a+, N a - a N + a,
/// on columns e_0 .. e_(N-2).
std::vector<OscillatorResidual> oscillator_residuals(const OscillatorMatrices& m);
/// With p = tau^r, q = tau^s and L = p^-N: (aa+ - p^-1 a+a)^r - L^-s,
/// aa+ - q a+a - L, L a+ - p^-1 a+ L, L a - p a L on columns e_0 .. e_(N-1-r).
std::vector<OscillatorResidual> oscillator_power_residuals(int N, double tau, int r, int s);
std::vector<CheckEntry> verify_oscillator(const OscillatorMatrices& m, double tol);

// --- the module M = B/I ------------------------------------------------------

/// sum c_k v_k over k in Z.
class ZModuleVector {
 public:
  using TermMap = std::map<int, Scalar>;

  ZModuleVector() = default;
  static ZModuleVector basis(int k, const Scalar& c = 1);

  const TermMap& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  Scalar coefficient(int k) const;
  void add_term(int k, const Scalar& c);

  ZModuleVector& operator+=(const ZModuleVector& o);
  ZModuleVector& operator-=(const ZModuleVector& o);
  friend ZModuleVector operator+(ZModuleVector a, const ZModuleVector& b) { return a += b; }
  friend ZModuleVector operator-(ZModuleVector a, const ZModuleVector& b) { return a -= b; }
  ZModuleVector scaled(const Scalar& c) const;

  friend bool operator==(const ZModuleVector&, const ZModuleVector&) = default;

  std::string to_string(const VariableNames& names = {}) const;

 private:
  TermMap terms_;
};

/// x (invertible) and D = z^-1 y.
Alphabet bmodule_alphabet();

/// D v_k coefficient: p^(k-1) [k]. For k <= -1 this is -p^-1 q^k [-k].
Scalar bmodule_d_coefficient(int k, const Parameters& params = Parameters::generic());
/// x^i v_k = v_(k+i), D v_k = p^(k-1) [k] v_(k-1).
ZModuleVector bmodule_apply(const FreeElement& op, const ZModuleVector& v,
                            const Parameters& params = Parameters::generic());
ZModuleVector bmodule_apply(std::string_view op, const ZModuleVector& v,
                            const Parameters& params = Parameters::generic());
ZModuleVector bmodule_x(const ZModuleVector& v, int power = 1);
ZModuleVector bmodule_d(const ZModuleVector& v, const Parameters& params = Parameters::generic());

/// D x - pq x D - 1 applied to v_k for |k| <= K.
std::vector<CheckEntry> verify_bmodule(int K, const Parameters& params = Parameters::generic());

struct DescentResult {
  /// Power of x applied first.
  int shift = 0;
  /// Number of D applications afterwards.
  int steps = 0;
  /// The final vector is witness * v_0.
  Scalar witness;
};

/// Shifts the support into N with x^M, then applies D until only v_0 is left.
/// Throws std::invalid_argument on the zero vector.
DescentResult bmodule_descent(const ZModuleVector& v, const Parameters& params = Parameters::generic());

/// L_n acting on M. The operator comes from the normal form of z^-1 x^(n+1) y
/// in the localization rewritten in the x, D basis; it equals p^(n+1) x^(n+1) D.
ZModuleVector virasoro_on_bmodule(int n, const ZModuleVector& v, const Parameters& params = Parameters::generic());
/// p^(n-m) L_n L_m - q^(m-n) L_m L_n - [m-n] L_(m+n) on v_k for |k| <= K.
bool verify_virasoro_action(int n, int m, int K, const Parameters& params = Parameters::generic());

}  // namespace heisenweyl
