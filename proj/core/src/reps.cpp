#include "heisenweyl/reps.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <sstream>
#include <stdexcept>

#include "heisenweyl/format.hpp"
#include "heisenweyl/specialization.hpp"

namespace heisenweyl {

// --- FockVector --------------------------------------------------------------

FockVector FockVector::basis(const Key& m, const Scalar& c) {
  FockVector out;
  out.add_term(m, c);
  return out;
}

Scalar FockVector::coefficient(const Key& m) const {
  auto it = terms_.find(m);
  return it == terms_.end() ? Scalar() : it->second;
}

void FockVector::add_term(const Key& m, const Scalar& c) {
  if (c.is_zero()) return;
  auto [it, inserted] = terms_.emplace(m, c);
  if (inserted) return;
  it->second += c;
  if (it->second.is_zero()) terms_.erase(it);
}

FockVector& FockVector::operator+=(const FockVector& o) {
  for (const auto& [m, c] : o.terms_) add_term(m, c);
  return *this;
}

FockVector FockVector::scaled(const Scalar& c) const {
  FockVector out;
  for (const auto& [m, v] : terms_) out.add_term(m, v * c);
  return out;
}

std::string FockVector::to_string(const VariableNames& names) const {
  std::vector<std::pair<std::string, Scalar>> parts;
  for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
    std::string mono;
    for (std::size_t i = 0; i < it->first.size(); ++i) {
      std::string piece = format_power("xi" + std::to_string(i + 1), it->first[i]);
      if (piece.empty()) continue;
      if (!mono.empty()) mono += "*";
      mono += piece;
    }
    parts.emplace_back(mono, it->second);
  }
  return format_sum(parts, names);
}

// --- Fock action -------------------------------------------------------------

Alphabet fock_alphabet(int n) {
  std::vector<Generator> gens;
  for (int i = 1; i <= n; ++i) {
    const std::string k = std::to_string(i);
    gens.push_back({"x" + k, false});
    gens.push_back({"y" + k, false});
    gens.push_back({"z" + k, true});
    gens.push_back({"w" + k, true});
  }
  return Alphabet(std::move(gens));
}

namespace {

// Acts on one basis vector in place; returns false if the result is zero.
bool act_letter(const Letter& l, FockVector::Key& m, Scalar& c, const FockConfig& cfg, const Parameters& params) {
  const auto i = static_cast<std::size_t>(l.index / 4);
  if (i >= m.size()) throw std::invalid_argument("Fock operator index out of range");
  const int mi = m[i];
  switch (l.index % 4) {
    case 0:
      ++m[i];
      return true;
    case 1:
      if (mi == 0) return false;
      c *= params.bracket(mi);
      --m[i];
      return true;
    case 2: {
      int sign = cfg.perturb_z ? 1 : -1;
      c *= params.p.pow((l.inverse ? -sign : sign) * mi);
      return true;
    }
    default:
      c *= params.q.pow((l.inverse ? mi : -mi));
      return true;
  }
}

}  // namespace

FockVector fock_apply(const FreeElement& op, const FockVector& v, const FockConfig& cfg) {
  const Parameters params = cfg.params();
  FockVector out;
  for (const auto& [word, coeff] : op.terms())
    for (const auto& [m0, c0] : v.terms()) {
      if (m0.size() != static_cast<std::size_t>(cfg.n)) throw std::invalid_argument("Fock vector has wrong rank");
      FockVector::Key m = m0;
      Scalar c = coeff * c0;
      bool alive = true;
      for (auto it = word.rbegin(); alive && it != word.rend(); ++it) alive = act_letter(*it, m, c, cfg, params);
      if (alive) out.add_term(m, c);
    }
  return out;
}

FockVector fock_apply(std::string_view op, const FockVector& v, const FockConfig& cfg) {
  return fock_apply(parse_expression(op, fock_alphabet(cfg.n), cfg.params()), v, cfg);
}

namespace {

struct FockLetters {
  int n;
  FreeElement x(int i) const { return FreeElement::letter(4 * i); }
  FreeElement y(int i) const { return FreeElement::letter(4 * i + 1); }
  FreeElement z(int i, bool inv = false) const { return FreeElement::letter(4 * i + 2, inv); }
  FreeElement w(int i, bool inv = false) const { return FreeElement::letter(4 * i + 3, inv); }
};

FreeElement commutator(const FreeElement& a, const FreeElement& b) { return a * b - b * a; }

FreeElement cross_bracket(const FockLetters& g, int i, int j) {
  return commutator(g.y(i) * g.x(j), g.y(j) * g.x(i));
}

FreeElement cross_core(const FockLetters& g, int i, int j) {
  return g.z(j) * g.w(i, true) - g.z(i) * g.w(j, true);
}

std::string index_pair(int i, int j) { return std::to_string(i + 1) + std::to_string(j + 1); }

std::vector<FockVector::Key> monomials_up_to(int n, int degree_bound) {
  std::vector<FockVector::Key> out;
  FockVector::Key m(static_cast<std::size_t>(n), 0);
  auto rec = [&](auto&& self, int pos, int left) -> void {
    if (pos == n) {
      out.push_back(m);
      return;
    }
    for (int k = 0; k <= left; ++k) {
      m[static_cast<std::size_t>(pos)] = k;
      self(self, pos + 1, left - k);
    }
    m[static_cast<std::size_t>(pos)] = 0;
  };
  rec(rec, 0, degree_bound);
  return out;
}

std::optional<std::string> annihilates(const FreeElement& op, const FockConfig& cfg, int degree_bound) {
  const Parameters params = cfg.params();
  for (const auto& m : monomials_up_to(cfg.n, degree_bound)) {
    FockVector image = fock_apply(op, FockVector::basis(m), cfg);
    if (!image.is_zero()) return "on " + FockVector::basis(m).to_string(params.names) + ": " + image.to_string(params.names);
  }
  return std::nullopt;
}

std::string fock_label(const FockConfig& cfg) {
  return "n=" + std::to_string(cfg.n) + ",r=" + std::to_string(cfg.r) + ",s=" + std::to_string(cfg.s) +
         (cfg.perturb_z ? ",perturbed" : "");
}

}  // namespace

std::vector<std::pair<std::string, FreeElement>> tensor_relation_operators(const FockConfig& cfg) {
  const Parameters params = cfg.params();
  const Scalar& p = params.p;
  const Scalar& q = params.q;
  FockLetters g{cfg.n};
  std::vector<std::pair<std::string, FreeElement>> out;
  for (int i = 0; i < cfg.n; ++i)
    for (int j = 0; j < cfg.n; ++j) {
      const std::string ij = index_pair(i, j);
      const bool same = i == j;
      if (i < j) {
        out.emplace_back("[x,x] " + ij, commutator(g.x(i), g.x(j)));
        out.emplace_back("[y,y] " + ij, commutator(g.y(i), g.y(j)));
        out.emplace_back("[z,z] " + ij, commutator(g.z(i), g.z(j)));
        out.emplace_back("[w,w] " + ij, commutator(g.w(i), g.w(j)));
      }
      out.emplace_back("[z,w] " + ij, commutator(g.z(i), g.w(j)));
      if (!same) out.emplace_back("[x,y] " + ij, commutator(g.x(i), g.y(j)));
      out.emplace_back("z x " + ij, g.z(i) * g.x(j) - (g.x(j) * g.z(i)).scaled(same ? p.inverse() : Scalar(1)));
      out.emplace_back("z y " + ij, g.z(i) * g.y(j) - (g.y(j) * g.z(i)).scaled(same ? p : Scalar(1)));
      out.emplace_back("w x " + ij, g.w(i) * g.x(j) - (g.x(j) * g.w(i)).scaled(same ? q.inverse() : Scalar(1)));
      out.emplace_back("w y " + ij, g.w(i) * g.y(j) - (g.y(j) * g.w(i)).scaled(same ? q : Scalar(1)));
    }
  for (int i = 0; i < cfg.n; ++i) {
    const std::string k = std::to_string(i + 1);
    FreeElement yx = g.y(i) * g.x(i), xy = g.x(i) * g.y(i);
    FreeElement e = yx - xy.scaled(p.inverse());
    out.emplace_back("z z^-1 " + k, g.z(i) * g.z(i, true) - FreeElement(1));
    out.emplace_back("w w^-1 " + k, g.w(i) * g.w(i, true) - FreeElement(1));
    out.emplace_back("yx - qxy " + k, yx - xy.scaled(q) - g.z(i));
    out.emplace_back("yx - p^-1xy " + k, e - g.w(i, true));
    out.emplace_back("w definition " + k, g.w(i) - e.pow(cfg.r - 1) * g.z(i).pow(cfg.s));
    const Scalar beta = (Scalar(1) - p * q).inverse();
    out.emplace_back("yx closed " + k, yx - (g.z(i) - g.w(i, true).scaled(p * q)).scaled(beta));
    out.emplace_back("xy closed " + k, xy - (g.z(i) - g.w(i, true)).scaled(p * beta));
  }
  return out;
}

FreeElement cross_identity_operator(const FockConfig& cfg, int i, int j) {
  FockLetters g{cfg.n};
  FreeElement out = cross_bracket(g, i, j);
  if (i == j) out -= cross_core(g, i, j);
  return out;
}

FreeElement cross_identity_corrected_operator(const FockConfig& cfg, int i, int j) {
  const Parameters params = cfg.params();
  FockLetters g{cfg.n};
  return cross_bracket(g, i, j) - cross_core(g, i, j).scaled(params.p / (Scalar(1) - params.p * params.q));
}

std::vector<CheckEntry> verify_fock_relations(const FockConfig& cfg, int degree_bound) {
  std::vector<CheckEntry> out;
  const std::string mode = cfg.params().label;
  for (const auto& [name, op] : tensor_relation_operators(cfg)) {
    out.push_back(run_check("fock", name + " " + fock_label(cfg) + " D=" + std::to_string(degree_bound),
                            "relation acts as 0 on xi^m, |m| <= D", mode,
                            [&] { return annihilates(op, cfg, degree_bound); }));
  }
  return out;
}

std::vector<CheckEntry> verify_fock_cross_identity(const FockConfig& cfg, int degree_bound, bool corrected) {
  std::vector<CheckEntry> out;
  const std::string mode = cfg.params().label;
  const std::string anchor = corrected ? "[y_i x_j, y_j x_i] = p (1-pq)^-1 (z_j w_i^-1 - z_i w_j^-1)"
                                       : "[y_i x_j, y_j x_i] = delta_ij (z_j w_i^-1 - z_i w_j^-1)";
  for (int i = 0; i < cfg.n; ++i)
    for (int j = 0; j < cfg.n; ++j) {
      FreeElement op = corrected ? cross_identity_corrected_operator(cfg, i, j) : cross_identity_operator(cfg, i, j);
      out.push_back(run_check("fock", std::string(corrected ? "cross corrected " : "cross ") + index_pair(i, j) + " " +
                                          fock_label(cfg),
                              anchor, mode, [&] { return annihilates(op, cfg, degree_bound); }));
    }
  return out;
}

Scalar fock_descent(const std::vector<int>& m, const FockConfig& cfg) {
  if (m.size() != static_cast<std::size_t>(cfg.n)) throw std::invalid_argument("descent needs one exponent per index");
  FreeElement op(1);
  FockLetters g{cfg.n};
  for (int i = 0; i < cfg.n; ++i) {
    if (m[static_cast<std::size_t>(i)] < 0) throw std::invalid_argument("negative Fock exponent");
    op = op * g.y(i).pow(m[static_cast<std::size_t>(i)]);
  }
  FockVector image = fock_apply(op, FockVector::basis(m), cfg);
  return image.coefficient(FockVector::Key(m.size(), 0));
}

// --- oscillator --------------------------------------------------------------

namespace {

using cd = std::complex<double>;

std::string format_double(double v) {
  std::ostringstream out;
  out.precision(6);
  out << v;
  return out.str();
}

cd numeric_bracket(int k, cd p, cd q) {
  cd sum = 0;
  for (int i = 0; i < k; ++i) sum += std::pow(q, i) * std::pow(p, -(k - 1 - i));
  return sum;
}

struct Term {
  cd coeff;
  Eigen::MatrixXcd matrix;
};

OscillatorResidual measure(const std::string& relation, const std::vector<Term>& terms, int columns,
                           const Eigen::MatrixXd* scale_override = nullptr) {
  const Eigen::Index rows = terms.front().matrix.rows();
  Eigen::MatrixXcd r = Eigen::MatrixXcd::Zero(rows, rows);
  Eigen::MatrixXd scale = Eigen::MatrixXd::Zero(rows, rows);
  for (const auto& t : terms) {
    r += t.coeff * t.matrix;
    scale += std::abs(t.coeff) * t.matrix.cwiseAbs();
  }
  if (scale_override) scale = *scale_override;
  OscillatorResidual out{relation, 0, 0, columns};
  for (Eigen::Index j = 0; j < columns; ++j)
    for (Eigen::Index i = 0; i < rows; ++i) {
      double abs = std::abs(r(i, j));
      out.absolute = std::max(out.absolute, abs);
      out.relative = std::max(out.relative, abs / std::max(1.0, scale(i, j)));
    }
  return out;
}

Eigen::MatrixXcd diagonal(int N, const std::function<cd(int)>& entry) {
  Eigen::MatrixXcd d = Eigen::MatrixXcd::Zero(N, N);
  for (int k = 0; k < N; ++k) d(k, k) = entry(k);
  return d;
}

}  // namespace

OscillatorMatrices build_oscillator(int N, double p, double q) {
  if (N < 3) throw std::invalid_argument("oscillator dimension must be at least 3");
  if (!(p > 0) || !(q > 0)) throw std::invalid_argument("oscillator needs positive real p and q");
  OscillatorMatrices m;
  m.dimension = N;
  m.p = p;
  m.q = q;
  m.a = Eigen::MatrixXcd::Zero(N, N);
  m.a_plus = Eigen::MatrixXcd::Zero(N, N);
  for (int k = 1; k < N; ++k) {
    cd root = std::sqrt(numeric_bracket(k, m.p, m.q));
    m.a(k - 1, k) = root;
    m.a_plus(k, k - 1) = root;
  }
  m.p_powN = diagonal(N, [&](int k) { return std::pow(m.p, -k); });
  m.q_powN = diagonal(N, [&](int k) { return std::pow(m.q, k); });
  m.number = diagonal(N, [](int k) { return cd(k); });
  return m;
}

std::vector<OscillatorResidual> oscillator_residuals(const OscillatorMatrices& m) {
  const int cols = m.dimension - 1;
  Eigen::MatrixXcd aap = m.a * m.a_plus, apa = m.a_plus * m.a;
  return {
      measure("aa+ - q a+a = p^-N", {{1, aap}, {-m.q, apa}, {-1, m.p_powN}}, cols),
      measure("aa+ - p^-1 a+a = q^N", {{1, aap}, {-1.0 / m.p, apa}, {-1, m.q_powN}}, cols),
      measure("N a+ - a+ N = a+", {{1, m.number * m.a_plus}, {-1, m.a_plus * m.number}, {-1, m.a_plus}}, cols),
      measure("N a - a N = -a", {{1, m.number * m.a}, {-1, m.a * m.number}, {1, m.a}}, cols),
  };
}

std::vector<OscillatorResidual> oscillator_power_residuals(int N, double tau, int r, int s) {
  if (!(tau > 0)) throw std::invalid_argument("tau must be positive");
  if (r < 1 || s < 1) throw std::invalid_argument("r and s must be positive");
  const double p = std::pow(tau, r), q = std::pow(tau, s);
  OscillatorMatrices m = build_oscillator(N, p, q);
  const int cols = N - r;
  Eigen::MatrixXcd aap = m.a * m.a_plus, apa = m.a_plus * m.a;
  const Eigen::MatrixXcd& L = m.p_powN;
  Eigen::MatrixXcd L_inv_s = diagonal(N, [&](int k) { return std::pow(cd(p), k * s); });
  Eigen::MatrixXcd e = aap - apa / p;
  Eigen::MatrixXcd e_r = Eigen::MatrixXcd::Identity(N, N);
  Eigen::MatrixXd bound_r = Eigen::MatrixXd::Identity(N, N);
  Eigen::MatrixXd bound = aap.cwiseAbs() + apa.cwiseAbs() / p;
  for (int k = 0; k < r; ++k) {
    e_r = e_r * e;
    bound_r = bound_r * bound;
  }
  Eigen::MatrixXd power_scale = bound_r + L_inv_s.cwiseAbs();
  return {
      measure("(aa+ - p^-1 a+a)^r = L^-s", {{1, e_r}, {-1, L_inv_s}}, cols, &power_scale),
      measure("aa+ - q a+a = L", {{1, aap}, {-q, apa}, {-1, L}}, cols),
      measure("L a+ - p^-1 a+ L = 0", {{1, L * m.a_plus}, {-1.0 / p, m.a_plus * L}}, cols),
      measure("L a - p a L = 0", {{1, L * m.a}, {-p, m.a * L}}, cols),
  };
}

std::vector<CheckEntry> verify_oscillator(const OscillatorMatrices& m, double tol) {
  std::vector<CheckEntry> out;
  const std::string mode = "numeric:" + format_double(m.p.real()) + "," + format_double(m.q.real());
  for (const auto& r : oscillator_residuals(m)) {
    out.push_back(run_check("oscillator", r.relation + " N=" + std::to_string(m.dimension), r.relation, mode,
                            [&]() -> std::optional<std::string> {
                              if (r.relative < tol) return std::nullopt;
                              return "relative residual " + format_double(r.relative) + ", absolute " +
                                     format_double(r.absolute);
                            }));
  }
  return out;
}

// --- M = B/I -----------------------------------------------------------------

ZModuleVector ZModuleVector::basis(int k, const Scalar& c) {
  ZModuleVector out;
  out.add_term(k, c);
  return out;
}

Scalar ZModuleVector::coefficient(int k) const {
  auto it = terms_.find(k);
  return it == terms_.end() ? Scalar() : it->second;
}

void ZModuleVector::add_term(int k, const Scalar& c) {
  if (c.is_zero()) return;
  auto [it, inserted] = terms_.emplace(k, c);
  if (inserted) return;
  it->second += c;
  if (it->second.is_zero()) terms_.erase(it);
}

ZModuleVector& ZModuleVector::operator+=(const ZModuleVector& o) {
  for (const auto& [k, c] : o.terms_) add_term(k, c);
  return *this;
}

ZModuleVector& ZModuleVector::operator-=(const ZModuleVector& o) {
  for (const auto& [k, c] : o.terms_) add_term(k, -c);
  return *this;
}

ZModuleVector ZModuleVector::scaled(const Scalar& c) const {
  ZModuleVector out;
  for (const auto& [k, v] : terms_) out.add_term(k, v * c);
  return out;
}

std::string ZModuleVector::to_string(const VariableNames& names) const {
  std::vector<std::pair<std::string, Scalar>> parts;
  for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) parts.emplace_back("v" + std::to_string(it->first), it->second);
  return format_sum(parts, names);
}

Alphabet bmodule_alphabet() { return Alphabet({{"x", true}, {"D", false}}); }

Scalar bmodule_d_coefficient(int k, const Parameters& params) { return params.p.pow(k - 1) * params.bracket(k); }

ZModuleVector bmodule_x(const ZModuleVector& v, int power) {
  ZModuleVector out;
  for (const auto& [k, c] : v.terms()) out.add_term(k + power, c);
  return out;
}

ZModuleVector bmodule_d(const ZModuleVector& v, const Parameters& params) {
  ZModuleVector out;
  for (const auto& [k, c] : v.terms()) out.add_term(k - 1, c * bmodule_d_coefficient(k, params));
  return out;
}

ZModuleVector bmodule_apply(const FreeElement& op, const ZModuleVector& v, const Parameters& params) {
  ZModuleVector out;
  for (const auto& [word, coeff] : op.terms()) {
    ZModuleVector image = v;
    for (auto it = word.rbegin(); it != word.rend() && !image.is_zero(); ++it) {
      if (it->index == 0)
        image = bmodule_x(image, it->inverse ? -1 : 1);
      else
        image = bmodule_d(image, params);
    }
    out += image.scaled(coeff);
  }
  return out;
}

ZModuleVector bmodule_apply(std::string_view op, const ZModuleVector& v, const Parameters& params) {
  return bmodule_apply(parse_expression(op, bmodule_alphabet(), params), v, params);
}

std::vector<CheckEntry> verify_bmodule(int K, const Parameters& params) {
  if (K < 1) throw std::invalid_argument("window bound must be positive");
  const Scalar pq = params.p * params.q;
  std::vector<CheckEntry> out;
  out.push_back(run_check("bmodule", "D x - pq x D = 1 on |k| <= " + std::to_string(K), "(D x - pq x D - 1) v_k = 0",
                          params.label, [&]() -> std::optional<std::string> {
                            for (int k = -K; k <= K; ++k) {
                              ZModuleVector v = ZModuleVector::basis(k);
                              ZModuleVector r = bmodule_d(bmodule_x(v), params) -
                                                bmodule_x(bmodule_d(v, params)).scaled(pq) - v;
                              if (!r.is_zero()) return "k=" + std::to_string(k) + ": " + r.to_string(params.names);
                            }
                            return std::nullopt;
                          }));
  return out;
}

DescentResult bmodule_descent(const ZModuleVector& v, const Parameters& params) {
  if (v.is_zero()) throw std::invalid_argument("descent needs a nonzero vector");
  DescentResult out;
  out.shift = std::max(0, -v.terms().begin()->first);
  ZModuleVector cur = bmodule_x(v, out.shift);
  while (cur.terms().rbegin()->first > 0) {
    cur = bmodule_d(cur, params);
    ++out.steps;
    if (cur.is_zero()) throw std::logic_error("descent reached zero");
  }
  out.witness = cur.coefficient(0);
  return out;
}

namespace {

using BOperator = std::map<std::pair<int, int>, Scalar>;

BOperator virasoro_operator(const LocalizedAlgebra& alg, int n) {
  auto coords = alg.b_coordinates(alg.virasoro_L(n));
  if (!coords) throw std::logic_error("L_n is not in the x, D subring");
  return *coords;
}

ZModuleVector apply_b_operator(const BOperator& op, const ZModuleVector& v, const Parameters& params) {
  ZModuleVector out;
  for (const auto& [ij, c] : op) {
    ZModuleVector image = v;
    for (int j = 0; j < ij.second; ++j) image = bmodule_d(image, params);
    out += bmodule_x(image, ij.first).scaled(c);
  }
  return out;
}

}  // namespace

ZModuleVector virasoro_on_bmodule(int n, const ZModuleVector& v, const Parameters& params) {
  LocalizedAlgebra alg(params);
  return apply_b_operator(virasoro_operator(alg, n), v, params);
}

bool verify_virasoro_action(int n, int m, int K, const Parameters& params) {
  LocalizedAlgebra alg(params);
  const Scalar& p = params.p;
  const Scalar& q = params.q;
  const BOperator ln = virasoro_operator(alg, n), lm = virasoro_operator(alg, m), lnm = virasoro_operator(alg, n + m);
  const Scalar bracket = params.bracket(m - n);
  for (int k = -K; k <= K; ++k) {
    ZModuleVector v = ZModuleVector::basis(k);
    ZModuleVector r = apply_b_operator(ln, apply_b_operator(lm, v, params), params).scaled(p.pow(n - m)) -
                      apply_b_operator(lm, apply_b_operator(ln, v, params), params).scaled(q.pow(m - n)) -
                      apply_b_operator(lnm, v, params).scaled(bracket);
    if (!r.is_zero()) return false;
  }
  return true;
}

}  // namespace heisenweyl
