#include "suites.hpp"

#include <algorithm>
#include <atomic>
#include <functional>
#include <memory>
#include <numeric>
#include <random>
#include <sstream>
#include <thread>

#include "heisenweyl/gwa.hpp"
#include "heisenweyl/localize.hpp"
#include "heisenweyl/reps.hpp"
#include "heisenweyl/scalar_parser.hpp"
#include "heisenweyl/specialization.hpp"

namespace heisenweyl::cli {

namespace {

using Task = std::function<std::vector<CheckEntry>()>;

Task single(std::function<CheckEntry()> f) {
  return [f = std::move(f)] { return std::vector<CheckEntry>{f()}; };
}

std::optional<std::string> nonzero(const PBWElement& f, const Parameters& params) {
  if (f.is_zero()) return std::nullopt;
  return f.to_string(params.names);
}

std::optional<std::string> all_zero(const std::vector<PBWElement>& fs, const Parameters& params) {
  for (std::size_t i = 0; i < fs.size(); ++i)
    if (!fs[i].is_zero()) return "relation " + std::to_string(i + 1) + ": " + fs[i].to_string(params.names);
  return std::nullopt;
}

std::optional<std::string> expect(bool ok, const std::string& witness) {
  if (ok) return std::nullopt;
  return witness;
}

// --- modes --------------------------------------------------------------------

struct Mode {
  std::string text;
  bool generic = true;
  std::optional<Specialization> spec;

  const OneParam* one_param() const { return spec ? std::get_if<OneParam>(&*spec) : nullptr; }
  const Numeric* numeric() const { return spec ? std::get_if<Numeric>(&*spec) : nullptr; }
  const Quotient* quotient() const { return spec ? std::get_if<Quotient>(&*spec) : nullptr; }
};

Mode parse_mode(const std::string& text) {
  Mode m;
  m.text = text;
  if (text == "generic") return m;
  try {
    m.spec = parse_specialization(text);
  } catch (const std::invalid_argument& e) {
    throw UsageError(e.what());
  }
  m.generic = false;
  return m;
}

void require_mode(const Mode& m, const std::string& suite, bool one_param, bool numeric, bool quotient) {
  if (m.generic) return;
  if ((m.one_param() && one_param) || (m.numeric() && numeric) || (m.quotient() && quotient)) return;
  throw UsageError("suite '" + suite + "' cannot run in mode '" + m.text + "'");
}

// Multiplicative order of u^e modulo Phi_n.
int root_order(int n, int e) { return n / std::gcd(n, ((e % n) + n) % n == 0 ? n : ((e % n) + n) % n); }

std::vector<int> cyclotomic_numbers(const std::string& text) {
  // cyclotomic:N:EP,EQ
  std::vector<int> out;
  std::string digits;
  for (char c : text.substr(text.find(':') + 1)) {
    if (c == ':' || c == ',') {
      out.push_back(std::stoi(digits));
      digits.clear();
    } else {
      digits += c;
    }
  }
  out.push_back(std::stoi(digits));
  return out;
}

// --- suites -------------------------------------------------------------------

std::vector<Task> identities(const SuiteConfig& cfg, const Mode& mode) {
  require_mode(mode, "identities", true, false, false);
  if (cfg.range < 1) throw UsageError("--range must be positive");
  auto alg = std::make_shared<HeisenbergAlgebra>(mode.one_param() ? parameters_for(*mode.one_param())
                                                                  : Parameters::generic());
  std::vector<Task> tasks;
  for (int n = 1; n <= cfg.range; ++n) {
    tasks.push_back(single([alg, n] { return verify_ident(*alg, n, Ident::one); }));
    tasks.push_back(single([alg, n] { return verify_ident(*alg, n, Ident::two); }));
  }
  return tasks;
}

std::vector<Task> diamond(const SuiteConfig& cfg, const Mode& mode) {
  require_mode(mode, "diamond", false, false, false);
  Scalar pprime;
  try {
    pprime = parse_scalar(cfg.pprime);
  } catch (const std::exception& e) {
    throw UsageError(std::string("invalid --pprime: ") + e.what());
  }
  if (pprime.is_zero()) throw UsageError("--pprime must be nonzero");
  return {single([pprime, text = cfg.pprime] {
    return run_check("diamond", "overlaps resolve for p'=" + text, "zx = p' xz, zy = p yz, yx = q xy + z",
                     "generic", [&]() -> std::optional<std::string> {
                       RewriteSystem sys = hpq_rules(pprime);
                       auto overlaps = check_overlaps(sys);
                       if (overlaps.empty()) return std::nullopt;
                       std::string w;
                       const Alphabet& alpha = sys.alphabet();
                       for (const auto& o : overlaps) {
                         if (!w.empty()) w += "; ";
                         w += word_to_string(o.word, alpha) + ": " + o.difference.to_string(alpha);
                       }
                       return w;
                     });
  })};
}

std::vector<Task> center(const SuiteConfig&, const Mode& mode) {
  require_mode(mode, "center", true, false, true);
  std::vector<Task> tasks;
  if (mode.generic) {
    tasks.push_back(single([] {
      return run_check("center", "theta normal", "theta g = twist(g) theta, twist = (q, q^-1, 1)", "generic", [] {
        HeisenbergAlgebra h;
        const Scalar q = Scalar::q();
        return expect(check_normal(h, h.theta(), {q, q.inverse(), 1}), "theta is not normal with twist (q, q^-1, 1)");
      });
    }));
    tasks.push_back(single([] {
      return run_check("center", "Omega not central generically", "[Omega, g] != 0 for p, q independent", "generic",
                       [] {
                         HeisenbergAlgebra h;
                         return expect(!is_central(h, h.omega(2, 3)), "Omega(2,3) commutes with x, y, z");
                       });
    }));
  }
  std::vector<std::pair<int, int>> pairs;
  if (auto* op = mode.one_param())
    pairs.push_back({op->r, op->s});
  else if (mode.generic)
    pairs = {{1, 1}, {1, 2}, {2, 3}, {3, 5}};
  for (auto [r, s] : pairs)
    tasks.push_back(single([r, s] {
      Parameters params = Parameters::one_param(r, s);
      return run_check("center", "Omega central r=" + std::to_string(r) + ",s=" + std::to_string(s),
                       "Omega = (yx - p^-1 xy)^r z^s is central", params.label, [&] {
                         HeisenbergAlgebra h(params);
                         return expect(is_central(h, h.omega(r, s)), "Omega does not commute with x, y, z");
                       });
    }));

  std::vector<int> cyc = {12, 4, 3};
  if (mode.quotient()) cyc = cyclotomic_numbers(mode.text);
  if (mode.generic || mode.quotient())
    tasks.push_back([cyc] {
      const int N = cyc[0], op = root_order(N, cyc[1]), oq = root_order(N, cyc[2]);
      const int mn = std::lcm(op, oq);
      const std::string label = "cyclotomic:" + std::to_string(N) + ":" + std::to_string(cyc[1]) + "," +
                                std::to_string(cyc[2]);
      Quotient spec = Quotient::cyclotomic(N, cyc[1], cyc[2]);
      std::vector<CheckEntry> out;
      out.push_back(run_check("center", "[" + std::to_string(mn) + "] = 0", "[mn]_{p,q} vanishes", label,
                              [&] {
                                return expect(is_zero(specialize(pq_number(mn), Specialization(spec))),
                                              "[" + std::to_string(mn) + "] is nonzero in the quotient");
                              }));
      out.push_back(run_check(
          "center", "z^" + std::to_string(op) + ", x^" + std::to_string(mn) + ", y^" + std::to_string(mn) + " central",
          "k[x^(mn), y^(mn), z^n] is central", label, [&] {
            HeisenbergAlgebra h;
            return expect(root_of_unity_centrality(h, op, mn / op, spec), "not central in the quotient");
          }));
      return out;
    });
  return tasks;
}

std::vector<Task> morphisms(const SuiteConfig&, const Mode& mode) {
  require_mode(mode, "morphisms", false, false, false);
  std::vector<Task> tasks;
  auto morphism_task = [](std::function<AlgebraMorphism()> make) {
    return single([make] {
      AlgebraMorphism phi = make();
      return run_check("morphisms", phi.name + " well defined", "images satisfy the target relations",
                       phi.source.label, [&] { return all_zero(morphism_residuals(phi), phi.target); });
    });
  };
  tasks.push_back(morphism_task([] { return identity_morphism(); }));
  tasks.push_back(morphism_task([] { return inversion_morphism(); }));
  tasks.push_back(morphism_task([] { return swap_morphism(); }));
  tasks.push_back(morphism_task([] { return tau_involution(); }));
  tasks.push_back(single([] {
    return run_check("morphisms", "inversion round trip", "inv' o inv = id", "generic", [] {
      Parameters params;
      AlgebraMorphism back = compose(inversion_morphism(params.inverted()), inversion_morphism(params));
      HeisenbergAlgebra h;
      return all_zero({back.x - h.x(), back.y - h.y(), back.z - h.z()}, params);
    });
  }));
  tasks.push_back(single([] {
    return run_check("morphisms", "tau(theta) = pq z", "tau(theta) = q^2 z on H_{q,q}", tau_involution().source.label, [] {
      AlgebraMorphism tau = tau_involution();
      HeisenbergAlgebra h(tau.source);
      const Scalar pq = tau.source.p * tau.source.q;
      return nonzero(apply_morphism(tau, h.theta()) - h.z().scaled(pq), tau.source);
    });
  }));
  tasks.push_back(single([] {
    return run_check("morphisms", "down-up relations", "alpha = p^-1 + q, beta = -p^-1 q", "generic", [] {
      HeisenbergAlgebra h;
      const Scalar p = Scalar::p(), q = Scalar::q();
      return all_zero(downup_residuals(h, p.inverse() + q, -(p.inverse() * q)), h.params());
    });
  }));
  tasks.push_back([] {
    HeisenbergAlgebra h;
    auto residuals = zhang_twist_residuals(h);
    const char* names[] = {"z*x = x*z", "z*y = y*z", "y*x - pq x*y = sqrt(p) z"};
    std::vector<CheckEntry> out;
    for (std::size_t i = 0; i < residuals.size(); ++i)
      out.push_back(run_check("morphisms", std::string("Zhang twist ") + names[i], names[i], "generic",
                              [&] { return nonzero(residuals[i], h.params()); }));
    return out;
  });
  return tasks;
}

std::vector<Task> gwa(const SuiteConfig&, const Mode& mode) {
  require_mode(mode, "gwa", true, false, false);
  std::vector<Task> tasks;
  std::vector<std::pair<int, int>> pairs = {{1, 1}, {1, 2}, {2, 3}};
  if (auto* op = mode.one_param()) pairs = {{op->r, op->s}};
  if (mode.generic) {
    tasks.push_back([] { return verify_hpq_gwa(); });
    tasks.push_back([] { return verify_apq_gwa(); });
  }
  for (auto [r, s] : pairs) tasks.push_back([r, s] { return verify_aprs_gwa(r, s); });
  const auto [tr, ts] = pairs.back();
  for (int n : {2, 3}) {
    tasks.push_back([n, tr, ts] { return verify_tensor_relations(tensor_power(n, tr, ts), tr, ts); });
    tasks.push_back([n, tr, ts] {
      GWA g = tensor_power(n, tr, ts);
      std::vector<CheckEntry> out;
      const std::string label = g.data().params.label;
      for (std::size_t i = 0; i < static_cast<std::size_t>(n); ++i)
        for (std::size_t j = 0; j < static_cast<std::size_t>(n); ++j) {
          const std::string ij = std::to_string(i + 1) + std::to_string(j + 1);
          out.push_back(run_check("gwa", "cross identity n=" + std::to_string(n) + " " + ij,
                                  "[y_i x_j, y_j x_i] = delta_ij (z_j w_i^-1 - z_i w_j^-1)", label, [&] {
                                    GWAElement r = cross_identity_residual(g, i, j);
                                    return r.is_zero() ? std::nullopt : std::optional(r.to_string(g.data()));
                                  }));
          out.push_back(run_check("gwa", "cross identity corrected n=" + std::to_string(n) + " " + ij,
                                  "[y_i x_j, y_j x_i] = p (1-pq)^-1 (z_j w_i^-1 - z_i w_j^-1)", label, [&] {
                                    GWAElement r = cross_identity_corrected_residual(g, i, j);
                                    return r.is_zero() ? std::nullopt : std::optional(r.to_string(g.data()));
                                  }));
        }
      return out;
    });
  }
  return tasks;
}

std::vector<Task> virasoro(const SuiteConfig& cfg, const Mode& mode) {
  require_mode(mode, "virasoro", true, false, false);
  if (cfg.virasoro_window < 0) throw UsageError("--virasoro-window must be nonnegative");
  std::vector<Parameters> instances;
  if (auto* op = mode.one_param())
    instances.push_back(parameters_for(*op));
  else
    instances = {Parameters::generic(), Parameters::one_param(2, 3)};
  std::vector<Task> tasks;
  const int W = cfg.virasoro_window;
  for (const auto& params : instances) {
    auto alg = std::make_shared<LocalizedAlgebra>(params);
    for (int n = -W; n <= W; ++n)
      tasks.push_back([alg, n, W] {
        std::vector<CheckEntry> out;
        for (int m = -W; m <= W; ++m)
          out.push_back(run_check("virasoro", "localized n=" + std::to_string(n) + ",m=" + std::to_string(m),
                                  "p^(n-m) L_n L_m - q^(m-n) L_m L_n = [m-n] L_(m+n)", alg->params().label,
                                  [&] { return nonzero(virasoro_residual(*alg, n, m), alg->params()); }));
        return out;
      });
  }
  const Parameters module_params = instances.front();
  for (int n = -5; n <= 5; ++n)
    tasks.push_back([n, module_params] {
      std::vector<CheckEntry> out;
      for (int m = -5; m <= 5; ++m)
        out.push_back(run_check("virasoro", "on M n=" + std::to_string(n) + ",m=" + std::to_string(m) + " K=12",
                                "Virasoro relation as operators on v_k, |k| <= 12", module_params.label, [&] {
                                  return expect(verify_virasoro_action(n, m, 12, module_params),
                                                "relation fails on some v_k");
                                }));
      return out;
    });
  return tasks;
}

std::vector<Task> fock(const SuiteConfig& cfg, const Mode& mode) {
  require_mode(mode, "fock", false, false, false);
  if (cfg.degree < 0) throw UsageError("--degree must be nonnegative");
  const int D = cfg.degree;
  std::vector<Task> tasks;
  for (auto [n, r, s] : {std::tuple{1, 1, 1}, {1, 2, 3}, {2, 1, 1}, {2, 2, 3}, {3, 1, 2}}) {
    FockConfig fc{n, r, s};
    tasks.push_back([fc, D] { return verify_fock_relations(fc, D); });
    tasks.push_back([fc, D] {
      return std::vector<CheckEntry>{run_check(
          "fock",
          "descent n=" + std::to_string(fc.n) + ",r=" + std::to_string(fc.r) + ",s=" + std::to_string(fc.s) +
              " D=" + std::to_string(D),
          "(y_1^m_1 ... y_n^m_n) xi^m = [m_1]! ... [m_n]!", fc.params().label, [&]() -> std::optional<std::string> {
            std::vector<int> m(static_cast<std::size_t>(fc.n), 0);
            // Enumerate all m with |m| <= D.
            std::function<std::optional<std::string>(std::size_t, int)> rec = [&](std::size_t pos, int left) {
              if (pos == m.size()) {
                Scalar expected = 1;
                for (int mi : m) expected *= specialize(pq_factorial(mi), OneParam{fc.r, fc.s});
                Scalar got = fock_descent(m, fc);
                if (got.is_zero() || got != expected) {
                  std::string key;
                  for (int mi : m) key += (key.empty() ? "" : ",") + std::to_string(mi);
                  return std::optional<std::string>("m=(" + key + "): " + got.to_string(fc.params().names));
                }
                return std::optional<std::string>();
              }
              for (int k = 0; k <= left; ++k) {
                m[pos] = k;
                if (auto w = rec(pos + 1, left - k)) return w;
              }
              m[pos] = 0;
              return std::optional<std::string>();
            };
            return rec(0, D);
          })};
    });
    if (n >= 2) {
      tasks.push_back([fc, D] { return verify_fock_cross_identity(fc, std::min(D, 4), false); });
      tasks.push_back([fc, D] { return verify_fock_cross_identity(fc, std::min(D, 4), true); });
    }
  }
  return tasks;
}

std::vector<Task> oscillator(const SuiteConfig& cfg, const Mode& mode) {
  require_mode(mode, "oscillator", false, true, false);
  if (cfg.matrix_size < 3) throw UsageError("--dim must be at least 3");
  const int N = cfg.matrix_size;
  std::vector<Task> tasks;
  std::vector<std::pair<double, double>> pqs = {{1.3, 1.7}, {1.2 * 1.2, 1.2 * 1.2 * 1.2}};
  if (auto* num = mode.numeric()) {
    if (num->p.imag() != 0 || num->q.imag() != 0 || num->p.real() <= 0 || num->q.real() <= 0)
      throw UsageError("oscillator needs positive real p and q");
    pqs = {{num->p.real(), num->q.real()}};
  }
  for (auto [p, q] : pqs)
    tasks.push_back([N, p, q] {
      try {
        return verify_oscillator(build_oscillator(N, p, q), 1e-9);
      } catch (const std::exception& e) {
        return std::vector<CheckEntry>{run_check("oscillator", "build", "", "numeric", [&]() -> std::optional<std::string> {
          return e.what();
        })};
      }
    });
  if (mode.generic)
    tasks.push_back([N] {
      std::vector<CheckEntry> out;
      for (const auto& r : oscillator_power_residuals(N, 1.2, 2, 3))
        out.push_back(run_check("oscillator", r.relation + " N=" + std::to_string(N) + " tau=1.2,r=2,s=3", r.relation,
                                "numeric:1.44,1.728", [&]() -> std::optional<std::string> {
                                  if (r.relative < 1e-8) return std::nullopt;
                                  std::ostringstream w;
                                  w << "relative residual " << r.relative << ", absolute " << r.absolute;
                                  return w.str();
                                }));
      return out;
    });
  return tasks;
}

std::vector<Task> bmodule(const SuiteConfig& cfg, const Mode& mode) {
  require_mode(mode, "bmodule", true, false, false);
  if (cfg.module_window < 1) throw UsageError("--window must be positive");
  const Parameters params = mode.one_param() ? parameters_for(*mode.one_param()) : Parameters::generic();
  std::vector<Task> tasks;
  tasks.push_back([K = cfg.module_window, params] { return verify_bmodule(K, params); });
  tasks.push_back(single([seed = cfg.seed, params] {
    return run_check("bmodule", "descent from 50 random vectors", "x^M then D repeatedly reaches c v_0, c != 0",
                     params.label, [&]() -> std::optional<std::string> {
                       std::mt19937 rng(seed);
                       std::uniform_int_distribution<int> support(-10, 10), count(1, 5), num(-9, 9), den(1, 9);
                       for (int trial = 0; trial < 50; ++trial) {
                         ZModuleVector v;
                         while (v.is_zero())
                           for (int k = count(rng); k > 0; --k) {
                             int n = num(rng);
                             mpq_class c(n == 0 ? 1 : n, den(rng));
                             c.canonicalize();
                             v.add_term(support(rng), Scalar(GaussianRational(c)));
                           }
                         DescentResult d = bmodule_descent(v, params);
                         ZModuleVector end = bmodule_x(v, d.shift);
                         for (int s = 0; s < d.steps; ++s) end = bmodule_d(end, params);
                         if (d.witness.is_zero() || end != ZModuleVector::basis(0, d.witness))
                           return "from " + v.to_string(params.names) + " reached " + end.to_string(params.names);
                       }
                       return std::nullopt;
                     });
  }));
  return tasks;
}

std::vector<Task> inner(const SuiteConfig&, const Mode& mode) {
  require_mode(mode, "inner", false, false, false);
  std::vector<Task> tasks;
  for (auto [r, s] : {std::pair{1, 1}, {1, 2}, {2, 3}, {3, 5}}) tasks.push_back([r, s] { return verify_inner(r, s); });
  tasks.push_back(single([] {
    return run_check("inner", "theta factorization", "x (y - t) = (1-pq)^-1 q^-1 theta", "generic", [] {
      return expect(verify_theta_factorization(LocalizedAlgebra()), "factorization fails");
    });
  }));
  tasks.push_back(single([] {
    return run_check("inner", "theta factorization squared", "x^2 (y - t)^2 = lambda^2 q^-1 theta^2", "generic", [] {
      return expect(verify_theta_factorization_squared(LocalizedAlgebra()), "factorization fails");
    });
  }));
  return tasks;
}

using SuiteFn = std::vector<Task> (*)(const SuiteConfig&, const Mode&);

const std::vector<std::pair<std::string, SuiteFn>>& registry() {
  static const std::vector<std::pair<std::string, SuiteFn>> r = {
      {"identities", identities}, {"diamond", diamond}, {"center", center},     {"morphisms", morphisms},
      {"gwa", gwa},               {"virasoro", virasoro}, {"fock", fock},       {"oscillator", oscillator},
      {"bmodule", bmodule},       {"inner", inner},
  };
  return r;
}

std::vector<CheckEntry> run_tasks(const std::vector<Task>& tasks, int jobs) {
  std::vector<std::vector<CheckEntry>> results(tasks.size());
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t i; (i = next.fetch_add(1)) < tasks.size();) {
      try {
        results[i] = tasks[i]();
      } catch (const std::exception& e) {
        results[i] = {run_check("internal", "task " + std::to_string(i), "", "",
                                [&]() -> std::optional<std::string> { return std::string("exception: ") + e.what(); })};
      }
    }
  };
  const int threads = std::max(1, std::min<int>(jobs, static_cast<int>(tasks.size())));
  std::vector<std::thread> pool;
  for (int t = 1; t < threads; ++t) pool.emplace_back(worker);
  worker();
  for (auto& t : pool) t.join();
  std::vector<CheckEntry> out;
  for (auto& r : results) out.insert(out.end(), std::make_move_iterator(r.begin()), std::make_move_iterator(r.end()));
  return out;
}

}  // namespace

const std::vector<std::string>& suite_names() {
  static const std::vector<std::string> names = [] {
    std::vector<std::string> n;
    for (const auto& [name, fn] : registry()) n.push_back(name);
    n.push_back("all");
    return n;
  }();
  return names;
}

std::vector<CheckEntry> run_suite(const SuiteConfig& cfg, int jobs) {
  if (jobs < 1) throw UsageError("--jobs must be positive");
  const Mode mode = parse_mode(cfg.mode);
  std::vector<Task> tasks;
  bool found = false;
  for (const auto& [name, fn] : registry()) {
    if (cfg.suite != "all" && cfg.suite != name) continue;
    found = true;
    if (cfg.suite == "all" && !mode.generic) throw UsageError("'all' runs with the default modes only");
    auto more = fn(cfg, mode);
    tasks.insert(tasks.end(), std::make_move_iterator(more.begin()), std::make_move_iterator(more.end()));
  }
  if (!found) throw UsageError("unknown suite '" + cfg.suite + "'");
  return run_tasks(tasks, jobs);
}

}  // namespace heisenweyl::cli
