#include <random>

#include "doctest.h"
#include "heisenweyl/gaussian_rational.hpp"
#include "heisenweyl/reps.hpp"
#include "heisenweyl/specialization.hpp"

using namespace heisenweyl;

namespace {

void check_all(const std::vector<CheckEntry>& entries) {
  for (const auto& e : entries) {
    CAPTURE(e.check);
    CAPTURE(e.witness);
    CHECK(e.pass);
  }
}

FockVector xi(std::vector<int> m) { return FockVector::basis(m); }

}  // namespace

TEST_CASE("Fock action examples") {
  FockConfig cfg{1, 2, 3};
  const Parameters pr = cfg.params();
  CHECK(fock_apply("x1", xi({0}), cfg) == xi({1}));
  CHECK(fock_apply("y1", xi({0}), cfg).is_zero());
  CHECK(fock_apply("y1", xi({3}), cfg) == xi({2}).scaled(specialize(pq_number(3), OneParam{2, 3})));
  CHECK(fock_apply("z1^-1", xi({2}), cfg) == xi({2}).scaled(pr.p.pow(2)));
  CHECK(fock_apply("w1", xi({2}), cfg) == xi({2}).scaled(pr.q.pow(-2)));
  FockConfig two{2, 1, 1};
  CHECK(fock_apply("x1 y2", xi({0, 1}), two) == xi({1, 0}));
  CHECK_THROWS(fock_apply("x3", xi({0, 0}), two));
}

TEST_CASE("Fock relations") {
  for (auto [n, r, s] : {std::tuple{1, 1, 1}, {1, 2, 3}, {2, 1, 1}, {2, 2, 3}, {3, 1, 2}}) {
    CAPTURE(n);
    check_all(verify_fock_relations(FockConfig{n, r, s}, n == 3 ? 4 : 6));
  }
  // Perturbing the z action breaks yx - qxy = z on xi_1.
  FockConfig bad{1, 1, 1, true};
  auto rels = tensor_relation_operators(bad);
  auto it = std::find_if(rels.begin(), rels.end(), [](const auto& r) { return r.first == "yx - qxy 1"; });
  REQUIRE(it != rels.end());
  CHECK_FALSE(fock_apply(it->second, xi({1}), bad).is_zero());
  auto entries = verify_fock_relations(bad, 3);
  CHECK(summarize(entries).failed > 0);
}

TEST_CASE("Fock cross identity") {
  FockConfig cfg{2, 2, 3};
  check_all(verify_fock_cross_identity(cfg, 4, true));
  for (const auto& e : verify_fock_cross_identity(cfg, 4, false)) {
    CAPTURE(e.check);
    bool diagonal = e.check.rfind("cross 11", 0) == 0 || e.check.rfind("cross 22", 0) == 0;
    CHECK(e.pass == diagonal);
  }
  // On xi_1 the bracket acts as [0][2] - [1][1] = -1, while the delta form predicts 0.
  FockVector image = fock_apply(cross_identity_operator(cfg, 0, 1), xi({1, 0}), cfg);
  CHECK(image == xi({1, 0}).scaled(-1));
}

TEST_CASE("Fock descent") {
  for (auto [n, r, s] : {std::tuple{1, 1, 1}, {2, 2, 3}, {3, 1, 2}}) {
    FockConfig cfg{n, r, s};
    std::vector<int> m(static_cast<std::size_t>(n), 0);
    CHECK(fock_descent(m, cfg) == Scalar(1));
    for (int trial = 0; trial < 10; ++trial) {
      for (std::size_t i = 0; i < m.size(); ++i) m[i] = (trial * 3 + static_cast<int>(i) * 5) % 5;
      Scalar expected = 1;
      for (int mi : m) expected *= specialize(pq_factorial(mi), OneParam{r, s});
      Scalar got = fock_descent(m, cfg);
      CHECK(got == expected);
      CHECK_FALSE(got.is_zero());
    }
  }
  FockConfig one{1, 1, 1};
  CHECK(fock_descent({2}, one) == specialize(Scalar::q() + Scalar::p().inverse(), OneParam{1, 1}));
  CHECK(fock_descent({1, 1}, FockConfig{2, 1, 1}) == Scalar(1));
}

TEST_CASE("oscillator matrices") {
  OscillatorMatrices m = build_oscillator(64, 1.3, 1.7);
  for (const auto& r : oscillator_residuals(m)) {
    CAPTURE(r.relation);
    CAPTURE(r.absolute);
    CHECK(r.relative < 1e-9);
    CHECK(r.columns == 63);
  }
  check_all(verify_oscillator(m, 1e-9));
  for (const auto& r : oscillator_power_residuals(64, 1.2, 2, 3)) {
    CAPTURE(r.relation);
    CHECK(r.relative < 1e-8);
  }
  // Small dimension: entries are O(1), so the absolute residual is also tiny.
  OscillatorMatrices small = build_oscillator(3, 1.3, 1.7);
  for (const auto& r : oscillator_residuals(small)) CHECK(r.absolute < 1e-12);
  // [1] = 1 and [2] = q + p^-1
  CHECK(std::abs(small.a(0, 1) - 1.0) < 1e-15);
  CHECK(std::abs(small.a(1, 2) * small.a(1, 2) - (1.7 + 1 / 1.3)) < 1e-12);
  // p = q: aa+ - q a+a = q^-N
  OscillatorMatrices eq = build_oscillator(10, 1.4, 1.4);
  Eigen::MatrixXcd lhs = eq.a * eq.a_plus - eq.q * eq.a_plus * eq.a;
  for (int k = 0; k < 9; ++k) CHECK(std::abs(lhs(k, k) - std::pow(1.4, -k)) < 1e-9);
  // The top column is corrupted by truncation.
  CHECK(std::abs((m.a * m.a_plus - m.q * m.a_plus * m.a - m.p_powN)(63, 63)) > 1.0);
  CHECK_THROWS_AS(build_oscillator(2, 1.3, 1.7), std::invalid_argument);
  CHECK_THROWS_AS(build_oscillator(8, -1.0, 1.7), std::invalid_argument);
}

TEST_CASE("B-module action") {
  const Scalar p = Scalar::p(), q = Scalar::q();
  auto v = [](int k) { return ZModuleVector::basis(k); };
  CHECK(bmodule_apply("x^3", v(-1)) == v(2));
  CHECK(bmodule_apply("x^-2", v(1)) == v(-1));
  CHECK(bmodule_apply("D", v(0)).is_zero());
  CHECK(bmodule_apply("D", v(2)) == v(1).scaled(p * pq_number(2)));
  CHECK(bmodule_apply("D", v(-1)) == v(-2).scaled(-(p * q).inverse()));
  // Oracle: c_(k+1) - pq c_k = 1 with c_0 = 0, solved in both directions.
  Scalar c = 0;
  for (int k = 0; k <= 20; ++k) {
    CHECK(bmodule_d_coefficient(k) == c);
    c = Scalar(1) + p * q * c;
  }
  c = 0;
  for (int k = 0; k >= -20; --k) {
    CHECK(bmodule_d_coefficient(k) == c);
    c = (c - Scalar(1)) / (p * q);
  }
  check_all(verify_bmodule(20));
  check_all(verify_bmodule(10, Parameters::one_param(2, 3)));
}

TEST_CASE("B-module descent") {
  const Scalar p = Scalar::p();
  DescentResult r = bmodule_descent(ZModuleVector::basis(3));
  CHECK(r.steps == 3);
  CHECK(r.witness == p.pow(2) * pq_number(3) * p * pq_number(2));
  r = bmodule_descent(ZModuleVector::basis(0));
  CHECK(r.steps == 0);
  CHECK(r.witness == Scalar(1));
  r = bmodule_descent(ZModuleVector::basis(-2));
  CHECK(r.shift == 2);
  CHECK(r.steps == 0);
  CHECK(r.witness == Scalar(1));
  CHECK_THROWS_AS(bmodule_descent(ZModuleVector()), std::invalid_argument);

  std::mt19937 rng(23);
  std::uniform_int_distribution<int> support(-10, 10), count(1, 5), num(-9, 9), den(1, 9);
  for (int trial = 0; trial < 50; ++trial) {
    ZModuleVector vec;
    for (int k = count(rng); k > 0; --k) {
      int n = num(rng);
      vec.add_term(support(rng), Scalar(GaussianRational(mpq_class(n == 0 ? 1 : n, den(rng)))));
    }
    if (vec.is_zero()) continue;
    DescentResult d = bmodule_descent(vec);
    CHECK_FALSE(d.witness.is_zero());
    ZModuleVector shifted = bmodule_x(vec, d.shift);
    for (int s = 0; s < d.steps; ++s) shifted = bmodule_d(shifted);
    CHECK(shifted == ZModuleVector::basis(0, d.witness));
  }
}

TEST_CASE("Virasoro action on M") {
  const Scalar p = Scalar::p();
  auto v = [](int k) { return ZModuleVector::basis(k); };
  CHECK(virasoro_on_bmodule(-1, v(1)) == v(0));
  CHECK(virasoro_on_bmodule(0, v(0)).is_zero());
  for (int n = -3; n <= 3; ++n)
    for (int k = -4; k <= 4; ++k)
      CHECK(virasoro_on_bmodule(n, v(k)) == bmodule_x(bmodule_d(v(k)), n + 1).scaled(p.pow(n + 1)));
  CHECK(verify_virasoro_action(1, -1, 10));
  for (int n = -5; n <= 5; ++n)
    for (int m = -5; m <= 5; ++m) {
      CAPTURE(n);
      CAPTURE(m);
      CHECK(verify_virasoro_action(n, m, 12));
    }
  CHECK(verify_virasoro_action(2, -3, 6, Parameters::one_param(2, 3)));
}
