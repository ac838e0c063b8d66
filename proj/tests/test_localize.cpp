#include <random>

#include "doctest.h"
#include "heisenweyl/localize.hpp"
#include "random_elements.hpp"

using namespace heisenweyl;

namespace {

const Scalar p = Scalar::p(), q = Scalar::q();
LocalElement mono(int i, int j, int k, const Scalar& c = 1) { return PBWElement::monomial(i, j, k, c); }

}  // namespace

TEST_CASE("local_multiply examples") {
  LocalizedAlgebra l;
  // yx = qxy + z solved for y x^-1
  CHECK(l.multiply(l.y(), l.x_inv()) == mono(-1, 1, 0, q.inverse()) + mono(-2, 0, 1, -p / q));
  CHECK(l.multiply(l.x(), l.x_inv()) == PBWElement(1));
  CHECK(l.multiply(l.z_inv(), l.z()) == PBWElement(1));
  CHECK(l.multiply(l.y(), l.x()) == mono(1, 1, 0, q) + mono(0, 0, 1));
  CHECK(l.multiply(l.z_inv(), l.x()) == mono(1, 0, -1, p));
  CHECK(l.multiply(l.z_inv(), l.y()) == mono(0, 1, -1, p.inverse()));
}

TEST_CASE("extended ident1 is self-consistent") {
  LocalizedAlgebra l;
  for (int n = -10; n <= 10; ++n) {
    CAPTURE(n);
    LocalElement xn = mono(n, 0, 0);
    CHECK(l.product({l.y(), xn, mono(-n, 0, 0)}) == l.y());
    // y x^n = q^n x^n y + [n] x^(n-1) z for all integers n
    CHECK(l.multiply(l.y(), xn) == mono(n, 1, 0, q.pow(n)) + mono(n - 1, 0, 1, pq_number(n)));
  }
}

TEST_CASE("localized multiplication is associative and inverts units") {
  LocalizedAlgebra l;
  std::mt19937 rng(31);
  for (int trial = 0; trial < 25; ++trial) {
    LocalElement a = testing::random_local(rng, 3, 2), b = testing::random_local(rng, 3, 2),
                 c = testing::random_local(rng, 3, 2);
    CHECK(l.multiply(l.multiply(a, b), c) == l.multiply(a, l.multiply(b, c)));
    CHECK(l.product({l.x_inv(), l.x(), a}) == a);
    CHECK(l.product({a, l.z(), l.z_inv()}) == a);
  }
  HeisenbergAlgebra h;
  for (int trial = 0; trial < 15; ++trial) {
    PBWElement f = testing::random_pbw(rng, 4), g = testing::random_pbw(rng, 4);
    PBWElement fg = l.multiply(f, g);
    CHECK(fg.is_polynomial());
    CHECK(fg == h.multiply(f, g));
  }
  LocalElement unit = mono(2, 0, -3, p + q);
  CHECK(l.multiply(unit, l.inverse(unit)) == PBWElement(1));
  CHECK(l.multiply(l.inverse(unit), unit) == PBWElement(1));
  CHECK(l.pow(l.x(), -3) == mono(-3, 0, 0));
  CHECK_THROWS_AS(l.inverse(l.y()), std::invalid_argument);
  CHECK_THROWS_AS(l.inverse(l.x() + l.z()), std::invalid_argument);
  CHECK(is_torus_element(unit));
  CHECK_FALSE(is_torus_element(l.y()));
}

TEST_CASE("Virasoro generators in normal form") {
  LocalizedAlgebra l;
  // z^-1 x^(n+1) = p^(n+1) x^(n+1) z^-1 and z^-1 y = p^-1 y z^-1
  CHECK(l.virasoro_L(-1) == mono(0, 1, -1, p.inverse()));
  CHECK(l.virasoro_L(0) == mono(1, 1, -1));
  CHECK(l.virasoro_L(2) == mono(3, 1, -1, p * p));
  for (int n = -5; n <= 5; ++n) CHECK(l.virasoro_L(n) == mono(n + 1, 1, -1, p.pow(n)));
}

TEST_CASE("Virasoro relation in the localization") {
  LocalizedAlgebra gen, dep(Parameters::one_param(2, 3));
  for (int n = -8; n <= 8; ++n)
    for (int m = -8; m <= 8; ++m) {
      CAPTURE(n);
      CAPTURE(m);
      CHECK(verify_virasoro(gen, n, m));
      CHECK(verify_virasoro(dep, n, m));
    }
  // (0, 1): p^-1 L0 L1 - q L1 L0 = [1] L1
  LocalElement l0 = gen.virasoro_L(0), l1 = gen.virasoro_L(1);
  CHECK(gen.multiply(l0, l1).scaled(p.inverse()) - gen.multiply(l1, l0).scaled(q) == l1);
  // (-2, 3): result is [5] L1
  LocalElement a = gen.virasoro_L(-2), b = gen.virasoro_L(3);
  CHECK(gen.multiply(a, b).scaled(p.pow(-5)) - gen.multiply(b, a).scaled(q.pow(5)) == l1.scaled(pq_number(5)));
  CHECK(virasoro_residual(gen, 0, 0).is_zero());
}

TEST_CASE("inner automorphism identities") {
  for (auto [r, s] : {std::pair{1, 1}, {2, 3}, {3, 5}, {1, 2}}) {
    for (const auto& e : verify_inner(r, s)) {
      CAPTURE(e.check);
      CAPTURE(e.params);
      CAPTURE(e.witness);
      CHECK(e.pass);
    }
  }
  CHECK(verify_inner(2, 3).size() == 8);
  CHECK_THROWS_AS(verify_inner(2, 4), std::invalid_argument);
}

TEST_CASE("theta factorization") {
  LocalizedAlgebra l;
  CHECK(verify_theta_factorization(l));
  CHECK(verify_theta_factorization_squared(l));
  CHECK(verify_theta_factorization(LocalizedAlgebra(Parameters::one_param(2, 3))));
  Parameters reciprocal;
  reciprocal.q = p.inverse();
  reciprocal.sqrt_q = Scalar::sqrt_p().inverse();
  CHECK_THROWS_AS(verify_theta_factorization(LocalizedAlgebra(reciprocal)), std::invalid_argument);
}

TEST_CASE("quantum Weyl subring") {
  CHECK(quantum_weyl_subring_check(LocalizedAlgebra()));
  Parameters reciprocal;
  reciprocal.q = p.inverse();
  reciprocal.sqrt_q = Scalar::sqrt_p().inverse();
  LocalizedAlgebra classical(reciprocal);
  CHECK(quantum_weyl_subring_check(classical));
  LocalElement d = classical.weyl_D();
  CHECK(classical.multiply(d, classical.x()) - classical.multiply(classical.x(), d) == PBWElement(1));
  CHECK(quantum_weyl_subring_check(LocalizedAlgebra(Parameters::equal())));
}

TEST_CASE("idealizer generators") {
  LocalizedAlgebra l;
  LocalElement d = l.weyl_D();
  CHECK(in_left_ideal(l, l.multiply(d, d)));
  // D x D = pq x D^2 + D
  auto coords = l.b_coordinates(l.product({d, l.x(), d}));
  REQUIRE(coords.has_value());
  CHECK(coords->size() == 2);
  CHECK(coords->at({1, 2}) == p * q);
  CHECK(coords->at({0, 1}) == Scalar(1));
  CHECK(idealizer_generator_check(l, 8));
  CHECK_FALSE(idealizes(l, l.x()));
  CHECK_FALSE(in_left_ideal(l, PBWElement(1)));
  CHECK_FALSE(l.b_coordinates(l.z()).has_value());
  // D x^i = (pq)^i x^i D + p^(i-1) [i] x^(i-1)
  for (int i = -4; i <= 6; ++i) {
    auto c = l.b_coordinates(l.multiply(d, mono(i, 0, 0)));
    REQUIRE(c.has_value());
    CHECK(c->at({i, 1}) == (p * q).pow(i));
    if (i != 0) CHECK(c->at({i - 1, 0}) == p.pow(i - 1) * pq_number(i));
  }
}
