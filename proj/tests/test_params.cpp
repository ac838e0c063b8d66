#include <random>

#include "doctest.h"
#include "heisenweyl/parameters.hpp"
#include "heisenweyl/scalar_parser.hpp"
#include "heisenweyl/specialization.hpp"
#include "random_scalars.hpp"

using namespace heisenweyl;
using heisenweyl::testing::random_scalar;

namespace {
const Scalar p = Scalar::p(), q = Scalar::q();
}

TEST_CASE("scalar arithmetic examples") {
  Scalar one_minus_pq = Scalar(1) - p * q;
  CHECK((one_minus_pq * one_minus_pq.inverse()).is_one());
  CHECK(Scalar::sqrt_p() * Scalar::sqrt_p() == p);
  // (q + p^-1)(q - p^-1) = q^2 - p^-2
  Scalar lhs = (q.pow(2) - p.pow(-2)) / (q - p.inverse());
  CHECK(lhs == q + p.inverse());
  CHECK(lhs.is_laurent());
  CHECK_THROWS_AS(Scalar(1) / Scalar(0), std::domain_error);
}

TEST_CASE("reduced form is canonical") {
  Scalar a = (p + 1) / (p * p - 1);
  Scalar b = Scalar(1) / (p - 1);
  CHECK(a == b);
  CHECK(a.den().leading_term().second.is_one());
  Scalar c = (q * 3) / (q * q * 6 + q * 3);
  CHECK(c == Scalar(1) / (q * 2 + 1));
}

TEST_CASE("field axioms on random triples") {
  std::mt19937 rng(20240611);
  for (int trial = 0; trial < 60; ++trial) {
    Scalar a = random_scalar(rng, trial % 2 == 0), b = random_scalar(rng), c = random_scalar(rng);
    CHECK((a + b) + c == a + (b + c));
    CHECK((a * b) * c == a * (b * c));
    CHECK(a * (b + c) == a * b + a * c);
    CHECK(a + b == b + a);
    CHECK(a * b == b * a);
    CHECK((a * a.inverse()).is_one());
    CHECK((a - a).is_zero());
    CHECK((a / b) * b == a);
  }
}

TEST_CASE("laurent_gcd") {
  LaurentPoly P = p.num(), Q = q.num();
  CHECK(laurent_gcd(P, P).is_one());  // p is a unit of the Laurent ring
  LaurentPoly f = LaurentPoly(1) - P * Q;
  CHECK(laurent_gcd(f, P * f) == laurent_gcd(f, f));
  CHECK(*divide_exact(laurent_gcd(f, P * f), f) == LaurentPoly(-1));

  // univariate Euclid oracle on the q-slot
  UnivariatePoly u2 = UnivariatePoly::monomial(2) - UnivariatePoly(GaussianRational(1));
  UnivariatePoly u3 = UnivariatePoly::monomial(3) - UnivariatePoly(GaussianRational(1));
  UnivariatePoly expected = gcd(u2, u3);  // u - 1
  REQUIRE(expected.degree() == 1);
  LaurentPoly g = laurent_gcd(Q * Q - 1, Q * Q * Q - 1);
  LaurentPoly expected_laurent = Q.scaled(expected.coeff(1)) + LaurentPoly(expected.coeff(0));
  CHECK(g == expected_laurent);
}

TEST_CASE("laurent_gcd divides both inputs") {
  std::mt19937 rng(7);
  for (int trial = 0; trial < 40; ++trial) {
    LaurentPoly common = heisenweyl::testing::random_laurent(rng, 2, 2, trial % 3 == 0);
    LaurentPoly a = common * heisenweyl::testing::random_laurent(rng, 3, 2);
    LaurentPoly b = common * heisenweyl::testing::random_laurent(rng, 3, 2);
    LaurentPoly g = laurent_gcd(a, b);
    auto qa = divide_exact(a, g), qb = divide_exact(b, g);
    REQUIRE(qa.has_value());
    REQUIRE(qb.has_value());
    CHECK(*qa * g == a);
    CHECK(*qb * g == b);
    CHECK(divide_exact(g, common).has_value());
  }
}

TEST_CASE("pq_number examples") {
  CHECK(pq_number(0).is_zero());
  CHECK(pq_number(1).is_one());
  CHECK(pq_number(2) == q + p.inverse());
  CHECK(pq_number(-1) == -(p / q));
  CHECK(pq_factorial(0).is_one());
  CHECK(pq_factorial(1).is_one());
  CHECK(pq_factorial(2) == q + p.inverse());
  CHECK(pq_factorial(3) == pq_number(2) * pq_number(3));
}

TEST_CASE("pq_number recurrences for |n| <= 100") {
  for (int n = -100; n <= 100; ++n) {
    Scalar bn = pq_number(n), bn1 = pq_number(n + 1);
    REQUIRE(bn.is_laurent());
    CHECK(bn1 == p.pow(-n) + q * bn);
    CHECK(bn1 == q.pow(n) + p.inverse() * bn);
  }
}

TEST_CASE("sum form at parameter values matches the fraction") {
  Parameters generic = Parameters::generic();
  for (int n = -60; n <= 60; ++n) CHECK(generic.bracket(n) == pq_number(n));
}

TEST_CASE("p = q gives the one-parameter q-number") {
  const Scalar t = LaurentPoly::monomial({2, 0});
  for (int n = -50; n <= 50; ++n) {
    Scalar expected = (t.pow(n) - t.pow(-n)) / (t - t.inverse());
    CHECK(specialize(pq_number(n), OneParam{1, 1}) == expected);
  }
}

TEST_CASE("specialize examples") {
  const Scalar t = LaurentPoly::monomial({2, 0});
  CHECK(specialize(p * q, OneParam{2, 3}) == t.pow(5));
  CHECK(specialize(Scalar(1), OneParam{2, 3}).is_one());
  CHECK(specialize(Scalar(1), Numeric{1.3, 1.7}) == std::complex<double>(1.0));
  Quotient phi12 = Quotient::cyclotomic(12, 4, 3);
  CHECK(specialize(pq_number(12), phi12).is_zero());
  CHECK_FALSE(specialize(pq_number(11), phi12).is_zero());
  CHECK(specialize(Scalar(1), phi12).value() == UnivariatePoly(GaussianRational(1)));
}

TEST_CASE("specialize reports vanishing denominators") {
  Scalar beta = Scalar(1) / (Scalar(1) - p * q);
  // pq = 1 at p = u, q = u^-1 ... use numeric p*q = 1
  CHECK_THROWS_AS(specialize(beta, Numeric{2.0, 0.5}), SpecializationError);
  CHECK_THROWS_AS(specialize(Scalar(1) / (p - q), OneParam{1, 1}), SpecializationError);
  Quotient phi4 = Quotient::cyclotomic(4, 1, 3);  // pq = u^4 = 1
  CHECK_THROWS_AS(specialize(beta, phi4), SpecializationError);
  // q = u^3 mod Phi_12 has no square root among powers of u
  CHECK_THROWS_AS(specialize(Scalar::sqrt_q(), Quotient::cyclotomic(12, 4, 3)), SpecializationError);
}

TEST_CASE("specialize is a ring homomorphism") {
  std::mt19937 rng(99);
  Quotient phi12 = Quotient::cyclotomic(12, 4, 3);
  Numeric num{1.3, 1.7};
  for (int trial = 0; trial < 40; ++trial) {
    Scalar a = random_scalar(rng), b = random_scalar(rng);
    for (OneParam op : {OneParam{2, 3}, OneParam{1, 1}, OneParam{3, 5}}) {
      auto defined = [&](const Scalar& s) { return !specialize(s.den(), op).is_zero(); };
      if (!defined(a) || !defined(b)) continue;
      CHECK(specialize(a * b, op) == specialize(a, op) * specialize(b, op));
      CHECK(specialize(a + b, op) == specialize(a, op) + specialize(b, op));
    }
    auto close = [](std::complex<double> x, std::complex<double> y) {
      return std::abs(x - y) <= 1e-9 * (1.0 + std::abs(x) + std::abs(y));
    };
    CHECK(close(specialize(a * b, num), specialize(a, num) * specialize(b, num)));
    CHECK(close(specialize(a + b, num), specialize(a, num) + specialize(b, num)));
    try {
      Residue ra = specialize(a, phi12), rb = specialize(b, phi12);
      CHECK(specialize(a * b, phi12) == ra * rb);
      CHECK(specialize(a + b, phi12) == ra + rb);
    } catch (const SpecializationError&) {
      // random denominator hit a zero divisor of the quotient ring
    }
  }
}

TEST_CASE("cyclotomic images have the right orders") {
  Quotient phi12 = Quotient::cyclotomic(12, 4, 3);
  Residue pu(phi12.p_image, phi12.modulus), qu(phi12.q_image, phi12.modulus);
  Residue one(UnivariatePoly(GaussianRational(1)), phi12.modulus);
  CHECK(pu.pow(3) == one);
  CHECK_FALSE(pu == one);
  CHECK(qu.pow(4) == one);
  CHECK_FALSE(qu.pow(2) == one);
  CHECK(cyclotomic(12) == UnivariatePoly({1, 0, -1, 0, 1}));
}

TEST_CASE("scalar parser") {
  CHECK(parse_scalar("p^(1/2)*p^(1/2)") == p);
  CHECK(parse_scalar("(1-p*q)^(-1)") == (Scalar(1) - p * q).inverse());
  CHECK(parse_scalar("[4]_{p,q}") == pq_number(4));
  CHECK(parse_scalar("[3]!") == pq_factorial(3));
  CHECK(parse_scalar("2 i q - p^-1") == Scalar(2) * Scalar::i() * q - p.inverse());
  CHECK(parse_scalar("q^2 - p^(-3/2)") == q.pow(2) - Scalar::sqrt_p().pow(-3));
  CHECK(parse_scalar("t^2", Parameters::one_param(2, 3)) == LaurentPoly::monomial({4, 0}));
  CHECK_THROWS_AS(parse_scalar("t"), ParseError);
  CHECK_THROWS_AS(parse_scalar("p +"), ParseError);
  CHECK_THROWS_AS(parse_scalar("(p+q)^(1/2)"), ParseError);
  CHECK_THROWS_AS(parse_scalar("1/0"), ParseError);
  try {
    parse_scalar("p * )");
    FAIL("expected parse error");
  } catch (const ParseError& e) {
    CHECK(e.position() == 4);
  }
}

TEST_CASE("printing") {
  CHECK(pq_number(2).to_string() == "q + p^-1");
  CHECK(Scalar::sqrt_p().to_string() == "p^(1/2)");
  CHECK((Scalar(1) - p * q).inverse().to_string() == "(-1)/(p*q - 1)");
  CHECK(parse_scalar("t^3", Parameters::one_param(1, 2)).to_string({"t", "q"}) == "t^3");
}

TEST_CASE("specialization parsing") {
  auto s = parse_specialization("oneparam:2,3");
  CHECK(std::get<OneParam>(s).r == 2);
  CHECK_THROWS_AS(parse_specialization("oneparam:2,4"), std::invalid_argument);
  CHECK_THROWS_AS(parse_specialization("bogus"), std::invalid_argument);
  CHECK(std::holds_alternative<Quotient>(parse_specialization("cyclotomic:12:4,3")));
  CHECK(std::holds_alternative<Numeric>(parse_specialization("numeric:1.3,1.7")));
}
