#include <random>

#include "doctest.h"
#include "heisenweyl/hpq.hpp"
#include "random_elements.hpp"

using namespace heisenweyl;
using testing::random_pbw;

namespace {

const Scalar p = Scalar::p(), q = Scalar::q();
PBWElement mono(int i, int j, int k, const Scalar& c = 1) { return PBWElement::monomial(i, j, k, c); }

}  // namespace

TEST_CASE("pbw_multiply examples") {
  HeisenbergAlgebra h;
  CHECK(h.multiply(h.y(), h.x()) == mono(1, 1, 0, q) + mono(0, 0, 1));
  PBWElement f = mono(2, 1, 3, p) + mono(0, 4, 0, q);
  CHECK(h.multiply(PBWElement(1), f) == f);
  CHECK(h.multiply(f, PBWElement(1)) == f);
  CHECK(h.multiply(h.y(), h.pow(h.x(), 3)) == mono(3, 1, 0, q.pow(3)) + mono(2, 0, 1, pq_number(3)));
  // y^2 x = q^2 x y^2 + [2] z y, and z y = p y z
  CHECK(h.multiply(h.pow(h.y(), 2), h.x()) == mono(1, 2, 0, q * q) + mono(0, 1, 1, pq_number(2) * p));
  CHECK(h.multiply(h.z(), h.x()) == mono(1, 0, 1, p.inverse()));
  CHECK(h.multiply(h.z(), h.y()) == mono(0, 1, 1, p));
  CHECK(h.multiply(h.y(), h.pow(h.x(), 2)).to_string() == "q^2*x^2*y + (q + p^-1)*x*z");
  CHECK(h.multiply(h.y(), h.x()).to_string() == "q*x*y + z");
}

TEST_CASE("pbw_multiply matches the rewriting oracle") {
  HeisenbergAlgebra h;
  RewriteSystem rules = hpq_rules(p.inverse());
  std::mt19937 rng(101);
  for (int trial = 0; trial < 40; ++trial) {
    PBWElement f = random_pbw(rng, 5), g = random_pbw(rng, 5);
    FreeElement oracle = rules.normalize(HeisenbergAlgebra::to_free(f) * HeisenbergAlgebra::to_free(g));
    CHECK(HeisenbergAlgebra::to_free(h.multiply(f, g)) == oracle);
  }
}

TEST_CASE("pbw_multiply is associative") {
  std::mt19937 rng(202);
  for (const Parameters& params : {Parameters::generic(), Parameters::one_param(2, 3)}) {
    HeisenbergAlgebra h(params);
    for (int trial = 0; trial < 25; ++trial) {
      PBWElement a = random_pbw(rng, 4), b = random_pbw(rng, 4), c = random_pbw(rng, 4);
      CHECK(h.multiply(h.multiply(a, b), c) == h.multiply(a, h.multiply(b, c)));
    }
  }
}

TEST_CASE("ident1 and ident2 for n up to 30") {
  HeisenbergAlgebra h;
  for (int n = 1; n <= 30; ++n) {
    CHECK(verify_ident(h, n, Ident::one).pass);
    CHECK(verify_ident(h, n, Ident::two).pass);
  }
  CheckEntry e = verify_ident(h, 10, Ident::one);
  CHECK(e.suite == "identities");
  CHECK(e.check == "ident1 n=10");
  CHECK_FALSE(verify_ident(h, 0, Ident::one).pass);
}

TEST_CASE("commutators") {
  HeisenbergAlgebra h;
  CHECK(h.quommutator(h.y(), h.x(), q) == h.z());
  CHECK(h.commutator(h.x(), h.x()).is_zero());
  CHECK(h.quommutator(h.y(), h.x(), p.inverse()) == h.z() + mono(1, 1, 0, q - p.inverse()));
  std::mt19937 rng(3);
  PBWElement f = random_pbw(rng, 3), g = random_pbw(rng, 3);
  CHECK(h.quommutator(f, g, 1) == h.commutator(f, g));
}

TEST_CASE("theta and omega") {
  HeisenbergAlgebra h;
  Scalar pq = p * q;
  // (1 - pq)(q xy + z) - z
  CHECK(h.theta() == mono(1, 1, 0, (Scalar(1) - pq) * q) + mono(0, 0, 1, -pq));
  CHECK(h.quommutator(h.y(), h.x(), p.inverse()).scaled(-pq) == h.theta());
  CHECK(h.omega(1, 1) == h.multiply(h.quommutator(h.y(), h.x(), p.inverse()), h.z()));
  CHECK_THROWS_AS(h.omega(2, 4), std::invalid_argument);

  Parameters reciprocal;
  reciprocal.q = p.inverse();
  reciprocal.sqrt_q = Scalar::sqrt_p().inverse();
  CHECK(HeisenbergAlgebra(reciprocal).theta() == -h.z());
}

TEST_CASE("omega is central exactly in the dependent case") {
  HeisenbergAlgebra h;
  for (auto [r, s] : {std::pair{1, 1}, {1, 2}, {2, 3}, {3, 5}}) {
    CAPTURE(r);
    CAPTURE(s);
    PBWElement om = h.omega(r, s);
    CHECK(is_central(h, om, Specialization{OneParam{r, s}}));
    CHECK_FALSE(is_central(h, om));
    // Independent route: build the algebra over p = t^r, q = t^s directly.
    HeisenbergAlgebra dep(Parameters::one_param(r, s));
    CHECK(is_central(dep, dep.omega(r, s)));
  }
  // Omega x = q^r p^-s x Omega
  PBWElement om = h.omega(2, 3);
  CHECK(h.multiply(om, h.x()) == h.multiply(h.x(), om).scaled(q.pow(2) * p.pow(-3)));
  CHECK_FALSE(is_central(h, h.z()));
}

TEST_CASE("normal elements") {
  HeisenbergAlgebra h;
  CHECK(check_normal(h, h.theta(), {q, q.inverse(), 1}));
  CHECK(check_normal(h, h.z(), {p.inverse(), p, 1}));
  CHECK_FALSE(check_normal(h, h.theta(), {q, q, 1}));
  PBWElement xy = h.x() + h.y();
  for (const ScalarTwist& t : {ScalarTwist{1, 1, 1}, ScalarTwist{q, q.inverse(), 1}, ScalarTwist{p, p, p}})
    CHECK_FALSE(check_normal(h, xy, t));
}

TEST_CASE("morphisms") {
  CHECK(verify_morphism(identity_morphism()));
  CHECK(verify_morphism(inversion_morphism()));
  CHECK(verify_morphism(swap_morphism()));
  CHECK(verify_morphism(tau_involution()));
  CHECK(verify_morphism(inversion_morphism(Parameters::one_param(2, 3))));

  AlgebraMorphism tau = tau_involution();
  HeisenbergAlgebra hqq(tau.source);
  CHECK(apply_morphism(tau, hqq.theta()) == hqq.z().scaled(q * q));
  // tau^2 is the diagonal scaling x -> qx, y -> qy, z -> q^2 z
  AlgebraMorphism tt = compose(tau, tau);
  CHECK(tt.x == hqq.x().scaled(q));
  CHECK(tt.y == hqq.y().scaled(q));
  CHECK(tt.z == hqq.z().scaled(q * q));

  Parameters params;
  AlgebraMorphism back = inversion_morphism(params.inverted());
  AlgebraMorphism round = compose(back, inversion_morphism(params));
  HeisenbergAlgebra h;
  CHECK(round.x == h.x());
  CHECK(round.y == h.y());
  CHECK(round.z == h.z());

  // Sentinel: dropping the scale on z breaks the first relation.
  AlgebraMorphism broken = inversion_morphism();
  broken.z = HeisenbergAlgebra(broken.target).z();
  CHECK_FALSE(verify_morphism(broken));
  broken = swap_morphism();
  broken.z = HeisenbergAlgebra(broken.target).theta();
  CHECK_FALSE(verify_morphism(broken));
}

TEST_CASE("down-up relations") {
  HeisenbergAlgebra h;
  CHECK(verify_downup(h));
  Parameters classical;
  classical.p = classical.q = classical.sqrt_p = classical.sqrt_q = 1;
  CHECK(verify_downup(HeisenbergAlgebra(classical)));
  auto res = downup_residuals(h, p + q, -p.inverse() * q);
  CHECK(res[0] == h.multiply(h.multiply(h.x(), h.y()), h.x()).scaled(p.inverse() - p));
}

TEST_CASE("Zhang twist") {
  HeisenbergAlgebra h;
  for (const auto& r : zhang_twist_residuals(h)) CHECK(r.is_zero());
  CHECK(zhang_twist_product(h, h.z(), h.x()) == h.multiply(h.z(), h.x()).scaled(p));
  CHECK(twist_degree({1, 2, 3}) == 9);
  // The twisted product is associative on homogeneous elements.
  std::mt19937 rng(9);
  for (int trial = 0; trial < 10; ++trial) {
    PBWElement a = random_pbw(rng, 3), b = random_pbw(rng, 3), c = random_pbw(rng, 3);
    auto star = [&](const PBWElement& u, const PBWElement& v) { return zhang_twist_product(h, u, v); };
    CHECK(star(star(a, b), c) == star(a, star(b, c)));
  }
}

TEST_CASE("root of unity centrality") {
  HeisenbergAlgebra h;
  Quotient phi12 = Quotient::cyclotomic(12, 4, 3);
  CHECK(root_of_unity_centrality(h, 3, 4, phi12));
  CHECK(is_zero(specialize(pq_number(12), Specialization{phi12})));
  CHECK_FALSE(is_central(h, h.pow(h.x(), 12)));
  CHECK_FALSE(is_central(h, h.pow(h.z(), 2), Specialization{phi12}));
  // p = -1, q = i: orders 2 and 4, [8] = 0
  CHECK(root_of_unity_centrality(h, 2, 4, Quotient::cyclotomic(4, 2, 1)));
  // p = q = 1 has [1] = 1, so x does not commute with y (yx - xy = z)
  CHECK_FALSE(root_of_unity_centrality(h, 1, 1, Quotient::cyclotomic(1, 1, 1)));
}

TEST_CASE("from_free and printing") {
  HeisenbergAlgebra h;
  FreeElement e = parse_expression("y*x^2", hpq_alphabet());
  CHECK(h.from_free(e) == h.multiply(h.y(), h.pow(h.x(), 2)));
  CHECK(PBWElement().to_string() == "0");
  CHECK(mono(1, 0, -1, -p).to_string() == "-p*x*z^-1");
  HeisenbergAlgebra t(Parameters::one_param(2, 3));
  CHECK(t.multiply(t.y(), t.x()).to_string(t.params().names) == "t^3*x*y + z");
}
