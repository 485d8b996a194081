#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <map>

#include "helpers.hpp"
#include "neumann/generators.hpp"
#include "neumann/polynomial.hpp"

using namespace neumann;
using test_helpers::random_polynomial;

namespace {

Polynomial pv(Var v) { return Polynomial::variable(v); }

}  // namespace

TEST_CASE("rational arithmetic is exact and canonical") {
  CHECK(Rational(2, 4) == Rational(1, 2));
  CHECK(Rational(1, -2) == Rational(-1, 2));
  CHECK(Rational(-3, -6) == Rational(1, 2));
  CHECK(Rational(0, 7) == Rational(0));
  CHECK((Rational(1, 3) + Rational(1, 6)) == Rational(1, 2));
  CHECK((Rational(2, 3) * Rational(9, 4)) == Rational(3, 2));
  CHECK((Rational(1) / Rational(3)).str() == "1/3");
  CHECK(Rational(7, 3).num_str() == "7");
  CHECK(Rational(7, 3).den_str() == "3");
  CHECK(Rational(-5).sign() == -1);
  CHECK(Rational(0).is_zero());

  // Dyadic doubles convert exactly.
  CHECK(Rational::from_double(0.5) == Rational(1, 2));
  CHECK(Rational::from_double(-2.75) == Rational(-11, 4));
  CHECK(Rational::from_double(0.1).to_double() == 0.1);
  CHECK_THROWS_AS(Rational::from_double(1.0 / 0.0), std::invalid_argument);
}

TEST_CASE("monomial ordering is graded lexicographic") {
  const Monomial one = Monomial::one();
  const Monomial x1 = Monomial::of(Var::X1, 1);
  const Monomial x2 = Monomial::of(Var::X2, 1);
  const Monomial x1x2 = x1 * x2;
  const Monomial x1sq = Monomial::of(Var::X1, 2);
  CHECK(one < x1);
  CHECK(x1 < x1x2);       // degree dominates
  CHECK(x2 < x1sq);       // degree dominates regardless of variable
  CHECK(one.degree() == 0);
  CHECK(x1x2.degree() == 2);
  CHECK(x1sq.degree_in(Var::X1) == 2);
  CHECK(x1sq.degree_in(Var::X2) == 0);
}

TEST_CASE("monomial exponent overflow is detected") {
  const Monomial big = Monomial::of(Var::X1, 255);
  CHECK_THROWS_AS(big * Monomial::of(Var::X1, 1), std::overflow_error);
}

TEST_CASE("ring axioms hold on random polynomials") {
  RationalSampler rng(17);
  for (int trial = 0; trial < 25; ++trial) {
    const Polynomial p = random_polynomial(rng, 3);
    const Polynomial q = random_polynomial(rng, 3);
    const Polynomial r = random_polynomial(rng, 3);
    CHECK(p + q == q + p);
    CHECK(p * q == q * p);
    CHECK((p + q) * r == p * r + q * r);
    CHECK((p * q) * r == p * (q * r));
    CHECK(p - p == Polynomial());
    CHECK((p * Rational(0)).is_zero());
  }
}

TEST_CASE("partial derivative satisfies the product rule") {
  RationalSampler rng(99);
  for (int trial = 0; trial < 20; ++trial) {
    const Polynomial p = random_polynomial(rng, 3);
    const Polynomial q = random_polynomial(rng, 3);
    for (const Var v : {Var::X1, Var::M2, Var::a3}) {
      CHECK(partial(p * q, v) == partial(p, v) * q + p * partial(q, v));
    }
  }
  CHECK(partial(pv(Var::X1).pow(3), Var::X1) == Rational(3) * pv(Var::X1).pow(2));
  CHECK(partial(Polynomial(Rational(5)), Var::X1).is_zero());
}

TEST_CASE("substitution is a ring homomorphism and matches evaluation") {
  RationalSampler rng(7);
  for (int trial = 0; trial < 10; ++trial) {
    const Polynomial p = random_polynomial(rng, 3);
    const Polynomial q = random_polynomial(rng, 3);
    std::map<Var, Polynomial> bind;
    bind[Var::X1] = random_polynomial(rng, 2);
    bind[Var::M3] = random_polynomial(rng, 2);
    CHECK(substitute(p * q, bind) == substitute(p, bind) * substitute(q, bind));
    CHECK(substitute(p + q, bind) == substitute(p, bind) + substitute(q, bind));

    std::array<Rational, kNumVars> point{};
    std::map<Var, Polynomial> const_bind;
    for (int i = 0; i < kNumVars; ++i) {
      point[i] = rng.next_rational(5, 5);
      const_bind[static_cast<Var>(i)] = Polynomial(point[i]);
    }
    const Polynomial collapsed = substitute(p, const_bind);
    CHECK(collapsed.degree() == 0);
    CHECK(evaluate(p, point) == collapsed.coeff(Monomial::one()));
  }
}

TEST_CASE("unbound variables pass through substitution") {
  std::map<Var, Polynomial> bind;
  bind[Var::X1] = pv(Var::X2);
  const Polynomial p = pv(Var::X1) * pv(Var::M1) + pv(Var::a2);
  CHECK(substitute(p, bind) == pv(Var::X2) * pv(Var::M1) + pv(Var::a2));
}

TEST_CASE("sphere reduction rewrites X3 powers and is idempotent") {
  const Polynomial x1 = pv(Var::X1), x2 = pv(Var::X2), x3 = pv(Var::X3);
  const Polynomial expected = Polynomial(Rational(1)) - x1 * x1 - x2 * x2;
  CHECK(reduce_mod_sphere(x3 * x3) == expected);
  CHECK(reduce_mod_sphere(x3 * x3 * x3) == expected * x3);
  CHECK(reduce_mod_sphere(casimir_C1()) == Polynomial(Rational(1)));

  RationalSampler rng(23);
  for (int trial = 0; trial < 15; ++trial) {
    const Polynomial p = random_polynomial(rng, 4);
    const Polynomial q = random_polynomial(rng, 4);
    const Polynomial rp = reduce_mod_sphere(p);
    CHECK(reduce_mod_sphere(rp) == rp);  // idempotent
    // homomorphism onto the canonical image
    CHECK(reduce_mod_sphere(p * q) == reduce_mod_sphere(rp * reduce_mod_sphere(q)));
    // the defect is always a multiple of the sphere relation: adding the relation
    // to any polynomial never changes the canonical form
    CHECK(reduce_mod_sphere(p + casimir_C1() - Polynomial(Rational(1))) == rp);
  }
}

TEST_CASE("reduction leaves M and parameter variables untouched") {
  const Polynomial p = pv(Var::M1).pow(3) * pv(Var::a2) + pv(Var::M2);
  CHECK(reduce_mod_sphere(p) == p);
}

TEST_CASE("text form is deterministic and readable") {
  const Polynomial p = pv(Var::X1) * pv(Var::X1) * Rational(2) - pv(Var::M3);
  CHECK(p.str() == p.str());
  CHECK(!p.str().empty());
  CHECK(Polynomial().str() == "0");
}

TEST_CASE("generator polynomials match their defining formulas") {
  const Polynomial u = neumann_U();
  const Polynomial v = neumann_V();
  // U = a2a3 X1^2 + a3a1 X2^2 + a1a2 X3^2
  Polynomial u_expected = pv(Var::a2) * pv(Var::a3) * pv(Var::X1).pow(2) +
                          pv(Var::a3) * pv(Var::a1) * pv(Var::X2).pow(2) +
                          pv(Var::a1) * pv(Var::a2) * pv(Var::X3).pow(2);
  CHECK(u == u_expected);
  // V = (a2+a3) X1^2 + (a3+a1) X2^2 + (a1+a2) X3^2
  Polynomial v_expected = (pv(Var::a2) + pv(Var::a3)) * pv(Var::X1).pow(2) +
                          (pv(Var::a3) + pv(Var::a1)) * pv(Var::X2).pow(2) +
                          (pv(Var::a1) + pv(Var::a2)) * pv(Var::X3).pow(2);
  CHECK(v == v_expected);
  // V = (a1+a2+a3) C1 - sum a_i X_i^2
  const Polynomial trace = pv(Var::a1) + pv(Var::a2) + pv(Var::a3);
  const Polynomial phi1 = pv(Var::a1) * pv(Var::X1).pow(2) +
                          pv(Var::a2) * pv(Var::X2).pow(2) +
                          pv(Var::a3) * pv(Var::X3).pow(2);
  CHECK(v == trace * casimir_C1() - phi1);
  CHECK(casimir_C2() == pv(Var::X1) * pv(Var::M1) + pv(Var::X2) * pv(Var::M2) +
                            pv(Var::X3) * pv(Var::M3));
}
