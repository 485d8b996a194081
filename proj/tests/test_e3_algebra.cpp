#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <functional>
#include <vector>

#include "bracket_oracle.hpp"
#include "helpers.hpp"
#include "neumann/e3.hpp"
#include "neumann/generators.hpp"
#include "neumann/potentials.hpp"

using namespace neumann;
using test_helpers::random_polynomial;

namespace {

Polynomial pv(Var v) { return Polynomial::variable(v); }
Polynomial px(int i) { return Polynomial::variable(X(i)); }
Polynomial pm(int i) { return Polynomial::variable(M(i)); }
Polynomial pa(int i) { return Polynomial::variable(a(i)); }

int eps(int i, int j, int k) { return bracket_oracle::levi_civita(i - 1, j - 1, k - 1); }

}  // namespace

TEST_CASE("bracket reproduces the structure-constant table on all 36 pairs") {
  const std::array<Polynomial, 6> gens = {pm(1), pm(2), pm(3), px(1), px(2), px(3)};
  for (int i = 1; i <= 3; ++i) {
    for (int j = 1; j <= 3; ++j) {
      const int k = (i == j) ? 1 : 6 - i - j;
      const int sign = eps(i, j, k);
      // {M_i, M_j} = eps M_k
      Polynomial expected = (i == j) ? Polynomial() : Rational(sign) * pm(k);
      CHECK(poisson_bracket(pm(i), pm(j)) == expected);
      // {M_i, X_j} = eps X_k and {X_i, M_j} = eps X_k
      expected = (i == j) ? Polynomial() : Rational(sign) * px(k);
      CHECK(poisson_bracket(pm(i), px(j)) == expected);
      CHECK(poisson_bracket(px(i), pm(j)) == expected);
      // {X_i, X_j} = 0
      CHECK(poisson_bracket(px(i), px(j)).is_zero());
    }
  }
}

TEST_CASE("closed gradient formula agrees with the Leibniz-recursion oracle") {
  RationalSampler rng(2024);
  for (int trial = 0; trial < 40; ++trial) {
    const Polynomial f = random_polynomial(rng, 3);
    const Polynomial g = random_polynomial(rng, 3);
    CHECK(poisson_bracket(f, g) == bracket_oracle::poisson(f, g));
  }
}

TEST_CASE("bracket axioms: antisymmetry, Leibniz, Jacobi") {
  RationalSampler rng(31337);
  for (int trial = 0; trial < 12; ++trial) {
    const Polynomial f = random_polynomial(rng, 3);
    const Polynomial g = random_polynomial(rng, 3);
    const Polynomial h = random_polynomial(rng, 3);
    CHECK(poisson_bracket(f, g) == -poisson_bracket(g, f));
    CHECK(poisson_bracket(f, g * h) ==
          g * poisson_bracket(f, h) + poisson_bracket(f, g) * h);
    const Polynomial jacobi = poisson_bracket(f, poisson_bracket(g, h)) +
                              poisson_bracket(g, poisson_bracket(h, f)) +
                              poisson_bracket(h, poisson_bracket(f, g));
    CHECK(jacobi.is_zero());
  }
}

TEST_CASE("parameters are central") {
  RationalSampler rng(5);
  for (int trial = 0; trial < 10; ++trial) {
    const Polynomial f = random_polynomial(rng, 3);
    CHECK(poisson_bracket(pa(1) * pa(3), f).is_zero());
  }
}

TEST_CASE("rotation generator matches the bracket with M") {
  RationalSampler rng(88);
  for (int trial = 0; trial < 15; ++trial) {
    // f depending only on X
    Polynomial f;
    for (int t = 0; t < 4; ++t) {
      Monomial m = Monomial::one();
      for (int d = rng.next_int(0, 4); d > 0; --d) m.e[rng.next_int(0, 2)] += 1;
      f += Polynomial::monomial(m, rng.next_rational(9, 9));
    }
    for (int i = 1; i <= 3; ++i) {
      CHECK(poisson_bracket(pm(i), f) == -hat_L(i, f));
    }
  }
}

TEST_CASE("rotation generator on the defining quadratics") {
  CHECK(hat_L(1, px(2)) == -px(3));
  CHECK(hat_L(1, px(3)) == px(2));
  CHECK(hat_L(1, casimir_C1()).is_zero());
  CHECK(hat_L(2, casimir_C1()).is_zero());
  CHECK(hat_L(3, casimir_C1()).is_zero());
  // hat_L_1 V = 2 (a2 - a3) X2 X3: the sign follows from hat_L_1 = X2 d3 - X3 d2
  // applied to (a3+a1)X2^2 + (a1+a2)X3^2, and feeds every downstream identity.
  const Polynomial expected = Rational(2) * (pa(2) - pa(3)) * px(2) * px(3);
  CHECK(hat_L(1, neumann_V()) == expected);
  // hat_L_1 U = a1 * hat_L_1 V, the proportionality that makes the pair commute
  CHECK(hat_L(1, neumann_U()) == pa(1) * expected);
  for (int i = 1; i <= 3; ++i) {
    CHECK(hat_L(i, neumann_U()) == pa(i) * hat_L(i, neumann_V()));
  }
}

TEST_CASE("Casimirs bracket to zero with every monomial of degree <= 4") {
  std::vector<Monomial> monos = {Monomial::one()};
  // enumerate all monomials of degree <= 4 in the six phase-space variables
  std::function<void(Monomial, int, int)> build = [&](Monomial m, int next, int remaining) {
    if (next == 6) return;
    for (int e = 0; e <= remaining; ++e) {
      Monomial mm = m;
      mm.e[next] = static_cast<uint8_t>(e);
      if (e > 0) monos.push_back(mm);
      build(mm, next + 1, remaining - e);
    }
  };
  build(Monomial::one(), 0, 4);
  const Polynomial c1 = casimir_C1();
  const Polynomial c2 = casimir_C2();
  for (const Monomial& m : monos) {
    const Polynomial f = Polynomial::monomial(m, Rational(1));
    CHECK(poisson_bracket(c1, f).is_zero());
    CHECK(poisson_bracket(c2, f).is_zero());
  }
}

TEST_CASE("quadratic pair bracket expands through the rotation generators") {
  // {H, I} = 2 sum_i M_i hat_L(i, U - a_i V) for the quadratic pair
  const Polynomial h = kinetic_H2() + neumann_U();
  const Polynomial i2 = kinetic_I2() + neumann_V();
  Polynomial rhs;
  for (int i = 1; i <= 3; ++i) {
    rhs += Rational(2) * pm(i) * hat_L(i, neumann_U() - pa(i) * neumann_V());
  }
  CHECK(poisson_bracket(h, i2) == rhs);
}

TEST_CASE("hamiltonian vector fields of Casimirs and kinetic energy") {
  const VectorField zero = hamiltonian_vector_field(casimir_C1());
  for (int i = 0; i < 3; ++i) {
    CHECK(zero.xdot[i].is_zero());
    CHECK(zero.mdot[i].is_zero());
  }
  const VectorField kin = hamiltonian_vector_field(pm(1).pow(2) + pm(2).pow(2) + pm(3).pow(2));
  // Xdot = 2 (X x M), Mdot = 0
  CHECK(kin.xdot[0] == Rational(2) * (px(2) * pm(3) - px(3) * pm(2)));
  CHECK(kin.xdot[1] == Rational(2) * (px(3) * pm(1) - px(1) * pm(3)));
  CHECK(kin.xdot[2] == Rational(2) * (px(1) * pm(2) - px(2) * pm(1)));
  for (int i = 0; i < 3; ++i) CHECK(kin.mdot[i].is_zero());
  // componentwise oracle: xdot_i = {H, X_i}
  const Polynomial h2 = kinetic_H2() + neumann_U();
  const VectorField vf = hamiltonian_vector_field(h2);
  for (int i = 1; i <= 3; ++i) {
    CHECK(vf.xdot[i - 1] == poisson_bracket(h2, px(i)));
    CHECK(vf.mdot[i - 1] == poisson_bracket(h2, pm(i)));
  }
}

TEST_CASE("constrained sampling lands exactly on the orbit") {
  for (const uint64_t seed : {1ULL, 2ULL, 3ULL, 99ULL, 31415ULL}) {
    const ConstrainedPoint p = sample_constrained_point(seed);
    Rational c1(0), c2(0);
    for (int i = 0; i < 3; ++i) {
      c1 = c1 + p.X[i] * p.X[i];
      c2 = c2 + p.X[i] * p.M[i];
    }
    CHECK(c1 == Rational(1));
    CHECK(c2 == Rational(0));
  }
  // determinism
  const ConstrainedPoint p1 = sample_constrained_point(42);
  const ConstrainedPoint p2 = sample_constrained_point(42);
  const ConstrainedPoint p3 = sample_constrained_point(43);
  CHECK(p1.X[0] == p2.X[0]);
  CHECK(p1.M[2] == p2.M[2]);
  CHECK(!(p1.X[0] == p3.X[0] && p1.X[1] == p3.X[1] && p1.X[2] == p3.X[2]));
}

TEST_CASE("partner derivations reproduce the canonical pair") {
  CHECK(derive_quadratic_partner() == neumann_V());
  CHECK(derive_hamiltonian_potential() == neumann_U());
  const auto relations = partner_relations();
  CHECK((relations[0] + relations[1] + relations[2]).is_zero());
  // each relation is the prefixed difference -a_i (a_j - a_k)
  CHECK(relations[0] == -pa(1) * (pa(2) - pa(3)));
  CHECK(relations[1] == -pa(2) * (pa(3) - pa(1)));
  CHECK(relations[2] == -pa(3) * (pa(1) - pa(2)));
}

TEST_CASE("quadratic pair closed-form bracket identity") {
  const IdentityCheck check = verify_h2_i2_closed_form();
  CHECK(check.ok);
  CHECK(check.residual.is_zero());
}

TEST_CASE("commutation verification, symbolic") {
  for (int n = 1; n <= 3; ++n) {
    const CommutationReport rep = verify_commutation(n, CommutationMode::symbolic);
    CHECK(rep.ok);
    CHECK(rep.residual.is_zero());
  }
}

TEST_CASE("commutation verification, sampled points") {
  const CommutationReport rep = verify_commutation(2, CommutationMode::points, 10, 7);
  CHECK(rep.ok);
  CHECK(rep.points_checked == 10);
  // determinism: the same seed must re-verify identically
  const CommutationReport again = verify_commutation(2, CommutationMode::points, 10, 7);
  CHECK(again.ok);
  CHECK(again.points_checked == rep.points_checked);
}

TEST_CASE("negative control: the separable quartic potential does not commute") {
  // Pairing the Neumann kinetic part with the k=2 quartic of the other family
  // must break commutation - guards against a bracket that is trivially zero.
  const Polynomial h = kinetic_H2() + neumann_U();
  const Polynomial fake_i = kinetic_I2() + wojciechowski(2);
  CHECK(!poisson_bracket(h, fake_i).is_zero());
  // and a plainly wrong partner fails too
  const Polynomial broken = kinetic_I2() + px(1) * px(2);
  CHECK(!poisson_bracket(h, broken).is_zero());
}
