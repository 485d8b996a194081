#include "neumann/generators.hpp"

namespace neumann {

namespace {
Polynomial quadratic_in_X(const Polynomial& c1, const Polynomial& c2, const Polynomial& c3) {
  auto sq = [](Var v) { return Polynomial::variable(v) * Polynomial::variable(v); };
  return c1 * sq(Var::X1) + c2 * sq(Var::X2) + c3 * sq(Var::X3);
}
Polynomial pa(int i) { return Polynomial::variable(a(i)); }
}  // namespace

Polynomial neumann_U() {
  return quadratic_in_X(pa(2) * pa(3), pa(3) * pa(1), pa(1) * pa(2));
}

Polynomial neumann_V() {
  return quadratic_in_X(pa(2) + pa(3), pa(3) + pa(1), pa(1) + pa(2));
}

Polynomial kinetic_H2() {
  Polynomial h;
  for (int i = 1; i <= 3; ++i) {
    h += pa(i) * Polynomial::variable(M(i)) * Polynomial::variable(M(i));
  }
  return h;
}

Polynomial kinetic_I2() {
  Polynomial h;
  for (int i = 1; i <= 3; ++i) {
    h += Polynomial::variable(M(i)) * Polynomial::variable(M(i));
  }
  return h;
}

Polynomial casimir_C1() {
  Polynomial c;
  for (int i = 1; i <= 3; ++i) {
    c += Polynomial::variable(X(i)) * Polynomial::variable(X(i));
  }
  return c;
}

Polynomial casimir_C2() {
  Polynomial c;
  for (int i = 1; i <= 3; ++i) {
    c += Polynomial::variable(X(i)) * Polynomial::variable(M(i));
  }
  return c;
}

}  // namespace neumann
