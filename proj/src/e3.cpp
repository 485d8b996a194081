#include "neumann/e3.hpp"

#include <stdexcept>

#include "neumann/potentials.hpp"

namespace neumann {

namespace {

Polynomial px(int i) { return Polynomial::variable(X(i)); }
Polynomial pm(int i) { return Polynomial::variable(M(i)); }
Polynomial pa(int i) { return Polynomial::variable(a(i)); }

using Grad = std::array<Polynomial, 3>;

Grad gradient(const Polynomial& f, bool wrt_M) {
  Grad g;
  for (int i = 1; i <= 3; ++i) g[i - 1] = partial(f, wrt_M ? M(i) : X(i));
  return g;
}

Grad cross(const Grad& A, const Grad& B) {
  Grad r;
  r[0] = A[1] * B[2] - A[2] * B[1];
  r[1] = A[2] * B[0] - A[0] * B[2];
  r[2] = A[0] * B[1] - A[1] * B[0];
  return r;
}

Polynomial dot_vars(const Grad& g, bool with_M) {
  Polynomial r;
  for (int i = 1; i <= 3; ++i) r += (with_M ? pm(i) : px(i)) * g[i - 1];
  return r;
}

// Exact division of every term by the variable v; throws if any term lacks it.
Polynomial exact_div_var(const Polynomial& p, Var v) {
  const int vi = static_cast<int>(v);
  Polynomial r;
  for (const auto& [m, c] : p.terms()) {
    if (m.e[vi] == 0) throw std::logic_error("exact_div_var: term not divisible");
    Monomial d = m;
    d.e[vi] = static_cast<uint8_t>(m.e[vi] - 1);
    r.add_term(d, c);
  }
  return r;
}

// The a-dependent coefficient of a given (X, M) power product: collects the terms
// whose X/M exponents match xm exactly and strips them, leaving a polynomial in a.
Polynomial coefficient_of_xm(const Polynomial& p, const Monomial& xm) {
  Polynomial r;
  for (const auto& [m, c] : p.terms()) {
    bool match = true;
    for (int i = 0; i < 6; ++i) {
      if (m.e[i] != xm.e[i]) { match = false; break; }
    }
    if (!match) continue;
    Monomial apart;
    for (int i = 6; i < kNumVars; ++i) apart.e[i] = m.e[i];
    r.add_term(apart, c);
  }
  return r;
}

// Cyclic successor pairs: axis i pairs with (j, k) such that eps_ijk = +1.
constexpr int kJ[4] = {0, 2, 3, 1};  // 1-based: j(1)=2, j(2)=3, j(3)=1
constexpr int kK[4] = {0, 3, 1, 2};

}  // namespace

Polynomial poisson_bracket(const Polynomial& f, const Polynomial& g) {
  Grad fM = gradient(f, true), gM = gradient(g, true);
  Grad fX = gradient(f, false), gX = gradient(g, false);
  Polynomial r = dot_vars(cross(fM, gM), true);
  r += dot_vars(cross(fM, gX), false);
  r -= dot_vars(cross(gM, fX), false);
  return r;
}

Polynomial hat_L(int i, const Polynomial& f) {
  if (i < 1 || i > 3) throw std::invalid_argument("hat_L: axis must be 1, 2 or 3");
  int j = kJ[i], k = kK[i];
  return px(j) * partial(f, X(k)) - px(k) * partial(f, X(j));
}

VectorField hamiltonian_vector_field(const Polynomial& H) {
  VectorField vf;
  for (int i = 1; i <= 3; ++i) {
    vf.xdot[i - 1] = poisson_bracket(H, px(i));
    vf.mdot[i - 1] = poisson_bracket(H, pm(i));
  }
  return vf;
}

uint64_t RationalSampler::next_u64() {
  // splitmix64: tiny, deterministic, identical on every platform.
  state_ += 0x9e3779b97f4a7c15ULL;
  uint64_t z = state_;
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

long RationalSampler::next_int(long lo, long hi) {
  return lo + static_cast<long>(next_u64() % static_cast<uint64_t>(hi - lo + 1));
}

Rational RationalSampler::next_rational(long max_abs_num, long max_den) {
  return Rational(next_int(-max_abs_num, max_abs_num), next_int(1, max_den));
}

namespace {

ConstrainedPoint stereographic_point(RationalSampler& rs) {
  Rational p = rs.next_rational();
  Rational q = rs.next_rational();
  Rational denom = Rational(1) + p * p + q * q;
  ConstrainedPoint pt;
  pt.X[0] = Rational(2) * p / denom;
  pt.X[1] = Rational(2) * q / denom;
  pt.X[2] = (Rational(1) - p * p - q * q) / denom;
  std::array<Rational, 3> W{rs.next_rational(), rs.next_rational(), rs.next_rational()};
  for (int i = 1; i <= 3; ++i) {
    int j = kJ[i], k = kK[i];
    pt.M[i - 1] = pt.X[j - 1] * W[k - 1] - pt.X[k - 1] * W[j - 1];
  }
  return pt;
}

}  // namespace

ConstrainedPoint sample_constrained_point(uint64_t seed) {
  RationalSampler rs(seed);
  return stereographic_point(rs);
}

Polynomial derive_quadratic_partner() {
  const Polynomial U = neumann_U();
  // Axis-i obstruction from the fixed potential: hat_L(i, U) = 2 a_i d_i X_j X_k.
  // Extract d_i by exact division; the d_i are data here, not assumptions.
  std::array<Polynomial, 4> d;  // 1-based
  for (int i = 1; i <= 3; ++i) {
    Monomial xjxk = Monomial::of(X(kJ[i])) * Monomial::of(X(kK[i]));
    Polynomial A = coefficient_of_xm(hat_L(i, U), xjxk);
    d[i] = exact_div_var(A, a(i)) * Rational(1, 2);
  }
  // The ansatz c1 X1^2 + c2 X2^2 + c3 X3^2 contributes 2 a_i (c_k - c_j) X_j X_k on
  // axis i, so strict vanishing forces c_k - c_j = d_i. Consistency of the cycle is
  // exactly d1 + d2 + d3 = 0.
  if (!(d[1] + d[2] + d[3]).is_zero()) {
    throw std::logic_error("derive_quadratic_partner: inconsistent relation cycle");
  }
  std::array<Polynomial, 4> c;
  c[1] = pa(2) + pa(3);   // normalization
  c[3] = c[1] - d[2];     // axis 2: c1 - c3 = d2
  c[2] = c[1] + d[3];     // axis 3: c2 - c1 = d3
  if (c[3] - c[2] != d[1]) {
    throw std::logic_error("derive_quadratic_partner: axis-1 relation violated");
  }
  Polynomial partner = c[1] * px(1) * px(1) + c[2] * px(2) * px(2) + c[3] * px(3) * px(3);
  // Self-check the derivation against the actual bracket, not just the relations.
  for (int i = 1; i <= 3; ++i) {
    if (!(hat_L(i, U) - pa(i) * hat_L(i, partner)).is_zero()) {
      throw std::logic_error("derive_quadratic_partner: obstruction did not vanish");
    }
  }
  if (!poisson_bracket(kinetic_H2() + U, kinetic_I2() + partner).is_zero()) {
    throw std::logic_error("derive_quadratic_partner: assembled bracket nonzero");
  }
  return partner;
}

Polynomial derive_hamiltonian_potential() {
  const Polynomial V = neumann_V();
  // Axis-i obstruction from the fixed partner: hat_L(i, V) = 2 e_i X_j X_k.
  std::array<Polynomial, 4> e;
  for (int i = 1; i <= 3; ++i) {
    Monomial xjxk = Monomial::of(X(kJ[i])) * Monomial::of(X(kK[i]));
    e[i] = coefficient_of_xm(hat_L(i, V), xjxk) * Rational(1, 2);
  }
  // Ansatz u1 X1^2 + u2 X2^2 + u3 X3^2 paired with sum a_i M_i^2: strict vanishing of
  // hat_L(i, U_ansatz) - a_i hat_L(i, V) forces u_k - u_j = a_i e_i, i.e. the prefixed
  // relations u_j - u_k = -a_i e_i.
  std::array<Polynomial, 4> u;
  u[1] = pa(2) * pa(3);          // normalization
  u[3] = u[1] - pa(2) * e[2];    // axis 2: u1 - u3 = a2 e2
  u[2] = u[1] + pa(3) * e[3];    // axis 3: u2 - u1 = a3 e3
  if (u[3] - u[2] != pa(1) * e[1]) {
    throw std::logic_error("derive_hamiltonian_potential: axis-1 relation violated");
  }
  Polynomial pot = u[1] * px(1) * px(1) + u[2] * px(2) * px(2) + u[3] * px(3) * px(3);
  for (int i = 1; i <= 3; ++i) {
    if (!(hat_L(i, pot) - pa(i) * hat_L(i, V)).is_zero()) {
      throw std::logic_error("derive_hamiltonian_potential: obstruction did not vanish");
    }
  }
  if (!poisson_bracket(kinetic_H2() + pot, kinetic_I2() + V).is_zero()) {
    throw std::logic_error("derive_hamiltonian_potential: assembled bracket nonzero");
  }
  return pot;
}

std::array<Polynomial, 3> partner_relations() {
  const Polynomial V = neumann_V();
  std::array<Polynomial, 3> r;
  for (int i = 1; i <= 3; ++i) {
    Monomial xjxk = Monomial::of(X(kJ[i])) * Monomial::of(X(kK[i]));
    Polynomial e = coefficient_of_xm(hat_L(i, V), xjxk) * Rational(1, 2);
    r[i - 1] = -(pa(i) * e);
  }
  return r;
}

IdentityCheck verify_h2_i2_closed_form() {
  IntegrableSystem sys2 = build_system(2);
  Polynomial lhs = poisson_bracket(sys2.H, sys2.I);
  Polynomial T = pa(1) * pa(1) * (pa(2) - pa(3)) * px(2) * px(3) * pm(1) +
                 pa(2) * pa(2) * (pa(3) - pa(1)) * px(3) * px(1) * pm(2) +
                 pa(3) * pa(3) * (pa(1) - pa(2)) * px(1) * px(2) * pm(3);
  Polynomial rhs = Polynomial(-4) * S_of_X() * casimir_C2() +
                   Polynomial(4) * (Polynomial(1) - casimir_C1()) * T;
  IdentityCheck chk;
  chk.residual = lhs - rhs;
  chk.ok = chk.residual.is_zero();
  return chk;
}

CommutationReport verify_commutation(int n, CommutationMode mode, int count, uint64_t seed) {
  if (n < 1) throw std::invalid_argument("verify_commutation: n must be >= 1");
  CommutationReport rep;
  rep.n = n;
  rep.mode = mode;

  if (mode == CommutationMode::symbolic) {
    IntegrableSystem sys = build_system(n);
    Polynomial bracket = poisson_bracket(sys.H, sys.I);
    if (n == 1) {
      rep.residual = bracket;
    } else {
      IntegrableSystem sys2 = build_system(2);
      rep.residual = bracket - expand_uv(dV_Vn(n)) * poisson_bracket(sys2.H, sys2.I);
    }
    rep.ok = rep.residual.is_zero();
    return rep;
  }

  // Points mode: fresh pairwise-distinct rational parameters a and a fresh exact
  // orbit point for every trial; {H_n, I_n} must evaluate to exactly zero.
  IntegrableSystem sym = build_system(n);
  for (int t = 0; t < count; ++t) {
    RationalSampler rs(seed * 0x100000001b3ULL + static_cast<uint64_t>(t) + 1);
    std::array<Rational, 3> av;
    do {
      for (auto& v : av) v = rs.next_rational();
    } while (av[0] == av[1] || av[1] == av[2] || av[0] == av[2]);
    ConstrainedPoint pt = stereographic_point(rs);

    std::map<Var, Polynomial> bind{{a(1), Polynomial(av[0])},
                                   {a(2), Polynomial(av[1])},
                                   {a(3), Polynomial(av[2])}};
    Polynomial bracket = poisson_bracket(substitute(sym.H, bind), substitute(sym.I, bind));
    std::array<Rational, kNumVars> point{pt.X[0], pt.X[1], pt.X[2],
                                         pt.M[0], pt.M[1], pt.M[2],
                                         av[0],   av[1],   av[2]};
    Rational value = evaluate(bracket, point);
    rep.points_checked = t + 1;
    if (!value.is_zero()) {
      rep.ok = false;
      rep.failed_point_index = t;
      rep.failed_value = value.str();
      return rep;
    }
  }
  rep.ok = true;
  return rep;
}

}  // namespace neumann
