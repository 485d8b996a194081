#include "neumann/potentials.hpp"

#include <stdexcept>
#include <vector>

namespace neumann {

namespace {

// Exact binomial coefficients by Pascal recursion, grown on demand.
long long binomial(int n, int k) {
  static std::vector<std::vector<long long>> rows{{1}};
  if (k < 0 || k > n) return 0;
  while (static_cast<int>(rows.size()) <= n) {
    const auto& prev = rows.back();
    std::vector<long long> row(prev.size() + 1, 1);
    for (size_t j = 1; j + 1 < row.size(); ++j) row[j] = prev[j - 1] + prev[j];
    rows.push_back(std::move(row));
  }
  return rows[n][k];
}

Polynomial pa(int i) { return Polynomial::variable(a(i)); }
Polynomial px(int i) { return Polynomial::variable(X(i)); }

}  // namespace

PotentialPair recurrence_step(const PotentialPair& prev) {
  if (prev.n < 1) throw std::invalid_argument("recurrence_step: n must be >= 1");
  PotentialPair next;
  next.n = prev.n + 1;
  next.u = UVPolynomial::u() * prev.v;
  next.v = UVPolynomial::v() * prev.v - prev.u;
  return next;
}

PotentialPair closed_form(int n) {
  if (n < 1) throw std::invalid_argument("closed_form: n must be >= 1");
  PotentialPair p;
  p.n = n;
  for (int k = 0; 2 * k <= n - 1; ++k) {
    Rational c(binomial(n - 1 - k, k) * ((k % 2) ? -1 : 1));
    p.u.add_term(k + 1, n - 1 - 2 * k, c);
  }
  for (int k = 0; 2 * k <= n; ++k) {
    Rational c(binomial(n - k, k) * ((k % 2) ? -1 : 1));
    p.v.add_term(k, n - 2 * k, c);
  }
  return p;
}

SuiteCheck verify_three_term(int nmax) {
  SuiteCheck r;
  for (int n = 2; n <= nmax; ++n) {
    UVPolynomial lhs = closed_form(n + 1).v - UVPolynomial::v() * closed_form(n).v +
                       UVPolynomial::u() * closed_form(n - 1).v;
    if (!lhs.is_zero()) {
      r.ok = false;
      r.failed_n = n;
      r.what = "three-term relation residual: " + lhs.str();
      return r;
    }
  }
  return r;
}

SuiteCheck verify_pdes(int nmax) {
  SuiteCheck r;
  for (int n = 1; n <= nmax; ++n) {
    PotentialPair p = closed_form(n);
    UVPolynomial first = uv_partial(p.u, UVVar::V) + UVPolynomial::u() * uv_partial(p.v, UVVar::U);
    if (!first.is_zero()) {
      r.ok = false;
      r.failed_n = n;
      r.what = "first differential identity residual: " + first.str();
      return r;
    }
    UVPolynomial second = uv_partial(p.v, UVVar::V) + UVPolynomial::v() * uv_partial(p.v, UVVar::U) -
                          uv_partial(p.u, UVVar::U);
    if (!second.is_zero()) {
      r.ok = false;
      r.failed_n = n;
      r.what = "second differential identity residual: " + second.str();
      return r;
    }
  }
  return r;
}

SuiteCheck verify_closed_vs_recurrence(int nmax) {
  SuiteCheck r;
  PotentialPair iterated = closed_form(1);
  for (int n = 1; n <= nmax; ++n) {
    if (n > 1) iterated = recurrence_step(iterated);
    const PotentialPair direct = closed_form(n);
    if (!(iterated.u == direct.u)) {
      r.ok = false;
      r.failed_n = n;
      r.what = "closed form of U_n disagrees with the recurrence";
      return r;
    }
    if (!(iterated.v == direct.v)) {
      r.ok = false;
      r.failed_n = n;
      r.what = "closed form of V_n disagrees with the recurrence";
      return r;
    }
  }
  return r;
}

IntegrableSystem build_system(int n) {
  PotentialPair p = closed_form(n);
  IntegrableSystem sys;
  sys.n = n;
  sys.H = kinetic_H2() + expand_uv(p.u);
  sys.I = kinetic_I2() + expand_uv(p.v);
  return sys;
}

IntegrableSystem build_system(int n, const std::array<Rational, 3>& a_values) {
  IntegrableSystem sys = build_system(n);
  std::map<Var, Polynomial> bind{{a(1), Polynomial(a_values[0])},
                                 {a(2), Polynomial(a_values[1])},
                                 {a(3), Polynomial(a_values[2])}};
  sys.H = substitute(sys.H, bind);
  sys.I = substitute(sys.I, bind);
  return sys;
}

Polynomial S_of_X() {
  return (pa(1) - pa(2)) * (pa(2) - pa(3)) * (pa(3) - pa(1)) * px(1) * px(2) * px(3);
}

Polynomial S_of_X(const std::array<Rational, 3>& a_values) {
  std::map<Var, Polynomial> bind{{a(1), Polynomial(a_values[0])},
                                 {a(2), Polynomial(a_values[1])},
                                 {a(3), Polynomial(a_values[2])}};
  return substitute(S_of_X(), bind);
}

UVPolynomial dV_Vn(int n) {
  if (n < 2) throw std::invalid_argument("dV_Vn: n must be >= 2");
  return uv_partial(closed_form(n - 1).v, UVVar::V);
}

Polynomial parameter_power_sum(int m) {
  Polynomial s;
  for (int i = 1; i <= 3; ++i) s += pa(i).pow(m) * px(i) * px(i);
  return s;
}

Polynomial wojciechowski(int k) {
  Polynomial p1 = parameter_power_sum(1);
  switch (k) {
    case 1:
      return p1;
    case 2:
      return parameter_power_sum(2) - p1 * p1;
    case 3:
      return parameter_power_sum(3) - Polynomial(2) * p1 * parameter_power_sum(2) +
             p1 * p1 * p1;
    default:
      throw std::invalid_argument("wojciechowski: k must be 1, 2 or 3");
  }
}

Polynomial cyclic_shift(const Polynomial& p) {
  static const std::map<Var, Polynomial> shift{
      {X(1), px(2)}, {X(2), px(3)}, {X(3), px(1)},
      {a(1), pa(2)}, {a(2), pa(3)}, {a(3), pa(1)}};
  return substitute(p, shift);
}

Polynomial cyclic_sum(const Polynomial& p) {
  Polynomial once = cyclic_shift(p);
  return p + once + cyclic_shift(once);
}

Polynomial tabulated_v3_plus_i3_rhs() {
  Polynomial quartic = (pa(1) - pa(2)) * (pa(1) - pa(3)) *
                       (Polynomial(3) * pa(1) + Polynomial(2) * pa(2) + Polynomial(2) * pa(3)) *
                       px(1).pow(4);
  Polynomial quadratic = pa(1) *
                         (Polynomial(-4) * pa(1) * pa(1) + Polynomial(3) * pa(2) * pa(2) +
                          Polynomial(3) * pa(3) * pa(3)) *
                         px(1) * px(1);
  Polynomial constant = pa(1) * pa(1) * (pa(1) - pa(2) - pa(3));
  return cyclic_sum(quartic) + cyclic_sum(quadratic) + cyclic_sum(constant) +
         pa(1) * pa(2) * pa(3);
}

Polynomial verified_v3_plus_i3_rhs() {
  Polynomial quartic = (pa(1) - pa(2)) * (pa(1) - pa(3)) * (pa(1) + pa(2) + pa(3)) *
                       px(1).pow(4);
  Polynomial quadratic = (-pa(1).pow(3) + pa(1) * pa(2) * pa(2) + pa(1) * pa(3) * pa(3) +
                          pa(2).pow(3) + pa(3).pow(3)) *
                         px(1) * px(1);
  return cyclic_sum(quartic) + cyclic_sum(quadratic) + pa(1) * pa(2) * pa(3);
}

namespace {

bool non_constant_in_X(const Polynomial& p) {
  for (const auto& [m, c] : p.terms()) {
    if (m.degree_in(Var::X1) + m.degree_in(Var::X2) + m.degree_in(Var::X3) > 0) return true;
  }
  return false;
}

}  // namespace

DistinctnessReport verify_distinctness(int k) {
  if (k != 2 && k != 3) throw std::invalid_argument("verify_distinctness: k must be 2 or 3");
  DistinctnessReport rep;
  rep.k = k;
  Polynomial lhs = reduce_mod_sphere(expand_uv(closed_form(k).v) + wojciechowski(k));
  if (k == 2) {
    Polynomial rhs = reduce_mod_sphere(
        (pa(2) * pa(3) - pa(1) * pa(1)) * px(1) * px(1) +
        (pa(3) * pa(1) - pa(2) * pa(2)) * px(2) * px(2) +
        (pa(1) * pa(2) - pa(3) * pa(3)) * px(3) * px(3) +
        pa(1) * pa(1) + pa(2) * pa(2) + pa(3) * pa(3));
    rep.residual = lhs - rhs;
    rep.tabulated_form_matches = rep.residual.is_zero();
    rep.distinct_on_orbit = non_constant_in_X(lhs);
    return rep;
  }
  Polynomial tabulated = reduce_mod_sphere(tabulated_v3_plus_i3_rhs());
  rep.residual = lhs - tabulated;
  rep.tabulated_form_matches = rep.residual.is_zero();
  // The mismatch is not noise: it equals 2*Phi_2*V on the nose, modulo the sphere.
  Polynomial expected_gap =
      reduce_mod_sphere(Polynomial(2) * parameter_power_sum(2) * neumann_V());
  rep.residual_characterized = (rep.residual == expected_gap);
  rep.corrected_form_matches = (lhs == reduce_mod_sphere(verified_v3_plus_i3_rhs()));
  rep.distinct_on_orbit = non_constant_in_X(lhs);
  return rep;
}

}  // namespace neumann
