#include "neumann/quantum.hpp"

#include <stdexcept>

#include "neumann/generators.hpp"
#include "neumann/potentials.hpp"
#include "neumann/uvpoly.hpp"

namespace neumann {

namespace {

constexpr int kJ[4] = {0, 2, 3, 1};  // j index of the cycle (i, j, k)
constexpr int kK[4] = {0, 3, 1, 2};  // k index of the cycle (i, j, k)

Polynomial var_poly(Var v) { return Polynomial::variable(v); }

// mult(g) as an operator on the quotient: multiply then re-canonicalize.
SphereFunction apply_mult(const Polynomial& g, const SphereFunction& f) {
  return reduce_mod_sphere(g * f);
}

}  // namespace

SphereFunction apply_L(int i, const SphereFunction& f) {
  return reduce_mod_sphere(hat_L(i, f));
}

PhasedFunction apply_M(int i, const PhasedFunction& f) {
  PhasedFunction out;
  out.value = apply_L(i, f.value);
  out.i_power = (f.i_power + 1) % 4;
  return out;
}

SphereFunction phased_to_real(const PhasedFunction& f) {
  switch (((f.i_power % 4) + 4) % 4) {
    case 0:
      return f.value;
    case 2:
      return -f.value;
    default:
      throw std::domain_error("phased_to_real: phase is imaginary (odd power of i)");
  }
}

std::vector<Monomial> sphere_basis(int max_degree) {
  if (max_degree < 0) throw std::domain_error("sphere_basis: negative degree");
  std::vector<Monomial> basis;
  for (int d = 0; d <= max_degree; ++d) {
    for (int r = 0; r <= 1 && r <= d; ++r) {
      for (int p = d - r; p >= 0; --p) {
        const int q = d - r - p;
        Monomial m = Monomial::one();
        m.e[static_cast<int>(Var::X1)] = static_cast<uint8_t>(p);
        m.e[static_cast<int>(Var::X2)] = static_cast<uint8_t>(q);
        m.e[static_cast<int>(Var::X3)] = static_cast<uint8_t>(r);
        basis.push_back(m);
      }
    }
  }
  return basis;
}

QuantumReport verify_operator_relations(int max_degree) {
  QuantumReport report;
  const std::vector<Monomial> basis = sphere_basis(max_degree);
  report.basis_size = static_cast<int>(basis.size());

  const auto record = [&](const std::string& what, const Monomial& m,
                          const Polynomial& residual) {
    report.ok = false;
    report.failed_what = what;
    report.failed_monomial = m;
    report.residual = residual;
  };

  for (const Monomial& m : basis) {
    const Polynomial f = Polynomial::monomial(m, Rational(1));
    for (int i = 1; i <= 3; ++i) {
      for (int j = 1; j <= 3; ++j) {
        // [L_i, L_j] f = -eps_ijk L_k f
        Polynomial lhs = apply_L(i, apply_L(j, f)) - apply_L(j, apply_L(i, f));
        Polynomial rhs;
        if (i != j) {
          if (j == kJ[i]) {
            rhs = -apply_L(kK[i], f);  // eps_ijk = +1
          } else {
            rhs = apply_L(kJ[i], f);  // eps_ijk = -1
          }
        }
        if (Polynomial r = lhs - rhs; !r.is_zero()) {
          record("[L_" + std::to_string(i) + ", L_" + std::to_string(j) + "]", m, r);
          return report;
        }

        // [L_i, X_j.] f = -eps_ijk X_k. f
        const Polynomial xj = var_poly(X(j));
        lhs = apply_L(i, apply_mult(xj, f)) - apply_mult(xj, apply_L(i, f));
        rhs = Polynomial();
        if (i != j) {
          if (j == kJ[i]) {
            rhs = -apply_mult(var_poly(X(kK[i])), f);
          } else {
            rhs = apply_mult(var_poly(X(kJ[i])), f);
          }
        }
        if (Polynomial r = lhs - rhs; !r.is_zero()) {
          record("[L_" + std::to_string(i) + ", X_" + std::to_string(j) + "]", m, r);
          return report;
        }

        // [X_i., X_j.] f = 0
        const Polynomial xi = var_poly(X(i));
        lhs = apply_mult(xi, apply_mult(xj, f)) - apply_mult(xj, apply_mult(xi, f));
        if (!lhs.is_zero()) {
          record("[X_" + std::to_string(i) + ", X_" + std::to_string(j) + "]", m, lhs);
          return report;
        }
      }
    }
  }
  return report;
}

QuantumReport verify_c2_annihilation(int max_degree) {
  QuantumReport report;
  const std::vector<Monomial> basis = sphere_basis(max_degree);
  report.basis_size = static_cast<int>(basis.size());

  for (const Monomial& m : basis) {
    const Polynomial f = Polynomial::monomial(m, Rational(1));
    Polynomial total;
    for (int i = 1; i <= 3; ++i) {
      total += apply_L(i, apply_mult(var_poly(X(i)), f));
    }
    if (!total.is_zero()) {
      report.ok = false;
      report.failed_what = "sum_i L_i X_i";
      report.failed_monomial = m;
      report.residual = total;
      return report;
    }
  }
  return report;
}

QuantumReport verify_quantum_commutation(int n, int max_degree) {
  if (n < 1) throw std::domain_error("verify_quantum_commutation: n must be >= 1");
  QuantumReport report;
  const std::vector<Monomial> basis = sphere_basis(max_degree);
  report.basis_size = static_cast<int>(basis.size());

  const PotentialPair pots = closed_form(n);
  const Polynomial un = reduce_mod_sphere(expand_uv(pots.u));
  const Polynomial vn = reduce_mod_sphere(expand_uv(pots.v));

  const auto apply_H = [&](const SphereFunction& f) {
    SphereFunction out = apply_mult(un, f);
    for (int i = 1; i <= 3; ++i) {
      out -= var_poly(a(i)) * apply_L(i, apply_L(i, f));
    }
    return out;
  };
  const auto apply_I = [&](const SphereFunction& f) {
    SphereFunction out = apply_mult(vn, f);
    for (int i = 1; i <= 3; ++i) {
      out -= apply_L(i, apply_L(i, f));
    }
    return out;
  };

  for (const Monomial& m : basis) {
    const Polynomial f = Polynomial::monomial(m, Rational(1));
    const Polynomial commutator = apply_H(apply_I(f)) - apply_I(apply_H(f));
    if (!commutator.is_zero()) {
      report.ok = false;
      report.failed_what = "[H_" + std::to_string(n) + ", I_" + std::to_string(n) + "]";
      report.failed_monomial = m;
      report.residual = commutator;
      return report;
    }
  }
  return report;
}

QuantumReport verify_multiplication_ordering(int n, int m, int max_degree) {
  QuantumReport report;
  const std::vector<Monomial> basis = sphere_basis(max_degree);
  report.basis_size = static_cast<int>(basis.size());

  const Polynomial un = reduce_mod_sphere(expand_uv(closed_form(n).u));
  const Polynomial vm = reduce_mod_sphere(expand_uv(closed_form(m).v));

  for (const Monomial& mono : basis) {
    const Polynomial f = Polynomial::monomial(mono, Rational(1));
    const Polynomial lhs = apply_mult(un, apply_mult(vm, f));
    const Polynomial rhs = apply_mult(vm, apply_mult(un, f));
    if (Polynomial r = lhs - rhs; !r.is_zero()) {
      report.ok = false;
      report.failed_what = "mult ordering U_" + std::to_string(n) + " vs V_" + std::to_string(m);
      report.failed_monomial = mono;
      report.residual = r;
      return report;
    }
  }
  return report;
}

RotationIdentityReport verify_potential_rotation_identity(int n) {
  if (n < 2) {
    throw std::domain_error("verify_potential_rotation_identity: n must be >= 2");
  }
  RotationIdentityReport report;

  const PotentialPair pots = closed_form(n);
  const Polynomial lhs =
      hat_L(1, expand_uv(pots.u) - var_poly(a(1)) * expand_uv(pots.v));

  const Polynomial factor = expand_uv(dV_Vn(n));
  const Polynomial a1p = var_poly(a(1));
  const Polynomial geometric =
      Rational(-2) * S_of_X() * var_poly(Var::X1) +
      Rational(2) * a1p * a1p * (var_poly(a(2)) - var_poly(a(3))) *
          (Polynomial(Rational(1)) - casimir_C1()) * var_poly(Var::X2) * var_poly(Var::X3);
  const Polynomial rhs = factor * geometric;

  report.residual = lhs - rhs;
  report.free_ring_ok = report.residual.is_zero();

  const Polynomial reduced_lhs = reduce_mod_sphere(lhs);
  const Polynomial reduced_rhs = reduce_mod_sphere(
      Rational(-2) * factor * S_of_X() * var_poly(Var::X1));
  report.reduced_ok = (reduced_lhs - reduced_rhs).is_zero();

  return report;
}

}  // namespace neumann
