#pragma once

#include <string>
#include <vector>

#include "neumann/e3.hpp"
#include "neumann/polynomial.hpp"

namespace neumann {

// Element of Q[X1,X2,X3]/(X1^2+X2^2+X3^2-1), stored in the canonical form produced
// by reduce_mod_sphere (X3-degree <= 1), with symbolic a allowed in coefficients.
// Equality of SphereFunctions is term-map equality of the canonical forms.
using SphereFunction = Polynomial;

// Angular momentum operator on the quotient: hat_L(i, .) followed by
// re-canonicalization. Well defined because hat_L(i, .) annihilates X.X - 1.
SphereFunction apply_L(int i, const SphereFunction& f);

// The momentum operators are realized as M_i = i * L_i (imaginary unit times the
// rotation generator). Every identity verified here involves only even powers of M,
// so the imaginary unit is tracked as an integer phase exponent and the arithmetic
// stays rational: value * i^i_power.
struct PhasedFunction {
  SphereFunction value;
  int i_power = 0;  // modulo 4
};
PhasedFunction apply_M(int i, const PhasedFunction& f);
// Collapses an even phase to a real sign; throws on odd phase.
SphereFunction phased_to_real(const PhasedFunction& f);

// Canonical monomial basis of the quotient up to total degree max_degree:
// X1^p X2^q X3^r with r <= 1, in graded-lex order.
std::vector<Monomial> sphere_basis(int max_degree);

struct QuantumReport {
  bool ok = true;
  int basis_size = 0;
  std::string failed_what;      // which relation / operator pair failed
  Monomial failed_monomial;     // the basis element exhibiting the failure
  Polynomial residual;
};

// The commutation table in real form (M = i L): all nine [L_i, L_j] = -eps_ijk L_k,
// all nine [L_i, X_j.] = -eps_ijk X_k., and all nine [X_i., X_j.] = 0, applied to
// every basis monomial of degree <= max_degree. Exact equality required.
QuantumReport verify_operator_relations(int max_degree);

// The constraint operator in real form: sum_i L_i(X_i f) must vanish for every
// basis monomial (the operator-valued analogue of C2 = 0 on the orbit).
QuantumReport verify_c2_annihilation(int max_degree);

// Commutator of the quantized n-th system on the quotient:
//   H_n = -sum a_i L_i^2 + mult(U_n),  I_n = -sum L_i^2 + mult(V_n)
// (real forms; the i^2 from M = iL is folded into the minus signs). Checks that
// H_n(I_n f) - I_n(H_n f) = 0 exactly for every basis monomial of degree <= max_degree
// with symbolic a. Each individual check is complete — the degree bound only limits
// how many basis vectors are tested.
QuantumReport verify_quantum_commutation(int n, int max_degree);

// Multiplication operators commute regardless of ordering: checks
// mult(U_n) mult(V_m) = mult(V_m) mult(U_n) on the basis.
QuantumReport verify_multiplication_ordering(int n, int m, int max_degree);

// The rotation identity satisfied by the potentials, for n >= 2. Two levels:
//   free ring:  hat_L(1, U_n - a1 V_n)
//               = expand_uv(dV_Vn(n)) * ( -2 S(X) X1 + 2 a1^2 (a2-a3)(1-C1) X2 X3 )
//   quotient:   its sphere reduction equals -2 expand_uv(dV_Vn(n)) S(X) X1 reduced.
struct RotationIdentityReport {
  bool free_ring_ok = false;
  bool reduced_ok = false;
  Polynomial residual;  // free-ring residual (zero when free_ring_ok)
  bool ok() const { return free_ring_ok && reduced_ok; }
};
RotationIdentityReport verify_potential_rotation_identity(int n);

}  // namespace neumann
