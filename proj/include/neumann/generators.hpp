#pragma once

#include "neumann/polynomial.hpp"

namespace neumann {

// The model's fixed quadratic building blocks, all with symbolic parameters a_i.

// U = a2*a3*X1^2 + a3*a1*X2^2 + a1*a2*X3^2
Polynomial neumann_U();
// V = (a2+a3)*X1^2 + (a3+a1)*X2^2 + (a1+a2)*X3^2
Polynomial neumann_V();
// Kinetic parts H^(2) = sum a_i M_i^2 and I^(2) = sum M_i^2.
Polynomial kinetic_H2();
Polynomial kinetic_I2();
// Casimir functions of the bracket: C1 = sum X_i^2, C2 = sum X_i M_i.
Polynomial casimir_C1();
Polynomial casimir_C2();

}  // namespace neumann
