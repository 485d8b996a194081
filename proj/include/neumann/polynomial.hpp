#pragma once

#include <array>
#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "neumann/rational.hpp"

namespace neumann {

// The fixed 9-variable polynomial ring Q[X1,X2,X3,M1,M2,M3,a1,a2,a3] that carries
// every symbolic object in this artifact: positions X, momenta M, parameters a.
enum class Var : uint8_t { X1 = 0, X2, X3, M1, M2, M3, a1, a2, a3 };

inline constexpr int kNumVars = 9;
inline constexpr const char* kVarNames[kNumVars] = {"X1", "X2", "X3", "M1", "M2",
                                                    "M3", "a1", "a2", "a3"};

// Convenience: X(1)==Var::X1, M(2)==Var::M2, a(3)==Var::a3 (indices are 1-based).
inline Var X(int i) { return static_cast<Var>(i - 1); }
inline Var M(int i) { return static_cast<Var>(3 + i - 1); }
inline Var a(int i) { return static_cast<Var>(6 + i - 1); }

// Power product of the 9 ring variables. Ordered graded-lexicographically:
// first by total degree, ties broken lexicographically with X1 most significant.
struct Monomial {
  std::array<uint8_t, kNumVars> e{};

  static Monomial one() { return Monomial{}; }
  static Monomial of(Var v, int exp = 1) {
    Monomial m;
    m.e[static_cast<int>(v)] = static_cast<uint8_t>(exp);
    return m;
  }

  int degree() const {
    int d = 0;
    for (int i = 0; i < kNumVars; ++i) d += e[i];
    return d;
  }
  int degree_in(Var v) const { return e[static_cast<int>(v)]; }

  bool operator==(const Monomial& o) const { return e == o.e; }
  bool operator!=(const Monomial& o) const { return e != o.e; }
  bool operator<(const Monomial& o) const {
    int da = degree(), db = o.degree();
    if (da != db) return da < db;
    return e < o.e;
  }

  Monomial operator*(const Monomial& o) const;

  std::string str() const;  // e.g. "X1^2*M3*a2"
};

// Sparse exact-rational multivariate polynomial. Canonical form: the term map
// holds no zero coefficients, so equality is term-map equality.
class Polynomial {
 public:
  using TermMap = std::map<Monomial, Rational>;

  Polynomial() = default;
  explicit Polynomial(const Rational& c);
  explicit Polynomial(long c) : Polynomial(Rational(c)) {}
  static Polynomial variable(Var v);
  static Polynomial monomial(const Monomial& m, const Rational& c = Rational(1));

  bool is_zero() const { return terms_.empty(); }
  size_t term_count() const { return terms_.size(); }
  const TermMap& terms() const { return terms_; }
  Rational coeff(const Monomial& m) const;
  int degree() const;                // total degree; -1 for the zero polynomial
  int degree_in(Var v) const;        // max exponent of v; 0 for the zero polynomial
  // True iff every variable outside `allowed` has exponent 0 in every term.
  bool uses_only(std::initializer_list<Var> allowed) const;

  void add_term(const Monomial& m, const Rational& c);  // accumulate, keep canonical

  Polynomial& operator+=(const Polynomial& o);
  Polynomial& operator-=(const Polynomial& o);
  friend Polynomial operator+(Polynomial p, const Polynomial& q) { p += q; return p; }
  friend Polynomial operator-(Polynomial p, const Polynomial& q) { p -= q; return p; }
  friend Polynomial operator*(const Polynomial& p, const Polynomial& q);
  friend Polynomial operator-(const Polynomial& p);
  Polynomial operator*(const Rational& c) const;
  friend Polynomial operator*(const Rational& c, const Polynomial& p) { return p * c; }
  bool operator==(const Polynomial& o) const { return terms_ == o.terms_; }
  bool operator!=(const Polynomial& o) const { return !(*this == o); }

  Polynomial pow(int k) const;

  std::string str() const;  // deterministic text form, highest terms first

 private:
  TermMap terms_;
};

// Spec-level operation aliases (free functions).
inline Polynomial add(const Polynomial& p, const Polynomial& q) { return p + q; }
inline Polynomial mul(const Polynomial& p, const Polynomial& q) { return p * q; }

// Formal partial derivative with exact coefficients.
Polynomial partial(const Polynomial& p, Var v);

// Simultaneous substitution of polynomials for variables; unbound variables pass
// through unchanged. The result is canonical.
Polynomial substitute(const Polynomial& p, const std::map<Var, Polynomial>& bindings);

// Full numeric evaluation at a rational point for all 9 variables (fast path of
// substitute used by the constrained-point checks).
Rational evaluate(const Polynomial& p, const std::array<Rational, kNumVars>& point);

// Canonical representative of p modulo the ideal (X1^2+X2^2+X3^2-1): every term is
// rewritten so its X3-degree is <= 1 by replacing X3^2 with 1-X1^2-X2^2. The M and a
// variables are untouched. Idempotent, and a ring homomorphism onto its image.
Polynomial reduce_mod_sphere(const Polynomial& p);

}  // namespace neumann
