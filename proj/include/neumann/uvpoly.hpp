#pragma once

#include <map>
#include <string>
#include <utility>

#include "neumann/polynomial.hpp"

namespace neumann {

enum class UVVar { U, V };

// Exact polynomial in the two abstract variables (U, V) — the compact carrier for
// the potential family, expanded to the concrete ring only when a bracket needs it.
class UVPolynomial {
 public:
  // key = (degree in U, degree in V); no zero coefficients stored.
  using TermMap = std::map<std::pair<int, int>, Rational>;

  UVPolynomial() = default;
  explicit UVPolynomial(const Rational& c);
  static UVPolynomial term(int du, int dv, const Rational& c = Rational(1));
  static UVPolynomial u() { return term(1, 0); }
  static UVPolynomial v() { return term(0, 1); }

  bool is_zero() const { return terms_.empty(); }
  const TermMap& terms() const { return terms_; }
  size_t term_count() const { return terms_.size(); }

  void add_term(int du, int dv, const Rational& c);

  UVPolynomial& operator+=(const UVPolynomial& o);
  UVPolynomial& operator-=(const UVPolynomial& o);
  friend UVPolynomial operator+(UVPolynomial p, const UVPolynomial& q) { p += q; return p; }
  friend UVPolynomial operator-(UVPolynomial p, const UVPolynomial& q) { p -= q; return p; }
  friend UVPolynomial operator*(const UVPolynomial& p, const UVPolynomial& q);
  bool operator==(const UVPolynomial& o) const { return terms_ == o.terms_; }
  bool operator!=(const UVPolynomial& o) const { return !(*this == o); }

  std::string str() const;  // e.g. "V^3 - 2*U*V", highest terms first

 private:
  TermMap terms_;
};

inline UVPolynomial uv_add(const UVPolynomial& p, const UVPolynomial& q) { return p + q; }
inline UVPolynomial uv_mul(const UVPolynomial& p, const UVPolynomial& q) { return p * q; }
UVPolynomial uv_partial(const UVPolynomial& p, UVVar which);

// Substitutes the concrete Neumann quadratics for the abstract U and V, landing in
// the 9-variable ring. Ring homomorphism: expand_uv(pq) = expand_uv(p)*expand_uv(q).
Polynomial expand_uv(const UVPolynomial& p);

}  // namespace neumann
