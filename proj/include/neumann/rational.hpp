#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <string>

namespace neumann {

// Exact rational number backed by GMP. Always canonical: lowest terms, positive
// denominator. mpq_class(n, d) does NOT canonicalize on its own and GMP comparison
// assumes canonical operands, so every constructor here normalizes.
class Rational {
 public:
  Rational() : v_(0) {}
  Rational(long n) : v_(n) {}  // NOLINT: implicit integer promotion is intended
  Rational(long num, long den) : v_(num, den) { v_.canonicalize(); }
  explicit Rational(const mpz_class& num, const mpz_class& den) : v_(num, den) {
    v_.canonicalize();
  }

  // Exact binary expansion of a double (no rounding); rejects non-finite input.
  static Rational from_double(double x);

  bool is_zero() const { return sgn(v_) == 0; }
  int sign() const { return sgn(v_); }
  double to_double() const { return v_.get_d(); }

  std::string num_str() const { return v_.get_num().get_str(); }
  std::string den_str() const { return v_.get_den().get_str(); }
  // "p" when the denominator is 1, else "p/q".
  std::string str() const;

  Rational& operator+=(const Rational& o) { v_ += o.v_; return *this; }
  Rational& operator-=(const Rational& o) { v_ -= o.v_; return *this; }
  Rational& operator*=(const Rational& o) { v_ *= o.v_; return *this; }
  Rational& operator/=(const Rational& o) { v_ /= o.v_; return *this; }

  friend Rational operator+(Rational a, const Rational& b) { a += b; return a; }
  friend Rational operator-(Rational a, const Rational& b) { a -= b; return a; }
  friend Rational operator*(Rational a, const Rational& b) { a *= b; return a; }
  friend Rational operator/(Rational a, const Rational& b) { a /= b; return a; }
  friend Rational operator-(const Rational& a) { Rational r; r.v_ = -a.v_; return r; }

  friend bool operator==(const Rational& a, const Rational& b) { return mpq_equal(a.v_.get_mpq_t(), b.v_.get_mpq_t()) != 0; }
  friend bool operator!=(const Rational& a, const Rational& b) { return !(a == b); }
  friend bool operator<(const Rational& a, const Rational& b) { return cmp(a.v_, b.v_) < 0; }
  friend bool operator>(const Rational& a, const Rational& b) { return cmp(a.v_, b.v_) > 0; }

  const mpq_class& raw() const { return v_; }

 private:
  mpq_class v_;
};

}  // namespace neumann
