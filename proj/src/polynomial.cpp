#include "neumann/polynomial.hpp"

#include <sstream>
#include <stdexcept>

namespace neumann {

Rational Rational::from_double(double x) {
  if (!(x == x) || x > 1.7976931348623157e308 || x < -1.7976931348623157e308) {
    throw std::invalid_argument("Rational::from_double: non-finite input");
  }
  mpq_class q;
  mpq_set_d(q.get_mpq_t(), x);  // exact: doubles are dyadic rationals
  Rational r;
  r.v_ = q;
  return r;
}

std::string Rational::str() const {
  if (v_.get_den() == 1) return v_.get_num().get_str();
  return v_.get_num().get_str() + "/" + v_.get_den().get_str();
}

Monomial Monomial::operator*(const Monomial& o) const {
  Monomial r;
  for (int i = 0; i < kNumVars; ++i) {
    int s = e[i] + o.e[i];
    if (s > 255) throw std::overflow_error("Monomial exponent overflow");
    r.e[i] = static_cast<uint8_t>(s);
  }
  return r;
}

std::string Monomial::str() const {
  std::string s;
  for (int i = 0; i < kNumVars; ++i) {
    if (e[i] == 0) continue;
    if (!s.empty()) s += "*";
    s += kVarNames[i];
    if (e[i] > 1) s += "^" + std::to_string(e[i]);
  }
  return s.empty() ? "1" : s;
}

Polynomial::Polynomial(const Rational& c) {
  if (!c.is_zero()) terms_[Monomial::one()] = c;
}

Polynomial Polynomial::variable(Var v) {
  Polynomial p;
  p.terms_[Monomial::of(v)] = Rational(1);
  return p;
}

Polynomial Polynomial::monomial(const Monomial& m, const Rational& c) {
  Polynomial p;
  if (!c.is_zero()) p.terms_[m] = c;
  return p;
}

Rational Polynomial::coeff(const Monomial& m) const {
  auto it = terms_.find(m);
  return it == terms_.end() ? Rational(0) : it->second;
}

int Polynomial::degree() const {
  int d = -1;
  for (const auto& [m, c] : terms_) d = std::max(d, m.degree());
  return d;
}

int Polynomial::degree_in(Var v) const {
  int d = 0;
  for (const auto& [m, c] : terms_) d = std::max(d, m.degree_in(v));
  return d;
}

bool Polynomial::uses_only(std::initializer_list<Var> allowed) const {
  bool ok[kNumVars] = {};
  for (Var v : allowed) ok[static_cast<int>(v)] = true;
  for (const auto& [m, c] : terms_) {
    for (int i = 0; i < kNumVars; ++i) {
      if (m.e[i] != 0 && !ok[i]) return false;
    }
  }
  return true;
}

void Polynomial::add_term(const Monomial& m, const Rational& c) {
  if (c.is_zero()) return;
  auto [it, inserted] = terms_.emplace(m, c);
  if (!inserted) {
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

Polynomial& Polynomial::operator+=(const Polynomial& o) {
  for (const auto& [m, c] : o.terms_) add_term(m, c);
  return *this;
}

Polynomial& Polynomial::operator-=(const Polynomial& o) {
  for (const auto& [m, c] : o.terms_) add_term(m, -c);
  return *this;
}

Polynomial operator*(const Polynomial& p, const Polynomial& q) {
  Polynomial r;
  for (const auto& [mp, cp] : p.terms_) {
    for (const auto& [mq, cq] : q.terms_) {
      r.add_term(mp * mq, cp * cq);
    }
  }
  return r;
}

Polynomial operator-(const Polynomial& p) {
  Polynomial r;
  for (const auto& [m, c] : p.terms_) r.terms_[m] = -c;
  return r;
}

Polynomial Polynomial::operator*(const Rational& c) const {
  Polynomial r;
  if (c.is_zero()) return r;
  for (const auto& [m, k] : terms_) r.terms_[m] = k * c;
  return r;
}

Polynomial Polynomial::pow(int k) const {
  Polynomial r(Rational(1));
  Polynomial base = *this;
  while (k > 0) {
    if (k & 1) r = r * base;
    base = (k >>= 1) ? base * base : base;
  }
  return r;
}

std::string Polynomial::str() const {
  if (terms_.empty()) return "0";
  std::ostringstream out;
  bool first = true;
  // Highest graded-lex terms first for readability.
  for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
    const auto& [m, c] = *it;
    Rational abs = c.sign() < 0 ? -c : c;
    if (first) {
      if (c.sign() < 0) out << "-";
      first = false;
    } else {
      out << (c.sign() < 0 ? " - " : " + ");
    }
    bool unit = (abs == Rational(1));
    bool constant = (m == Monomial::one());
    if (!unit || constant) out << abs.str();
    if (!constant) {
      if (!unit) out << "*";
      out << m.str();
    }
  }
  return out.str();
}

Polynomial partial(const Polynomial& p, Var v) {
  const int vi = static_cast<int>(v);
  Polynomial r;
  for (const auto& [m, c] : p.terms()) {
    int k = m.e[vi];
    if (k == 0) continue;
    Monomial d = m;
    d.e[vi] = static_cast<uint8_t>(k - 1);
    r.add_term(d, c * Rational(k));
  }
  return r;
}

Polynomial substitute(const Polynomial& p, const std::map<Var, Polynomial>& bindings) {
  // Per-variable power cache so repeated exponents cost one multiplication each.
  std::map<Var, std::vector<Polynomial>> powers;
  auto bound_power = [&](Var v, int k) -> const Polynomial& {
    auto& tab = powers[v];
    if (tab.empty()) {
      tab.push_back(Polynomial(Rational(1)));
      tab.push_back(bindings.at(v));
    }
    while (static_cast<int>(tab.size()) <= k) tab.push_back(tab.back() * tab[1]);
    return tab[k];
  };

  Polynomial result;
  for (const auto& [m, c] : p.terms()) {
    Monomial passthrough;  // unbound variables keep their exponents
    Polynomial factor(c);
    bool have_factor = false;
    for (int i = 0; i < kNumVars; ++i) {
      if (m.e[i] == 0) continue;
      Var v = static_cast<Var>(i);
      if (bindings.count(v)) {
        factor = factor * bound_power(v, m.e[i]);
        have_factor = true;
      } else {
        passthrough.e[i] = m.e[i];
      }
    }
    if (!have_factor) {
      result.add_term(passthrough, c);
    } else {
      for (const auto& [fm, fc] : factor.terms()) result.add_term(passthrough * fm, fc);
    }
  }
  return result;
}

Rational evaluate(const Polynomial& p, const std::array<Rational, kNumVars>& point) {
  // Power tables per variable, sized to the polynomial's degree in that variable.
  std::array<std::vector<Rational>, kNumVars> pw;
  for (int i = 0; i < kNumVars; ++i) pw[i].push_back(Rational(1));
  Rational sum(0);
  for (const auto& [m, c] : p.terms()) {
    Rational t = c;
    for (int i = 0; i < kNumVars; ++i) {
      int k = m.e[i];
      if (k == 0) continue;
      auto& tab = pw[i];
      while (static_cast<int>(tab.size()) <= k) tab.push_back(tab.back() * point[i]);
      t *= tab[k];
    }
    sum += t;
  }
  return sum;
}

Polynomial reduce_mod_sphere(const Polynomial& p) {
  // Rewrite X3^(2m+r) -> (1-X1^2-X2^2)^m * X3^r, expanding the power once per m.
  Polynomial one_minus(Rational(1));
  one_minus -= Polynomial::variable(Var::X1) * Polynomial::variable(Var::X1);
  one_minus -= Polynomial::variable(Var::X2) * Polynomial::variable(Var::X2);

  std::map<int, Polynomial> pow_cache;
  pow_cache[0] = Polynomial(Rational(1));
  auto power = [&](int m) -> const Polynomial& {
    auto it = pow_cache.find(m);
    if (it == pow_cache.end()) {
      it = pow_cache.emplace(m, pow_cache[m - 1] * one_minus).first;
    }
    return it->second;
  };

  const int x3 = static_cast<int>(Var::X3);
  Polynomial r;
  for (const auto& [m, c] : p.terms()) {
    int k = m.e[x3];
    if (k <= 1) {
      r.add_term(m, c);
      continue;
    }
    Monomial rest = m;
    rest.e[x3] = static_cast<uint8_t>(k % 2);
    // power(m) may be requested out of order; build intermediates on demand.
    for (int need = 1; need <= k / 2; ++need) power(need);
    for (const auto& [fm, fc] : power(k / 2).terms()) r.add_term(rest * fm, c * fc);
  }
  return r;
}

}  // namespace neumann
