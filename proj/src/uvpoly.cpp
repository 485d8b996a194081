#include "neumann/uvpoly.hpp"

#include <sstream>
#include <vector>

#include "neumann/generators.hpp"

namespace neumann {

UVPolynomial::UVPolynomial(const Rational& c) {
  if (!c.is_zero()) terms_[{0, 0}] = c;
}

UVPolynomial UVPolynomial::term(int du, int dv, const Rational& c) {
  UVPolynomial p;
  if (!c.is_zero()) p.terms_[{du, dv}] = c;
  return p;
}

void UVPolynomial::add_term(int du, int dv, const Rational& c) {
  if (c.is_zero()) return;
  auto key = std::make_pair(du, dv);
  auto [it, inserted] = terms_.emplace(key, c);
  if (!inserted) {
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

UVPolynomial& UVPolynomial::operator+=(const UVPolynomial& o) {
  for (const auto& [k, c] : o.terms_) add_term(k.first, k.second, c);
  return *this;
}

UVPolynomial& UVPolynomial::operator-=(const UVPolynomial& o) {
  for (const auto& [k, c] : o.terms_) add_term(k.first, k.second, -c);
  return *this;
}

UVPolynomial operator*(const UVPolynomial& p, const UVPolynomial& q) {
  UVPolynomial r;
  for (const auto& [kp, cp] : p.terms()) {
    for (const auto& [kq, cq] : q.terms()) {
      r.add_term(kp.first + kq.first, kp.second + kq.second, cp * cq);
    }
  }
  return r;
}

UVPolynomial uv_partial(const UVPolynomial& p, UVVar which) {
  UVPolynomial r;
  for (const auto& [k, c] : p.terms()) {
    if (which == UVVar::U) {
      if (k.first > 0) r.add_term(k.first - 1, k.second, c * Rational(k.first));
    } else {
      if (k.second > 0) r.add_term(k.first, k.second - 1, c * Rational(k.second));
    }
  }
  return r;
}

std::string UVPolynomial::str() const {
  if (terms_.empty()) return "0";
  std::ostringstream out;
  bool first = true;
  for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
    const auto& [k, c] = *it;
    Rational abs = c.sign() < 0 ? -c : c;
    if (first) {
      if (c.sign() < 0) out << "-";
      first = false;
    } else {
      out << (c.sign() < 0 ? " - " : " + ");
    }
    std::string mono;
    if (k.first > 0) mono += "U" + (k.first > 1 ? "^" + std::to_string(k.first) : "");
    if (k.second > 0) {
      if (!mono.empty()) mono += "*";
      mono += "V" + (k.second > 1 ? "^" + std::to_string(k.second) : "");
    }
    bool unit = (abs == Rational(1));
    if (!unit || mono.empty()) out << abs.str();
    if (!mono.empty()) {
      if (!unit) out << "*";
      out << mono;
    }
  }
  return out.str();
}

Polynomial expand_uv(const UVPolynomial& p) {
  const Polynomial cu = neumann_U();
  const Polynomial cv = neumann_V();
  std::vector<Polynomial> pu{Polynomial(Rational(1))}, pv{Polynomial(Rational(1))};
  auto upow = [&](int k) -> const Polynomial& {
    while (static_cast<int>(pu.size()) <= k) pu.push_back(pu.back() * cu);
    return pu[k];
  };
  auto vpow = [&](int k) -> const Polynomial& {
    while (static_cast<int>(pv.size()) <= k) pv.push_back(pv.back() * cv);
    return pv[k];
  };
  Polynomial r;
  for (const auto& [k, c] : p.terms()) {
    r += (upow(k.first) * vpow(k.second)) * c;
  }
  return r;
}

}  // namespace neumann
