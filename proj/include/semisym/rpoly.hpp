#pragma once

#include <algorithm>
#include <string>
#include <utility>
#include <vector>

#include "arith.hpp"

namespace semisym {

// Dense univariate polynomial in the deformation parameter r with rational
// coefficients, ascending degree, no trailing zeros. The zero polynomial has
// an empty coefficient vector and degree() == -1.
class RPoly {
 public:
  RPoly() = default;
  explicit RPoly(const Rational& c) {
    if (c != 0) c_.push_back(c);
  }
  explicit RPoly(long c) : RPoly(Rational(c)) {}

  static RPoly var() { return from_coeffs({Rational(0), Rational(1)}); }

  static RPoly from_coeffs(std::vector<Rational> c) {
    RPoly p;
    p.c_ = std::move(c);
    p.trim();
    return p;
  }

  int degree() const { return static_cast<int>(c_.size()) - 1; }
  bool is_zero() const { return c_.empty(); }
  bool is_one() const { return c_.size() == 1 && c_[0] == 1; }
  const std::vector<Rational>& coeffs() const { return c_; }
  Rational coeff(int i) const {
    return i >= 0 && i < static_cast<int>(c_.size()) ? c_[i] : Rational(0);
  }
  const Rational& leading() const { return c_.back(); }

  friend bool operator==(const RPoly& a, const RPoly& b) { return a.c_ == b.c_; }
  friend bool operator!=(const RPoly& a, const RPoly& b) { return !(a == b); }
  // Arbitrary total order so RPoly can key maps.
  friend bool operator<(const RPoly& a, const RPoly& b) {
    if (a.c_.size() != b.c_.size()) return a.c_.size() < b.c_.size();
    for (size_t i = a.c_.size(); i-- > 0;)
      if (a.c_[i] != b.c_[i]) return a.c_[i] < b.c_[i];
    return false;
  }

  RPoly operator-() const {
    RPoly p = *this;
    for (auto& x : p.c_) x = -x;
    return p;
  }

  friend RPoly operator+(const RPoly& a, const RPoly& b) {
    RPoly p;
    p.c_.resize(std::max(a.c_.size(), b.c_.size()));
    for (size_t i = 0; i < p.c_.size(); ++i) p.c_[i] = a.coeff(i) + b.coeff(i);
    p.trim();
    return p;
  }
  friend RPoly operator-(const RPoly& a, const RPoly& b) { return a + (-b); }
  friend RPoly operator*(const RPoly& a, const RPoly& b) {
    if (a.is_zero() || b.is_zero()) return RPoly();
    RPoly p;
    p.c_.assign(a.c_.size() + b.c_.size() - 1, Rational(0));
    for (size_t i = 0; i < a.c_.size(); ++i)
      for (size_t j = 0; j < b.c_.size(); ++j) p.c_[i + j] += a.c_[i] * b.c_[j];
    p.trim();
    return p;
  }
  friend RPoly operator*(const RPoly& a, const Rational& s) {
    if (s == 0) return RPoly();
    RPoly p = a;
    for (auto& x : p.c_) x *= s;
    return p;
  }

  // Division over the field Q: a = q*b + rem with deg rem < deg b.
  static void divmod(const RPoly& a, const RPoly& b, RPoly& q, RPoly& rem) {
    if (b.is_zero()) throw std::domain_error("RPoly::divmod: division by zero polynomial");
    q = RPoly();
    rem = a;
    if (a.degree() < b.degree()) return;
    q.c_.assign(a.degree() - b.degree() + 1, Rational(0));
    while (!rem.is_zero() && rem.degree() >= b.degree()) {
      int k = rem.degree() - b.degree();
      Rational f = rem.leading() / b.leading();
      q.c_[k] = f;
      for (int i = 0; i <= b.degree(); ++i) rem.c_[k + i] -= f * b.c_[i];
      rem.trim();
    }
    q.trim();
  }

  static RPoly div_exact(const RPoly& a, const RPoly& b) {
    RPoly q, rem;
    divmod(a, b, q, rem);
    if (!rem.is_zero()) throw std::domain_error("RPoly::div_exact: nonzero remainder");
    return q;
  }

  // Positive rational c with *this == c * P for an integer polynomial P of
  // content 1 (sign of P's leading coefficient matches ours).
  Rational content() const {
    if (is_zero()) return Rational(1);
    Int g = 0, l = 1;
    for (const auto& x : c_) {
      mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), x.get_num().get_mpz_t());
      mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), x.get_den().get_mpz_t());
    }
    return make_rational(g, l);
  }

  bool integer_coeffs() const {
    return std::all_of(c_.begin(), c_.end(), [](const Rational& x) { return x.get_den() == 1; });
  }

  // gcd as polynomials over Q, normalized: integer coefficients, content 1,
  // positive leading coefficient. gcd(0,0) = 0.
  static RPoly gcd(const RPoly& a, const RPoly& b) {
    std::vector<Int> u = a.primitive_int(), v = b.primitive_int();
    if (u.empty()) return normalize_primitive(v);
    if (v.empty()) return normalize_primitive(u);
    if (u.size() < v.size()) std::swap(u, v);
    while (!v.empty()) {
      std::vector<Int> rem = pseudo_rem(u, v);
      strip_int_content(rem);
      u = std::move(v);
      v = std::move(rem);
    }
    return normalize_primitive(u);
  }

  Rational eval(const Rational& x) const {
    Rational acc(0);
    for (size_t i = c_.size(); i-- > 0;) acc = acc * x + c_[i];
    return acc;
  }

  std::string str(const std::string& name = "r") const {
    if (is_zero()) return "0";
    std::string out;
    for (size_t i = c_.size(); i-- > 0;) {
      if (c_[i] == 0) continue;
      Rational c = c_[i];
      if (!out.empty()) {
        out += c > 0 ? " + " : " - ";
        if (c < 0) c = -c;
      }
      bool unit = c == 1 && i > 0;
      if (!unit) out += rational_str(c);
      if (i > 0) {
        if (!unit) out += "*";
        out += name;
        if (i > 1) out += "^" + std::to_string(i);
      }
    }
    return out;
  }

 private:
  std::vector<Rational> c_;

  void trim() {
    while (!c_.empty() && c_.back() == 0) c_.pop_back();
  }

  // integer polynomial with content 1, same roots; empty for zero
  std::vector<Int> primitive_int() const {
    std::vector<Int> out;
    if (is_zero()) return out;
    Rational c = content();
    out.reserve(c_.size());
    for (const auto& x : c_) {
      Rational y = x / c;
      out.push_back(y.get_num());
    }
    return out;
  }

  static void strip_int_content(std::vector<Int>& p) {
    while (!p.empty() && p.back() == 0) p.pop_back();
    if (p.empty()) return;
    Int g = 0;
    for (const auto& x : p) mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), x.get_mpz_t());
    for (auto& x : p) x /= g;
  }

  static RPoly normalize_primitive(std::vector<Int> p) {
    while (!p.empty() && p.back() == 0) p.pop_back();
    if (p.empty()) return RPoly();
    if (p.back() < 0)
      for (auto& x : p) x = -x;
    std::vector<Rational> c;
    c.reserve(p.size());
    for (auto& x : p) c.emplace_back(x);
    return from_coeffs(std::move(c));
  }

  // lc(v)^(deg u - deg v + 1) * u mod v over Z
  static std::vector<Int> pseudo_rem(std::vector<Int> u, const std::vector<Int>& v) {
    const Int& lv = v.back();
    int dv = static_cast<int>(v.size()) - 1;
    int steps = static_cast<int>(u.size()) - static_cast<int>(v.size()) + 1;
    for (int s = 0; s < steps; ++s) {
      int du = static_cast<int>(u.size()) - 1;
      Int lu = u.back();
      for (auto& x : u) x *= lv;
      for (int i = 0; i <= dv; ++i) u[du - dv + i] -= lu * v[i];
      while (!u.empty() && u.back() == 0) u.pop_back();
      if (static_cast<int>(u.size()) - 1 < dv) break;
    }
    return u;
  }
};

}  // namespace semisym
