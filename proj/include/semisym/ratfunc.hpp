#pragma once

#include <string>
#include <utility>

#include "rpoly.hpp"

namespace semisym {

// Element of the coefficient field Q(r), canonical form: num/den coprime as
// polynomials over Q, den has integer coefficients, content 1 and positive
// leading coefficient. Equal values have identical representations, so
// operator== is a plain component comparison.
class RatFunc {
 public:
  RatFunc() = default;
  RatFunc(long v) : num_(v) {}  // NOLINT: implicit by design
  RatFunc(const Rational& v) : num_(v) {}
  RatFunc(const Int& v) : num_(Rational(v)) {}
  explicit RatFunc(RPoly num) : num_(std::move(num)) {}
  RatFunc(RPoly num, RPoly den) : num_(std::move(num)), den_(std::move(den)) {
    canonicalize();
  }

  static RatFunc r() { return RatFunc(RPoly::var()); }

  const RPoly& num() const { return num_; }
  const RPoly& den() const { return den_; }
  bool is_zero() const { return num_.is_zero(); }
  bool is_one() const { return num_.is_one() && den_.is_one(); }
  bool is_polynomial() const { return den_.is_one(); }
  bool is_rational() const { return den_.is_one() && num_.degree() <= 0; }
  Rational rational_value() const {
    if (!is_rational()) throw std::domain_error("RatFunc: value is not a plain rational");
    return num_.coeff(0);
  }

  friend bool operator==(const RatFunc& a, const RatFunc& b) {
    return a.num_ == b.num_ && a.den_ == b.den_;
  }
  friend bool operator!=(const RatFunc& a, const RatFunc& b) { return !(a == b); }
  friend bool operator<(const RatFunc& a, const RatFunc& b) {
    if (a.num_ != b.num_) return a.num_ < b.num_;
    return a.den_ < b.den_;
  }

  RatFunc operator-() const {
    RatFunc x = *this;
    x.num_ = -x.num_;
    return x;
  }

  friend RatFunc operator+(const RatFunc& a, const RatFunc& b) {
    if (a.is_zero()) return b;
    if (b.is_zero()) return a;
    if (a.den_.is_one() && b.den_.is_one()) return RatFunc::poly(a.num_ + b.num_);
    if (a.den_ == b.den_) return RatFunc(a.num_ + b.num_, a.den_);
    RPoly g = RPoly::gcd(a.den_, b.den_);
    RPoly bred = g.is_one() ? b.den_ : RPoly::div_exact(b.den_, g);
    RPoly ared = g.is_one() ? a.den_ : RPoly::div_exact(a.den_, g);
    return RatFunc(a.num_ * bred + b.num_ * ared, ared * b.den_);
  }
  friend RatFunc operator-(const RatFunc& a, const RatFunc& b) { return a + (-b); }

  friend RatFunc operator*(const RatFunc& a, const RatFunc& b) {
    if (a.is_zero() || b.is_zero()) return RatFunc();
    if (a.den_.is_one() && b.den_.is_one()) return RatFunc::poly(a.num_ * b.num_);
    RPoly g1 = RPoly::gcd(a.num_, b.den_);
    RPoly g2 = RPoly::gcd(b.num_, a.den_);
    RPoly n = reduce(a.num_, g1) * reduce(b.num_, g2);
    RPoly d = reduce(a.den_, g2) * reduce(b.den_, g1);
    RatFunc out;
    out.num_ = std::move(n);
    out.den_ = std::move(d);
    out.normalize_den();  // cross-cancelled parts stay coprime
    return out;
  }

  friend RatFunc operator/(const RatFunc& a, const RatFunc& b) {
    if (b.is_zero()) throw std::domain_error("RatFunc: division by zero");
    RatFunc binv;
    binv.num_ = b.den_;
    binv.den_ = b.num_;
    binv.canonicalize();
    return a * binv;
  }

  RatFunc& operator+=(const RatFunc& o) { return *this = *this + o; }
  RatFunc& operator-=(const RatFunc& o) { return *this = *this - o; }
  RatFunc& operator*=(const RatFunc& o) { return *this = *this * o; }
  RatFunc& operator/=(const RatFunc& o) { return *this = *this / o; }

  RatFunc pow(int e) const {
    if (e < 0) return (RatFunc(1) / *this).pow(-e);
    RatFunc acc(1), base = *this;
    while (e > 0) {
      if (e & 1) acc *= base;
      base = e > 1 ? base * base : base;
      e >>= 1;
    }
    return acc;
  }

  // Specialization of the parameter. Throws, naming the vanishing denominator,
  // when the value is outside the domain.
  Rational eval(const Rational& rv) const {
    Rational d = den_.eval(rv);
    if (d == 0)
      throw std::domain_error("RatFunc::eval: denominator " + den_.str() + " vanishes at r=" +
                              rational_str(rv));
    return num_.eval(rv) / d;
  }

  std::string str() const {
    if (den_.is_one()) return num_.str();
    std::string n = num_.str();
    if (num_.degree() > 0) n = "(" + n + ")";
    return n + "/(" + den_.str() + ")";
  }

 private:
  RPoly num_;         // zero value: num_ = 0, den_ = 1
  RPoly den_{Rational(1)};

  static RatFunc poly(RPoly p) {
    RatFunc x;
    x.num_ = std::move(p);
    return x;
  }

  static RPoly reduce(const RPoly& p, const RPoly& g) {
    return g.is_one() ? p : RPoly::div_exact(p, g);
  }

  void canonicalize() {
    if (den_.is_zero()) throw std::domain_error("RatFunc: zero denominator");
    if (num_.is_zero()) {
      den_ = RPoly(Rational(1));
      return;
    }
    RPoly g = RPoly::gcd(num_, den_);
    if (g.degree() > 0) {
      num_ = RPoly::div_exact(num_, g);
      den_ = RPoly::div_exact(den_, g);
    }
    normalize_den();
  }

  void normalize_den() {
    if (num_.is_zero()) {
      den_ = RPoly(Rational(1));
      return;
    }
    Rational c = den_.content();
    if (den_.leading() < 0) c = -c;
    if (c != 1) {
      den_ = den_ * (1 / c);
      num_ = num_ * (1 / c);
    }
  }
};

inline RatFunc rf_r() { return RatFunc::r(); }

}  // namespace semisym
