#pragma once

#include <map>
#include <numeric>
#include <string>
#include <utility>
#include <vector>

#include "ratfunc.hpp"

namespace semisym {

using Exponent = std::vector<int>;

inline int expo_weight(const Exponent& e) { return std::accumulate(e.begin(), e.end(), 0); }

// Graded lexicographic with z1 > z2 > ..., largest monomial first, so that
// map iteration starts at the leading term and matches the serialization order.
struct GradedLexDown {
  bool operator()(const Exponent& a, const Exponent& b) const {
    int wa = expo_weight(a), wb = expo_weight(b);
    if (wa != wb) return wa > wb;
    return b < a;
  }
};

// Thrown by exact division when the divisor does not divide; carries the
// remainder as a witness of the broken invariant upstream.
class DivisionRemainder : public std::runtime_error {
 public:
  DivisionRemainder(std::string msg, std::string remainder)
      : std::runtime_error(std::move(msg)), remainder_str(std::move(remainder)) {}
  std::string remainder_str;
};

// Sparse multivariate polynomial in z_1..z_n over Q(r). No zero coefficients
// are stored; every exponent has length n.
class MultiPoly {
 public:
  using TermMap = std::map<Exponent, RatFunc, GradedLexDown>;

  MultiPoly() = default;
  explicit MultiPoly(int n) : n_(n) {}

  static MultiPoly constant(int n, const RatFunc& c) {
    MultiPoly f(n);
    f.add_term(Exponent(n, 0), c);
    return f;
  }
  // z_i, 1-based
  static MultiPoly variable(int n, int i) {
    Exponent e(n, 0);
    e.at(i - 1) = 1;
    MultiPoly f(n);
    f.add_term(e, RatFunc(1));
    return f;
  }
  static MultiPoly monomial(int n, Exponent e, const RatFunc& c) {
    MultiPoly f(n);
    if (static_cast<int>(e.size()) != n)
      throw std::domain_error("MultiPoly::monomial: exponent length mismatch");
    f.add_term(std::move(e), c);
    return f;
  }

  int nvars() const { return n_; }
  bool is_zero() const { return terms_.empty(); }
  const TermMap& terms() const { return terms_; }
  size_t term_count() const { return terms_.size(); }

  RatFunc coeff(const Exponent& e) const {
    auto it = terms_.find(e);
    return it == terms_.end() ? RatFunc() : it->second;
  }

  int degree() const { return terms_.empty() ? -1 : expo_weight(terms_.begin()->first); }

  // total degree in z_1..z_m
  int degree_in_prefix(int m) const {
    int d = -1;
    for (const auto& [e, c] : terms_)
      d = std::max(d, std::accumulate(e.begin(), e.begin() + m, 0));
    return d;
  }

  void add_term(Exponent e, const RatFunc& c) {
    if (c.is_zero()) return;
    auto [it, fresh] = terms_.emplace(std::move(e), c);
    if (!fresh) {
      it->second += c;
      if (it->second.is_zero()) terms_.erase(it);
    }
  }

  friend bool operator==(const MultiPoly& a, const MultiPoly& b) {
    return a.n_ == b.n_ && a.terms_ == b.terms_;
  }
  friend bool operator!=(const MultiPoly& a, const MultiPoly& b) { return !(a == b); }

  MultiPoly operator-() const {
    MultiPoly f = *this;
    for (auto& [e, c] : f.terms_) c = -c;
    return f;
  }

  MultiPoly& operator+=(const MultiPoly& o) {
    check_arity(o);
    for (const auto& [e, c] : o.terms_) add_term(e, c);
    return *this;
  }
  MultiPoly& operator-=(const MultiPoly& o) {
    check_arity(o);
    for (const auto& [e, c] : o.terms_) add_term(e, -c);
    return *this;
  }
  friend MultiPoly operator+(MultiPoly a, const MultiPoly& b) { return a += b; }
  friend MultiPoly operator-(MultiPoly a, const MultiPoly& b) { return a -= b; }

  friend MultiPoly operator*(const MultiPoly& a, const MultiPoly& b) {
    a.check_arity(b);
    MultiPoly out(a.n_);
    Exponent e(a.n_);
    for (const auto& [ea, ca] : a.terms_)
      for (const auto& [eb, cb] : b.terms_) {
        for (int i = 0; i < a.n_; ++i) e[i] = ea[i] + eb[i];
        out.add_term(e, ca * cb);
      }
    return out;
  }
  friend MultiPoly operator*(MultiPoly a, const RatFunc& s) {
    if (s.is_zero()) return MultiPoly(a.n_);
    for (auto& [e, c] : a.terms_) c *= s;
    return a;
  }
  MultiPoly& operator*=(const MultiPoly& o) { return *this = *this * o; }
  MultiPoly& operator*=(const RatFunc& s) { return *this = *this * s; }

  // f(z - v), exact; degree preserved
  MultiPoly shifted(const std::vector<RatFunc>& v) const {
    if (static_cast<int>(v.size()) != n_)
      throw std::domain_error("MultiPoly::shifted: offset length mismatch");
    MultiPoly out(n_);
    for (const auto& [e, c] : terms_) {
      MultiPoly t = constant(n_, c);
      for (int i = 0; i < n_; ++i)
        if (e[i] > 0) t *= binomial_power(n_, i, -v[i], e[i]);
      out += t;
    }
    return out;
  }

  MultiPoly shifted_int(const std::vector<int>& v) const {
    std::vector<RatFunc> w(v.begin(), v.end());
    return shifted(w);
  }

  // simultaneous substitution z_i -> p_i
  RatFunc eval(const std::vector<RatFunc>& p) const {
    if (static_cast<int>(p.size()) != n_)
      throw std::domain_error("MultiPoly::eval: point length mismatch");
    // powers per variable up to the needed exponent
    std::vector<std::vector<RatFunc>> pw(n_);
    for (int i = 0; i < n_; ++i) pw[i].push_back(RatFunc(1));
    RatFunc acc;
    for (const auto& [e, c] : terms_) {
      RatFunc t = c;
      for (int i = 0; i < n_; ++i) {
        while (static_cast<int>(pw[i].size()) <= e[i]) pw[i].push_back(pw[i].back() * p[i]);
        if (e[i] > 0) t *= pw[i][e[i]];
      }
      acc += t;
    }
    return acc;
  }

  // single-divisor division with respect to graded lex: *this = q*g + rem,
  // no monomial of rem divisible by the leading monomial of g
  std::pair<MultiPoly, MultiPoly> divmod(const MultiPoly& g) const {
    check_arity(g);
    if (g.is_zero()) throw std::domain_error("MultiPoly::divmod: division by zero polynomial");
    MultiPoly q(n_), rem(n_), f = *this;
    const Exponent& glm = g.terms_.begin()->first;
    const RatFunc& glc = g.terms_.begin()->second;
    Exponent diff(n_);
    while (!f.is_zero()) {
      auto lead = f.terms_.begin();
      bool divisible = true;
      for (int i = 0; i < n_; ++i) {
        diff[i] = lead->first[i] - glm[i];
        if (diff[i] < 0) divisible = false;
      }
      if (!divisible) {
        rem.add_term(lead->first, lead->second);
        f.terms_.erase(lead);
        continue;
      }
      RatFunc c = lead->second / glc;
      q.add_term(diff, c);
      MultiPoly piece = monomial(n_, diff, c) * g;
      f -= piece;
    }
    return {q, rem};
  }

  MultiPoly div_exact(const MultiPoly& g) const {
    auto [q, rem] = divmod(g);
    if (!rem.is_zero())
      throw DivisionRemainder("MultiPoly::div_exact: nonzero remainder", rem.str());
    return q;
  }

  // invariance under all parity-preserving adjacent transpositions z_i <-> z_{i+2}
  bool is_semisymmetric() const {
    for (int i = 0; i + 2 < n_; ++i) {
      for (const auto& [e, c] : terms_) {
        Exponent s = e;
        std::swap(s[i], s[i + 2]);
        if (coeff(s) != c) return false;
      }
    }
    return true;
  }

  bool is_homogeneous() const {
    if (terms_.empty()) return true;
    int d = degree();
    return expo_weight(terms_.rbegin()->first) == d;  // graded order: smallest last
  }

  MultiPoly homogeneous_component(int d) const {
    MultiPoly out(n_);
    for (const auto& [e, c] : terms_)
      if (expo_weight(e) == d) out.add_term(e, c);
    return out;
  }

  MultiPoly top_component() const {
    if (is_zero()) throw std::domain_error("MultiPoly::top_component: zero polynomial");
    return homogeneous_component(degree());
  }

  // f(-z)
  MultiPoly negate_vars() const {
    MultiPoly out(n_);
    for (const auto& [e, c] : terms_)
      out.add_term(e, expo_weight(e) % 2 ? -c : c);
    return out;
  }

  // substitute z_n = 0 and drop the last variable
  MultiPoly restrict_last_zero() const {
    MultiPoly out(n_ - 1);
    for (const auto& [e, c] : terms_) {
      if (e[n_ - 1] != 0) continue;
      out.add_term(Exponent(e.begin(), e.end() - 1), c);
    }
    return out;
  }

  // z_{2i-1} -> u_{2i-1} + u_{2i}, z_{2i} -> u_{2i} (u_{n+1} = 0 when n is odd)
  MultiPoly upper_triangular_substitution() const {
    MultiPoly out(n_);
    for (const auto& [e, c] : terms_) {
      MultiPoly t = constant(n_, c);
      for (int i = 0; i < n_; ++i) {
        if (e[i] == 0) continue;
        if (i % 2 == 0 && i + 1 < n_) {
          MultiPoly lin = variable(n_, i + 1) + variable(n_, i + 2);
          for (int k = 0; k < e[i]; ++k) t *= lin;
        } else {
          Exponent pe(n_, 0);
          pe[i] = e[i];
          t *= monomial(n_, pe, RatFunc(1));
        }
      }
      out += t;
    }
    return out;
  }

  std::string str() const {
    if (terms_.empty()) return "0";
    std::string out;
    for (const auto& [e, c] : terms_) {
      if (!out.empty()) out += " + ";
      out += "(" + c.str() + ")";
      for (int i = 0; i < n_; ++i) {
        if (e[i] == 0) continue;
        out += "*z" + std::to_string(i + 1);
        if (e[i] > 1) out += "^" + std::to_string(e[i]);
      }
    }
    return out;
  }

 private:
  int n_ = 0;
  TermMap terms_;

  void check_arity(const MultiPoly& o) const {
    if (n_ != o.n_) throw std::domain_error("MultiPoly: variable count mismatch");
  }

  // (z_{i+1} + a)^e, i 0-based
  static MultiPoly binomial_power(int n, int i, const RatFunc& a, int e) {
    MultiPoly base = variable(n, i + 1) + constant(n, a);
    MultiPoly acc = constant(n, RatFunc(1));
    for (int k = 0; k < e; ++k) acc *= base;
    return acc;
  }
};

// elementary symmetric polynomial of degree k in the listed variables (1-based)
inline MultiPoly elementary_in_vars(int n, const std::vector<int>& vars, int k) {
  if (k < 0 || k > static_cast<int>(vars.size())) return MultiPoly(n);
  std::vector<MultiPoly> layers(k + 1, MultiPoly(n));
  layers[0] = MultiPoly::constant(n, RatFunc(1));
  for (int v : vars)
    for (int j = k; j >= 1; --j) layers[j] += layers[j - 1] * MultiPoly::variable(n, v);
  return layers[k];
}

inline std::vector<int> odd_positions(int n) {
  std::vector<int> v;
  for (int i = 1; i <= n; i += 2) v.push_back(i);
  return v;
}
inline std::vector<int> even_positions(int n) {
  std::vector<int> v;
  for (int i = 2; i <= n; i += 2) v.push_back(i);
  return v;
}

// product of (z_i - z_j) over i < j with j - i even
inline MultiPoly semisym_vandermonde(int n) {
  MultiPoly f = MultiPoly::constant(n, RatFunc(1));
  for (int i = 1; i <= n; ++i)
    for (int j = i + 2; j <= n; j += 2)
      f *= MultiPoly::variable(n, i) - MultiPoly::variable(n, j);
  return f;
}

// exact division by the semisymmetric Vandermonde, one linear factor at a time
inline MultiPoly divide_by_vandermonde(MultiPoly f) {
  int n = f.nvars();
  for (int i = 1; i <= n; ++i)
    for (int j = i + 2; j <= n; j += 2) {
      if (f.is_zero()) return f;
      f = f.div_exact(MultiPoly::variable(n, i) - MultiPoly::variable(n, j));
    }
  return f;
}

}  // namespace semisym
