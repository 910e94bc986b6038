#pragma once

#include <map>
#include <mutex>
#include <set>
#include <string>
#include <tuple>
#include <utility>
#include <vector>

#include "factors.hpp"
#include "multipoly.hpp"
#include "partition.hpp"

namespace semisym {

// Expansion of a polynomial over a partition-indexed basis.
struct RExpansion {
  enum class Basis { Monomial, Elementary, R, RBar };
  Basis basis = Basis::R;
  int n = 0;
  std::map<IntVec, RatFunc> coeffs;

  void add(const IntVec& mu, const RatFunc& c) {
    if (c.is_zero()) return;
    auto [it, fresh] = coeffs.emplace(mu, c);
    if (!fresh) {
      it->second += c;
      if (it->second.is_zero()) coeffs.erase(it);
    }
  }
  RatFunc coeff(const IntVec& mu) const {
    auto it = coeffs.find(mu);
    return it == coeffs.end() ? RatFunc() : it->second;
  }
  friend bool operator==(const RExpansion& a, const RExpansion& b) {
    return a.basis == b.basis && a.n == b.n && a.coeffs == b.coeffs;
  }
};

namespace detail {

// The two interpolation flavors share one engine: nodes rho+lambda, a strip
// polynomial whose zero set separates lambda_n = 0 from the rest, and a
// generator basis used to embed an (n-1)-variable solution.
struct Flavor {
  bool semisym;  // false: fully symmetric comparison family
  RatFunc par;   // scale of rho (r, or 2r for the comparison family)

  int strip_degree(int n) const { return semisym ? ceil_half(n) : n; }
  bool node_ok(const IntVec& lam, int d) const {
    return (semisym ? odd_weight(lam) : weight(lam)) <= d;
  }
  friend bool operator<(const Flavor& a, const Flavor& b) {
    if (a.semisym != b.semisym) return a.semisym < b.semisym;
    return a.par < b.par;
  }
};

inline MultiPoly strip_poly(const Flavor& fl, int n) {
  MultiPoly f = MultiPoly::constant(n, RatFunc(1));
  for (int i = 1; i <= n; ++i)
    if (!fl.semisym || (n - i) % 2 == 0) f *= MultiPoly::variable(n, i);
  return f;
}

// Generator g_k of the invariant ring. The raw family is e_m of the parity-k
// variables alone; it is the one stable under adding a variable, so the
// cross-arity embedding uses it. The display family subtracts the even from
// the odd elementary at odd k; its members are the top parts of the column
// interpolation polynomials. Both share the leading monomial z^[(1^k)], and
// for the fully symmetric flavor they coincide with e_k.
inline MultiPoly generator(const Flavor& fl, int n, int k, bool raw) {
  if (!fl.semisym) {
    std::vector<int> all(n);
    for (int i = 0; i < n; ++i) all[i] = i + 1;
    return elementary_in_vars(n, all, k);
  }
  int m = ceil_half(k);
  if (k % 2 == 0) return elementary_in_vars(n, even_positions(n), m);
  MultiPoly od = elementary_in_vars(n, odd_positions(n), m);
  if (raw) return od;
  return od - elementary_in_vars(n, even_positions(n), m);
}

inline const MultiPoly& gen_monomial(const Flavor& fl, int n, const IntVec& mu, bool raw) {
  static std::map<std::tuple<Flavor, bool, int, IntVec>, MultiPoly> cache;
  static std::mutex mx;
  auto key = std::make_tuple(fl, raw, n, mu);
  {
    std::lock_guard<std::mutex> lk(mx);
    auto it = cache.find(key);
    if (it != cache.end()) return it->second;
  }
  MultiPoly f = MultiPoly::constant(n, RatFunc(1));
  for (int k = 1; k <= static_cast<int>(mu.size()); ++k) {
    int e = mu[k - 1] - (k < static_cast<int>(mu.size()) ? mu[k] : 0);
    for (int j = 0; j < e; ++j) f *= generator(fl, n, k, raw);
  }
  std::lock_guard<std::mutex> lk(mx);
  return cache.emplace(std::move(key), std::move(f)).first->second;
}

// Expansion over products of generators by leading-term elimination: the
// graded-lex leading monomial of the basis element indexed by mu is z^[mu]
// (semisymmetric) or z^mu (symmetric), and these are distinct across mu.
inline std::map<IntVec, RatFunc> to_gen_basis(const Flavor& fl, MultiPoly f, bool raw) {
  std::map<IntVec, RatFunc> out;
  int n = f.nvars();
  while (!f.is_zero()) {
    Exponent e = f.terms().begin()->first;
    RatFunc c = f.terms().begin()->second;
    IntVec mu = fl.semisym ? bracket_inverse(e) : e;
    if (!is_partition(mu))
      throw std::domain_error("to_gen_basis: input lacks the required symmetry (leading " +
                              partition_str(e) + ")");
    out[mu] = c;
    f -= gen_monomial(fl, n, mu, raw) * c;
  }
  return out;
}

// re-express an (n-1)-variable invariant in n variables, generator by generator
inline MultiPoly embed(const Flavor& fl, const MultiPoly& g, int n) {
  MultiPoly out(n);
  for (const auto& [mu, c] : to_gen_basis(fl, g, true))
    out += gen_monomial(fl, n, mu, true) * c;
  return out;
}

// Unique invariant interpolant of degree <= d through the given node values,
// by the column/degree peeling recursion behind the uniqueness theorem.
inline MultiPoly newton_interpolate(const Flavor& fl, int n, int d,
                                    const std::map<IntVec, RatFunc>& values) {
  if (n == 0) {
    auto it = values.find(IntVec{});
    return MultiPoly::constant(0, it == values.end() ? RatFunc() : it->second);
  }
  // missing nodes carry the value 0 and still constrain the interpolant
  auto lookup = [&values](const IntVec& lam) {
    auto it = values.find(lam);
    return it == values.end() ? RatFunc() : it->second;
  };
  auto nodes = fl.semisym ? partitions_odd_bounded(n, d) : partitions_weight_bounded(n, d);

  std::map<IntVec, RatFunc> v0;
  bool any_inner = false;
  for (const auto& lam : nodes) {
    if (lam[n - 1] == 0) {
      RatFunc a = lookup(lam);
      if (!a.is_zero()) v0.emplace(IntVec(lam.begin(), lam.end() - 1), std::move(a));
    } else {
      any_inner = true;
    }
  }

  MultiPoly G = newton_interpolate(fl, n - 1, d, v0);
  MultiPoly g = G.shifted(std::vector<RatFunc>(n - 1, fl.par));
  MultiPoly f = embed(fl, g, n);
  if (!any_inner) return f;

  MultiPoly e = strip_poly(fl, n);
  auto rho_n = rho_scaled(n, fl.par);
  std::map<IntVec, RatFunc> inner;
  for (const auto& lam : nodes) {
    if (lam[n - 1] == 0) continue;
    auto pt = rho_n;
    for (int i = 0; i < n; ++i) pt[i] += RatFunc(lam[i]);
    RatFunc rest = (lookup(lam) - f.eval(pt)) / e.eval(pt);
    if (rest.is_zero()) continue;
    IntVec shifted_lam(lam);
    for (int& x : shifted_lam) --x;
    inner.emplace(std::move(shifted_lam), std::move(rest));
  }
  MultiPoly H = newton_interpolate(fl, n, d - fl.strip_degree(n), inner);
  return f + e * H.shifted_int(IntVec(n, 1));
}

inline Flavor semisym_flavor() { return Flavor{true, RatFunc::r()}; }

}  // namespace detail

// Unique semisymmetric polynomial of degree <= d with the prescribed values
// at the nodes rho+lambda, odd weight of lambda <= d. Missing keys read as 0.
inline MultiPoly interpolant(int n, int d, const std::map<IntVec, RatFunc>& values) {
  return detail::newton_interpolate(detail::semisym_flavor(), n, d, values);
}

MultiPoly build_R(const IntVec& lam_in, int n);

namespace detail {

inline MultiPoly build_R_uncached(const IntVec& lam, int n) {
  int d = odd_weight(lam);
  if (lam[n - 1] >= 1) {
    // strip a full column and recurse
    IntVec inner = lam;
    for (int& x : inner) --x;
    MultiPoly e = strip_poly(semisym_flavor(), n);
    return e * build_R(inner, n).shifted_int(IntVec(n, 1));
  }
  std::map<IntVec, RatFunc> kron;
  kron.emplace(lam, RatFunc(1));
  MultiPoly f = newton_interpolate(semisym_flavor(), n, d, kron);
  RatFunc lead = f.coeff(bracket(lam));
  if (lead.is_zero())
    throw std::runtime_error("build_R: leading coefficient vanished at " + partition_str(lam));
  return f * (RatFunc(1) / lead);
}

}  // namespace detail

// The monic interpolation polynomial: semisymmetric, degree equal to the odd
// weight of lambda, unit coefficient on z^[lambda], vanishing at every other
// node of that degree. Cached process-wide.
inline MultiPoly build_R(const IntVec& lam_in, int n) {
  if (static_cast<int>(lam_in.size()) > n) {
    for (size_t i = n; i < lam_in.size(); ++i)
      if (lam_in[i] != 0) throw std::domain_error("build_R: partition longer than n");
  }
  IntVec lam = lam_in;
  lam.resize(n, 0);
  if (!is_partition(lam)) throw std::domain_error("build_R: not a partition");

  static std::map<std::pair<int, IntVec>, MultiPoly> cache;
  static std::mutex mx;
  auto key = std::make_pair(n, lam);
  {
    std::lock_guard<std::mutex> lk(mx);
    auto it = cache.find(key);
    if (it != cache.end()) return it->second;
  }
  MultiPoly f = detail::build_R_uncached(lam, n);
  std::lock_guard<std::mutex> lk(mx);
  return cache.emplace(std::move(key), std::move(f)).first->second;
}

// Kronecker normalization: value 1 at its own node.
inline MultiPoly build_r_normalized(const IntVec& lam, int n) {
  return build_R(lam, n) * (RatFunc(1) / cprime_even(lam));
}

// cached value R_lambda(rho + mu)
inline RatFunc R_node_value(int n, const IntVec& lam, const IntVec& mu) {
  static std::map<std::tuple<int, IntVec, IntVec>, RatFunc> cache;
  static std::mutex mx;
  auto key = std::make_tuple(n, lam, mu);
  {
    std::lock_guard<std::mutex> lk(mx);
    auto it = cache.find(key);
    if (it != cache.end()) return it->second;
  }
  RatFunc v = build_R(lam, n).eval(node_point(n, mu));
  std::lock_guard<std::mutex> lk(mx);
  return cache.emplace(std::move(key), std::move(v)).first->second;
}

// Fully symmetric comparison family: unique symmetric polynomial of degree
// |lambda| with unit coefficient on z^lambda vanishing at the other nodes of
// weight <= |lambda| built from the scaled rho.
inline MultiPoly build_shifted_jack(const IntVec& lam_in, int n, const RatFunc& par) {
  IntVec lam = lam_in;
  lam.resize(n, 0);
  if (!is_partition(lam)) throw std::domain_error("build_shifted_jack: not a partition");
  static std::map<std::tuple<int, IntVec, RatFunc>, MultiPoly> cache;
  static std::mutex mx;
  auto key = std::make_tuple(n, lam, par);
  {
    std::lock_guard<std::mutex> lk(mx);
    auto it = cache.find(key);
    if (it != cache.end()) return it->second;
  }
  detail::Flavor fl{false, par};
  std::map<IntVec, RatFunc> kron;
  kron.emplace(lam, RatFunc(1));
  MultiPoly f = detail::newton_interpolate(fl, n, weight(lam), kron);
  RatFunc lead = f.coeff(lam);
  if (lead.is_zero())
    throw std::runtime_error("build_shifted_jack: leading coefficient vanished");
  f = f * (RatFunc(1) / lead);
  std::lock_guard<std::mutex> lk(mx);
  return cache.emplace(std::move(key), std::move(f)).first->second;
}

// sum over decreasing index tuples of products (v_{i_1} + 0 c)(v_{i_2} + c)...
// with v_j the j-th of the given linear polynomials; the shifted column family
inline MultiPoly column_family_sum(int n, const std::vector<MultiPoly>& vars, int k,
                                   const RatFunc& par) {
  std::vector<MultiPoly> acc(k + 1, MultiPoly(n));
  acc[0] = MultiPoly::constant(n, RatFunc(1));
  for (size_t p = vars.size(); p-- > 0;)
    for (int j = std::min<int>(k, static_cast<int>(vars.size() - p)); j >= 1; --j)
      acc[j] += acc[j - 1] * (vars[p] + MultiPoly::constant(n, RatFunc(j - 1) * par));
  return acc[k];
}

// Elementary invariants: unshifted top-degree generators, or the shifted
// single-column interpolation polynomials.
inline MultiPoly elementary_semisym(int m, int n, bool shifted) {
  if (m < 1 || m > n) throw std::domain_error("elementary_semisym: index out of range");
  if (!shifted) return detail::generator(detail::semisym_flavor(), n, m, false);
  auto rp = rho(n);
  auto linear = [&](const std::vector<int>& pos) {
    std::vector<MultiPoly> v;
    for (int p : pos)
      v.push_back(MultiPoly::variable(n, p) - MultiPoly::constant(n, rp[p - 1]));
    return v;
  };
  int k = ceil_half(m);
  RatFunc two_r = RatFunc(2) * RatFunc::r();
  MultiPoly ev = column_family_sum(n, linear(even_positions(n)), k, two_r);
  if (m % 2 == 0) return ev;
  return column_family_sum(n, linear(odd_positions(n)), k, two_r) - ev;
}

inline RExpansion to_elementary_basis(const MultiPoly& f) {
  RExpansion out;
  out.basis = RExpansion::Basis::Elementary;
  out.n = f.nvars();
  for (auto& [mu, c] : detail::to_gen_basis(detail::semisym_flavor(), f, false)) out.add(mu, c);
  return out;
}

inline MultiPoly from_elementary_basis(const RExpansion& ex) {
  MultiPoly f(ex.n);
  for (const auto& [mu, c] : ex.coeffs)
    f += detail::gen_monomial(detail::semisym_flavor(), ex.n, mu, false) * c;
  return f;
}

// Expansion in the interpolation basis through the inverse transform of the
// duality layer: coefficients are signed normalized hat values.
inline RExpansion to_R_basis(const MultiPoly& f) {
  RExpansion out;
  out.basis = RExpansion::Basis::R;
  out.n = f.nvars();
  if (f.is_zero()) return out;
  int d = f.degree();
  auto nodes = partitions_odd_bounded(out.n, d);
  std::map<IntVec, RatFunc> fvals;
  for (const auto& nu : nodes) fvals.emplace(nu, f.eval(node_point(out.n, nu)));
  for (const auto& mu : nodes) {
    RatFunc hat;
    for (const auto& nu : nodes) {
      if (!order_test(nu, mu, Rel::Sqsubseteq)) continue;  // extra vanishing
      RatFunc term = R_node_value(out.n, nu, mu) / R_node_value(out.n, nu, nu) * fvals[nu];
      hat += odd_weight(nu) % 2 ? -term : term;
    }
    if (hat.is_zero()) continue;
    RatFunc c = hat / R_node_value(out.n, mu, mu);
    out.add(mu, odd_weight(mu) % 2 ? -c : c);
  }
  return out;
}

inline MultiPoly from_R_basis(const RExpansion& ex) {
  MultiPoly f(ex.n);
  for (const auto& [mu, c] : ex.coeffs) f += build_R(mu, ex.n) * c;
  return f;
}

inline MultiPoly top_component(const MultiPoly& f) { return f.top_component(); }

// cached top homogeneous part of the interpolation polynomial
inline MultiPoly rbar(const IntVec& lam_in, int n) {
  IntVec lam = lam_in;
  lam.resize(n, 0);
  static std::map<std::pair<int, IntVec>, MultiPoly> cache;
  static std::mutex mx;
  auto key = std::make_pair(n, lam);
  {
    std::lock_guard<std::mutex> lk(mx);
    auto it = cache.find(key);
    if (it != cache.end()) return it->second;
  }
  MultiPoly f = build_R(lam, n).top_component();
  std::lock_guard<std::mutex> lk(mx);
  return cache.emplace(std::move(key), std::move(f)).first->second;
}

// Homogeneous expansion over the top parts by leading-term elimination.
inline RExpansion to_rbar_basis(MultiPoly f) {
  RExpansion out;
  out.basis = RExpansion::Basis::RBar;
  out.n = f.nvars();
  while (!f.is_zero()) {
    Exponent e = f.terms().begin()->first;
    RatFunc c = f.terms().begin()->second;
    IntVec mu = bracket_inverse(e);
    if (!is_partition(mu))
      throw std::domain_error("to_rbar_basis: input is not semisymmetric homogeneous");
    out.add(mu, c);
    f -= rbar(mu, out.n) * c;
  }
  return out;
}

inline MultiPoly from_rbar_basis(const RExpansion& ex) {
  MultiPoly f(ex.n);
  for (const auto& [mu, c] : ex.coeffs) f += rbar(mu, ex.n) * c;
  return f;
}

// substitute z_n = 0; drops to n-1 variables
inline MultiPoly stability_restrict(const MultiPoly& f) {
  if (f.nvars() < 2) throw std::domain_error("stability_restrict: need at least two variables");
  return f.restrict_last_zero();
}

}  // namespace semisym
