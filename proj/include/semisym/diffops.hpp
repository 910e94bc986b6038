#pragma once

#include <map>
#include <mutex>
#include <string>
#include <tuple>
#include <utility>
#include <vector>

#include "interpolate.hpp"

namespace semisym {

enum class OpKind { X, Y };

// One entry of the operator matrix: a polynomial part plus a coefficient in
// front of the unit shift in the row's own variable. Both involve only that
// variable.
struct OpEntry {
  MultiPoly plain, shifted;
};

// The block matrices behind the two operator families. Rows 1..ceil(n/2) are
// carried by the odd variables, the rest by the even ones.
class OperatorMatrix {
 public:
  OperatorMatrix(OpKind kind, int n, const Rational& t) : kind_(kind), n_(n), t_(t) {
    int nb = ceil_half(n), nu = floor_half(n);
    const RatFunc r = RatFunc::r();
    const RatFunc tf{t};
    entries_.assign(nb + nu, std::vector<OpEntry>(nb + nu));
    auto zpow = [&](int var, int e) {
      MultiPoly f = MultiPoly::constant(n, RatFunc(1));
      for (int k = 0; k < e; ++k) f *= MultiPoly::variable(n, var);
      return f;
    };
    auto zrpow = [&](int var, int e) {
      MultiPoly base = MultiPoly::variable(n, var) + MultiPoly::constant(n, r);
      MultiPoly f = MultiPoly::constant(n, RatFunc(1));
      for (int k = 0; k < e; ++k) f *= base;
      return f;
    };
    for (int row = 0; row < nb + nu; ++row) {
      bool oddrow = row < nb;
      int var = oddrow ? 2 * row + 1 : 2 * (row - nb) + 2;
      MultiPoly zt = MultiPoly::variable(n, var) + MultiPoly::constant(n, tf);
      for (int col = 0; col < nb + nu; ++col) {
        bool leftcol = col < nb;
        int j = leftcol ? col + 1 : col - nb + 1;
        OpEntry& e = entries_[row][col];
        if (kind_ == OpKind::X) {
          if (oddrow && leftcol) {
            e.plain = zt * zrpow(var, nb - j);
            e.shifted = -zpow(var, nb + 1 - j);
          } else if (oddrow) {
            e.shifted = -zpow(var, nb - j);
          } else if (leftcol) {
            e.plain = zrpow(var, nu + 1 - j);
            e.shifted = -zpow(var, nu + 1 - j);
          } else {
            e.plain = zrpow(var, nu - j);
          }
        } else {
          if (oddrow && leftcol) {
            e.plain = zrpow(var, nb - j);
          } else if (oddrow) {
            e.plain = zrpow(var, nb - j);
            e.shifted = -zpow(var, nb - j);
          } else if (leftcol) {
            e.shifted = -zpow(var, nu + 1 - j);
          } else {
            e.plain = zt * zrpow(var, nu - j);
            e.shifted = -zpow(var, nu + 1 - j);
          }
        }
        if (e.plain.nvars() == 0) e.plain = MultiPoly(n);
        if (e.shifted.nvars() == 0) e.shifted = MultiPoly(n);
      }
    }
  }

  OpKind kind() const { return kind_; }
  int n() const { return n_; }
  int size() const { return static_cast<int>(entries_.size()); }
  const OpEntry& entry(int row, int col) const { return entries_[row][col]; }
  int row_variable(int row) const {
    int nb = ceil_half(n_);
    return row < nb ? 2 * row + 1 : 2 * (row - nb) + 2;
  }

 private:
  OpKind kind_;
  int n_;
  Rational t_;
  std::vector<std::vector<OpEntry>> entries_;
};

// A difference operator with the Vandermonde cleared: sum over subsets S of
// chat_S(z) T_S, meaning phi(z) * Op = sum chat_S T_S.
struct OperatorExpansion {
  OpKind kind = OpKind::X;
  int n = 0;
  std::map<unsigned, MultiPoly> coeffs;  // variable subset mask -> chat_S

  MultiPoly coeff(unsigned mask) const {
    auto it = coeffs.find(mask);
    return it == coeffs.end() ? MultiPoly(n) : it->second;
  }
};

namespace detail {

// Laplace expansion with memoization over column subsets. Entries of distinct
// rows commute (they involve distinct variables), so the determinant is a
// well-defined operator; coefficients multiply as plain polynomials and the
// shift subsets accumulate by union.
inline std::map<unsigned, MultiPoly> operator_determinant(const OperatorMatrix& M) {
  int N = M.size();
  int n = M.n();
  std::vector<std::map<unsigned, MultiPoly>> dp(1u << N);
  dp[0].emplace(0u, MultiPoly::constant(n, RatFunc(1)));
  for (unsigned mask = 1; mask < (1u << N); ++mask) {
    int k = __builtin_popcount(mask) - 1;  // expanding along row k
    int pos = 0;
    for (int col = 0; col < N; ++col) {
      if (!(mask & (1u << col))) continue;
      bool negate = (k + pos) % 2 == 1;
      ++pos;
      const OpEntry& e = M.entry(k, col);
      for (const auto& [rows, poly] : dp[mask & ~(1u << col)]) {
        if (!e.plain.is_zero()) {
          MultiPoly add = e.plain * poly;
          if (negate) add = -add;
          auto [it, fresh] = dp[mask].emplace(rows, add);
          if (!fresh) it->second += add;
        }
        if (!e.shifted.is_zero()) {
          MultiPoly add = e.shifted * poly;
          if (negate) add = -add;
          auto [it, fresh] = dp[mask].emplace(rows | (1u << k), add);
          if (!fresh) it->second += add;
        }
      }
    }
  }
  return dp[(1u << N) - 1];
}

}  // namespace detail

// Expand det of the operator matrix into subset coefficients and check the
// support lies in the admissible subset family.
inline OperatorExpansion determinant_expand(OpKind kind, int n, const Rational& t) {
  if (n < 1 || n > 7)
    throw std::domain_error("determinant_expand: supported range is 1 <= n <= 7");
  static std::map<std::tuple<int, int, Rational>, OperatorExpansion> cache;
  static std::mutex mx;
  auto key = std::make_tuple(static_cast<int>(kind), n, t);
  {
    std::lock_guard<std::mutex> lk(mx);
    auto it = cache.find(key);
    if (it != cache.end()) return it->second;
  }
  OperatorMatrix M(kind, n, t);
  OperatorExpansion out;
  out.kind = kind;
  out.n = n;
  for (auto& [rows, poly] : detail::operator_determinant(M)) {
    if (poly.is_zero()) continue;
    unsigned vars = 0;
    for (int row = 0; row < M.size(); ++row)
      if (rows & (1u << row)) vars |= 1u << (M.row_variable(row) - 1);
    bool admissible = kind == OpKind::X ? in_p_odd(vars, n) : in_p_even(vars, n);
    if (!admissible)
      throw std::runtime_error("determinant_expand: coefficient outside the admissible "
                               "subset family survived");
    out.coeffs.emplace(vars, std::move(poly));
  }
  std::lock_guard<std::mutex> lk(mx);
  return cache.emplace(std::move(key), std::move(out)).first->second;
}

// Apply to an invariant: shift, sum, divide by the Vandermonde exactly.
inline MultiPoly apply(const OperatorExpansion& op, const MultiPoly& f) {
  MultiPoly acc(op.n);
  for (const auto& [mask, c] : op.coeffs) {
    IntVec eps = subset_indicator(mask, op.n);
    acc += c * f.shifted_int(eps);
  }
  return divide_by_vandermonde(std::move(acc));
}

// eigenvalue of X(t) resp. Y(t): product of (t + rho_i + lambda_i) over the
// odd resp. even positions
inline RatFunc eigenvalue(OpKind kind, const IntVec& lam, const Rational& t, int n) {
  RatFunc acc(1);
  const RatFunc r = RatFunc::r();
  for (int i = kind == OpKind::X ? 1 : 2; i <= n; i += 2) {
    int li = i <= static_cast<int>(lam.size()) ? lam[i - 1] : 0;
    acc *= RatFunc(t) + RatFunc(n - i) * r + RatFunc(li);
  }
  return acc;
}

namespace detail {

// exact inverse of the small Vandermonde on the sample points 0..K
inline std::vector<std::vector<Rational>> inverse_vandermonde(int K) {
  int m = K + 1;
  std::vector<std::vector<Rational>> a(m, std::vector<Rational>(2 * m, Rational(0)));
  for (int i = 0; i < m; ++i) {
    Rational p(1);
    for (int j = 0; j < m; ++j) {
      a[i][j] = p;
      p *= i;
    }
    a[i][m + i] = 1;
  }
  for (int col = 0; col < m; ++col) {
    int piv = col;
    while (a[piv][col] == 0) ++piv;
    std::swap(a[piv], a[col]);
    Rational d = a[col][col];
    for (auto& x : a[col]) x /= d;
    for (int row = 0; row < m; ++row) {
      if (row == col || a[row][col] == 0) continue;
      Rational f = a[row][col];
      for (int j = 0; j < 2 * m; ++j) a[row][j] -= f * a[col][j];
    }
  }
  std::vector<std::vector<Rational>> inv(m, std::vector<Rational>(m));
  for (int i = 0; i < m; ++i)
    for (int j = 0; j < m; ++j) inv[i][j] = a[i][m + j];
  return inv;
}

}  // namespace detail

// The commuting family: coefficients of the t-expansion, recovered by exact
// interpolation from integer samples of t. Element k-1 of the result is the
// operator next to t^(K-k).
inline std::vector<OperatorExpansion> component_operators(OpKind kind, int n) {
  int K = kind == OpKind::X ? ceil_half(n) : floor_half(n);
  std::vector<OperatorExpansion> samples;
  for (int t = 0; t <= K; ++t) samples.push_back(determinant_expand(kind, n, Rational(t)));
  auto vinv = detail::inverse_vandermonde(K);

  std::set<unsigned> masks;
  for (const auto& s : samples)
    for (const auto& [mask, c] : s.coeffs) masks.insert(mask);

  std::vector<OperatorExpansion> comps(K + 1);
  for (int k = 0; k <= K; ++k) {
    comps[k].kind = kind;
    comps[k].n = n;
  }
  for (unsigned mask : masks) {
    for (int pw = 0; pw <= K; ++pw) {  // coefficient of t^pw
      MultiPoly c(n);
      for (int s = 0; s <= K; ++s) {
        if (vinv[pw][s] == 0) continue;
        c += samples[s].coeff(mask) * RatFunc(vinv[pw][s]);
      }
      if (!c.is_zero()) comps[K - pw].coeffs.emplace(mask, std::move(c));
    }
  }
  // the top coefficient must be the identity behind the Vandermonde
  OperatorExpansion& top = comps[0];
  if (top.coeffs.size() != 1 || top.coeff(0u) != semisym_vandermonde(n))
    throw std::runtime_error("component_operators: t-leading term is not the identity");
  return {comps.begin() + 1, comps.end()};
}

// vanishing of the coefficients at nodes whose shift leaves the partition set
inline bool cutoff_check(const OperatorExpansion& op, const IntVec& mu) {
  auto pt = node_point(op.n, mu);
  for (const auto& [mask, c] : op.coeffs) {
    IntVec shifted = mu;
    for (int i = 0; i < op.n; ++i) shifted[i] -= (mask >> i) & 1;
    if (is_partition(shifted)) continue;
    if (!c.eval(pt).is_zero()) return false;
  }
  return true;
}

// The degree-preserving part of the action on a homogeneous invariant; on the
// top parts it realizes the differential operator family.
inline MultiPoly apply_top(OpKind kind, const MultiPoly& f, const Rational& t) {
  if (!f.is_homogeneous()) throw std::domain_error("apply_top: input not homogeneous");
  if (f.is_zero()) return f;
  MultiPoly g = apply(determinant_expand(kind, f.nvars(), t), f);
  return g.homogeneous_component(f.degree());
}

namespace detail {

// coefficient of t^pw in the degree-preserving action, by sampling t
inline MultiPoly top_t_coefficient(OpKind kind, const MultiPoly& f, int pw) {
  int n = f.nvars();
  int K = kind == OpKind::X ? ceil_half(n) : floor_half(n);
  if (pw > K) return MultiPoly(n);
  auto vinv = inverse_vandermonde(K);
  MultiPoly acc(n);
  for (int s = 0; s <= K; ++s) {
    if (vinv[pw][s] == 0) continue;
    acc += apply_top(kind, f, Rational(s)) * RatFunc(vinv[pw][s]);
  }
  return acc;
}

}  // namespace detail

struct EulerPair {
  MultiPoly weight_field;       // sum z_i d/dz_i
  MultiPoly alternating_field;  // the degree-one operator with bracket eigenvalues
};

// The two commuting degree-one differential operators: the Euler field acts
// termwise; the second one is the difference of the degree-one components of
// the two families minus its constant, assembled per homogeneous component.
inline EulerPair euler_fields(const MultiPoly& f) {
  int n = f.nvars();
  MultiPoly eta(n);
  for (const auto& [e, c] : f.terms())
    eta += MultiPoly::monomial(n, e, c * RatFunc(expo_weight(e)));

  MultiPoly etap(n);
  RatFunc under_r = RatFunc(floor_half(n)) * RatFunc::r();
  for (int d = 0; d <= f.degree(); ++d) {
    MultiPoly fd = f.homogeneous_component(d);
    if (fd.is_zero()) continue;
    int Kx = ceil_half(n), Ky = floor_half(n);
    MultiPoly x1 = detail::top_t_coefficient(OpKind::X, fd, Kx - 1);
    MultiPoly y1 = Ky >= 1 ? detail::top_t_coefficient(OpKind::Y, fd, Ky - 1) : MultiPoly(n);
    etap += x1 - y1 - fd * under_r;
  }
  return {eta, etap};
}

}  // namespace semisym
