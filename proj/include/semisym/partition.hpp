#pragma once

#include <algorithm>
#include <numeric>
#include <string>
#include <vector>

#include "ratfunc.hpp"

namespace semisym {

using IntVec = std::vector<int>;

inline int ceil_half(int n) { return (n + 1) / 2; }
inline int floor_half(int n) { return n / 2; }

inline bool is_partition(const IntVec& v) {
  for (size_t i = 0; i + 1 < v.size(); ++i)
    if (v[i] < v[i + 1]) return false;
  return v.empty() || v.back() >= 0;
}

inline int weight(const IntVec& v) { return std::accumulate(v.begin(), v.end(), 0); }

// entries at odd positions 1,3,5,... (1-based)
inline IntVec odd_entries(const IntVec& v) {
  IntVec out;
  for (size_t i = 0; i < v.size(); i += 2) out.push_back(v[i]);
  return out;
}
inline IntVec even_entries(const IntVec& v) {
  IntVec out;
  for (size_t i = 1; i < v.size(); i += 2) out.push_back(v[i]);
  return out;
}

inline int odd_weight(const IntVec& v) { return weight(odd_entries(v)); }
inline int even_weight(const IntVec& v) { return weight(even_entries(v)); }

struct Degrees {
  int total, odd, even;
};
inline Degrees degrees(const IntVec& lam) {
  return {weight(lam), odd_weight(lam), even_weight(lam)};
}

// alternating tail sums: [v]_m = v_m - v_{m+1} + ... +- v_n
inline IntVec bracket(const IntVec& v) {
  IntVec out(v.size());
  int acc = 0;
  for (size_t i = v.size(); i-- > 0;) {
    acc = v[i] - acc;
    out[i] = acc;
  }
  return out;
}

inline int bracket1(const IntVec& v) {
  int acc = 0;
  for (size_t i = v.size(); i-- > 0;) acc = v[i] - acc;
  return acc;
}

// inverse of the bracket map: lambda_i = nu_i + nu_{i+1}
inline IntVec bracket_inverse(const IntVec& nu) {
  if (!is_partition(odd_entries(nu)) || !is_partition(even_entries(nu)))
    throw std::domain_error("bracket_inverse: odd/even parts are not partitions");
  IntVec lam(nu.size());
  for (size_t i = 0; i < nu.size(); ++i)
    lam[i] = nu[i] + (i + 1 < nu.size() ? nu[i + 1] : 0);
  return lam;
}

inline std::vector<RatFunc> rho_scaled(int n, const RatFunc& c) {
  std::vector<RatFunc> out;
  out.reserve(n);
  for (int i = 1; i <= n; ++i) out.push_back(RatFunc(n - i) * c);
  return out;
}

// ((n-1)r, (n-2)r, ..., r, 0)
inline std::vector<RatFunc> rho(int n) { return rho_scaled(n, RatFunc::r()); }

inline std::vector<RatFunc> node_point(int n, const IntVec& lam) {
  auto p = rho(n);
  for (int i = 0; i < n; ++i) p[i] += RatFunc(lam[i]);
  return p;
}

// Canonical enumeration order: odd weight, then total weight, then lex.
inline bool enum_order_less(const IntVec& a, const IntVec& b) {
  int ao = odd_weight(a), bo = odd_weight(b);
  if (ao != bo) return ao < bo;
  int aw = weight(a), bw = weight(b);
  if (aw != bw) return aw < bw;
  return a < b;
}

// All partitions of length n with odd weight <= d, canonically ordered.
inline std::vector<IntVec> partitions_odd_bounded(int n, int d) {
  std::vector<IntVec> out;
  IntVec cur(n, 0);
  auto rec = [&](auto&& self, int pos, int bound, int odd_left) -> void {
    if (pos == n) {
      out.push_back(cur);
      return;
    }
    bool odd_pos = pos % 2 == 0;
    int hi = odd_pos ? std::min(bound, odd_left) : bound;
    for (int v = 0; v <= hi; ++v) {
      cur[pos] = v;
      self(self, pos + 1, v, odd_left - (odd_pos ? v : 0));
    }
    cur[pos] = 0;
  };
  rec(rec, 0, d, d);
  std::sort(out.begin(), out.end(), enum_order_less);
  return out;
}

// All partitions of length n with total weight <= d, same canonical order.
inline std::vector<IntVec> partitions_weight_bounded(int n, int d) {
  std::vector<IntVec> out;
  IntVec cur(n, 0);
  auto rec = [&](auto&& self, int pos, int bound, int left) -> void {
    if (pos == n) {
      out.push_back(cur);
      return;
    }
    for (int v = 0; v <= std::min(bound, left); ++v) {
      cur[pos] = v;
      self(self, pos + 1, v, left - v);
    }
    cur[pos] = 0;
  };
  rec(rec, 0, d, d);
  std::sort(out.begin(), out.end(), enum_order_less);
  return out;
}

inline bool componentwise_leq(const IntVec& a, const IntVec& b) {
  for (size_t i = 0; i < a.size(); ++i)
    if (a[i] > b[i]) return false;
  return true;
}

// inhomogeneous dominance: all prefix sums of a bounded by those of b
inline bool dominance_leq(const IntVec& a, const IntVec& b) {
  int sa = 0, sb = 0;
  for (size_t i = 0; i < a.size(); ++i) {
    sa += a[i];
    sb += b[i];
    if (sa > sb) return false;
  }
  return true;
}

enum class Rel { Subseteq, Sqsubseteq, Dominance, DominanceHom, Prec, PrecHom };

inline bool order_test(const IntVec& a, const IntVec& b, Rel rel) {
  if (a.size() != b.size()) throw std::domain_error("order_test: length mismatch");
  switch (rel) {
    case Rel::Subseteq:
      return componentwise_leq(a, b);
    case Rel::Sqsubseteq:
      return componentwise_leq(a, b) && bracket1(a) <= bracket1(b);
    case Rel::Dominance:
      return dominance_leq(a, b);
    case Rel::DominanceHom:
      return dominance_leq(a, b) && weight(a) == weight(b);
    case Rel::Prec:
      return dominance_leq(odd_entries(a), odd_entries(b)) &&
             dominance_leq(even_entries(a), even_entries(b)) && bracket1(a) <= bracket1(b);
    case Rel::PrecHom:
      return order_test(a, b, Rel::Prec) && odd_weight(a) == odd_weight(b);
  }
  return false;
}

enum class Monoid { Psi0, Psi1, PhiPlus };

// Membership criteria for the shift-support monoid, its root widening, and
// the root monoid itself.
inline bool monoid_test(const IntVec& v, Monoid which) {
  IntVec zero(v.size(), 0);
  switch (which) {
    case Monoid::Psi0:
      return componentwise_leq(zero, v) && bracket1(v) >= 0;
    case Monoid::Psi1:
      return dominance_leq(IntVec(odd_entries(v).size(), 0), odd_entries(v)) &&
             dominance_leq(IntVec(even_entries(v).size(), 0), even_entries(v)) &&
             bracket1(v) >= 0;
    case Monoid::PhiPlus: {
      IntVec vo = odd_entries(v), ve = even_entries(v);
      return dominance_leq(IntVec(vo.size(), 0), vo) && weight(vo) == 0 &&
             dominance_leq(IntVec(ve.size(), 0), ve) && weight(ve) == 0;
    }
  }
  return false;
}

// ---- subsets of {1..n} as bitmasks (bit i-1 holds index i) ----

inline int subset_odd_count(unsigned mask, int n) {
  int c = 0;
  for (int i = 1; i <= n; i += 2) c += (mask >> (i - 1)) & 1u;
  return c;
}
inline int subset_even_count(unsigned mask, int n) {
  int c = 0;
  for (int i = 2; i <= n; i += 2) c += (mask >> (i - 1)) & 1u;
  return c;
}
// odd member count exceeds even by zero or one
inline bool in_p_odd(unsigned mask, int n) {
  int d = subset_odd_count(mask, n) - subset_even_count(mask, n);
  return d == 0 || d == 1;
}
inline bool in_p_even(unsigned mask, int n) {
  return subset_odd_count(mask, n) == subset_even_count(mask, n);
}

inline IntVec subset_indicator(unsigned mask, int n) {
  IntVec e(n, 0);
  for (int i = 1; i <= n; ++i) e[i - 1] = (mask >> (i - 1)) & 1u;
  return e;
}

inline std::string partition_str(const IntVec& v) {
  std::string s = "[";
  for (size_t i = 0; i < v.size(); ++i) {
    if (i) s += ",";
    s += std::to_string(v[i]);
  }
  return s + "]";
}

// ---- diagram box statistics ----

inline IntVec conjugate(const IntVec& lam) {
  IntVec out(lam.empty() ? 0 : lam[0], 0);
  for (int p : lam)
    for (int j = 0; j < p; ++j) out[j]++;
  return out;
}

// 1-based box (i,j) with j <= lam_i
inline int arm(const IntVec& lam, int i, int j) { return lam[i - 1] - j; }
inline int leg(const IntVec& lam, int i, int j) {
  int cnt = 0;
  for (int row = 0; row < static_cast<int>(lam.size()); ++row)
    if (lam[row] >= j) ++cnt;
  return cnt - i;
}
inline int arm_colength(int /*i*/, int j) { return j - 1; }
inline int leg_colength(int i, int /*j*/) { return i - 1; }

}  // namespace semisym
