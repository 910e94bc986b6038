#pragma once

#include <string>
#include <utility>
#include <vector>

#include "diffops.hpp"
#include "interpolate.hpp"

namespace semisym {

enum class Parity { Odd, Even };

inline bool parity_matches(int i, Parity p) {
  return p == Parity::Odd ? i % 2 == 1 : i % 2 == 0;
}
inline bool subset_admissible(unsigned mask, int n, Parity p) {
  return p == Parity::Odd ? in_p_odd(mask, n) : in_p_even(mask, n);
}

// the point (-alpha - (n-i) r)_i
inline std::vector<RatFunc> neg_rho_alpha(int n, const Rational& alpha) {
  auto pt = rho(n);
  for (auto& x : pt) x = -x - RatFunc(alpha);
  return pt;
}

// Principal value at the shifted negative staircase: the closed product form,
// cross-checked against direct evaluation of the interpolation polynomial.
inline RatFunc special_value(const IntVec& lam, int n, const Rational& alpha) {
  auto [A, B] = eval_factors(lam, alpha, n);
  RatFunc closed = A * B;
  if (odd_weight(lam) % 2) closed = -closed;
  RatFunc direct = build_R(lam, n).eval(neg_rho_alpha(n, alpha));
  if (closed != direct)
    throw std::runtime_error("special_value: closed form disagrees with evaluation at " +
                             partition_str(lam));
  return closed;
}

// f(-alpha - z)
inline MultiPoly reflect_argument(const MultiPoly& f, const Rational& alpha) {
  return f.negate_vars().shifted(std::vector<RatFunc>(f.nvars(), RatFunc(-alpha)));
}

// Duality: the reflected polynomial expands over the interpolation basis with
// signed normalized node values as coefficients.
inline bool binomial_check(const IntVec& lam_in, int n, const Rational& alpha) {
  IntVec lam = lam_in;
  lam.resize(n, 0);
  auto neg = neg_rho_alpha(n, alpha);
  MultiPoly lhs = reflect_argument(build_R(lam, n), alpha) *
                  (RatFunc(1) / build_R(lam, n).eval(neg));
  MultiPoly rhs(n);
  for (const auto& mu : partitions_odd_bounded(n, odd_weight(lam))) {
    if (!order_test(mu, lam, Rel::Sqsubseteq)) continue;
    RatFunc c = R_node_value(n, mu, lam) / R_node_value(n, mu, mu) /
                build_R(mu, n).eval(neg);
    if (odd_weight(mu) % 2) c = -c;
    rhs += build_R(mu, n) * c;
  }
  return lhs == rhs;
}

// signed normalized node-value matrix on the canonical node list
struct DualityMatrix {
  int n = 0, d = 0;
  std::vector<IntVec> order;
  std::vector<std::vector<RatFunc>> entries;  // [mu][lambda]
};

inline DualityMatrix duality_matrix(int n, int d) {
  DualityMatrix M;
  M.n = n;
  M.d = d;
  M.order = partitions_odd_bounded(n, d);
  size_t s = M.order.size();
  M.entries.assign(s, std::vector<RatFunc>(s));
  for (size_t i = 0; i < s; ++i) {
    RatFunc self = R_node_value(n, M.order[i], M.order[i]);
    for (size_t j = 0; j < s; ++j) {
      if (!order_test(M.order[i], M.order[j], Rel::Sqsubseteq)) continue;
      RatFunc v = R_node_value(n, M.order[i], M.order[j]) / self;
      M.entries[i][j] = odd_weight(M.order[i]) % 2 ? -v : v;
    }
  }
  return M;
}

// Finitely supported coefficient function on the node set.
struct HatFunction {
  int n = 0, d = 0;
  std::map<IntVec, RatFunc> values;  // indexed by the node partition

  RatFunc at(const IntVec& mu) const {
    auto it = values.find(mu);
    return it == values.end() ? RatFunc() : it->second;
  }
};

inline HatFunction node_values(const MultiPoly& f, int d) {
  HatFunction out;
  out.n = f.nvars();
  out.d = d;
  for (const auto& mu : partitions_odd_bounded(out.n, d))
    out.values.emplace(mu, f.eval(node_point(out.n, mu)));
  return out;
}

// the involutive coefficient transform on node functions
inline HatFunction hat_values(const HatFunction& in) {
  HatFunction out;
  out.n = in.n;
  out.d = in.d;
  for (const auto& mu : partitions_odd_bounded(in.n, in.d)) {
    RatFunc acc;
    for (const auto& [nu, fv] : in.values) {
      if (!order_test(nu, mu, Rel::Sqsubseteq)) continue;
      RatFunc term = R_node_value(in.n, nu, mu) / R_node_value(in.n, nu, nu) * fv;
      acc += odd_weight(nu) % 2 ? -term : term;
    }
    if (!acc.is_zero()) out.values.emplace(mu, std::move(acc));
  }
  return out;
}

inline HatFunction hat_transform(const MultiPoly& f) {
  return hat_values(node_values(f, f.is_zero() ? 0 : f.degree()));
}

// reconstruction from hat values
inline MultiPoly hat_inverse(const HatFunction& h) {
  MultiPoly f(h.n);
  for (const auto& [mu, v] : h.values) {
    RatFunc c = v / R_node_value(h.n, mu, mu);
    f += build_R(mu, h.n) * (odd_weight(mu) % 2 ? -c : c);
  }
  return f;
}

namespace detail {

inline RatFunc elementary_of_scalars(const std::vector<RatFunc>& vals, int k) {
  if (k < 0 || k > static_cast<int>(vals.size())) return RatFunc();
  std::vector<RatFunc> layer(k + 1);
  layer[0] = RatFunc(1);
  for (const auto& v : vals)
    for (int j = k; j >= 1; --j) layer[j] += layer[j - 1] * v;
  return layer[k];
}

}  // namespace detail

// Pieri rule for the full parity product prod (t + z_i): expansion over the
// interpolation basis indexed by the admissible one-box shifts.
inline RExpansion pieri_t(const IntVec& mu_in, Parity parity, const Rational& t, int n) {
  IntVec mu = mu_in;
  mu.resize(n, 0);
  RExpansion out;
  out.basis = RExpansion::Basis::R;
  out.n = n;
  auto rp = rho(n);
  for (unsigned mask = 0; mask < (1u << n); ++mask) {
    if (!subset_admissible(mask, n, parity)) continue;
    RatFunc psi = pieri_psi_even(mu, mask, n);
    if (psi.is_zero()) continue;
    RatFunc pre(1);
    for (int i = 1; i <= n; ++i) {
      if ((mask >> (i - 1)) & 1u) continue;
      if (parity_matches(i, parity)) pre *= RatFunc(t) + rp[i - 1] + RatFunc(mu[i - 1]);
    }
    IntVec lam = mu;
    for (int i = 0; i < n; ++i) lam[i] += (mask >> i) & 1;
    out.add(lam, pre * psi);
  }
  return out;
}

// Pieri rule for an elementary symmetric factor in one parity class.
inline RExpansion pieri_elementary(const IntVec& mu_in, int m, Parity parity, int n) {
  IntVec mu = mu_in;
  mu.resize(n, 0);
  RExpansion out;
  out.basis = RExpansion::Basis::R;
  out.n = n;
  auto rp = rho(n);
  for (unsigned mask = 0; mask < (1u << n); ++mask) {
    if (!subset_admissible(mask, n, parity)) continue;
    int s = subset_odd_count(mask, n);
    if (s > m) continue;
    RatFunc psi = pieri_psi_even(mu, mask, n);
    if (psi.is_zero()) continue;
    std::vector<RatFunc> vals;
    for (int i = 1; i <= n; ++i) {
      if ((mask >> (i - 1)) & 1u) continue;
      if (parity_matches(i, parity)) vals.push_back(rp[i - 1] + RatFunc(mu[i - 1]));
    }
    RatFunc coeff = detail::elementary_of_scalars(vals, m - s);
    if (coeff.is_zero()) continue;
    IntVec lam = mu;
    for (int i = 0; i < n; ++i) lam[i] += (mask >> i) & 1;
    out.add(lam, coeff * psi);
  }
  return out;
}

// Evaluation of a column polynomial on the complement coordinates of the node
// point, through a parity-preserving relabeling.
inline RatFunc primed_column_value(const IntVec& mu, unsigned mask, int n, int k,
                                   bool reversed_labeling = false) {
  int s = __builtin_popcount(mask);
  if (k == 0) return RatFunc(1);
  if (k > n - s) return RatFunc();
  std::vector<int> comp_odd, comp_even;
  for (int i = 1; i <= n; ++i) {
    if ((mask >> (i - 1)) & 1u) continue;
    (i % 2 ? comp_odd : comp_even).push_back(i);
  }
  int pos_odd = ceil_half(n) - ceil_half(s);
  if (static_cast<int>(comp_odd.size()) != pos_odd)
    throw std::domain_error("primed_column_value: no parity-preserving relabeling exists");
  if (reversed_labeling) {
    std::reverse(comp_odd.begin(), comp_odd.end());
    std::reverse(comp_even.begin(), comp_even.end());
  }
  auto rp = rho(n);
  std::vector<RatFunc> args;
  size_t io = 0, ie = 0;
  for (int pos = s + 1; pos <= n; ++pos) {
    int src = pos % 2 ? comp_odd.at(io++) : comp_even.at(ie++);
    args.push_back(rp[src - 1] + RatFunc(mu[src - 1]));
  }
  return build_R(IntVec(k, 1), n - s).eval(args);
}

// Pieri rule for a shifted column factor.
inline RExpansion pieri_shifted(const IntVec& mu_in, int m, int n) {
  IntVec mu = mu_in;
  mu.resize(n, 0);
  RExpansion out;
  out.basis = RExpansion::Basis::R;
  out.n = n;
  Parity parity = m % 2 ? Parity::Odd : Parity::Even;
  for (unsigned mask = 0; mask < (1u << n); ++mask) {
    if (!subset_admissible(mask, n, parity)) continue;
    int s = __builtin_popcount(mask);
    if (s > m) continue;
    RatFunc psi = pieri_psi_even(mu, mask, n);
    if (psi.is_zero()) continue;
    RatFunc coeff = primed_column_value(mu, mask, n, m - s);
    if (coeff.is_zero()) continue;
    IntVec lam = mu;
    for (int i = 0; i < n; ++i) lam[i] += (mask >> i) & 1;
    out.add(lam, coeff * psi);
  }
  return out;
}

// Pieri rule for the top parts: an elementary invariant factor shifts by the
// balanced one-box subsets.
inline RExpansion pieri_homogeneous(const IntVec& mu_in, int m, int n) {
  IntVec mu = mu_in;
  mu.resize(n, 0);
  RExpansion out;
  out.basis = RExpansion::Basis::RBar;
  out.n = n;
  for (unsigned mask = 0; mask < (1u << n); ++mask) {
    if (subset_odd_count(mask, n) != ceil_half(m)) continue;
    if (subset_even_count(mask, n) != floor_half(m)) continue;
    RatFunc psi = pieri_psi_even(mu, mask, n);
    if (psi.is_zero()) continue;
    IntVec lam = mu;
    for (int i = 0; i < n; ++i) lam[i] += (mask >> i) & 1;
    out.add(lam, psi);
  }
  return out;
}

// Closed hook formulas built from the column polynomials alone.
inline MultiPoly hook(int a, int m, int n) {
  if (a < 1 || m < 1 || m > n) throw std::domain_error("hook: parameters out of range");
  auto column = [&](int k) {
    return k > n ? MultiPoly(n) : elementary_semisym(k, n, true);
  };
  MultiPoly R1 = column(1);
  MultiPoly acc = MultiPoly::constant(n, RatFunc(1));
  if (m % 2 == 1) {
    for (int j = 1; j <= a - 1; ++j) acc *= R1 - MultiPoly::constant(n, RatFunc(j));
    return acc * column(m);
  }
  if (a == 1) return column(m);
  for (int j = 1; j <= a - 2; ++j) acc *= R1 - MultiPoly::constant(n, RatFunc(j));
  RatFunc corr = RatFunc(a - 1) / (RatFunc(a - 1) + RatFunc(m) * RatFunc::r());
  return acc * (R1 * column(m) - column(m + 1) * corr);
}

inline Rational multinomial(const IntVec& parts) {
  int total = 0;
  Int den = 1;
  for (int p : parts) {
    total += p;
    den *= factorial(p);
  }
  return make_rational(factorial(total), den);
}

// Top part of a two-row diagram as an explicit sum over the elementary basis.
inline MultiPoly two_row(int a, int b, int n) {
  if (a < b || b < 0 || n < 2) throw std::domain_error("two_row: parameters out of range");
  const RatFunc minus2r = RatFunc(-2) * RatFunc::r();
  RatFunc cab = binom(minus2r, a) * RatFunc(binom_int(a, b));
  MultiPoly acc(n);
  for (const auto& mu : partitions_odd_bounded(n, a)) {
    if (odd_weight(mu) != a || even_weight(mu) != b) continue;
    IntVec diffs(n);
    for (int i = 0; i < n; ++i) diffs[i] = mu[i] - (i + 1 < n ? mu[i + 1] : 0);
    RatFunc c = binom(minus2r, mu[0]) * RatFunc(multinomial(diffs));
    acc += detail::gen_monomial(detail::semisym_flavor(), n, mu, false) * c;
  }
  return acc * (RatFunc(1) / cab);
}

// Three-variable closed form: a single alternating sum over the elementary
// invariants.
inline MultiPoly n3_closed_form(const IntVec& mu_in) {
  IntVec mu = mu_in;
  mu.resize(3, 0);
  if (!is_partition(mu)) throw std::domain_error("n3_closed_form: not a partition");
  const int n = 3;
  MultiPoly e1 = elementary_semisym(1, n, false);
  MultiPoly e2 = elementary_semisym(2, n, false);
  MultiPoly e3 = elementary_semisym(3, n, false);
  RatFunc denom_base = RatFunc(mu[0] - mu[2] - 1) + RatFunc(2) * RatFunc::r();
  MultiPoly acc(n);
  for (int k = 0; k <= std::min(mu[0] - mu[1], mu[1] - mu[2]); ++k) {
    RatFunc c = RatFunc(binom_int(mu[0] - mu[1], k)) * RatFunc(binom_int(mu[1] - mu[2], k)) /
                binom(denom_base, k);
    if (k % 2) c = -c;
    MultiPoly term = MultiPoly::constant(n, c);
    for (int j = 0; j < mu[0] - mu[1] - k; ++j) term *= e1;
    for (int j = 0; j < mu[1] - mu[2] - k; ++j) term *= e2;
    for (int j = 0; j < mu[2] + k; ++j) term *= e3;
    acc += term;
  }
  return acc;
}

struct IntegralityReport {
  IntVec lam;
  bool integral = false;
  std::string witness;  // offending coefficient when not integral
};

// Conjectured integral form: the cleared polynomial should have integer
// coefficients in r and z. Reported, not asserted.
inline IntegralityReport integrality_probe(const IntVec& lam_in, int n) {
  IntVec lam = lam_in;
  lam.resize(n, 0);
  IntegralityReport rep;
  rep.lam = lam;
  MultiPoly cleared = build_R(lam, n) * c_even(lam);
  rep.integral = true;
  for (const auto& [e, c] : cleared.terms()) {
    if (c.is_polynomial() && c.num().integer_coeffs()) continue;
    rep.integral = false;
    rep.witness = "coefficient of " + partition_str(e) + " is " + c.str();
    break;
  }
  return rep;
}

// Value of the top part at the all-ones point: closed case split checked
// against direct evaluation.
inline RatFunc homogeneous_evaluation(const IntVec& lam_in, int n) {
  IntVec lam = lam_in;
  lam.resize(n, 0);
  RatFunc closed;
  if (n % 2 == 1 || bracket1(lam) == 0) closed = eval_factors(lam, Rational(1), n).B;
  RatFunc direct = rbar(lam, n).eval(std::vector<RatFunc>(n, RatFunc(1)));
  if (closed != direct)
    throw std::runtime_error("homogeneous_evaluation: case split disagrees with evaluation at " +
                             partition_str(lam));
  return closed;
}

// Homogeneous binomial expansion of the shifted-argument top part; support is
// restricted by containment and, for even n, by equal alternating weight.
inline bool homogeneous_binomial(const IntVec& lam_in, int n) {
  IntVec lam = lam_in;
  lam.resize(n, 0);
  RatFunc Blam = eval_factors(lam, Rational(1), n).B;
  MultiPoly lhs = rbar(lam, n).shifted(std::vector<RatFunc>(n, RatFunc(-1))) *
                  (RatFunc(1) / Blam);
  MultiPoly rhs(n);
  for (const auto& mu : partitions_odd_bounded(n, odd_weight(lam))) {
    if (!order_test(mu, lam, Rel::Sqsubseteq)) continue;
    if (n % 2 == 0 && bracket1(mu) != bracket1(lam)) continue;
    RatFunc c = R_node_value(n, mu, lam) / R_node_value(n, mu, mu) /
                eval_factors(mu, Rational(1), n).B;
    rhs += rbar(mu, n) * c;
  }
  return lhs == rhs;
}

}  // namespace semisym
