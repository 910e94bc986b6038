#pragma once

#include <atomic>
#include <cstdio>
#include <functional>
#include <string>
#include <thread>
#include <utility>
#include <vector>

#include "identities.hpp"
#include "jsonio.hpp"

namespace semisym {

struct Verdict {
  std::string suite, id;
  bool pass = false;
  std::string witness;  // reproducible description of the mismatch
};

struct SweepOptions {
  int n_override = -1;  // cap/raise the variable count when positive
  int d_override = -1;  // cap/raise the degree sweep when positive
  std::vector<Rational> alphas{Rational(1), Rational(2), make_rational(5, 2)};
  int jobs = 1;
  std::string golden_table_path;  // consulted by the closed-forms suite when set
};

namespace verify_detail {

struct Case {
  std::string suite, id;
  std::function<std::string()> run;  // empty string = pass
};

inline std::vector<Verdict> run_cases(const std::vector<Case>& cases, int jobs) {
  std::vector<Verdict> out(cases.size());
  if (jobs < 1) jobs = 1;
  std::atomic<size_t> next{0};
  auto worker = [&] {
    while (true) {
      size_t i = next.fetch_add(1);
      if (i >= cases.size()) return;
      Verdict v;
      v.suite = cases[i].suite;
      v.id = cases[i].id;
      try {
        v.witness = cases[i].run();
        v.pass = v.witness.empty();
      } catch (const std::exception& e) {
        v.pass = false;
        v.witness = std::string("exception: ") + e.what();
      }
      out[i] = std::move(v);
    }
  };
  if (jobs == 1) {
    worker();
  } else {
    std::vector<std::thread> pool;
    for (int t = 0; t < jobs; ++t) pool.emplace_back(worker);
    for (auto& t : pool) t.join();
  }
  return out;
}

inline std::string check(bool ok, const std::string& witness) {
  return ok ? std::string() : witness;
}

inline int pick(int override_value, int fallback) {
  return override_value > 0 ? override_value : fallback;
}

inline MultiPoly seeded_invariant(int n, int d, std::uint64_t seed) {
  SplitMix64 rng(seed);
  MultiPoly f(n);
  for (const auto& mu : partitions_odd_bounded(n, d))
    f += detail::gen_monomial(detail::semisym_flavor(), n, mu, false) *
         RatFunc(rng.rational(4, 3));
  return f;
}

// ---------- suite builders ----------

inline void defining_cases(std::vector<Case>& cases, const SweepOptions& opt) {
  int nmax = pick(opt.n_override, 4), dmax = pick(opt.d_override, 4);
  for (int n = 2; n <= nmax; ++n)
    for (const auto& lam : partitions_odd_bounded(n, dmax))
      cases.push_back({"defining", "n=" + std::to_string(n) + " lam=" + partition_str(lam),
                       [n, lam] {
                         MultiPoly R = build_R(lam, n);
                         int d = odd_weight(lam);
                         if (!R.is_semisymmetric()) return std::string("not semisymmetric");
                         if (R.degree() != d) return std::string("wrong degree");
                         if (R.coeff(bracket(lam)) != RatFunc(1))
                           return std::string("leading coefficient not one");
                         if (R.eval(node_point(n, lam)) != cprime_even(lam))
                           return std::string("value at the own node is not the even hook product");
                         for (const auto& mu : partitions_odd_bounded(n, d)) {
                           if (mu == lam) continue;
                           if (!R.eval(node_point(n, mu)).is_zero())
                             return "nonzero at node " + partition_str(mu);
                         }
                         return std::string();
                       }});
}

inline void eigen_cases(std::vector<Case>& cases, const SweepOptions& opt) {
  int nmax = pick(opt.n_override, 5), dmax = pick(opt.d_override, 3);
  for (int n = 2; n <= nmax; ++n)
    for (const auto& lam : partitions_odd_bounded(n, dmax))
      for (int t = 0; t <= ceil_half(n); ++t)
        for (OpKind kind : {OpKind::X, OpKind::Y}) {
          std::string id = "n=" + std::to_string(n) + " lam=" + partition_str(lam) +
                           " t=" + std::to_string(t) + (kind == OpKind::X ? " op=X" : " op=Y");
          cases.push_back({"eigen", id, [n, lam, t, kind] {
                             MultiPoly R = build_R(lam, n);
                             MultiPoly got = apply(determinant_expand(kind, n, Rational(t)), R);
                             MultiPoly want = R * eigenvalue(kind, lam, Rational(t), n);
                             return check(got == want, "operator action is not the eigenvalue");
                           }});
        }
}

inline void cutoff_cases(std::vector<Case>& cases, const SweepOptions& opt) {
  int nmax = pick(opt.n_override, 4), dmax = pick(opt.d_override, 4);
  for (int n = 2; n <= nmax; ++n)
    for (const auto& mu : partitions_odd_bounded(n, dmax))
      cases.push_back({"cutoff", "n=" + std::to_string(n) + " mu=" + partition_str(mu),
                       [n, mu] {
                         for (int t = 0; t <= 1; ++t)
                           for (OpKind kind : {OpKind::X, OpKind::Y})
                             if (!cutoff_check(determinant_expand(kind, n, Rational(t)), mu))
                               return std::string("sampled operator coefficient survives");
                         for (OpKind kind : {OpKind::X, OpKind::Y})
                           for (const auto& comp : component_operators(kind, n))
                             if (!cutoff_check(comp, mu))
                               return std::string("component coefficient survives");
                         return std::string();
                       }});
}

inline void commute_cases(std::vector<Case>& cases, const SweepOptions& opt) {
  int nmax = pick(opt.n_override, 4), dmax = pick(opt.d_override, 3);
  for (int n = 2; n <= nmax; ++n) {
    auto all = component_operators(OpKind::X, n);
    auto ys = component_operators(OpKind::Y, n);
    all.insert(all.end(), ys.begin(), ys.end());
    for (size_t a = 0; a < all.size(); ++a)
      for (size_t b = a + 1; b < all.size(); ++b)
        cases.push_back(
            {"commute",
             "n=" + std::to_string(n) + " pair=" + std::to_string(a) + "," + std::to_string(b),
             [n, dmax, a, b, all] {
               for (const auto& mu : partitions_odd_bounded(n, dmax)) {
                 MultiPoly f = detail::gen_monomial(detail::semisym_flavor(), n, mu, false);
                 if (apply(all[a], apply(all[b], f)) != apply(all[b], apply(all[a], f)))
                   return "commutator acts on basis element " + partition_str(mu);
               }
               return std::string();
             }});
  }
}

inline void triangularity_cases(std::vector<Case>& cases, const SweepOptions& opt) {
  int nmax = pick(opt.n_override, 4), dmax = pick(opt.d_override, 3);
  for (int n = 2; n <= nmax; ++n) {
    for (const auto& lam : partitions_odd_bounded(n, dmax)) {
      cases.push_back(
          {"triangularity", "monomial n=" + std::to_string(n) + " lam=" + partition_str(lam),
           [n, lam] {
             MultiPoly R = build_R(lam, n);
             IntVec br = bracket(lam);
             for (const auto& [e, c] : R.terms())
               if (!dominance_leq(e, br)) return "monomial outside " + partition_str(br);
             MultiPoly top = R.top_component();
             for (const auto& [e, c] : top.terms())
               if (expo_weight(e) != odd_weight(lam))
                 return std::string("top part is not homogeneous of the odd weight");
             return std::string();
           }});
      cases.push_back(
          {"triangularity", "usubst n=" + std::to_string(n) + " lam=" + partition_str(lam),
           [n, lam] {
             MultiPoly f = build_R(lam, n).upper_triangular_substitution();
             IntVec br = bracket(lam), le = even_entries(lam);
             for (const auto& [e, c] : f.terms()) {
               if (!dominance_leq(e, br)) return std::string("full dominance fails");
               if (!dominance_leq(even_entries(e), le))
                 return std::string("even-entry dominance fails");
             }
             return std::string();
           }});
      cases.push_back(
          {"triangularity", "ebasis n=" + std::to_string(n) + " lam=" + partition_str(lam),
           [n, lam] {
             RExpansion ex = to_elementary_basis(build_R(lam, n));
             if (ex.coeff(lam) != RatFunc(1))
               return std::string("diagonal coefficient is not one");
             for (const auto& [mu, c] : ex.coeffs)
               if (!order_test(mu, lam, Rel::Prec))
                 return "support " + partition_str(mu) + " escapes the order ideal";
             RExpansion top = to_elementary_basis(rbar(lam, n));
             for (const auto& [mu, c] : top.coeffs) {
               if (!order_test(mu, lam, Rel::PrecHom))
                 return std::string("homogeneous support escapes");
               if (odd_weight(mu) != odd_weight(lam) || bracket1(mu) != bracket1(lam))
                 return std::string("bigrading violated");
             }
             return std::string();
           }});
    }
    for (const auto& lam : partitions_odd_bounded(n, dmax))
      for (const auto& mu : partitions_odd_bounded(n, dmax))
        cases.push_back(
            {"triangularity",
             "product n=" + std::to_string(n) + " " + partition_str(lam) + "*" +
                 partition_str(mu),
             [n, lam, mu] {
               RExpansion prod = to_R_basis(build_R(lam, n) * build_R(mu, n));
               IntVec sum(n);
               for (int i = 0; i < n; ++i) sum[i] = lam[i] + mu[i];
               for (const auto& [tau, c] : prod.coeffs) {
                 if (!order_test(lam, tau, Rel::Sqsubseteq) ||
                     !order_test(mu, tau, Rel::Sqsubseteq))
                   return "support " + partition_str(tau) + " misses a factor bound";
                 if (!order_test(tau, sum, Rel::Prec))
                   return "support " + partition_str(tau) + " exceeds the sum";
               }
               return std::string();
             }});
  }
}

inline void extra_vanishing_cases(std::vector<Case>& cases, const SweepOptions& opt) {
  int nmax = pick(opt.n_override, 4), dmax = pick(opt.d_override, 3);
  for (int n = 2; n <= nmax; ++n)
    for (const auto& lam : partitions_odd_bounded(n, dmax))
      cases.push_back({"extra-vanishing",
                       "n=" + std::to_string(n) + " lam=" + partition_str(lam),
                       [n, lam, dmax] {
                         for (const auto& mu : partitions_odd_bounded(n, dmax + 2)) {
                           bool contained = order_test(lam, mu, Rel::Sqsubseteq);
                           RatFunc v = R_node_value(n, lam, mu);
                           if (!contained && !v.is_zero())
                             return "nonzero beyond containment at " + partition_str(mu);
                         }
                         return std::string();
                       }});
}

inline void duality_cases(std::vector<Case>& cases, const SweepOptions& opt) {
  int nmax = pick(opt.n_override, 3), dmax = pick(opt.d_override, 3);
  for (int n = 2; n <= nmax; ++n)
    for (const auto& lam : partitions_odd_bounded(n, dmax))
      for (const auto& alpha : opt.alphas)
        cases.push_back({"duality",
                         "binomial n=" + std::to_string(n) + " lam=" + partition_str(lam) +
                             " alpha=" + rational_str(alpha),
                         [n, lam, alpha] {
                           return check(binomial_check(lam, n, alpha),
                                        "reflected expansion mismatch");
                         }});
  int nmax_matrix = pick(opt.n_override, 4);
  for (int n = 2; n <= nmax_matrix; ++n) {
    for (const auto& alpha : opt.alphas)
      cases.push_back(
          {"duality", "symmetry n=" + std::to_string(n) + " alpha=" + rational_str(alpha),
           [n, dmax, alpha] {
             auto nodes = partitions_odd_bounded(n, dmax);
             auto neg = neg_rho_alpha(n, alpha);
             std::vector<std::vector<RatFunc>> M(nodes.size(),
                                                 std::vector<RatFunc>(nodes.size()));
             for (size_t i = 0; i < nodes.size(); ++i) {
               MultiPoly R = build_R(nodes[i], n);
               RatFunc base = R.eval(neg);
               if (base.is_zero()) return std::string("vanishing at the reflected staircase");
               for (size_t j = 0; j < nodes.size(); ++j) {
                 auto pt = neg;
                 for (int k = 0; k < n; ++k) pt[k] -= RatFunc(nodes[j][k]);
                 M[i][j] = R.eval(pt) / base;
               }
             }
             for (size_t i = 0; i < nodes.size(); ++i)
               for (size_t j = i + 1; j < nodes.size(); ++j)
                 if (M[i][j] != M[j][i])
                   return "asymmetry at " + partition_str(nodes[i]) + "," +
                          partition_str(nodes[j]);
             return std::string();
           }});
    cases.push_back({"duality", "involution n=" + std::to_string(n), [n, dmax] {
                       DualityMatrix M = duality_matrix(n, dmax);
                       size_t s = M.order.size();
                       for (size_t i = 0; i < s; ++i)
                         for (size_t j = 0; j < s; ++j) {
                           if (!order_test(M.order[i], M.order[j], Rel::Sqsubseteq) &&
                               !M.entries[i][j].is_zero())
                             return std::string("matrix is not triangular");
                           RatFunc acc;
                           for (size_t k = 0; k < s; ++k)
                             acc += M.entries[i][k] * M.entries[k][j];
                           if (acc != (i == j ? RatFunc(1) : RatFunc()))
                             return std::string("square is not the identity");
                         }
                       return std::string();
                     }});
  }
}

inline void interpol_cases(std::vector<Case>& cases, const SweepOptions& opt) {
  int nmax = pick(opt.n_override, 4), dmax = pick(opt.d_override, 3);
  for (int n = 2; n <= nmax; ++n)
    for (std::uint64_t seed : {11u, 12u})
      cases.push_back(
          {"interpol", "n=" + std::to_string(n) + " seed=" + std::to_string(seed),
           [n, dmax, seed] {
             MultiPoly f = seeded_invariant(n, dmax, seed);
             HatFunction h = hat_transform(f);
             for (const auto& [mu, v] : h.values)
               if (odd_weight(mu) > f.degree())
                 return std::string("hat support escapes the degree nodes");
             HatFunction back = hat_values(h);
             HatFunction vals = node_values(f, f.degree());
             for (const auto& mu : partitions_odd_bounded(n, f.degree()))
               if (back.at(mu) != vals.at(mu)) return std::string("double transform moved a value");
             if (hat_inverse(h) != f) return std::string("reconstruction differs");
             auto ops = component_operators(OpKind::X, n);
             auto ys = component_operators(OpKind::Y, n);
             ops.insert(ops.end(), ys.begin(), ys.end());
             for (const auto& D : ops) {
               MultiPoly c0 = divide_by_vandermonde(D.coeff(0u));
               HatFunction lhs = hat_transform(apply(D, f));
               for (const auto& mu : partitions_odd_bounded(n, f.degree()))
                 if (lhs.at(mu) != c0.eval(node_point(n, mu)) * h.at(mu))
                   return std::string("eigen compatibility fails");
             }
             return std::string();
           }});
}

inline void evaluation_cases(std::vector<Case>& cases, const SweepOptions& opt) {
  int nmax = pick(opt.n_override, 4), dmax = pick(opt.d_override, 4);
  for (int n = 2; n <= nmax; ++n)
    for (const auto& lam : partitions_odd_bounded(n, dmax))
      cases.push_back({"evaluation", "n=" + std::to_string(n) + " lam=" + partition_str(lam),
                       [n, lam, alphas = opt.alphas] {
                         for (const auto& alpha : alphas) {
                           RatFunc v = special_value(lam, n, alpha);  // throws on mismatch
                           if (v.is_zero()) return std::string("vanishing principal value");
                         }
                         return std::string();
                       }});
  for (int n = 3; n <= std::min(4, nmax); ++n)
    for (const auto& lam : partitions_odd_bounded(n, std::min(dmax, 3)))
      cases.push_back({"evaluation",
                       "ones n=" + std::to_string(n) + " lam=" + partition_str(lam),
                       [n, lam] {
                         homogeneous_evaluation(lam, n);  // throws on case-split mismatch
                         return std::string();
                       }});
  for (int n = 2; n <= nmax; ++n)
    for (const auto& lam : partitions_odd_bounded(n, std::min(dmax, 3)))
      cases.push_back({"evaluation",
                       "shifted-ones n=" + std::to_string(n) + " lam=" + partition_str(lam),
                       [n, lam] {
                         return check(homogeneous_binomial(lam, n),
                                      "homogeneous expansion differs");
                       }});
}

inline void pieri_cases(std::vector<Case>& cases, const SweepOptions& opt) {
  int nmax = pick(opt.n_override, 4), dmax = pick(opt.d_override, 3);
  for (int n = 2; n <= nmax; ++n)
    for (const auto& mu : partitions_odd_bounded(n, dmax)) {
      std::string base = "n=" + std::to_string(n) + " mu=" + partition_str(mu);
      cases.push_back({"pieri", "t-rule " + base, [n, mu] {
                         MultiPoly R = build_R(mu, n);
                         for (Parity p : {Parity::Odd, Parity::Even}) {
                           MultiPoly prod = MultiPoly::constant(n, RatFunc(1));
                           for (int t = 0; t <= ceil_half(n); ++t) {
                             prod = MultiPoly::constant(n, RatFunc(1));
                             for (int i = 1; i <= n; ++i)
                               if (parity_matches(i, p))
                                 prod *= MultiPoly::variable(n, i) +
                                         MultiPoly::constant(n, RatFunc(t));
                             RExpansion closed = pieri_t(mu, p, Rational(t), n);
                             if (closed.coeffs != to_R_basis(prod * R).coeffs)
                               return std::string("spectral rule differs at t=") +
                                      std::to_string(t);
                           }
                         }
                         return std::string();
                       }});
      cases.push_back({"pieri", "elementary " + base, [n, mu] {
                         MultiPoly R = build_R(mu, n);
                         for (Parity p : {Parity::Odd, Parity::Even}) {
                           auto pos = p == Parity::Odd ? odd_positions(n) : even_positions(n);
                           for (int m = 0; m <= static_cast<int>(pos.size()); ++m) {
                             RExpansion closed = pieri_elementary(mu, m, p, n);
                             MultiPoly em = elementary_in_vars(n, pos, m);
                             if (closed.coeffs != to_R_basis(em * R).coeffs)
                               return std::string("elementary rule differs at m=") +
                                      std::to_string(m);
                           }
                         }
                         return std::string();
                       }});
      cases.push_back({"pieri", "column " + base, [n, mu] {
                         MultiPoly R = build_R(mu, n);
                         for (int m = 0; m <= n; ++m) {
                           MultiPoly col = m == 0 ? MultiPoly::constant(n, RatFunc(1))
                                                  : elementary_semisym(m, n, true);
                           RExpansion closed = pieri_shifted(mu, m, n);
                           if (closed.coeffs != to_R_basis(col * R).coeffs)
                             return std::string("column rule differs at m=") + std::to_string(m);
                         }
                         return std::string();
                       }});
      cases.push_back({"pieri", "homogeneous " + base, [n, mu] {
                         for (int m = 1; m <= n; ++m) {
                           RExpansion closed = pieri_homogeneous(mu, m, n);
                           MultiPoly direct = elementary_semisym(m, n, false) * rbar(mu, n);
                           if (from_rbar_basis(closed) != direct)
                             return std::string("homogeneous rule differs at m=") +
                                    std::to_string(m);
                         }
                         return std::string();
                       }});
    }
}

struct TableTerm {
  RatFunc coeff;
  std::vector<int> factors;  // column sizes, ascending
};
struct TableRelation {
  IntVec lhs;
  std::vector<TableTerm> terms;
};

// The displayed degree-three table: every non-column polynomial of odd weight
// at most three as a polynomial in the column family, valid for every n.
inline std::vector<TableRelation> degree3_relations() {
  const RatFunc one(1), r = RatFunc::r();
  auto inv = [&](const RatFunc& x) { return one / x; };
  RatFunc i1r = inv(one + r), i12r = inv(one + RatFunc(2) * r),
          i14r = inv(one + RatFunc(4) * r), i1r2r = i1r * i12r;
  std::vector<TableRelation> t;
  t.push_back({{2}, {{one, {1, 1}}, {-one, {1}}}});
  t.push_back({{2, 1}, {{one, {1, 2}}, {-i12r, {3}}}});
  t.push_back({{2, 2}, {{one, {2, 2}}, {RatFunc(-2) * i12r, {4}}, {-one, {2}}}});
  t.push_back({{2, 1, 1}, {{one, {1, 3}}, {-one, {3}}}});
  t.push_back({{2, 1, 1, 1}, {{one, {1, 4}}, {-i14r, {5}}}});
  t.push_back({{2, 2, 1},
               {{one, {2, 3}}, {-i12r, {1, 4}}, {-i12r, {5}}, {-one, {3}}}});
  t.push_back({{2, 2, 1, 1},
               {{one, {2, 4}}, {RatFunc(-3) * i14r, {6}}, {RatFunc(-2), {4}}}});
  t.push_back({{3}, {{one, {1, 1, 1}}, {RatFunc(-3), {1, 1}}, {RatFunc(2), {1}}}});
  t.push_back({{3, 1},
               {{one, {1, 1, 2}}, {-i1r, {1, 3}}, {-one, {1, 2}}, {i1r, {3}}}});
  t.push_back({{3, 2},
               {{one, {1, 2, 2}},
                {-i1r, {2, 3}},
                {-i1r, {1, 4}},
                {i1r2r, {5}},
                {-one, {1, 2}},
                {i1r, {3}}}});
  t.push_back({{3, 3},
               {{one, {2, 2, 2}},
                {RatFunc(-3) * i1r, {2, 4}},
                {RatFunc(3) * i1r2r, {6}},
                {RatFunc(-3), {2, 2}},
                {RatFunc(6) * i1r, {4}},
                {RatFunc(2), {2}}}});
  return t;
}

inline std::string table_json() {
  std::string s = "{\"deg\":3,\"relations\":[";
  bool first_rel = true;
  for (const auto& rel : degree3_relations()) {
    if (!first_rel) s += ',';
    first_rel = false;
    s += "{\"lhs\":";
    jsonio::append_ints(s, rel.lhs);
    s += ",\"terms\":[";
    bool first = true;
    for (const auto& term : rel.terms) {
      if (!first) s += ',';
      first = false;
      s += "{\"factors\":";
      jsonio::append_ints(s, IntVec(term.factors.begin(), term.factors.end()));
      s += ',';
      jsonio::append_coeff_fields(s, term.coeff);
      s += '}';
    }
    s += "]}";
  }
  s += "]}\n";
  return s;
}

inline std::string check_table_relation(const TableRelation& rel, int n) {
  MultiPoly lhs(n);
  if (static_cast<int>(rel.lhs.size()) <= n) lhs = build_R(rel.lhs, n);
  MultiPoly rhs(n);
  for (const auto& term : rel.terms) {
    MultiPoly prod = MultiPoly::constant(n, term.coeff);
    for (int k : term.factors) {
      if (k > n) {
        prod = MultiPoly(n);
        break;
      }
      prod *= elementary_semisym(k, n, true);
    }
    rhs += prod;
  }
  return check(lhs == rhs,
               "table row " + partition_str(rel.lhs) + " fails at n=" + std::to_string(n));
}

inline void closed_form_cases(std::vector<Case>& cases, const SweepOptions& opt) {
  int nmax = pick(opt.n_override, 5);
  for (int n = 2; n <= nmax; ++n)
    for (int a = 1; a <= 4; ++a)
      for (int m = 1; m <= std::min(4, n); ++m)
        cases.push_back({"closed-forms",
                         "hook n=" + std::to_string(n) + " a=" + std::to_string(a) +
                             " m=" + std::to_string(m),
                         [n, a, m] {
                           IntVec lam(m, 1);
                           lam[0] = a;
                           return check(hook(a, m, n) == build_R(lam, n),
                                        "hook product differs");
                         }});
  for (int n : {3, 4})
    for (int a = 1; a <= 4; ++a)
      for (int b = 0; b <= std::min(a, 2); ++b)
        cases.push_back({"closed-forms",
                         "two-row n=" + std::to_string(n) + " a=" + std::to_string(a) +
                             " b=" + std::to_string(b),
                         [n, a, b] {
                           return check(two_row(a, b, n) == rbar({a, b}, n),
                                        "two-row sum differs");
                         }});
  for (const auto& mu : partitions_odd_bounded(3, 8)) {
    if (mu[0] > 4) continue;
    cases.push_back({"closed-forms", "three-variable mu=" + partition_str(mu), [mu] {
                       return check(n3_closed_form(mu) == rbar(mu, 3),
                                    "three-variable sum differs");
                     }});
  }
  for (int n : {3, 4, 5, 6})
    cases.push_back({"closed-forms", "table n=" + std::to_string(n), [n] {
                       for (const auto& rel : degree3_relations()) {
                         std::string w = check_table_relation(rel, n);
                         if (!w.empty()) return w;
                       }
                       return std::string();
                     }});
  if (!opt.golden_table_path.empty())
    cases.push_back({"closed-forms", "table golden file", [path = opt.golden_table_path] {
                       FILE* fp = std::fopen(path.c_str(), "rb");
                       if (!fp) return "golden file missing: " + path;
                       std::string bytes;
                       char buf[4096];
                       size_t got;
                       while ((got = std::fread(buf, 1, sizeof buf, fp)) > 0)
                         bytes.append(buf, got);
                       std::fclose(fp);
                       return check(bytes == table_json(), "golden file differs");
                     }});

  // comparison family: both identifications with the column theory
  int nmax_jack = pick(opt.n_override, 4);
  for (int n = 2; n <= nmax_jack; ++n) {
    for (const auto& lam : partitions_odd_bounded(n, 3)) {
      if (bracket1(lam) != 0) continue;
      cases.push_back({"closed-forms",
                       "even-pair n=" + std::to_string(n) + " lam=" + partition_str(lam),
                       [n, lam] {
                         auto off = rho(n);
                         for (auto& x : off) x = -x;
                         MultiPoly Rt = build_R(lam, n).shifted(off);
                         int ne = floor_half(n);
                         MultiPoly P =
                             build_shifted_jack(even_entries(lam), ne, RatFunc(2) * RatFunc::r());
                         auto rho_e = rho_scaled(ne, RatFunc(2) * RatFunc::r());
                         MultiPoly emb(n);
                         for (const auto& [e, c] : P.terms()) {
                           MultiPoly t = MultiPoly::constant(n, c);
                           for (int j = 0; j < ne; ++j)
                             for (int k = 0; k < e[j]; ++k)
                               t *= MultiPoly::variable(n, 2 * (j + 1)) +
                                    MultiPoly::constant(n, rho_e[j]);
                           emb += t;
                         }
                         return check(Rt == emb, "even-pair identification differs");
                       }});
    }
    for (const auto& mu : partitions_weight_bounded(ceil_half(n), 3))
      cases.push_back({"closed-forms",
                       "odd-sum n=" + std::to_string(n) + " mu=" + partition_str(mu),
                       [n, mu] {
                         auto off = rho(n);
                         for (auto& x : off) x = -x;
                         int no = ceil_half(n);
                         RatFunc two_r = RatFunc(2) * RatFunc::r();
                         MultiPoly P = build_shifted_jack(mu, no, two_r);
                         auto rho_o = rho_scaled(no, two_r);
                         MultiPoly emb(n);
                         for (const auto& [e, c] : P.terms()) {
                           MultiPoly t = MultiPoly::constant(n, c);
                           for (int j = 0; j < no; ++j)
                             for (int k = 0; k < e[j]; ++k)
                               t *= MultiPoly::variable(n, 2 * j + 1) +
                                    MultiPoly::constant(n, rho_o[j]);
                           emb += t;
                         }
                         auto point = rho_scaled(no, two_r);
                         for (int j = 0; j < no; ++j) point[j] += RatFunc(mu[j]);
                         MultiPoly rhs = emb * (RatFunc(1) / P.eval(point));
                         // sum of normalized columns over the fibre of mu
                         MultiPoly lhs(n);
                         IntVec lam(n, 0);
                         auto rec = [&](auto&& self, int j) -> void {
                           if (j == no) {
                             if (!is_partition(lam)) return;
                             MultiPoly R = build_R(lam, n);
                             lhs += R.shifted(off) *
                                    (RatFunc(1) / R.eval(node_point(n, lam)));
                             return;
                           }
                           int hi = mu[j];
                           int lo = j + 1 < no ? mu[j + 1] : 0;
                           for (int v = lo; v <= hi; ++v) {
                             if (2 * j + 2 <= n) {
                               lam[2 * j + 1] = v;
                               self(self, j + 1);
                             } else if (v == 0) {
                               self(self, j + 1);
                             }
                           }
                         };
                         for (int j = 0; j < no; ++j) lam[2 * j] = mu[j];
                         rec(rec, 0);
                         return check(lhs == rhs, "odd-sum identification differs");
                       }});
  }

  // the four displayed shifted column formulas
  for (int n : {4, 5})
    cases.push_back({"closed-forms", "columns n=" + std::to_string(n), [n] {
                       auto u = [&](int i) { return MultiPoly::variable(n, i); };
                       const RatFunc r = RatFunc::r();
                       MultiPoly e1o(n), e1e(n), e2o(n), e2e(n), lo(n), le(n);
                       for (int i = 1; i <= n; i += 2) e1o += u(i);
                       for (int i = 2; i <= n; i += 2) e1e += u(i);
                       for (int i = 1; i <= n; i += 2)
                         for (int j = i + 2; j <= n; j += 2) e2o += u(i) * u(j);
                       for (int i = 2; i <= n; i += 2)
                         for (int j = i + 2; j <= n; j += 2) e2e += u(i) * u(j);
                       for (int i = 1; i <= n; i += 2) lo += u(i) * RatFunc(i - 1);
                       for (int i = 2; i <= n; i += 2) le += u(i) * RatFunc(i - 2);
                       auto off = rho(n);
                       for (auto& x : off) x = -x;
                       auto tilde = [&](const IntVec& lam) {
                         return build_R(lam, n).shifted(off);
                       };
                       if (tilde({1}) != e1o - e1e) return std::string("column one differs");
                       if (tilde({1, 1}) != e1e) return std::string("column two differs");
                       if (tilde({1, 1, 1}) != e2o - e2e + (lo - le) * r)
                         return std::string("column three differs");
                       if (n >= 4 && tilde({1, 1, 1, 1}) != e2e + le * r)
                         return std::string("column four differs");
                       return std::string();
                     }});
}

inline void integrality_cases(std::vector<Case>& cases, const SweepOptions& opt) {
  int nmax = pick(opt.n_override, 4), dmax = pick(opt.d_override, 4);
  for (int n = 2; n <= nmax; ++n)
    for (const auto& lam : partitions_odd_bounded(n, dmax))
      cases.push_back({"integrality", "n=" + std::to_string(n) + " lam=" + partition_str(lam),
                       [n, lam] {
                         IntegralityReport rep = integrality_probe(lam, n);
                         return rep.integral ? std::string() : rep.witness;
                       }});
}

}  // namespace verify_detail

inline std::vector<std::string> suite_names() {
  return {"defining",  "eigen",    "cutoff",     "commute",      "triangularity",
          "extra-vanishing", "duality", "interpol", "evaluation", "pieri",
          "closed-forms",    "integrality"};
}

inline std::vector<Verdict> run_suite(const std::string& name, const SweepOptions& opt) {
  using namespace verify_detail;
  std::vector<Case> cases;
  auto add = [&](const std::string& which) {
    if (which == "defining") defining_cases(cases, opt);
    else if (which == "eigen") eigen_cases(cases, opt);
    else if (which == "cutoff") cutoff_cases(cases, opt);
    else if (which == "commute") commute_cases(cases, opt);
    else if (which == "triangularity") triangularity_cases(cases, opt);
    else if (which == "extra-vanishing") extra_vanishing_cases(cases, opt);
    else if (which == "duality") duality_cases(cases, opt);
    else if (which == "interpol") interpol_cases(cases, opt);
    else if (which == "evaluation") evaluation_cases(cases, opt);
    else if (which == "pieri") pieri_cases(cases, opt);
    else if (which == "closed-forms") closed_form_cases(cases, opt);
    else if (which == "integrality") integrality_cases(cases, opt);
    else throw std::domain_error("unknown suite '" + which + "'");
  };
  if (name == "all")
    for (const auto& s : suite_names()) add(s);
  else
    add(name);
  return run_cases(cases, opt.jobs);
}

inline std::string verdicts_json(const std::vector<Verdict>& vs) {
  std::string s = "{\"cases\":[";
  size_t passed = 0;
  for (size_t i = 0; i < vs.size(); ++i) {
    if (i) s += ',';
    s += "{\"suite\":\"" + vs[i].suite + "\",\"id\":\"" + vs[i].id + "\",\"pass\":";
    s += vs[i].pass ? "true" : "false";
    if (!vs[i].pass) s += ",\"witness\":\"" + vs[i].witness + "\"";
    s += '}';
    if (vs[i].pass) ++passed;
  }
  s += "],\"passed\":" + std::to_string(passed) +
       ",\"failed\":" + std::to_string(vs.size() - passed) + "}\n";
  return s;
}

}  // namespace semisym
