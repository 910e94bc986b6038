#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <semisym/identities.hpp>

using namespace semisym;

namespace {

const RatFunc r = RatFunc::r();

MultiPoly parity_product(int n, Parity p, const Rational& t) {
  MultiPoly acc = MultiPoly::constant(n, RatFunc(1));
  for (int i = 1; i <= n; ++i)
    if (parity_matches(i, p))
      acc *= MultiPoly::variable(n, i) + MultiPoly::constant(n, RatFunc(t));
  return acc;
}

RExpansion expand_product_R(const MultiPoly& f) { return to_R_basis(f); }

MultiPoly random_invariant(SplitMix64& rng, int n, int d) {
  MultiPoly f(n);
  for (const auto& mu : partitions_odd_bounded(n, d))
    f += detail::gen_monomial(detail::semisym_flavor(), n, mu, false) *
         RatFunc(rng.rational(4, 3));
  return f;
}

}  // namespace

TEST_CASE("principal specialization") {
  CHECK(special_value({0, 0, 0}, 3, Rational(1)) == RatFunc(1));
  // z1 - z2 + z3 - r at the reflected staircase
  Rational alpha(2);
  CHECK(special_value({1, 0, 0}, 3, alpha) ==
        -(RatFunc(alpha) + RatFunc(2) * r));
  for (int n : {2, 3})
    for (const auto& lam : partitions_odd_bounded(n, 3))
      for (const Rational& a : {Rational(1), Rational(2), make_rational(5, 2)}) {
        special_value(lam, n, a);  // throws on closed-form mismatch
        CHECK_FALSE(special_value(lam, n, a).is_zero());
      }
}

TEST_CASE("duality expansion of the reflected argument") {
  CHECK(binomial_check({0, 0}, 2, Rational(1)));
  CHECK(binomial_check({1, 0, 0}, 3, Rational(1)));
  for (int n : {2, 3})
    for (const auto& lam : partitions_odd_bounded(n, 2))
      for (const Rational& a : {Rational(1), make_rational(5, 2)})
        CHECK(binomial_check(lam, n, a));
}

TEST_CASE("reflected node matrix is symmetric") {
  for (int n : {2, 3}) {
    auto nodes = partitions_odd_bounded(n, 2);
    for (const Rational& a : {Rational(1), make_rational(5, 2)}) {
      auto neg = neg_rho_alpha(n, a);
      std::vector<std::vector<RatFunc>> M(nodes.size(),
                                          std::vector<RatFunc>(nodes.size()));
      for (size_t i = 0; i < nodes.size(); ++i) {
        MultiPoly R = build_R(nodes[i], n);
        RatFunc base = R.eval(neg);
        CHECK_FALSE(base.is_zero());  // nonvanishing at the reflected staircase
        for (size_t j = 0; j < nodes.size(); ++j) {
          auto pt = neg;
          for (int k = 0; k < n; ++k) pt[k] -= RatFunc(nodes[j][k]);
          M[i][j] = R.eval(pt) / base;
        }
      }
      for (size_t i = 0; i < nodes.size(); ++i)
        for (size_t j = 0; j < nodes.size(); ++j) CHECK(M[i][j] == M[j][i]);
    }
  }
}

TEST_CASE("signed node matrix is a triangular involution") {
  for (int n : {2, 3}) {
    DualityMatrix M = duality_matrix(n, 2);
    size_t s = M.order.size();
    for (size_t i = 0; i < s; ++i)
      for (size_t j = 0; j < s; ++j) {
        if (!order_test(M.order[i], M.order[j], Rel::Sqsubseteq))
          CHECK(M.entries[i][j].is_zero());
        RatFunc acc;
        for (size_t k = 0; k < s; ++k) acc += M.entries[i][k] * M.entries[k][j];
        CHECK(acc == (i == j ? RatFunc(1) : RatFunc()));
      }
  }
}

TEST_CASE("hat transform is an involution with the expected image") {
  SplitMix64 rng(5);
  for (int n : {2, 3}) {
    MultiPoly f = random_invariant(rng, n, 2);
    HatFunction h = hat_transform(f);
    // double transform returns the node values
    HatFunction back = hat_values(h);
    HatFunction vals = node_values(f, f.degree());
    for (const auto& mu : partitions_odd_bounded(n, f.degree()))
      CHECK(back.at(mu) == vals.at(mu));
    CHECK(hat_inverse(h) == f);

    // the interpolation basis maps to scaled indicators
    IntVec nu{1, 1, 0};
    nu.resize(n, 0);
    HatFunction hr = hat_transform(build_R(nu, n));
    for (const auto& [mu, v] : hr.values) CHECK(mu == nu);
    RatFunc want = R_node_value(n, nu, nu);
    if (odd_weight(nu) % 2) want = -want;
    CHECK(hr.at(nu) == want);
  }
  // constants reconstruct
  MultiPoly one = MultiPoly::constant(3, RatFunc(1));
  CHECK(hat_inverse(hat_transform(one)) == one);
}

TEST_CASE("hat transform intertwines the commuting family") {
  int n = 3;
  SplitMix64 rng(9);
  MultiPoly f = random_invariant(rng, n, 2);
  auto Xs = component_operators(OpKind::X, n);
  auto Ys = component_operators(OpKind::Y, n);
  std::vector<OperatorExpansion> ops = Xs;
  ops.insert(ops.end(), Ys.begin(), Ys.end());
  for (const auto& D : ops) {
    MultiPoly c0 = divide_by_vandermonde(D.coeff(0u));
    HatFunction lhs = hat_transform(apply(D, f));
    HatFunction rhs = hat_transform(f);
    int d = std::max(lhs.d, rhs.d);
    for (const auto& mu : partitions_odd_bounded(n, d))
      CHECK(lhs.at(mu) == c0.eval(node_point(n, mu)) * rhs.at(mu));
  }
}

TEST_CASE("pieri rule with the spectral parameter") {
  for (int n : {2, 3}) {
    for (const auto& mu : partitions_odd_bounded(n, 2)) {
      MultiPoly R = build_R(mu, n);
      for (Parity p : {Parity::Odd, Parity::Even}) {
        int K = p == Parity::Odd ? ceil_half(n) : floor_half(n);
        for (int t = 0; t <= K; ++t) {
          RExpansion closed = pieri_t(mu, p, Rational(t), n);
          RExpansion direct = expand_product_R(parity_product(n, p, Rational(t)) * R);
          CHECK(closed.coeffs == direct.coeffs);
        }
      }
    }
  }
}

TEST_CASE("displayed three-variable coefficients") {
  int n = 3;
  auto dd = [&](int a, int b) { return RatFunc(a - b); };
  for (const auto& mu : partitions_odd_bounded(3, 3)) {
    RatFunc denom = (dd(mu[0], mu[2]) + RatFunc(2) * r) *
                    (dd(mu[0], mu[2]) - RatFunc(1) + RatFunc(2) * r);
    RatFunc c3 = dd(mu[1], mu[2]) * (dd(mu[1], mu[2]) - RatFunc(1) + RatFunc(2) * r) / denom;
    RatFunc c23 = dd(mu[0], mu[1]) * (dd(mu[0], mu[1]) - RatFunc(1) + RatFunc(2) * r) / denom;
    IntVec e1{mu[0] + 1, mu[1], mu[2]}, e3{mu[0], mu[1], mu[2] + 1};
    IntVec e12{mu[0] + 1, mu[1] + 1, mu[2]}, e23{mu[0], mu[1] + 1, mu[2] + 1};

    // odd parity, degree one
    RExpansion po = pieri_elementary(mu, 1, Parity::Odd, n);
    CHECK(po.coeff(mu) ==
          RatFunc(mu[0] + mu[2]) + RatFunc(2) * r);
    CHECK(po.coeff(e1) == (is_partition(e1) ? RatFunc(1) : RatFunc()));
    if (is_partition(e3)) CHECK(po.coeff(e3) == c3);
    CHECK(po.coeff(e12) == (is_partition(e12) ? RatFunc(1) : RatFunc()));
    if (is_partition(e23)) CHECK(po.coeff(e23) == c23);

    // even parity, degree one
    RExpansion pe = pieri_elementary(mu, 1, Parity::Even, n);
    CHECK(pe.coeff(mu) == RatFunc(mu[1]) + r);
    CHECK(pe.coeff(e12) == (is_partition(e12) ? RatFunc(1) : RatFunc()));
    if (is_partition(e23)) CHECK(pe.coeff(e23) == c23);
    CHECK(pe.coeffs.size() <= 3);

    // odd parity, degree two: the product z1 z3
    RExpansion q = pieri_elementary(mu, 2, Parity::Odd, n);
    RatFunc m1 = RatFunc(mu[0]) + RatFunc(2) * r, m3 = RatFunc(mu[2]);
    CHECK(q.coeff(mu) == m1 * m3);
    if (is_partition(e1)) CHECK(q.coeff(e1) == m3);
    if (is_partition(e3)) CHECK(q.coeff(e3) == m1 * c3);
    if (is_partition(e12)) CHECK(q.coeff(e12) == m3);
    if (is_partition(e23)) CHECK(q.coeff(e23) == m1 * c23);
    IntVec e123{mu[0] + 1, mu[1] + 1, mu[2] + 1};
    CHECK(q.coeff(e123) == RatFunc(1));

    // shifted column of size one
    RExpansion f2 = pieri_shifted(mu, 1, n);
    CHECK(f2.coeff(mu) == RatFunc(bracket1(mu)));
    CHECK(f2.coeff(e1) == (is_partition(e1) ? RatFunc(1) : RatFunc()));
    if (is_partition(e3)) CHECK(f2.coeff(e3) == c3);
    CHECK(f2.coeffs.size() <= 3);
  }
}

TEST_CASE("pieri rules against direct expansion") {
  for (int n : {2, 3}) {
    for (const auto& mu : partitions_odd_bounded(n, 2)) {
      MultiPoly R = build_R(mu, n);
      for (Parity p : {Parity::Odd, Parity::Even}) {
        int top = p == Parity::Odd ? ceil_half(n) : floor_half(n);
        for (int m = 0; m <= top; ++m) {
          MultiPoly em =
              elementary_in_vars(n, p == Parity::Odd ? odd_positions(n) : even_positions(n), m);
          RExpansion closed = pieri_elementary(mu, m, p, n);
          CHECK(closed.coeffs == expand_product_R(em * R).coeffs);
        }
      }
      for (int m = 0; m <= n; ++m) {
        MultiPoly col = m == 0 ? MultiPoly::constant(n, RatFunc(1))
                               : elementary_semisym(m, n, true);
        RExpansion closed = pieri_shifted(mu, m, n);
        CHECK(closed.coeffs == expand_product_R(col * R).coeffs);
      }
      for (int m = 1; m <= n; ++m) {
        MultiPoly em = elementary_semisym(m, n, false);
        RExpansion closed = pieri_homogeneous(mu, m, n);
        MultiPoly direct = em * rbar(mu, n);
        CHECK(from_rbar_basis(closed) == direct);
      }
    }
  }
}

TEST_CASE("pieri coefficients do not depend on the relabeling choice") {
  for (int n : {3, 4, 5}) {
    IntVec mu{2, 1, 1};
    mu.resize(n, 0);
    for (unsigned mask = 0; mask < (1u << n); ++mask) {
      int s = __builtin_popcount(mask);
      if (subset_odd_count(mask, n) != ceil_half(s)) continue;  // needs a relabeling
      for (int k = 0; k + s <= n; ++k)
        CHECK(primed_column_value(mu, mask, n, k) ==
              primed_column_value(mu, mask, n, k, true));
    }
  }
}

TEST_CASE("hook closed forms") {
  CHECK(hook(1, 2, 3) == build_R({1, 1}, 3));
  CHECK(hook(2, 2, 3) == build_R({2, 1}, 3));
  CHECK(hook(3, 1, 3) == build_R({3}, 3));
  CHECK(hook(2, 2, 4) ==
        build_R({1}, 4) * build_R({1, 1}, 4) -
            build_R({1, 1, 1}, 4) * (RatFunc(1) / (RatFunc(1) + RatFunc(2) * r)));
  for (int n : {3, 4}) {
    for (int a = 1; a <= 3; ++a)
      for (int m = 1; m <= std::min(n, 3); ++m) {
        IntVec lam(m, 1);
        lam[0] = a;
        CHECK(hook(a, m, n) == build_R(lam, n));
      }
  }
}

TEST_CASE("two-row closed form") {
  CHECK(two_row(1, 0, 3) == elementary_semisym(1, 3, false));
  for (int n : {3, 4})
    for (int a = 1; a <= 3; ++a)
      for (int b = 0; b <= std::min(a, 2); ++b)
        CHECK(two_row(a, b, n) == rbar({a, b}, n));
}

TEST_CASE("three-variable closed form") {
  CHECK(n3_closed_form({1, 0, 0}) == elementary_semisym(1, 3, false));
  CHECK(n3_closed_form({1, 1, 1}) ==
        MultiPoly::variable(3, 1) * MultiPoly::variable(3, 3));
  CHECK(n3_closed_form({2, 1, 0}) == rbar({2, 1, 0}, 3));
  for (const auto& mu : partitions_odd_bounded(3, 4)) {
    if (mu[0] > 3) continue;
    CHECK(n3_closed_form(mu) == rbar(mu, 3));
  }
}

TEST_CASE("integral form probe") {
  CHECK(integrality_probe({1, 0, 0}, 3).integral);
  CHECK(c_even(IntVec{2, 1}) == RatFunc(1) + RatFunc(2) * r);
  for (int n : {2, 3})
    for (const auto& lam : partitions_odd_bounded(n, 3))
      CHECK(integrality_probe(lam, n).integral);
}

TEST_CASE("one point evaluation of the top part") {
  CHECK(homogeneous_evaluation({1, 0, 0}, 3) == RatFunc(1));
  CHECK(homogeneous_evaluation({1, 0, 0, 0}, 4).is_zero());
  for (int n : {3, 4})
    for (const auto& lam : partitions_odd_bounded(n, 2)) homogeneous_evaluation(lam, n);
}

TEST_CASE("homogeneous binomial expansion") {
  CHECK(homogeneous_binomial({0, 0, 0}, 3));
  CHECK(homogeneous_binomial({1, 0, 0}, 3));
  CHECK(homogeneous_binomial({1, 1, 0, 0}, 4));
  for (int n : {2, 3})
    for (const auto& lam : partitions_odd_bounded(n, 2)) {
      if (n % 2 == 0 && bracket1(lam) != 0 &&
          eval_factors(lam, Rational(1), n).B.is_zero())
        continue;
      CHECK(homogeneous_binomial(lam, n));
    }
}

TEST_CASE("product support lies between the factors and their sum") {
  int n = 3;
  for (const auto& lam : partitions_odd_bounded(n, 2))
    for (const auto& mu : partitions_odd_bounded(n, 2)) {
      RExpansion prod = to_R_basis(build_R(lam, n) * build_R(mu, n));
      for (const auto& [tau, c] : prod.coeffs) {
        CHECK(order_test(lam, tau, Rel::Sqsubseteq));
        CHECK(order_test(mu, tau, Rel::Sqsubseteq));
        IntVec sum(n);
        for (int i = 0; i < n; ++i) sum[i] = lam[i] + mu[i];
        CHECK(order_test(tau, sum, Rel::Prec));
      }
    }
}
