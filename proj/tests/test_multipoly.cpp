#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <semisym/multipoly.hpp>
#include <semisym/partition.hpp>

using namespace semisym;

namespace {

MultiPoly zvar(int n, int i) { return MultiPoly::variable(n, i); }

MultiPoly random_poly(SplitMix64& rng, int n, int maxdeg, int nterms) {
  MultiPoly f(n);
  for (int t = 0; t < nterms; ++t) {
    Exponent e(n);
    int budget = maxdeg;
    for (int i = 0; i < n; ++i) {
      e[i] = static_cast<int>(rng.range(0, budget));
      budget -= e[i];
    }
    f += MultiPoly::monomial(n, e, RatFunc(rng.rational(5, 3)));
  }
  return f;
}

std::vector<RatFunc> random_point(SplitMix64& rng, int n) {
  std::vector<RatFunc> p;
  for (int i = 0; i < n; ++i) p.emplace_back(rng.rational(7, 3));
  return p;
}

}  // namespace

TEST_CASE("shift acts by translation") {
  auto f = zvar(3, 1);
  auto g = f.shifted_int({1, 0, 0});
  CHECK(g == zvar(3, 1) - MultiPoly::constant(3, RatFunc(1)));

  SplitMix64 rng(7);
  for (int t = 0; t < 10; ++t) {
    MultiPoly h = random_poly(rng, 3, 4, 5);
    CHECK(h.shifted_int({0, 0, 0}) == h);
    std::vector<int> u{static_cast<int>(rng.range(-2, 2)), static_cast<int>(rng.range(-2, 2)),
                       static_cast<int>(rng.range(-2, 2))};
    std::vector<int> v{static_cast<int>(rng.range(-2, 2)), static_cast<int>(rng.range(-2, 2)),
                       static_cast<int>(rng.range(-2, 2))};
    std::vector<int> uv{u[0] + v[0], u[1] + v[1], u[2] + v[2]};
    CHECK(h.shifted_int(u).shifted_int(v) == h.shifted_int(uv));
    CHECK(h.shifted_int(u).degree() == h.degree());
  }
  CHECK_THROWS_AS(f.shifted_int({1, 2}), std::domain_error);
}

TEST_CASE("exact division") {
  auto z1 = zvar(3, 1), z3 = zvar(3, 3);
  CHECK((z1 * z1 - z3 * z3).div_exact(z1 - z3) == z1 + z3);

  SplitMix64 rng(11);
  for (int t = 0; t < 10; ++t) {
    MultiPoly q = random_poly(rng, 3, 3, 4);
    MultiPoly g = random_poly(rng, 3, 2, 3);
    if (g.is_zero()) g = MultiPoly::constant(3, RatFunc(1));
    CHECK((q * g).div_exact(g) == q);
  }

  auto one = MultiPoly::constant(3, RatFunc(1));
  try {
    (z1 + one).div_exact(z1 - one);
    CHECK(false);
  } catch (const DivisionRemainder& e) {
    CHECK(e.remainder_str == "(2)");
  }
}

TEST_CASE("evaluation") {
  int n = 3;
  RatFunc r = RatFunc::r();
  // z1 - z2 + z3 - r vanishes at rho
  MultiPoly f = zvar(n, 1) - zvar(n, 2) + zvar(n, 3) - MultiPoly::constant(n, r);
  CHECK(f.eval(rho(3)).is_zero());
  CHECK(MultiPoly::constant(n, RatFunc(1)).eval(rho(3)) == RatFunc(1));
  CHECK(zvar(n, 2).eval(node_point(3, {1, 1, 0})) == r + RatFunc(1));

  SplitMix64 rng(13);
  for (int t = 0; t < 10; ++t) {
    MultiPoly a = random_poly(rng, 3, 3, 4), b = random_poly(rng, 3, 3, 4);
    auto p = random_point(rng, 3);
    CHECK((a * b).eval(p) == a.eval(p) * b.eval(p));
    CHECK((a + b).eval(p) == a.eval(p) + b.eval(p));
  }
}

TEST_CASE("semisymmetry test") {
  CHECK((zvar(3, 1) + zvar(3, 3)).is_semisymmetric());
  CHECK_FALSE(zvar(3, 1).is_semisymmetric());
  // e_1(z_odd) - e_1(z_even)
  MultiPoly e1 = zvar(4, 1) + zvar(4, 3) - zvar(4, 2) - zvar(4, 4);
  CHECK(e1.is_semisymmetric());
  CHECK_FALSE((zvar(4, 1) + zvar(4, 2)).is_semisymmetric());
}

TEST_CASE("vandermonde division round trip") {
  for (int n : {2, 3, 4, 5}) {
    MultiPoly phi = semisym_vandermonde(n);
    SplitMix64 rng(n);
    MultiPoly f = random_poly(rng, n, 3, 4);
    CHECK(divide_by_vandermonde(phi * f) == f);
  }
  CHECK(semisym_vandermonde(3) == zvar(3, 1) - zvar(3, 3));
}

TEST_CASE("homogeneous structure") {
  MultiPoly f = zvar(2, 1) * zvar(2, 1) + zvar(2, 2);
  CHECK(f.degree() == 2);
  CHECK_FALSE(f.is_homogeneous());
  CHECK(f.top_component() == zvar(2, 1) * zvar(2, 1));
  CHECK(f.homogeneous_component(1) == zvar(2, 2));
  CHECK(f.top_component().is_homogeneous());
  CHECK(f.degree_in_prefix(1) == 2);
  CHECK((zvar(2, 2) * zvar(2, 2)).degree_in_prefix(1) == 0);
}

TEST_CASE("triangular substitution and negation") {
  // z1 -> u1+u2, z2 -> u2, z3 -> u3
  MultiPoly f = zvar(3, 1) - zvar(3, 2) + zvar(3, 3);
  CHECK(f.upper_triangular_substitution() == zvar(3, 1) + zvar(3, 3));
  MultiPoly g = zvar(2, 1) * zvar(2, 1) + zvar(2, 2);
  CHECK(g.negate_vars() == zvar(2, 1) * zvar(2, 1) - zvar(2, 2));
  CHECK(g.restrict_last_zero() == MultiPoly::variable(1, 1) * MultiPoly::variable(1, 1));
}
