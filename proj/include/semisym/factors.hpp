#pragma once

#include <set>
#include <string>
#include <vector>

#include "partition.hpp"

namespace semisym {

// x (x+1) ... (x+m-1)
inline RatFunc rising_factorial(const RatFunc& x, int m) {
  RatFunc acc(1);
  for (int k = 0; k < m; ++k) acc *= x + RatFunc(k);
  return acc;
}

// binomial coefficient with an arbitrary field element on top
inline RatFunc binom(const RatFunc& x, int k) {
  if (k < 0) return RatFunc();
  RatFunc acc(1);
  for (int j = 0; j < k; ++j) acc *= (x - RatFunc(j)) / RatFunc(j + 1);
  return acc;
}

inline Rational binom_int(int n, int k) {
  if (k < 0 || k > n) return Rational(0);
  Int num = 1, den = 1;
  for (int j = 0; j < k; ++j) {
    num *= n - j;
    den *= j + 1;
  }
  return make_rational(num, den);
}

// product over boxes with even leg length of (arm + 1 + leg * r); the value of
// the monic interpolation polynomial at its own node
inline RatFunc cprime_even(const IntVec& lam) {
  RatFunc acc(1);
  for (int i = 1; i <= static_cast<int>(lam.size()); ++i)
    for (int j = 1; j <= lam[i - 1]; ++j) {
      int l = leg(lam, i, j);
      if (l % 2 == 0) acc *= RatFunc(arm(lam, i, j) + 1) + RatFunc(l) * RatFunc::r();
    }
  return acc;
}

// product over boxes with odd leg length of (arm + (leg + 1) * r); clears the
// conjectured denominators
inline RatFunc c_even(const IntVec& lam) {
  RatFunc acc(1);
  for (int i = 1; i <= static_cast<int>(lam.size()); ++i)
    for (int j = 1; j <= lam[i - 1]; ++j) {
      int l = leg(lam, i, j);
      if (l % 2 == 1) acc *= RatFunc(arm(lam, i, j)) + RatFunc(l + 1) * RatFunc::r();
    }
  return acc;
}

struct EvalFactors {
  RatFunc A, B;
};

// The two factors of the principal evaluation. Each is computed from both of
// its displayed product forms; a mismatch signals a broken invariant.
inline EvalFactors eval_factors(IntVec lam, const Rational& alpha, int n) {
  if (static_cast<int>(lam.size()) > n)
    throw std::domain_error("eval_factors: partition longer than n");
  lam.resize(n, 0);
  const RatFunc r = RatFunc::r();
  const RatFunc a(alpha);

  RatFunc A_rows(1);
  for (int i = 1; i <= n; ++i)
    if ((n - i) % 2 == 0) A_rows *= rising_factorial(a + RatFunc(n - i) * r, lam[i - 1]);

  RatFunc A_boxes(1);
  for (int i = 1; i <= n; ++i)
    for (int j = 1; j <= lam[i - 1]; ++j) {
      int lc = leg_colength(i, j);
      if ((n - lc) % 2 == 1)
        A_boxes *= a + RatFunc(arm_colength(i, j)) + RatFunc(n - lc - 1) * r;
    }
  if (A_rows != A_boxes)
    throw std::runtime_error("eval_factors: the two forms of A disagree at " +
                             partition_str(lam));

  RatFunc B_rows(1);
  for (int i = 1; i <= n; ++i)
    for (int j = i + 1; j <= n; ++j) {
      int diff = lam[i - 1] - lam[j - 1];
      if ((j - i) % 2 == 1)
        B_rows *= rising_factorial(RatFunc(j - i + 1) * r, diff);
      else
        B_rows /= rising_factorial(RatFunc(j - i) * r, diff);
    }

  RatFunc B_boxes(1);
  for (int i = 1; i <= n; ++i)
    for (int j = 1; j <= lam[i - 1]; ++j) {
      int lc = leg_colength(i, j), l = leg(lam, i, j);
      if ((n - lc) % 2 == 0) B_boxes *= RatFunc(arm_colength(i, j)) + RatFunc(n - lc) * r;
      if (l % 2 == 1) B_boxes /= RatFunc(arm(lam, i, j)) + RatFunc(l + 1) * r;
    }
  if (B_rows != B_boxes)
    throw std::runtime_error("eval_factors: the two forms of B disagree at " +
                             partition_str(lam));

  return {A_rows, B_rows};
}

// Pieri coefficient for lambda = mu + indicator(I). Zero when lambda is not a
// partition. Computed from the index-pair form and, when available, checked
// against the box form over the column-strip boxes.
inline RatFunc pieri_psi_even(const IntVec& mu, unsigned mask, int n) {
  IntVec lam = mu;
  for (int i = 1; i <= n; ++i)
    if ((mask >> (i - 1)) & 1u) lam[i - 1] += 1;

  const RatFunc r = RatFunc::r();
  RatFunc pairs(1);
  for (int i = 1; i <= n; ++i) {
    if ((mask >> (i - 1)) & 1u) continue;
    for (int j = i + 1; j <= n; ++j) {
      if (!((mask >> (j - 1)) & 1u)) continue;
      if ((j - i) % 2 == 1) {
        pairs *= RatFunc(mu[i - 1] - mu[j - 1]) + RatFunc(j - i - 1) * r;
        pairs *= RatFunc(lam[i - 1] - lam[j - 1]) + RatFunc(j - i + 1) * r;
      } else {
        pairs /= RatFunc(mu[i - 1] - mu[j - 1]) + RatFunc(j - i) * r;
        pairs /= RatFunc(lam[i - 1] - lam[j - 1]) + RatFunc(j - i) * r;
      }
    }
  }

  if (!is_partition(lam)) {
    if (!pairs.is_zero())
      throw std::runtime_error("pieri_psi_even: expected vanishing coefficient at " +
                               partition_str(mu));
    return RatFunc();
  }

  // box form over boxes of mu in a column of lambda\mu but not in a row of it
  auto b_even = [&r](const IntVec& shape, int i, int j) {
    int l = leg(shape, i, j);
    RatFunc v;
    if (l % 2 == 1)
      v = RatFunc(arm(shape, i, j)) + RatFunc(l + 1) * r;
    else
      v = RatFunc(1) / (RatFunc(arm(shape, i, j) + 1) + RatFunc(l) * r);
    return v;
  };
  std::set<int> cols;  // columns met by the strip; each box enters the set once
  for (int k = 1; k <= n; ++k)
    if ((mask >> (k - 1)) & 1u) cols.insert(mu[k - 1] + 1);
  RatFunc boxes(1);
  for (int i = 1; i <= n; ++i) {
    if ((mask >> (i - 1)) & 1u) continue;  // rows of the strip are excluded
    for (int col : cols)
      if (col <= mu[i - 1]) boxes *= b_even(lam, i, col) / b_even(mu, i, col);
  }
  if (pairs != boxes)
    throw std::runtime_error("pieri_psi_even: index-pair and box forms disagree at " +
                             partition_str(mu) + " mask=" + std::to_string(mask));
  return pairs;
}

}  // namespace semisym
