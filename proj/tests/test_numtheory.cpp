// SPDX-License-Identifier: Apache-2.0
#include <gtest/gtest.h>

#include <random>

#include "kradius/error.hpp"
#include "kradius/numtheory.hpp"

using namespace kradius::numtheory;

namespace {

bool prime_by_trial(u64 n) {
  if (n < 2) return false;
  for (u64 d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

u64 order_by_powering(u64 a, u64 n) {
  u64 x = a % n, e = 1;
  while (x != 1 % n) {
    x = x * a % n;
    ++e;
  }
  return e;
}

}  // namespace

TEST(Primality, SmallValues) {
  EXPECT_TRUE(is_prime(2));
  EXPECT_FALSE(is_prime(1));
  EXPECT_FALSE(is_prime(0));
  EXPECT_TRUE(is_prime(239));
}

TEST(Primality, AgreesWithTrialDivision) {
  for (u64 n = 0; n < 20000; ++n) ASSERT_EQ(is_prime(n), prime_by_trial(n)) << n;
}

TEST(Primality, LargeKnownValues) {
  EXPECT_TRUE(is_prime(18446744073709551557ull));  // largest 64-bit prime
  EXPECT_FALSE(is_prime(3215031751ull));           // strong pseudoprime to 2,3,5,7
  EXPECT_FALSE(is_prime(4294967297ull));           // 641 * 6700417
  EXPECT_TRUE(is_prime(1000000007ull));
}

TEST(Sieve, SegmentedMatchesPlain) {
  auto all = primes_up_to(300000);
  std::vector<u64> seg = primes_in_range(0, 300000);
  EXPECT_EQ(all, seg);
  auto mid = primes_in_range(123456, 234567);
  std::vector<u64> want;
  for (auto p : all)
    if (p >= 123456 && p <= 234567) want.push_back(p);
  EXPECT_EQ(mid, want);
}

TEST(ArithmeticFunctions, Examples) {
  auto a = arithmetic_functions(10);
  EXPECT_EQ(a.phi, 4u);
  EXPECT_EQ(a.omega, 2u);
  EXPECT_EQ(a.prime_count, 4u);
  auto b = arithmetic_functions(1);
  EXPECT_EQ(b.phi, 1u);
  EXPECT_EQ(b.omega, 0u);
  EXPECT_EQ(b.prime_count, 0u);
  auto c = arithmetic_functions(12);
  EXPECT_EQ(c.phi, 4u);
  EXPECT_EQ(c.omega, 2u);
  EXPECT_EQ(c.prime_count, 5u);
}

TEST(ArithmeticFunctions, PhiMatchesGcdCount) {
  for (u64 n = 1; n <= 500; ++n) {
    u64 cnt = 0;
    for (u64 a = 1; a <= n; ++a) cnt += gcd(a, n) == 1;
    ASSERT_EQ(euler_phi(n), cnt) << n;
  }
}

TEST(Orders, Examples) {
  EXPECT_EQ(multiplicative_order(2, 7), 3u);
  EXPECT_EQ(multiplicative_order(1, 5), 1u);
  EXPECT_EQ(multiplicative_order(2, 5), 4u);
  EXPECT_THROW(multiplicative_order(2, 8), std::invalid_argument);
}

TEST(Orders, MatchPowering) {
  for (u64 n = 2; n <= 120; ++n)
    for (u64 a = 1; a < n; ++a)
      if (gcd(a, n) == 1) ASSERT_EQ(multiplicative_order(a, n), order_by_powering(a, n));
}

TEST(Legendre, Examples) {
  EXPECT_EQ(legendre(2, 5), -1);
  EXPECT_EQ(legendre(0, 7), 0);
  EXPECT_EQ(legendre(-1, 239), -1);
  EXPECT_THROW(legendre(3, 9), std::invalid_argument);
  EXPECT_THROW(legendre(3, 2), std::invalid_argument);
}

TEST(Legendre, EulerCriterion) {
  for (auto p : primes_up_to(400)) {
    if (p == 2) continue;
    for (i64 a = -20; a < 60; ++a) {
      if (reduce(a, p) == 0) continue;
      u64 e = pow_mod(reduce(a, p), (p - 1) / 2, p);
      ASSERT_EQ(legendre(a, p), e == 1 ? 1 : -1) << a << " mod " << p;
    }
  }
}

TEST(PrimitiveRoot, Examples) {
  EXPECT_EQ(primitive_root(13), 2u);
  EXPECT_EQ(primitive_root(2), 1u);
  EXPECT_EQ(primitive_root(7), 3u);
}

TEST(PrimitiveRoot, FullOrderAndSmallest) {
  for (auto p : primes_up_to(10000)) {
    if (p == 2) continue;
    u64 g = primitive_root(p);
    ASSERT_EQ(multiplicative_order(g, p), p - 1) << p;
    if (p < 2000)
      for (u64 a = 2; a < g; ++a) ASSERT_LT(multiplicative_order(a, p), p - 1);
  }
}

TEST(DiscreteLog, Examples) {
  EXPECT_EQ(discrete_log(2, 3, 13), 4u);
  EXPECT_EQ(discrete_log(2, 1, 13), 0u);
  EXPECT_EQ(discrete_log(2, 11, 13), 7u);
  EXPECT_THROW(discrete_log(4, 2, 13), kradius::NoSolution);
}

TEST(DiscreteLog, RoundTrip) {
  std::mt19937_64 rng(7);
  for (auto p : {101ull, 239ull, 7919ull, 1000003ull, 998244353ull}) {
    u64 g = primitive_root(p);
    for (int i = 0; i < 50; ++i) {
      u64 t = 1 + rng() % (p - 1);
      u64 x = discrete_log(g, t, p);
      ASSERT_LT(x, p - 1);
      ASSERT_EQ(pow_mod(g, x, p), t);
    }
  }
}

TEST(Modular, ReduceAndInverse) {
  EXPECT_EQ(reduce(-1, 7), 6u);
  EXPECT_EQ(reduce(-14, 7), 0u);
  EXPECT_EQ(reduce(15, 7), 1u);
  for (u64 m = 2; m < 60; ++m)
    for (i64 a = -30; a < 30; ++a)
      if (gcd(reduce(a, m), m) == 1) ASSERT_EQ(mul_mod(reduce(a, m), mod_inverse(a, m), m), 1u);
  EXPECT_THROW(mod_inverse(4, 8), kradius::NoSolution);
}

TEST(Smooth, Examples) {
  EXPECT_EQ(smooth_numbers(10, 2), (std::vector<u64>{1, 2, 4, 8}));
  EXPECT_EQ(smooth_numbers(10, 3), (std::vector<u64>{1, 2, 3, 4, 6, 8, 9}));
  EXPECT_EQ(smooth_numbers(42, 1), (std::vector<u64>{1}));
}

TEST(Smooth, MatchesFactorization) {
  for (u64 bound : {2, 3, 5, 7, 11}) {
    std::vector<u64> want;
    for (u64 n = 1; n <= 1000; ++n) {
      bool ok = true;
      for (auto [q, e] : factorize(n)) ok = ok && q <= bound;
      if (ok) want.push_back(n);
    }
    ASSERT_EQ(smooth_numbers(1000, bound), want);
  }
}
