// SPDX-License-Identifier: Apache-2.0
#include <gtest/gtest.h>

#include <random>
#include <set>
#include <sstream>

#include "kradius/error.hpp"
#include "kradius/sequences.hpp"

using namespace kradius::sequences;

namespace {

RadiusSequence make(std::uint64_t n, std::uint64_t k, std::vector<Symbol> s) { return {n, k, std::move(s)}; }

// Independent check: every pair scanned against every position pair.
bool covers_all_pairs(const RadiusSequence& seq) {
  std::set<std::pair<Symbol, Symbol>> seen;
  for (std::size_t i = 0; i < seq.size(); ++i)
    for (std::size_t j = i + 1; j < seq.size() && j <= i + seq.k; ++j) {
      auto a = seq.symbols[i], b = seq.symbols[j];
      if (a != b) seen.insert({std::min(a, b), std::max(a, b)});
    }
  return seen.size() == seq.n * (seq.n - 1) / 2;
}

}  // namespace

TEST(Verify, Examples) {
  EXPECT_TRUE(verify(make(5, 2, {0, 1, 2, 3, 4, 0, 1})).ok);
  EXPECT_TRUE(verify(make(2, 1, {0, 1})).ok);
  auto v = verify(make(3, 1, {0, 1, 2}));
  EXPECT_FALSE(v.ok);
  ASSERT_EQ(v.missing.size(), 1u);
  EXPECT_EQ(v.missing[0], (SymbolPair{0, 2}));
  EXPECT_TRUE(verify(make(1, 3, {})).ok);
}

TEST(Verify, RejectsForeignSymbols) {
  EXPECT_THROW(verify(make(3, 1, {0, 1, 3})), kradius::AlphabetViolation);
}

TEST(Verify, AgreesWithPairScan) {
  std::mt19937 rng(3);
  for (int t = 0; t < 400; ++t) {
    std::uint64_t n = 2 + rng() % 6, k = 1 + rng() % 3;
    std::vector<Symbol> s(rng() % 25);
    for (auto& x : s) x = rng() % n;
    auto seq = make(n, k, s);
    ASSERT_EQ(verify(seq).ok, covers_all_pairs(seq));
  }
}

TEST(LowerBound, Examples) {
  EXPECT_EQ(lower_bound(5, 2), 6u);
  EXPECT_EQ(lower_bound(2, 1), 2u);
  EXPECT_EQ(lower_bound(7, 3), 8u);
}

TEST(Naive, Examples) {
  auto s3 = naive_sequence(3, 1);
  EXPECT_EQ(s3.size(), 6u);
  EXPECT_TRUE(verify(s3).ok);
  EXPECT_EQ(naive_sequence(2, 1).symbols, (std::vector<Symbol>{0, 1}));
  auto s5 = naive_sequence(5, 2);
  EXPECT_EQ(s5.size(), 20u);
  EXPECT_TRUE(verify(s5).ok);
}

TEST(Naive, VerifiesOnGrid) {
  for (std::uint64_t n = 2; n <= 40; ++n)
    for (std::uint64_t k = 1; k <= 10; ++k) {
      auto s = naive_sequence(n, k);
      ASSERT_TRUE(verify(s).ok) << n << "," << k;
      ASSERT_GT(s.size() * k, pair_count(n));
    }
}

TEST(Eulerian, Examples) {
  EXPECT_EQ(one_radius_optimal(3).size(), 4u);
  EXPECT_EQ(one_radius_optimal(4).size(), 8u);
  EXPECT_EQ(one_radius_optimal(2).size(), 2u);
}

TEST(Eulerian, ExactLengthAndAdjacentDistinct) {
  for (std::uint64_t n = 2; n <= 80; ++n) {
    auto s = one_radius_optimal(n);
    std::uint64_t want = pair_count(n) + (n % 2 ? 1 : n / 2);
    ASSERT_EQ(s.size(), want) << n;
    ASSERT_TRUE(covers_all_pairs(s));
    for (std::size_t i = 1; i < s.size(); ++i) ASSERT_NE(s.symbols[i - 1], s.symbols[i]);
  }
}

TEST(Monotone, VerifiedAtLargerRadius) {
  for (std::uint64_t n = 2; n <= 30; ++n) {
    auto s = one_radius_optimal(n);
    for (std::uint64_t k = 2; k <= 4; ++k) {
      s.k = k;
      ASSERT_TRUE(verify(s).ok);
    }
  }
}

TEST(Shrink, Examples) {
  auto five = make(5, 2, {0, 1, 2, 3, 4, 0, 1});
  auto s = shrink_alphabet(five, 1);
  EXPECT_EQ(s.n, 4u);
  EXPECT_LE(s.size(), 5u);
  EXPECT_TRUE(verify(s).ok);
  EXPECT_EQ(s.symbols, (std::vector<Symbol>{0, 1, 2, 3, 0}));  // symbol 0 removed

  auto one = shrink_alphabet(five, 4);
  EXPECT_EQ(one.n, 1u);
  EXPECT_TRUE(verify(one).ok);

  auto n4 = shrink_alphabet(naive_sequence(4, 1), 1);
  EXPECT_EQ(n4.n, 3u);
  EXPECT_LE(n4.size(), 9u);
  EXPECT_TRUE(verify(n4).ok);
}

TEST(Shrink, RejectsUnverified) {
  EXPECT_THROW(shrink_alphabet(make(3, 1, {0, 1, 2}), 1), kradius::NotVerified);
}

TEST(Shrink, LengthBound) {
  for (std::uint64_t n = 3; n <= 25; ++n)
    for (std::uint64_t x = 1; x < n; ++x) {
      auto s = one_radius_optimal(n);
      auto r = shrink_alphabet(s, x);
      ASSERT_TRUE(verify(r).ok);
      // len * n <= (n - x) * len(seq)
      ASSERT_LE(r.size() * n, (n - x) * s.size()) << n << " " << x;
    }
}

TEST(SequenceIo, RoundTrip) {
  auto s = one_radius_optimal(9);
  std::stringstream buf;
  write_sequence(buf, s);
  EXPECT_EQ(read_sequence(buf), s);
}

TEST(SequenceIo, HeaderOverridesAndErrors) {
  std::istringstream a("# comment\n0 1 2 0\n");
  auto s = read_sequence(a, 3, 1);
  EXPECT_EQ(s.size(), 4u);
  EXPECT_TRUE(verify(s).ok);
  std::istringstream b("0 1 2\n");
  EXPECT_THROW(read_sequence(b), kradius::ParseError);
  std::istringstream c("n=3 k=1\n0 x 2\n");
  EXPECT_THROW(read_sequence(c), kradius::ParseError);
}
