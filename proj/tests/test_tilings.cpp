// SPDX-License-Identifier: Apache-2.0
#include <gtest/gtest.h>

#include <cmath>
#include <map>
#include <set>

#include "kradius/covers.hpp"
#include "kradius/error.hpp"
#include "kradius/tilings.hpp"

using namespace kradius;
using namespace kradius::tilings;

namespace {

logs::LogFn first_log(unsigned k) { return *logs::search(k, logs::LogClass::logarithm); }

u64 eval_point(const Point& v, const std::vector<unsigned>& primes, u64 p) {
  u64 x = 1;
  for (std::size_t i = 0; i < v.size(); ++i) {
    u64 base = v[i] >= 0 ? primes[i] : numtheory::mod_inverse(primes[i], p);
    for (i64 e = 0; e < std::abs(v[i]); ++e) x = x * base % p;
  }
  return x;
}

}  // namespace

TEST(Cluster, Examples) {
  auto c2 = cluster(2);
  EXPECT_EQ(c2.points, (std::vector<Point>{{0}, {1}}));
  auto c4 = cluster(4);
  std::set<Point> s(c4.points.begin(), c4.points.end());
  EXPECT_EQ(s, (std::set<Point>{{0, 0}, {1, 0}, {2, 0}, {0, 1}}));
}

TEST(Cluster, SizeAndDownwardClosed) {
  for (unsigned k = 1; k <= 100; ++k) {
    auto c = cluster(k);
    ASSERT_EQ(c.points.size(), k);
    std::set<Point> s(c.points.begin(), c.points.end());
    ASSERT_EQ(s.size(), k);
    for (auto& pt : c.points)
      for (std::size_t j = 0; j < pt.size(); ++j)
        if (pt[j] > 0) {
          auto q = pt;
          --q[j];
          ASSERT_TRUE(s.count(q));
        }
  }
}

TEST(TilingMap, Examples) {
  std::vector<unsigned> v4{1, 3};
  auto t4 = tiling_from_log(logs::eval_vector(4, v4));
  EXPECT_EQ(t4.psi(Point{2, 0}), 2u);
  EXPECT_EQ(t4.psi(Point{0, 1}), 3u);
  std::vector<unsigned> v2{1};
  EXPECT_NO_THROW(tiling_from_log(logs::eval_vector(2, v2)));
  EXPECT_NO_THROW(tiling_from_log(*logs::log_from_safe_prime(6)));
  std::vector<unsigned> bad{1, 2};
  EXPECT_THROW(tiling_from_log(logs::eval_vector(4, bad)), NotBijective);
}

TEST(Locate, Examples) {
  std::vector<unsigned> v4{1, 3};
  auto t = tiling_from_log(logs::eval_vector(4, v4));
  auto a = locate(Point{3, 1}, t);
  EXPECT_EQ(a.c, (Point{2, 0}));
  EXPECT_EQ(a.z, (Point{1, 1}));
  EXPECT_EQ(t.psi(a.z), 0u);
  auto b = locate(Point{0, 1}, t);
  EXPECT_EQ(b.z, (Point{0, 0}));
  auto c = locate(Point{3 + 4, 1}, t);  // shift by (4,0) in ker psi
  EXPECT_EQ(c.c, a.c);
  EXPECT_EQ(c.z, (Point{5, 1}));
}

TEST(Locate, BoxCertificate) {
  for (unsigned k = 2; k <= 10; ++k) {
    auto t = tiling_from_log(first_log(k));
    auto cl = cluster(k);
    std::set<Point> cells(cl.points.begin(), cl.points.end());
    std::size_t r = t.primes.size();
    std::map<Point, std::set<Point>> tiles;
    Point y(r, -3);
    while (true) {
      auto loc = locate(y, t);
      ASSERT_EQ(t.psi(loc.z), 0u);
      ASSERT_TRUE(cells.count(loc.c));
      for (std::size_t j = 0; j < r; ++j) ASSERT_EQ(loc.z[j] + loc.c[j], y[j]);
      ASSERT_TRUE(tiles[loc.z].insert(loc.c).second);
      std::size_t j = 0;
      while (j < r && ++y[j] > 3) y[j++] = -3;
      if (j == r) break;
    }
  }
}

TEST(Admissible, Primes) {
  EXPECT_TRUE(admissible_prime(239, 6));
  EXPECT_EQ(next_admissible_prime(200, 6), 239u);
  EXPECT_EQ(next_admissible_prime(2, 2), 7u);
  EXPECT_EQ(next_admissible_prime(2, 1), 7u);
  for (unsigned k = 1; k <= 12; ++k) {
    u64 p = next_admissible_prime(30, k);
    ASSERT_EQ(numtheory::legendre(-1, p), -1);
    for (auto q : numtheory::primes_up_to(k)) ASSERT_EQ(numtheory::legendre(q, p), 1);
  }
}

TEST(SubgroupCover, SmallExamples) {
  std::vector<unsigned> v2{1};
  auto sc = subgroup_cover(7, 2, logs::eval_vector(2, v2));
  EXPECT_EQ(sc.ell, 3u);
  std::set<u64> covered;
  for (auto d : sc.multipliers)
    for (auto x : covers::block_A(d, 2, 7)) covered.insert(x);
  for (u64 h : {1, 2, 4}) EXPECT_TRUE(covered.count(h));
  EXPECT_THROW(subgroup_cover(13, 2, logs::eval_vector(2, v2)), BadPrime);
  EXPECT_THROW(subgroup_cover(5, 2, logs::eval_vector(2, v2)), BadPrime);
}

TEST(SubgroupCover, Invariants) {
  for (unsigned k = 2; k <= 10; ++k) {
    auto f = first_log(k);
    for (u64 start : {50ull, 400ull, 3000ull}) {
      u64 p = next_admissible_prime(start, k);
      auto sc = subgroup_cover(p, k, f);
      auto primes = f.primes;
      // H by closure
      std::set<u64> H{1};
      std::vector<u64> todo{1};
      while (!todo.empty()) {
        u64 h = todo.back();
        todo.pop_back();
        for (auto q : primes)
          if (H.insert(h * q % p).second) todo.push_back(h * q % p);
      }
      ASSERT_EQ(sc.ell, H.size());
      ASSERT_EQ(sc.region.size(), sc.ell);
      auto det = sc.kernel.determinant();
      ASSERT_EQ(det < 0 ? -det : det, numtheory::BigInt(sc.ell));
      // region points lie in the half-open parallelotope and hit each element once
      auto inv = sc.kernel.inverse();
      std::set<u64> images;
      for (auto& y : sc.region) {
        for (std::size_t i = 0; i < y.size(); ++i) {
          numtheory::Rational a = 0;
          for (std::size_t j = 0; j < y.size(); ++j) a += numtheory::Rational(y[j]) * inv[j][i];
          ASSERT_GE(a, 0);
          ASSERT_LT(a, 1);
        }
        images.insert(eval_point(y, primes, p));
      }
      ASSERT_EQ(images, H);
      // A-blocks of the multipliers cover H
      std::set<u64> covered;
      for (auto d : sc.multipliers)
        for (auto x : covers::block_A(d, k, p)) covered.insert(x);
      for (auto h : H) ASSERT_TRUE(covered.count(h)) << "k=" << k << " p=" << p;
      // reduced basis bound
      double prod = 1;
      for (auto& row : sc.kernel.rows()) prod *= numtheory::euclidean_norm(row);
      double r = static_cast<double>(primes.size());
      ASSERT_LE(prod, std::pow(2.0, r * (r - 1) / 4) * sc.ell * (1 + 1e-9));
      ASSERT_LE(sc.multipliers.size(), sc.translates.size());
    }
  }
}

TEST(TilingSequence, FullCoverAndVerified) {
  for (unsigned k = 1; k <= 8; ++k) {
    auto f = first_log(k);
    for (u64 n : {20ull, 150ull}) {
      auto res = tiling_sequence(n, k, f);
      ASSERT_TRUE(covers::verify_cover(res.plan).ok);
      ASSERT_TRUE(sequences::verify(res.sequence).ok);
      ASSERT_EQ(res.sequence.n, res.report.p);
      ASSERT_EQ(res.report.seq_length, res.plan.multipliers.size() * (res.report.p + k - 1) + 1);
      ASSERT_GT(res.report.seq_length * k, sequences::pair_count(res.report.p));
      ASSERT_EQ(res.report.t * res.report.ell, res.report.p - 1);
    }
  }
}

TEST(TilingSequence, ShrinkToRequestedAlphabet) {
  auto res = tiling_sequence(100, 3, first_log(3), true);
  EXPECT_EQ(res.sequence.n, 100u);
  EXPECT_TRUE(sequences::verify(res.sequence).ok);
}

TEST(TilingSequence, OneRadiusIsOptimalLength) {
  auto res = tiling_sequence(100, 1, first_log(1));
  u64 p = res.report.p;
  EXPECT_EQ(res.report.ell, 1u);
  EXPECT_EQ(res.sequence.size(), sequences::pair_count(p) + 1);
}

TEST(TilingSequence, TwoRadiusAgainstCosetConstruction) {
  std::vector<unsigned> v2{1};
  auto f = logs::eval_vector(2, v2);
  for (u64 n : {7ull, 40ull, 100ull, 300ull}) {
    auto res = tiling_sequence(n, 2, f);
    u64 p = res.report.p;
    auto direct = covers::two_radius_cover(p);
    // H = <2> has odd order here, so both routes use (t/2)(l+1)/2 blocks
    EXPECT_EQ(res.report.ell % 2, 1u);
    EXPECT_EQ(res.plan.multipliers.size(), direct.multipliers.size()) << p;
  }
}
