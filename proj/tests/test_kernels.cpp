// SPDX-License-Identifier: Apache-2.0
#include <gtest/gtest.h>

#include <random>

#include "kradius/kernels.hpp"

using namespace kradius::kernels;

namespace {

std::vector<std::uint8_t> doubled_table(const std::vector<std::uint8_t>& used) {
  std::size_t k = used.size();
  std::vector<std::uint8_t> d(2 * k + kPadding, 0);
  for (std::size_t x = 0; x < 2 * k; ++x) d[x] = used[x % k];
  return d;
}

std::vector<std::uint8_t> by_definition(const std::vector<std::uint8_t>& used,
                                        const std::vector<std::uint16_t>& offsets, std::size_t len) {
  std::vector<std::uint8_t> out(len, 0);
  for (std::size_t a = 0; a < len; ++a)
    for (auto b : offsets) out[a] |= used[(b + a) % used.size()];
  return out;
}

}  // namespace

TEST(CollisionMask, ScalarMatchesDefinition) {
  std::mt19937 rng(1);
  for (int t = 0; t < 300; ++t) {
    std::size_t k = 1 + rng() % 300;
    std::vector<std::uint8_t> used(k);
    for (auto& u : used) u = rng() % 3 == 0;
    std::vector<std::uint16_t> offs(rng() % 8);
    for (auto& o : offs) o = static_cast<std::uint16_t>(rng() % k);
    auto d = doubled_table(used);
    std::size_t len = 1 + rng() % k;
    std::vector<std::uint8_t> out(len, 0);
    collision_mask_scalar(d, offs, out);
    auto want = by_definition(used, offs, len);
    for (std::size_t a = 0; a < len; ++a) ASSERT_EQ(out[a] != 0, want[a] != 0);
  }
}

TEST(CollisionMask, Avx2MatchesScalar) {
  if (!avx2_supported()) GTEST_SKIP() << "no AVX2 on this machine";
  std::mt19937 rng(2);
  for (int t = 0; t < 2000; ++t) {
    std::size_t k = 1 + rng() % 400;
    std::vector<std::uint8_t> used(k);
    for (auto& u : used) u = rng() % 4 == 0;
    std::vector<std::uint16_t> offs(rng() % 10);
    for (auto& o : offs) o = static_cast<std::uint16_t>(rng() % k);
    auto d = doubled_table(used);
    std::size_t len = 1 + rng() % k;
    std::vector<std::uint8_t> a(len, 0), b(len, 0);
    collision_mask_scalar(d, offs, a);
    collision_mask_avx2(d, offs, b);
    for (std::size_t i = 0; i < len; ++i) ASSERT_EQ(a[i] != 0, b[i] != 0) << "k=" << k << " a=" << i;
  }
}

TEST(CollisionMask, DispatchReportsVariant) {
  auto v = active_variant();
  EXPECT_TRUE(v == "avx2" || v == "scalar");
  if (!avx2_supported()) EXPECT_EQ(v, "scalar");
}
