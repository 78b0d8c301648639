// SPDX-License-Identifier: Apache-2.0
#include "kradius/kernels.hpp"

#include <algorithm>
#include <cstdlib>
#include <cstring>

#if defined(__x86_64__) || defined(__i386__)
#include <immintrin.h>
#define KRADIUS_HAVE_X86 1
#endif

namespace kradius::kernels {

void collision_mask_scalar(std::span<const std::uint8_t> doubled,
                           std::span<const std::uint16_t> offsets,
                           std::span<std::uint8_t> out) {
  std::memset(out.data(), 0, out.size());
  for (std::uint16_t b : offsets) {
    const std::uint8_t* row = doubled.data() + b;
    for (std::size_t a = 0; a < out.size(); ++a) out[a] |= row[a];
  }
}

#ifdef KRADIUS_HAVE_X86

__attribute__((target("avx2"))) void collision_mask_avx2(std::span<const std::uint8_t> doubled,
                                                         std::span<const std::uint16_t> offsets,
                                                         std::span<std::uint8_t> out) {
  const std::size_t n = out.size();
  const std::uint8_t* base = doubled.data();
  // 64 lanes per pass, so k <= 64 needs a single sweep over the offsets.
  for (std::size_t a = 0; a < n; a += 64) {
    __m256i acc0 = _mm256_setzero_si256();
    __m256i acc1 = _mm256_setzero_si256();
    for (std::uint16_t b : offsets) {
      const std::uint8_t* row = base + b + a;
      acc0 = _mm256_or_si256(acc0, _mm256_loadu_si256(reinterpret_cast<const __m256i*>(row)));
      acc1 = _mm256_or_si256(acc1, _mm256_loadu_si256(reinterpret_cast<const __m256i*>(row + 32)));
    }
    alignas(32) std::uint8_t buf[64];
    _mm256_store_si256(reinterpret_cast<__m256i*>(buf), acc0);
    _mm256_store_si256(reinterpret_cast<__m256i*>(buf + 32), acc1);
    std::memcpy(out.data() + a, buf, std::min<std::size_t>(64, n - a));
  }
}

bool avx2_supported() { return __builtin_cpu_supports("avx2"); }

#else

void collision_mask_avx2(std::span<const std::uint8_t> doubled,
                         std::span<const std::uint16_t> offsets,
                         std::span<std::uint8_t> out) {
  collision_mask_scalar(doubled, offsets, out);
}

bool avx2_supported() { return false; }

#endif

namespace {

using Kernel = void (*)(std::span<const std::uint8_t>, std::span<const std::uint16_t>,
                        std::span<std::uint8_t>);

struct Dispatch {
  Kernel fn;
  std::string_view name;
};

Dispatch select() {
  const char* force = std::getenv("KRADIUS_FORCE_SCALAR");
  if ((force == nullptr || force[0] == '0') && avx2_supported()) return {collision_mask_avx2, "avx2"};
  return {collision_mask_scalar, "scalar"};
}

const Dispatch& dispatch() {
  static const Dispatch d = select();
  return d;
}

}  // namespace

void collision_mask(std::span<const std::uint8_t> doubled,
                    std::span<const std::uint16_t> offsets,
                    std::span<std::uint8_t> out) {
  dispatch().fn(doubled, offsets, out);
}

std::string_view active_variant() { return dispatch().name; }

}  // namespace kradius::kernels
