// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cstdint>
#include <span>
#include <string_view>

namespace kradius::kernels {

// Byte-lane inner loop of the logarithm search. For a residue table
// `doubled` holding used[x mod k] at every index x in [0, 2k), computes
//
//   out[a] = OR over b in offsets of doubled[b + a],   a in [0, out.size())
//
// i.e. out[a] != 0 iff some value b + a (mod k) is already taken. Offsets
// must be < k, out.size() <= k, and `doubled` must be readable up to index
// 2k + kPadding so vector variants may load past the end.
inline constexpr std::size_t kPadding = 64;

void collision_mask_scalar(std::span<const std::uint8_t> doubled,
                           std::span<const std::uint16_t> offsets,
                           std::span<std::uint8_t> out);

// Only callable when avx2_supported() is true.
void collision_mask_avx2(std::span<const std::uint8_t> doubled,
                         std::span<const std::uint16_t> offsets,
                         std::span<std::uint8_t> out);

bool avx2_supported();

// Runtime-selected variant. KRADIUS_FORCE_SCALAR=1 in the environment pins
// the scalar reference.
void collision_mask(std::span<const std::uint8_t> doubled,
                    std::span<const std::uint16_t> offsets,
                    std::span<std::uint8_t> out);

std::string_view active_variant();

}  // namespace kradius::kernels
