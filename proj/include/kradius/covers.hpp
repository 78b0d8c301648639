// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cstdint>
#include <iosfwd>
#include <vector>

#include "kradius/sequences.hpp"

namespace kradius::covers {

using u64 = std::uint64_t;

// Multipliers D in Z_p^* whose blocks B_{k,p}(d) should cover Z_p^*.
struct CoverPlan {
  u64 p = 0;
  u64 k = 0;
  std::vector<u64> multipliers;
  friend bool operator==(const CoverPlan&, const CoverPlan&) = default;
};

// d * {+-1, ..., +-k}, ascending. Requires d != 0 mod p and p >= 2k + 1.
std::vector<u64> block_B(u64 d, u64 k, u64 p);
// d * {1, ..., k}, ascending.
std::vector<u64> block_A(u64 d, u64 k, u64 p);

struct CoverCheck {
  bool ok = false;
  std::vector<u64> uncovered;
};
CoverCheck verify_cover(const CoverPlan& plan);

// Concatenates p+k consecutive terms of 0, d, 2d, ... for each multiplier,
// phases chained so junction terms coincide and are merged. Length is
// |D|(p+k-1)+1. Throws CoverIncomplete when the plan does not cover.
sequences::RadiusSequence sequence_from_cover(const CoverPlan& plan);

// Radius-2 cover built from the cosets of <2> in Z_p^*, p >= 5.
CoverPlan two_radius_cover(u64 p);

// Disjoint cover {alpha^{ki} : 0 <= i < (p-1)/2k} for a k-radius prime p.
// Throws NotKRadiusPrime otherwise.
CoverPlan prime_cover(u64 p, u64 k);

// "p=<int> k=<int>" then one residue per line.
void write_cover(std::ostream& out, const CoverPlan& plan);
CoverPlan read_cover(std::istream& in);

}  // namespace kradius::covers
