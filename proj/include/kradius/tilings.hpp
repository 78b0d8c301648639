// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "kradius/covers.hpp"
#include "kradius/logarithms.hpp"
#include "kradius/numtheory.hpp"
#include "kradius/sequences.hpp"

namespace kradius::tilings {

using numtheory::i64;
using numtheory::u64;
using Point = std::vector<i64>;

// Exponent vectors over the primes <= k of the integers 1..k.
struct Cluster {
  unsigned k = 0;
  std::vector<unsigned> primes;
  std::vector<Point> points;  // points[a - 1] is the vector of a
};

Cluster cluster(unsigned k);

// psi(e_j) = f(q_j), a homomorphism Z^r -> Z_k whose kernel tiles Z^r with
// translates of the cluster.
struct TilingMap {
  unsigned k = 0;
  std::vector<unsigned> primes;
  std::vector<unsigned> psi_values;
  std::vector<Point> inverse_table;  // inverse_table[v] = cluster point with psi = v

  unsigned psi(std::span<const i64> y) const;
};

// Throws NotBijective unless psi is one-to-one on the cluster.
TilingMap tiling_from_log(const logs::LogFn& f);

struct Located {
  Point z;  // in ker psi
  Point c;  // in the cluster
};

Located locate(std::span<const i64> y, const TilingMap& t);

// p = -1 mod 8 q_2 ... q_r: then every prime <= k is a square mod p and -1
// is not.
bool admissible_prime(u64 p, unsigned k);
u64 next_admissible_prime(u64 n, unsigned k);

struct SubgroupCover {
  u64 p = 0;
  unsigned k = 0;
  u64 ell = 0;                       // |H|, H = <q_1, ..., q_r> in Z_p^*
  numtheory::IntBasis kernel;        // reduced basis of the exponent kernel
  std::vector<Point> region;         // one exponent vector per element of H, in the parallelotope
  std::vector<Point> translates;     // W
  std::vector<u64> multipliers;      // distinct phi(z), z in W; their A-blocks cover H
};

// Throws BadPrime unless every q_i is a square mod p and -1 is not.
SubgroupCover subgroup_cover(u64 p, unsigned k, const logs::LogFn& f);

struct TilingReport {
  u64 p = 0;
  unsigned k = 0;
  u64 ell = 0;
  u64 t = 0;  // cosets of H
  u64 w = 0;
  u64 cover_size = 0;
  u64 seq_length = 0;
  double ratio = 0.0;  // seq_length / (C(n, 2) / k), n the final alphabet
};

struct TilingResult {
  covers::CoverPlan plan;
  sequences::RadiusSequence sequence;
  TilingReport report;
};

// Cover of Z_p^* for the smallest admissible prime p >= max(n, 2k+1), turned
// into a verified k-radius sequence over p symbols. With shrink, the
// alphabet is cut down to n.
TilingResult tiling_sequence(u64 n, unsigned k, const logs::LogFn& f, bool shrink = false);

}  // namespace kradius::tilings
