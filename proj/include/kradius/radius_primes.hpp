// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "kradius/logarithms.hpp"
#include "kradius/numtheory.hpp"

namespace kradius::primes {

using numtheory::Rational;
using numtheory::u64;

inline constexpr u64 kDefaultHorizon = 10'000'000;

// p = 1 mod 2k and 1^{(p-1)/k}, ..., k^{(p-1)/k} pairwise distinct mod p.
bool is_k_radius_prime(u64 p, unsigned k);

// Smallest k-radius prime in [n, n + horizon], if any.
std::optional<u64> next_k_radius_prime(u64 n, unsigned k, u64 horizon = kDefaultHorizon);

// All k-radius primes <= limit, ascending. The range is sharded across
// `workers` threads; the result does not depend on the worker count.
std::vector<u64> scan_k_radius_primes(unsigned k, u64 limit, unsigned workers = 1);

// Closed-form density c_k of k-radius primes among all primes. Needs the
// exact special-KM count, so k is bounded by the counting budget.
Rational predicted_density(unsigned k, const logs::CountOptions& options = {});

struct DensityReport {
  unsigned k = 0;
  u64 limit = 0;
  u64 primes_scanned = 0;
  u64 hits = 0;
  double observed = 0.0;              // hits / primes_scanned
  std::optional<Rational> predicted;  // absent when k exceeds the counting budget
};

DensityReport density_scan(unsigned k, u64 limit, unsigned workers = 1,
                           const logs::CountOptions& options = {});

// CSV: k,limit,primes_scanned,hits,observed,predicted
std::string density_csv_header();
std::string density_csv_row(const DensityReport& report);

// The length-k function a -> dlog(a^{(p-1)/k}) base alpha^{(p-1)/k}, with
// alpha the smallest primitive root. For a k-radius prime it is a
// special KM-logarithm.
logs::LogFn induced_log(u64 p, unsigned k);

}  // namespace kradius::primes
