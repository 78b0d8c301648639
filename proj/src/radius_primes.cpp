// SPDX-License-Identifier: Apache-2.0
#include "kradius/radius_primes.hpp"

#include <algorithm>
#include <atomic>
#include <cassert>
#include <cstdio>
#include <string>
#include <thread>

namespace kradius::primes {

namespace nt = kradius::numtheory;

bool is_k_radius_prime(u64 p, unsigned k) {
  if (k == 0) throw std::invalid_argument("k must be positive");
  if (p < 3 || (p - 1) % (2 * u64{k}) != 0) return false;
  u64 e = (p - 1) / k;
  assert(e % 2 == 0);
  std::vector<u64> powers(k);
  for (unsigned a = 1; a <= k; ++a) powers[a - 1] = nt::pow_mod(a, e, p);
  std::sort(powers.begin(), powers.end());
  return std::adjacent_find(powers.begin(), powers.end()) == powers.end();
}

namespace {

constexpr u64 kShard = u64{1} << 20;

// Primes in [lo, hi] sharded across threads; f(shard primes) -> per-shard
// result, merged in shard order.
template <class Result, class Fn>
std::vector<Result> sharded(u64 lo, u64 hi, unsigned workers, Fn fn) {
  if (hi < lo) return {};
  u64 shards = (hi - lo) / kShard + 1;
  std::vector<Result> out(shards);
  std::atomic<u64> next{0};
  auto run = [&] {
    for (u64 s = next++; s < shards; s = next++) {
      u64 a = lo + s * kShard;
      u64 b = std::min(hi, a + kShard - 1);
      out[s] = fn(nt::primes_in_range(a, b));
    }
  };
  unsigned n = static_cast<unsigned>(std::clamp<u64>(workers, 1, shards));
  if (n == 1) {
    run();
  } else {
    std::vector<std::thread> pool;
    for (unsigned i = 0; i < n; ++i) pool.emplace_back(run);
    for (auto& t : pool) t.join();
  }
  return out;
}

}  // namespace

std::optional<u64> next_k_radius_prime(u64 n, unsigned k, u64 horizon) {
  if (k == 0) throw std::invalid_argument("k must be positive");
  u64 hi = n + horizon;
  for (u64 lo = n; lo <= hi; lo += kShard) {
    for (auto p : nt::primes_in_range(lo, std::min(hi, lo + kShard - 1)))
      if (is_k_radius_prime(p, k)) return p;
    if (hi - lo < kShard) break;
  }
  return std::nullopt;
}

std::vector<u64> scan_k_radius_primes(unsigned k, u64 limit, unsigned workers) {
  if (k == 0) throw std::invalid_argument("k must be positive");
  auto parts = sharded<std::vector<u64>>(2, limit, workers, [k](const std::vector<u64>& ps) {
    std::vector<u64> hits;
    for (auto p : ps)
      if (is_k_radius_prime(p, k)) hits.push_back(p);
    return hits;
  });
  std::vector<u64> out;
  for (auto& part : parts) out.insert(out.end(), part.begin(), part.end());
  return out;
}

Rational predicted_density(unsigned k, const logs::CountOptions& options) {
  if (k == 0) throw std::invalid_argument("k must be positive");
  auto special = logs::count(k, logs::LogClass::special_km, options);
  Rational c(nt::BigInt(special), nt::BigInt(nt::euler_phi(2 * u64{k})));
  if (k % 2 == 0) c *= nt::BigInt(1) << nt::arithmetic_functions(k / 2).omega;
  nt::BigInt denom = 1;
  auto pi = nt::primes_up_to(k).size();
  for (std::size_t i = 0; i < pi; ++i) denom *= k;
  return c / denom;
}

DensityReport density_scan(unsigned k, u64 limit, unsigned workers,
                           const logs::CountOptions& options) {
  if (limit < 2) throw std::invalid_argument("limit must be at least 2");
  DensityReport r;
  r.k = k;
  r.limit = limit;
  auto parts = sharded<std::pair<u64, u64>>(2, limit, workers, [k](const std::vector<u64>& ps) {
    u64 hits = 0;
    for (auto p : ps) hits += is_k_radius_prime(p, k);
    return std::pair<u64, u64>{ps.size(), hits};
  });
  for (auto [n, h] : parts) {
    r.primes_scanned += n;
    r.hits += h;
  }
  r.observed = static_cast<double>(r.hits) / static_cast<double>(r.primes_scanned);
  if (k <= options.max_k) r.predicted = predicted_density(k, options);
  return r;
}

std::string density_csv_header() { return "k,limit,primes_scanned,hits,observed,predicted"; }

std::string density_csv_row(const DensityReport& r) {
  char obs[32], pred[32] = "";
  std::snprintf(obs, sizeof obs, "%.6g", r.observed);
  if (r.predicted) std::snprintf(pred, sizeof pred, "%.6g", r.predicted->convert_to<double>());
  return std::to_string(r.k) + "," + std::to_string(r.limit) + "," +
         std::to_string(r.primes_scanned) + "," + std::to_string(r.hits) + "," + obs + "," + pred;
}

logs::LogFn induced_log(u64 p, unsigned k) {
  if (!nt::is_prime(p) || (p - 1) % k != 0)
    throw std::invalid_argument("need a prime p = 1 mod k");
  u64 g = nt::primitive_root(p);
  std::vector<unsigned> pv;
  for (auto q : nt::primes_up_to(k))
    pv.push_back(static_cast<unsigned>(nt::discrete_log(g, q, p) % k));
  return logs::eval_vector(k, pv);
}

}  // namespace kradius::primes
