// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <span>
#include <string_view>
#include <vector>

namespace kradius::logs {

enum class LogClass { logarithm, km, special_km };

std::string_view to_string(LogClass cls);
// Accepts "log", "km", "special" (and the enum spellings).
std::optional<LogClass> parse_log_class(std::string_view text);

// A logarithmic function of length k: f(ab) = f(a) + f(b) in Z_k whenever
// ab <= k. Determined by its values at the primes q_1 < ... < q_r <= k.
struct LogFn {
  unsigned k = 0;
  std::vector<unsigned> primes;
  std::vector<unsigned> prime_values;  // f(q_i), same order as primes
  std::vector<unsigned> full;          // full[a - 1] = f(a)

  unsigned operator()(unsigned a) const { return full[a - 1]; }
  unsigned at_prime(unsigned q) const;
  friend bool operator==(const LogFn&, const LogFn&) = default;
};

// Builds v_f = sum_i a_i e_i. prime_values holds one value per prime <= k,
// ascending prime order; values are reduced mod k.
LogFn eval_vector(unsigned k, std::span<const unsigned> prime_values);

struct Classification {
  bool logarithm = false;
  bool km = false;
  bool special_km = false;
  bool has(LogClass cls) const;
};

Classification classify(const LogFn& f);

// Whether the class requires f(m) to be even (k even only):
//   special: m | k/2;  km: m | k, m = 1 mod 4 when k = 2 mod 4, else m | k/4.
bool parity_required(unsigned k, LogClass cls, unsigned m);

struct BlockPartition {
  unsigned k = 0;
  std::vector<std::vector<unsigned>> blocks;  // ordered by smallest prime
  friend bool operator==(const BlockPartition&, const BlockPartition&) = default;
};

// Primes <= sqrt(k) (and always 2) are singletons; the rest are grouped by
// l = floor(k/q). For km/special, primes dividing k are also singletons.
BlockPartition blocks(unsigned k, LogClass cls);

// Lexicographically first canonical representative of the class (values
// assigned in ascending prime order), or nullopt if the class is empty.
std::optional<LogFn> search(unsigned k, LogClass cls);

struct CountOptions {
  unsigned max_k = 42;
  unsigned workers = 1;
};

struct CountResult {
  std::uint64_t total = 0;
  std::uint64_t representatives = 0;
  // Representatives whose singleton-prime values are not moved freely by the
  // stabilizer of f(2) in Z_k^*. Expected to stay zero.
  std::uint64_t scaling_check_failures = 0;
};

// Exact number of logarithms of the class. Throws BudgetExceeded when
// k > options.max_k. The result does not depend on options.workers.
CountResult count_detailed(unsigned k, LogClass cls, const CountOptions& options = {});
std::uint64_t count(unsigned k, LogClass cls, const CountOptions& options = {});

// Discrete-log construction: 2k+1 prime (reduce mod k) is tried first, then
// k+1 prime. nullopt if neither is prime.
std::optional<LogFn> log_from_safe_prime(unsigned k);

struct ImageStats {
  unsigned max_image = 0;             // M_k
  unsigned max_smooth_injective = 0;  // R_k
};

// Throws BudgetExceeded when k > max_k.
ImageStats image_stats(unsigned k, unsigned max_k = 20);

// "k=<int>" then "q=<prime> f=<value>" lines.
void write_logfn(std::ostream& out, const LogFn& f);
LogFn read_logfn(std::istream& in);

}  // namespace kradius::logs
