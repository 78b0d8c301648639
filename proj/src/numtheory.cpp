// SPDX-License-Identifier: Apache-2.0
#include "kradius/numtheory.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>
#include <unordered_map>

#include "kradius/error.hpp"

namespace kradius::numtheory {

u64 reduce(i64 a, u64 m) {
  if (m == 0) throw std::invalid_argument("modulus must be positive");
  const i64 sm = static_cast<i64>(m);
  if (sm > 0) {
    i64 r = a % sm;
    return static_cast<u64>(r < 0 ? r + sm : r);
  }
  if (a >= 0) return static_cast<u64>(a) % m;
  const u64 r = (static_cast<u64>(-(a + 1)) + 1) % m;
  return r == 0 ? 0 : m - r;
}

u64 mul_mod(u64 a, u64 b, u64 m) {
  return static_cast<u64>(static_cast<unsigned __int128>(a) * b % m);
}

u64 pow_mod(u64 base, u64 exp, u64 m) {
  if (m == 1) return 0;
  u64 result = 1;
  base %= m;
  while (exp > 0) {
    if (exp & 1) result = mul_mod(result, base, m);
    base = mul_mod(base, base, m);
    exp >>= 1;
  }
  return result;
}

u64 gcd(u64 a, u64 b) {
  while (b != 0) {
    u64 t = a % b;
    a = b;
    b = t;
  }
  return a;
}

u64 mod_inverse(i64 a, u64 m) {
  if (m == 1) return 0;
  i64 old_r = static_cast<i64>(reduce(a, m)), r = static_cast<i64>(m);
  i64 old_s = 1, s = 0;
  while (r != 0) {
    i64 q = old_r / r;
    std::tie(old_r, r) = std::make_pair(r, old_r - q * r);
    std::tie(old_s, s) = std::make_pair(s, old_s - q * s);
  }
  if (old_r != 1) throw NoSolution("no inverse of " + std::to_string(a) + " mod " + std::to_string(m));
  return reduce(old_s, m);
}

namespace {

bool miller_rabin_witness(u64 n, u64 a, u64 d, unsigned s) {
  u64 x = pow_mod(a, d, n);
  if (x == 1 || x == n - 1) return false;
  for (unsigned i = 1; i < s; ++i) {
    x = mul_mod(x, x, n);
    if (x == n - 1) return false;
  }
  return true;
}

}  // namespace

bool is_prime(u64 n) {
  if (n < 2) return false;
  static constexpr u64 kSmall[] = {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37};
  for (u64 p : kSmall) {
    if (n % p == 0) return n == p;
  }
  u64 d = n - 1;
  unsigned s = 0;
  while ((d & 1) == 0) {
    d >>= 1;
    ++s;
  }
  // These twelve bases are a deterministic witness set below 3.3 * 10^24.
  for (u64 a : kSmall) {
    if (miller_rabin_witness(n, a, d, s)) return false;
  }
  return true;
}

std::vector<std::pair<u64, unsigned>> factorize(u64 n) {
  std::vector<std::pair<u64, unsigned>> out;
  if (n < 2) return out;
  auto take = [&](u64 p) {
    unsigned e = 0;
    while (n % p == 0) {
      n /= p;
      ++e;
    }
    if (e > 0) out.emplace_back(p, e);
  };
  take(2);
  take(3);
  for (u64 p = 5; p <= n / p; p += 6) {
    take(p);
    take(p + 2);
  }
  if (n > 1) out.emplace_back(n, 1);
  return out;
}

u64 euler_phi(u64 n) {
  u64 phi = n;
  for (auto [p, e] : factorize(n)) phi = phi / p * (p - 1);
  return phi;
}

std::vector<u64> primes_up_to(u64 n) {
  if (n < 2) return {};
  std::vector<bool> composite(n + 1, false);
  std::vector<u64> out;
  for (u64 i = 2; i <= n; ++i) {
    if (composite[i]) continue;
    out.push_back(i);
    for (u64 j = i * i; j <= n; j += i) composite[j] = true;
  }
  return out;
}

std::vector<u64> primes_in_range(u64 lo, u64 hi) {
  std::vector<u64> out;
  if (hi < 2 || lo > hi) return out;
  lo = std::max<u64>(lo, 2);
  const u64 root = static_cast<u64>(std::sqrt(static_cast<long double>(hi))) + 1;
  const std::vector<u64> base = primes_up_to(root);
  constexpr u64 kSegment = u64{1} << 18;
  std::vector<char> composite;
  for (u64 seg = lo; seg <= hi; seg += kSegment) {
    const u64 seg_hi = std::min(hi, seg + kSegment - 1);
    composite.assign(seg_hi - seg + 1, 0);
    for (u64 p : base) {
      if (p * p > seg_hi) break;
      u64 start = std::max(p * p, (seg + p - 1) / p * p);
      for (u64 j = start; j <= seg_hi; j += p) composite[j - seg] = 1;
    }
    for (u64 i = seg; i <= seg_hi; ++i) {
      if (!composite[i - seg]) out.push_back(i);
    }
    if (seg_hi == hi) break;
  }
  return out;
}

ArithmeticFunctions arithmetic_functions(u64 n) {
  if (n == 0) throw std::invalid_argument("arithmetic_functions: n must be >= 1");
  ArithmeticFunctions out;
  out.phi = euler_phi(n);
  out.omega = static_cast<unsigned>(factorize(n).size());
  out.prime_count = primes_up_to(n).size();
  return out;
}

u64 multiplicative_order(i64 a, u64 n) {
  if (n < 2) throw std::invalid_argument("multiplicative_order: modulus must be >= 2");
  const u64 x = reduce(a, n);
  if (gcd(x, n) != 1) throw std::invalid_argument("multiplicative_order: gcd(a, n) != 1");
  u64 order = euler_phi(n);
  for (auto [p, e] : factorize(order)) {
    for (unsigned i = 0; i < e && pow_mod(x, order / p, n) == 1; ++i) order /= p;
  }
  return order;
}

int legendre(i64 a, u64 p) {
  if (p < 3 || !is_prime(p)) throw std::invalid_argument("legendre: p must be an odd prime");
  const u64 x = reduce(a, p);
  if (x == 0) return 0;
  return pow_mod(x, (p - 1) / 2, p) == 1 ? 1 : -1;
}

u64 primitive_root(u64 p) {
  if (!is_prime(p)) throw std::invalid_argument("primitive_root: p must be prime");
  if (p == 2) return 1;
  const auto factors = factorize(p - 1);
  for (u64 g = 2; g < p; ++g) {
    bool generator = true;
    for (auto [q, e] : factors) {
      if (pow_mod(g, (p - 1) / q, p) == 1) {
        generator = false;
        break;
      }
    }
    if (generator) return g;
  }
  throw std::logic_error("primitive_root: none found");
}

u64 discrete_log(u64 base, u64 target, u64 p) {
  base %= p;
  target %= p;
  if (target == 1) return 0;
  if (base == 0 || target == 0) throw NoSolution("discrete_log: zero residue");
  const u64 order = p - 1;
  const u64 m = static_cast<u64>(std::ceil(std::sqrt(static_cast<long double>(order))));
  std::unordered_map<u64, u64> baby;
  baby.reserve(m * 2);
  u64 cur = 1;
  for (u64 j = 0; j < m; ++j) {
    baby.try_emplace(cur, j);
    cur = mul_mod(cur, base, p);
  }
  const u64 giant = mod_inverse(static_cast<i64>(pow_mod(base, m, p)), p);  // base^{-m}
  u64 gamma = target;
  for (u64 i = 0; i <= m; ++i) {
    if (auto it = baby.find(gamma); it != baby.end()) return i * m + it->second;
    gamma = mul_mod(gamma, giant, p);
  }
  throw NoSolution("discrete_log: " + std::to_string(target) + " not in <" + std::to_string(base) +
                   "> mod " + std::to_string(p));
}

std::vector<u64> smooth_numbers(u64 limit, u64 bound) {
  std::vector<u64> out;
  for (u64 m = 1; m <= limit; ++m) {
    u64 x = m;
    for (u64 q = 2; q <= bound && q <= x; ++q) {
      while (x % q == 0) x /= q;
    }
    if (x == 1) out.push_back(m);
  }
  return out;
}

}  // namespace kradius::numtheory
