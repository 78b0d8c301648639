// SPDX-License-Identifier: Apache-2.0
#include "kradius/covers.hpp"

#include <algorithm>
#include <istream>
#include <ostream>
#include <sstream>
#include <stdexcept>
#include <string>

#include "kradius/error.hpp"
#include "kradius/numtheory.hpp"
#include "kradius/radius_primes.hpp"

namespace kradius::covers {

using numtheory::mul_mod;

namespace {

void check_block_args(u64 d, u64 k, u64 p) {
  if (k == 0) throw std::invalid_argument("block: k must be >= 1");
  if (p < 2 * k + 1) throw std::invalid_argument("block: need p >= 2k+1");
  if (d % p == 0) throw std::invalid_argument("block: multiplier must be a unit");
}

}  // namespace

std::vector<u64> block_A(u64 d, u64 k, u64 p) {
  check_block_args(d, k, p);
  std::vector<u64> out;
  out.reserve(k);
  for (u64 i = 1; i <= k; ++i) out.push_back(mul_mod(d % p, i, p));
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<u64> block_B(u64 d, u64 k, u64 p) {
  std::vector<u64> out = block_A(d, k, p);
  const std::size_t half = out.size();
  for (std::size_t i = 0; i < half; ++i) out.push_back(p - out[i]);
  std::sort(out.begin(), out.end());
  return out;
}

CoverCheck verify_cover(const CoverPlan& plan) {
  const u64 p = plan.p;
  std::vector<bool> hit(p, false);
  for (u64 d : plan.multipliers) {
    for (u64 x : block_B(d, plan.k, p)) hit[x] = true;
  }
  CoverCheck out;
  for (u64 x = 1; x < p; ++x) {
    if (!hit[x]) out.uncovered.push_back(x);
  }
  out.ok = out.uncovered.empty();
  return out;
}

sequences::RadiusSequence sequence_from_cover(const CoverPlan& plan) {
  const auto check = verify_cover(plan);
  if (!check.ok) {
    throw CoverIncomplete("cover misses " + std::to_string(check.uncovered.size()) +
                          " residues mod " + std::to_string(plan.p));
  }
  const u64 p = plan.p, k = plan.k;
  sequences::RadiusSequence seq{p, k, {}};
  seq.symbols.reserve(plan.multipliers.size() * (p + k - 1) + 1);
  u64 start = 0;
  for (std::size_t i = 0; i < plan.multipliers.size(); ++i) {
    const u64 d = plan.multipliers[i] % p;
    u64 x = start;
    for (u64 j = 0; j < p + k; ++j) {
      if (j > 0 || i == 0) seq.symbols.push_back(static_cast<sequences::Symbol>(x));
      if (j + 1 < p + k) x = (x + d) % p;
    }
    start = x;
  }
  return seq;
}

CoverPlan two_radius_cover(u64 p) {
  if (p < 5 || !numtheory::is_prime(p)) throw std::invalid_argument("two_radius_cover: need prime p >= 5");
  const u64 ell = numtheory::multiplicative_order(2, p);
  // coset_of[x] = smallest element of x<2>; cosets listed by that minimum.
  std::vector<u64> coset_of(p, 0);
  std::vector<u64> minima;
  for (u64 x = 1; x < p; ++x) {
    if (coset_of[x] != 0) continue;
    minima.push_back(x);
    u64 y = x;
    for (u64 i = 0; i < ell; ++i) {
      coset_of[y] = x;
      y = mul_mod(y, 2, p);
    }
  }
  CoverPlan plan{p, 2, {}};
  auto add_powers_of_four = [&](u64 c, u64 count) {
    u64 d = c;
    for (u64 i = 0; i < count; ++i) {
      plan.multipliers.push_back(d);
      d = mul_mod(d, 4, p);
    }
  };
  if (ell % 2 == 1) {
    // -1 is not in <2>: pair each coset with its negative and keep the one
    // with the smaller minimum.
    std::vector<bool> taken(p, false);
    for (u64 c : minima) {
      if (taken[c]) continue;
      taken[c] = true;
      taken[coset_of[p - c]] = true;
      add_powers_of_four(c, (ell + 1) / 2);
    }
  } else {
    for (u64 c : minima) add_powers_of_four(c, (ell + 3) / 4);
  }
  return plan;
}

CoverPlan prime_cover(u64 p, u64 k) {
  if (!numtheory::is_prime(p) || k == 0 || !primes::is_k_radius_prime(p, static_cast<unsigned>(k))) {
    throw NotKRadiusPrime(std::to_string(p) + " is not a " + std::to_string(k) + "-radius prime");
  }
  const u64 alpha = numtheory::primitive_root(p);
  const u64 step = numtheory::pow_mod(alpha, k, p);
  CoverPlan plan{p, k, {}};
  u64 d = 1;
  for (u64 i = 0; i < (p - 1) / (2 * k); ++i) {
    plan.multipliers.push_back(d);
    d = mul_mod(d, step, p);
  }
  return plan;
}

void write_cover(std::ostream& out, const CoverPlan& plan) {
  out << "p=" << plan.p << " k=" << plan.k << '\n';
  for (u64 d : plan.multipliers) out << d << '\n';
}

CoverPlan read_cover(std::istream& in) {
  CoverPlan plan;
  std::string line;
  bool header = false;
  while (std::getline(in, line)) {
    const auto first = line.find_first_not_of(" \t\r");
    if (first == std::string::npos || line[first] == '#') continue;
    if (!header) {
      std::istringstream tokens(line);
      std::string tok;
      bool have_p = false, have_k = false;
      while (tokens >> tok) {
        if (tok.rfind("p=", 0) == 0) {
          plan.p = std::stoull(tok.substr(2));
          have_p = true;
        } else if (tok.rfind("k=", 0) == 0) {
          plan.k = std::stoull(tok.substr(2));
          have_k = true;
        }
      }
      if (!have_p || !have_k) throw ParseError("cover header must be 'p=<int> k=<int>'");
      header = true;
      continue;
    }
    std::istringstream tokens(line);
    u64 d = 0;
    if (!(tokens >> d)) throw ParseError("bad cover residue line '" + line + "'");
    if (d == 0 || d >= plan.p) throw ParseError("cover residue out of range: " + line);
    plan.multipliers.push_back(d);
  }
  if (!header) throw ParseError("empty cover file");
  return plan;
}

}  // namespace kradius::covers
