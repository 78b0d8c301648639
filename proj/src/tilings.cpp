// SPDX-License-Identifier: Apache-2.0
#include "kradius/tilings.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <string>

#include "kradius/error.hpp"

namespace kradius::tilings {

namespace nt = kradius::numtheory;

namespace {

std::vector<unsigned> primes_to(unsigned k) {
  std::vector<unsigned> out;
  for (auto q : nt::primes_up_to(k)) out.push_back(static_cast<unsigned>(q));
  return out;
}

// prod q_i^{v_i} mod p, negative exponents through inverses.
u64 evaluate(std::span<const i64> v, std::span<const u64> q, std::span<const u64> q_inv, u64 p) {
  u64 x = 1 % p;
  for (std::size_t i = 0; i < v.size(); ++i) {
    u64 base = v[i] >= 0 ? q[i] : q_inv[i];
    x = nt::mul_mod(x, nt::pow_mod(base, static_cast<u64>(v[i] >= 0 ? v[i] : -v[i]), p), p);
  }
  return x;
}

}  // namespace

Cluster cluster(unsigned k) {
  if (k == 0) throw std::invalid_argument("k must be positive");
  Cluster c;
  c.k = k;
  c.primes = primes_to(k);
  c.points.assign(k, Point(c.primes.size(), 0));
  for (unsigned a = 2; a <= k; ++a) {
    unsigned n = a;
    for (std::size_t j = 0; j < c.primes.size(); ++j)
      while (n % c.primes[j] == 0) {
        n /= c.primes[j];
        ++c.points[a - 1][j];
      }
  }
  return c;
}

unsigned TilingMap::psi(std::span<const i64> y) const {
  if (y.size() != psi_values.size()) throw std::invalid_argument("dimension mismatch");
  i64 s = 0;
  for (std::size_t j = 0; j < y.size(); ++j)
    s = static_cast<i64>(nt::reduce(s + static_cast<i64>(nt::reduce(y[j], k)) * psi_values[j], k));
  return static_cast<unsigned>(s);
}

TilingMap tiling_from_log(const logs::LogFn& f) {
  TilingMap t;
  t.k = f.k;
  t.primes = f.primes;
  t.psi_values = f.prime_values;
  auto c = cluster(f.k);
  t.inverse_table.assign(f.k, Point{});
  std::vector<bool> hit(f.k, false);
  for (auto& pt : c.points) {
    unsigned v = t.psi(pt);
    if (hit[v]) throw NotBijective("psi is not injective on the cluster at value " + std::to_string(v));
    hit[v] = true;
    t.inverse_table[v] = pt;
  }
  return t;
}

Located locate(std::span<const i64> y, const TilingMap& t) {
  Located out;
  out.c = t.inverse_table[t.psi(y)];
  out.z.resize(y.size());
  for (std::size_t j = 0; j < y.size(); ++j) out.z[j] = y[j] - out.c[j];
  return out;
}

bool admissible_prime(u64 p, unsigned k) {
  if (!nt::is_prime(p)) return false;
  u64 m = 8;
  for (auto q : primes_to(k))
    if (q != 2) m *= q;
  return p % m == m - 1;
}

u64 next_admissible_prime(u64 n, unsigned k) {
  u64 m = 8;
  for (auto q : primes_to(k))
    if (q != 2) m *= q;
  u64 p = n <= m - 1 ? m - 1 : n + (m - 1 - n % m) % m;
  while (!nt::is_prime(p)) p += m;
  return p;
}

SubgroupCover subgroup_cover(u64 p, unsigned k, const logs::LogFn& f) {
  if (f.k != k) throw std::invalid_argument("logarithm length differs from k");
  if (!nt::is_prime(p) || p < 3) throw BadPrime("p must be an odd prime");
  if (nt::legendre(-1, p) != -1) throw BadPrime("-1 must be a non-residue mod p");
  auto qs = primes_to(k);
  for (auto q : qs)
    if (q >= p || nt::legendre(q, p) != 1)
      throw BadPrime(std::to_string(q) + " is not a nonzero square mod " + std::to_string(p));

  auto tiling = tiling_from_log(f);
  SubgroupCover sc;
  sc.p = p;
  sc.k = k;
  std::size_t r = qs.size();
  std::vector<u64> q(qs.begin(), qs.end()), q_inv(r);
  for (std::size_t i = 0; i < r; ++i) q_inv[i] = nt::mod_inverse(static_cast<i64>(q[i]), p);

  // One exponent vector per element of H, by breadth-first search.
  std::map<u64, Point> vec_of;
  std::vector<u64> frontier{1};
  vec_of[1] = Point(r, 0);
  while (!frontier.empty()) {
    std::vector<u64> next;
    for (auto h : frontier)
      for (std::size_t i = 0; i < r; ++i) {
        u64 x = nt::mul_mod(h, q[i], p);
        if (vec_of.count(x)) continue;
        Point v = vec_of[h];
        ++v[i];
        vec_of[x] = v;
        next.push_back(x);
      }
    frontier = std::move(next);
  }
  sc.ell = vec_of.size();

  if (r == 0) {
    sc.region = {Point{}};
    sc.translates = {Point{}};
    sc.multipliers = {1};
    return sc;
  }

  u64 g = nt::primitive_root(p);
  std::vector<i64> dl(r);
  for (std::size_t i = 0; i < r; ++i) dl[i] = static_cast<i64>(nt::discrete_log(g, q[i], p));
  sc.kernel = nt::lll_reduce(nt::kernel_lattice(dl, p - 1));
  auto inv = sc.kernel.inverse();

  std::set<Point> translates;
  for (auto& [h, y] : vec_of) {
    Point red = y;
    for (std::size_t i = 0; i < r; ++i) {
      nt::Rational a = 0;
      for (std::size_t j = 0; j < r; ++j) a += nt::Rational(y[j]) * inv[j][i];
      nt::BigInt fl = numerator(a) / denominator(a);
      if (fl * denominator(a) > numerator(a)) fl -= 1;
      i64 c = static_cast<i64>(fl);
      for (std::size_t j = 0; j < r; ++j) red[j] -= c * sc.kernel[i][j];
    }
    sc.region.push_back(red);
    translates.insert(locate(red, tiling).z);
  }
  std::sort(sc.region.begin(), sc.region.end());
  sc.translates.assign(translates.begin(), translates.end());
  std::set<u64> seen;
  for (auto& z : sc.translates) {
    u64 d = evaluate(z, q, q_inv, p);
    if (seen.insert(d).second) sc.multipliers.push_back(d);
  }
  return sc;
}

TilingResult tiling_sequence(u64 n, unsigned k, const logs::LogFn& f, bool shrink) {
  if (n < 2) throw std::invalid_argument("n must be at least 2");
  u64 p = next_admissible_prime(std::max<u64>(n, 2 * u64{k} + 1), k);
  auto sc = subgroup_cover(p, k, f);

  // One coset per pair {C, -C}, represented by the smaller minimum.
  std::vector<u64> hs;
  for (u64 x = 1; x < p; ++x)
    if (nt::pow_mod(x, sc.ell, p) == 1) hs.push_back(x);
  std::vector<bool> marked(p, false);
  std::vector<u64> reps;
  u64 cosets = 0;
  for (u64 x = 1; x < p; ++x) {
    if (marked[x]) continue;
    reps.push_back(x);
    for (u64 s : {x, p - x}) {
      ++cosets;
      for (auto h : hs) marked[nt::mul_mod(s, h, p)] = true;
    }
  }

  TilingResult res;
  res.plan.p = p;
  res.plan.k = k;
  std::set<u64> seen;
  for (auto c : reps)
    for (auto d : sc.multipliers) {
      u64 m = nt::mul_mod(c, d, p);
      if (seen.insert(m).second) res.plan.multipliers.push_back(m);
    }
  auto check = covers::verify_cover(res.plan);
  if (!check.ok) throw CoverIncomplete("tiling cover misses " + std::to_string(check.uncovered.size()) + " residues");
  res.sequence = covers::sequence_from_cover(res.plan);
  if (shrink && p > n) res.sequence = sequences::shrink_alphabet(res.sequence, p - n);
  if (!sequences::verify(res.sequence).ok) throw NotVerified("tiling sequence failed verification");

  auto& rep = res.report;
  rep.p = p;
  rep.k = k;
  rep.ell = sc.ell;
  rep.t = cosets;
  rep.w = sc.translates.size();
  rep.cover_size = res.plan.multipliers.size();
  rep.seq_length = res.sequence.size();
  rep.ratio = static_cast<double>(rep.seq_length) * k /
              static_cast<double>(sequences::pair_count(res.sequence.n));
  return res;
}

}  // namespace kradius::tilings
