// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cstdint>
#include <span>
#include <utility>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

namespace kradius::numtheory {

using u64 = std::uint64_t;
using i64 = std::int64_t;
using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

// Modular helpers. All residues are canonical representatives in [0, m).
u64 reduce(i64 a, u64 m);
u64 mul_mod(u64 a, u64 b, u64 m);
u64 pow_mod(u64 base, u64 exp, u64 m);
u64 gcd(u64 a, u64 b);
// Inverse of a modulo m; throws NoSolution when gcd(a, m) != 1.
u64 mod_inverse(i64 a, u64 m);

// Deterministic for the whole 64-bit range.
bool is_prime(u64 n);

// Prime factorization by trial division, ascending primes.
std::vector<std::pair<u64, unsigned>> factorize(u64 n);
u64 euler_phi(u64 n);

struct ArithmeticFunctions {
  u64 phi = 0;
  unsigned omega = 0;
  u64 prime_count = 0;
};
ArithmeticFunctions arithmetic_functions(u64 n);

std::vector<u64> primes_up_to(u64 n);
// Primes in the closed interval [lo, hi], by a segmented sieve.
std::vector<u64> primes_in_range(u64 lo, u64 hi);

// Least l >= 1 with a^l = 1 mod n. Throws std::invalid_argument when
// gcd(a, n) != 1 or n < 2.
u64 multiplicative_order(i64 a, u64 n);

// Euler criterion value in {-1, 0, 1}. p must be an odd prime.
int legendre(i64 a, u64 p);

// Smallest generator of Z_p^*. Returns 1 for p = 2.
u64 primitive_root(u64 p);

// Least x >= 0 with base^x = target mod p, by baby-step giant-step.
// Throws NoSolution when target is not in <base>.
u64 discrete_log(u64 base, u64 target, u64 p);

// All m in [1, limit] whose prime factors are all <= bound, ascending.
std::vector<u64> smooth_numbers(u64 limit, u64 bound);

// A square integer basis of a sublattice of Z^r, one basis vector per row.
class IntBasis {
 public:
  using Row = std::vector<i64>;

  IntBasis() = default;
  explicit IntBasis(std::vector<Row> rows);

  std::size_t dim() const { return rows_.size(); }
  const std::vector<Row>& rows() const { return rows_; }
  const Row& operator[](std::size_t i) const { return rows_[i]; }

  BigInt determinant() const;
  bool full_rank() const { return determinant() != 0; }

  // Exact inverse of the row matrix B, so that the coordinates of v in
  // this basis are v * inverse().
  std::vector<std::vector<Rational>> inverse() const;
  // True iff v is an integer combination of the rows.
  bool contains(std::span<const i64> v) const;

  friend bool operator==(const IntBasis&, const IntBasis&) = default;

 private:
  std::vector<Row> rows_;
};

double euclidean_norm(std::span<const i64> v);

// Basis of {v in Z^r : sum v_i * exps_i = 0 mod m}, in Hermite normal form
// (upper triangular, positive diagonal, entries above the diagonal reduced).
IntBasis kernel_lattice(std::span<const i64> exps, u64 m);

// Exact LLL reduction with Lovasz parameter 3/4; rows of the result are
// sorted by Euclidean length. Throws std::invalid_argument on a
// rank-deficient basis.
IntBasis lll_reduce(const IntBasis& basis);

// Hermite normal form of a full-rank square basis (same lattice).
IntBasis hermite_normal_form(const IntBasis& basis);

}  // namespace kradius::numtheory
