// SPDX-License-Identifier: Apache-2.0
#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

#include "kradius/numtheory.hpp"

namespace kradius::numtheory {

namespace {

using BigRow = std::vector<BigInt>;
using BigMatrix = std::vector<BigRow>;

BigMatrix to_big(const std::vector<IntBasis::Row>& rows) {
  BigMatrix out;
  out.reserve(rows.size());
  for (const auto& row : rows) out.emplace_back(row.begin(), row.end());
  return out;
}

i64 to_i64(const BigInt& x) {
  if (x > std::numeric_limits<i64>::max() || x < std::numeric_limits<i64>::min())
    throw std::overflow_error("lattice entry exceeds 64-bit range");
  return static_cast<i64>(x);
}

std::vector<IntBasis::Row> to_small(const BigMatrix& rows) {
  std::vector<IntBasis::Row> out;
  out.reserve(rows.size());
  for (const auto& row : rows) {
    IntBasis::Row r;
    r.reserve(row.size());
    for (const auto& x : row) r.push_back(to_i64(x));
    out.push_back(std::move(r));
  }
  return out;
}

// Floor division for big integers with positive divisor.
BigInt floor_div(const BigInt& a, const BigInt& b) {
  BigInt q = a / b;  // truncates toward zero
  if ((a % b != 0) && ((a < 0) != (b < 0))) --q;
  return q;
}

BigInt floor(const Rational& x) {
  return floor_div(boost::multiprecision::numerator(x), boost::multiprecision::denominator(x));
}

BigInt round_half_up(const Rational& x) { return floor(x + Rational(1, 2)); }

void axpy(BigRow& dst, const BigInt& q, const BigRow& src) {
  for (std::size_t i = 0; i < dst.size(); ++i) dst[i] -= q * src[i];
}

BigInt dot(const BigRow& a, const BigRow& b) {
  BigInt s = 0;
  for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}

// Row-style HNF of a square full-rank matrix, in place.
void hnf_in_place(BigMatrix& m) {
  const std::size_t n = m.size();
  for (std::size_t c = 0; c < n; ++c) {
    // Euclid on column c over rows c..n-1 until a single nonzero remains.
    while (true) {
      std::size_t pivot = n;
      for (std::size_t r = c; r < n; ++r) {
        if (m[r][c] != 0 && (pivot == n || abs(m[r][c]) < abs(m[pivot][c]))) pivot = r;
      }
      if (pivot == n) throw std::invalid_argument("hermite_normal_form: rank-deficient basis");
      std::swap(m[c], m[pivot]);
      bool done = true;
      for (std::size_t r = c + 1; r < n; ++r) {
        if (m[r][c] == 0) continue;
        axpy(m[r], m[r][c] / m[c][c], m[c]);
        if (m[r][c] != 0) done = false;
      }
      if (done) break;
    }
    if (m[c][c] < 0) {
      for (auto& x : m[c]) x = -x;
    }
    for (std::size_t r = 0; r < c; ++r) {
      BigInt q = floor_div(m[r][c], m[c][c]);
      if (q != 0) axpy(m[r], q, m[c]);
    }
  }
}

struct GramSchmidt {
  std::vector<std::vector<Rational>> mu;
  std::vector<Rational> norm2;  // |b*_i|^2
};

GramSchmidt gram_schmidt(const BigMatrix& b) {
  const std::size_t n = b.size();
  GramSchmidt gs;
  gs.mu.assign(n, std::vector<Rational>(n, Rational(0)));
  gs.norm2.assign(n, Rational(0));
  std::vector<std::vector<Rational>> star(n);
  for (std::size_t i = 0; i < n; ++i) {
    star[i].assign(b[i].begin(), b[i].end());
    for (std::size_t j = 0; j < i; ++j) {
      Rational num = 0;
      for (std::size_t t = 0; t < b[i].size(); ++t) num += Rational(b[i][t]) * star[j][t];
      gs.mu[i][j] = num / gs.norm2[j];
      for (std::size_t t = 0; t < b[i].size(); ++t) star[i][t] -= gs.mu[i][j] * star[j][t];
    }
    Rational s = 0;
    for (const auto& x : star[i]) s += x * x;
    gs.norm2[i] = s;
  }
  return gs;
}

}  // namespace

IntBasis::IntBasis(std::vector<Row> rows) : rows_(std::move(rows)) {
  for (const auto& row : rows_) {
    if (row.size() != rows_.size()) throw std::invalid_argument("IntBasis: basis must be square");
  }
}

BigInt IntBasis::determinant() const {
  // Fraction-free Bareiss elimination.
  BigMatrix m = to_big(rows_);
  const std::size_t n = m.size();
  if (n == 0) return 1;
  BigInt prev = 1;
  int sign = 1;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (m[k][k] == 0) {
      std::size_t swap_row = k + 1;
      while (swap_row < n && m[swap_row][k] == 0) ++swap_row;
      if (swap_row == n) return 0;
      std::swap(m[k], m[swap_row]);
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j) {
        m[i][j] = (m[i][j] * m[k][k] - m[i][k] * m[k][j]) / prev;
      }
    }
    prev = m[k][k];
  }
  return sign * m[n - 1][n - 1];
}

std::vector<std::vector<Rational>> IntBasis::inverse() const {
  const std::size_t n = dim();
  std::vector<std::vector<Rational>> a(n, std::vector<Rational>(2 * n, Rational(0)));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) a[i][j] = rows_[i][j];
    a[i][n + i] = 1;
  }
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t pivot = c;
    while (pivot < n && a[pivot][c] == 0) ++pivot;
    if (pivot == n) throw std::invalid_argument("IntBasis::inverse: singular basis");
    std::swap(a[c], a[pivot]);
    const Rational inv = 1 / a[c][c];
    for (auto& x : a[c]) x *= inv;
    for (std::size_t r = 0; r < n; ++r) {
      if (r == c || a[r][c] == 0) continue;
      const Rational f = a[r][c];
      for (std::size_t t = c; t < 2 * n; ++t) a[r][t] -= f * a[c][t];
    }
  }
  std::vector<std::vector<Rational>> out(n);
  for (std::size_t i = 0; i < n; ++i) out[i].assign(a[i].begin() + static_cast<std::ptrdiff_t>(n), a[i].end());
  return out;
}

bool IntBasis::contains(std::span<const i64> v) const {
  if (v.size() != dim()) return false;
  const auto inv = inverse();
  for (std::size_t j = 0; j < dim(); ++j) {
    Rational c = 0;
    for (std::size_t i = 0; i < dim(); ++i) c += Rational(v[i]) * inv[i][j];
    if (boost::multiprecision::denominator(c) != 1) return false;
  }
  return true;
}

double euclidean_norm(std::span<const i64> v) {
  long double s = 0;
  for (i64 x : v) s += static_cast<long double>(x) * static_cast<long double>(x);
  return static_cast<double>(std::sqrt(s));
}

IntBasis hermite_normal_form(const IntBasis& basis) {
  BigMatrix m = to_big(basis.rows());
  hnf_in_place(m);
  return IntBasis(to_small(m));
}

IntBasis kernel_lattice(std::span<const i64> exps, u64 m) {
  if (exps.empty()) throw std::invalid_argument("kernel_lattice: need at least one exponent");
  if (m == 0) throw std::invalid_argument("kernel_lattice: modulus must be >= 1");
  const std::size_t r = exps.size();
  // Rows (e_i | exps_i) and (0 | m) generate {(v, v.exps + t m)}; clearing the
  // last column with unimodular row operations leaves exactly one row with a
  // nonzero tail, and the other r rows are then a basis of the kernel.
  BigMatrix g(r + 1, BigRow(r + 1, BigInt(0)));
  for (std::size_t i = 0; i < r; ++i) {
    g[i][i] = 1;
    g[i][r] = reduce(exps[i], m);
  }
  g[r][r] = m;
  while (true) {
    std::size_t pivot = r + 1;
    for (std::size_t i = 0; i <= r; ++i) {
      if (g[i][r] != 0 && (pivot == r + 1 || g[i][r] < g[pivot][r])) pivot = i;
    }
    bool done = true;
    for (std::size_t i = 0; i <= r; ++i) {
      if (i == pivot || g[i][r] == 0) continue;
      axpy(g[i], g[i][r] / g[pivot][r], g[pivot]);
      if (g[i][r] != 0) done = false;
    }
    if (done) break;
  }
  BigMatrix kernel;
  for (auto& row : g) {
    if (row[r] != 0) continue;
    row.pop_back();
    kernel.push_back(std::move(row));
  }
  hnf_in_place(kernel);
  return IntBasis(to_small(kernel));
}

IntBasis lll_reduce(const IntBasis& basis) {
  const std::size_t n = basis.dim();
  if (n == 0) return basis;
  if (!basis.full_rank()) throw std::invalid_argument("lll_reduce: rank-deficient basis");
  const Rational delta(3, 4);
  BigMatrix b = to_big(basis.rows());
  GramSchmidt gs = gram_schmidt(b);

  auto size_reduce = [&](std::size_t k, std::size_t l) {
    const BigInt q = round_half_up(gs.mu[k][l]);
    if (q == 0) return;
    axpy(b[k], q, b[l]);
    for (std::size_t j = 0; j < l; ++j) gs.mu[k][j] -= Rational(q) * gs.mu[l][j];
    gs.mu[k][l] -= Rational(q);
  };

  std::size_t k = 1;
  while (k < n) {
    size_reduce(k, k - 1);
    const Rational m = gs.mu[k][k - 1];
    if (gs.norm2[k] < (delta - m * m) * gs.norm2[k - 1]) {
      std::swap(b[k], b[k - 1]);
      gs = gram_schmidt(b);
      k = std::max<std::size_t>(k - 1, 1);
    } else {
      for (std::size_t l = k - 1; l-- > 0;) size_reduce(k, l);
      ++k;
    }
  }

  std::vector<std::pair<BigInt, BigRow>> keyed;
  keyed.reserve(n);
  for (auto& row : b) keyed.emplace_back(dot(row, row), std::move(row));
  std::stable_sort(keyed.begin(), keyed.end(),
                   [](const auto& x, const auto& y) { return x.first < y.first; });
  BigMatrix sorted;
  for (auto& [norm, row] : keyed) sorted.push_back(std::move(row));
  return IntBasis(to_small(sorted));
}

}  // namespace kradius::numtheory
