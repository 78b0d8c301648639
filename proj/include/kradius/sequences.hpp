// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <vector>

namespace kradius::sequences {

using Symbol = std::uint32_t;

// An n-ary sequence checked against radius k. Symbols must lie in [0, n).
struct RadiusSequence {
  std::uint64_t n = 0;
  std::uint64_t k = 0;
  std::vector<Symbol> symbols;

  std::size_t size() const { return symbols.size(); }
  friend bool operator==(const RadiusSequence&, const RadiusSequence&) = default;
};

struct SymbolPair {
  Symbol x = 0;  // x < y
  Symbol y = 0;
  friend bool operator==(const SymbolPair&, const SymbolPair&) = default;
};

struct Verification {
  bool ok = false;
  std::vector<SymbolPair> missing;  // ascending (x, y)
};

std::uint64_t pair_count(std::uint64_t n);  // C(n, 2)

// Slides a window of k+1 symbols and marks co-occurring pairs. Throws
// AlphabetViolation if a symbol is >= n.
Verification verify(const RadiusSequence& seq);

// Smallest length not excluded by C(n,2)/k < length.
std::uint64_t lower_bound(std::uint64_t n, std::uint64_t k);

// Concatenation of every pair x, y with x < y.
RadiusSequence naive_sequence(std::uint64_t n, std::uint64_t k);

// Shortest possible 1-radius sequence, from an Eulerian trail of K_n (plus
// a duplicated matching on vertices 2..n-1 when n is even).
RadiusSequence one_radius_optimal(std::uint64_t n);

// Deletes the x most frequent symbols (ties go to the smaller symbol) and
// relabels the survivors onto [0, n-x) preserving order. Throws NotVerified
// if seq does not verify.
RadiusSequence shrink_alphabet(const RadiusSequence& seq, std::uint64_t x);

// Text format: whitespace separated decimal symbols, '#' comment lines and an
// optional leading header line "n=<int> k=<int>". Explicit n/k override it.
RadiusSequence read_sequence(std::istream& in, std::optional<std::uint64_t> n = std::nullopt,
                             std::optional<std::uint64_t> k = std::nullopt);
void write_sequence(std::ostream& out, const RadiusSequence& seq);

}  // namespace kradius::sequences
