// SPDX-License-Identifier: Apache-2.0
#include "kradius/sequences.hpp"

#include <algorithm>
#include <istream>
#include <numeric>
#include <ostream>
#include <sstream>
#include <stdexcept>
#include <string>

#include "kradius/error.hpp"

namespace kradius::sequences {

std::uint64_t pair_count(std::uint64_t n) { return n < 2 ? 0 : n * (n - 1) / 2; }

Verification verify(const RadiusSequence& seq) {
  const std::uint64_t n = seq.n;
  for (Symbol s : seq.symbols) {
    if (s >= n) {
      throw AlphabetViolation("symbol " + std::to_string(s) + " outside alphabet of size " +
                              std::to_string(n));
    }
  }
  // Upper-triangular pair marks, row x holds pairs (x, y) with y > x.
  std::vector<bool> seen(n * n, false);
  const auto& s = seq.symbols;
  const std::size_t m = s.size();
  for (std::size_t i = 0; i < m; ++i) {
    const std::size_t end = std::min<std::size_t>(m, i + 1 + seq.k);
    for (std::size_t j = i + 1; j < end; ++j) {
      Symbol a = s[i], b = s[j];
      if (a == b) continue;
      if (a > b) std::swap(a, b);
      seen[static_cast<std::size_t>(a) * n + b] = true;
    }
  }
  Verification out;
  for (Symbol x = 0; x < n; ++x) {
    for (Symbol y = x + 1; y < n; ++y) {
      if (!seen[static_cast<std::size_t>(x) * n + y]) out.missing.push_back({x, y});
    }
  }
  out.ok = out.missing.empty();
  return out;
}

std::uint64_t lower_bound(std::uint64_t n, std::uint64_t k) {
  if (k == 0) throw std::invalid_argument("lower_bound: k must be >= 1");
  return pair_count(n) / k + 1;
}

RadiusSequence naive_sequence(std::uint64_t n, std::uint64_t k) {
  RadiusSequence seq{n, k, {}};
  seq.symbols.reserve(2 * pair_count(n));
  for (Symbol x = 0; x < n; ++x) {
    for (Symbol y = x + 1; y < n; ++y) {
      seq.symbols.push_back(x);
      seq.symbols.push_back(y);
    }
  }
  return seq;
}

RadiusSequence one_radius_optimal(std::uint64_t n) {
  RadiusSequence seq{n, 1, {}};
  if (n < 2) return seq;
  // Multigraph as edge list with per-vertex incidence lists.
  struct Edge {
    Symbol u, v;
  };
  std::vector<Edge> edges;
  edges.reserve(pair_count(n) + n / 2);
  for (Symbol u = 0; u < n; ++u) {
    for (Symbol v = u + 1; v < n; ++v) edges.push_back({u, v});
  }
  if (n % 2 == 0) {
    for (Symbol i = 1; 2 * i + 1 < n; ++i) edges.push_back({2 * i, 2 * i + 1});
  }
  std::vector<std::vector<std::size_t>> incident(n);
  for (std::size_t e = 0; e < edges.size(); ++e) {
    incident[edges[e].u].push_back(e);
    incident[edges[e].v].push_back(e);
  }
  // Hierholzer, iterative. For even n only vertices 0 and 1 have odd degree.
  std::vector<bool> used(edges.size(), false);
  std::vector<std::size_t> cursor(n, 0);
  std::vector<Symbol> stack{0};
  std::vector<Symbol> trail;
  trail.reserve(edges.size() + 1);
  while (!stack.empty()) {
    const Symbol u = stack.back();
    auto& c = cursor[u];
    while (c < incident[u].size() && used[incident[u][c]]) ++c;
    if (c == incident[u].size()) {
      trail.push_back(u);
      stack.pop_back();
      continue;
    }
    const std::size_t e = incident[u][c];
    used[e] = true;
    stack.push_back(edges[e].u == u ? edges[e].v : edges[e].u);
  }
  std::reverse(trail.begin(), trail.end());
  seq.symbols = std::move(trail);
  return seq;
}

RadiusSequence shrink_alphabet(const RadiusSequence& seq, std::uint64_t x) {
  if (x < 1 || x >= seq.n) throw std::invalid_argument("shrink_alphabet: need 1 <= x < n");
  if (!verify(seq).ok) throw NotVerified("shrink_alphabet: input is not a k-radius sequence");
  std::vector<std::uint64_t> freq(seq.n, 0);
  for (Symbol s : seq.symbols) ++freq[s];
  std::vector<Symbol> order(seq.n);
  std::iota(order.begin(), order.end(), Symbol{0});
  std::stable_sort(order.begin(), order.end(),
                   [&](Symbol a, Symbol b) { return freq[a] > freq[b]; });
  std::vector<bool> removed(seq.n, false);
  for (std::uint64_t i = 0; i < x; ++i) removed[order[i]] = true;
  std::vector<Symbol> relabel(seq.n, 0);
  Symbol next = 0;
  for (Symbol s = 0; s < seq.n; ++s) {
    if (!removed[s]) relabel[s] = next++;
  }
  RadiusSequence out{seq.n - x, seq.k, {}};
  out.symbols.reserve(seq.size());
  for (Symbol s : seq.symbols) {
    if (!removed[s]) out.symbols.push_back(relabel[s]);
  }
  return out;
}

namespace {

std::optional<std::uint64_t> header_field(const std::string& line, const std::string& key) {
  std::istringstream tokens(line);
  std::string tok;
  while (tokens >> tok) {
    if (tok.rfind(key + "=", 0) == 0) return std::stoull(tok.substr(key.size() + 1));
  }
  return std::nullopt;
}

}  // namespace

RadiusSequence read_sequence(std::istream& in, std::optional<std::uint64_t> n,
                             std::optional<std::uint64_t> k) {
  RadiusSequence seq;
  std::optional<std::uint64_t> header_n, header_k;
  bool seen_content = false;
  std::string line;
  std::uint64_t max_symbol = 0;
  while (std::getline(in, line)) {
    const auto first = line.find_first_not_of(" \t\r");
    if (first == std::string::npos || line[first] == '#') continue;
    if (!seen_content && line.find('=') != std::string::npos) {
      header_n = header_field(line, "n");
      header_k = header_field(line, "k");
      seen_content = true;
      continue;
    }
    seen_content = true;
    std::istringstream tokens(line);
    std::string tok;
    while (tokens >> tok) {
      std::size_t used = 0;
      unsigned long long v = 0;
      try {
        v = std::stoull(tok, &used);
      } catch (const std::exception&) {
        used = 0;
      }
      if (used != tok.size() || tok[0] == '-') throw ParseError("bad symbol token '" + tok + "'");
      seq.symbols.push_back(static_cast<Symbol>(v));
      max_symbol = std::max<std::uint64_t>(max_symbol, v);
    }
  }
  seq.n = n ? *n : header_n ? *header_n : (seq.symbols.empty() ? 0 : max_symbol + 1);
  if (k) {
    seq.k = *k;
  } else if (header_k) {
    seq.k = *header_k;
  } else {
    throw ParseError("radius k not given by header or flag");
  }
  return seq;
}

void write_sequence(std::ostream& out, const RadiusSequence& seq) {
  out << "n=" << seq.n << " k=" << seq.k << '\n';
  for (std::size_t i = 0; i < seq.symbols.size(); ++i) {
    if (i > 0) out << (i % 32 == 0 ? '\n' : ' ');
    out << seq.symbols[i];
  }
  out << '\n';
}

}  // namespace kradius::sequences
