// SPDX-License-Identifier: Apache-2.0
#include "kradius/logarithms.hpp"

#include <algorithm>
#include <atomic>
#include <charconv>
#include <cmath>
#include <istream>
#include <ostream>
#include <sstream>
#include <string>
#include <thread>

#include "kradius/error.hpp"
#include "kradius/kernels.hpp"
#include "kradius/numtheory.hpp"

namespace kradius::logs {

namespace nt = kradius::numtheory;
using std::uint64_t;

std::string_view to_string(LogClass cls) {
  switch (cls) {
    case LogClass::logarithm: return "log";
    case LogClass::km: return "km";
    case LogClass::special_km: return "special";
  }
  return "?";
}

std::optional<LogClass> parse_log_class(std::string_view text) {
  if (text == "log" || text == "logarithm") return LogClass::logarithm;
  if (text == "km") return LogClass::km;
  if (text == "special" || text == "special_km") return LogClass::special_km;
  return std::nullopt;
}

namespace {

std::vector<unsigned> primes_to(unsigned k) {
  std::vector<unsigned> out;
  for (auto q : nt::primes_up_to(k)) out.push_back(static_cast<unsigned>(q));
  return out;
}

uint64_t factorial(unsigned n) {
  uint64_t f = 1;
  for (unsigned i = 2; i <= n; ++i) f *= i;
  return f;
}

}  // namespace

unsigned LogFn::at_prime(unsigned q) const {
  auto it = std::find(primes.begin(), primes.end(), q);
  if (it == primes.end()) throw std::invalid_argument("not a prime <= k");
  return prime_values[static_cast<std::size_t>(it - primes.begin())];
}

LogFn eval_vector(unsigned k, std::span<const unsigned> prime_values) {
  if (k == 0) throw std::invalid_argument("k must be positive");
  LogFn f;
  f.k = k;
  f.primes = primes_to(k);
  if (prime_values.size() != f.primes.size())
    throw std::invalid_argument("need one value per prime <= k");
  f.prime_values.resize(f.primes.size());
  std::vector<unsigned> value_at(k + 1, 0);
  for (std::size_t i = 0; i < f.primes.size(); ++i) {
    f.prime_values[i] = prime_values[i] % k;
    value_at[f.primes[i]] = f.prime_values[i];
  }
  f.full.assign(k, 0);
  for (unsigned n = 2; n <= k; ++n) {
    unsigned p = 2;
    while (n % p != 0) ++p;
    f.full[n - 1] = (value_at[p] + f.full[n / p - 1]) % k;
  }
  return f;
}

bool parity_required(unsigned k, LogClass cls, unsigned m) {
  if (k % 2 == 1 || cls == LogClass::logarithm) return false;
  if (cls == LogClass::special_km) return (k / 2) % m == 0;
  if (k % 4 == 2) return k % m == 0 && m % 4 == 1;
  return (k / 4) % m == 0;
}

bool Classification::has(LogClass cls) const {
  switch (cls) {
    case LogClass::logarithm: return logarithm;
    case LogClass::km: return km;
    case LogClass::special_km: return special_km;
  }
  return false;
}

Classification classify(const LogFn& f) {
  Classification c;
  std::vector<bool> seen(f.k, false);
  c.logarithm = true;
  for (auto v : f.full) {
    if (v >= f.k || seen[v]) { c.logarithm = false; break; }
    seen[v] = true;
  }
  if (!c.logarithm) return c;
  c.km = c.special_km = true;
  for (unsigned m = 1; m <= f.k; ++m) {
    bool odd = f.full[m - 1] % 2 == 1;
    if (odd && parity_required(f.k, LogClass::km, m)) c.km = false;
    if (odd && parity_required(f.k, LogClass::special_km, m)) c.special_km = false;
  }
  return c;
}

BlockPartition blocks(unsigned k, LogClass cls) {
  BlockPartition bp;
  bp.k = k;
  std::vector<std::pair<unsigned, std::vector<unsigned>>> by_l;  // l -> primes
  for (auto q : primes_to(k)) {
    bool single = q == 2 || static_cast<uint64_t>(q) * q <= k ||
                  (cls != LogClass::logarithm && k % q == 0);
    if (single) {
      bp.blocks.push_back({q});
      continue;
    }
    unsigned l = k / q;
    auto it = std::find_if(by_l.begin(), by_l.end(), [&](auto& e) { return e.first == l; });
    if (it == by_l.end()) by_l.push_back({l, {q}});
    else it->second.push_back(q);
  }
  for (auto& [l, ps] : by_l) bp.blocks.push_back(ps);
  std::sort(bp.blocks.begin(), bp.blocks.end(),
            [](const auto& a, const auto& b) { return a.front() < b.front(); });
  return bp;
}

namespace {

struct EngineConfig {
  LogClass cls = LogClass::logarithm;
  bool use_blocks = true;
  bool use_tail = true;
  bool canonical_f3 = false;
  bool divisor_f2 = true;
};

// Depth-first assignment of f(q_1), f(q_2), ... keeping f injective on the
// numbers whose largest prime factor has been assigned.
class Engine {
 public:
  struct Entry {
    std::uint16_t n, m, e;
    bool parity;
  };

  Engine(unsigned k, EngineConfig cfg) : k_(k), cfg_(cfg) {
    primes_ = primes_to(k);
    r_ = static_cast<unsigned>(primes_.size());
    entries_.resize(r_);
    for (unsigned n = 2; n <= k; ++n) {
      unsigned big = 0;
      for (unsigned j = 0; j < r_; ++j)
        if (n % primes_[j] == 0) big = j;
      unsigned q = primes_[big], m = n;
      std::uint16_t e = 0;
      while (m % q == 0) { m /= q; ++e; }
      entries_[big].push_back({static_cast<std::uint16_t>(n), static_cast<std::uint16_t>(m), e,
                               parity_required(k, cfg.cls, n)});
    }
    tail_start_ = r_;
    if (cfg.use_tail) {
      for (unsigned j = 0; j < r_; ++j)
        if (primes_[j] != 2 && 2 * primes_[j] > k) { tail_start_ = j; break; }
    }
    prev_in_block_.assign(r_, -1);
    block_size_.assign(r_, 1);
    nontail_block_factor_ = 1;
    if (cfg.use_blocks) {
      for (auto& b : blocks(k, cfg.cls).blocks) {
        for (auto q : b) block_size_[index_of(q)] = static_cast<unsigned>(b.size());
        for (std::size_t i = 1; i < b.size(); ++i)
          prev_in_block_[index_of(b[i])] = static_cast<int>(index_of(b[i - 1]));
        if (index_of(b.front()) < tail_start_) nontail_block_factor_ *= factorial(b.size());
      }
    }
    f3_index_ = -1;
    if (cfg.canonical_f3 && r_ >= 2 && 1 < tail_start_ && block_size_[1] == 1) f3_index_ = 1;
    vals_.assign(k + 1, 0);
    used_.assign(2 * k + kernels::kPadding, 0);
    used_[0] = used_[k] = 1;
    bad_.assign(k, 0);
    stamp_.assign(k, 0);
  }

  unsigned k() const { return k_; }
  unsigned r() const { return r_; }
  unsigned tail_start() const { return tail_start_; }
  unsigned prime(unsigned j) const { return primes_[j]; }
  unsigned value(unsigned n) const { return vals_[n]; }
  uint64_t nontail_block_factor() const { return nontail_block_factor_; }
  bool is_singleton(unsigned j) const { return block_size_[j] == 1; }

  // Feasible values for prime index j given the current state, ascending.
  void candidates(unsigned j, std::vector<std::uint16_t>& out) {
    out.clear();
    const auto& es = entries_[j];
    offsets_.clear();
    for (auto& en : es)
      if (en.e == 1) offsets_.push_back(static_cast<std::uint16_t>(vals_[en.m]));
    std::fill(bad_.begin(), bad_.end(), 0);
    kernels::collision_mask(used_, offsets_, bad_);

    unsigned lo = 0;
    if (prev_in_block_[j] >= 0) lo = vals_[primes_[prev_in_block_[j]]] + 1;
    for (unsigned a = lo; a < k_; ++a) {
      if (bad_[a]) continue;
      if (j == 0 && cfg_.divisor_f2 && !(a != 0 && k_ % a == 0 && a < k_)) continue;
      if (static_cast<int>(j) == f3_index_ && !f3_minimal(a)) continue;
      if (admissible(es, a)) out.push_back(static_cast<std::uint16_t>(a));
    }
  }

  void assign(unsigned j, unsigned a) {
    for (auto& en : entries_[j]) {
      unsigned v = (vals_[en.m] + en.e * a) % k_;
      vals_[en.n] = v;
      used_[v] = used_[v + k_] = 1;
    }
  }

  void unassign(unsigned j) {
    for (auto& en : entries_[j]) {
      unsigned v = vals_[en.n];
      used_[v] = used_[v + k_] = 0;
    }
  }

  // Values of the tail primes: the free residues in ascending order.
  LogFn complete() const {
    std::vector<unsigned> pv(r_);
    for (unsigned j = 0; j < tail_start_; ++j) pv[j] = vals_[primes_[j]];
    unsigned v = 0;
    for (unsigned j = tail_start_; j < r_; ++j) {
      while (used_[v]) ++v;
      pv[j] = v++;
    }
    return eval_vector(k_, pv);
  }

  std::vector<unsigned> stabilizer_of_f2() const {
    std::vector<unsigned> s;
    unsigned d = vals_[2];
    for (unsigned u = 1; u < k_; ++u)
      if (nt::gcd(u, k_) == 1 && (static_cast<uint64_t>(u) * d) % k_ == d) s.push_back(u);
    return s;
  }

 private:
  unsigned index_of(unsigned q) const {
    return static_cast<unsigned>(std::lower_bound(primes_.begin(), primes_.end(), q) - primes_.begin());
  }

  bool f3_minimal(unsigned a) const {
    for (auto u : stabilizer_of_f2())
      if ((static_cast<uint64_t>(u) * a) % k_ < a) return false;
    return true;
  }

  bool admissible(const std::vector<Entry>& es, unsigned a) {
    ++epoch_;
    if (epoch_ == 0) {
      std::fill(stamp_.begin(), stamp_.end(), 0);
      epoch_ = 1;
    }
    for (auto& en : es) {
      unsigned v = (vals_[en.m] + en.e * a) % k_;
      if (en.e > 1 && used_[v]) return false;
      if (stamp_[v] == epoch_) return false;
      if (en.parity && v % 2 == 1) return false;
      stamp_[v] = epoch_;
    }
    return true;
  }

  unsigned k_;
  EngineConfig cfg_;
  std::vector<unsigned> primes_;
  unsigned r_ = 0;
  std::vector<std::vector<Entry>> entries_;
  unsigned tail_start_ = 0;
  std::vector<int> prev_in_block_;
  std::vector<unsigned> block_size_;
  uint64_t nontail_block_factor_ = 1;
  int f3_index_ = -1;
  std::vector<unsigned> vals_;
  std::vector<std::uint8_t> used_;
  std::vector<std::uint8_t> bad_;
  std::vector<std::uint16_t> offsets_;
  std::vector<std::uint32_t> stamp_;
  std::uint32_t epoch_ = 0;
};

bool search_dfs(Engine& eng, unsigned j, std::vector<std::vector<std::uint16_t>>& cand,
                std::optional<LogFn>& found) {
  if (j == eng.tail_start()) {
    found = eng.complete();
    return true;
  }
  eng.candidates(j, cand[j]);
  for (auto a : cand[j]) {
    eng.assign(j, a);
    bool done = search_dfs(eng, j + 1, cand, found);
    eng.unassign(j);
    if (done) return true;
  }
  return false;
}

struct Tally {
  uint64_t total = 0;
  uint64_t representatives = 0;
  uint64_t failures = 0;
};

class Counter {
 public:
  Counter(unsigned k, LogClass cls)
      : eng_(k, EngineConfig{cls, true, true, false, true}),
        cand_(eng_.r() + 1),
        tail_fact_(factorial(eng_.r() - eng_.tail_start())) {
    for (unsigned j = 0; j < eng_.tail_start(); ++j)
      if (eng_.is_singleton(j)) singles_.push_back(eng_.prime(j));
  }

  Engine& engine() { return eng_; }

  void run(unsigned j, Tally& t) {
    if (j == eng_.tail_start()) {
      leaf(t);
      return;
    }
    eng_.candidates(j, cand_[j]);
    auto local = cand_[j];
    for (auto a : local) {
      eng_.assign(j, a);
      run(j + 1, t);
      eng_.unassign(j);
    }
  }

  void prefixes(unsigned j, unsigned stop, std::vector<std::uint16_t>& path,
                std::vector<std::vector<std::uint16_t>>& out) {
    if (j == stop || j == eng_.tail_start()) {
      out.push_back(path);
      return;
    }
    eng_.candidates(j, cand_[j]);
    auto local = cand_[j];
    for (auto a : local) {
      eng_.assign(j, a);
      path.push_back(a);
      prefixes(j + 1, stop, path, out);
      path.pop_back();
      eng_.unassign(j);
    }
  }

 private:
  void leaf(Tally& t) {
    unsigned k = eng_.k();
    unsigned d = eng_.value(2);
    ++t.representatives;
    t.total += nt::euler_phi(k / d) * eng_.nontail_block_factor() * tail_fact_;
    // Distinct images of the singleton values under the stabilizer of f(2).
    std::vector<std::vector<unsigned>> images;
    for (auto u : eng_.stabilizer_of_f2()) {
      std::vector<unsigned> img;
      for (auto q : singles_) img.push_back(static_cast<unsigned>((uint64_t{u} * eng_.value(q)) % k));
      images.push_back(std::move(img));
    }
    std::sort(images.begin(), images.end());
    if (std::adjacent_find(images.begin(), images.end()) != images.end()) ++t.failures;
  }

  Engine eng_;
  std::vector<std::vector<std::uint16_t>> cand_;
  uint64_t tail_fact_;
  std::vector<unsigned> singles_;
};

}  // namespace

std::optional<LogFn> search(unsigned k, LogClass cls) {
  if (k == 0) throw std::invalid_argument("k must be positive");
  Engine eng(k, EngineConfig{cls, true, true, true, true});
  std::vector<std::vector<std::uint16_t>> cand(eng.r() + 1);
  std::optional<LogFn> found;
  search_dfs(eng, 0, cand, found);
  return found;
}

CountResult count_detailed(unsigned k, LogClass cls, const CountOptions& options) {
  if (k == 0) throw std::invalid_argument("k must be positive");
  if (k > options.max_k)
    throw BudgetExceeded("count: k=" + std::to_string(k) + " exceeds max_k=" +
                         std::to_string(options.max_k));
  if (k <= 2) return {1, 1, 0};

  Counter root(k, cls);
  std::vector<std::vector<std::uint16_t>> tasks;
  std::vector<std::uint16_t> path;
  root.prefixes(0, 2, path, tasks);

  std::vector<Tally> results(tasks.size());
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    Counter c(k, cls);
    for (std::size_t i = next++; i < tasks.size(); i = next++) {
      const auto& pre = tasks[i];
      for (unsigned j = 0; j < pre.size(); ++j) c.engine().assign(j, pre[j]);
      c.run(static_cast<unsigned>(pre.size()), results[i]);
      for (unsigned j = static_cast<unsigned>(pre.size()); j-- > 0;) c.engine().unassign(j);
    }
  };
  unsigned n = std::max(1u, std::min<unsigned>(options.workers, static_cast<unsigned>(tasks.size())));
  if (n == 1) {
    worker();
  } else {
    std::vector<std::thread> pool;
    for (unsigned i = 0; i < n; ++i) pool.emplace_back(worker);
    for (auto& th : pool) th.join();
  }
  CountResult out;
  for (auto& t : results) {
    out.total += t.total;
    out.representatives += t.representatives;
    out.scaling_check_failures += t.failures;
  }
  return out;
}

uint64_t count(unsigned k, LogClass cls, const CountOptions& options) {
  return count_detailed(k, cls, options).total;
}

std::optional<LogFn> log_from_safe_prime(unsigned k) {
  if (k == 0) throw std::invalid_argument("k must be positive");
  auto build = [&](uint64_t p) {
    uint64_t g = nt::primitive_root(p);
    std::vector<unsigned> pv;
    for (auto q : primes_to(k))
      pv.push_back(static_cast<unsigned>(nt::discrete_log(g, q, p) % k));
    return eval_vector(k, pv);
  };
  if (nt::is_prime(2ull * k + 1)) return build(2ull * k + 1);
  if (nt::is_prime(k + 1ull)) return build(k + 1ull);
  return std::nullopt;
}

namespace {

struct ImageSearch {
  unsigned k;
  std::vector<unsigned> primes;
  unsigned nontail = 0;                   // primes searched explicitly
  std::vector<unsigned> remaining_after;  // non-tail numbers not yet assigned after depth j
  std::vector<unsigned> vals, hits;
  unsigned distinct = 1, best = 0;

  void run(unsigned j) {
    unsigned tail = static_cast<unsigned>(primes.size()) - nontail;
    if (j == nontail) {
      best = std::max(best, distinct + std::min(tail, k - distinct));
      return;
    }
    unsigned q = primes[j];
    for (unsigned a = 0; a < k && best < k; ++a) {
      if (j == 0 && q == 2 && !(a == 0 || k % a == 0)) continue;
      std::vector<unsigned> touched;
      for (unsigned n = q; n <= k; ++n) {
        if (n % q) continue;
        unsigned m = n, e = 0;
        while (m % q == 0) { m /= q; ++e; }
        bool smaller_ok = true;
        for (unsigned t = j + 1; t < primes.size(); ++t)
          if (m % primes[t] == 0) smaller_ok = false;
        if (!smaller_ok) continue;
        unsigned v = (vals[m] + e * a) % k;
        vals[n] = v;
        if (hits[v]++ == 0) ++distinct;
        touched.push_back(n);
      }
      if (distinct + remaining_after[j] + tail > best) run(j + 1);
      for (auto n : touched)
        if (--hits[vals[n]] == 0) --distinct;
    }
  }
};

}  // namespace

ImageStats image_stats(unsigned k, unsigned max_k) {
  if (k == 0) throw std::invalid_argument("k must be positive");
  if (k > max_k)
    throw BudgetExceeded("image_stats: k=" + std::to_string(k) + " exceeds max_k=" +
                         std::to_string(max_k));
  ImageStats out;
  if (k == 1) return {1, 1};

  // R_k: deepest prefix q_1..q_J on which an injective assignment exists.
  {
    Engine eng(k, EngineConfig{LogClass::logarithm, false, false, false, true});
    std::vector<std::vector<std::uint16_t>> cand(eng.r() + 1);
    unsigned deepest = 0;
    auto dfs = [&](auto&& self, unsigned j) -> bool {
      deepest = std::max(deepest, j);
      if (j == eng.r()) return true;
      eng.candidates(j, cand[j]);
      auto local = cand[j];
      for (auto a : local) {
        eng.assign(j, a);
        bool done = self(self, j + 1);
        eng.unassign(j);
        if (done) return true;
      }
      return false;
    };
    dfs(dfs, 0);
    out.max_smooth_injective = deepest == eng.r() ? k : eng.prime(deepest) - 1;
  }

  // M_k: branch and bound over the primes <= k/2; larger primes only reach
  // themselves and take any still-free values.
  {
    ImageSearch s;
    s.k = k;
    s.primes = primes_to(k);
    for (auto q : s.primes)
      if (q == 2 || 2 * q <= k) ++s.nontail;
    s.vals.assign(k + 1, 0);
    s.hits.assign(k, 0);
    s.hits[0] = 1;
    s.remaining_after.assign(s.nontail, 0);
    for (unsigned j = 0; j < s.nontail; ++j) {
      unsigned cnt = 0;
      for (unsigned n = 2; n <= k; ++n) {
        unsigned big = 0;
        for (unsigned t = 0; t < s.primes.size(); ++t)
          if (n % s.primes[t] == 0) big = t;
        if (big > j && big < s.nontail) ++cnt;
      }
      s.remaining_after[j] = cnt;
    }
    s.run(0);
    out.max_image = s.best;
  }
  return out;
}

void write_logfn(std::ostream& out, const LogFn& f) {
  out << "k=" << f.k << '\n';
  for (std::size_t i = 0; i < f.primes.size(); ++i)
    out << "q=" << f.primes[i] << " f=" << f.prime_values[i] << '\n';
}

namespace {

unsigned parse_field(std::string_view token, std::string_view key, int line) {
  if (token.substr(0, key.size()) != key)
    throw ParseError("line " + std::to_string(line) + ": expected '" + std::string(key) + "'");
  auto body = token.substr(key.size());
  unsigned v = 0;
  auto [ptr, ec] = std::from_chars(body.data(), body.data() + body.size(), v);
  if (ec != std::errc() || ptr != body.data() + body.size())
    throw ParseError("line " + std::to_string(line) + ": bad integer '" + std::string(body) + "'");
  return v;
}

}  // namespace

LogFn read_logfn(std::istream& in) {
  std::optional<unsigned> k;
  std::vector<std::pair<unsigned, unsigned>> assigned;
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (auto hash = line.find('#'); hash != std::string::npos) line.resize(hash);
    std::istringstream ls(line);
    std::vector<std::string> tok;
    for (std::string t; ls >> t;) tok.push_back(t);
    if (tok.empty()) continue;
    if (!k) {
      if (tok.size() != 1) throw ParseError("line " + std::to_string(lineno) + ": expected k=<int>");
      k = parse_field(tok[0], "k=", lineno);
      if (*k == 0) throw ParseError("k must be positive");
      continue;
    }
    if (tok.size() != 2)
      throw ParseError("line " + std::to_string(lineno) + ": expected q=<prime> f=<value>");
    assigned.emplace_back(parse_field(tok[0], "q=", lineno), parse_field(tok[1], "f=", lineno));
  }
  if (!k) throw ParseError("missing k=<int> header");
  auto ps = primes_to(*k);
  std::vector<unsigned> pv(ps.size());
  std::vector<bool> seen(ps.size(), false);
  for (auto [q, v] : assigned) {
    auto it = std::lower_bound(ps.begin(), ps.end(), q);
    if (it == ps.end() || *it != q) throw ParseError("q=" + std::to_string(q) + " is not a prime <= k");
    auto i = static_cast<std::size_t>(it - ps.begin());
    if (seen[i]) throw ParseError("q=" + std::to_string(q) + " listed twice");
    if (v >= *k) throw ParseError("f value out of range for q=" + std::to_string(q));
    seen[i] = true;
    pv[i] = v;
  }
  if (std::find(seen.begin(), seen.end(), false) != seen.end())
    throw ParseError("missing a value for some prime <= k");
  return eval_vector(*k, pv);
}

}  // namespace kradius::logs
