// SPDX-License-Identifier: Apache-2.0
// kradius: command-line front end for the k-radius sequence library.

#include <CLI11.hpp>
#include <json.hpp>

#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

#include "kradius/covers.hpp"
#include "kradius/error.hpp"
#include "kradius/logarithms.hpp"
#include "kradius/radius_primes.hpp"
#include "kradius/sequences.hpp"
#include "kradius/tilings.hpp"

namespace {

using json = nlohmann::ordered_json;
using namespace kradius;
using u64 = std::uint64_t;

enum Exit { kOk = 0, kFailed = 1, kUsage = 2 };

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct Globals {
  std::string format = "text";
  unsigned workers = 1;
  bool json() const { return format == "json"; }
};

void emit(const Globals& g, const json& j, const std::string& text) {
  if (g.json()) std::cout << j.dump() << '\n';
  else std::cout << text;
}

std::ostream& open_out(const std::string& path, std::ofstream& file) {
  if (path.empty() || path == "-") return std::cout;
  file.open(path);
  if (!file) throw UsageError("cannot write " + path);
  return file;
}

logs::LogClass parse_class(const std::string& s) {
  auto c = logs::parse_log_class(s);
  if (!c) throw UsageError("unknown class '" + s + "' (log|km|special)");
  return *c;
}

json logfn_json(const logs::LogFn& f) {
  json pv = json::object();
  for (std::size_t i = 0; i < f.primes.size(); ++i) pv[std::to_string(f.primes[i])] = f.prime_values[i];
  auto c = logs::classify(f);
  return {{"k", f.k}, {"prime_values", pv}, {"full", f.full},
          {"logarithm", c.logarithm}, {"km", c.km}, {"special_km", c.special_km}};
}

json report_json(const tilings::TilingReport& r) {
  return {{"p", r.p}, {"k", r.k}, {"ell", r.ell}, {"t", r.t}, {"w", r.w},
          {"cover_size", r.cover_size}, {"seq_length", r.seq_length}, {"ratio", r.ratio}};
}

std::string report_text(const tilings::TilingReport& r) {
  std::ostringstream o;
  o << "p=" << r.p << " k=" << r.k << " ell=" << r.ell << " t=" << r.t << " w=" << r.w
    << " cover_size=" << r.cover_size << " seq_length=" << r.seq_length << " ratio=" << r.ratio << '\n';
  return o.str();
}

// ---- verify ----

struct VerifyArgs {
  std::optional<u64> n, k;
  std::string input = "-";
};

int run_verify(const Globals& g, const VerifyArgs& a) {
  sequences::RadiusSequence seq;
  if (a.input == "-") {
    seq = sequences::read_sequence(std::cin, a.n, a.k);
  } else {
    std::ifstream in(a.input);
    if (!in) throw UsageError("cannot read " + a.input);
    seq = sequences::read_sequence(in, a.n, a.k);
  }
  auto v = sequences::verify(seq);
  json missing = json::array();
  for (auto& m : v.missing) missing.push_back({m.x, m.y});
  std::ostringstream t;
  if (v.ok) {
    t << "ok n=" << seq.n << " k=" << seq.k << " length=" << seq.size() << '\n';
  } else {
    t << "not ok: " << v.missing.size() << " pairs never within distance " << seq.k << '\n';
    for (std::size_t i = 0; i < std::min<std::size_t>(v.missing.size(), 10); ++i)
      t << "  missing " << v.missing[i].x << ' ' << v.missing[i].y << '\n';
  }
  emit(g, {{"ok", v.ok}, {"n", seq.n}, {"k", seq.k}, {"length", seq.size()}, {"missing", missing}},
       t.str());
  return v.ok ? kOk : kFailed;
}

// ---- construct ----

struct ConstructArgs {
  u64 n = 0, k = 0;
  std::string strategy = "auto";
  bool shrink = false;
  std::string output = "-";
  std::string cover_out;
};

int run_construct(const Globals& g, const ConstructArgs& a) {
  if (a.n < 2 || a.k < 1) throw UsageError("need n >= 2 and k >= 1");
  std::string strategy = a.strategy;
  if (strategy == "auto") {
    if (a.k == 1) strategy = "eulerian";
    else if (a.k == 2) {
      u64 q = std::max<u64>(a.n, 5);
      while (!numtheory::is_prime(q)) ++q;
      strategy = primes::is_k_radius_prime(q, 2) ? "prime" : "two-radius";
    }
    else if (primes::next_k_radius_prime(std::max<u64>(a.n, 2 * a.k + 1), static_cast<unsigned>(a.k)))
      strategy = "prime";
    else if (a.k <= 200 && logs::search(static_cast<unsigned>(a.k), logs::LogClass::logarithm))
      strategy = "tiling";
    else
      strategy = "naive";
  }

  sequences::RadiusSequence seq;
  std::optional<covers::CoverPlan> plan;
  std::optional<tilings::TilingReport> report;
  u64 p = a.n;
  auto finish_cover = [&](covers::CoverPlan cp) {
    p = cp.p;
    seq = covers::sequence_from_cover(cp);
    if (a.shrink && p > a.n) seq = sequences::shrink_alphabet(seq, p - a.n);
    plan = std::move(cp);
  };

  if (strategy == "naive") {
    seq = sequences::naive_sequence(a.n, a.k);
  } else if (strategy == "eulerian") {
    if (a.k != 1) throw UsageError("strategy eulerian requires k=1");
    seq = sequences::one_radius_optimal(a.n);
  } else if (strategy == "two-radius") {
    if (a.k != 2) throw UsageError("strategy two-radius requires k=2");
    u64 q = std::max<u64>(a.n, 5);
    while (!numtheory::is_prime(q)) ++q;
    finish_cover(covers::two_radius_cover(q));
  } else if (strategy == "prime") {
    auto q = primes::next_k_radius_prime(std::max<u64>(a.n, 2 * a.k + 1), static_cast<unsigned>(a.k));
    if (!q) {
      std::cerr << "no " << a.k << "-radius prime within the scan horizon\n";
      return kFailed;
    }
    finish_cover(covers::prime_cover(*q, a.k));
  } else if (strategy == "tiling") {
    auto f = logs::search(static_cast<unsigned>(a.k), logs::LogClass::logarithm);
    if (!f) {
      std::cerr << "no logarithm of length " << a.k << '\n';
      return kFailed;
    }
    auto res = tilings::tiling_sequence(a.n, static_cast<unsigned>(a.k), *f, a.shrink);
    p = res.plan.p;
    seq = std::move(res.sequence);
    plan = std::move(res.plan);
    report = res.report;
  } else {
    throw UsageError("unknown strategy '" + a.strategy + "'");
  }

  if (!a.cover_out.empty()) {
    if (!plan) throw UsageError("strategy " + strategy + " does not produce a cover");
    std::ofstream f;
    covers::write_cover(open_out(a.cover_out, f), *plan);
  }

  bool ok = sequences::verify(seq).ok;
  if (g.json()) {
    json j = {{"strategy", strategy}, {"n", seq.n}, {"k", seq.k}, {"p", p},
              {"length", seq.size()}, {"lower_bound", sequences::lower_bound(seq.n, seq.k)},
              {"verified", ok}};
    if (report) j["tiling"] = report_json(*report);
    j["symbols"] = seq.symbols;
    std::cout << j.dump() << '\n';
  } else {
    std::ofstream f;
    sequences::write_sequence(open_out(a.output, f), seq);
    std::cerr << "strategy=" << strategy << " p=" << p << " length=" << seq.size()
              << (ok ? " verified" : " NOT verified") << '\n';
    if (report) std::cerr << report_text(*report);
  }
  return ok ? kOk : kFailed;
}

// ---- logs ----

struct LogsArgs {
  unsigned k = 0;
  std::string cls = "log";
  unsigned max_k = 42;
  std::string output = "-";
};

int run_logs_search(const Globals& g, const LogsArgs& a) {
  auto cls = parse_class(a.cls);
  auto f = logs::search(a.k, cls);
  if (!f) {
    emit(g, {{"k", a.k}, {"class", logs::to_string(cls)}, {"found", false}}, "none\n");
    return kFailed;
  }
  if (g.json()) {
    json j = logfn_json(*f);
    j["class"] = logs::to_string(cls);
    j["found"] = true;
    std::cout << j.dump() << '\n';
  } else {
    std::ofstream file;
    logs::write_logfn(open_out(a.output, file), *f);
  }
  return kOk;
}

int run_logs_count(const Globals& g, const LogsArgs& a) {
  auto cls = parse_class(a.cls);
  auto r = logs::count_detailed(a.k, cls, {a.max_k, g.workers});
  emit(g,
       {{"k", a.k}, {"class", logs::to_string(cls)}, {"count", r.total},
        {"representatives", r.representatives}, {"scaling_check_failures", r.scaling_check_failures}},
       std::to_string(r.total) + "\n");
  return r.scaling_check_failures == 0 ? kOk : kFailed;
}

// ---- primes ----

struct PrimesArgs {
  unsigned k = 0;
  u64 limit = 0;
  u64 n = 2;
  u64 horizon = primes::kDefaultHorizon;
};

int run_primes_scan(const Globals& g, const PrimesArgs& a) {
  auto ps = primes::scan_k_radius_primes(a.k, a.limit, g.workers);
  std::ostringstream t;
  for (auto p : ps) t << p << '\n';
  emit(g, {{"k", a.k}, {"limit", a.limit}, {"count", ps.size()}, {"primes", ps}}, t.str());
  return kOk;
}

int run_primes_next(const Globals& g, const PrimesArgs& a) {
  auto p = primes::next_k_radius_prime(a.n, a.k, a.horizon);
  json j = {{"n", a.n}, {"k", a.k}, {"horizon", a.horizon}, {"found", p.has_value()}};
  if (p) j["p"] = *p;
  emit(g, j, p ? std::to_string(*p) + "\n" : "none\n");
  return p ? kOk : kFailed;
}

// ---- density ----

struct DensityArgs {
  std::vector<unsigned> ks;
  u64 limit = 1'000'000;
  unsigned max_k = 42;
};

int run_density(const Globals& g, const DensityArgs& a) {
  json rows = json::array();
  std::ostringstream t;
  t << primes::density_csv_header() << '\n';
  for (auto k : a.ks) {
    auto r = primes::density_scan(k, a.limit, g.workers, {a.max_k, 1});
    t << primes::density_csv_row(r) << '\n';
    json row = {{"k", r.k}, {"limit", r.limit}, {"primes_scanned", r.primes_scanned},
                {"hits", r.hits}, {"observed", r.observed}};
    row["predicted"] = r.predicted ? json(r.predicted->convert_to<double>()) : json(nullptr);
    rows.push_back(row);
  }
  emit(g, {{"rows", rows}}, t.str());
  return kOk;
}

// ---- tiling ----

struct TilingArgs {
  unsigned k = 0;
  std::string log_file;
  std::optional<u64> n;
};

int run_tiling_check(const Globals& g, const TilingArgs& a) {
  std::optional<logs::LogFn> f;
  if (!a.log_file.empty()) {
    std::ifstream in(a.log_file);
    if (!in) throw UsageError("cannot read " + a.log_file);
    f = logs::read_logfn(in);
    if (f->k != a.k) throw UsageError("logarithm file has a different k");
  } else {
    f = logs::search(a.k, logs::LogClass::logarithm);
    if (!f) {
      emit(g, {{"k", a.k}, {"bijective", false}, {"found", false}}, "no logarithm of length " + std::to_string(a.k) + "\n");
      return kFailed;
    }
  }
  auto t = tilings::tiling_from_log(*f);
  json j = {{"k", a.k}, {"bijective", true}, {"psi", t.psi_values}};
  std::string text = "bijective k=" + std::to_string(a.k) + "\n";
  if (a.n) {
    auto res = tilings::tiling_sequence(*a.n, a.k, *f);
    j["report"] = report_json(res.report);
    text += report_text(res.report);
  }
  emit(g, j, text);
  return kOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"k-radius sequences: construction, verification, logarithms, primes"};
  app.require_subcommand(1);
  Globals g;
  app.add_option("--format", g.format, "Report format")->check(CLI::IsMember({"text", "json"}));
  app.add_option("--workers", g.workers, "Worker threads for counting and scanning")->check(CLI::PositiveNumber);

  VerifyArgs va;
  auto* verify = app.add_subcommand("verify", "Check a sequence file");
  verify->add_option("--n", va.n, "Alphabet size (overrides the header)");
  verify->add_option("--k", va.k, "Radius (overrides the header)");
  verify->add_option("--input", va.input, "Sequence file, - for stdin");

  ConstructArgs ca;
  auto* construct = app.add_subcommand("construct", "Build a k-radius sequence");
  construct->add_option("--n", ca.n, "Alphabet size")->required();
  construct->add_option("--k", ca.k, "Radius")->required();
  construct->add_option("--strategy", ca.strategy)
      ->check(CLI::IsMember({"naive", "eulerian", "two-radius", "prime", "tiling", "auto"}));
  construct->add_flag("--shrink", ca.shrink, "Cut a p-ary result down to n symbols");
  construct->add_option("--output", ca.output, "Sequence file, - for stdout");
  construct->add_option("--cover-out", ca.cover_out, "Also write the cover used");

  LogsArgs la;
  auto* logs_cmd = app.add_subcommand("logs", "Logarithmic functions");
  logs_cmd->require_subcommand(1);
  auto* lsearch = logs_cmd->add_subcommand("search", "First canonical representative");
  auto* lcount = logs_cmd->add_subcommand("count", "Exact count");
  for (auto* sc : {lsearch, lcount}) {
    sc->add_option("--k", la.k, "Length")->required()->check(CLI::PositiveNumber);
    sc->add_option("--class", la.cls)->check(CLI::IsMember({"log", "km", "special"}));
  }
  lsearch->add_option("--output", la.output, "LogFn file, - for stdout");
  lcount->add_option("--max-k", la.max_k, "Counting budget");

  PrimesArgs pa;
  auto* primes_cmd = app.add_subcommand("primes", "k-radius primes");
  primes_cmd->require_subcommand(1);
  auto* pscan = primes_cmd->add_subcommand("scan", "All k-radius primes up to a limit");
  pscan->add_option("--k", pa.k)->required()->check(CLI::PositiveNumber);
  pscan->add_option("--limit", pa.limit)->required();
  auto* pnext = primes_cmd->add_subcommand("next", "Smallest k-radius prime >= n");
  pnext->add_option("--k", pa.k)->required()->check(CLI::PositiveNumber);
  pnext->add_option("--n", pa.n)->required();
  pnext->add_option("--horizon", pa.horizon);

  DensityArgs da;
  auto* density = app.add_subcommand("density", "Observed vs predicted density (CSV)");
  density->add_option("--k", da.ks, "One or more radii")->required()->delimiter(',')->check(CLI::PositiveNumber);
  density->add_option("--limit", da.limit)->check(CLI::Range(u64{2}, u64{1} << 40));
  density->add_option("--max-k", da.max_k, "Counting budget for the prediction");

  TilingArgs ta;
  auto* tiling = app.add_subcommand("tiling", "Tilings induced by logarithms");
  tiling->require_subcommand(1);
  auto* tcheck = tiling->add_subcommand("check", "Bijectivity on the cluster, optional pipeline run");
  tcheck->add_option("--k", ta.k)->required()->check(CLI::PositiveNumber);
  tcheck->add_option("--log", ta.log_file, "LogFn file (default: search)");
  tcheck->add_option("--n", ta.n, "Also build the sequence for alphabet n");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int rc = app.exit(e);
    return rc == 0 ? kOk : kUsage;
  }

  try {
    if (*verify) return run_verify(g, va);
    if (*construct) return run_construct(g, ca);
    if (*lsearch) return run_logs_search(g, la);
    if (*lcount) return run_logs_count(g, la);
    if (*pscan) return run_primes_scan(g, pa);
    if (*pnext) return run_primes_next(g, pa);
    if (*density) return run_density(g, da);
    if (*tcheck) return run_tiling_check(g, ta);
  } catch (const UsageError& e) {
    std::cerr << "usage error: " << e.what() << '\n';
    return kUsage;
  } catch (const ParseError& e) {
    std::cerr << "input error: " << e.what() << '\n';
    return kUsage;
  } catch (const BudgetExceeded& e) {
    std::cerr << "usage error: " << e.what() << '\n';
    return kUsage;
  } catch (const std::invalid_argument& e) {
    std::cerr << "usage error: " << e.what() << '\n';
    return kUsage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kFailed;
  }
  return kUsage;
}
