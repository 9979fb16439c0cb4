#include "cli_app.hpp"

#include <CLI11.hpp>

#include <atomic>
#include <cmath>
#include <exception>
#include <functional>
#include <mutex>
#include <optional>
#include <ostream>
#include <string>
#include <thread>
#include <vector>

#include "report_io.hpp"
#include "twinsieve/count_report.hpp"
#include "twinsieve/crt_psi.hpp"
#include "twinsieve/index_core.hpp"
#include "twinsieve/prime_oracle.hpp"
#include "twinsieve/residue_wheel.hpp"
#include "twinsieve/series_lab.hpp"
#include "verify.hpp"

namespace twinsieve::cli {

namespace {

// Upper bound on the n-th prime (p_n < n(ln n + ln ln n) for n >= 6), for
// sizing sieves that must contain a requested prime index.
u64 nth_prime_bound(u64 n) {
  if (n < 6) return 13;
  const double x = static_cast<double>(n);
  return static_cast<u64>(x * (std::log(x) + std::log(std::log(x)))) + 16;
}

// Unordered work distribution over [lo, hi); results must be written to
// per-index slots so the emitted stream stays in ascending order.
void parallel_for(u64 lo, u64 hi, unsigned threads, const std::function<void(u64)>& fn) {
  const u64 count = hi > lo ? hi - lo : 0;
  if (count == 0) return;
  const unsigned workers = static_cast<unsigned>(std::min<u64>(threads ? threads : 1, count));
  if (workers <= 1) {
    for (u64 i = lo; i < hi; ++i) fn(i);
    return;
  }
  std::atomic<u64> next{lo};
  std::exception_ptr first_error;
  std::mutex err_mu;
  std::vector<std::thread> pool;
  pool.reserve(workers);
  for (unsigned w = 0; w < workers; ++w)
    pool.emplace_back([&] {
      try {
        for (u64 i; (i = next.fetch_add(1)) < hi;) fn(i);
      } catch (...) {
        const std::lock_guard<std::mutex> lock(err_mu);
        if (!first_error) first_error = std::current_exception();
      }
    });
  for (std::thread& th : pool) th.join();
  if (first_error) std::rethrow_exception(first_error);
}

// ---------------------------------------------------------------- counts --

struct CountsArgs {
  std::optional<u64> j;
  std::string range;
  std::string format = "json";
  u64 psi_guard = 12;
};

bool parse_range(const std::string& s, u64& lo, u64& hi) {
  const std::size_t dots = s.find("..");
  if (dots == std::string::npos) return false;
  const std::string a = s.substr(0, dots), b = s.substr(dots + 2);
  if (a.empty() || b.empty()) return false;
  if (a.find_first_not_of("0123456789") != std::string::npos) return false;
  if (b.find_first_not_of("0123456789") != std::string::npos) return false;
  try {
    lo = std::stoull(a);
    hi = std::stoull(b);
  } catch (const std::exception&) {
    return false;
  }
  return lo <= hi;
}

int run_counts(const CountsArgs& a, unsigned threads, std::ostream& out, std::ostream& err) {
  u64 lo = 0, hi = 0;
  if (a.j && !a.range.empty()) {
    err << "counts: pass --j or --range, not both\n";
    return 2;
  }
  if (a.j) {
    lo = hi = *a.j;
  } else if (!a.range.empty()) {
    if (!parse_range(a.range, lo, hi)) {
      err << "counts: --range expects J0..J1 with J0 <= J1\n";
      return 2;
    }
  } else {
    err << "counts: one of --j or --range is required\n";
    return 2;
  }

  const PrimeTable table(counting_interval(hi).n_max);
  const ReportOptions ropt{a.psi_guard, u64(1) << 24};
  std::vector<CountReport> rows(hi - lo + 1);
  parallel_for(lo, hi + 1, threads, [&](u64 j) { rows[j - lo] = build_count_report(table, j, ropt); });

  if (a.format == "csv") out << report_csv_header() << "\n";
  for (const CountReport& r : rows) {
    if (a.format == "json")
      out << report_json(r).dump() << "\n";
    else if (a.format == "csv")
      out << report_csv_row(r) << "\n";
    else
      out << report_text_row(r) << "\n";
  }
  return 0;
}

// ------------------------------------------------------------------- crt --

struct CrtArgs {
  std::vector<u64> k1, k2;
  std::optional<u64> j;
  std::string format = "json";
};

int run_crt(const CrtArgs& a, std::ostream& out, std::ostream&) {
  u64 max_index = 2;
  for (u64 i : a.k1) max_index = std::max(max_index, i);
  for (u64 i : a.k2) max_index = std::max(max_index, i);
  const PrimeTable table(std::max<u64>(nth_prime_bound(max_index + 3), 101));

  const PrimeIndexSet s1(a.k1, table), s2(a.k2, table);
  const CrtSolution sol = solve_y0(table, s1, s2);

  ordered_json o;
  o["k1"] = s1.indices();
  o["k2"] = s2.indices();
  o["p1"] = json_u128(sol.p1);
  o["p2"] = json_u128(sol.p2);
  o["y0"] = json_u128(sol.y0);
  o["modulus"] = json_u128(sol.modulus);
  o["case"] = sol.case_tag == CrtCase::FirstPairExcluded ? "first_pair_excluded" : "all_solutions";
  o["x0"] = json_u128(sol.x0);
  o["mirror"] = json_u128(mirror_y0(sol));
  if (a.j) {
    o["j"] = *a.j;
    o["z"] = z_count(table, *a.j, s1, s2);
  }
  if (a.format == "json") {
    out << o.dump() << "\n";
  } else {
    for (const auto& [k, v] : o.items())
      out << k << "=" << (v.is_string() ? v.get<std::string>() : v.dump()) << "\n";
  }
  return 0;
}

// ---------------------------------------------------------------- series --

struct SeriesArgs {
  std::string kind;
  u64 n = 0;
  u64 b = 1;
  std::string format = "csv";
};

int run_series(const SeriesArgs& a, std::ostream& out, std::ostream&) {
  if (a.kind == "E") {
    const PrimeTable table(std::max<u64>(nth_prime_bound(a.n + 3), 101));
    if (table.odd_prime_count() <= a.n)
      throw resource_error("series E: the factor table holds " +
                           std::to_string(table.odd_prime_count()) +
                           " odd primes, fewer than the " + std::to_string(a.n) + " requested");
    out << "n,value\n";
    const u64 cut = std::min<u64>(a.n, 64);
    for (u64 n = 1; n <= cut; ++n)
      out << n << "," << format_rational_sig15(e_product_exact(table, n)) << "\n";
    if (a.n > 64) {
      const std::vector<double> pre = e_product_prefix(table, a.n);
      for (u64 n = 65; n <= a.n; ++n) out << n << "," << format_double_sig15(pre[n - 1]) << "\n";
    }
    return 0;
  }

  const u64 top_value = a.kind == "M" ? 2 * a.n + 1 : a.n;
  const PrimeTable table(std::max<u64>(top_value + 2, 101));
  if (top_value > table.spf_limit())
    throw resource_error("series " + a.kind + ": needs factorizations to " +
                         std::to_string(top_value) + ", past the factor-table cap " +
                         std::to_string(table.spf_limit()));
  out << "n,value\n";
  const std::vector<SeriesPoint> pts = a.kind == "M"   ? m_series(table, a.n)
                                       : a.kind == "S" ? s_series(table, a.n)
                                                       : s_b_series(table, a.b, a.n);
  for (const SeriesPoint& p : pts) out << p.n << "," << format_fixed15(p.value) << "\n";
  return 0;
}

// ----------------------------------------------------------------- wheel --

struct WheelArgs {
  std::vector<u64> primes;
  bool indices = false;
  std::string format = "json";
};

int run_wheel(const WheelArgs& a, std::ostream& out, std::ostream&) {
  const ResidueWheel w = build_wheel(a.primes);
  ordered_json o;
  o["modulus"] = w.modulus;
  o["residues"] = w.residues;
  if (a.indices) o["index_residues"] = index_residues(w);
  o["count"] = w.residues.size();
  o["symmetry_fixed_point"] = w.modulus - 1;
  if (a.format == "json") {
    out << o.dump() << "\n";
  } else {
    for (const auto& [k, v] : o.items()) out << k << "=" << v.dump() << "\n";
  }
  return 0;
}

}  // namespace

int cli_run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"index-space twin-candidate counting toolkit"};
  app.fallthrough();
  app.require_subcommand(1);
  app.set_version_flag("--version", "twinsieve 1.0.0");

  unsigned threads = std::thread::hardware_concurrency();
  if (threads == 0) threads = 1;
  app.add_option("--threads", threads, "worker thread cap (results never depend on it)")
      ->check(CLI::Range(1u, 1024u));

  CountsArgs ca;
  CrtArgs ra;
  SeriesArgs sa;
  WheelArgs wa;
  VerifyOptions va;
  int rc = 0;

  CLI::App* counts = app.add_subcommand("counts", "per-j count reports: scan vs formula paths");
  counts->add_option("--j", ca.j, "single interval parameter j");
  counts->add_option("--range", ca.range, "inclusive range J0..J1, one report per line");
  counts->add_option("--format", ca.format, "json | csv | text (default json)")
      ->check(CLI::IsMember({"json", "csv", "text"}));
  counts->add_option("--psi-guard", ca.psi_guard,
                     "largest prime count the 3^N pair formula may enumerate (default 12)")
      ->check(CLI::Range(u64(1), u64(16)));
  counts->callback([&] { rc = run_counts(ca, threads, out, err); });

  CLI::App* crt =
      app.add_subcommand("crt", "solve the divisibility system for a pair of prime-index sets");
  crt->add_option("--k1", ra.k1, "indices whose primes must divide y (comma separated, from 1)")
      ->required()
      ->delimiter(',');
  crt->add_option("--k2", ra.k2, "indices whose primes must divide y+2")->required()->delimiter(',');
  crt->add_option("--j", ra.j, "also count the solution indices inside the interval of this j");
  crt->add_option("--format", ra.format, "json | text (default json)")
      ->check(CLI::IsMember({"json", "text"}));
  crt->callback([&] { rc = run_crt(ra, out, err); });

  CLI::App* series = app.add_subcommand("series", "emit a partial-sum series as CSV");
  series->add_option("--kind", sa.kind, "E | M | S | Sb")
      ->required()
      ->check(CLI::IsMember({"E", "M", "S", "Sb"}));
  series->add_option("--n", sa.n, "number of terms")->required()->check(CLI::PositiveNumber);
  series->add_option("--b", sa.b, "restrict Sb to indices coprime to this value (default 1)")
      ->check(CLI::PositiveNumber);
  series->add_option("--format", sa.format, "csv")->check(CLI::IsMember({"csv"}));
  series->callback([&] { rc = run_series(sa, out, err); });

  CLI::App* wheel =
      app.add_subcommand("wheel", "admissible pair residues modulo twice an odd-prime family");
  wheel->add_option("--primes", wa.primes, "odd prime family containing 3 (e.g. 3,5,7)")
      ->required()
      ->delimiter(',');
  wheel->add_flag("--indices", wa.indices, "also emit the residues mapped to index space");
  wheel->add_option("--format", wa.format, "json | text (default json)")
      ->check(CLI::IsMember({"json", "text"}));
  wheel->callback([&] { rc = run_wheel(wa, out, err); });

  CLI::App* verify = app.add_subcommand("verify", "run the invariant suites, print a JSON summary");
  verify->add_option("--max-j", va.max_j, "cap on the j sweeps (default 100)");
  verify->add_option("--suite", va.suite, "all | counts | crt | series | wheel (default all)")
      ->check(CLI::IsMember({"all", "counts", "crt", "series", "wheel"}));
  verify->callback([&] { rc = run_verify(va, out); });

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? 0 : 2;
  } catch (const resource_error& e) {
    err << "resource refusal: " << e.what() << "\n";
    return 3;
  } catch (const std::overflow_error& e) {
    err << "resource refusal: " << e.what() << "\n";
    return 3;
  } catch (const std::domain_error& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  }
  return rc;
}

}  // namespace twinsieve::cli
