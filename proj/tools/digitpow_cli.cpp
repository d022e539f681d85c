// tools/digitpow_cli.cpp — command-line front end for the digitpow library.
//
// Exit status: 0 when every check passed, 1 when any check failed or an
// OEIS comparison found a mismatch, 2 on usage, IO or parse errors.

#include <CLI11.hpp>
#include <json.hpp>

#include <chrono>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <map>
#include <memory>
#include <optional>
#include <string>

#include "digitpow/digitpow.hpp"

namespace fs = std::filesystem;
using namespace digitpow;

namespace {

constexpr int kExitFailedCheck = 1;
constexpr int kExitError = 2;

struct Output {
  std::unique_ptr<std::ofstream> file;
  std::ostream* stream = &std::cout;

  explicit Output(const std::string& path) {
    if (path.empty() || path == "-") return;
    file = std::make_unique<std::ofstream>(path, std::ios::binary | std::ios::trunc);
    if (!*file) throw std::runtime_error("cannot open " + path + " for writing");
    stream = file.get();
  }
  std::ostream& operator*() { return *stream; }
};

OutputFormat parse_format(const std::string& f) {
  if (f == "json") return OutputFormat::json;
  return OutputFormat::csv;
}

// --- verify ----------------------------------------------------------------

struct VerifyArgs {
  std::uint64_t max_n = 0;
  std::string start_checkpoint;
  std::string checkpoint_dir;
  std::uint64_t checkpoint_every = 100000;
  double checkpoint_seconds = 60.0;
  bool full_k = false;
  std::uint32_t multiplier = 2;
  std::uint64_t window = 1000;
  std::string out;
  std::string format = "csv";
  std::uint64_t seed = 0;
};

int run_verify(const VerifyArgs& a, bool multiplier_given) {
  std::optional<PowerState> start;
  if (!a.start_checkpoint.empty()) {
    start = read_checkpoint(a.start_checkpoint);
    if (multiplier_given && start->multiplier() != a.multiplier) {
      throw std::runtime_error("checkpoint multiplier " + std::to_string(start->multiplier()) +
                               " differs from --multiplier " + std::to_string(a.multiplier));
    }
    if (a.max_n <= start->n()) {
      throw std::runtime_error("--max-n must exceed the checkpoint exponent " + std::to_string(start->n()));
    }
  } else {
    start.emplace(a.multiplier);
  }
  if (!a.checkpoint_dir.empty()) fs::create_directories(a.checkpoint_dir);

  SweepOptions opt;
  opt.full_k = a.full_k;
  opt.seed = a.seed;
  Sweep sweep(*start, opt);

  Output out(a.out);
  RecordWriter writer(*out, parse_format(a.format), a.window);
  writer.prime(sweep.state());
  writer.begin();

  std::uint64_t failures = 0;
  std::uint64_t first_failure = 0;
  std::uint64_t since_checkpoint = 0;
  auto last_checkpoint = std::chrono::steady_clock::now();
  const std::uint64_t first_n = sweep.state().n() + 1;

  while (sweep.state().n() < a.max_n) {
    const VerificationRecord r = sweep.next();
    writer.write(r);
    if (!r.ok()) {
      if (failures++ == 0) first_failure = r.n;
      std::cerr << "check failed at n=" << r.n << "\n";
    }
    if (!a.checkpoint_dir.empty()) {
      ++since_checkpoint;
      const auto now = std::chrono::steady_clock::now();
      const double elapsed = std::chrono::duration<double>(now - last_checkpoint).count();
      if (since_checkpoint >= a.checkpoint_every || elapsed >= a.checkpoint_seconds) {
        write_checkpoint(checkpoint_path(a.checkpoint_dir, sweep.state()), sweep.state());
        since_checkpoint = 0;
        last_checkpoint = now;
      }
    }
  }
  writer.end();
  if (!a.checkpoint_dir.empty() && since_checkpoint != 0) {
    write_checkpoint(checkpoint_path(a.checkpoint_dir, sweep.state()), sweep.state());
  }

  if (failures != 0) {
    std::cerr << "verify: " << failures << " exponent(s) failed, first at n=" << first_failure << "\n";
    return kExitFailedCheck;
  }
  std::cerr << "verify: n=" << first_n << ".." << a.max_n << " (multiplier " << sweep.state().multiplier()
            << "): all checks passed\n";
  return 0;
}

// --- decompose -------------------------------------------------------------

int run_decompose(std::uint64_t n, const std::string& format) {
  PowerState state;
  while (state.n() < n) state.step();
  const DecimalNat& value = state.value();
  const Decomposition dec = decompose(value);
  Log2Pow10Table table;
  auto oracle = [&table](std::uint64_t x) { return table(x); };
  const auto gaps = gap_inequality_check(dec, oracle);
  const bool gap_ok = all_hold(gaps);
  const bool four_ok = four_power_bound_check(dec);
  const std::uint64_t s = value.digit_sum();
  std::optional<bool> theorem;
  if (n >= 1) theorem = theorem_check(n, s);

  if (format == "json") {
    nlohmann::ordered_json j;
    j["n"] = n;
    j["value"] = value.to_decimal_string();
    j["m"] = dec.m();
    j["s"] = s;
    j["digit_count"] = value.digit_count();
    auto terms = nlohmann::ordered_json::array();
    for (const auto& t : dec.terms) terms.push_back({{"d", t.d}, {"e", t.e}});
    j["terms"] = std::move(terms);
    j["gap_ok"] = gap_ok;
    j["fourpow_ok"] = four_ok;
    j["theorem_ok"] = theorem ? nlohmann::ordered_json(*theorem) : nlohmann::ordered_json(nullptr);
    std::cout << j.dump(2) << "\n";
  } else if (format == "csv") {
    std::cout << "d,e\n";
    for (const auto& t : dec.terms) std::cout << t.d << ',' << t.e << '\n';
  } else {
    std::cout << "2^" << n << " = " << value.to_decimal_string() << "\n";
    std::cout << "m = " << dec.m() << ", s = " << s << ", digits = " << value.digit_count() << "\n";
    std::cout << "terms (d, e):";
    for (const auto& t : dec.terms) std::cout << " (" << t.d << "," << t.e << ")";
    std::cout << "\n";
    std::cout << "gap inequality: " << (gap_ok ? "pass" : "FAIL") << " (" << gaps.size() << " checks)\n";
    std::cout << "four-power bound: " << (four_ok ? "pass" : "FAIL") << "\n";
    std::cout << "s > log_4 n: " << (theorem ? (*theorem ? "pass" : "FAIL") : "n/a (n = 0)") << "\n";
  }
  return gap_ok && four_ok && theorem.value_or(true) ? 0 : kExitFailedCheck;
}

// --- bounds ----------------------------------------------------------------

int run_bounds(std::uint64_t count, const std::string& format) {
  const BoundTable table = bound_table(count);
  nlohmann::ordered_json rows = nlohmann::ordered_json::array();
  if (format != "json") std::cout << "k,bound,four_pow,bound_below_four_pow\n";
  DecimalNat four_pow = DecimalNat::from_small(1);
  for (std::uint64_t k = 1; k <= count; ++k) {
    if (k > 1) four_pow.mul_small(4);
    const std::uint64_t b = table.at(k);
    const bool below = below_four_pow(b, k);
    if (format == "json") {
      rows.push_back({{"k", k}, {"bound", b}, {"four_pow", four_pow.to_decimal_string()}, {"bound_below_four_pow", below}});
    } else {
      std::cout << k << ',' << b << ',' << four_pow.to_decimal_string() << ',' << (below ? "true" : "false") << '\n';
    }
  }
  if (format == "json") std::cout << rows.dump(2) << "\n";
  return 0;
}

// --- stats -----------------------------------------------------------------

int run_stats(std::uint64_t min_n, std::uint64_t max_n, std::uint32_t multiplier, std::uint64_t window,
              const std::string& out_path, const std::string& format) {
  if (min_n == 0 || min_n > max_n) throw std::runtime_error("stats needs 1 <= --min-n <= --max-n");
  SweepOptions opt;
  opt.lemma2 = false;
  Sweep sweep(PowerState(multiplier), opt);
  Output out(out_path);
  RecordWriter writer(*out, parse_format(format), window);
  writer.begin();
  bool ok = true;
  while (sweep.state().n() < max_n) {
    const VerificationRecord r = sweep.next();
    ok = ok && r.ok();
    if (r.n < min_n) {
      writer.absorb(r);
    } else {
      writer.write(r);
    }
  }
  writer.end();
  return ok ? 0 : kExitFailedCheck;
}

// --- oeis ------------------------------------------------------------------

int run_oeis(const std::string& path, std::optional<std::uint64_t> max_n, std::uint32_t multiplier) {
  const OeisSeries series = oeis_ingest_file(path);
  if (series.empty()) throw std::runtime_error("b-file " + path + " has no entries");
  const std::uint64_t last = max_n ? std::min(*max_n, series.last()) : series.last();

  std::map<std::uint64_t, std::uint64_t> computed;
  PowerState state(multiplier);
  for (;;) {
    if (state.n() >= series.first) computed[state.n()] = state.value().digit_sum();
    if (state.n() >= last) break;
    state.step();
  }
  const CrossCheckReport report = cross_check(series, computed);
  if (report.empty_overlap()) {
    std::cout << "oeis: no overlap between the b-file (" << series.first << ".." << series.last()
              << ") and the computed range\n";
    return kExitFailedCheck;
  }
  std::cout << "oeis: compared " << report.compared << " entries, " << report.mismatches.size() << " mismatch(es)\n";
  for (const auto& mm : report.mismatches) {
    std::cout << "  n=" << mm.n << " b-file=" << mm.expected << " computed=" << mm.computed << "\n";
  }
  return report.ok() ? 0 : kExitFailedCheck;
}

// --- bench -----------------------------------------------------------------

int run_bench(std::uint64_t max_n) {
  using clock = std::chrono::steady_clock;
  PowerState state;
  auto t0 = clock::now();
  std::uint64_t limb_work = 0;
  while (state.n() < max_n) {
    state.step();
    limb_work += state.value().limbs().size();
  }
  const double double_secs = std::chrono::duration<double>(clock::now() - t0).count();

  PowerState again;
  std::uint64_t digits = 0, checksum = 0;
  t0 = clock::now();
  while (again.n() < max_n) {
    again.step();
    checksum += again.value().digit_sum();
    digits += again.value().digit_count();
  }
  const double sum_secs = std::chrono::duration<double>(clock::now() - t0).count() - double_secs;

  std::cout << "doublings:      " << max_n << " in " << double_secs << " s ("
            << (double_secs > 0 ? static_cast<double>(max_n) / double_secs : 0.0) << " /s, "
            << (double_secs > 0 ? static_cast<double>(limb_work) / double_secs : 0.0) << " limbs/s)\n";
  std::cout << "digit sums:     " << digits << " digits in " << (sum_secs > 0 ? sum_secs : 0.0) << " s ("
            << (sum_secs > 0 ? static_cast<double>(digits) / sum_secs : 0.0) << " digits/s)\n";
  std::cout << "checksum:       " << checksum << "\n";
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"digitpow: exact verification of lower bounds on digit sums of powers of two"};
  app.require_subcommand(1);

  VerifyArgs va;
  auto* verify = app.add_subcommand("verify", "check every bound for 2^n, n = 1..max-n, and write one row per n");
  verify->add_option("--max-n", va.max_n, "last exponent")->required()->check(CLI::PositiveNumber);
  verify->add_option("--start-checkpoint", va.start_checkpoint, "resume from this checkpoint file")
      ->check(CLI::ExistingFile);
  verify->add_option("--checkpoint-dir", va.checkpoint_dir, "write checkpoints into this directory");
  verify->add_option("--checkpoint-every", va.checkpoint_every, "exponents between checkpoints")
      ->capture_default_str()->check(CLI::PositiveNumber);
  verify->add_option("--checkpoint-seconds", va.checkpoint_seconds, "seconds between checkpoints")
      ->capture_default_str();
  verify->add_flag("--full-k", va.full_k, "check the split property at every position k for every n");
  auto* vmult = verify->add_option("--multiplier", va.multiplier, "base a of the powers a^n")->capture_default_str();
  verify->add_option("--window", va.window, "running-mean window")->capture_default_str()->check(CLI::PositiveNumber);
  verify->add_option("--out", va.out, "output file (default stdout)");
  verify->add_option("--format", va.format, "csv or json")->capture_default_str()->check(CLI::IsMember({"csv", "json"}));
  verify->add_option("--seed", va.seed, "seed for sampled split positions")->capture_default_str();

  std::uint64_t dec_n = 0;
  std::string dec_format = "text";
  auto* decomp = app.add_subcommand("decompose", "print the nonzero digits of 2^n with their positions");
  decomp->add_option("n", dec_n, "exponent")->required();
  decomp->add_option("--format", dec_format, "text, csv or json")
      ->capture_default_str()->check(CLI::IsMember({"text", "csv", "json"}));

  std::uint64_t bounds_k = 0;
  std::string bounds_format = "csv";
  auto* bounds = app.add_subcommand("bounds", "print the digit-position bound table B_1..B_K");
  bounds->add_option("K", bounds_k, "number of entries")->required()->check(CLI::PositiveNumber);
  bounds->add_option("--format", bounds_format, "csv or json")
      ->capture_default_str()->check(CLI::IsMember({"csv", "json"}));

  std::uint64_t st_min = 1, st_max = 0, st_window = 1000;
  std::uint32_t st_mult = 2;
  std::string st_out, st_format = "csv";
  auto* stats = app.add_subcommand("stats", "write s(a^n)/n and its running mean for a range of n");
  stats->add_option("--min-n", st_min, "first exponent written")->capture_default_str();
  stats->add_option("--max-n", st_max, "last exponent written")->required()->check(CLI::PositiveNumber);
  stats->add_option("--multiplier", st_mult, "base a of the powers a^n")->capture_default_str();
  stats->add_option("--window", st_window, "running-mean window")->capture_default_str()->check(CLI::PositiveNumber);
  stats->add_option("--out", st_out, "output file (default stdout)");
  stats->add_option("--format", st_format, "csv or json")->capture_default_str()->check(CLI::IsMember({"csv", "json"}));

  std::string bfile;
  std::optional<std::uint64_t> oeis_max;
  std::uint32_t oeis_mult = 2;
  auto* oeis = app.add_subcommand("oeis", "compare s(a^n) against an OEIS b-file (A001370 for a = 2)");
  oeis->add_option("bfile", bfile, "b-file path")->required()->check(CLI::ExistingFile);
  oeis->add_option("--max-n", oeis_max, "last exponent compared");
  oeis->add_option("--multiplier", oeis_mult, "base a of the powers a^n")->capture_default_str();

  std::uint64_t bench_n = 10000;
  auto* bench = app.add_subcommand("bench", "time doubling and digit-sum throughput");
  bench->add_option("--max-n", bench_n, "number of doublings")->capture_default_str()->check(CLI::PositiveNumber);

  CLI11_PARSE(app, argc, argv);

  try {
    if (verify->parsed()) {
      if (va.start_checkpoint.empty()) validate_multiplier(va.multiplier);
      return run_verify(va, vmult->count() > 0);
    }
    if (decomp->parsed()) return run_decompose(dec_n, dec_format);
    if (bounds->parsed()) return run_bounds(bounds_k, bounds_format);
    if (stats->parsed()) {
      validate_multiplier(st_mult);
      return run_stats(st_min, st_max, st_mult, st_window, st_out, st_format);
    }
    if (oeis->parsed()) {
      validate_multiplier(oeis_mult);
      return run_oeis(bfile, oeis_max, oeis_mult);
    }
    if (bench->parsed()) return run_bench(bench_n);
  } catch (const std::exception& e) {
    std::cerr << "digitpow: " << e.what() << "\n";
    return kExitError;
  }
  return kExitError;
}
