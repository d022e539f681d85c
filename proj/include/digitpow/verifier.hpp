// digitpow/verifier.hpp — the per-exponent verification pipeline and its
// CSV / JSON record formats.

#pragma once

#include <algorithm>
#include <bit>
#include <cstdint>
#include <optional>
#include <ostream>
#include <random>
#include <string>
#include <vector>

#include <json.hpp>

#include "digitpow/bound_engine.hpp"
#include "digitpow/lemma_kernel.hpp"
#include "digitpow/power_state.hpp"
#include "digitpow/sequence_stats.hpp"

namespace digitpow {

struct SweepOptions {
  bool lemma2 = true;
  bool full_k = false;
  std::uint64_t full_k_limit = 2000;  // every k is checked up to this n
  std::uint64_t seed = 0;
};

/// Split positions at which the split property is checked for 2^n with `digits`
/// decimal digits. Positions range over 1..min(n, digits - 1), which keeps
/// the high part positive. Up to `full_k_limit` every position is used;
/// beyond it, ceil(log2 n) positions are drawn with a log-uniform spread
/// (bit length first, then a value of that bit length) from a generator
/// seeded by (seed, n). Sorted, without duplicates.
inline std::vector<std::uint64_t> lemma2_positions(std::uint64_t n, std::uint64_t digits, const SweepOptions& opt) {
  std::vector<std::uint64_t> ks;
  const std::uint64_t kmax = std::min(n, digits == 0 ? 0 : digits - 1);
  if (kmax == 0) return ks;
  if (opt.full_k || n <= opt.full_k_limit) {
    ks.resize(kmax);
    for (std::uint64_t k = 1; k <= kmax; ++k) ks[k - 1] = k;
    return ks;
  }
  std::seed_seq seq{static_cast<std::uint32_t>(opt.seed), static_cast<std::uint32_t>(opt.seed >> 32),
                    static_cast<std::uint32_t>(n), static_cast<std::uint32_t>(n >> 32)};
  std::mt19937_64 gen(seq);
  const std::uint64_t count = static_cast<std::uint64_t>(std::bit_width(n - 1));
  const std::uint64_t widths = static_cast<std::uint64_t>(std::bit_width(kmax));
  for (std::uint64_t i = 0; i < count; ++i) {
    const std::uint64_t width = 1 + gen() % widths;
    const std::uint64_t lo = std::uint64_t{1} << (width - 1);
    const std::uint64_t hi = std::min(kmax, (lo << 1) - 1);
    ks.push_back(lo + gen() % (hi - lo + 1));
  }
  std::sort(ks.begin(), ks.end());
  ks.erase(std::unique(ks.begin(), ks.end()), ks.end());
  return ks;
}

/// Results for one exponent. Checks that only make sense for powers of
/// two (or for n >= 1) are empty otherwise.
struct VerificationRecord {
  std::uint64_t n = 0;
  std::uint64_t s = 0;
  std::uint64_t digit_count = 0;
  std::uint64_t m = 0;

  bool decomposition_ok = false;  // reconstructs, sum d_i = s, m <= digit count
  bool nines_ok = false;          // s mod 9 matches an independent residue
  std::optional<bool> theorem;
  std::optional<bool> lemma2;
  std::optional<bool> gap;
  std::optional<bool> four_pow;
  std::optional<bool> bound_table;
  std::optional<bool> digit_count_formula;
  std::uint64_t lemma2_checked = 0;
  std::uint64_t lemma2_out_of_scope = 0;

  bool ok() const {
    auto good = [](const std::optional<bool>& b) { return !b || *b; };
    return decomposition_ok && nines_ok && good(theorem) && good(lemma2) && good(gap) && good(four_pow) &&
           good(bound_table) && good(digit_count_formula);
  }
};

inline std::uint32_t pow_mod(std::uint64_t base, std::uint64_t e, std::uint32_t mod) {
  std::uint64_t result = 1 % mod, b = base % mod;
  while (e != 0) {
    if (e & 1) result = result * b % mod;
    b = b * b % mod;
    e >>= 1;
  }
  return static_cast<std::uint32_t>(result);
}

/// Runs every check on a^n. Holds the caches shared across exponents:
/// floor(log2 10^x) for all x seen so far and the bound table.
class Verifier {
 public:
  explicit Verifier(SweepOptions opt = {}) : opt_(opt) {}

  VerificationRecord check(const PowerState& state, std::uint32_t residue9) {
    const DecimalNat& value = state.value();
    VerificationRecord r;
    r.n = state.n();
    r.s = value.digit_sum();
    r.digit_count = value.digit_count();

    const Decomposition dec = decompose(value);
    r.m = dec.m();
    r.decomposition_ok = dec.well_formed() && dec.digit_total() == r.s && r.m <= r.digit_count &&
                         dec.reconstruct() == value;
    r.nines_ok = r.s % 9 == residue9 % 9;

    if (state.multiplier() != 2) return r;

    auto oracle = [this](std::uint64_t x) { return log2_pow10_(x); };
    if (r.n >= 1) r.theorem = theorem_check(r.n, r.s);
    r.gap = all_hold(gap_inequality_check(dec, oracle));
    r.four_pow = four_power_bound_check(dec);
    r.bound_table = bound_table_check(dec, bounds_, oracle);
    r.digit_count_formula = digit_count_formula_check(r.n, r.digit_count, log2_pow10_);

    if (opt_.lemma2) {
      bool all = true;
      for (std::uint64_t k : lemma2_positions(r.n, r.digit_count, opt_)) {
        const SplitWitness w = verify_lemma2(state, k);
        ++r.lemma2_checked;
        if (w.status == CheckStatus::out_of_scope) ++r.lemma2_out_of_scope;
        if (w.status == CheckStatus::fail) all = false;
      }
      r.lemma2 = all;
    }
    return r;
  }

  const SweepOptions& options() const { return opt_; }
  const BoundTable& bounds() const { return bounds_; }

 private:
  SweepOptions opt_;
  Log2Pow10Table log2_pow10_;
  BoundTable bounds_;
};

/// A PowerState advanced one exponent at a time, with a mod-9 residue
/// tracked by multiplication alone, independent of the digits.
class Sweep {
 public:
  Sweep(PowerState start, SweepOptions opt = {})
      : state_(std::move(start)),
        residue9_(pow_mod(state_.multiplier(), state_.n(), 9)),
        verifier_(opt) {}

  VerificationRecord current() { return verifier_.check(state_, residue9_); }

  VerificationRecord next() {
    state_.step();
    residue9_ = residue9_ * state_.multiplier() % 9;
    return current();
  }

  const PowerState& state() const { return state_; }
  Verifier& verifier() { return verifier_; }

 private:
  PowerState state_;
  std::uint32_t residue9_;
  Verifier verifier_;
};

// ---------------------------------------------------------------------------
// Output

inline constexpr std::string_view kCsvHeader =
    "n,s,digit_count,ratio,running_mean,theorem_ok,lemma2_ok,gap_ok,fourpow_ok";

inline const char* flag(const std::optional<bool>& b) {
  if (!b) return "na";
  return *b ? "true" : "false";
}

/// Feeds a RunningMean with the samples of exponents max(1, n-w+2)..n so
/// that a run resumed at `state` continues the same trailing means as an
/// uninterrupted run. Walks backwards by exact division.
inline void prime_running_mean(RunningMean& mean, const PowerState& state) {
  if (state.n() == 0) return;
  std::vector<RatioSample> back;
  PowerState walk = state;
  while (walk.n() >= 1 && back.size() < mean.window() - 1) {
    back.push_back({walk.n(), walk.value().digit_sum()});
    walk.step_back();
  }
  for (auto it = back.rbegin(); it != back.rend(); ++it) mean.push(*it);
}

enum class OutputFormat { csv, json };

/// Streams records as CSV rows or as a JSON array. The running mean is
/// maintained here; call prime() first when resuming.
class RecordWriter {
 public:
  RecordWriter(std::ostream& out, OutputFormat format, std::uint64_t window)
      : out_(out), format_(format), mean_(window) {}

  void prime(const PowerState& state) { prime_running_mean(mean_, state); }

  /// Counts a sample toward the running mean without emitting a row.
  void absorb(const VerificationRecord& r) {
    if (r.n != 0) mean_.push({r.n, r.s});
  }

  void begin() {
    if (format_ == OutputFormat::csv) {
      out_ << kCsvHeader << '\n';
    } else {
      out_ << "[";
    }
  }

  /// Rows for n = 0 are not emitted: s/n is undefined there.
  void write(const VerificationRecord& r) {
    if (r.n == 0) return;
    const RatioSample sample{r.n, r.s};
    mean_.push(sample);
    const std::string mean = mean_.render(kRatioDigits);
    if (format_ == OutputFormat::csv) {
      out_ << r.n << ',' << r.s << ',' << r.digit_count << ',' << sample.render() << ',' << mean << ','
           << flag(r.theorem) << ',' << flag(r.lemma2) << ',' << flag(r.gap) << ',' << flag(r.four_pow) << '\n';
      return;
    }
    nlohmann::ordered_json j;
    j["n"] = r.n;
    j["s"] = r.s;
    j["digit_count"] = r.digit_count;
    j["m"] = r.m;
    j["ratio"] = sample.render();
    j["running_mean"] = mean;
    j["decomposition_ok"] = r.decomposition_ok;
    j["nines_ok"] = r.nines_ok;
    j["theorem_ok"] = json_flag(r.theorem);
    j["lemma2_ok"] = json_flag(r.lemma2);
    j["gap_ok"] = json_flag(r.gap);
    j["fourpow_ok"] = json_flag(r.four_pow);
    j["bound_table_ok"] = json_flag(r.bound_table);
    j["digit_count_formula_ok"] = json_flag(r.digit_count_formula);
    j["lemma2_checked"] = r.lemma2_checked;
    j["lemma2_out_of_scope"] = r.lemma2_out_of_scope;
    out_ << (first_ ? "\n" : ",\n") << j.dump();
    first_ = false;
  }

  void end() {
    if (format_ == OutputFormat::json) out_ << (first_ ? "]\n" : "\n]\n");
  }

 private:
  static nlohmann::ordered_json json_flag(const std::optional<bool>& b) {
    return b ? nlohmann::ordered_json(*b) : nlohmann::ordered_json(nullptr);
  }

  std::ostream& out_;
  OutputFormat format_;
  RunningMean mean_;
  bool first_ = true;
};

}  // namespace digitpow
