// digitpow/sequence_stats.hpp — s(a^n)/n as exact rationals, trailing-window
// means, the constant (9/2) log10 2, and OEIS b-file cross-checks.
//
// Every decimal that leaves this module is rendered from an exact rational
// with round-half-even, so output is identical on every platform.

#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <charconv>
#include <cstdint>
#include <deque>
#include <fstream>
#include <istream>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace digitpow {

using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

/// Renders num/den (both >= 0, den > 0) with `digits` places after the
/// point, rounding half to even. digits == 0 prints no point.
inline std::string render_decimal(const BigInt& num, const BigInt& den, unsigned digits) {
  if (den <= 0 || num < 0) throw std::invalid_argument("render_decimal: need num >= 0 and den > 0");
  const BigInt scale = boost::multiprecision::pow(BigInt(10), digits);
  BigInt q, r;
  boost::multiprecision::divide_qr(BigInt(num * scale), den, q, r);
  const BigInt twice = 2 * r;
  if (twice > den || (twice == den && (q & 1) != 0)) ++q;

  std::string s = q.str();
  if (digits == 0) return s;
  if (s.size() <= digits) s.insert(0, digits + 1 - s.size(), '0');
  s.insert(s.size() - digits, 1, '.');
  return s;
}

inline std::string render_decimal(const Rational& v, unsigned digits) {
  return render_decimal(boost::multiprecision::numerator(v), boost::multiprecision::denominator(v), digits);
}

inline constexpr unsigned kRatioDigits = 10;

struct RatioSample {
  std::uint64_t n = 0;  // >= 1
  std::uint64_t s = 0;

  Rational ratio() const {
    if (n == 0) throw std::domain_error("RatioSample: n must be at least 1");
    return Rational(BigInt(s), BigInt(n));
  }
  std::string render(unsigned digits = kRatioDigits) const { return render_decimal(BigInt(s), BigInt(n), digits); }
};

namespace detail {

struct Bounded {
  BigInt value;  // true value lies in [value, value + err] (scaled)
  BigInt err;
};

// atanh(1/q) * scale, from the series sum 1 / ((2j+1) q^(2j+1)). Each
// term is floored (at most 1 low) and the tail after the first zero term
// is below 2.
inline Bounded atanh_inv(std::uint64_t q, const BigInt& scale) {
  Bounded out;
  const BigInt q2 = BigInt(q) * q;
  BigInt power = q;  // q^(2j+1)
  std::uint64_t terms = 0;
  for (std::uint64_t j = 0;; ++j) {
    BigInt term = scale / (power * (2 * j + 1));
    if (term == 0) break;
    out.value += term;
    ++terms;
    power *= q2;
  }
  out.err = terms + 2;
  return out;
}

}  // namespace detail

/// (9/2) log10 2 to `digits` places after the point, round-half-even.
///
/// ln 2 = 2 atanh(1/3) and ln 10 = 3 ln 2 + 2 atanh(1/9) are summed in
/// fixed point with guard digits, carrying an explicit error bound. The
/// quotient is evaluated at both ends of the error interval and the guard
/// is widened until both ends round to the same result.
inline std::string conjecture_constant(unsigned digits) {
  if (digits > 50) throw std::out_of_range("conjecture_constant: at most 50 digits");
  for (unsigned guard = 20;; guard += 20) {
    const unsigned g = digits + guard;
    const BigInt scale = boost::multiprecision::pow(BigInt(10), g);
    const auto a3 = detail::atanh_inv(3, scale);
    const auto a9 = detail::atanh_inv(9, scale);
    const BigInt ln2_lo = 2 * a3.value;
    const BigInt ln2_hi = 2 * (a3.value + a3.err);
    const BigInt ln10_lo = 3 * ln2_lo + 2 * a9.value;
    const BigInt ln10_hi = 3 * ln2_hi + 2 * (a9.value + a9.err);
    const std::string lo = render_decimal(BigInt(9 * ln2_lo), BigInt(2 * ln10_hi), digits);
    const std::string hi = render_decimal(BigInt(9 * ln2_hi), BigInt(2 * ln10_lo), digits);
    if (lo == hi) return lo;
  }
}

/// Trailing-window mean of s/n over a stream of samples. The first
/// window-1 outputs average over the samples seen so far. Feeding a stream
/// in pieces gives the same outputs as feeding it whole.
///
/// The window sum is kept in fixed point with kGuardDigits places, each term
/// truncated; render() rounds from that enclosure and only falls back to the
/// exact rational when the enclosure straddles a rounding boundary.
class RunningMean {
 public:
  static constexpr unsigned kGuardDigits = 20;

  explicit RunningMean(std::uint64_t window) : window_(window) {
    if (window == 0) throw std::invalid_argument("RunningMean: window must be at least 1");
  }

  void push(const RatioSample& sample) {
    if (sample.n == 0) throw std::domain_error("RunningMean: n must be positive");
    const unsigned __int128 term = static_cast<unsigned __int128>(sample.s) * scale() / sample.n;
    fixed_sum_ += term;
    recent_.push_back({sample, term});
    if (recent_.size() > window_) {
      fixed_sum_ -= recent_.front().term;
      recent_.pop_front();
    }
  }

  std::uint64_t window() const { return window_; }
  std::uint64_t size() const { return recent_.size(); }

  /// Exact mean of the samples in the window.
  Rational exact() const {
    if (recent_.empty()) throw std::logic_error("RunningMean: empty window");
    Rational sum;
    for (const auto& e : recent_) sum += e.sample.ratio();
    return sum / static_cast<std::uint64_t>(recent_.size());
  }

  /// The mean rounded half-even to `digits` places; identical to
  /// render_decimal(exact(), digits).
  std::string render(unsigned digits) const {
    if (recent_.empty()) throw std::logic_error("RunningMean: empty window");
    if (digits >= kGuardDigits) return render_decimal(exact(), digits);
    // exact * 10^G lies in [a, a + 2) with a = floor(fixed_sum / count).
    const unsigned __int128 a = fixed_sum_ / recent_.size();
    unsigned __int128 d = 1;
    for (unsigned i = digits; i < kGuardDigits; ++i) d *= 10;
    const unsigned __int128 r = a % d, half = d / 2;
    unsigned __int128 units = a / d;
    if (r > half) {
      ++units;
    } else if (r + 2 > half) {
      return render_decimal(exact(), digits);
    }
    BigInt den = 1;
    for (unsigned i = 0; i < digits; ++i) den *= 10;
    return render_decimal(to_big(units), den, digits);
  }

 private:
  struct Entry {
    RatioSample sample;
    unsigned __int128 term;
  };

  static unsigned __int128 scale() {
    unsigned __int128 v = 1;
    for (unsigned i = 0; i < kGuardDigits; ++i) v *= 10;
    return v;
  }

  static BigInt to_big(unsigned __int128 v) {
    BigInt out = static_cast<std::uint64_t>(v >> 64);
    out <<= 64;
    out += static_cast<std::uint64_t>(v);
    return out;
  }

  std::uint64_t window_;
  std::deque<Entry> recent_;
  unsigned __int128 fixed_sum_ = 0;
};

struct MeanPoint {
  std::uint64_t n = 0;
  Rational mean;
};

/// One trailing-window mean per sample. A window longer than the sample
/// list collapses to a single full-range mean, reported at the last n.
inline std::vector<MeanPoint> running_mean(const std::vector<RatioSample>& samples, std::uint64_t window) {
  if (window == 0) throw std::invalid_argument("running_mean: window must be at least 1");
  if (samples.empty()) throw std::invalid_argument("running_mean: no samples");
  std::vector<MeanPoint> out;
  if (window > samples.size()) {
    Rational sum;
    for (const auto& s : samples) sum += s.ratio();
    out.push_back({samples.back().n, sum / static_cast<std::uint64_t>(samples.size())});
    return out;
  }
  std::deque<Rational> recent;
  Rational sum;
  out.reserve(samples.size());
  for (const auto& s : samples) {
    recent.push_back(s.ratio());
    sum += recent.back();
    if (recent.size() > window) {
      sum -= recent.front();
      recent.pop_front();
    }
    out.push_back({s.n, sum / static_cast<std::uint64_t>(recent.size())});
  }
  return out;
}

// ---------------------------------------------------------------------------
// OEIS b-files

class BFileError : public std::runtime_error {
 public:
  BFileError(std::size_t line, const std::string& what)
      : std::runtime_error("b-file line " + std::to_string(line) + ": " + what), line_(line) {}
  std::size_t line() const { return line_; }

 private:
  std::size_t line_;
};

struct OeisSeries {
  std::uint64_t first = 0;
  std::vector<std::uint64_t> values;  // values[i] = a(first + i)

  bool empty() const { return values.empty(); }
  std::uint64_t last() const { return first + values.size() - 1; }

  std::optional<std::uint64_t> at(std::uint64_t n) const {
    if (n < first || n - first >= values.size()) return std::nullopt;
    return values[n - first];
  }
};

namespace detail {

inline bool parse_u64(std::string_view tok, std::uint64_t& out) {
  if (tok.empty()) return false;
  auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), out);
  return ec == std::errc{} && ptr == tok.data() + tok.size();
}

inline std::vector<std::string_view> split_ws(std::string_view line) {
  std::vector<std::string_view> toks;
  std::size_t i = 0;
  while (i < line.size()) {
    while (i < line.size() && (line[i] == ' ' || line[i] == '\t' || line[i] == '\r')) ++i;
    std::size_t j = i;
    while (j < line.size() && line[j] != ' ' && line[j] != '\t' && line[j] != '\r') ++j;
    if (j > i) toks.push_back(line.substr(i, j - i));
    i = j;
  }
  return toks;
}

}  // namespace detail

/// Reads "index value" lines. Blank lines and lines starting with '#' are
/// skipped; anything else malformed is an error carrying its line number.
inline OeisSeries oeis_ingest(std::istream& in) {
  OeisSeries series;
  std::string line;
  std::size_t lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    const auto toks = detail::split_ws(line);
    if (toks.empty() || toks.front().front() == '#') continue;
    if (toks.size() != 2) throw BFileError(lineno, "expected \"index value\", got \"" + line + "\"");
    std::uint64_t index = 0, value = 0;
    if (!detail::parse_u64(toks[0], index)) throw BFileError(lineno, "bad index \"" + std::string(toks[0]) + "\"");
    if (!detail::parse_u64(toks[1], value)) throw BFileError(lineno, "bad value \"" + std::string(toks[1]) + "\"");
    if (value == 0) throw BFileError(lineno, "digit sums of powers are at least 1");
    if (series.empty()) {
      series.first = index;
    } else if (index != series.last() + 1) {
      throw BFileError(lineno, "index " + std::to_string(index) + " does not follow " +
                                   std::to_string(series.last()));
    }
    series.values.push_back(value);
  }
  return series;
}

inline OeisSeries oeis_ingest_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open b-file " + path);
  return oeis_ingest(in);
}

struct Mismatch {
  std::uint64_t n = 0;
  std::uint64_t expected = 0;  // from the b-file
  std::uint64_t computed = 0;

  friend bool operator==(const Mismatch&, const Mismatch&) = default;
};

struct CrossCheckReport {
  std::uint64_t compared = 0;
  std::vector<Mismatch> mismatches;

  bool empty_overlap() const { return compared == 0; }
  bool ok() const { return compared > 0 && mismatches.empty(); }
};

inline CrossCheckReport cross_check(const OeisSeries& series, const std::map<std::uint64_t, std::uint64_t>& computed) {
  CrossCheckReport report;
  for (const auto& [n, s] : computed) {
    const auto expected = series.at(n);
    if (!expected) continue;
    ++report.compared;
    if (*expected != s) report.mismatches.push_back({n, *expected, s});
  }
  return report;
}

}  // namespace digitpow
