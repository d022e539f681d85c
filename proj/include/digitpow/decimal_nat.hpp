// digitpow/decimal_nat.hpp — unsigned big integer in base 10^9 limbs.
//
// The representation is tuned for the one workload this project has:
// doubling a number millions of times and looking at its decimal digits
// after every step. Digit sums, digit counts and splits at a power of ten
// are all limb-local, so nothing ever converts between binary and decimal.

#pragma once

#include <algorithm>
#include <array>
#include <cassert>
#include <compare>
#include <cstdint>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace digitpow {

inline constexpr std::uint32_t kLimbBase = 1'000'000'000u;
inline constexpr unsigned kLimbDigits = 9;

namespace detail {

inline constexpr std::array<std::uint32_t, 10> kPow10 = {
    1u, 10u, 100u, 1'000u, 10'000u, 100'000u, 1'000'000u, 10'000'000u, 100'000'000u, 1'000'000'000u};

// Digit sums of 0..9999, used four digits at a time.
inline constexpr auto kDigitSum4 = [] {
  std::array<std::uint8_t, 10000> table{};
  for (unsigned i = 0; i < 10000; ++i) {
    table[i] = static_cast<std::uint8_t>(i % 10 + (i / 10) % 10 + (i / 100) % 10 + i / 1000);
  }
  return table;
}();

inline unsigned limb_digit_sum(std::uint32_t limb) {
  return kDigitSum4[limb % 10000u] + kDigitSum4[(limb / 10000u) % 10000u] + limb / 100'000'000u;
}

inline unsigned decimal_width(std::uint32_t v) {
  unsigned w = 1;
  while (w < kLimbDigits && v >= kPow10[w]) ++w;
  return w;
}

}  // namespace detail

class DecimalNat {
 public:
  DecimalNat() = default;

  static DecimalNat from_small(std::uint64_t v) {
    DecimalNat x;
    while (v != 0) {
      x.limbs_.push_back(static_cast<std::uint32_t>(v % kLimbBase));
      v /= kLimbBase;
    }
    x.assert_canonical();
    return x;
  }

  /// Builds a value from little-endian limbs. Each limb must be below
  /// kLimbBase; high zero limbs are trimmed.
  static DecimalNat from_limbs(std::vector<std::uint32_t> limbs) {
    for (auto l : limbs) {
      if (l >= kLimbBase) throw std::invalid_argument("DecimalNat: limb out of range");
    }
    DecimalNat x;
    x.limbs_ = std::move(limbs);
    x.trim();
    return x;
  }

  /// Parses a nonempty string of ASCII digits without leading zeros ("0"
  /// is the only string allowed to start with '0').
  static DecimalNat from_decimal_string(std::string_view s) {
    if (s.empty()) throw std::invalid_argument("DecimalNat: empty string");
    for (char c : s) {
      if (c < '0' || c > '9') {
        throw std::invalid_argument("DecimalNat: non-digit character in \"" + std::string(s) + "\"");
      }
    }
    if (s.size() > 1 && s.front() == '0') {
      throw std::invalid_argument("DecimalNat: leading zero in \"" + std::string(s) + "\"");
    }
    DecimalNat x;
    x.limbs_.reserve(s.size() / kLimbDigits + 1);
    std::size_t end = s.size();
    while (end > 0) {
      std::size_t begin = end >= kLimbDigits ? end - kLimbDigits : 0;
      std::uint32_t limb = 0;
      for (std::size_t i = begin; i < end; ++i) limb = limb * 10u + static_cast<std::uint32_t>(s[i] - '0');
      x.limbs_.push_back(limb);
      end = begin;
    }
    x.trim();
    return x;
  }

  std::string to_decimal_string() const {
    if (is_zero()) return "0";
    std::string out = std::to_string(limbs_.back());
    out.reserve(out.size() + (limbs_.size() - 1) * kLimbDigits);
    for (std::size_t i = limbs_.size() - 1; i-- > 0;) {
      std::uint32_t limb = limbs_[i];
      char buf[kLimbDigits];
      for (unsigned j = kLimbDigits; j-- > 0;) {
        buf[j] = static_cast<char>('0' + limb % 10u);
        limb /= 10u;
      }
      out.append(buf, kLimbDigits);
    }
    return out;
  }

  bool is_zero() const { return limbs_.empty(); }
  std::span<const std::uint32_t> limbs() const { return limbs_; }

  void double_in_place() {
    std::uint32_t carry = 0;
    for (auto& limb : limbs_) {
      std::uint32_t v = limb * 2u + carry;  // < 2*10^9 < 2^32
      carry = v >= kLimbBase ? 1u : 0u;
      limb = v - carry * kLimbBase;
    }
    if (carry != 0) limbs_.push_back(carry);
  }

  /// Multiplies by c < 10^9. A zero factor yields canonical zero.
  void mul_small(std::uint32_t c) {
    if (c >= kLimbBase) throw std::invalid_argument("DecimalNat::mul_small: factor must be below 10^9");
    if (c == 0) {
      limbs_.clear();
      return;
    }
    std::uint64_t carry = 0;
    for (auto& limb : limbs_) {
      std::uint64_t v = std::uint64_t{limb} * c + carry;
      limb = static_cast<std::uint32_t>(v % kLimbBase);
      carry = v / kLimbBase;
    }
    while (carry != 0) {
      limbs_.push_back(static_cast<std::uint32_t>(carry % kLimbBase));
      carry /= kLimbBase;
    }
  }

  void add(const DecimalNat& other) {
    if (limbs_.size() < other.limbs_.size()) limbs_.resize(other.limbs_.size(), 0);
    std::uint32_t carry = 0;
    for (std::size_t i = 0; i < limbs_.size(); ++i) {
      std::uint32_t v = limbs_[i] + carry + (i < other.limbs_.size() ? other.limbs_[i] : 0u);
      carry = v >= kLimbBase ? 1u : 0u;
      limbs_[i] = v - carry * kLimbBase;
      if (carry == 0 && i >= other.limbs_.size()) break;
    }
    if (carry != 0) limbs_.push_back(carry);
  }

  /// Multiplies by 10^k.
  void mul_pow10(std::uint64_t k) {
    if (is_zero()) return;
    if (const unsigned part = static_cast<unsigned>(k % kLimbDigits); part != 0) mul_small(detail::kPow10[part]);
    limbs_.insert(limbs_.begin(), static_cast<std::size_t>(k / kLimbDigits), 0u);
  }

  /// Divides by 0 < c < 10^9 and returns the remainder.
  std::uint32_t div_small(std::uint32_t c) {
    if (c == 0 || c >= kLimbBase) throw std::invalid_argument("DecimalNat::div_small: divisor out of range");
    std::uint64_t rem = 0;
    for (std::size_t i = limbs_.size(); i-- > 0;) {
      std::uint64_t cur = rem * kLimbBase + limbs_[i];
      limbs_[i] = static_cast<std::uint32_t>(cur / c);
      rem = cur % c;
    }
    trim();
    return static_cast<std::uint32_t>(rem);
  }

  std::uint64_t digit_sum() const {
    std::uint64_t sum = 0;
    for (auto limb : limbs_) sum += detail::limb_digit_sum(limb);
    return sum;
  }

  std::uint64_t digit_count() const {
    if (is_zero()) throw std::domain_error("DecimalNat::digit_count: zero has no digit count");
    return (limbs_.size() - 1) * std::uint64_t{kLimbDigits} + detail::decimal_width(limbs_.back());
  }

  /// Returns (x mod 10^k, floor(x / 10^k)).
  std::pair<DecimalNat, DecimalNat> split_mod_pow10(std::uint64_t k) const {
    const std::uint64_t whole = k / kLimbDigits;
    const unsigned part = static_cast<unsigned>(k % kLimbDigits);
    if (whole >= limbs_.size()) return {*this, DecimalNat{}};

    DecimalNat low;
    low.limbs_.assign(limbs_.begin(), limbs_.begin() + static_cast<std::ptrdiff_t>(whole));
    if (part != 0) low.limbs_.push_back(limbs_[whole] % detail::kPow10[part]);
    low.trim();

    DecimalNat high;
    const std::size_t n = limbs_.size() - whole;
    high.limbs_.resize(n);
    if (part == 0) {
      std::copy(limbs_.begin() + static_cast<std::ptrdiff_t>(whole), limbs_.end(), high.limbs_.begin());
    } else {
      const std::uint32_t div = detail::kPow10[part];
      const std::uint32_t up = detail::kPow10[kLimbDigits - part];
      for (std::size_t j = 0; j < n; ++j) {
        std::uint32_t v = limbs_[whole + j] / div;
        if (whole + j + 1 < limbs_.size()) v += (limbs_[whole + j + 1] % div) * up;
        high.limbs_[j] = v;
      }
    }
    high.trim();
    return {std::move(low), std::move(high)};
  }

  /// Divides by 2^k if 2^k divides the value, returning whether it did.
  /// On false the value is left unspecified. Works by exact repeated halving
  /// on base-10^18 double limbs, up to 64 bits per pass.
  bool try_div_pow2(std::uint64_t k) {
    constexpr std::uint64_t kWide = static_cast<std::uint64_t>(kLimbBase) * kLimbBase;
    std::vector<std::uint64_t> w((limbs_.size() + 1) / 2);
    for (std::size_t i = 0; i < limbs_.size(); ++i) w[i / 2] += (i % 2 ? std::uint64_t{kLimbBase} : 1) * limbs_[i];

    bool exact = true;
    while (k > 0 && !w.empty()) {
      const unsigned s = static_cast<unsigned>(std::min<std::uint64_t>(k, 64));
      unsigned __int128 rem = 0;
      if (s == 64) {
        for (std::size_t i = w.size(); i-- > 0;) {
          const unsigned __int128 cur = rem * kWide + w[i];
          w[i] = static_cast<std::uint64_t>(cur >> 64);
          rem = static_cast<std::uint64_t>(cur);
        }
      } else {
        const std::uint64_t mask = (std::uint64_t{1} << s) - 1;
        for (std::size_t i = w.size(); i-- > 0;) {
          const unsigned __int128 cur = rem * kWide + w[i];
          w[i] = static_cast<std::uint64_t>(cur >> s);
          rem = static_cast<std::uint64_t>(cur) & mask;
        }
      }
      if (rem != 0) {
        exact = false;
        break;
      }
      while (!w.empty() && w.back() == 0) w.pop_back();
      k -= s;
    }

    limbs_.assign(w.size() * 2, 0);
    for (std::size_t i = 0; i < w.size(); ++i) {
      limbs_[2 * i] = static_cast<std::uint32_t>(w[i] % kLimbBase);
      limbs_[2 * i + 1] = static_cast<std::uint32_t>(w[i] / kLimbBase);
    }
    trim();
    return exact;
  }

  /// True iff 2^k divides the value. Only x mod 10^k matters, since 2^k | 10^k.
  bool divisible_by_pow2(std::uint64_t k) const {
    auto low = split_mod_pow10(k).first;
    return low.try_div_pow2(k);
  }

  friend bool operator==(const DecimalNat&, const DecimalNat&) = default;

  friend std::strong_ordering operator<=>(const DecimalNat& a, const DecimalNat& b) {
    if (a.limbs_.size() != b.limbs_.size()) return a.limbs_.size() <=> b.limbs_.size();
    for (std::size_t i = a.limbs_.size(); i-- > 0;) {
      if (a.limbs_[i] != b.limbs_[i]) return a.limbs_[i] <=> b.limbs_[i];
    }
    return std::strong_ordering::equal;
  }

  bool is_canonical() const {
    if (!limbs_.empty() && limbs_.back() == 0) return false;
    return std::all_of(limbs_.begin(), limbs_.end(), [](std::uint32_t l) { return l < kLimbBase; });
  }

 private:
  void trim() {
    while (!limbs_.empty() && limbs_.back() == 0) limbs_.pop_back();
    assert_canonical();
  }

  void assert_canonical() const { assert(is_canonical()); }

  // Little-endian; zero is the empty vector.
  std::vector<std::uint32_t> limbs_;
};

inline std::strong_ordering compare(const DecimalNat& a, const DecimalNat& b) { return a <=> b; }

}  // namespace digitpow
