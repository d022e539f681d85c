// digitpow/binary_nat.hpp — minimal base-2^64 natural numbers.
//
// Only what exact floor-logarithms need: multiply by a word, multiply two
// values, powers, comparison and bit length.

#pragma once

#include <bit>
#include <compare>
#include <cstdint>
#include <span>
#include <vector>

namespace digitpow {

class BinaryNat {
 public:
  BinaryNat() = default;

  static BinaryNat from_small(std::uint64_t v) {
    BinaryNat x;
    if (v != 0) x.words_.push_back(v);
    return x;
  }

  static BinaryNat pow2(std::uint64_t e) {
    BinaryNat x;
    x.words_.assign(e / 64 + 1, 0);
    x.words_.back() = 1ull << (e % 64);
    return x;
  }

  static BinaryNat pow(std::uint64_t base, std::uint64_t e) {
    BinaryNat result = from_small(1);
    BinaryNat b = from_small(base);
    while (e != 0) {
      if (e & 1) result = result * b;
      e >>= 1;
      if (e != 0) b = b * b;
    }
    return result;
  }

  bool is_zero() const { return words_.empty(); }
  std::span<const std::uint64_t> words() const { return words_; }

  std::uint64_t bit_length() const {
    if (words_.empty()) return 0;
    return (words_.size() - 1) * 64 + static_cast<std::uint64_t>(std::bit_width(words_.back()));
  }

  void mul_small(std::uint64_t c) {
    if (c == 0) {
      words_.clear();
      return;
    }
    std::uint64_t carry = 0;
    for (auto& w : words_) {
      unsigned __int128 v = static_cast<unsigned __int128>(w) * c + carry;
      w = static_cast<std::uint64_t>(v);
      carry = static_cast<std::uint64_t>(v >> 64);
    }
    if (carry != 0) words_.push_back(carry);
  }

  friend BinaryNat operator*(const BinaryNat& a, const BinaryNat& b) {
    BinaryNat r;
    if (a.is_zero() || b.is_zero()) return r;
    r.words_.assign(a.words_.size() + b.words_.size(), 0);
    for (std::size_t i = 0; i < a.words_.size(); ++i) {
      std::uint64_t carry = 0;
      const unsigned __int128 ai = a.words_[i];
      for (std::size_t j = 0; j < b.words_.size(); ++j) {
        unsigned __int128 v = ai * b.words_[j] + r.words_[i + j] + carry;
        r.words_[i + j] = static_cast<std::uint64_t>(v);
        carry = static_cast<std::uint64_t>(v >> 64);
      }
      r.words_[i + b.words_.size()] = carry;
    }
    r.trim();
    return r;
  }

  friend bool operator==(const BinaryNat&, const BinaryNat&) = default;

  friend std::strong_ordering operator<=>(const BinaryNat& a, const BinaryNat& b) {
    if (a.words_.size() != b.words_.size()) return a.words_.size() <=> b.words_.size();
    for (std::size_t i = a.words_.size(); i-- > 0;) {
      if (a.words_[i] != b.words_[i]) return a.words_[i] <=> b.words_[i];
    }
    return std::strong_ordering::equal;
  }

 private:
  void trim() {
    while (!words_.empty() && words_.back() == 0) words_.pop_back();
  }

  std::vector<std::uint64_t> words_;  // little-endian, no high zero word
};

}  // namespace digitpow
