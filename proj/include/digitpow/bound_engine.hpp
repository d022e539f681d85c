// digitpow/bound_engine.hpp — exact integer replacements for every
// logarithm that appears in the digit-sum bound.
//
// floor(x * log2 10) is computed as bit_length(10^x) - 1, and "s > log_4 n"
// as 2s >= bit_length(n). No floating point is used anywhere in this file.

#pragma once

#include <bit>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

#include "digitpow/binary_nat.hpp"

namespace digitpow {

/// Below this exponent 10^x is built by repeated multiplication by ten;
/// above it by square-and-multiply. Both give the same exact value.
inline constexpr std::uint64_t kTimesTenChainLimit = 4096;

inline std::uint64_t exact_floor_log2_pow10(std::uint64_t x) {
  if (x == 0) return 0;
  if (x <= kTimesTenChainLimit) {
    BinaryNat p = BinaryNat::from_small(1);
    for (std::uint64_t i = 0; i < x; ++i) p.mul_small(10);
    return p.bit_length() - 1;
  }
  return BinaryNat::pow(10, x).bit_length() - 1;
}

/// floor(log2(10^x)) for x = 0, 1, 2, ..., extended on demand by one
/// multiplication by ten per new entry.
class Log2Pow10Table {
 public:
  Log2Pow10Table() : power_(BinaryNat::from_small(1)) { floors_.push_back(0); }

  std::uint64_t operator()(std::uint64_t x) {
    while (floors_.size() <= x) {
      power_.mul_small(10);
      floors_.push_back(power_.bit_length() - 1);
    }
    return floors_[x];
  }

  std::uint64_t size() const { return floors_.size(); }

 private:
  BinaryNat power_;  // 10^(floors_.size() - 1)
  std::vector<std::uint64_t> floors_;
};

/// v < 4^(k-1), decided by bit length so that k may be arbitrarily large.
inline bool below_four_pow(std::uint64_t v, std::uint64_t k) {
  if (k == 0) throw std::invalid_argument("below_four_pow: k must be at least 1");
  return static_cast<std::uint64_t>(std::bit_width(v)) <= 2 * (k - 1);
}

/// The recurrence B_1 = 0, B_k = floor(log2 10 * (B_{k-1} + 1)): an upper
/// bound on the position of the k-th nonzero digit of any power of two.
struct BoundTable {
  std::vector<std::uint64_t> entries;  // entries[k-1] = B_k

  std::uint64_t size() const { return entries.size(); }
  std::uint64_t at(std::uint64_t k) const { return entries.at(k - 1); }

  template <class Oracle>
  void extend(Oracle&& floor_log2_pow10) {
    const std::uint64_t k = entries.size() + 1;
    const std::uint64_t next = entries.empty() ? 0 : floor_log2_pow10(entries.back() + 1);
    if (!below_four_pow(next, k)) {
      throw std::logic_error("bound table: B_" + std::to_string(k) + " = " + std::to_string(next) +
                             " is not below 4^" + std::to_string(k - 1));
    }
    entries.push_back(next);
  }
};

inline BoundTable bound_table(std::uint64_t count) {
  if (count == 0) throw std::invalid_argument("bound_table: need at least one entry");
  BoundTable table;
  while (table.size() < count) table.extend(exact_floor_log2_pow10);
  return table;
}

/// s > log_4 n  <=>  4^s > n  <=>  2s >= bit_length(n).
inline bool theorem_check(std::uint64_t n, std::uint64_t s) {
  if (n == 0) throw std::invalid_argument("theorem_check: log_4 0 is undefined, n must be at least 1");
  return 2 * s >= static_cast<std::uint64_t>(std::bit_width(n));
}

/// 10^(dc-1) <= 2^n < 10^dc, by comparing exactly built powers of ten
/// against 2^n.
inline bool digit_count_formula_check(std::uint64_t n, std::uint64_t dc) {
  if (dc == 0) return false;
  const BinaryNat two_n = BinaryNat::pow2(n);
  return BinaryNat::pow(10, dc - 1) <= two_n && two_n < BinaryNat::pow(10, dc);
}

/// Same predicate through cached bit lengths. For a >= 1, 10^a is not a
/// power of two, so 10^a <= 2^n iff bit_length(10^a) <= n, and
/// 2^n < 10^a iff bit_length(10^a) > n.
inline bool digit_count_formula_check(std::uint64_t n, std::uint64_t dc, Log2Pow10Table& table) {
  if (dc == 0) return false;
  const bool lower = dc == 1 || table(dc - 1) + 1 <= n;
  const bool upper = table(dc) + 1 > n;
  return lower && upper;
}

}  // namespace digitpow
