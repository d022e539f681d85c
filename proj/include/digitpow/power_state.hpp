// digitpow/power_state.hpp — the pair (n, a^n) advanced one multiplication
// at a time.

#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <utility>

#include "digitpow/decimal_nat.hpp"

namespace digitpow {

inline bool is_power_of_ten(std::uint64_t a) {
  if (a == 0) return false;
  while (a % 10 == 0) a /= 10;
  return a == 1;
}

/// Rejects multipliers the sweep cannot say anything about. Powers of ten
/// have digit sum 1 at every exponent, so no growth bound can hold for them.
inline void validate_multiplier(std::uint64_t a) {
  if (a < 2 || a > 99) {
    throw std::invalid_argument("multiplier must be in 2..99, got " + std::to_string(a));
  }
  if (is_power_of_ten(a)) {
    throw std::invalid_argument("multiplier " + std::to_string(a) +
                                " is a power of 10: every power of it has digit sum 1, and the "
                                "unbounded-growth result holds for all positive integers except powers of 10");
  }
}

class PowerState {
 public:
  /// a^0 = 1.
  explicit PowerState(std::uint32_t multiplier = 2)
      : multiplier_(multiplier), value_(DecimalNat::from_small(1)) {
    validate_multiplier(multiplier);
  }

  /// Restores a saved state. The caller vouches that value = multiplier^n
  /// (checkpoints carry a digest for that).
  PowerState(std::uint32_t multiplier, std::uint64_t n, DecimalNat value)
      : multiplier_(multiplier), n_(n), value_(std::move(value)) {
    validate_multiplier(multiplier);
    if (value_.is_zero()) throw std::invalid_argument("PowerState: a power is never zero");
  }

  void step() {
    if (multiplier_ == 2) {
      value_.double_in_place();
    } else {
      value_.mul_small(multiplier_);
    }
    ++n_;
  }

  /// Walks back one exponent by exact division. Used to rebuild history
  /// behind a checkpoint.
  void step_back() {
    if (n_ == 0) throw std::logic_error("PowerState::step_back at n = 0");
    if (value_.div_small(multiplier_) != 0) throw std::logic_error("PowerState: value is not a power of the multiplier");
    --n_;
  }

  std::uint32_t multiplier() const { return multiplier_; }
  std::uint64_t n() const { return n_; }
  const DecimalNat& value() const { return value_; }

 private:
  std::uint32_t multiplier_;
  std::uint64_t n_ = 0;
  DecimalNat value_;
};

}  // namespace digitpow
