// digitpow/lemma_kernel.hpp — per-instance checks of the two lemmas and the
// digit-position inequalities built on them.
//
// A power of two N is written as N = sum d_i 10^(e_i) over its nonzero
// digits, with e_1 < e_2 < ... < e_m. Splitting N at 10^k leaves a low part
// A < 10^k that must be a positive multiple of 2^k, which bounds how far
// apart consecutive nonzero digits can sit, which in turn bounds m from
// below. Every function here checks one link of that chain on a concrete
// value and reports the outcome instead of aborting.

#pragma once

#include <algorithm>
#include <cstdint>
#include <stdexcept>
#include <tuple>
#include <vector>

#include "digitpow/bound_engine.hpp"
#include "digitpow/decimal_nat.hpp"
#include "digitpow/power_state.hpp"

namespace digitpow {

struct DigitTerm {
  std::uint32_t d = 0;  // 1..9
  std::uint64_t e = 0;  // power of ten

  friend bool operator==(const DigitTerm&, const DigitTerm&) = default;
};

struct Decomposition {
  std::vector<DigitTerm> terms;  // ordered by strictly increasing e

  std::size_t m() const { return terms.size(); }

  std::uint64_t digit_total() const {
    std::uint64_t sum = 0;
    for (const auto& t : terms) sum += t.d;
    return sum;
  }

  /// 1 <= d_i <= 9 and e_1 < e_2 < ... < e_m.
  bool well_formed() const {
    for (std::size_t i = 0; i < terms.size(); ++i) {
      if (terms[i].d < 1 || terms[i].d > 9) return false;
      if (i > 0 && terms[i - 1].e >= terms[i].e) return false;
    }
    return true;
  }

  /// sum d_i 10^(e_i), assembled digit by digit.
  DecimalNat reconstruct() const {
    if (terms.empty()) return {};
    std::vector<std::uint32_t> limbs(terms.back().e / kLimbDigits + 1, 0);
    for (const auto& t : terms) limbs[t.e / kLimbDigits] += t.d * detail::kPow10[t.e % kLimbDigits];
    return DecimalNat::from_limbs(std::move(limbs));
  }
};

/// Reads the nonzero digits of x with their positions.
inline Decomposition decompose(const DecimalNat& x) {
  if (x.is_zero()) throw std::domain_error("decompose: only positive integers have a decomposition");
  Decomposition dec;
  const auto limbs = x.limbs();
  for (std::size_t i = 0; i < limbs.size(); ++i) {
    std::uint32_t limb = limbs[i];
    std::uint64_t e = i * std::uint64_t{kLimbDigits};
    while (limb != 0) {
      if (const auto d = limb % 10u; d != 0) dec.terms.push_back({d, e});
      limb /= 10u;
      ++e;
    }
  }
  return dec;
}

enum class CheckStatus { pass, fail, out_of_scope };

inline const char* to_string(CheckStatus s) {
  switch (s) {
    case CheckStatus::pass: return "pass";
    case CheckStatus::fail: return "fail";
    case CheckStatus::out_of_scope: return "out_of_scope";
  }
  return "?";
}

/// 2^n = low + high * 10^k, with every Lemma-2 property recorded.
struct SplitWitness {
  std::uint64_t n = 0;
  std::uint64_t k = 0;
  DecimalNat low;   // A
  DecimalNat high;  // B
  bool reconstructs = false;    // low + high * 10^k == 2^n
  bool low_below_pow10 = false; // low < 10^k
  bool divisible = false;       // 2^k | low
  bool at_least_pow2 = false;   // low = q * 2^k with q >= 1
  CheckStatus status = CheckStatus::fail;
};

/// Splits 2^n at 10^k and checks that the low part is a positive multiple
/// of 2^k. The lemma assumes a positive high part, so a split with
/// high = 0 is reported out of scope even when every property holds.
inline SplitWitness verify_lemma2(const PowerState& state, std::uint64_t k) {
  if (state.multiplier() != 2) throw std::invalid_argument("verify_lemma2: state must hold a power of two");
  if (k == 0 || k > state.n()) throw std::invalid_argument("verify_lemma2: need 1 <= k <= n");

  SplitWitness w;
  w.n = state.n();
  w.k = k;
  std::tie(w.low, w.high) = state.value().split_mod_pow10(k);

  DecimalNat joined = w.high;
  joined.mul_pow10(k);
  joined.add(w.low);
  w.reconstructs = joined == state.value();
  w.low_below_pow10 = w.low.is_zero() || w.low.digit_count() <= k;

  DecimalNat quotient = w.low;
  w.divisible = quotient.try_div_pow2(k);
  w.at_least_pow2 = w.divisible && !quotient.is_zero();

  const bool ok = w.reconstructs && w.low_below_pow10 && w.divisible && w.at_least_pow2;
  if (!ok) {
    w.status = CheckStatus::fail;
  } else {
    w.status = w.high.is_zero() ? CheckStatus::out_of_scope : CheckStatus::pass;
  }
  return w;
}

/// For k = 2..m: e_k <= floor(log2 10 * (e_{k-1} + 1)). Entry i of the
/// result belongs to k = i + 2.
template <class Oracle>
std::vector<bool> gap_inequality_check(const Decomposition& dec, Oracle&& floor_log2_pow10) {
  std::vector<bool> out;
  if (dec.m() < 2) return out;
  out.reserve(dec.m() - 1);
  for (std::size_t i = 1; i < dec.m(); ++i) {
    out.push_back(dec.terms[i].e <= floor_log2_pow10(dec.terms[i - 1].e + 1));
  }
  return out;
}

inline bool all_hold(const std::vector<bool>& checks) {
  return std::all_of(checks.begin(), checks.end(), [](bool b) { return b; });
}

/// e_1 = 0 and e_k < 4^(k-1) for every k.
inline bool four_power_bound_check(const Decomposition& dec) {
  if (dec.terms.empty() || dec.terms.front().e != 0) return false;
  for (std::size_t i = 0; i < dec.m(); ++i) {
    if (!below_four_pow(dec.terms[i].e, i + 1)) return false;
  }
  return true;
}

/// e_k <= B_k for every k. The table is extended only until an entry
/// exceeds e_m; past that point the claim holds because both sequences
/// increase.
template <class Oracle>
bool bound_table_check(const Decomposition& dec, BoundTable& table, Oracle&& floor_log2_pow10) {
  if (dec.terms.empty()) return true;
  const std::uint64_t top = dec.terms.back().e;
  if (table.size() == 0) table.extend(floor_log2_pow10);
  while (table.size() < dec.m() && table.entries.back() <= top) table.extend(floor_log2_pow10);
  const std::size_t checked = std::min<std::size_t>(dec.m(), table.size());
  for (std::size_t i = 0; i < checked; ++i) {
    if (dec.terms[i].e > table.entries[i]) return false;
  }
  return true;
}

}  // namespace digitpow
