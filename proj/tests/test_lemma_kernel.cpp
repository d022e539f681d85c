#include <gtest/gtest.h>

#include "digitpow/lemma_kernel.hpp"
#include "oracle.hpp"

using namespace digitpow;

namespace {

PowerState power_of_two(std::uint64_t n) {
  PowerState s;
  while (s.n() < n) s.step();
  return s;
}

// a >= b for decimal strings without leading zeros.
bool str_ge(const std::string& a, const std::string& b) {
  if (a.size() != b.size()) return a.size() > b.size();
  return a >= b;
}

// Nonzero digits of a decimal string, least significant first.
std::vector<DigitTerm> string_terms(const std::string& s) {
  std::vector<DigitTerm> out;
  for (std::size_t i = 0; i < s.size(); ++i) {
    const char c = s[s.size() - 1 - i];
    if (c != '0') out.push_back({static_cast<std::uint32_t>(c - '0'), i});
  }
  return out;
}

auto exact_oracle = [](std::uint64_t x) { return exact_floor_log2_pow10(x); };

}  // namespace

TEST(Decompose, Examples) {
  auto d = decompose(DecimalNat::from_small(7));
  EXPECT_EQ(d.terms, (std::vector<DigitTerm>{{7, 0}}));
  EXPECT_EQ(d.m(), 1u);

  d = decompose(DecimalNat::from_small(1024));
  EXPECT_EQ(d.terms, (std::vector<DigitTerm>{{4, 0}, {2, 1}, {1, 3}}));
  EXPECT_EQ(d.m(), 3u);

  d = decompose(DecimalNat::from_small(100000));
  EXPECT_EQ(d.terms, (std::vector<DigitTerm>{{1, 5}}));

  d = decompose(power_of_two(20).value());
  EXPECT_EQ(d.terms, (std::vector<DigitTerm>{{6, 0}, {7, 1}, {5, 2}, {8, 3}, {4, 4}, {1, 6}}));
  EXPECT_EQ(d.digit_total(), 31u);

  EXPECT_THROW(decompose(DecimalNat{}), std::domain_error);
}

TEST(Decompose, InvariantsOnPowersOfTwo) {
  PowerState s;
  for (std::uint64_t n = 0; n <= 1500; ++n) {
    const auto& v = s.value();
    const auto d = decompose(v);
    ASSERT_TRUE(d.well_formed());
    ASSERT_EQ(d.reconstruct(), v);
    ASSERT_EQ(d.digit_total(), v.digit_sum());
    ASSERT_LE(d.m(), d.digit_total());
    ASSERT_LE(d.m(), v.digit_count());
    ASSERT_EQ(d.terms.front().e, 0u) << "2^" << n << " ends in 0";
    if (n % 97 == 0) {
      ASSERT_EQ(d.terms, string_terms(oracle::pow(2, n)));
    }
    s.step();
  }
}

TEST(Decompose, WellFormedRejectsBadTerms) {
  Decomposition d;
  d.terms = {{1, 0}, {2, 0}};
  EXPECT_FALSE(d.well_formed());
  d.terms = {{0, 0}};
  EXPECT_FALSE(d.well_formed());
  d.terms = {{10, 0}};
  EXPECT_FALSE(d.well_formed());
  d.terms = {{1, 0}, {9, 4}};
  EXPECT_TRUE(d.well_formed());
}

TEST(SplitWitness, Examples) {
  const auto s10 = power_of_two(10);
  auto w = verify_lemma2(s10, 2);
  EXPECT_EQ(w.low, DecimalNat::from_small(24));
  EXPECT_EQ(w.high, DecimalNat::from_small(10));
  EXPECT_TRUE(w.divisible);
  EXPECT_TRUE(w.at_least_pow2);
  EXPECT_EQ(w.status, CheckStatus::pass);

  w = verify_lemma2(s10, 1);
  EXPECT_EQ(w.low, DecimalNat::from_small(4));
  EXPECT_EQ(w.status, CheckStatus::pass);
}

TEST(SplitWitness, EqualityWithZeroHighIsOutOfScope) {
  // 2^4 = 16 split at 10^4: A = 16 = 2^4 exactly, but B = 0.
  const auto w = verify_lemma2(power_of_two(4), 4);
  EXPECT_EQ(w.low, DecimalNat::from_small(16));
  EXPECT_TRUE(w.high.is_zero());
  EXPECT_TRUE(w.divisible);
  EXPECT_TRUE(w.at_least_pow2);
  EXPECT_EQ(w.status, CheckStatus::out_of_scope);
}

TEST(SplitWitness, Preconditions) {
  const auto s = power_of_two(10);
  EXPECT_THROW(verify_lemma2(s, 0), std::invalid_argument);
  EXPECT_THROW(verify_lemma2(s, 11), std::invalid_argument);
  EXPECT_THROW(verify_lemma2(PowerState(3), 1), std::invalid_argument);
}

TEST(SplitWitness, AgainstExplicitPowersOfTwo) {
  // Independent route: A compared with 2^k built as a decimal string.
  PowerState s;
  for (std::uint64_t n = 1; n <= 150; ++n) {
    s.step();
    const std::string value = oracle::pow(2, n);
    for (std::uint64_t k = 1; k <= n; ++k) {
      const auto w = verify_lemma2(s, k);
      const std::string low = k >= value.size() ? value : value.substr(value.size() - k);
      std::string low_trimmed = low.substr(std::min(low.find_first_not_of('0'), low.size() - 1));
      ASSERT_EQ(w.low.to_decimal_string(), low_trimmed);
      ASSERT_TRUE(w.reconstructs);
      ASSERT_TRUE(w.low_below_pow10);
      ASSERT_EQ(w.at_least_pow2, str_ge(low_trimmed, oracle::pow(2, k))) << n << "," << k;
      ASSERT_EQ(w.status, k < value.size() ? CheckStatus::pass : CheckStatus::out_of_scope) << n << "," << k;
    }
  }
}

TEST(SplitWitness, ExhaustiveSmallBand) {
  PowerState s;
  for (std::uint64_t n = 1; n <= 400; ++n) {
    s.step();
    const std::uint64_t kmax = std::min<std::uint64_t>(n, s.value().digit_count() - 1);
    for (std::uint64_t k = 1; k <= kmax; ++k) ASSERT_EQ(verify_lemma2(s, k).status, CheckStatus::pass) << n << "," << k;
  }
}

TEST(GapInequality, Examples) {
  const auto d = decompose(DecimalNat::from_small(1024));
  const auto checks = gap_inequality_check(d, exact_oracle);
  EXPECT_EQ(checks, (std::vector<bool>{true, true}));
  EXPECT_TRUE(gap_inequality_check(decompose(DecimalNat::from_small(8)), exact_oracle).empty());
  EXPECT_TRUE(gap_inequality_check(decompose(DecimalNat::from_small(1)), exact_oracle).empty());
  EXPECT_TRUE(all_hold({}));
}

TEST(GapInequality, DetectsAWideGap) {
  // 1000001: e = 0, 6; 6 > floor(log2 10 * 1) = 3.
  const auto checks = gap_inequality_check(decompose(DecimalNat::from_small(1000001)), exact_oracle);
  EXPECT_EQ(checks, (std::vector<bool>{false}));
}

TEST(FourPowerBound, Examples) {
  EXPECT_TRUE(four_power_bound_check(decompose(DecimalNat::from_small(1024))));
  EXPECT_TRUE(four_power_bound_check(decompose(DecimalNat::from_small(1))));
  // Multiples of ten fail the e_1 = 0 requirement: the check is not vacuous.
  EXPECT_FALSE(four_power_bound_check(decompose(DecimalNat::from_small(10))));
  EXPECT_FALSE(four_power_bound_check(decompose(DecimalNat::from_small(100))));
  // e_2 = 4 is not below 4^1.
  EXPECT_FALSE(four_power_bound_check(decompose(DecimalNat::from_small(10001))));
  EXPECT_TRUE(four_power_bound_check(decompose(DecimalNat::from_small(1001))));
}

TEST(BoundTableCheck, DominatesPowersOfTwo) {
  BoundTable table;
  PowerState s;
  for (std::uint64_t n = 0; n <= 3000; ++n) {
    const auto d = decompose(s.value());
    ASSERT_TRUE(bound_table_check(d, table, exact_oracle)) << n;
    ASSERT_TRUE(all_hold(gap_inequality_check(d, exact_oracle))) << n;
    ASSERT_TRUE(four_power_bound_check(d)) << n;
    s.step();
  }
  EXPECT_GE(table.size(), 7u);
}

TEST(BoundTableCheck, DetectsViolation) {
  BoundTable table;
  // e = 0, 4: B_2 = 3.
  EXPECT_FALSE(bound_table_check(decompose(DecimalNat::from_small(10001)), table, exact_oracle));
  EXPECT_TRUE(bound_table_check(decompose(DecimalNat::from_small(1001)), table, exact_oracle));
}
