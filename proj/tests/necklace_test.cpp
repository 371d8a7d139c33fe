#include <gtest/gtest.h>

#include "braidcohom/errors.hpp"
#include "braidcohom/necklace.hpp"
#include "oracles.hpp"

using namespace braidcohom;

namespace {

std::vector<std::vector<int>> entries_of(std::vector<CycleInvariant> const &cs) {
  std::vector<std::vector<int>> out;
  for (auto const &c : cs)
    out.push_back(c.entries());
  return out;
}

} // namespace

TEST(CycleInvariant, CanonicalisesToMinimalRotation) {
  auto c = CycleInvariant::from_gaps(6, {1, 2, 0});
  EXPECT_EQ(c.entries(), (std::vector<int>{0, 1, 2}));
  EXPECT_EQ(c, CycleInvariant::from_gaps(6, {2, 0, 1}));
  EXPECT_EQ(c.to_string(), "(0,1,2)");
  EXPECT_EQ(CycleInvariant::empty(3).to_string(), "-");
}

TEST(CycleInvariant, Validation) {
  EXPECT_THROW(CycleInvariant::from_gaps(6, {1, 1}), DomainError);
  EXPECT_THROW(CycleInvariant::from_gaps(3, {-1, 3}), DomainError);
  EXPECT_THROW(CycleInvariant::from_gaps(3, {}), DomainError);
  EXPECT_THROW(CycleInvariant::empty(0), DomainError);
}

TEST(CycleInvariant, EmptySortsLast) {
  EXPECT_LT(CycleInvariant::from_gaps(3, {2}), CycleInvariant::empty(3));
  EXPECT_LT(CycleInvariant::from_gaps(6, {0, 1, 2}), CycleInvariant::from_gaps(6, {0, 2, 1}));
}

TEST(MinRotationMultiplicity, Examples) {
  EXPECT_EQ(min_rotation_multiplicity(CycleInvariant::from_gaps(6, {1, 2, 0})), 1);
  EXPECT_EQ(min_rotation_multiplicity(CycleInvariant::from_gaps(2, {0, 0})), 2);
  std::vector<int> t{1, 0, 1, 0};
  EXPECT_EQ(min_rotation_multiplicity(t), 2);
  EXPECT_THROW(min_rotation_multiplicity(CycleInvariant::empty(4)), DomainError);
}

TEST(MinRotationMultiplicity, DividesLength) {
  for (int part = 3; part <= 12; ++part)
    for (int d = 1; d < part; ++d)
      for (auto const &c : enumerate_admissible_cycles(part, d))
        EXPECT_EQ(d % min_rotation_multiplicity(c), 0);
}

TEST(SupportPatterns, Examples) {
  auto p32 = support_patterns(3, 2);
  ASSERT_EQ(p32.size(), 1u);
  EXPECT_EQ(p32[0].multiplicities, (std::vector<int>{1, 1}));
  EXPECT_EQ(p32[0].values, (std::vector<int>{0, 1}));

  auto p42 = support_patterns(4, 2);
  ASSERT_EQ(p42.size(), 2u);
  EXPECT_EQ(p42[0], (SupportPattern{{2}, {1}}));
  EXPECT_EQ(p42[1], (SupportPattern{{1, 1}, {0, 2}}));

  EXPECT_THROW(support_patterns(3, 3), DomainError);
  EXPECT_THROW(support_patterns(2, 1), DomainError);
}

TEST(SupportPatterns, SatisfyConstraints) {
  for (int part = 3; part <= 14; ++part)
    for (int d = 1; d < part; ++d)
      for (auto const &t : support_patterns(part, d)) {
        int weight = 0;
        for (std::size_t i = 0; i < t.values.size(); ++i) {
          weight += t.multiplicities[i] * t.values[i];
          EXPECT_GE(t.multiplicities[i], 1);
          if (i > 0)
            EXPECT_LT(t.values[i - 1], t.values[i]);
        }
        EXPECT_EQ(t.length(), d);
        EXPECT_EQ(weight, part - d);
      }
}

TEST(PiKTerm, Examples) {
  SupportPattern two{{2}, {1}};
  EXPECT_EQ(pattern_primes(two, 1), std::vector<int>{2});
  EXPECT_EQ(pi_k_term(two, 1, 0, 2), 1);
  EXPECT_EQ(pi_k_term(two, 1, 1, 2), 1);
  EXPECT_EQ(pi_k_term(two, 2, 0, 2), 1);

  SupportPattern split{{1, 1}, {0, 2}};
  EXPECT_TRUE(pattern_primes(split, 1).empty());
  EXPECT_EQ(pi_k_term(split, 1, 0, 2), 2);
}

TEST(PiKTerm, Errors) {
  SupportPattern split{{1, 1}, {0, 2}};
  EXPECT_THROW(pi_k_term(split, 2, 0, 2), DomainError);
  EXPECT_THROW(pi_k_term(split, 1, 1, 2), DomainError);
  EXPECT_THROW(pi_k_term(split, 1, 0, 3), DomainError);
}

TEST(PiCount, BaseCases) {
  for (int d = 0; d <= 2; ++d)
    EXPECT_EQ(pi_count(2, d), 1);
  for (int part = 3; part <= 24; ++part) {
    EXPECT_EQ(pi_count(part, 0), 0);
    EXPECT_EQ(pi_count(part, part), 0);
  }
  EXPECT_THROW(pi_count(1, 0), DomainError);
  EXPECT_THROW(pi_count(4, 5), DomainError);
}

TEST(PiCount, PublishedValues) {
  EXPECT_EQ(pi_count(4, 2), 1);
  EXPECT_EQ(pi_count(5, 2), 2);
  EXPECT_EQ(pi_count(6, 2), 3);
  EXPECT_EQ(pi_count(6, 3), 3);
  for (int part = 2; part <= 24; ++part)
    EXPECT_EQ(pi_count(part, 1), 1);
}

TEST(PiCount, TwoMarksByResidue) {
  // ½λ-1 for λ ≡ 0 mod 4, ½λ for λ ≡ 2, ½(λ-1) for odd λ
  for (int part = 3; part <= 24; ++part) {
    int expected = part % 4 == 0 ? part / 2 - 1 : (part % 4 == 2 ? part / 2 : (part - 1) / 2);
    EXPECT_EQ(pi_count(part, 2), expected) << part;
  }
}

TEST(EnumerateAdmissibleCycles, Examples) {
  EXPECT_EQ(entries_of(enumerate_admissible_cycles(6, 2)),
            (std::vector<std::vector<int>>{{0, 4}, {1, 3}, {2, 2}}));
  EXPECT_EQ(entries_of(enumerate_admissible_cycles(4, 2)), (std::vector<std::vector<int>>{{0, 2}}));
  EXPECT_EQ(entries_of(enumerate_admissible_cycles(3, 2)), (std::vector<std::vector<int>>{{0, 1}}));
  auto two = enumerate_admissible_cycles(2, 0);
  ASSERT_EQ(two.size(), 1u);
  EXPECT_TRUE(two[0].is_empty());
}

TEST(EnumerateAdmissibleCycles, MatchesClosedFormAndBruteForce) {
  for (int part = 2; part <= 24; ++part)
    for (int d = 0; d <= part; ++d) {
      auto cycles = enumerate_admissible_cycles(part, d);
      EXPECT_EQ(pi_count(part, d), cycles.size()) << part << ' ' << d;
      if (part >= 3 && part <= 18)
        EXPECT_EQ(cycles.size(), oracles::admissible_orbits_brute(part, d)) << part << ' ' << d;
      for (std::size_t i = 1; i < cycles.size(); ++i)
        EXPECT_LT(cycles[i - 1], cycles[i]);
      for (auto const &c : cycles) {
        EXPECT_TRUE(block_admissible(c));
        if (c.is_empty())
          continue;
        int mult = min_rotation_multiplicity(c);
        if (part >= 3 && part % 4 != 2)
          EXPECT_EQ(mult, 1);
        if (part % 4 == 2)
          EXPECT_LE(mult, 2);
      }
    }
}

TEST(PiCount, BoundedByBurnsideNecklaceCount) {
  for (int part = 2; part <= 24; ++part) {
    BigNat admissible = 0, necklaces = 0;
    for (int d = 0; d <= part; ++d) {
      admissible += pi_count(part, d);
      necklaces += oracles::burnside_necklaces(part, d);
      EXPECT_LE(pi_count(part, d), oracles::burnside_necklaces(part, d));
    }
    EXPECT_LE(admissible, necklaces);
  }
}

TEST(BlockAdmissible, Conditions) {
  EXPECT_TRUE(block_admissible(CycleInvariant::from_gaps(3, {2})));
  EXPECT_FALSE(block_admissible(CycleInvariant::from_gaps(4, {1, 1})));
  EXPECT_TRUE(block_admissible(CycleInvariant::from_gaps(6, {2, 2})));
  EXPECT_FALSE(block_admissible(CycleInvariant::from_gaps(6, {1, 1, 1})));
  EXPECT_FALSE(block_admissible(CycleInvariant::empty(3)));
  EXPECT_FALSE(block_admissible(CycleInvariant::from_gaps(3, {0, 0, 0})));
  EXPECT_TRUE(block_admissible(CycleInvariant::from_gaps(2, {0, 0})));
  EXPECT_TRUE(block_admissible(CycleInvariant::empty(1)));
}

TEST(PiCount, ThreeMarksByResidue) {
  // (λ² - 3λ)/6, plus 1/3 when 3 does not divide λ
  for (int part = 4; part <= 24; ++part) {
    int six_times = part * part - 3 * part + (part % 3 == 0 ? 0 : 2);
    EXPECT_EQ(pi_count(part, 3) * 6, six_times) << part;
  }
}
