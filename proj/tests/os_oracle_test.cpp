#include <gtest/gtest.h>

#include <random>

#include "braidcohom/character_oracle.hpp"
#include "braidcohom/combinatorics.hpp"
#include "braidcohom/dimension.hpp"
#include "braidcohom/errors.hpp"
#include "braidcohom/os_oracle.hpp"

using namespace braidcohom;
using namespace braidcohom::os;

namespace {

StandardMonomial mono(std::vector<Factor> f) { return StandardMonomial(std::move(f)); }

} // namespace

TEST(Basis, SmallCases) {
  auto b = basis(3, 1);
  ASSERT_EQ(b.size(), 3u);
  EXPECT_EQ(b[0].to_string(), "ω12");
  EXPECT_EQ(b[1].to_string(), "ω13");
  EXPECT_EQ(b[2].to_string(), "ω23");
  EXPECT_EQ(basis(4, 2).size(), 11u);
  for (int n = 1; n <= 6; ++n)
    EXPECT_EQ(basis(n, 0).size(), 1u);
  EXPECT_THROW(basis(4, 4), DomainError);
}

TEST(Basis, SizeIsStirling) {
  for (int n = 1; n <= 8; ++n)
    for (int k = 0; k < n; ++k)
      EXPECT_EQ(BigNat(basis(n, k).size()), stirling_cycle(n, n - k));
}

TEST(StandardMonomial, Validation) {
  EXPECT_THROW(mono({{1, 1}}), DomainError);
  EXPECT_THROW(mono({{0, 2}, {1, 2}}), DomainError);
  EXPECT_NO_THROW(mono({{0, 1}, {1, 2}}));
}

TEST(Straighten, ExteriorSquareVanishes) {
  EXPECT_TRUE(straighten({{0, 1}, {0, 1}}).is_zero());
  EXPECT_TRUE(straighten({{0, 1}, {1, 0}}).is_zero());
}

TEST(Straighten, StandardMonomialIsFixed) {
  for (auto const &m : basis(5, 3)) {
    auto s = straighten(m.factors());
    ASSERT_EQ(s.terms().size(), 1u);
    EXPECT_EQ(s.coefficient(m), 1);
  }
}

TEST(Straighten, Anticommutes) {
  auto s = straighten({{1, 2}, {0, 1}});
  EXPECT_EQ(s.coefficient(mono({{0, 1}, {1, 2}})), -1);
}

TEST(Straighten, ArnoldRelation) {
  // ω12ω23 + ω23ω31 + ω31ω12 = 0
  SignedCombination sum = straighten({{0, 1}, {1, 2}});
  sum += straighten({{1, 2}, {2, 0}});
  sum += straighten({{2, 0}, {0, 1}});
  EXPECT_TRUE(sum.is_zero()) << sum.to_string();
  // ω13ω23 - ω13ω12 straightens to ω12ω23
  auto lhs = straighten({{0, 2}, {1, 2}});
  lhs -= straighten({{0, 2}, {0, 1}});
  SignedCombination expected;
  expected.add(mono({{0, 1}, {1, 2}}), 1);
  EXPECT_EQ(lhs, expected) << lhs.to_string();
  EXPECT_EQ(straighten({{0, 2}, {1, 2}}).to_string(), "-ω12ω13 + ω12ω23");
}

TEST(Straighten, ConfluentAcrossRewriteOrders) {
  std::mt19937 rng(3);
  for (int trial = 0; trial < 300; ++trial) {
    int n = 3 + static_cast<int>(rng() % 4);
    int k = 1 + static_cast<int>(rng() % static_cast<unsigned>(n - 1));
    std::vector<Factor> product;
    for (int t = 0; t < k; ++t) {
      int a = static_cast<int>(rng() % static_cast<unsigned>(n));
      int b = static_cast<int>(rng() % static_cast<unsigned>(n - 1));
      if (b >= a)
        ++b;
      product.emplace_back(a, b);
    }
    EXPECT_EQ(straighten(product, RewriteOrder::leftmost), straighten(product, RewriteOrder::rightmost));
  }
}

TEST(Trace, Identity) {
  for (int n = 1; n <= 6; ++n) {
    long long total = 0;
    for (int k = 0; k < n; ++k) {
      EXPECT_EQ(trace(Permutation(n), k), static_cast<long long>(basis(n, k).size()));
      total += trace(Permutation(n), k);
    }
    EXPECT_EQ(BigNat(total), factorial(n));
  }
}

TEST(Trace, ClassFunction) {
  std::mt19937 rng(5);
  for (int trial = 0; trial < 40; ++trial) {
    int n = 3 + static_cast<int>(rng() % 4);
    std::vector<int> x(static_cast<std::size_t>(n)), y(static_cast<std::size_t>(n));
    std::iota(x.begin(), x.end(), 0);
    std::iota(y.begin(), y.end(), 0);
    std::shuffle(x.begin(), x.end(), rng);
    std::shuffle(y.begin(), y.end(), rng);
    Permutation g(x), h(y);
    int k = static_cast<int>(rng() % static_cast<unsigned>(n));
    EXPECT_EQ(trace(g, k), trace(h * g * h.inverse(), k));
  }
}

TEST(Trace, FullGroupAverageInDegreeOne) {
  for (int n = 2; n <= 6; ++n) {
    BigInt sum = 0;
    for (auto const &[g, size] : young_subgroup_classes(n, 0))
      sum += BigInt(size) * trace(g, 1);
    EXPECT_EQ(sum, BigInt(factorial(n)));
  }
}

TEST(YoungSubgroupClasses, SizesSumToOrder) {
  for (int n = 2; n <= 8; ++n)
    for (int q = 0; q <= n / 2; ++q) {
      BigNat total = 0;
      for (auto const &[g, size] : young_subgroup_classes(n, q))
        total += size;
      EXPECT_EQ(total, factorial(n - q) * factorial(q));
    }
}

TEST(InvariantDim, PublishedValues) {
  for (int n = 3; n <= 7; ++n)
    EXPECT_EQ(invariant_dim(n, 0, 2), 0);
  std::vector<int> expected{1, 2, 2, 1};
  for (int k = 0; k < 4; ++k)
    EXPECT_EQ(invariant_dim(4, 1, k), expected[static_cast<std::size_t>(k)]);
  EXPECT_EQ(invariant_dim(6, 3, 2), 5);
}

TEST(InvariantDim, AgreesWithEngineAndCharacterOracle) {
  for (int n = 1; n <= 7; ++n)
    for (int q = 0; q <= std::min(3, n / 2); ++q)
      for (int k = 0; k < n; ++k) {
        auto os_dim = invariant_dim(n, q, k);
        EXPECT_EQ(os_dim, dim_invariant(n, q, k)) << n << ' ' << q << ' ' << k;
        EXPECT_EQ(os_dim, character::oracle_dim(n, q, k)) << n << ' ' << q << ' ' << k;
      }
}

TEST(InvariantDim, CapIsEnforced) {
  try {
    invariant_dim(8, 1, 1);
    FAIL();
  } catch (CapExceededError const &e) {
    EXPECT_EQ(e.flag(), "--oracle-cap");
    EXPECT_EQ(e.cap(), 7);
  }
}
