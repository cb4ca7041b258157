#include <gtest/gtest.h>

#include <map>

#include "hwp/constructions.hpp"
#include "hwp/errors.hpp"
#include "hwp/pattern_solver.hpp"
#include "support.hpp"

using namespace hwp;

namespace {

// Pattern invariants checked by hand rather than through check_pattern.
void expect_pattern_invariants(const DifferencePattern& p, const DifferenceMultiset& s) {
  std::multiset<int> want;
  for (int v : s.values) want.insert(mod(v, s.n));
  ASSERT_EQ(p.steps.size(), s.values.size());
  for (int t = 0; t < p.m; ++t) {
    std::multiset<int> got;
    for (const auto& seq : p.steps) got.insert(mod(seq[std::size_t(t)], s.n));
    EXPECT_EQ(got, want) << "position " << t;
  }
  for (const auto& seq : p.steps) {
    ASSERT_EQ(int(seq.size()), p.m);
    long sum = 0;
    for (int d : seq) sum += d;
    EXPECT_EQ(mod(sum, s.n), 0);
  }
}

}  // namespace

TEST(DifferenceMultiset, Keys) {
  EXPECT_EQ(DifferenceMultiset::symmetric(16, {2}, true).key(), "0,2,14");
  EXPECT_EQ(DifferenceMultiset::symmetric(16, {1, 5, 6}, false).values.size(), 6u);
  EXPECT_EQ(DifferenceMultiset::symmetric(16, {2, 4, 6, 8}, true).values.size(), 8u);
  EXPECT_EQ(DifferenceMultiset::full(16).values.size(), 16u);
}

TEST(Parity, SetsWithHalfFailForOddM) {
  EXPECT_TRUE(pattern_parity_ok(9, DifferenceMultiset::symmetric(16, {1, 5, 6}, false)));
  EXPECT_FALSE(pattern_parity_ok(9, DifferenceMultiset::full(16)));
  EXPECT_FALSE(pattern_parity_ok(11, DifferenceMultiset::symmetric(16, {2, 4, 6, 8}, true)));
  EXPECT_THROW(solve_row_monotone(9, DifferenceMultiset::full(16)), Infeasible);
}

TEST(SolveRowMonotone, ZeroPlusMinusTwo) {
  const auto s = DifferenceMultiset::symmetric(16, {2}, true);
  const auto p = solve_row_monotone(9, s);
  EXPECT_EQ(p.steps.size(), 3u);
  expect_pattern_invariants(p, s);
  Decomposition d;
  d.host = HostDescriptor::cayley(9, 16, s.values);
  d.cycle_factors = pattern_to_factors(p, "p");
  EXPECT_TRUE(verify_decomposition(d));
}

TEST(SolveRowMonotone, SixValueSet) {
  const auto s = DifferenceMultiset::symmetric(16, {1, 5, 6}, false);
  for (int m : {9, 11, 13, 15, 21}) {
    const auto p = solve_row_monotone(m, s);
    expect_pattern_invariants(p, s);
    EXPECT_TRUE(check_pattern(p, s).empty());
  }
}

TEST(SolveRowMonotone, DeterministicUnderSeed) {
  const auto s = DifferenceMultiset::symmetric(16, {3, 4, 7}, false);
  EXPECT_EQ(solve_row_monotone(11, s), solve_row_monotone(11, s));
  SolverOptions other;
  other.seed = 99;
  expect_pattern_invariants(solve_row_monotone(11, s, other), s);
}

TEST(SolveRowMonotone, BudgetExhaustionIsReported) {
  SolverOptions tiny;
  tiny.iteration_budget = 0;
  EXPECT_THROW(solve_row_monotone(9, DifferenceMultiset::symmetric(16, {1, 5, 6}, false), tiny), SearchTimeout);
}

TEST(SolveRowMonotone, RejectsBadInput) {
  EXPECT_THROW(solve_row_monotone(8, DifferenceMultiset::symmetric(16, {2}, true)), InvalidArgument);
  DifferenceMultiset dup;
  dup.values = {1, 1};
  EXPECT_THROW(solve_row_monotone(9, dup), InvalidArgument);
}

TEST(CheckPattern, DetectsBrokenInvariants) {
  const auto s = DifferenceMultiset::symmetric(16, {2}, true);
  auto p = solve_row_monotone(9, s);
  auto q = p;
  q.steps[0][0] = 1;
  EXPECT_FALSE(check_pattern(q, s).empty());
  q = p;
  q.steps.pop_back();
  EXPECT_FALSE(check_pattern(q, s).empty());
}

TEST(PatternToFactors, AllZeroIsTheColumnFactor) {
  DifferencePattern p{9, 16, {std::vector<int>(9, 0)}};
  const auto f = pattern_to_factors(p, "z");
  ASSERT_EQ(f.size(), 1u);
  Decomposition a;
  a.host = HostDescriptor::cayley(9, 16, {0});
  a.cycle_factors = f;
  canonicalize(a);
  Decomposition b = column_cm_factor(9, 16);
  canonicalize(b);
  EXPECT_EQ(a.cycle_factors[0].cycles, b.cycle_factors[0].cycles);
}

TEST(PatternToFactors, RoundTripsThroughRecovery) {
  const auto s = DifferenceMultiset::symmetric(16, {2, 4}, true);
  const auto p = solve_row_monotone(9, s);
  const auto f = pattern_to_factors(p, "p");
  EXPECT_EQ(recover_pattern(f, 9, 16), p);
  for (const auto& x : f) EXPECT_EQ(x.cycles.size(), 16u);
  Decomposition d;
  d.host = HostDescriptor::cayley(9, 16, s.values);
  d.cycle_factors = f;
  EXPECT_EQ(build_host(d.host).size(), 720u);
  EXPECT_TRUE(verify_decomposition(d));
}

TEST(FactorizeLayer, RoutesByParity) {
  LayerStats st;
  const auto direct = factorize_layer(9, DifferenceMultiset::symmetric(16, {1, 2}, true), {}, nullptr, &st);
  EXPECT_EQ(st.route, "pattern");
  EXPECT_TRUE(verify_decomposition(direct));

  const auto full = factorize_layer(9, DifferenceMultiset::full(16), {}, nullptr, &st);
  EXPECT_EQ(st.route, "quarter+pattern");
  EXPECT_EQ(full.cycle_factors.size(), 16u);
  EXPECT_TRUE(verify_decomposition(full));
  EXPECT_TRUE(test::naive_partition(full, test::plain_edges(build_blown_cycle(9, 16))).ok);
}

TEST(FactorizeLayer, OddSetWithoutQuarterGoesToExactCover) {
  // {0, 8} is eight copies of C_9[2]. A C_9-factor there crosses at an even
  // number of cuts, so its complement crosses at an odd number and is a single
  // 18-cycle: the exhaustive fallback must report infeasibility.
  DifferenceMultiset s;
  s.values = {0, 8};
  EXPECT_THROW(factorize_layer(9, s), Infeasible);
}
