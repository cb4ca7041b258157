#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "hwp/factor.hpp"
#include "hwp/graph.hpp"

namespace hwp {

class SolutionCache;

/// Column differences, reduced mod n, one per factor to produce.
struct DifferenceMultiset {
  int n = 16;
  std::vector<int> values;

  /// {0} ∪ ±{a, b, ...} style constructors.
  static DifferenceMultiset symmetric(int n, const std::vector<int>& generators, bool with_zero);
  static DifferenceMultiset full(int n);

  /// Sorted residues, e.g. "0,2,14".
  std::string key() const;
  bool operator==(const DifferenceMultiset&) const = default;
};

/// F sequences of m column differences. Sequence k, read from row 0, is the
/// base cycle (t, d_0 + ... + d_{t-1}) of factor k.
struct DifferencePattern {
  int m = 0;
  int n = 0;
  std::vector<std::vector<int>> steps;  // steps[k][t]

  bool operator==(const DifferencePattern&) const = default;
};

/// Empty if the pattern is valid for `values`: at every position the F
/// differences are a permutation of values, and every sequence sums to 0 mod n.
std::vector<std::string> check_pattern(const DifferencePattern& p, const DifferenceMultiset& values);

/// m * sum(values) == 0 (mod n) is necessary for any pattern to exist.
bool pattern_parity_ok(int m, const DifferenceMultiset& values);

struct SolverOptions {
  std::uint64_t seed = 0x5eed;
  std::uint64_t iteration_budget = 100'000;  // descent steps
};

/// Two-stage search: a value-count matrix with zero-sum rows by steepest descent,
/// then per-position bijections by repeated bipartite perfect matching.
/// Throws Infeasible when the parity condition fails, SearchTimeout when the
/// budget is spent.
DifferencePattern solve_row_monotone(int m, const DifferenceMultiset& values,
                                     const SolverOptions& options = {});

/// Factor k is the n column translates of base cycle k.
std::vector<CycleFactor> pattern_to_factors(const DifferencePattern& p, const std::string& label);

/// Reads a pattern back from factors produced by pattern_to_factors.
/// Throws InvalidArgument if some factor is not row-monotone.
DifferencePattern recover_pattern(const std::vector<CycleFactor>& factors, int m, int n);

struct LayerStats {
  bool cache_hit = false;
  std::string route;  // "pattern", "quarter+pattern" or "exact-cover"
  std::uint64_t nodes = 0;
};

/// C_m-factorization of the layer {±1} x values, one factor per value.
/// Uses the pattern solver when the parity condition holds, otherwise splits
/// off {±n/4, n/2} via lemma_quarter. Results go through `cache` if given.
Decomposition factorize_layer(int m, const DifferenceMultiset& values, const SolverOptions& options = {},
                              SolutionCache* cache = nullptr, LayerStats* stats = nullptr);

/// Four C_4-factors partitioning C_m[4] (m >= 3 odd): a 1-factorization of
/// C_m[2] with every edge blown up to the 4-cycle on its column pairs.
Decomposition c4_ring_factorize(int m);

/// Four perfect matchings partitioning C_m[2], m >= 3 odd.
std::vector<std::vector<Edge>> cm2_one_factorization(int m);

}  // namespace hwp
