#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

#include "hwp/factor.hpp"
#include "hwp/graph.hpp"

namespace hwp {

struct SearchStats {
  std::uint64_t nodes = 0;
  std::uint64_t cycles = 0;  // canonical L-cycles enumerated (dlx mode)
  std::string mode;          // "dlx" or "dfs"
};

struct ExactCoverOptions {
  std::uint64_t node_budget = 20'000'000;
  /// Above this many L-cycles the search switches from dancing links to a
  /// factor-by-factor depth-first search.
  std::size_t cycle_cap = 1'000'000;
};

/// Partitions a 2F-regular host into F factors of L-cycles. Throws
/// InvalidArgument on a bad precondition, SearchTimeout when the node budget
/// runs out and Infeasible when the search space is exhausted.
std::vector<CycleFactor> exact_cover_fallback(const EdgeSet& host, const Grid& grid, int L, int F,
                                              const ExactCoverOptions& options = {},
                                              SearchStats* stats = nullptr);

}  // namespace hwp
