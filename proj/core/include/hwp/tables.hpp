#pragma once

#include <array>
#include <string>
#include <vector>

#include "hwp/graph.hpp"

namespace hwp {

/// Fifteen perfect matchings on Z_16 whose union is K_16.
struct MatchingTable {
  TableName name = TableName::I;
  std::array<Matching, 15> matchings;

  const Matching& at(int k) const;  // 1-based
};

const MatchingTable& matching_table(TableName name);

/// The k-th matching (1 <= k <= 15) of the named table, as transcribed.
const Matching& get_matching(TableName name, int k);

std::string table_label(TableName name, int k);

/// Every invariant the tables must satisfy; an empty result means all hold.
/// Problems name the offending matching index.
std::vector<std::string> check_matching_table(const MatchingTable& table);

/// The pairs of matchings documented to close into a single 16-cycle.
std::vector<std::pair<TableRef, TableRef>> documented_hamiltonian_pairs();

/// Cycles of the 2-regular multigraph a ∪ b on Z_n, each as a vertex sequence.
std::vector<std::vector<int>> union_cycles(const Matching& a, const Matching& b, int n);

/// True if `matching` is a perfect matching of Z_n.
bool is_perfect_matching(const Matching& matching, int n);

/// Hamiltonian decomposition of K_n minus the matching left out by the zigzag
/// construction on {inf} ∪ Z_{n-1} (inf labelled n-1).
std::vector<std::vector<int>> walecki_base(int n);
Matching walecki_base_matching(int n);

/// n/2 - 1 edge-disjoint Hamiltonian cycles of K_n whose union is K_n minus
/// `removed`. Throws InvalidArgument if `removed` is not a perfect matching.
std::vector<std::vector<int>> walecki_minus_matching(int n, const Matching& removed);

/// The n = 16 case: seven Hamiltonian 16-cycles.
std::vector<std::vector<int>> walecki_k16_minus_f(const Matching& removed);

/// Four edge-disjoint Hamiltonian cycles partitioning C_4[4].
std::vector<std::vector<Vertex>> c4_4_hamiltonian_decomposition();

/// Runs check_matching_table on both tables plus the Hamiltonian-pair and
/// Walecki checks; returns all problems found.
std::vector<std::string> table_selftest();
/// Same checks against caller-supplied tables.
std::vector<std::string> table_selftest(const MatchingTable& i_table, const MatchingTable& iprime_table);

}  // namespace hwp
