#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <unordered_set>
#include <utility>
#include <vector>

namespace hwp {

/// Point (row, col) of Z_m x Z_n. Always stored reduced.
struct Vertex {
  int row = 0;
  int col = 0;

  auto operator<=>(const Vertex&) const = default;
};

std::string to_string(const Vertex& v);

/// The vertex set Z_m x Z_n together with residue arithmetic on it.
class Grid {
 public:
  Grid(int m, int n);

  int rows() const { return m_; }
  int cols() const { return n_; }
  int vertex_count() const { return m_ * n_; }

  /// Reduces arbitrary integers into [0, m) x [0, n).
  Vertex at(long row, long col) const;
  bool contains(const Vertex& v) const {
    return v.row >= 0 && v.row < m_ && v.col >= 0 && v.col < n_;
  }
  int index(const Vertex& v) const { return v.row * n_ + v.col; }
  Vertex vertex(int index) const { return {index / n_, index % n_}; }

  bool operator==(const Grid&) const = default;

 private:
  int m_;
  int n_;
};

int mod(long value, int modulus);

/// Unordered vertex pair; endpoints are kept in lexicographic order.
struct Edge {
  Vertex a;
  Vertex b;

  /// Canonical edge between u and v. Throws InvalidArgument when u == v.
  static Edge make(const Vertex& u, const Vertex& v);

  Edge canonical() const { return make(a, b); }

  auto operator<=>(const Edge&) const = default;
};

std::string to_string(const Edge& e);

struct EdgeHash {
  std::size_t operator()(const Edge& e) const noexcept {
    std::uint64_t key = (std::uint64_t(std::uint32_t(e.a.row)) << 48) ^
                        (std::uint64_t(std::uint32_t(e.a.col)) << 32) ^
                        (std::uint64_t(std::uint32_t(e.b.row)) << 16) ^
                        std::uint64_t(std::uint32_t(e.b.col));
    return std::hash<std::uint64_t>{}(key * 0x9E3779B97F4A7C15ull);
  }
};

/// Hash set of canonical edges. All partition checks are set algebra on these.
class EdgeSet {
 public:
  using Storage = std::unordered_set<Edge, EdgeHash>;
  using const_iterator = Storage::const_iterator;

  EdgeSet() = default;

  /// Inserts the canonical form of e; returns false if it was already present.
  bool insert(const Edge& e) { return edges_.insert(e.canonical()).second; }
  bool contains(const Edge& e) const { return edges_.count(e.canonical()) != 0; }
  bool erase(const Edge& e) { return edges_.erase(e.canonical()) != 0; }
  std::size_t size() const { return edges_.size(); }
  bool empty() const { return edges_.empty(); }
  void reserve(std::size_t n) { edges_.reserve(n); }

  const_iterator begin() const { return edges_.begin(); }
  const_iterator end() const { return edges_.end(); }

  /// Edges in lexicographic order, for deterministic reporting.
  std::vector<Edge> sorted() const;

  bool operator==(const EdgeSet& other) const { return edges_ == other.edges_; }

 private:
  Storage edges_;
};

/// Degree of every vertex of the grid in the given edge set.
std::vector<int> degrees(const EdgeSet& edges, const Grid& grid);

/// Returns k if every vertex has degree k, -1 otherwise.
int regular_degree(const EdgeSet& edges, const Grid& grid);

/// Negation-closed set of (row-diff, col-diff) pairs over Z_m x Z_n, excluding (0, 0).
class ConnectionSet {
 public:
  /// Validates and reduces the given elements. Throws InvalidArgument if the set
  /// is not closed under negation or contains the identity.
  ConnectionSet(int m, int n, std::vector<std::pair<int, int>> elements);

  /// {(1, d), (-1, -d) : d in col_diffs}, i.e. the layer every cross-row host uses.
  static ConnectionSet adjacent_rows(int m, int n, const std::vector<int>& col_diffs);

  const std::vector<std::pair<int, int>>& elements() const { return elements_; }
  std::size_t size() const { return elements_.size(); }
  int rows() const { return m_; }
  int cols() const { return n_; }

 private:
  int m_;
  int n_;
  std::vector<std::pair<int, int>> elements_;
};

using ColumnPair = std::pair<int, int>;
using Matching = std::vector<ColumnPair>;

enum class TableName { I, Iprime };

/// Reference to a row of one of the two fixed 1-factorizations of K_16.
struct TableRef {
  TableName table = TableName::I;
  int index = 1;

  bool operator==(const TableRef&) const = default;
};

enum class HostKind {
  CayleyLayer,     ///< {±(1, d) : d in col_diffs}
  BlownCycle,      ///< C_m[n]
  Wreath,          ///< C_m wreath K_n
  MatchingCopies,  ///< the same column matching copied into every row
  CliqueCopies,    ///< m disjoint copies of K_n, one per row
  Union,           ///< edge-disjoint union of parts
};

/// Recipe that deterministically regenerates a host edge set.
struct HostDescriptor {
  HostKind kind = HostKind::CayleyLayer;
  int m = 0;
  int n = 0;
  std::vector<int> col_diffs;          // CayleyLayer
  Matching pairs;                      // MatchingCopies given explicitly
  std::optional<TableRef> table;       // MatchingCopies drawn from a table
  std::vector<HostDescriptor> parts;   // Union

  bool operator==(const HostDescriptor&) const = default;

  static HostDescriptor cayley(int m, int n, std::vector<int> col_diffs);
  static HostDescriptor blown(int m, int n);
  static HostDescriptor wreath(int m, int n);
  static HostDescriptor matching(int m, int n, Matching pairs);
  static HostDescriptor table_matching(int m, TableName table, int index);
  static HostDescriptor cliques(int m, int n);
  static HostDescriptor union_of(int m, int n, std::vector<HostDescriptor> parts);
};

EdgeSet build_cayley_layer(int m, int n, const ConnectionSet& conn);
EdgeSet build_blown_cycle(int m, int n);
EdgeSet build_wreath(int m, int n);
/// Copies each column pair into every row. Throws InvalidArgument on overlapping pairs.
EdgeSet build_matching_copies(int m, int n, const Matching& matching);
EdgeSet build_matching_copies(int m, const Matching& matching);
EdgeSet build_clique_copies(int m, int n);

struct LabeledEdges {
  std::string label;
  EdgeSet edges;
};

/// Union of pairwise edge-disjoint parts. Throws OverlapError naming the shared
/// edge and both part labels.
EdgeSet disjoint_union(const std::vector<LabeledEdges>& parts);

/// Regenerates the edge set described by d.
EdgeSet build_host(const HostDescriptor& d);

/// Symmetric closure of a column-difference list, reduced mod n, sorted, deduplicated.
std::vector<int> symmetric_closure(const std::vector<int>& diffs, int n);

}  // namespace hwp
