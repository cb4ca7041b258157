#include "hwp/graph.hpp"

#include <algorithm>
#include <set>

#include "hwp/errors.hpp"
#include "hwp/tables.hpp"

namespace hwp {

int mod(long value, int modulus) {
  long r = value % modulus;
  return int(r < 0 ? r + modulus : r);
}

std::string to_string(const Vertex& v) {
  return std::to_string(v.row) + ":" + std::to_string(v.col);
}

Grid::Grid(int m, int n) : m_(m), n_(n) {
  if (m < 1 || n < 1) {
    throw InvalidArgument("grid dimensions must be positive, got m=" + std::to_string(m) +
                          " n=" + std::to_string(n));
  }
}

Vertex Grid::at(long row, long col) const { return {mod(row, m_), mod(col, n_)}; }

Edge Edge::make(const Vertex& u, const Vertex& v) {
  if (u == v) throw InvalidArgument("edge endpoints coincide at " + to_string(u));
  return u < v ? Edge{u, v} : Edge{v, u};
}

std::string to_string(const Edge& e) { return to_string(e.a) + " " + to_string(e.b); }

std::vector<Edge> EdgeSet::sorted() const {
  std::vector<Edge> out(edges_.begin(), edges_.end());
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<int> degrees(const EdgeSet& edges, const Grid& grid) {
  std::vector<int> deg(grid.vertex_count(), 0);
  for (const Edge& e : edges) {
    ++deg[grid.index(e.a)];
    ++deg[grid.index(e.b)];
  }
  return deg;
}

int regular_degree(const EdgeSet& edges, const Grid& grid) {
  auto deg = degrees(edges, grid);
  if (deg.empty()) return 0;
  for (int d : deg) {
    if (d != deg.front()) return -1;
  }
  return deg.front();
}

ConnectionSet::ConnectionSet(int m, int n, std::vector<std::pair<int, int>> elements)
    : m_(m), n_(n) {
  if (m < 1 || n < 1) throw InvalidArgument("connection set needs positive m, n");
  std::set<std::pair<int, int>> reduced;
  for (auto [dr, dc] : elements) reduced.emplace(mod(dr, m), mod(dc, n));
  if (reduced.count({0, 0})) throw InvalidArgument("connection set contains the identity (0,0)");
  for (auto [dr, dc] : reduced) {
    if (!reduced.count({mod(-dr, m), mod(-dc, n)})) {
      throw InvalidArgument("connection set not closed under negation: (" + std::to_string(dr) +
                            "," + std::to_string(dc) + ") has no inverse");
    }
  }
  elements_.assign(reduced.begin(), reduced.end());
}

ConnectionSet ConnectionSet::adjacent_rows(int m, int n, const std::vector<int>& col_diffs) {
  std::vector<std::pair<int, int>> elems;
  for (int d : col_diffs) {
    elems.emplace_back(1, d);
    elems.emplace_back(-1, -d);
  }
  return ConnectionSet(m, n, std::move(elems));
}

HostDescriptor HostDescriptor::cayley(int m, int n, std::vector<int> col_diffs) {
  HostDescriptor d;
  d.kind = HostKind::CayleyLayer;
  d.m = m;
  d.n = n;
  d.col_diffs = std::move(col_diffs);
  return d;
}

HostDescriptor HostDescriptor::blown(int m, int n) {
  HostDescriptor d;
  d.kind = HostKind::BlownCycle;
  d.m = m;
  d.n = n;
  return d;
}

HostDescriptor HostDescriptor::wreath(int m, int n) {
  HostDescriptor d;
  d.kind = HostKind::Wreath;
  d.m = m;
  d.n = n;
  return d;
}

HostDescriptor HostDescriptor::matching(int m, int n, Matching pairs) {
  HostDescriptor d;
  d.kind = HostKind::MatchingCopies;
  d.m = m;
  d.n = n;
  d.pairs = std::move(pairs);
  return d;
}

HostDescriptor HostDescriptor::table_matching(int m, TableName table, int index) {
  HostDescriptor d;
  d.kind = HostKind::MatchingCopies;
  d.m = m;
  d.n = 16;
  d.table = TableRef{table, index};
  return d;
}

HostDescriptor HostDescriptor::cliques(int m, int n) {
  HostDescriptor d;
  d.kind = HostKind::CliqueCopies;
  d.m = m;
  d.n = n;
  return d;
}

HostDescriptor HostDescriptor::union_of(int m, int n, std::vector<HostDescriptor> parts) {
  HostDescriptor d;
  d.kind = HostKind::Union;
  d.m = m;
  d.n = n;
  d.parts = std::move(parts);
  return d;
}

EdgeSet build_cayley_layer(int m, int n, const ConnectionSet& conn) {
  if (m < 3) throw InvalidArgument("cayley layer needs m >= 3");
  if (conn.rows() != m || conn.cols() != n) {
    throw InvalidArgument("connection set was built for a different group");
  }
  Grid grid(m, n);
  EdgeSet out;
  out.reserve(std::size_t(grid.vertex_count()) * conn.size() / 2);
  for (int r = 0; r < m; ++r) {
    for (int c = 0; c < n; ++c) {
      for (auto [dr, dc] : conn.elements()) out.insert(Edge::make({r, c}, grid.at(r + dr, c + dc)));
    }
  }
  return out;
}

EdgeSet build_blown_cycle(int m, int n) {
  std::vector<int> all(n);
  for (int c = 0; c < n; ++c) all[c] = c;
  return build_cayley_layer(m, n, ConnectionSet::adjacent_rows(m, n, all));
}

EdgeSet build_clique_copies(int m, int n) {
  EdgeSet out;
  for (int r = 0; r < m; ++r) {
    for (int a = 0; a < n; ++a) {
      for (int b = a + 1; b < n; ++b) out.insert(Edge::make({r, a}, {r, b}));
    }
  }
  return out;
}

EdgeSet build_wreath(int m, int n) {
  if (m < 3 || n < 2) throw InvalidArgument("wreath product needs m >= 3 and n >= 2");
  return disjoint_union({{"cross-rows", build_blown_cycle(m, n)},
                         {"row-cliques", build_clique_copies(m, n)}});
}

EdgeSet build_matching_copies(int m, int n, const Matching& matching) {
  std::vector<char> seen(n, 0);
  for (auto [a, b] : matching) {
    if (a < 0 || a >= n || b < 0 || b >= n || a == b) {
      throw InvalidArgument("column pair (" + std::to_string(a) + "," + std::to_string(b) +
                            ") out of range");
    }
    if (seen[a] || seen[b]) {
      throw InvalidArgument("overlapping column pairs at (" + std::to_string(a) + "," +
                            std::to_string(b) + ")");
    }
    seen[a] = seen[b] = 1;
  }
  EdgeSet out;
  for (int r = 0; r < m; ++r) {
    for (auto [a, b] : matching) out.insert(Edge::make({r, a}, {r, b}));
  }
  return out;
}

EdgeSet build_matching_copies(int m, const Matching& matching) {
  return build_matching_copies(m, 16, matching);
}

EdgeSet disjoint_union(const std::vector<LabeledEdges>& parts) {
  EdgeSet out;
  std::size_t total = 0;
  for (const auto& p : parts) total += p.edges.size();
  out.reserve(total);
  for (std::size_t i = 0; i < parts.size(); ++i) {
    for (const Edge& e : parts[i].edges) {
      if (out.insert(e)) continue;
      std::size_t j = 0;
      while (j < i && !parts[j].edges.contains(e)) ++j;
      throw OverlapError("edge " + to_string(e) + " appears in both '" + parts[j].label +
                             "' and '" + parts[i].label + "'",
                         parts[j].label, parts[i].label);
    }
  }
  return out;
}

EdgeSet build_host(const HostDescriptor& d) {
  switch (d.kind) {
    case HostKind::CayleyLayer:
      return build_cayley_layer(d.m, d.n, ConnectionSet::adjacent_rows(d.m, d.n, d.col_diffs));
    case HostKind::BlownCycle:
      return build_blown_cycle(d.m, d.n);
    case HostKind::Wreath:
      return build_wreath(d.m, d.n);
    case HostKind::MatchingCopies:
      if (d.table) {
        if (d.n != 16) throw InvalidArgument("table matchings live on Z_16");
        return build_matching_copies(d.m, 16, get_matching(d.table->table, d.table->index));
      }
      return build_matching_copies(d.m, d.n, d.pairs);
    case HostKind::CliqueCopies:
      return build_clique_copies(d.m, d.n);
    case HostKind::Union: {
      std::vector<LabeledEdges> parts;
      parts.reserve(d.parts.size());
      for (std::size_t i = 0; i < d.parts.size(); ++i) {
        if (d.parts[i].m != d.m || d.parts[i].n != d.n) {
          throw InvalidArgument("union part " + std::to_string(i) + " lives on a different grid");
        }
        parts.push_back({"part " + std::to_string(i), build_host(d.parts[i])});
      }
      return disjoint_union(parts);
    }
  }
  throw InvalidArgument("unknown host kind");
}

std::vector<int> symmetric_closure(const std::vector<int>& diffs, int n) {
  std::set<int> s;
  for (int d : diffs) {
    s.insert(mod(d, n));
    s.insert(mod(-d, n));
  }
  return {s.begin(), s.end()};
}

}  // namespace hwp
