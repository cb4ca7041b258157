#include "hwp/exact_cover.hpp"

#include <algorithm>
#include <array>
#include <limits>
#include <map>

#include "hwp/errors.hpp"

namespace hwp {
namespace {

struct Adjacent {
  int vertex;
  int edge;
};

struct Graph {
  int vertices = 0;
  std::vector<std::vector<Adjacent>> adj;
  int edges = 0;
};

Graph index_host(const EdgeSet& host, const Grid& grid) {
  Graph g;
  g.vertices = grid.vertex_count();
  g.adj.assign(std::size_t(g.vertices), {});
  for (const Edge& e : host.sorted()) {
    if (!grid.contains(e.a) || !grid.contains(e.b)) {
      throw InvalidArgument("host edge " + to_string(e) + " outside grid");
    }
    const int a = grid.index(e.a);
    const int b = grid.index(e.b);
    g.adj[std::size_t(a)].push_back({b, g.edges});
    g.adj[std::size_t(b)].push_back({a, g.edges});
    ++g.edges;
  }
  for (auto& row : g.adj) {
    std::sort(row.begin(), row.end(), [](const Adjacent& x, const Adjacent& y) { return x.vertex < y.vertex; });
  }
  return g;
}

class Budget {
 public:
  Budget(std::uint64_t limit, SearchStats& stats) : limit_(limit), stats_(stats) {}

  void tick() {
    if (++stats_.nodes > limit_) {
      throw SearchTimeout("exact cover (" + stats_.mode + ") exceeded node budget of " +
                          std::to_string(limit_) + " after enumerating " +
                          std::to_string(stats_.cycles) + " cycles");
    }
  }

 private:
  std::uint64_t limit_;
  SearchStats& stats_;
};

// Canonical L-cycles (minimum vertex first, second vertex smaller than last).
// Returns false once `cap` cycles have been collected.
bool enumerate_cycles(const Graph& g, int L, std::size_t cap, std::vector<std::vector<int>>& out) {
  std::vector<int> path;
  std::vector<char> on_path(std::size_t(g.vertices), 0);
  bool within_cap = true;

  auto extend = [&](auto&& self, int start) -> void {
    if (!within_cap) return;
    const int cur = path.back();
    if (int(path.size()) == L) {
      if (path[1] > path.back()) return;
      for (const Adjacent& a : g.adj[std::size_t(cur)]) {
        if (a.vertex == start) {
          out.push_back(path);
          if (out.size() >= cap) within_cap = false;
          return;
        }
      }
      return;
    }
    for (const Adjacent& a : g.adj[std::size_t(cur)]) {
      if (a.vertex <= start || on_path[std::size_t(a.vertex)]) continue;
      on_path[std::size_t(a.vertex)] = 1;
      path.push_back(a.vertex);
      self(self, start);
      path.pop_back();
      on_path[std::size_t(a.vertex)] = 0;
    }
  };

  for (int s = 0; s < g.vertices && within_cap; ++s) {
    path = {s};
    on_path[std::size_t(s)] = 1;
    extend(extend, s);
    on_path[std::size_t(s)] = 0;
  }
  return within_cap;
}

int edge_between(const Graph& g, int u, int v) {
  for (const Adjacent& a : g.adj[std::size_t(u)]) {
    if (a.vertex == v) return a.edge;
  }
  return -1;
}

// Dancing links over items {edges} ∪ {(vertex, factor)}.
class Dlx {
 public:
  explicit Dlx(int items) : items_(items) {
    const std::size_t n = std::size_t(items) + 1;
    left_.resize(n);
    right_.resize(n);
    up_.resize(n);
    down_.resize(n);
    column_.resize(n);
    size_.assign(n, 0);
    option_.assign(n, -1);
    for (int i = 0; i <= items; ++i) {
      left_[std::size_t(i)] = i == 0 ? items : i - 1;
      right_[std::size_t(i)] = i == items ? 0 : i + 1;
      up_[std::size_t(i)] = down_[std::size_t(i)] = i;
      column_[std::size_t(i)] = i;
    }
  }

  void add_option(const std::vector<int>& items, int id) {
    int first = -1;
    for (int item : items) {
      const int c = item + 1;
      const int node = int(left_.size());
      left_.push_back(node);
      right_.push_back(node);
      up_.push_back(up_[std::size_t(c)]);
      down_.push_back(c);
      column_.push_back(c);
      option_.push_back(id);
      down_[std::size_t(up_[std::size_t(c)])] = node;
      up_[std::size_t(c)] = node;
      ++size_[std::size_t(c)];
      if (first < 0) {
        first = node;
      } else {
        left_[std::size_t(node)] = left_[std::size_t(first)];
        right_[std::size_t(node)] = first;
        right_[std::size_t(left_[std::size_t(first)])] = node;
        left_[std::size_t(first)] = node;
      }
    }
  }

  /// Returns chosen option ids, or throws Infeasible.
  std::vector<int> solve(Budget& budget) {
    std::vector<int> chosen;
    if (!search(chosen, budget)) throw Infeasible("exact cover has no solution");
    return chosen;
  }

 private:
  void cover(int c) {
    right_[std::size_t(left_[std::size_t(c)])] = right_[std::size_t(c)];
    left_[std::size_t(right_[std::size_t(c)])] = left_[std::size_t(c)];
    for (int i = down_[std::size_t(c)]; i != c; i = down_[std::size_t(i)]) {
      for (int j = right_[std::size_t(i)]; j != i; j = right_[std::size_t(j)]) {
        up_[std::size_t(down_[std::size_t(j)])] = up_[std::size_t(j)];
        down_[std::size_t(up_[std::size_t(j)])] = down_[std::size_t(j)];
        --size_[std::size_t(column_[std::size_t(j)])];
      }
    }
  }

  void uncover(int c) {
    for (int i = up_[std::size_t(c)]; i != c; i = up_[std::size_t(i)]) {
      for (int j = left_[std::size_t(i)]; j != i; j = left_[std::size_t(j)]) {
        ++size_[std::size_t(column_[std::size_t(j)])];
        up_[std::size_t(down_[std::size_t(j)])] = j;
        down_[std::size_t(up_[std::size_t(j)])] = j;
      }
    }
    right_[std::size_t(left_[std::size_t(c)])] = c;
    left_[std::size_t(right_[std::size_t(c)])] = c;
  }

  bool search(std::vector<int>& chosen, Budget& budget) {
    if (right_[0] == 0) return true;
    budget.tick();
    int best = right_[0];
    for (int c = right_[0]; c != 0; c = right_[std::size_t(c)]) {
      if (size_[std::size_t(c)] < size_[std::size_t(best)]) best = c;
    }
    if (size_[std::size_t(best)] == 0) return false;
    cover(best);
    for (int r = down_[std::size_t(best)]; r != best; r = down_[std::size_t(r)]) {
      chosen.push_back(option_[std::size_t(r)]);
      for (int j = right_[std::size_t(r)]; j != r; j = right_[std::size_t(j)]) cover(column_[std::size_t(j)]);
      if (search(chosen, budget)) return true;
      for (int j = left_[std::size_t(r)]; j != r; j = left_[std::size_t(j)]) uncover(column_[std::size_t(j)]);
      chosen.pop_back();
    }
    uncover(best);
    return false;
  }

  int items_;
  std::vector<int> left_, right_, up_, down_, column_, size_, option_;
};

std::vector<std::vector<std::vector<int>>> solve_dlx(const Graph& g, int L, int F,
                                                     const std::vector<std::vector<int>>& cycles,
                                                     Budget& budget) {
  const int forced_edge = g.adj[0].front().edge;  // lowest edge at vertex 0 goes to factor 0
  Dlx dlx(g.edges + g.vertices * F);
  std::vector<std::pair<int, int>> options;  // (cycle, factor)
  std::vector<int> items;
  for (std::size_t c = 0; c < cycles.size(); ++c) {
    const auto& cyc = cycles[c];
    std::vector<int> edge_ids;
    bool has_forced = false;
    for (int j = 0; j < L; ++j) {
      const int e = edge_between(g, cyc[std::size_t(j)], cyc[std::size_t((j + 1) % L)]);
      edge_ids.push_back(e);
      has_forced = has_forced || e == forced_edge;
    }
    for (int k = 0; k < F; ++k) {
      if (has_forced && k != 0) continue;
      items = edge_ids;
      for (int v : cyc) items.push_back(g.edges + v * F + k);
      dlx.add_option(items, int(options.size()));
      options.emplace_back(int(c), k);
    }
  }
  const auto chosen = dlx.solve(budget);
  std::vector<std::vector<std::vector<int>>> factors(static_cast<std::size_t>(F));
  for (int id : chosen) {
    auto [c, k] = options[std::size_t(id)];
    factors[std::size_t(k)].push_back(cycles[std::size_t(c)]);
  }
  return factors;
}

// Edge-major search: the lowest unused edge must lie on some L-cycle of some
// factor, so branch on the factor and grow that cycle outwards from the edge.
// Empty factors are interchangeable, so only the first empty one is tried.
class FactorDfs {
 public:
  FactorDfs(const Graph& g, int L, int F, Budget& budget)
      : g_(g), L_(L), F_(F), budget_(budget), edge_used_(std::size_t(g.edges), 0),
        covered_(std::size_t(F) * std::size_t(g.vertices), 0), factors_(std::size_t(F)) {
    for (int v = 0; v < g.vertices; ++v) {
      for (const Adjacent& a : g.adj[std::size_t(v)]) {
        if (v < a.vertex) ends_.resize(std::max(ends_.size(), std::size_t(a.edge) + 1));
        if (v < a.vertex) ends_[std::size_t(a.edge)] = {v, a.vertex};
      }
    }
    // All-pairs hop distances bound how far a path may stray from its start.
    const std::size_t V = std::size_t(g.vertices);
    dist_.assign(V * V, std::numeric_limits<int>::max());
    std::vector<int> queue;
    for (std::size_t s = 0; s < V; ++s) {
      int* row = &dist_[s * V];
      row[s] = 0;
      queue.assign(1, int(s));
      for (std::size_t h = 0; h < queue.size(); ++h) {
        const int u = queue[h];
        for (const Adjacent& a : g.adj[std::size_t(u)]) {
          if (row[a.vertex] != std::numeric_limits<int>::max()) continue;
          row[a.vertex] = row[u] + 1;
          queue.push_back(a.vertex);
        }
      }
    }
  }

  std::vector<std::vector<std::vector<int>>> run() {
    if (!solve(0, 0)) throw Infeasible("exact cover has no solution");
    return factors_;
  }

 private:
  bool solve(int first_edge, int started) {
    budget_.tick();
    int e = first_edge;
    while (e < g_.edges && edge_used_[std::size_t(e)]) ++e;
    if (e == g_.edges) return true;
    const auto [u, w] = ends_[std::size_t(e)];
    for (int f = 0; f < std::min(started + 1, F_); ++f) {
      if (cov(f, u) || cov(f, w)) continue;
      path_.assign({u, w});
      path_edges_.assign(1, e);
      cov(f, u) = 1;
      cov(f, w) = 1;
      const bool ok = neighbours_can_close(f, u, u, w) && neighbours_can_close(f, w, u, w) &&
                      grow(f, e, std::max(started, f + 1));
      cov(f, u) = 0;
      cov(f, w) = 0;
      if (ok) return true;
    }
    return false;
  }

  bool grow(int f, int first_edge, int started) {
    budget_.tick();
    const int start = path_.front();
    const int cur = path_.back();
    if (int(path_.size()) == L_) {
      for (const Adjacent& a : g_.adj[std::size_t(cur)]) {
        if (a.vertex != start || edge_used_[std::size_t(a.edge)]) continue;
        if (std::find(path_edges_.begin(), path_edges_.end(), a.edge) != path_edges_.end()) continue;
        path_edges_.push_back(a.edge);
        for (int pe : path_edges_) edge_used_[std::size_t(pe)] = 1;
        factors_[std::size_t(f)].push_back(path_);
        const auto saved_path = path_;
        const auto saved_edges = path_edges_;
        if (solve(first_edge + 1, started)) return true;
        path_ = saved_path;
        path_edges_ = saved_edges;
        factors_[std::size_t(f)].pop_back();
        for (int pe : path_edges_) edge_used_[std::size_t(pe)] = 0;
        path_edges_.pop_back();
      }
      return false;
    }
    for (const Adjacent& a : g_.adj[std::size_t(cur)]) {
      if (cov(f, a.vertex) || edge_used_[std::size_t(a.edge)]) continue;
      if (dist(a.vertex, start) > L_ - int(path_.size())) continue;
      cov(f, a.vertex) = 1;
      path_.push_back(a.vertex);
      path_edges_.push_back(a.edge);
      if (neighbours_can_close(f, cur, start, a.vertex) && neighbours_can_close(f, a.vertex, start, a.vertex) &&
          grow(f, first_edge, started)) {
        return true;
      }
      path_edges_.pop_back();
      path_.pop_back();
      cov(f, a.vertex) = 0;
    }
    return false;
  }

  // Every neighbour of `v` not yet in factor f still needs two free edges into
  // vertices outside f or the path ends.
  bool neighbours_can_close(int f, int v, int start, int end) const {
    for (const Adjacent& a : g_.adj[std::size_t(v)]) {
      const int x = a.vertex;
      if (cov(f, x)) continue;
      int free = 0;
      for (const Adjacent& b : g_.adj[std::size_t(x)]) {
        if (edge_used_[std::size_t(b.edge)]) continue;
        if (!cov(f, b.vertex) || b.vertex == start || b.vertex == end) {
          if (++free == 2) break;
        }
      }
      if (free < 2) return false;
    }
    return true;
  }

  char& cov(int f, int v) { return covered_[std::size_t(f) * std::size_t(g_.vertices) + std::size_t(v)]; }
  char cov(int f, int v) const { return covered_[std::size_t(f) * std::size_t(g_.vertices) + std::size_t(v)]; }
  int dist(int a, int b) const { return dist_[std::size_t(a) * std::size_t(g_.vertices) + std::size_t(b)]; }

  const Graph& g_;
  int L_;
  int F_;
  Budget& budget_;
  std::vector<char> edge_used_;
  std::vector<char> covered_;  // factor-major membership
  std::vector<std::pair<int, int>> ends_;
  std::vector<int> dist_;
  std::vector<int> path_;
  std::vector<int> path_edges_;
  std::vector<std::vector<std::vector<int>>> factors_;
};

}  // namespace

std::vector<CycleFactor> exact_cover_fallback(const EdgeSet& host, const Grid& grid, int L, int F,
                                              const ExactCoverOptions& options, SearchStats* stats) {
  if (F < 1) throw InvalidArgument("exact cover needs at least one factor");
  if (L < 3 || grid.vertex_count() % L != 0) {
    throw InvalidArgument("cycle length " + std::to_string(L) + " does not divide " +
                          std::to_string(grid.vertex_count()) + " vertices");
  }
  const Graph g = index_host(host, grid);
  for (int v = 0; v < g.vertices; ++v) {
    if (int(g.adj[std::size_t(v)].size()) != 2 * F) {
      throw InvalidArgument("host is not " + std::to_string(2 * F) + "-regular: vertex " +
                            to_string(grid.vertex(v)) + " has degree " +
                            std::to_string(g.adj[std::size_t(v)].size()));
    }
  }

  SearchStats local;
  SearchStats& st = stats ? *stats : local;
  st = SearchStats{};
  Budget budget(options.node_budget, st);

  std::vector<std::vector<std::vector<int>>> raw;
  std::vector<std::vector<int>> cycles;
  if (F > 1 && enumerate_cycles(g, L, options.cycle_cap, cycles)) {
    st.mode = "dlx";
    st.cycles = cycles.size();
    raw = solve_dlx(g, L, F, cycles, budget);
  } else {
    st.mode = "dfs";
    st.cycles = cycles.size();
    raw = FactorDfs(g, L, F, budget).run();
  }

  std::vector<CycleFactor> out;
  for (int k = 0; k < F; ++k) {
    CycleFactor f;
    f.length = L;
    f.label = "exact-cover #" + std::to_string(k + 1);
    for (const auto& cyc : raw[std::size_t(k)]) {
      std::vector<Vertex> vs;
      for (int v : cyc) vs.push_back(grid.vertex(v));
      f.cycles.push_back(std::move(vs));
    }
    canonicalize(f);
    out.push_back(std::move(f));
  }
  return out;
}

}  // namespace hwp
