#include "hwp/pattern_solver.hpp"

#include <algorithm>
#include <numeric>
#include <random>
#include <set>

#include "hwp/constructions.hpp"
#include "hwp/errors.hpp"
#include "hwp/exact_cover.hpp"
#include "hwp/solution_cache.hpp"

namespace hwp {
namespace {

int circular(int residue, int n) { return std::min(residue, n - residue); }

// Value-count matrix N[k][j]: how often factor k uses value j. Row and column
// sums are m; the search drives every weighted row sum to 0 mod n.
std::vector<std::vector<int>> count_matrix(int m, const DifferenceMultiset& s, const SolverOptions& opt) {
  const int F = int(s.values.size());
  const int n = s.n;
  std::vector<std::vector<int>> N(std::size_t(F), std::vector<int>(std::size_t(F), 0));
  for (int k = 0; k < F; ++k) {
    for (int t = 0; t < m; ++t) ++N[std::size_t(k)][std::size_t((k + t) % F)];
  }
  std::vector<int> sums(std::size_t(F), 0);
  auto recompute = [&] {
    int cost = 0;
    for (int k = 0; k < F; ++k) {
      long acc = 0;
      for (int j = 0; j < F; ++j) acc += long(N[std::size_t(k)][std::size_t(j)]) * s.values[std::size_t(j)];
      sums[std::size_t(k)] = mod(acc, n);
      cost += circular(sums[std::size_t(k)], n);
    }
    return cost;
  };
  int cost = recompute();
  if (cost == 0 || F == 1) {
    if (cost != 0) throw Infeasible("single-value pattern does not close");
    return N;
  }

  // Steepest descent from a random row with a nonzero sum; random kicks when
  // no move improves.
  std::mt19937_64 rng(opt.seed);
  auto pick = [&](int bound) { return int(rng() % std::uint64_t(bound)); };
  struct Move {
    int k2, j1, j2;
  };
  std::vector<Move> best_moves;
  std::vector<int> bad;
  auto apply = [&](int k1, const Move& mv) {
    const int delta = s.values[std::size_t(mv.j2)] - s.values[std::size_t(mv.j1)];
    const int s1 = mod(sums[std::size_t(k1)] + delta, n);
    const int s2 = mod(sums[std::size_t(mv.k2)] - delta, n);
    cost += circular(s1, n) + circular(s2, n) - circular(sums[std::size_t(k1)], n) -
            circular(sums[std::size_t(mv.k2)], n);
    --N[std::size_t(k1)][std::size_t(mv.j1)];
    ++N[std::size_t(k1)][std::size_t(mv.j2)];
    --N[std::size_t(mv.k2)][std::size_t(mv.j2)];
    ++N[std::size_t(mv.k2)][std::size_t(mv.j1)];
    sums[std::size_t(k1)] = s1;
    sums[std::size_t(mv.k2)] = s2;
  };
  for (std::uint64_t it = 0; it < opt.iteration_budget; ++it) {
    bad.clear();
    for (int k = 0; k < F; ++k) {
      if (sums[std::size_t(k)] != 0) bad.push_back(k);
    }
    const int k1 = bad[std::size_t(pick(int(bad.size())))];
    const auto& a = N[std::size_t(k1)];
    int best = 0;
    best_moves.clear();
    for (int k2 = 0; k2 < F; ++k2) {
      if (k2 == k1) continue;
      const auto& b = N[std::size_t(k2)];
      for (int j1 = 0; j1 < F; ++j1) {
        if (a[std::size_t(j1)] == 0) continue;
        for (int j2 = 0; j2 < F; ++j2) {
          if (j2 == j1 || b[std::size_t(j2)] == 0) continue;
          const int delta = s.values[std::size_t(j2)] - s.values[std::size_t(j1)];
          const int next = cost - circular(sums[std::size_t(k1)], n) - circular(sums[std::size_t(k2)], n) +
                           circular(mod(sums[std::size_t(k1)] + delta, n), n) +
                           circular(mod(sums[std::size_t(k2)] - delta, n), n);
          if (best_moves.empty() || next < best) {
            best = next;
            best_moves.clear();
          }
          if (next == best) best_moves.push_back({k2, j1, j2});
        }
      }
    }
    if (best_moves.empty()) continue;
    if (best >= cost && pick(10) < 3) {
      int k2 = pick(F - 1);
      if (k2 >= k1) ++k2;
      std::vector<int> j1s;
      std::vector<int> j2s;
      for (int j = 0; j < F; ++j) {
        if (N[std::size_t(k1)][std::size_t(j)] > 0) j1s.push_back(j);
        if (N[std::size_t(k2)][std::size_t(j)] > 0) j2s.push_back(j);
      }
      const int j1 = j1s[std::size_t(pick(int(j1s.size())))];
      const int j2 = j2s[std::size_t(pick(int(j2s.size())))];
      if (j1 != j2) apply(k1, {k2, j1, j2});
    } else {
      apply(k1, best_moves[std::size_t(pick(int(best_moves.size())))]);
    }
    if (cost == 0) return N;
  }
  throw SearchTimeout("pattern count search for {" + s.key() + "} at m=" + std::to_string(m) +
                      " exhausted " + std::to_string(opt.iteration_budget) + " iterations");
}

// Perfect matching in the support of a regular bipartite multigraph.
std::vector<int> support_matching(const std::vector<std::vector<int>>& N) {
  const int F = int(N.size());
  std::vector<int> owner(std::size_t(F), -1);  // value -> factor
  for (int k = 0; k < F; ++k) {
    std::vector<char> seen(std::size_t(F), 0);
    auto augment = [&](auto&& self, int row) -> bool {
      for (int j = 0; j < F; ++j) {
        if (N[std::size_t(row)][std::size_t(j)] == 0 || seen[std::size_t(j)]) continue;
        seen[std::size_t(j)] = 1;
        if (owner[std::size_t(j)] < 0 || self(self, owner[std::size_t(j)])) {
          owner[std::size_t(j)] = row;
          return true;
        }
      }
      return false;
    };
    if (!augment(augment, k)) throw Infeasible("count matrix is not regular");
  }
  std::vector<int> match(std::size_t(F), -1);  // factor -> value
  for (int j = 0; j < F; ++j) match[std::size_t(owner[std::size_t(j)])] = j;
  return match;
}

std::vector<int> sorted_residues(const std::vector<int>& values, int n) {
  std::vector<int> out;
  for (int v : values) out.push_back(mod(v, n));
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace

DifferenceMultiset DifferenceMultiset::symmetric(int n, const std::vector<int>& generators, bool with_zero) {
  std::vector<int> vals = symmetric_closure(generators, n);
  if (with_zero) vals.push_back(0);
  DifferenceMultiset s;
  s.n = n;
  s.values = sorted_residues(vals, n);
  s.values.erase(std::unique(s.values.begin(), s.values.end()), s.values.end());
  return s;
}

DifferenceMultiset DifferenceMultiset::full(int n) {
  DifferenceMultiset s;
  s.n = n;
  s.values.resize(std::size_t(n));
  std::iota(s.values.begin(), s.values.end(), 0);
  return s;
}

std::string DifferenceMultiset::key() const {
  std::string out;
  for (int v : sorted_residues(values, n)) {
    if (!out.empty()) out += ",";
    out += std::to_string(v);
  }
  return out;
}

bool pattern_parity_ok(int m, const DifferenceMultiset& values) {
  long total = 0;
  for (int v : values.values) total += v;
  return mod(total * m, values.n) == 0;
}

std::vector<std::string> check_pattern(const DifferencePattern& p, const DifferenceMultiset& values) {
  std::vector<std::string> problems;
  const std::size_t F = values.values.size();
  if (p.steps.size() != F) {
    problems.push_back("pattern has " + std::to_string(p.steps.size()) + " sequences, expected " +
                       std::to_string(F));
    return problems;
  }
  const auto want = sorted_residues(values.values, values.n);
  for (std::size_t k = 0; k < F; ++k) {
    if (int(p.steps[k].size()) != p.m) {
      problems.push_back("sequence " + std::to_string(k) + " has wrong length");
      return problems;
    }
    long sum = 0;
    for (int d : p.steps[k]) sum += d;
    if (mod(sum, p.n) != 0) {
      problems.push_back("sequence " + std::to_string(k) + " sums to " + std::to_string(mod(sum, p.n)) +
                         " mod " + std::to_string(p.n));
    }
  }
  for (int t = 0; t < p.m; ++t) {
    std::vector<int> column;
    for (std::size_t k = 0; k < F; ++k) column.push_back(p.steps[k][std::size_t(t)]);
    if (sorted_residues(column, p.n) != want) {
      problems.push_back("position " + std::to_string(t) + " is not a bijection onto the values");
    }
  }
  return problems;
}

DifferencePattern solve_row_monotone(int m, const DifferenceMultiset& values, const SolverOptions& options) {
  if (m < 3 || m % 2 == 0) throw InvalidArgument("row-monotone patterns need odd m >= 3");
  if (values.values.empty()) throw InvalidArgument("empty difference multiset");
  const auto distinct = std::set<int>(values.values.begin(), values.values.end());
  if (distinct.size() != values.values.size()) throw InvalidArgument("difference values must be distinct");
  if (!pattern_parity_ok(m, values)) {
    throw Infeasible("no row-monotone pattern for {" + values.key() + "} at m=" + std::to_string(m) +
                     ": m * sum is not 0 mod " + std::to_string(values.n));
  }
  auto N = count_matrix(m, values, options);
  const int F = int(values.values.size());
  DifferencePattern p;
  p.m = m;
  p.n = values.n;
  p.steps.assign(std::size_t(F), std::vector<int>(std::size_t(m), 0));
  for (int t = 0; t < m; ++t) {
    const auto match = support_matching(N);
    for (int k = 0; k < F; ++k) {
      const int j = match[std::size_t(k)];
      p.steps[std::size_t(k)][std::size_t(t)] = values.values[std::size_t(j)];
      --N[std::size_t(k)][std::size_t(j)];
    }
  }
  if (auto problems = check_pattern(p, values); !problems.empty()) {
    throw VerificationFailure("pattern solver produced an invalid pattern: " + problems.front());
  }
  return p;
}

std::vector<CycleFactor> pattern_to_factors(const DifferencePattern& p, const std::string& label) {
  const Grid grid(p.m, p.n);
  std::vector<CycleFactor> out;
  for (std::size_t k = 0; k < p.steps.size(); ++k) {
    if (int(p.steps[k].size()) != p.m) throw InvalidArgument("pattern sequence has wrong length");
    long sum = 0;
    for (int d : p.steps[k]) sum += d;
    if (mod(sum, p.n) != 0) throw InvalidArgument("pattern sequence does not sum to 0");
    CycleFactor f;
    f.length = p.m;
    f.label = label + " #" + std::to_string(k + 1);
    for (int s = 0; s < p.n; ++s) {
      std::vector<Vertex> cyc;
      long col = s;
      for (int t = 0; t < p.m; ++t) {
        cyc.push_back(grid.at(t, col));
        col += p.steps[k][std::size_t(t)];
      }
      f.cycles.push_back(std::move(cyc));
    }
    out.push_back(std::move(f));
  }
  return out;
}

DifferencePattern recover_pattern(const std::vector<CycleFactor>& factors, int m, int n) {
  DifferencePattern p;
  p.m = m;
  p.n = n;
  for (const auto& f : factors) {
    const std::vector<Vertex>* hit = nullptr;
    std::size_t at = 0;
    for (const auto& cyc : f.cycles) {
      auto it = std::find(cyc.begin(), cyc.end(), Vertex{0, 0});
      if (it != cyc.end()) {
        hit = &cyc;
        at = std::size_t(it - cyc.begin());
        break;
      }
    }
    if (!hit || int(hit->size()) != m) throw InvalidArgument("factor " + f.label + " has no m-cycle through 0:0");
    const auto& cyc = *hit;
    const std::size_t L = cyc.size();
    const bool forward = cyc[(at + 1) % L].row == 1;
    std::vector<int> steps;
    for (std::size_t t = 0; t < L; ++t) {
      const std::size_t i = forward ? (at + t) % L : (at + L - t) % L;
      const std::size_t j = forward ? (at + t + 1) % L : (at + 2 * L - t - 1) % L;
      if (cyc[i].row != int(t) || cyc[j].row != int((t + 1) % L)) {
        throw InvalidArgument("factor " + f.label + " is not row-monotone");
      }
      steps.push_back(mod(cyc[j].col - cyc[i].col, n));
    }
    p.steps.push_back(std::move(steps));
  }
  return p;
}

Decomposition factorize_layer(int m, const DifferenceMultiset& values, const SolverOptions& options,
                              SolutionCache* cache, LayerStats* stats) {
  LayerStats local;
  LayerStats& st = stats ? *stats : local;
  st = LayerStats{};
  const int n = values.n;

  Decomposition out;
  out.host = HostDescriptor::cayley(m, n, sorted_residues(values.values, n));

  DifferenceMultiset rest = values;
  const int q = n / 4;
  const int h = n / 2;
  if (!pattern_parity_ok(m, values) && n % 4 == 0) {
    const std::set<int> have(values.values.begin(), values.values.end());
    if (have.count(q) && have.count(h) && have.count(n - q)) {
      rest.values.clear();
      for (int v : values.values) {
        if (v != q && v != h && v != n - q) rest.values.push_back(v);
      }
      out.append(lemma_quarter(m, n));
      st.route = "quarter+pattern";
    }
  }

  if (!rest.values.empty()) {
    const std::string label = "pattern {" + rest.key() + "}";
    const std::string key = SolutionCache::make_key(m, n, rest.key(), "row-monotone", options.seed);
    std::optional<Decomposition> part;
    if (cache) {
      part = cache->lookup(key, [&](const Decomposition& d) {
        if (!(d.host == HostDescriptor::cayley(m, n, sorted_residues(rest.values, n)))) return false;
        if (!verify_decomposition(d)) return false;
        try {
          return check_pattern(recover_pattern(d.cycle_factors, m, n), rest).empty();
        } catch (const Error&) {
          return false;
        }
      });
      st.cache_hit = part.has_value();
    }
    if (!part) {
      Decomposition fresh;
      fresh.host = HostDescriptor::cayley(m, n, sorted_residues(rest.values, n));
      if (pattern_parity_ok(m, rest)) {
        fresh.cycle_factors = pattern_to_factors(solve_row_monotone(m, rest, options), label);
        if (st.route.empty()) st.route = "pattern";
      } else {
        SearchStats ss;
        fresh.cycle_factors = exact_cover_fallback(build_host(fresh.host), Grid(m, n), m,
                                                   int(rest.values.size()), {}, &ss);
        st.nodes = ss.nodes;
        st.route = "exact-cover";
      }
      if (Report r = verify_decomposition(fresh); !r) {
        throw VerificationFailure("layer {" + rest.key() + "}: " + r.message);
      }
      if (cache && st.route != "exact-cover") cache->store(key, fresh);
      part = std::move(fresh);
    }
    out.append(*part);
  }

  if (Report r = verify_decomposition(out); !r) {
    throw VerificationFailure("layer {" + values.key() + "}: " + r.message);
  }
  return out;
}

std::vector<std::vector<Edge>> cm2_one_factorization(int m) {
  if (m < 3 || m % 2 == 0) throw InvalidArgument("C_m[2] 1-factorization needs odd m >= 3");
  using V = Vertex;
  std::vector<std::vector<std::pair<V, V>>> F{
      {{{0, 0}, {1, 0}}, {{1, 1}, {2, 0}}, {{2, 1}, {0, 1}}},
      {{{0, 0}, {1, 1}}, {{1, 0}, {2, 1}}, {{2, 0}, {0, 1}}},
      {{{0, 1}, {1, 0}}, {{1, 1}, {2, 1}}, {{2, 0}, {0, 0}}},
      {{{0, 1}, {1, 1}}, {{1, 0}, {2, 0}}, {{2, 1}, {0, 0}}},
  };
  // Insert rows r, r+1 across the closing cut (r-1 -> 0), two rows at a time.
  for (int r = 3; r < m; r += 2) {
    std::vector<int> zero_cut;
    std::set<std::pair<int, int>> middle_used;
    for (std::size_t k = 0; k < F.size(); ++k) {
      std::vector<std::pair<V, V>> next;
      std::vector<std::pair<int, int>> cut;  // (x on row r-1, y on row 0)
      for (auto [u, v] : F[k]) {
        if ((u.row == r - 1 && v.row == 0) || (v.row == r - 1 && u.row == 0)) {
          if (u.row == 0) std::swap(u, v);
          cut.emplace_back(u.col, v.col);
          next.push_back({u, {r, v.col}});
          next.push_back({{r + 1, u.col}, v});
        } else {
          next.push_back({u, v});
        }
      }
      if (cut.size() == 1) {
        const std::pair<int, int> mid{1 - cut[0].second, 1 - cut[0].first};
        middle_used.insert(mid);
        next.push_back({{r, mid.first}, {r + 1, mid.second}});
      } else if (cut.empty()) {
        zero_cut.push_back(int(k));
      }
      F[k] = std::move(next);
    }
    const std::vector<std::vector<std::pair<int, int>>> options{{{0, 0}, {1, 1}}, {{0, 1}, {1, 0}}};
    std::size_t z = 0;
    for (const auto& opt : options) {
      if (z == zero_cut.size()) break;
      if (middle_used.count(opt[0]) || middle_used.count(opt[1])) continue;
      for (auto [a, b] : opt) F[std::size_t(zero_cut[z])].push_back({{r, a}, {r + 1, b}});
      ++z;
    }
    if (z != zero_cut.size()) throw VerificationFailure("C_m[2] extension failed at m=" + std::to_string(r + 2));
  }
  std::vector<std::vector<Edge>> out;
  for (const auto& M : F) {
    std::vector<Edge> edges;
    for (auto [u, v] : M) edges.push_back(Edge::make(u, v));
    std::sort(edges.begin(), edges.end());
    out.push_back(std::move(edges));
  }
  return out;
}

Decomposition c4_ring_factorize(int m) {
  const auto matchings = cm2_one_factorization(m);
  const Grid grid(m, 4);
  Decomposition out;
  out.host = HostDescriptor::blown(m, 4);
  for (std::size_t k = 0; k < matchings.size(); ++k) {
    CycleFactor f;
    f.length = 4;
    f.label = "c4 ring #" + std::to_string(k + 1);
    for (const Edge& e : matchings[k]) {
      // Orient so that `lo` sits on row i and `hi` on row i+1.
      Vertex lo = e.a;
      Vertex hi = e.b;
      if (mod(lo.row + 1, m) != hi.row) std::swap(lo, hi);
      f.cycles.push_back({{lo.row, 2 * lo.col}, {hi.row, 2 * hi.col}, {lo.row, 2 * lo.col + 1},
                          {hi.row, 2 * hi.col + 1}});
    }
    out.cycle_factors.push_back(std::move(f));
  }
  if (Report r = verify_decomposition(out); !r) {
    throw VerificationFailure("C_4-factorization of C_" + std::to_string(m) + "[4]: " + r.message);
  }
  return out;
}

}  // namespace hwp
