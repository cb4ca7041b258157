#include "hwp/constructions.hpp"

#include <array>
#include <numeric>
#include <set>

#include "hwp/errors.hpp"
#include "hwp/exact_cover.hpp"
#include "hwp/tables.hpp"

namespace hwp {
namespace {

using Base = std::vector<Vertex>;

// Base cycles on rows {0, 1}; each factor is the orbit under (l, 0).
const std::array<Base, 3> kBase213{{
    {{0, 0}, {0, 1}, {1, 3}, {1, 6}, {0, 4}, {0, 5}, {1, 7}, {1, 10},
     {0, 8}, {0, 9}, {1, 11}, {1, 14}, {0, 12}, {0, 13}, {1, 15}, {1, 2}},
    {{0, 0}, {0, 2}, {1, 6}, {1, 1}, {0, 13}, {0, 3}, {1, 7}, {1, 9},
     {0, 5}, {0, 11}, {1, 15}, {1, 12}, {0, 8}, {0, 10}, {1, 14}, {1, 4}},
    {{0, 0}, {0, 4}, {1, 10}, {1, 1}, {0, 11}, {0, 3}, {1, 9}, {1, 2},
     {0, 12}, {0, 8}, {1, 14}, {1, 5}, {0, 15}, {0, 7}, {1, 13}, {1, 6}},
}};

const std::array<Base, 3> kBase627{{
    {{0, 0}, {0, 5}, {1, 3}, {1, 7}, {0, 9}, {0, 4}, {1, 2}, {1, 10},
     {0, 12}, {0, 1}, {1, 15}, {1, 11}, {0, 13}, {0, 8}, {1, 6}, {1, 14}},
    {{0, 0}, {0, 6}, {1, 2}, {1, 4}, {0, 8}, {0, 3}, {1, 15}, {1, 5},
     {0, 9}, {0, 11}, {1, 7}, {1, 13}, {0, 1}, {0, 14}, {1, 10}, {1, 12}},
    {{0, 0}, {0, 15}, {1, 9}, {1, 5}, {0, 11}, {0, 12}, {1, 6}, {1, 2},
     {0, 8}, {0, 7}, {1, 1}, {1, 13}, {0, 3}, {0, 4}, {1, 14}, {1, 10}},
}};

const Base kBase456C1{{0, 0}, {0, 9}, {0, 6}, {0, 12}, {0, 5}, {0, 2}, {0, 11}, {0, 8},
                      {0, 14}, {0, 7}, {0, 4}, {0, 13}, {0, 15}, {0, 1}, {0, 3}, {0, 10}};
const Base kBase456C2{{0, 0}, {0, 11}, {1, 3}, {1, 5}, {0, 13}, {0, 2}, {1, 10}, {1, 4},
                      {0, 12}, {0, 7}, {1, 15}, {1, 6}, {0, 14}, {0, 9}, {1, 1}, {1, 8}};
// ((j+1)_x, j_y) pairs, written as (x, y).
const std::vector<ColumnPair> kOneFactor456{{9, 1},   {2, 10},  {11, 3}, {12, 4},
                                            {13, 5},  {14, 6},  {7, 15}, {0, 8}};

const Base kBase86{{0, 0}, {0, 10}, {1, 2}, {1, 11}, {0, 3}, {0, 15}, {1, 7}, {1, 14},
                   {0, 6}, {0, 13}, {1, 5}, {1, 9},  {0, 1}, {0, 12}, {1, 4}, {1, 8}};
const std::vector<ColumnPair> kOneFactor86{{1, 9},   {10, 2}, {3, 11}, {12, 4},
                                           {13, 5},  {6, 14}, {15, 7}, {0, 8}};

const std::array<Base, 4> kBase6I{{
    {{0, 0}, {0, 1}, {1, 7}, {1, 2}, {0, 12}, {0, 4}, {1, 10}, {1, 3},
     {0, 13}, {0, 5}, {1, 11}, {1, 14}, {0, 8}, {0, 9}, {1, 15}, {1, 6}},
    {{0, 6}, {0, 7}, {1, 13}, {1, 8}, {0, 2}, {0, 10}, {1, 0}, {1, 9},
     {0, 3}, {0, 11}, {1, 1}, {1, 4}, {0, 14}, {0, 15}, {1, 5}, {1, 12}},
    {{0, 0}, {0, 3}, {1, 13}, {1, 1}, {0, 7}, {0, 4}, {1, 14}, {1, 2},
     {0, 8}, {0, 11}, {1, 5}, {1, 6}, {0, 12}, {0, 15}, {1, 9}, {1, 10}},
    {{0, 10}, {0, 13}, {1, 7}, {1, 11}, {0, 1}, {0, 14}, {1, 8}, {1, 12},
     {0, 2}, {0, 5}, {1, 15}, {1, 0}, {0, 6}, {0, 9}, {1, 3}, {1, 4}},
}};

void require(bool cond, const std::string& what) {
  if (!cond) throw UnsupportedParameters(what);
}

CycleFactor row_orbit(const Base& base, int m, int n, std::string label) {
  const Grid grid(m, n);
  CycleFactor f;
  f.length = int(base.size());
  f.label = std::move(label);
  for (int l = 0; l < m; ++l) {
    std::vector<Vertex> cyc;
    cyc.reserve(base.size());
    for (const Vertex& v : base) cyc.push_back(grid.at(v.row + l, v.col));
    f.cycles.push_back(std::move(cyc));
  }
  return f;
}

Base shifted(const Base& base, int dc, int n) {
  Base out = base;
  for (Vertex& v : out) v.col = mod(v.col + dc, n);
  return out;
}

OneFactor cross_row_one_factor(const std::vector<ColumnPair>& pairs, int m, int n,
                               std::string label) {
  const Grid grid(m, n);
  OneFactor f;
  f.label = std::move(label);
  for (int j = 0; j < m; ++j) {
    for (auto [upper, lower] : pairs) f.edges.push_back(Edge::make(grid.at(j + 1, upper), grid.at(j, lower)));
  }
  return f;
}

HostDescriptor table_host(int m, TableName t, int k) { return HostDescriptor::table_matching(m, t, k); }

}  // namespace

Decomposition finalize_block(Decomposition candidate) {
  Report report = verify_decomposition(candidate);
  if (report) return candidate;

  std::set<int> lengths;
  for (const auto& f : candidate.cycle_factors) lengths.insert(f.length);
  if (lengths.size() != 1) {
    throw VerificationFailure("block failed verification and has mixed cycle lengths: " +
                              report.message);
  }
  const int L = *lengths.begin();
  const Grid grid = candidate.grid();
  EdgeSet rest = build_host(candidate.host);

  Decomposition out;
  out.host = candidate.host;
  for (const auto& f : candidate.one_factors) {
    if (!verify_one_factor(f, grid)) continue;
    bool inside = true;
    for (const Edge& e : f.edges) inside = inside && rest.contains(e);
    if (!inside) continue;
    for (const Edge& e : f.edges) rest.erase(e);
    out.one_factors.push_back(f);
  }
  if (out.one_factors.size() != candidate.one_factors.size()) {
    throw VerificationFailure("block failed verification in its 1-factor: " + report.message);
  }
  const int F = int(candidate.cycle_factors.size());
  auto factors = exact_cover_fallback(rest, grid, L, F);
  for (int k = 0; k < F; ++k) {
    factors[std::size_t(k)].label = candidate.cycle_factors[std::size_t(k)].label +
                                    " [substituted by exact cover: " + to_string(report.kind) +
                                    ": " + report.message + "]";
  }
  out.cycle_factors = std::move(factors);
  if (Report again = verify_decomposition(out); !again) {
    throw VerificationFailure("substituted block failed verification: " + again.message);
  }
  return out;
}

Decomposition zigzag_c16_pair(int m, int n, int d) {
  if (m < 3 || n < 4 || n % 2) throw InvalidArgument("zigzag needs m >= 3 and even n >= 4");
  if (std::gcd(mod(d, n), n) != 1) {
    throw InvalidArgument("zigzag needs d coprime to n, got d=" + std::to_string(d) +
                          " n=" + std::to_string(n));
  }
  const Grid grid(m, n);
  Decomposition out;
  out.host = HostDescriptor::cayley(m, n, symmetric_closure({d}, n));
  for (int side = 0; side < 2; ++side) {
    CycleFactor f;
    f.length = n;
    f.label = "zigzag d=" + std::to_string(mod(d, n)) + " #" + std::to_string(side + 1);
    for (int i = 0; i < m; ++i) {
      std::vector<Vertex> cyc;
      for (int k = 0; k < n; ++k) cyc.push_back(grid.at(i + ((k + side) % 2), long(k) * d));
      f.cycles.push_back(std::move(cyc));
    }
    out.cycle_factors.push_back(std::move(f));
  }
  return finalize_block(std::move(out));
}

Decomposition column_cm_factor(int m, int n) {
  if (m < 3) throw InvalidArgument("column factor needs m >= 3");
  Decomposition out;
  out.host = HostDescriptor::cayley(m, n, {0});
  CycleFactor f;
  f.length = m;
  f.label = "column";
  for (int j = 0; j < n; ++j) {
    std::vector<Vertex> cyc;
    for (int r = 0; r < m; ++r) cyc.push_back({r, j});
    f.cycles.push_back(std::move(cyc));
  }
  out.cycle_factors.push_back(std::move(f));
  return finalize_block(std::move(out));
}

Decomposition lemma_quarter(int m, int n) {
  require(m >= 3 && m % 2 == 1, "quarter lemma needs odd m >= 3");
  require(n >= 4 && n % 4 == 0, "quarter lemma needs n divisible by 4");
  const int q = n / 4;
  const int h = n / 2;
  const Grid grid(m, n);
  // b-table: three factors, two base cycles each, first three columns given.
  const int b[3][2][3] = {{{0, q, h}, {q, 0, -q}}, {{0, -q, q}, {-q, 0, h}}, {{0, h, -q}, {-q, q, 0}}};
  Decomposition out;
  out.host = HostDescriptor::cayley(m, n, symmetric_closure({q, h}, n));
  for (int i = 0; i < 3; ++i) {
    CycleFactor f;
    f.length = m;
    f.label = "quarter F" + std::to_string(i + 1);
    for (int j = 0; j < 2; ++j) {
      std::vector<int> cols(b[i][j], b[i][j] + 3);
      for (int t = 3; t < m; ++t) cols.push_back(cols[std::size_t(t - 2)]);
      for (int s = 0; s < q; ++s) {
        for (int half = 0; half < 2; ++half) {
          std::vector<Vertex> cyc;
          for (int t = 0; t < m; ++t) cyc.push_back(grid.at(t, cols[std::size_t(t)] + s + half * h));
          f.cycles.push_back(std::move(cyc));
        }
      }
    }
    out.cycle_factors.push_back(std::move(f));
  }
  return finalize_block(std::move(out));
}

Decomposition lemma_41_raw(int m, int l, Lemma41Step step) {
  require(l >= 3 && l <= 20, "lemma_41 needs l >= 3");
  const int n = 1 << l;
  const int h = n / 2;
  require(m % 2 == 1 && m >= h + 1,
          "lemma_41 needs odd m >= " + std::to_string(h + 1) + " for l=" + std::to_string(l));
  const int stride = step == Lemma41Step::Corrected ? 2 : n / 4;
  const Grid grid(m, n);

  Decomposition out;
  out.host = HostDescriptor::cayley(m, n, symmetric_closure({1, h}, n));

  CycleFactor f1{n, {}, "lemma41 C2^l #1"};
  CycleFactor f2{n, {}, "lemma41 C2^l #2"};
  {
    std::vector<Vertex> c1, c2;
    for (int t = 0; t < n; ++t) {
      c1.push_back(grid.at(t % 2 == 0 ? 0 : m - 1, t));
      c2.push_back(grid.at(t % 2 == 0 ? m - 1 : 0, t));
    }
    f1.cycles.push_back(std::move(c1));
    f2.cycles.push_back(std::move(c2));
  }
  for (int i = 0; i < h; ++i) {
    const int a = 1 + i * stride;
    const int b = h + 1 + i * stride;
    const int c = h + i * stride;
    const int d = i * stride;
    std::vector<Vertex> c1;
    for (int t = 0; t < h; ++t) c1.push_back(grid.at(t, t % 2 == 0 ? a : b));
    c1.push_back(grid.at(h, c));
    for (int t = h - 1; t >= 1; --t) c1.push_back(grid.at(t, (h - 1 - t) % 2 == 0 ? d : c));
    f1.cycles.push_back(std::move(c1));

    std::vector<Vertex> c2{grid.at(0, d)};
    for (int t = 1; t <= h; ++t) c2.push_back(grid.at(t, h + 1 - t + d));
    for (int t = h - 1; t >= 1; --t) c2.push_back(grid.at(t, n - t + d));
    f2.cycles.push_back(std::move(c2));
  }
  for (int j = h; j <= m - 2; ++j) {
    std::vector<Vertex> c1, c2;
    for (int t = 0; t < n; ++t) {
      c1.push_back(grid.at(t % 2 == 0 ? j + 1 : j, t));
      c2.push_back(grid.at(t % 2 == 0 ? j : j + 1, t));
    }
    f1.cycles.push_back(std::move(c1));
    f2.cycles.push_back(std::move(c2));
  }

  // Diagonal up to row h, then alternate columns 0 and h on the remaining rows.
  std::vector<int> base;
  for (int t = 0; t <= h; ++t) base.push_back(t);
  for (int k = 0; h + 1 + k < m; ++k) base.push_back(k % 2 == 0 ? 0 : h);
  CycleFactor cm{m, {}, "lemma41 Cm"};
  for (int s = 0; s < n; ++s) {
    std::vector<Vertex> cyc;
    for (int t = 0; t < m; ++t) cyc.push_back(grid.at(t, base[std::size_t(t)] + s));
    cm.cycles.push_back(std::move(cyc));
  }

  out.cycle_factors = {std::move(f1), std::move(f2), std::move(cm)};
  return out;
}

Decomposition lemma_41(int m, int l) { return finalize_block(lemma_41_raw(m, l, Lemma41Step::Corrected)); }

Decomposition lemma_4K8(int m, int l) {
  require(m >= 3, "lemma_4K8 needs m >= 3");
  require(l >= 3 && l <= 10, "lemma_4K8 needs 3 <= l <= 10");
  const int n = 1 << l;
  const int h = n / 2;
  const Grid grid(m, n);

  std::vector<int> e(std::size_t(n + 2), 0);  // 1-based, e[n+1] = e[1]
  e[1] = 0;
  e[2] = 1;
  e[3] = 1 + h;
  e[4] = 2 + h;
  for (int t = 2; t <= h - 2; ++t) {
    e[std::size_t(2 * t + 1)] = t;
    e[std::size_t(2 * t + 2)] = t + 1 + h;
  }
  e[std::size_t(n - 1)] = h - 1;
  e[std::size_t(n)] = h;
  e[std::size_t(n + 1)] = e[1];

  Matching groups;
  for (int t = 0; t < h; ++t) groups.emplace_back(e[std::size_t(2 * t + 1)], e[std::size_t(2 * t + 2)]);

  Decomposition out;
  out.host = HostDescriptor::union_of(
      m, n, {HostDescriptor::cayley(m, n, {h}), HostDescriptor::cliques(m, n)});

  const auto ham = walecki_minus_matching(n, groups);
  for (std::size_t s = 0; s < ham.size(); ++s) {
    Base base;
    for (int c : ham[s]) base.push_back({0, c});
    out.cycle_factors.push_back(row_orbit(base, m, n, "lemma4K8 clique #" + std::to_string(s + 1)));
  }
  Base mixed;
  for (int p = 0; p < h; ++p) {
    const int row = p % 2;
    mixed.push_back({row, e[std::size_t(2 * p + 1)]});
    mixed.push_back({row, e[std::size_t(2 * p + 2)]});
  }
  out.cycle_factors.push_back(row_orbit(mixed, m, n, "lemma4K8 mixed"));

  OneFactor one;
  one.label = "lemma4K8 1-factor";
  for (int j = 0; j < m; ++j) {
    for (int p = 1; p <= h / 2; ++p) {
      one.edges.push_back(Edge::make(grid.at(j + 1, e[std::size_t(4 * p - 2)]), grid.at(j, e[std::size_t(4 * p - 1)])));
      one.edges.push_back(Edge::make(grid.at(j, e[std::size_t(4 * p)]), grid.at(j + 1, e[std::size_t(4 * p + 1)])));
    }
  }
  out.one_factors.push_back(std::move(one));
  return finalize_block(std::move(out));
}

Decomposition lemma_2_13(int m, int i) {
  if (i != 2 && i != 4 && i != 6) throw InvalidArgument("lemma_2_13 needs i in {2,4,6}");
  require(m >= 3, "lemma_2_13 needs m >= 3");
  const Base& c1 = kBase213[std::size_t(i / 2 - 1)];
  Decomposition out;
  out.host = HostDescriptor::union_of(m, 16,
                                      {HostDescriptor::cayley(m, 16, {i}), table_host(m, TableName::I, i - 1),
                                       table_host(m, TableName::I, i)});
  const std::string tag = "lemma2-13 i=" + std::to_string(i);
  out.cycle_factors.push_back(row_orbit(c1, m, 16, tag + " C1"));
  out.cycle_factors.push_back(row_orbit(shifted(c1, i, 16), m, 16, tag + " C2"));
  return finalize_block(std::move(out));
}

Decomposition lemma_6_27(int m, int i) {
  if (i != 2 && i != 4 && i != 6) throw InvalidArgument("lemma_6_27 needs i in {2,4,6}");
  require(m >= 3, "lemma_6_27 needs m >= 3");
  const Base& c1 = kBase627[std::size_t(i / 2 - 1)];
  Decomposition out;
  out.host = HostDescriptor::union_of(
      m, 16,
      {HostDescriptor::cayley(m, 16, {mod(-i, 16)}), table_host(m, TableName::I, 5 + i),
       table_host(m, TableName::I, 6 + i)});
  const std::string tag = "lemma6-27 i=" + std::to_string(i);
  out.cycle_factors.push_back(row_orbit(c1, m, 16, tag + " C1"));
  out.cycle_factors.push_back(row_orbit(shifted(c1, -i, 16), m, 16, tag + " C2"));
  return finalize_block(std::move(out));
}

Decomposition lemma_4_456(int m) {
  require(m >= 3, "lemma_4_456 needs m >= 3");
  Decomposition out;
  out.host = HostDescriptor::union_of(
      m, 16,
      {HostDescriptor::cayley(m, 16, {8}), table_host(m, TableName::I, 13),
       table_host(m, TableName::I, 14), table_host(m, TableName::I, 15)});
  out.cycle_factors.push_back(row_orbit(kBase456C1, m, 16, "lemma4-456 C1"));
  out.cycle_factors.push_back(row_orbit(kBase456C2, m, 16, "lemma4-456 C2"));
  out.one_factors.push_back(cross_row_one_factor(kOneFactor456, m, 16, "lemma4-456 1-factor"));
  return finalize_block(std::move(out));
}

Decomposition lemma_8_6(int m) {
  require(m >= 3, "lemma_8_6 needs m >= 3");
  Decomposition out;
  out.host = HostDescriptor::union_of(
      m, 16, {HostDescriptor::cayley(m, 16, {8}), table_host(m, TableName::Iprime, 11)});
  out.cycle_factors.push_back(row_orbit(kBase86, m, 16, "lemma8-6 C"));
  out.one_factors.push_back(cross_row_one_factor(kOneFactor86, m, 16, "lemma8-6 1-factor"));
  return finalize_block(std::move(out));
}

Decomposition lemma_6I(int m) {
  require(m >= 3, "lemma_6I needs m >= 3");
  std::vector<HostDescriptor> parts{HostDescriptor::cayley(m, 16, {6, 10})};
  for (int k = 12; k <= 15; ++k) parts.push_back(table_host(m, TableName::Iprime, k));
  Decomposition out;
  out.host = HostDescriptor::union_of(m, 16, std::move(parts));
  for (std::size_t t = 0; t < kBase6I.size(); ++t) {
    out.cycle_factors.push_back(row_orbit(kBase6I[t], m, 16, "lemma6I C" + std::to_string(t + 1)));
  }
  return finalize_block(std::move(out));
}

Decomposition matching_pair_factor(int m, int n, const Matching& a, const Matching& b) {
  const auto cycles = union_cycles(a, b, n);
  if (cycles.size() != 1) {
    throw InvalidArgument("matching union splits into " + std::to_string(cycles.size()) +
                          " cycles, not one " + std::to_string(n) + "-cycle");
  }
  Base base;
  for (int c : cycles.front()) base.push_back({0, c});
  Decomposition out;
  out.host = HostDescriptor::union_of(m, n, {HostDescriptor::matching(m, n, a), HostDescriptor::matching(m, n, b)});
  out.cycle_factors.push_back(row_orbit(base, m, n, "matching pair"));
  return finalize_block(std::move(out));
}

Decomposition matching_pair_factor(int m, const TableRef& a, const TableRef& b) {
  const auto cycles = union_cycles(get_matching(a.table, a.index), get_matching(b.table, b.index), 16);
  const std::string tag = table_label(a.table, a.index) + "+" + table_label(b.table, b.index);
  if (cycles.size() != 1) {
    throw InvalidArgument(tag + " splits into " + std::to_string(cycles.size()) + " cycles");
  }
  Base base;
  for (int c : cycles.front()) base.push_back({0, c});
  Decomposition out;
  out.host = HostDescriptor::union_of(m, 16, {table_host(m, a.table, a.index), table_host(m, b.table, b.index)});
  out.cycle_factors.push_back(row_orbit(base, m, 16, "pair " + tag));
  return finalize_block(std::move(out));
}

Decomposition table_one_factor(int m, const TableRef& ref) {
  require(m >= 3, "row matching copies need m >= 3");
  Decomposition out;
  out.host = table_host(m, ref.table, ref.index);
  OneFactor f;
  f.label = "m" + table_label(ref.table, ref.index);
  for (int j = 0; j < m; ++j) {
    for (auto [a, b] : get_matching(ref.table, ref.index)) f.edges.push_back(Edge::make({j, a}, {j, b}));
  }
  out.one_factors.push_back(std::move(f));
  return finalize_block(std::move(out));
}

}  // namespace hwp
