#include "hwp/tables.hpp"

#include <algorithm>
#include <set>

#include "hwp/errors.hpp"

namespace hwp {
namespace {

// Transcribed verbatim, including the order of the endpoints inside each pair.
const MatchingTable kTableI{
    TableName::I,
    {{
        {{0, 1}, {3, 6}, {4, 5}, {7, 10}, {8, 9}, {11, 14}, {12, 13}, {15, 2}},
        {{2, 3}, {5, 8}, {6, 7}, {9, 12}, {10, 11}, {13, 0}, {14, 15}, {1, 4}},
        {{0, 2}, {6, 1}, {13, 3}, {7, 9}, {5, 11}, {15, 12}, {8, 10}, {14, 4}},
        {{4, 6}, {10, 5}, {1, 7}, {11, 13}, {9, 15}, {3, 0}, {12, 14}, {2, 8}},
        {{0, 4}, {10, 1}, {11, 3}, {9, 2}, {12, 8}, {14, 5}, {15, 7}, {13, 6}},
        {{6, 10}, {0, 7}, {1, 9}, {15, 8}, {2, 14}, {4, 11}, {5, 13}, {3, 12}},
        {{0, 5}, {3, 7}, {9, 4}, {2, 10}, {12, 1}, {15, 11}, {13, 8}, {6, 14}},
        {{14, 3}, {1, 5}, {7, 2}, {0, 8}, {10, 15}, {13, 9}, {11, 6}, {4, 12}},
        {{0, 6}, {2, 4}, {8, 3}, {15, 5}, {9, 11}, {7, 13}, {1, 14}, {10, 12}},
        {{12, 2}, {14, 0}, {4, 15}, {11, 1}, {5, 7}, {3, 9}, {13, 10}, {6, 8}},
        {{0, 15}, {9, 5}, {11, 12}, {6, 2}, {8, 7}, {1, 13}, {3, 4}, {14, 10}},
        {{10, 9}, {3, 15}, {5, 6}, {0, 12}, {2, 1}, {11, 7}, {13, 14}, {8, 4}},
        {{0, 9}, {6, 12}, {5, 2}, {11, 8}, {14, 7}, {4, 13}, {15, 1}, {3, 10}},
        {{9, 6}, {12, 5}, {2, 11}, {8, 14}, {7, 4}, {13, 15}, {1, 3}, {10, 0}},
        {{0, 11}, {13, 2}, {12, 7}, {14, 9}, {3, 5}, {10, 4}, {15, 6}, {1, 8}},
    }}};

const MatchingTable kTableIprime{
    TableName::Iprime,
    {{
        {{0, 2}, {1, 3}, {5, 4}, {6, 8}, {7, 9}, {11, 10}, {15, 13}, {12, 14}},
        {{2, 1}, {3, 5}, {4, 6}, {8, 7}, {9, 11}, {10, 15}, {13, 12}, {14, 0}},
        {{0, 4}, {2, 3}, {6, 1}, {5, 7}, {10, 8}, {14, 13}, {9, 15}, {11, 12}},
        {{4, 2}, {3, 6}, {1, 5}, {7, 10}, {8, 14}, {13, 9}, {15, 11}, {12, 0}},
        {{0, 5}, {8, 1}, {7, 3}, {9, 2}, {15, 4}, {14, 10}, {12, 6}, {11, 13}},
        {{5, 8}, {1, 7}, {3, 9}, {2, 15}, {4, 14}, {10, 12}, {6, 11}, {13, 0}},
        {{0, 6}, {2, 8}, {3, 12}, {9, 14}, {5, 10}, {1, 15}, {7, 13}, {4, 11}},
        {{6, 2}, {8, 3}, {12, 9}, {14, 5}, {10, 1}, {15, 7}, {13, 4}, {11, 0}},
        {{0, 7}, {12, 2}, {13, 3}, {14, 6}, {10, 4}, {9, 1}, {11, 5}, {15, 8}},
        {{7, 12}, {2, 13}, {3, 14}, {6, 10}, {4, 9}, {1, 11}, {5, 15}, {8, 0}},
        {{0, 10}, {2, 11}, {3, 15}, {7, 14}, {6, 13}, {5, 9}, {1, 12}, {4, 8}},
        {{0, 1}, {7, 2}, {12, 4}, {10, 3}, {13, 5}, {11, 14}, {8, 9}, {15, 6}},
        {{6, 7}, {13, 8}, {2, 10}, {0, 9}, {3, 11}, {1, 4}, {14, 15}, {5, 12}},
        {{0, 3}, {13, 1}, {7, 4}, {14, 2}, {8, 11}, {5, 6}, {12, 15}, {9, 10}},
        {{10, 13}, {7, 11}, {1, 14}, {8, 12}, {2, 5}, {15, 0}, {6, 9}, {3, 4}},
    }}};

// Found by exhaustive backtracking (tests/test_tables.cpp keeps the search).
const std::vector<std::vector<Vertex>> kC44Hamiltonian{
    {{0, 0}, {1, 0}, {2, 0}, {3, 0}, {0, 1}, {1, 1}, {2, 1}, {3, 1},
     {0, 2}, {1, 2}, {2, 2}, {3, 2}, {0, 3}, {1, 3}, {2, 3}, {3, 3}},
    {{0, 0}, {1, 1}, {2, 0}, {3, 1}, {0, 1}, {1, 0}, {2, 1}, {3, 0},
     {0, 2}, {1, 3}, {2, 2}, {3, 3}, {0, 3}, {1, 2}, {2, 3}, {3, 2}},
    {{0, 0}, {1, 2}, {2, 0}, {3, 2}, {0, 1}, {1, 3}, {2, 1}, {3, 3},
     {0, 2}, {1, 0}, {2, 2}, {3, 0}, {0, 3}, {1, 1}, {2, 3}, {3, 1}},
    {{0, 0}, {1, 3}, {2, 0}, {3, 3}, {0, 1}, {1, 2}, {2, 1}, {3, 2},
     {0, 2}, {1, 1}, {2, 2}, {3, 1}, {0, 3}, {1, 0}, {2, 3}, {3, 0}},
};

std::pair<int, int> ordered(int a, int b) { return a < b ? std::pair{a, b} : std::pair{b, a}; }

}  // namespace

const Matching& MatchingTable::at(int k) const {
  if (k < 1 || k > 15) {
    throw InvalidArgument("matching index " + std::to_string(k) + " outside 1..15");
  }
  return matchings[std::size_t(k - 1)];
}

const MatchingTable& matching_table(TableName name) {
  return name == TableName::I ? kTableI : kTableIprime;
}

const Matching& get_matching(TableName name, int k) { return matching_table(name).at(k); }

std::string table_label(TableName name, int k) {
  return std::string(name == TableName::I ? "I" : "I'") + std::to_string(k);
}

bool is_perfect_matching(const Matching& matching, int n) {
  if (int(matching.size()) * 2 != n) return false;
  std::vector<char> seen(n, 0);
  for (auto [a, b] : matching) {
    if (a < 0 || b < 0 || a >= n || b >= n || a == b || seen[a] || seen[b]) return false;
    seen[a] = seen[b] = 1;
  }
  return true;
}

std::vector<std::vector<int>> union_cycles(const Matching& a, const Matching& b, int n) {
  std::vector<std::vector<int>> adj(n);
  for (const Matching* mt : {&a, &b}) {
    for (auto [x, y] : *mt) {
      adj[x].push_back(y);
      adj[y].push_back(x);
    }
  }
  for (int v = 0; v < n; ++v) {
    if (adj[v].size() != 2) {
      throw InvalidArgument("union of matchings is not 2-regular at column " + std::to_string(v));
    }
  }
  std::vector<char> seen(n, 0);
  std::vector<std::vector<int>> cycles;
  for (int start = 0; start < n; ++start) {
    if (seen[start]) continue;
    std::vector<int> cyc{start};
    seen[start] = 1;
    int prev = -1;
    int cur = start;
    for (;;) {
      // Take the matching-a neighbour first so a doubled edge still walks correctly.
      int next = (adj[cur][0] != prev || prev == -1) ? adj[cur][0] : adj[cur][1];
      if (prev != -1 && adj[cur][0] == prev && adj[cur][1] == prev) next = prev;
      if (next == start) break;
      if (seen[next]) break;
      seen[next] = 1;
      cyc.push_back(next);
      prev = cur;
      cur = next;
    }
    cycles.push_back(std::move(cyc));
  }
  return cycles;
}

std::vector<std::pair<TableRef, TableRef>> documented_hamiltonian_pairs() {
  std::vector<std::pair<TableRef, TableRef>> out{
      {{TableName::I, 13}, {TableName::I, 14}}};
  for (int i = 1; i <= 5; ++i) {
    out.push_back({{TableName::Iprime, 2 * i - 1}, {TableName::Iprime, 2 * i}});
  }
  return out;
}

std::vector<std::string> check_matching_table(const MatchingTable& table) {
  std::vector<std::string> problems;
  std::set<std::pair<int, int>> all;
  for (int k = 1; k <= 15; ++k) {
    const Matching& mt = table.at(k);
    const std::string name = table_label(table.name, k);
    if (!is_perfect_matching(mt, 16)) {
      problems.push_back(name + " is not a perfect matching of Z_16");
      continue;
    }
    for (auto [a, b] : mt) {
      if (!all.insert(ordered(a, b)).second) {
        problems.push_back(name + " repeats edge (" + std::to_string(a) + "," +
                           std::to_string(b) + ") of an earlier matching");
      }
    }
  }
  if (problems.empty() && all.size() != 120) {
    problems.push_back("union of the 15 matchings has " + std::to_string(all.size()) +
                       " edges, expected 120");
  }
  return problems;
}

std::vector<std::vector<int>> walecki_base(int n) {
  if (n < 4 || n % 2) throw InvalidArgument("walecki decomposition needs even n >= 4");
  const int odd = n - 1;  // Z_{n-1}, with infinity labelled n-1
  const int half = odd / 2;
  std::vector<std::vector<int>> cycles;
  for (int i = 0; i < half; ++i) {
    std::vector<int> cyc{n - 1, i};
    for (int k = 1; k <= half; ++k) {
      cyc.push_back(mod(i + k, odd));
      cyc.push_back(mod(i - k, odd));
    }
    cycles.push_back(std::move(cyc));
  }
  return cycles;
}

Matching walecki_base_matching(int n) {
  std::set<std::pair<int, int>> used;
  for (const auto& cyc : walecki_base(n)) {
    for (std::size_t j = 0; j < cyc.size(); ++j) used.insert(ordered(cyc[j], cyc[(j + 1) % cyc.size()]));
  }
  Matching out;
  for (int a = 0; a < n; ++a) {
    for (int b = a + 1; b < n; ++b) {
      if (!used.count({a, b})) out.emplace_back(a, b);
    }
  }
  return out;
}

std::vector<std::vector<int>> walecki_minus_matching(int n, const Matching& removed) {
  if (!is_perfect_matching(removed, n)) {
    throw InvalidArgument("walecki target is not a perfect matching of Z_" + std::to_string(n));
  }
  const Matching base = walecki_base_matching(n);
  std::vector<int> relabel(n, -1);
  for (std::size_t j = 0; j < base.size(); ++j) {
    relabel[base[j].first] = removed[j].first;
    relabel[base[j].second] = removed[j].second;
  }
  auto cycles = walecki_base(n);
  for (auto& cyc : cycles) {
    for (int& v : cyc) v = relabel[v];
  }
  return cycles;
}

std::vector<std::vector<int>> walecki_k16_minus_f(const Matching& removed) {
  return walecki_minus_matching(16, removed);
}

std::vector<std::vector<Vertex>> c4_4_hamiltonian_decomposition() { return kC44Hamiltonian; }

std::vector<std::string> table_selftest() {
  return table_selftest(matching_table(TableName::I), matching_table(TableName::Iprime));
}

std::vector<std::string> table_selftest(const MatchingTable& i_table, const MatchingTable& iprime_table) {
  std::vector<std::string> problems;
  for (const MatchingTable* table : {&i_table, &iprime_table}) {
    auto p = check_matching_table(*table);
    problems.insert(problems.end(), p.begin(), p.end());
  }
  auto lookup = [&](const TableRef& ref) -> const Matching& {
    return (ref.table == TableName::I ? i_table : iprime_table).at(ref.index);
  };
  for (auto [x, y] : documented_hamiltonian_pairs()) {
    const std::string name = table_label(x.table, x.index) + "+" + table_label(y.table, y.index);
    try {
      auto cycles = union_cycles(lookup(x), lookup(y), 16);
      if (cycles.size() != 1) {
        problems.push_back(name + " splits into " + std::to_string(cycles.size()) + " cycles");
      }
    } catch (const InvalidArgument& e) {
      problems.push_back(name + ": " + e.what());
    }
  }
  const auto base = walecki_base(16);
  std::set<std::pair<int, int>> used;
  for (const auto& cyc : base) {
    std::set<int> distinct(cyc.begin(), cyc.end());
    if (cyc.size() != 16 || distinct.size() != 16) problems.push_back("walecki cycle is not Hamiltonian");
    for (std::size_t j = 0; j < cyc.size(); ++j) {
      if (!used.insert(ordered(cyc[j], cyc[(j + 1) % cyc.size()])).second) {
        problems.push_back("walecki cycles share an edge");
      }
    }
  }
  if (used.size() != 112 || !is_perfect_matching(walecki_base_matching(16), 16)) {
    problems.push_back("walecki cycles do not leave a perfect matching of K_16");
  }
  std::set<std::pair<Vertex, Vertex>> c44;
  for (const auto& cyc : kC44Hamiltonian) {
    for (std::size_t j = 0; j < cyc.size(); ++j) {
      Edge e = Edge::make(cyc[j], cyc[(j + 1) % cyc.size()]);
      if (mod(e.a.row - e.b.row, 4) % 2 == 0) problems.push_back("C_4[4] cycle uses a non-edge");
      c44.insert({e.a, e.b});
    }
  }
  if (c44.size() != 64) problems.push_back("C_4[4] cycles do not partition its 64 edges");
  return problems;
}

}  // namespace hwp
