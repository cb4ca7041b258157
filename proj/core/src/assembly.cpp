#include "hwp/assembly.hpp"

#include "hwp/constructions.hpp"
#include "hwp/errors.hpp"
#include "hwp/tables.hpp"

namespace hwp {
namespace {

Ingredient zigzag(int d) { return {IngredientKind::Zigzag, d, {}, {}, {}, "{+-1}x{+-" + std::to_string(d) + "} zigzag"}; }

Ingredient column() { return {IngredientKind::Column, 0, {}, {}, {}, "{+-1}x{0} columns"}; }

Ingredient pattern(std::vector<int> generators, bool with_zero) {
  Ingredient ing{IngredientKind::Pattern, 0, DifferenceMultiset::symmetric(16, generators, with_zero), {}, {}, ""};
  ing.note = "{+-1}x{" + ing.values.key() + "} pattern";
  return ing;
}

Ingredient simple(IngredientKind kind, int a, std::string note) { return {kind, a, {}, {}, {}, std::move(note)}; }

Ingredient pair(TableName t, int i, int j) {
  const TableRef a{t, i};
  const TableRef b{t, j};
  return {IngredientKind::MatchingPair, 0, {}, a, b,
          "m(" + table_label(t, i) + "+" + table_label(t, j) + ") 16-cycle"};
}

Ingredient one_factor(TableName t, int k) {
  return {IngredientKind::TableOneFactor, 0, {}, {t, k}, {}, "m" + table_label(t, k) + " 1-factor"};
}

std::vector<Ingredient> ten_block() {
  std::vector<Ingredient> out{simple(IngredientKind::Lemma86, 0, "{+-1}x{8} + mI'11"),
                              simple(IngredientKind::Lemma6I, 0, "{+-1}x{+-6} + mI'12..15")};
  for (int j = 1; j <= 5; ++j) out.push_back(pair(TableName::Iprime, 2 * j - 1, 2 * j));
  return out;
}

std::vector<Ingredient> twelve_block() {
  std::vector<Ingredient> out;
  for (int i : {2, 4, 6}) {
    out.push_back(simple(IngredientKind::Lemma213, i,
                         "{+-1}x{" + std::to_string(i) + "} + mI" + std::to_string(i - 1) + " + mI" + std::to_string(i)));
    out.push_back(simple(IngredientKind::Lemma627, i,
                         "{+-1}x{-" + std::to_string(i) + "} + mI" + std::to_string(5 + i) + " + mI" +
                             std::to_string(6 + i)));
  }
  return out;
}

std::vector<Ingredient> concat(std::initializer_list<std::vector<Ingredient>> parts) {
  std::vector<Ingredient> out;
  for (const auto& p : parts) out.insert(out.end(), p.begin(), p.end());
  return out;
}

const Ingredient kLemma41 = simple(IngredientKind::Lemma41, 4, "{+-1}x{+-1, 8} two C16 + Cm");
const Ingredient kLemma4K8 = simple(IngredientKind::Lemma4K8, 4, "{+-1}x{8} + mK16");
const Ingredient kLemma4456 = simple(IngredientKind::Lemma4456, 0, "{+-1}x{8} + mI13..15");

std::vector<CaseRecipe> build_recipes() {
  std::vector<CaseRecipe> out;
  out.push_back({2, 8, {kLemma4K8, pattern({2}, true), pattern({1, 5, 6}, false), pattern({3, 4, 7}, false)}, 8, 15, 1});
  out.push_back({3, 10, concat({ten_block(), {column(), pattern({1, 3, 4}, false), pattern({2, 5, 7}, false)}}), 10, 13, 1});
  out.push_back({4, 12, concat({ten_block(), {zigzag(5), pattern({1, 2}, true), pattern({3, 4, 7}, false)}}), 12, 11, 1});
  out.push_back({5, 14, {kLemma4K8, zigzag(3), zigzag(5), zigzag(7), pattern({1}, true), pattern({2, 4, 6}, false)}, 14, 9, 1});
  out.push_back({6, 16,
                 {kLemma4K8, zigzag(1), zigzag(3), zigzag(5), zigzag(7), column(), pattern({2, 4, 6}, false)},
                 16, 7, 1});
  out.push_back({7, 18, concat({ten_block(), {zigzag(1), zigzag(3), zigzag(5), zigzag(7), pattern({2, 4}, true)}}), 18, 5, 1});
  out.push_back({8, 20, concat({{zigzag(3), zigzag(5), zigzag(7)}, twelve_block(), {kLemma4456, pattern({1}, true)}}), 20, 3, 1});
  out.push_back({9, 22, concat({{zigzag(1), zigzag(3), zigzag(5), zigzag(7)}, twelve_block(), {kLemma4456, column()}}), 22, 1, 1});
  {
    std::vector<Ingredient> ing{one_factor(TableName::Iprime, 11), simple(IngredientKind::Lemma6I, 0, "{+-1}x{+-6} + mI'12..15")};
    for (int j = 1; j <= 5; ++j) ing.push_back(pair(TableName::Iprime, 2 * j - 1, 2 * j));
    ing.insert(ing.end(), {zigzag(3), zigzag(5), zigzag(7), kLemma41, pattern({2, 4}, true)});
    out.push_back({10, 17, ing, 17, 6, 1});
  }
  out.push_back({11, 19,
                 concat({{one_factor(TableName::I, 15)}, twelve_block(),
                         {pair(TableName::I, 13, 14), zigzag(5), zigzag(7), kLemma41, pattern({3}, true)}}),
                 19, 4, 1});
  out.push_back({12, 21,
                 concat({{one_factor(TableName::I, 15)}, twelve_block(),
                         {pair(TableName::I, 13, 14), zigzag(3), zigzag(5), zigzag(7), kLemma41, column()}}),
                 21, 2, 1});
  return out;
}

void require_odd_m(int m) {
  if (m < 9 || m % 2 == 0) {
    throw UnsupportedParameters("m=" + std::to_string(m) + " is not covered: m must be odd and at least 9");
  }
}

Decomposition layer(int m, const DifferenceMultiset& values, const GenerateOptions& options, GenerateStats* stats) {
  LayerStats ls;
  Decomposition d = factorize_layer(m, values, options.solver, options.cache, &ls);
  if (stats) {
    if (options.cache) ++(ls.cache_hit ? stats->cache_hits : stats->cache_misses);
    stats->search_nodes += ls.nodes;
    stats->routes.push_back("{" + values.key() + "}: " + ls.route);
  }
  return d;
}

}  // namespace

const std::vector<CaseRecipe>& case_recipes() {
  static const std::vector<CaseRecipe> recipes = build_recipes();
  return recipes;
}

const CaseRecipe& recipe_for(int r) {
  for (const auto& c : case_recipes()) {
    if (c.r == r) return c;
  }
  throw UnsupportedParameters("no explicit recipe for r=" + std::to_string(r));
}

Decomposition realize(const Ingredient& ing, int m, const GenerateOptions& options, GenerateStats* stats) {
  switch (ing.kind) {
    case IngredientKind::Zigzag: return zigzag_c16_pair(m, 16, ing.a);
    case IngredientKind::Column: return column_cm_factor(m, 16);
    case IngredientKind::Pattern: return layer(m, ing.values, options, stats);
    case IngredientKind::Quarter: return lemma_quarter(m, 16);
    case IngredientKind::Lemma41: return lemma_41(m, ing.a);
    case IngredientKind::Lemma4K8: return lemma_4K8(m, ing.a);
    case IngredientKind::Lemma213: return lemma_2_13(m, ing.a);
    case IngredientKind::Lemma627: return lemma_6_27(m, ing.a);
    case IngredientKind::Lemma4456: return lemma_4_456(m);
    case IngredientKind::Lemma86: return lemma_8_6(m);
    case IngredientKind::Lemma6I: return lemma_6I(m);
    case IngredientKind::MatchingPair: return matching_pair_factor(m, ing.first, ing.second);
    case IngredientKind::TableOneFactor: return table_one_factor(m, ing.first);
  }
  throw InvalidArgument("unknown ingredient kind");
}

Decomposition assemble(const HostDescriptor& target,
                       const std::vector<std::pair<std::string, Decomposition>>& blocks) {
  std::vector<LabeledEdges> parts;
  parts.reserve(blocks.size());
  for (const auto& [label, block] : blocks) parts.push_back({label, build_host(block.host)});
  const EdgeSet joined = disjoint_union(parts);
  const EdgeSet want = build_host(target);
  if (!(joined == want)) {
    std::size_t missing = 0;
    for (const Edge& e : want) missing += joined.contains(e) ? 0 : 1;
    throw VerificationFailure("ingredient hosts cover " + std::to_string(joined.size()) + " edges, target has " +
                              std::to_string(want.size()) + " (" + std::to_string(missing) + " missing)");
  }
  Decomposition out;
  out.host = target;
  for (const auto& [label, block] : blocks) out.append(block);
  if (Report r = verify_decomposition(out); !r) throw VerificationFailure("assembled decomposition: " + r.message);
  canonicalize(out);
  return out;
}

Decomposition blow_up_cmnw(const Decomposition& base, int w, const std::vector<std::vector<Vertex>>& ham_w,
                           const Decomposition* cm_w) {
  if (base.host.kind != HostKind::BlownCycle) throw InvalidArgument("blow-up needs a C_m[n] base");
  const int m = base.host.m;
  const int n = base.host.n;
  if (Report r = verify_decomposition(base); !r) throw VerificationFailure("blow-up base: " + r.message);
  if (int(ham_w.size()) != w) throw InvalidArgument("need w Hamiltonian cycles of C_n[w]");
  bool needs_cm = false;
  for (const auto& f : base.cycle_factors) {
    if (f.length != n && f.length != m) throw InvalidArgument("base factor of unexpected length");
    needs_cm = needs_cm || (f.length == m && f.length != n);
  }
  if (needs_cm) {
    if (!cm_w) throw InvalidArgument("blow-up of C_m-factors needs a C_m-factorization of C_m[w]");
    if (!(cm_w->host == HostDescriptor::blown(m, w))) throw InvalidArgument("cm_w must decompose C_m[w]");
  }

  const Grid grid(m, n * w);
  Decomposition out;
  out.host = HostDescriptor::blown(m, n * w);
  auto lift = [&](const std::vector<Vertex>& z, const std::vector<Vertex>& inner) {
    std::vector<Vertex> cyc;
    for (const Vertex& v : inner) {
      const Vertex& at = z[std::size_t(v.row)];
      cyc.push_back(grid.at(at.row, at.col + n * v.col));
    }
    return cyc;
  };
  for (const auto& f : base.cycle_factors) {
    if (f.length == n) {
      for (std::size_t h = 0; h < ham_w.size(); ++h) {
        CycleFactor g{n * w, {}, f.label + " x ham" + std::to_string(h + 1)};
        for (const auto& z : f.cycles) g.cycles.push_back(lift(z, ham_w[h]));
        out.cycle_factors.push_back(std::move(g));
      }
    } else {
      for (const auto& inner : cm_w->cycle_factors) {
        CycleFactor g{m, {}, f.label + " x " + inner.label};
        for (const auto& z : f.cycles) {
          for (const auto& c : inner.cycles) g.cycles.push_back(lift(z, c));
        }
        out.cycle_factors.push_back(std::move(g));
      }
    }
  }
  if (Report r = verify_decomposition(out); !r) throw VerificationFailure("blow-up: " + r.message);
  return out;
}

Decomposition add_part_factorization(const Decomposition& base, const std::vector<std::vector<int>>& ham,
                                     const Matching& matching) {
  if (base.host.kind != HostKind::BlownCycle) throw InvalidArgument("clique addition needs a C_m[n] base");
  const int m = base.host.m;
  const int n = base.host.n;
  if (int(ham.size()) != (n - 1) / 2) throw InvalidArgument("need (n-1)/2 Hamiltonian cycles of K_n");

  Decomposition clique;
  clique.host = HostDescriptor::cliques(m, n);
  for (std::size_t h = 0; h < ham.size(); ++h) {
    CycleFactor f{n, {}, "clique ham #" + std::to_string(h + 1)};
    for (int j = 0; j < m; ++j) {
      std::vector<Vertex> cyc;
      for (int c : ham[h]) cyc.push_back({j, c});
      f.cycles.push_back(std::move(cyc));
    }
    clique.cycle_factors.push_back(std::move(f));
  }
  OneFactor one{{}, "clique matching"};
  for (int j = 0; j < m; ++j) {
    for (auto [a, b] : matching) one.edges.push_back(Edge::make({j, a}, {j, b}));
  }
  clique.one_factors.push_back(std::move(one));
  if (Report r = verify_decomposition(clique); !r) throw VerificationFailure("clique part: " + r.message);

  return assemble(HostDescriptor::wreath(m, n), {{"C_m[n]", base}, {"mK_n", clique}});
}

Decomposition hwp_cm16(int m, int r1, const GenerateOptions& options, GenerateStats* stats) {
  require_odd_m(m);
  std::vector<std::pair<std::string, Decomposition>> blocks;
  auto add = [&](const std::string& label, Decomposition d) { blocks.emplace_back(label, std::move(d)); };
  auto pat = [&](std::vector<int> gens, bool zero) {
    const auto s = DifferenceMultiset::symmetric(16, gens, zero);
    add("{+-1}x{" + s.key() + "}", layer(m, s, options, stats));
  };
  switch (r1) {
    case 2:
      add("zigzag 5", zigzag_c16_pair(m, 16, 5));
      pat({1, 2}, true);
      pat({3, 6, 7}, false);
      add("quarter", lemma_quarter(m, 16));
      break;
    case 4:
      add("zigzag 5", zigzag_c16_pair(m, 16, 5));
      add("zigzag 7", zigzag_c16_pair(m, 16, 7));
      pat({6}, true);
      pat({1, 2, 3}, false);
      add("quarter", lemma_quarter(m, 16));
      break;
    case 6:
      add("zigzag 5", zigzag_c16_pair(m, 16, 5));
      add("zigzag 7", zigzag_c16_pair(m, 16, 7));
      add("lemma41", lemma_41(m, 4));
      pat({3}, true);
      pat({2, 4, 6}, false);
      break;
    case 0: {
      Decomposition d = layer(m, DifferenceMultiset::full(16), options, stats);
      for (auto& f : d.cycle_factors) f.label += " (route: direct)";
      add("Z_16", std::move(d));
      break;
    }
    case 8: {
      for (int d : {1, 3, 5, 7}) add("zigzag " + std::to_string(d), zigzag_c16_pair(m, 16, d));
      Decomposition d = layer(m, DifferenceMultiset::symmetric(16, {2, 4, 6, 8}, true), options, stats);
      for (auto& f : d.cycle_factors) f.label += " (route: direct)";
      add("{0,+-2,+-4,+-6,8}", std::move(d));
      break;
    }
    case 16: {
      Decomposition ring = c4_ring_factorize(m);
      add("C_m[4] blow-up", blow_up_cmnw(ring, 4, c4_4_hamiltonian_decomposition()));
      break;
    }
    default:
      throw UnsupportedParameters("r1=" + std::to_string(r1) + " is not one of 0, 2, 4, 6, 8, 16");
  }
  Decomposition out = assemble(HostDescriptor::blown(m, 16), blocks);
  const Census c = census(out);
  const auto count = [&](int len) { return c.cycles_by_length.count(len) ? c.cycles_by_length.at(len) : 0; };
  if (count(16) != r1 || count(m) != 16 - r1 || c.matchings != 0) {
    throw VerificationFailure("C_m[16] census mismatch for r1=" + std::to_string(r1));
  }
  return out;
}

Decomposition generate(int m, int r, const GenerateOptions& options, GenerateStats* stats) {
  require_odd_m(m);
  if (r < 7 || r > 23) {
    throw UnsupportedParameters("r=" + std::to_string(r) + " is outside the covered range 7..23");
  }
  Decomposition out;
  if (r == 7 || r == 9 || r == 11 || r == 13 || r == 15 || r == 23) {
    Decomposition base = hwp_cm16(m, r - 7, options, stats);
    out = add_part_factorization(base, walecki_base(16), walecki_base_matching(16));
    canonicalize(out);
  } else {
    const CaseRecipe& recipe = recipe_for(r);
    std::vector<std::pair<std::string, Decomposition>> blocks;
    for (const auto& ing : recipe.ingredients) {
      try {
        blocks.emplace_back(ing.note, realize(ing, m, options, stats));
      } catch (const SearchTimeout& e) {
        throw SearchTimeout("case " + std::to_string(recipe.id) + ", " + ing.note + ": " + e.what());
      } catch (const VerificationFailure& e) {
        throw VerificationFailure("case " + std::to_string(recipe.id) + ", " + ing.note + ": " + e.what());
      }
    }
    out = assemble(HostDescriptor::wreath(m, 16), blocks);
  }
  const Census c = census(out);
  const auto count = [&](int len) { return c.cycles_by_length.count(len) ? c.cycles_by_length.at(len) : 0; };
  if (count(16) != r || count(m) != 23 - r || c.matchings != 1 || count(16) + count(m) != 23) {
    throw VerificationFailure("census mismatch for m=" + std::to_string(m) + " r=" + std::to_string(r) + ": " +
                              census_line(c, m, 16));
  }
  return out;
}

}  // namespace hwp
