#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "hwp/factor.hpp"
#include "hwp/pattern_solver.hpp"

namespace hwp {

class SolutionCache;

struct GenerateOptions {
  SolverOptions solver;
  SolutionCache* cache = nullptr;
};

struct GenerateStats {
  int cache_hits = 0;
  int cache_misses = 0;
  std::uint64_t search_nodes = 0;
  std::vector<std::string> routes;
};

enum class IngredientKind {
  Zigzag,          // a = d
  Column,
  Pattern,         // values
  Quarter,
  Lemma41,         // l = 4
  Lemma4K8,        // l = 4
  Lemma213,        // a = i
  Lemma627,        // a = i
  Lemma4456,
  Lemma86,
  Lemma6I,
  MatchingPair,    // first, second
  TableOneFactor,  // first
};

struct Ingredient {
  IngredientKind kind = IngredientKind::Column;
  int a = 0;
  DifferenceMultiset values;
  TableRef first;
  TableRef second;
  std::string note;
};

struct CaseRecipe {
  int id = 0;
  int r = 0;
  std::vector<Ingredient> ingredients;
  int c16 = 0;
  int cm = 0;
  int matchings = 0;
};

/// The fixed recipes, one per r in {8, 10, 12, 14, 16, 17, 18, 19, 20, 21, 22}.
const std::vector<CaseRecipe>& case_recipes();
/// Throws UnsupportedParameters if r is handled by the C_m[16] route instead.
const CaseRecipe& recipe_for(int r);

Decomposition realize(const Ingredient& ing, int m, const GenerateOptions& options = {},
                      GenerateStats* stats = nullptr);

/// Checks that the blocks' hosts are pairwise edge-disjoint (OverlapError
/// names both ingredient labels) and union exactly to `target`, then returns
/// the verified, canonicalized combination.
Decomposition assemble(const HostDescriptor& target, const std::vector<std::pair<std::string, Decomposition>>& blocks);

/// r1 C_16-factors and 16 - r1 C_m-factors of C_m[16]; r1 in {0, 2, 4, 6, 8, 16}.
Decomposition hwp_cm16(int m, int r1, const GenerateOptions& options = {}, GenerateStats* stats = nullptr);

/// Expands C_m[n] to C_m[nw]: vertex (i, c) becomes columns c + n*x, x in Z_w.
/// `ham_w` lists w Hamiltonian cycles of C_n[w]; `cm_w` is a C_m-factorization
/// of C_m[w], required iff the base has C_m-factors.
Decomposition blow_up_cmnw(const Decomposition& base, int w, const std::vector<std::vector<Vertex>>& ham_w,
                           const Decomposition* cm_w = nullptr);

/// Adds the row copies of a Hamiltonian decomposition of K_n minus `matching`
/// and the row copies of `matching` to a decomposition of C_m[n].
Decomposition add_part_factorization(const Decomposition& base, const std::vector<std::vector<int>>& ham,
                                     const Matching& matching);

/// r C_16-factors, 23 - r C_m-factors and one 1-factor of C_m wreath K_16;
/// odd m >= 9, 7 <= r <= 23.
Decomposition generate(int m, int r, const GenerateOptions& options = {}, GenerateStats* stats = nullptr);

}  // namespace hwp
