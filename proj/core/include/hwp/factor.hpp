#pragma once

#include <cstddef>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "hwp/graph.hpp"

namespace hwp {

/// Spanning set of vertex-disjoint cycles, all of the same length.
struct CycleFactor {
  int length = 0;
  std::vector<std::vector<Vertex>> cycles;
  std::string label;

  bool operator==(const CycleFactor&) const = default;
};

/// Perfect matching of the host's vertex set.
struct OneFactor {
  std::vector<Edge> edges;
  std::string label;

  bool operator==(const OneFactor&) const = default;
};

/// A host plus the factors claimed to partition its edge set.
struct Decomposition {
  HostDescriptor host;
  std::vector<CycleFactor> cycle_factors;
  std::vector<OneFactor> one_factors;

  Grid grid() const { return Grid(host.m, host.n); }

  /// Appends every factor of `other` (the host is left untouched).
  void append(const Decomposition& other);

  bool operator==(const Decomposition&) const = default;
};

enum class Violation {
  None,
  WrongLength,
  OutOfRange,
  RepeatedVertex,
  NotSpanning,
  EdgeNotInHost,
  DuplicateEdge,
  MissingEdge,
  BadHost,
};

std::string to_string(Violation v);

/// Outcome of a verification. On failure names the first violation found.
struct Report {
  bool ok = true;
  Violation kind = Violation::None;
  std::string message;
  std::optional<Vertex> vertex;
  std::optional<Edge> edge;
  std::vector<std::string> labels;  // factors involved
  std::size_t missing_count = 0;

  explicit operator bool() const { return ok; }

  static Report success() { return {}; }
  static Report failure(Violation kind, std::string message);
};

Report verify_cycle_factor(const CycleFactor& factor, const Grid& grid);
Report verify_one_factor(const OneFactor& factor, const Grid& grid);

/// Regenerates the host from its descriptor and checks that the factors are
/// individually valid and partition its edges exactly.
Report verify_decomposition(const Decomposition& d);

/// Throws InvalidArgument if the factor is invalid on the grid.
EdgeSet factor_edge_set(const CycleFactor& factor, const Grid& grid);
EdgeSet factor_edge_set(const OneFactor& factor, const Grid& grid);

/// Rotates the minimum vertex to the front and orients toward the smaller neighbour.
std::vector<Vertex> canonical_cycle(std::vector<Vertex> cycle);

void canonicalize(CycleFactor& factor);
void canonicalize(OneFactor& factor);
/// Canonicalizes every factor; factor order is preserved.
void canonicalize(Decomposition& d);

struct Census {
  std::map<int, int> cycles_by_length;  // length -> number of factors
  int matchings = 0;

  bool operator==(const Census&) const = default;
};

Census census(const Decomposition& d);

/// `factors c16=14 cm=9 matchings=1` style summary; see certificate.hpp.
std::string census_line(const Census& c, int m, int n);

}  // namespace hwp
