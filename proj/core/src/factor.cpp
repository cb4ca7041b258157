#include "hwp/factor.hpp"

#include <algorithm>
#include <unordered_map>

#include "hwp/errors.hpp"

namespace hwp {

void Decomposition::append(const Decomposition& other) {
  cycle_factors.insert(cycle_factors.end(), other.cycle_factors.begin(), other.cycle_factors.end());
  one_factors.insert(one_factors.end(), other.one_factors.begin(), other.one_factors.end());
}

std::string to_string(Violation v) {
  switch (v) {
    case Violation::None: return "none";
    case Violation::WrongLength: return "wrong-length";
    case Violation::OutOfRange: return "out-of-range";
    case Violation::RepeatedVertex: return "repeated-vertex";
    case Violation::NotSpanning: return "not-spanning";
    case Violation::EdgeNotInHost: return "edge-not-in-host";
    case Violation::DuplicateEdge: return "duplicate-edge";
    case Violation::MissingEdge: return "missing-edge";
    case Violation::BadHost: return "bad-host";
  }
  return "unknown";
}

Report Report::failure(Violation kind, std::string message) {
  Report r;
  r.ok = false;
  r.kind = kind;
  r.message = std::move(message);
  return r;
}

namespace {

std::string quoted(const std::string& label) { return "'" + label + "'"; }

Report with_label(Report r, const std::string& label) {
  if (!r.ok) {
    r.labels.insert(r.labels.begin(), label);
    r.message = "factor " + quoted(label) + ": " + r.message;
  }
  return r;
}

}  // namespace

Report verify_cycle_factor(const CycleFactor& factor, const Grid& grid) {
  if (factor.length < 3) {
    return Report::failure(Violation::WrongLength,
                           "declared cycle length " + std::to_string(factor.length) + " < 3");
  }
  std::vector<char> seen(grid.vertex_count(), 0);
  int covered = 0;
  for (std::size_t c = 0; c < factor.cycles.size(); ++c) {
    const auto& cyc = factor.cycles[c];
    if (int(cyc.size()) != factor.length) {
      return Report::failure(Violation::WrongLength,
                             "cycle " + std::to_string(c) + " has " + std::to_string(cyc.size()) +
                                 " vertices, expected " + std::to_string(factor.length));
    }
    for (const Vertex& v : cyc) {
      if (!grid.contains(v)) {
        Report r = Report::failure(Violation::OutOfRange, "vertex " + to_string(v) + " outside grid");
        r.vertex = v;
        return r;
      }
      char& s = seen[grid.index(v)];
      if (s) {
        Report r = Report::failure(Violation::RepeatedVertex,
                                   "vertex " + to_string(v) + " appears twice");
        r.vertex = v;
        return r;
      }
      s = 1;
      ++covered;
    }
  }
  if (covered != grid.vertex_count()) {
    auto it = std::find(seen.begin(), seen.end(), 0);
    Report r = Report::failure(Violation::NotSpanning,
                               std::to_string(grid.vertex_count() - covered) +
                                   " vertices uncovered, first " +
                                   to_string(grid.vertex(int(it - seen.begin()))));
    r.vertex = grid.vertex(int(it - seen.begin()));
    r.missing_count = std::size_t(grid.vertex_count() - covered);
    return r;
  }
  return Report::success();
}

Report verify_one_factor(const OneFactor& factor, const Grid& grid) {
  std::vector<char> seen(grid.vertex_count(), 0);
  for (const Edge& e : factor.edges) {
    for (const Vertex& v : {e.a, e.b}) {
      if (!grid.contains(v)) {
        Report r = Report::failure(Violation::OutOfRange, "vertex " + to_string(v) + " outside grid");
        r.vertex = v;
        return r;
      }
      char& s = seen[grid.index(v)];
      if (s) {
        Report r = Report::failure(Violation::RepeatedVertex,
                                   "vertex " + to_string(v) + " matched twice");
        r.vertex = v;
        r.edge = e;
        return r;
      }
      s = 1;
    }
    if (e.a == e.b) {
      Report r = Report::failure(Violation::RepeatedVertex, "loop at " + to_string(e.a));
      r.vertex = e.a;
      return r;
    }
  }
  if (factor.edges.size() * 2 != std::size_t(grid.vertex_count())) {
    auto it = std::find(seen.begin(), seen.end(), 0);
    Report r = Report::failure(Violation::NotSpanning,
                               "matching leaves " +
                                   std::to_string(grid.vertex_count() - 2 * int(factor.edges.size())) +
                                   " vertices uncovered");
    if (it != seen.end()) r.vertex = grid.vertex(int(it - seen.begin()));
    return r;
  }
  return Report::success();
}

EdgeSet factor_edge_set(const CycleFactor& factor, const Grid& grid) {
  if (Report r = verify_cycle_factor(factor, grid); !r) throw InvalidArgument(r.message);
  EdgeSet out;
  out.reserve(std::size_t(grid.vertex_count()));
  for (const auto& cyc : factor.cycles) {
    for (std::size_t j = 0; j < cyc.size(); ++j) out.insert(Edge::make(cyc[j], cyc[(j + 1) % cyc.size()]));
  }
  return out;
}

EdgeSet factor_edge_set(const OneFactor& factor, const Grid& grid) {
  if (Report r = verify_one_factor(factor, grid); !r) throw InvalidArgument(r.message);
  EdgeSet out;
  for (const Edge& e : factor.edges) out.insert(e);
  return out;
}

Report verify_decomposition(const Decomposition& d) {
  EdgeSet host;
  try {
    host = build_host(d.host);
  } catch (const Error& e) {
    return Report::failure(Violation::BadHost, std::string("host cannot be built: ") + e.what());
  }
  const Grid grid = d.grid();

  std::vector<const std::string*> labels;
  std::unordered_map<Edge, std::size_t, EdgeHash> owner;
  owner.reserve(host.size());

  auto claim = [&](const Edge& raw, std::size_t who) -> Report {
    const Edge e = raw.canonical();
    if (!host.contains(e)) {
      Report r = Report::failure(Violation::EdgeNotInHost,
                                 "edge " + to_string(e) + " of factor " + quoted(*labels[who]) +
                                     " is not a host edge");
      r.edge = e;
      r.labels = {*labels[who]};
      return r;
    }
    auto [it, fresh] = owner.emplace(e, who);
    if (!fresh) {
      Report r = Report::failure(Violation::DuplicateEdge,
                                 "edge " + to_string(e) + " used by both " +
                                     quoted(*labels[it->second]) + " and " + quoted(*labels[who]));
      r.edge = e;
      r.labels = {*labels[it->second], *labels[who]};
      return r;
    }
    return Report::success();
  };

  for (const auto& f : d.cycle_factors) {
    if (Report r = verify_cycle_factor(f, grid); !r) return with_label(r, f.label);
    labels.push_back(&f.label);
    for (const auto& cyc : f.cycles) {
      for (std::size_t j = 0; j < cyc.size(); ++j) {
        if (Report r = claim(Edge::make(cyc[j], cyc[(j + 1) % cyc.size()]), labels.size() - 1); !r) {
          return r;
        }
      }
    }
  }
  for (const auto& f : d.one_factors) {
    if (Report r = verify_one_factor(f, grid); !r) return with_label(r, f.label);
    labels.push_back(&f.label);
    for (const Edge& e : f.edges) {
      if (Report r = claim(e, labels.size() - 1); !r) return r;
    }
  }

  if (owner.size() != host.size()) {
    std::optional<Edge> first;
    for (const Edge& e : host) {
      if (!owner.count(e) && (!first || e < *first)) first = e;
    }
    Report r = Report::failure(Violation::MissingEdge,
                               std::to_string(host.size() - owner.size()) +
                                   " host edges uncovered, first " + to_string(*first));
    r.edge = first;
    r.missing_count = host.size() - owner.size();
    return r;
  }
  return Report::success();
}

std::vector<Vertex> canonical_cycle(std::vector<Vertex> cycle) {
  if (cycle.size() < 3) return cycle;
  auto min_it = std::min_element(cycle.begin(), cycle.end());
  std::rotate(cycle.begin(), min_it, cycle.end());
  if (cycle.back() < cycle[1]) std::reverse(cycle.begin() + 1, cycle.end());
  return cycle;
}

void canonicalize(CycleFactor& factor) {
  for (auto& cyc : factor.cycles) cyc = canonical_cycle(std::move(cyc));
  std::sort(factor.cycles.begin(), factor.cycles.end());
}

void canonicalize(OneFactor& factor) {
  for (auto& e : factor.edges) e = e.canonical();
  std::sort(factor.edges.begin(), factor.edges.end());
}

void canonicalize(Decomposition& d) {
  for (auto& f : d.cycle_factors) canonicalize(f);
  for (auto& f : d.one_factors) canonicalize(f);
}

Census census(const Decomposition& d) {
  Census c;
  for (const auto& f : d.cycle_factors) ++c.cycles_by_length[f.length];
  c.matchings = int(d.one_factors.size());
  return c;
}

std::string census_line(const Census& c, int m, int n) {
  auto count = [&](int len) {
    auto it = c.cycles_by_length.find(len);
    return it == c.cycles_by_length.end() ? 0 : it->second;
  };
  std::string out = "factors c" + std::to_string(n) + "=" + std::to_string(count(n));
  for (auto [len, k] : c.cycles_by_length) {
    if (len != n && len != m) out += " c" + std::to_string(len) + "=" + std::to_string(k);
  }
  if (m != n) out += " cm=" + std::to_string(count(m));
  out += " matchings=" + std::to_string(c.matchings);
  return out;
}

}  // namespace hwp
