#include "hwp/certificate.hpp"

#include <algorithm>
#include <charconv>
#include <map>
#include <set>
#include <sstream>

#include "hwp/errors.hpp"
#include "hwp/tables.hpp"

namespace hwp {
namespace {

constexpr const char* kMagic = "HWP-CERT 1";

std::vector<std::string> split(const std::string& s, char sep) {
  std::vector<std::string> out;
  std::string cur;
  for (char c : s) {
    if (c == sep) {
      out.push_back(cur);
      cur.clear();
    } else {
      cur += c;
    }
  }
  out.push_back(cur);
  return out;
}

std::vector<std::string> words(const std::string& s) {
  std::istringstream is(s);
  std::vector<std::string> out;
  for (std::string w; is >> w;) out.push_back(w);
  return out;
}

int to_int(const std::string& s, const std::string& what) {
  int value = 0;
  const char* end = s.data() + s.size();
  auto [ptr, ec] = std::from_chars(s.data(), end, value);
  if (s.empty() || ec != std::errc() || ptr != end) throw ParseError("bad integer '" + s + "' in " + what);
  return value;
}

std::map<std::string, std::string> key_values(const std::vector<std::string>& ws, std::size_t from,
                                              const std::string& what) {
  std::map<std::string, std::string> out;
  for (std::size_t i = from; i < ws.size(); ++i) {
    const auto eq = ws[i].find('=');
    if (eq == std::string::npos) throw ParseError("expected key=value in " + what + ", got '" + ws[i] + "'");
    out[ws[i].substr(0, eq)] = ws[i].substr(eq + 1);
  }
  return out;
}

const std::string& need(const std::map<std::string, std::string>& kv, const std::string& key,
                        const std::string& what) {
  auto it = kv.find(key);
  if (it == kv.end()) throw ParseError(what + " lacks " + key + "=");
  return it->second;
}

std::string format_diffs(const std::vector<int>& diffs, int n) {
  const std::set<int> have(diffs.begin(), diffs.end());
  std::vector<std::string> parts;
  for (int d : have) {
    const int neg = mod(-d, n);
    if (d == 0 || d == neg) {
      parts.push_back(std::to_string(d));
    } else if (have.count(neg)) {
      if (d < neg) parts.push_back("+-" + std::to_string(d));
    } else if (d < neg) {
      parts.push_back(std::to_string(d));
    } else {
      parts.push_back("-" + std::to_string(neg));
    }
  }
  std::string out;
  for (const auto& p : parts) out += (out.empty() ? "" : ",") + p;
  return out;
}

std::vector<int> parse_diffs(const std::string& text, int n) {
  std::set<int> out;
  if (text.empty()) throw ParseError("empty column difference list");
  for (const auto& tok : split(text, ',')) {
    if (tok.rfind("+-", 0) == 0) {
      const int d = to_int(tok.substr(2), "column differences");
      out.insert(mod(d, n));
      out.insert(mod(-d, n));
    } else if (tok.rfind('-', 0) == 0) {
      out.insert(mod(-to_int(tok.substr(1), "column differences"), n));
    } else {
      out.insert(mod(to_int(tok, "column differences"), n));
    }
  }
  return {out.begin(), out.end()};
}

std::string format_table(const TableRef& t) { return table_label(t.table, t.index); }

TableRef parse_table(const std::string& s) {
  TableRef ref;
  std::string digits;
  if (s.rfind("I'", 0) == 0) {
    ref.table = TableName::Iprime;
    digits = s.substr(2);
  } else if (s.rfind('I', 0) == 0) {
    ref.table = TableName::I;
    digits = s.substr(1);
  } else {
    throw ParseError("bad table reference '" + s + "'");
  }
  ref.index = to_int(digits, "table reference");
  if (ref.index < 1 || ref.index > 15) throw ParseError("table index out of range in '" + s + "'");
  return ref;
}

std::string format_pairs(const Matching& pairs) {
  std::string out;
  for (auto [a, b] : pairs) out += (out.empty() ? "" : ",") + std::to_string(a) + "-" + std::to_string(b);
  return out;
}

Matching parse_pairs(const std::string& s) {
  Matching out;
  if (s.empty()) return out;
  for (const auto& tok : split(s, ',')) {
    const auto dash = tok.find('-');
    if (dash == std::string::npos) throw ParseError("bad column pair '" + tok + "'");
    out.emplace_back(to_int(tok.substr(0, dash), "column pair"), to_int(tok.substr(dash + 1), "column pair"));
  }
  return out;
}

// Union parts are written compactly: cayley{+-6,8}, table{I'11}, pairs{0-1,2-3},
// cliques, blown, wreath.
std::string format_part(const HostDescriptor& p) {
  switch (p.kind) {
    case HostKind::CayleyLayer: return "cayley{" + format_diffs(p.col_diffs, p.n) + "}";
    case HostKind::BlownCycle: return "blown";
    case HostKind::Wreath: return "wreath";
    case HostKind::CliqueCopies: return "cliques";
    case HostKind::MatchingCopies:
      return p.table ? "table{" + format_table(*p.table) + "}" : "pairs{" + format_pairs(p.pairs) + "}";
    case HostKind::Union: throw InvalidArgument("nested union hosts are not representable");
  }
  throw InvalidArgument("unknown host kind");
}

HostDescriptor parse_part(const std::string& s, int m, int n) {
  auto braced = [&](const std::string& name) -> std::optional<std::string> {
    if (s.rfind(name + "{", 0) == 0 && s.back() == '}') return s.substr(name.size() + 1, s.size() - name.size() - 2);
    return std::nullopt;
  };
  if (s == "blown") return HostDescriptor::blown(m, n);
  if (s == "wreath") return HostDescriptor::wreath(m, n);
  if (s == "cliques") return HostDescriptor::cliques(m, n);
  if (auto body = braced("cayley")) return HostDescriptor::cayley(m, n, parse_diffs(*body, n));
  if (auto body = braced("table")) {
    const TableRef t = parse_table(*body);
    if (n != 16) throw ParseError("table matchings need n=16");
    return HostDescriptor::table_matching(m, t.table, t.index);
  }
  if (auto body = braced("pairs")) return HostDescriptor::matching(m, n, parse_pairs(*body));
  throw ParseError("unknown union part '" + s + "'");
}

std::vector<std::string> split_parts(const std::string& s) {
  std::vector<std::string> out;
  std::string cur;
  int depth = 0;
  for (char c : s) {
    if (c == '{') ++depth;
    if (c == '}') --depth;
    if (c == '+' && depth == 0) {
      out.push_back(cur);
      cur.clear();
    } else {
      cur += c;
    }
  }
  out.push_back(cur);
  return out;
}

Vertex parse_vertex(const std::string& s, const Grid& grid) {
  const auto colon = s.find(':');
  if (colon == std::string::npos) throw ParseError("bad vertex '" + s + "'");
  Vertex v{to_int(s.substr(0, colon), "vertex"), to_int(s.substr(colon + 1), "vertex")};
  if (!grid.contains(v)) throw ParseError("vertex '" + s + "' outside the host grid");
  return v;
}

std::string label_of(const std::string& line) {
  const auto pos = line.find(" label=");
  return pos == std::string::npos ? std::string() : line.substr(pos + 7);
}

}  // namespace

std::string format_host(const HostDescriptor& host) {
  const std::string mn = " m=" + std::to_string(host.m) + " n=" + std::to_string(host.n);
  switch (host.kind) {
    case HostKind::Wreath: return "wreath m=" + std::to_string(host.m) + " q=" + std::to_string(host.n);
    case HostKind::CayleyLayer: return "cayley" + mn + " conn=r:+-1;c:" + format_diffs(host.col_diffs, host.n);
    case HostKind::BlownCycle: return "blown" + mn;
    case HostKind::CliqueCopies: return "cliques" + mn;
    case HostKind::MatchingCopies:
      return "matching" + mn + (host.table ? " table=" + format_table(*host.table) : " pairs=" + format_pairs(host.pairs));
    case HostKind::Union: {
      std::string parts;
      for (const auto& p : host.parts) parts += (parts.empty() ? "" : "+") + format_part(p);
      return "union" + mn + " parts=" + parts;
    }
  }
  throw InvalidArgument("unknown host kind");
}

HostDescriptor parse_host(const std::string& text) {
  const auto ws = words(text);
  if (ws.empty()) throw ParseError("empty host line");
  const auto kv = key_values(ws, 1, "host line");
  const std::string& kind = ws[0];
  const int m = to_int(need(kv, "m", "host line"), "host m");
  if (m < 3) throw ParseError("host m must be >= 3");
  if (kind == "wreath") {
    const int q = to_int(need(kv, "q", "host line"), "host q");
    if (q < 2) throw ParseError("host q must be >= 2");
    return HostDescriptor::wreath(m, q);
  }
  const int n = to_int(need(kv, "n", "host line"), "host n");
  if (n < 2) throw ParseError("host n must be >= 2");
  if (kind == "cayley") {
    const std::string& conn = need(kv, "conn", "host line");
    const std::string prefix = "r:+-1;c:";
    if (conn.rfind(prefix, 0) != 0) throw ParseError("unsupported connection set '" + conn + "'");
    return HostDescriptor::cayley(m, n, parse_diffs(conn.substr(prefix.size()), n));
  }
  if (kind == "blown") return HostDescriptor::blown(m, n);
  if (kind == "cliques") return HostDescriptor::cliques(m, n);
  if (kind == "matching") {
    if (kv.count("table")) {
      if (n != 16) throw ParseError("table matchings need n=16");
      const TableRef t = parse_table(kv.at("table"));
      return HostDescriptor::table_matching(m, t.table, t.index);
    }
    return HostDescriptor::matching(m, n, parse_pairs(need(kv, "pairs", "host line")));
  }
  if (kind == "union") {
    std::vector<HostDescriptor> parts;
    for (const auto& p : split_parts(need(kv, "parts", "host line"))) parts.push_back(parse_part(p, m, n));
    return HostDescriptor::union_of(m, n, std::move(parts));
  }
  throw ParseError("unknown host kind '" + kind + "'");
}

std::string serialize_certificate(const Decomposition& d) {
  std::ostringstream os;
  os << kMagic << "\n";
  os << "host " << format_host(d.host) << "\n";
  os << census_line(census(d), d.host.m, d.host.n) << "\n";
  int idx = 0;
  for (const auto& f : d.cycle_factors) {
    os << "factor " << idx++ << " cycle len=" << f.length << " label=" << f.label << "\n";
    for (const auto& cyc : f.cycles) {
      os << "cycle";
      for (const Vertex& v : cyc) os << ' ' << to_string(v);
      os << "\n";
    }
  }
  for (const auto& f : d.one_factors) {
    os << "factor " << idx++ << " matching label=" << f.label << "\n";
    for (const Edge& e : f.edges) os << "edge " << to_string(e.a) << ' ' << to_string(e.b) << "\n";
  }
  os << "end\n";
  return os.str();
}

Decomposition parse_certificate(const std::string& text) {
  std::istringstream in(text);
  std::string line;
  int lineno = 0;
  auto next = [&](const char* what) -> std::string& {
    if (!std::getline(in, line)) throw ParseError(std::string("unexpected end of input, expected ") + what);
    ++lineno;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    return line;
  };
  auto fail = [&](const std::string& why) -> ParseError {
    return ParseError("line " + std::to_string(lineno) + ": " + why);
  };

  if (next("header") != kMagic) throw fail("expected '" + std::string(kMagic) + "'");
  if (next("host line").rfind("host ", 0) != 0) throw fail("expected host line");
  Decomposition d;
  try {
    d.host = parse_host(line.substr(5));
  } catch (const ParseError& e) {
    throw fail(e.what());
  }
  const Grid grid = d.grid();
  const std::string census_text = next("census line");
  if (census_text.rfind("factors ", 0) != 0) throw fail("expected census line");

  enum { None, Cycle, Match } current = None;
  int expected_idx = 0;
  bool seen_matching = false;
  for (;;) {
    const std::string& l = next("'end'");
    if (l == "end") break;
    const auto ws = words(l);
    if (ws.empty()) throw fail("blank line");
    try {
      if (ws[0] == "factor") {
        if (ws.size() < 3 || to_int(ws[1], "factor index") != expected_idx) throw fail("bad factor index");
        ++expected_idx;
        if (ws[2] == "cycle") {
          if (seen_matching) throw fail("cycle factor after a matching");
          if (ws.size() < 4 || ws[3].rfind("len=", 0) != 0) throw fail("cycle factor lacks len=");
          CycleFactor f;
          f.length = to_int(ws[3].substr(4), "cycle length");
          f.label = label_of(l);
          d.cycle_factors.push_back(std::move(f));
          current = Cycle;
        } else if (ws[2] == "matching") {
          seen_matching = true;
          OneFactor f;
          f.label = label_of(l);
          d.one_factors.push_back(std::move(f));
          current = Match;
        } else {
          throw fail("unknown factor kind '" + ws[2] + "'");
        }
      } else if (ws[0] == "cycle") {
        if (current != Cycle) throw fail("cycle line outside a cycle factor");
        std::vector<Vertex> cyc;
        for (std::size_t i = 1; i < ws.size(); ++i) cyc.push_back(parse_vertex(ws[i], grid));
        d.cycle_factors.back().cycles.push_back(std::move(cyc));
      } else if (ws[0] == "edge") {
        if (current != Match) throw fail("edge line outside a matching");
        if (ws.size() != 3) throw fail("edge line needs two vertices");
        const Vertex a = parse_vertex(ws[1], grid);
        const Vertex b = parse_vertex(ws[2], grid);
        if (a == b) throw fail("edge joins a vertex to itself");
        d.one_factors.back().edges.push_back(Edge::make(a, b));
      } else {
        throw fail("unexpected '" + ws[0] + "'");
      }
    } catch (const ParseError& e) {
      if (std::string(e.what()).rfind("line ", 0) == 0) throw;
      throw fail(e.what());
    }
  }
  if (std::getline(in, line) && !line.empty()) throw ParseError("trailing content after 'end'");
  if (census_line(census(d), d.host.m, d.host.n) != census_text) {
    throw ParseError("census line '" + census_text + "' does not match the factors listed");
  }
  return d;
}

}  // namespace hwp
