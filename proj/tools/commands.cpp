#include "commands.hpp"

#include <atomic>
#include <chrono>
#include <fstream>
#include <functional>
#include <iomanip>
#include <iostream>
#include <memory>
#include <random>
#include <sstream>
#include <stdexcept>
#include <thread>

#include "hwp/assembly.hpp"
#include "hwp/certificate.hpp"
#include "hwp/errors.hpp"
#include "hwp/solution_cache.hpp"

namespace hwp::cli {
namespace {

int guarded(std::ostream& err, const std::function<int()>& body) {
  try {
    return body();
  } catch (const UnsupportedParameters& e) {
    err << "unsupported: " << e.what() << "\n";
    return kUnsupported;
  } catch (const SearchTimeout& e) {
    err << "search timeout: " << e.what() << "\n";
    return kTimeout;
  } catch (const Infeasible& e) {
    err << "search failed: " << e.what() << "\n";
    return kTimeout;
  } catch (const ParseError& e) {
    err << "parse error: " << e.what() << "\n";
    return kParse;
  } catch (const Error& e) {
    err << "verification failure: " << e.what() << "\n";
    return kVerification;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return kVerification;
  }
}

std::unique_ptr<SolutionCache> open_cache(const CacheChoice& choice) {
  if (choice.disabled) return nullptr;
  return std::make_unique<SolutionCache>(choice.dir ? *choice.dir : SolutionCache::default_dir());
}

bool read_file(const std::filesystem::path& path, std::string& text) {
  std::ifstream in(path, std::ios::binary);
  if (!in) return false;
  std::ostringstream os;
  os << in.rdbuf();
  text = os.str();
  return true;
}

std::string census_of(const Decomposition& d) {
  return census_line(census(d), d.host.m, d.host.n);
}

// Host edges that no listed factor mentions, whatever else is wrong.
std::vector<Edge> uncovered_edges(const Decomposition& d) {
  EdgeSet left = build_host(d.host);
  for (const auto& f : d.cycle_factors) {
    for (const auto& c : f.cycles) {
      for (std::size_t j = 0; j < c.size(); ++j) {
        const Vertex& u = c[j];
        const Vertex& v = c[(j + 1) % c.size()];
        if (u != v) left.erase(Edge::make(u, v));
      }
    }
  }
  for (const auto& f : d.one_factors) {
    for (const auto& e : f.edges) {
      if (e.a != e.b) left.erase(Edge::make(e.a, e.b));
    }
  }
  return left.sorted();
}

struct SweepRow {
  int m = 0;
  int r = 0;
  int code = kOk;
  double seconds = 0;
  std::string census;
  GenerateStats stats;
  std::string message;
};

SweepRow sweep_one(int m, int r, const SweepArgs& args, SolutionCache* cache) {
  SweepRow row;
  row.m = m;
  row.r = r;
  std::ostringstream err;
  const auto start = std::chrono::steady_clock::now();
  row.code = guarded(err, [&] {
    GenerateOptions opts;
    opts.solver.seed = args.seed;
    opts.cache = cache;
    const Decomposition d = generate(m, r, opts, &row.stats);
    const auto path = args.out_dir / certificate_name(m, r);
    write_file_atomic(path, serialize_certificate(d));
    std::string text;
    if (!read_file(path, text)) throw VerificationFailure("cannot read back " + path.string());
    const Decomposition back = parse_certificate(text);
    if (Report rep = verify_decomposition(back); !rep) throw VerificationFailure(rep.message);
    row.census = census_of(back);
    return int(kOk);
  });
  row.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  row.message = err.str();
  while (!row.message.empty() && row.message.back() == '\n') row.message.pop_back();
  return row;
}

}  // namespace

std::vector<int> parse_int_list(const std::string& text) {
  std::vector<int> out;
  std::istringstream in(text);
  std::string item;
  while (std::getline(in, item, ',')) {
    if (item.empty()) continue;
    const auto dots = item.find("..");
    std::size_t used = 0;
    if (dots == std::string::npos) {
      out.push_back(std::stoi(item, &used));
      if (used != item.size()) throw std::invalid_argument("bad integer '" + item + "'");
      continue;
    }
    const std::string lo_text = item.substr(0, dots);
    const std::string hi_text = item.substr(dots + 2);
    const int lo = std::stoi(lo_text, &used);
    if (used != lo_text.size()) throw std::invalid_argument("bad range '" + item + "'");
    const int hi = std::stoi(hi_text, &used);
    if (used != hi_text.size() || hi < lo) throw std::invalid_argument("bad range '" + item + "'");
    for (int v = lo; v <= hi; ++v) out.push_back(v);
  }
  return out;
}

void write_file_atomic(const std::filesystem::path& path, const std::string& content) {
  if (path.has_parent_path()) std::filesystem::create_directories(path.parent_path());
  std::ostringstream suffix;
  suffix << ".tmp." << std::hash<std::thread::id>{}(std::this_thread::get_id()) << "." << std::random_device{}();
  const std::filesystem::path tmp(path.string() + suffix.str());
  {
    std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
    out << content;
    out.flush();
    if (!out) {
      std::error_code ec;
      std::filesystem::remove(tmp, ec);
      throw std::runtime_error("cannot write " + tmp.string());
    }
  }
  std::filesystem::rename(tmp, path);
}

std::string certificate_name(int m, int r) {
  return "hwp-m" + std::to_string(m) + "-r" + std::to_string(r) + ".cert";
}

int cmd_generate(const GenerateArgs& args, std::ostream& out, std::ostream& err) {
  return guarded(err, [&] {
    auto cache = open_cache(args.cache);
    GenerateOptions opts;
    opts.solver.seed = args.seed;
    opts.cache = cache.get();
    const Decomposition d = generate(args.m, args.r, opts);
    const std::string text = serialize_certificate(d);
    if (args.out.empty() || args.out == "-") {
      out << text;
    } else {
      try {
        write_file_atomic(args.out, text);
      } catch (const std::exception& e) {
        err << "error: " << e.what() << "\n";
        return int(kUsage);
      }
      out << args.out << ": " << census_of(d) << "\n";
    }
    return int(kOk);
  });
}

int cmd_verify(const std::filesystem::path& path, std::ostream& out, std::ostream& err) {
  std::string text;
  if (!read_file(path, text)) {
    err << "error: cannot read " << path.string() << "\n";
    return kUsage;
  }
  return guarded(err, [&] {
    const Decomposition d = parse_certificate(text);
    const Report rep = verify_decomposition(d);
    if (!rep) {
      out << "REJECTED " << path.string() << "\n";
      out << "  violation: " << to_string(rep.kind) << "\n";
      out << "  " << rep.message << "\n";
      for (const auto& label : rep.labels) out << "  factor: " << label << "\n";
      if (const auto missing = uncovered_edges(d); !missing.empty()) {
        out << "  missing edge: " << to_string(missing.front()) << " (" << missing.size() << " uncovered)\n";
      }
      return int(kVerification);
    }
    out << "ACCEPTED " << path.string() << "\n";
    out << "  host " << format_host(d.host) << "\n";
    out << "  " << census_of(d) << "\n";
    return int(kOk);
  });
}

int cmd_sweep(const SweepArgs& args, std::ostream& out, std::ostream& err) {
  if (args.ms.empty() || args.rs.empty()) {
    err << "error: sweep needs a non-empty m list and r list\n";
    return kUsage;
  }
  if (args.jobs < 1) {
    err << "error: --jobs must be at least 1\n";
    return kUsage;
  }
  std::error_code ec;
  std::filesystem::create_directories(args.out_dir, ec);
  if (ec) {
    err << "error: cannot create " << args.out_dir.string() << ": " << ec.message() << "\n";
    return kUsage;
  }
  auto cache = open_cache(args.cache);

  std::vector<std::pair<int, int>> pairs;
  for (int m : args.ms) {
    for (int r : args.rs) pairs.emplace_back(m, r);
  }
  std::vector<SweepRow> rows(pairs.size());
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t i = next++; i < pairs.size(); i = next++) {
      rows[i] = sweep_one(pairs[i].first, pairs[i].second, args, cache.get());
    }
  };
  const int threads = std::min<int>(args.jobs, int(pairs.size()));
  std::vector<std::thread> pool;
  for (int t = 1; t < threads; ++t) pool.emplace_back(worker);
  worker();
  for (auto& t : pool) t.join();

  out << "m\tr\tstatus\tseconds\tcensus\tcache_hits\tcache_misses\tsearch_nodes\tmessage\n";
  int code = kOk;
  int failed = 0;
  for (const auto& row : rows) {
    out << row.m << "\t" << row.r << "\t" << (row.code == kOk ? "pass" : "fail") << "\t" << std::fixed
        << std::setprecision(3) << row.seconds << "\t" << row.census << "\t" << row.stats.cache_hits << "\t"
        << row.stats.cache_misses << "\t" << row.stats.search_nodes << "\t" << row.message << "\n";
    if (row.code != kOk) {
      ++failed;
      if (code == kOk) code = row.code;
    }
  }
  if (failed) err << failed << " of " << rows.size() << " instances failed\n";
  return code;
}

int cmd_selftest_tables(std::ostream& out, std::ostream& err) {
  return cmd_selftest_tables(matching_table(TableName::I), matching_table(TableName::Iprime), out, err);
}

int cmd_selftest_tables(const MatchingTable& i_table, const MatchingTable& iprime_table, std::ostream& out,
                        std::ostream& err) {
  const auto problems = table_selftest(i_table, iprime_table);
  if (problems.empty()) {
    out << "tables ok\n";
    return kOk;
  }
  for (const auto& p : problems) err << "table problem: " << p << "\n";
  return kVerification;
}

int cmd_cache_list(const CacheChoice& cache, std::ostream& out, std::ostream&) {
  SolutionCache c(cache.dir ? *cache.dir : SolutionCache::default_dir());
  for (const auto& key : c.list()) out << key << "\n";
  return kOk;
}

int cmd_cache_clear(const CacheChoice& cache, std::ostream& out, std::ostream&) {
  SolutionCache c(cache.dir ? *cache.dir : SolutionCache::default_dir());
  out << "removed " << c.clear() << " entries from " << c.dir().string() << "\n";
  return kOk;
}

}  // namespace hwp::cli
