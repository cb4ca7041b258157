#include <iostream>
#include <string>

#include "CLI11.hpp"
#include "commands.hpp"

namespace {

std::uint64_t parse_seed(const std::string& text) {
  std::size_t used = 0;
  const auto value = std::stoull(text, &used, 0);
  if (used != text.size()) throw std::invalid_argument("bad seed '" + text + "'");
  return value;
}

}  // namespace

int main(int argc, char** argv) {
  using namespace hwp::cli;

  CLI::App app{"Build and check factorizations of C_m wreath K_16"};
  app.require_subcommand(1);

  std::string seed_text = "0x5eed";
  std::string cache_dir;
  bool no_cache = false;
  auto add_cache_flags = [&](CLI::App* sub) {
    sub->add_option("--cache-dir", cache_dir, "Solution cache directory (default: $HWP_CACHE_DIR or ~/.cache/hwp)");
    sub->add_flag("--no-cache", no_cache, "Do not read or write the solution cache");
  };
  auto cache_choice = [&] {
    CacheChoice c;
    if (!cache_dir.empty()) c.dir = cache_dir;
    c.disabled = no_cache;
    return c;
  };

  GenerateArgs gen;
  auto* generate = app.add_subcommand("generate", "Emit a verified certificate for one (m, r)");
  generate->add_option("--m", gen.m, "Odd cycle length, at least 9")->required();
  generate->add_option("--r", gen.r, "Number of C_16-factors, 7..23")->required();
  generate->add_option("--out", gen.out, "Output file (default: stdout)");
  generate->add_option("--seed", seed_text, "Solver seed");
  add_cache_flags(generate);

  std::string verify_path;
  auto* verify = app.add_subcommand("verify", "Check a certificate file");
  verify->add_option("path", verify_path, "Certificate file")->required();

  std::string m_list;
  std::string r_list;
  SweepArgs sweep_args;
  sweep_args.out_dir = "certificates";
  std::string out_dir = "certificates";
  auto* sweep = app.add_subcommand("sweep", "Generate and verify every (m, r) pair; TSV summary on stdout");
  sweep->add_option("--m", m_list, "m values, e.g. 9,11,13,15 or 9..15")->required();
  sweep->add_option("--r", r_list, "r values, e.g. 7..23")->required();
  sweep->add_option("--out-dir", out_dir, "Directory for certificates");
  sweep->add_option("--jobs", sweep_args.jobs, "Parallel instances");
  sweep->add_option("--seed", seed_text, "Solver seed");
  add_cache_flags(sweep);

  auto* selftest = app.add_subcommand("selftest-tables", "Check the built-in matching tables");

  auto* cache = app.add_subcommand("cache", "Inspect or clear the solution cache");
  cache->require_subcommand(1);
  auto* cache_list = cache->add_subcommand("list", "List cached keys");
  auto* cache_clear = cache->add_subcommand("clear", "Delete cached entries");
  cache->add_option("--cache-dir", cache_dir, "Solution cache directory");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kUsage;
  }

  std::uint64_t seed = 0;
  try {
    seed = parse_seed(seed_text);
  } catch (const std::exception&) {
    std::cerr << "error: bad --seed '" << seed_text << "'\n";
    return kUsage;
  }

  if (*generate) {
    gen.seed = seed;
    gen.cache = cache_choice();
    return cmd_generate(gen, std::cout, std::cerr);
  }
  if (*verify) return cmd_verify(verify_path, std::cout, std::cerr);
  if (*sweep) {
    try {
      sweep_args.ms = parse_int_list(m_list);
      sweep_args.rs = parse_int_list(r_list);
    } catch (const std::exception& e) {
      std::cerr << "error: " << e.what() << "\n";
      return kUsage;
    }
    sweep_args.out_dir = out_dir;
    sweep_args.seed = seed;
    sweep_args.cache = cache_choice();
    return cmd_sweep(sweep_args, std::cout, std::cerr);
  }
  if (*selftest) return cmd_selftest_tables(std::cout, std::cerr);
  if (*cache_list) return cmd_cache_list(cache_choice(), std::cout, std::cerr);
  if (*cache_clear) return cmd_cache_clear(cache_choice(), std::cout, std::cerr);
  return kUsage;
}
