#include "cli.hpp"

#include <chrono>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "rankmine/dataset_io.hpp"
#include "rankmine/datagen.hpp"
#include "rankmine/error.hpp"
#include "rankmine/gpminer.hpp"
#include "rankmine/oracle.hpp"
#include "rankmine/rules.hpp"
#include "rankmine/tesma.hpp"

namespace rankmine::cli {

namespace {

/// Invalid flag values detected after parsing.
struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point start) {
  return std::chrono::duration<double>(Clock::now() - start).count();
}

Threshold parse_threshold(const std::string& text) {
  try {
    if (text.starts_with("abs:")) {
      const std::string digits = text.substr(4);
      std::size_t used = 0;
      const long long value = std::stoll(digits, &used);
      if (used != digits.size() || value < 1) throw std::invalid_argument("abs");
      return Threshold::absolute(static_cast<std::size_t>(value));
    }
    std::size_t used = 0;
    const double value = std::stod(text, &used);
    if (used != text.size() || !(value > 0.0 && value <= 1.0)) {
      throw std::invalid_argument("rel");
    }
    return Threshold::relative(value);
  } catch (const std::exception&) {
    throw UsageError("--min-support: expected a fraction in (0, 1] or abs:<count>, got '" +
                     text + "'");
  }
}

DatasetFormat parse_format(const std::string& name) {
  if (name == "matrix") return DatasetFormat::kMatrix;
  if (name == "orders") return DatasetFormat::kOrders;
  if (name == "counted") return DatasetFormat::kCounted;
  return DatasetFormat::kAuto;
}

unsigned default_threads(std::ostream& err) {
  const char* env = std::getenv("RANKMINE_THREADS");
  if (!env || !*env) return 1;
  char* end = nullptr;
  const unsigned long value = std::strtoul(env, &end, 10);
  if (*end != '\0' || value < 1 || value > 1024) {
    err << "warning: ignoring RANKMINE_THREADS='" << env << "'\n";
    return 1;
  }
  return static_cast<unsigned>(value);
}

/// Calls fn with the file at `path`, or with `fallback` when path is empty.
void with_output(const std::string& path, std::ostream& fallback,
                 const std::function<void(std::ostream&)>& fn) {
  if (path.empty()) {
    fn(fallback);
    return;
  }
  std::ofstream file(path);
  if (!file) throw Error("cannot write '" + path + "'");
  fn(file);
  if (!file) throw Error("write to '" + path + "' failed");
}

void write_database(std::ostream& out, const RankDatabase& db, const std::string& format) {
  if (format == "orders") {
    write_order_list(out, db);
  } else {
    write_rank_matrix(out, db);
  }
}

enum class Mode { kFrequent, kClosed, kClosedPost, kMaximal };

const std::map<std::string, Mode>& mode_names() {
  static const std::map<std::string, Mode> names{{"frequent", Mode::kFrequent},
                                                 {"closed", Mode::kClosed},
                                                 {"closed-post", Mode::kClosedPost},
                                                 {"maximal", Mode::kMaximal}};
  return names;
}

PatternStore mine(const RankDatabase& db, const MiningConfig& cfg, Mode mode) {
  switch (mode) {
    case Mode::kFrequent: return mine_frequent(db, cfg);
    case Mode::kClosed: return mine_closed(db, cfg);
    case Mode::kClosedPost: return post_tesma(db, cfg);
    case Mode::kMaximal: return extract_maximal(mine_frequent(db, cfg));
  }
  return {};
}

struct Input {
  std::string path;
  std::string format = "auto";

  void attach(CLI::App* cmd) {
    cmd->add_option("--input,-i", path, "Database file")->required();
    cmd->add_option("--format", format, "Input format")
        ->check(CLI::IsMember({"auto", "matrix", "orders", "counted"}));
  }
  RankDatabase load() const { return load_database(path, parse_format(format)); }
};

struct MineArgs {
  Input input;
  std::string min_support;
  std::string mode = "frequent";
  std::string output;
  unsigned threads = 1;
};

struct RulesArgs {
  Input input;
  std::string min_support;
  std::string mode = "frequent";
  double min_conf = 0.0;
  double min_interest = -1.0;
  std::size_t rule_support = 0;
  std::size_t max_items = 0;
  std::size_t top = 0;
  std::string output;
  unsigned threads = 1;
};

struct GenArgs {
  std::size_t size = 100000;
  std::size_t k = 14;
  std::size_t n_core = 4;
  double p = 0.1;
  std::uint64_t seed = 1;
  std::string min_support = "0.01";
  std::string output;
  std::string output_dir;
  std::string out_format = "matrix";
  Input input;
  std::size_t factor = 2;
  double p_swap = 0.01;
  std::string pair;
  std::string item;
};

struct OracleArgs {
  Input input;
  std::string min_support;
  std::string mode = "all";
};

struct BenchArgs {
  Input input;
  std::string min_support;
  std::string mode = "frequent";
  std::size_t reps = 11;
  std::size_t warmup = 3;
  unsigned threads = 1;
};

int do_mine(const MineArgs& a, std::ostream& out, std::ostream& err) {
  const MiningConfig cfg{parse_threshold(a.min_support), a.threads};
  const RankDatabase db = a.input.load();
  const auto start = Clock::now();
  const PatternStore store = mine(db, cfg, mode_names().at(a.mode));
  const double elapsed = seconds_since(start);
  with_output(a.output, out, [&](std::ostream& o) {
    write_patterns(o, store, db.universe(), db.size());
  });
  err << "mine: mode=" << a.mode << " transactions=" << db.size()
      << " items=" << db.num_items() << " min_support=" << cfg.threshold.resolve(db.size())
      << " patterns=" << store.size() << " seconds=" << elapsed << '\n';
  return kOk;
}

int do_rules(const RulesArgs& a, std::ostream& out, std::ostream& err) {
  const MiningConfig cfg{parse_threshold(a.min_support), a.threads};
  const RankDatabase db = a.input.load();
  const std::size_t delta = cfg.threshold.resolve(db.size());
  const auto start = Clock::now();
  const PatternStore store = mine(db, cfg, mode_names().at(a.mode));
  RuleConfig rc;
  rc.min_confidence = a.min_conf;
  rc.min_interest = a.min_interest;
  rc.min_support = a.rule_support ? a.rule_support : delta;
  rc.max_items = a.max_items;
  auto rules = mine_rules(db, store, rc);
  const double elapsed = seconds_since(start);
  const std::size_t found = rules.size();
  if (a.top && rules.size() > a.top) rules.resize(a.top);
  with_output(a.output, out, [&](std::ostream& o) { write_rules(o, rules, db.universe()); });
  err << "rules: patterns=" << store.size() << " min_support=" << delta
      << " rule_support=" << rc.min_support << " rules=" << found
      << " seconds=" << elapsed << '\n';
  return kOk;
}

GenSpec make_spec(const GenArgs& a) {
  if (a.size < a.n_core) throw UsageError("gen: --size must be at least --n-core");
  GenSpec spec;
  spec.size = a.size;
  spec.num_items = a.k;
  spec.num_cores = a.n_core;
  spec.swap_probability = a.p;
  spec.threshold = parse_threshold(a.min_support);
  spec.seed = a.seed;
  return spec;
}

int do_gen_basic(const GenArgs& a, std::ostream& out, std::ostream& err) {
  const RankDatabase db = gen_basic(make_spec(a));
  with_output(a.output, out, [&](std::ostream& o) { write_database(o, db, a.out_format); });
  err << "gen basic: rows=" << db.size() << " items=" << db.num_items() << '\n';
  return kOk;
}

int do_gen_increasing(const GenArgs& a, std::ostream&, std::ostream& err) {
  const GenSpec spec = make_spec(a);
  std::filesystem::create_directories(a.output_dir);
  std::size_t count = 0;
  gen_increasing_frequent(spec, [&](std::size_t j, const RankDatabase& db) {
    const auto path = std::filesystem::path(a.output_dir) /
                      ("increasing_" + std::to_string(j) + ".tsv");
    with_output(path.string(), std::cout,
                [&](std::ostream& o) { write_database(o, db, a.out_format); });
    ++count;
  });
  err << "gen increasing: datasets=" << count << " rows=" << spec.size
      << " dir=" << a.output_dir << '\n';
  return kOk;
}

int do_gen_inflate(const GenArgs& a, std::ostream& out, std::ostream& err) {
  const RankDatabase db = inflate(a.input.load(), a.factor, a.p_swap, a.seed);
  with_output(a.output, out, [&](std::ostream& o) { write_database(o, db, a.out_format); });
  err << "gen inflate: rows=" << db.size() << '\n';
  return kOk;
}

int do_gen_extend(const GenArgs& a, std::ostream& out, std::ostream& err) {
  const RankDatabase src = a.input.load();
  const auto comma = a.pair.find(',');
  if (comma == std::string::npos) throw UsageError("--pair: expected 'i,j'");
  const auto lookup = [&](const std::string& name) {
    const auto idx = src.universe().find(name);
    if (idx < 0) throw Error("--pair: unknown item '" + name + "'");
    return static_cast<Item>(idx);
  };
  const Item i = lookup(a.pair.substr(0, comma));
  const Item j = lookup(a.pair.substr(comma + 1));
  std::optional<std::string> name;
  if (!a.item.empty()) name = a.item;
  const RankDatabase db = extend_rankings(src, i, j, a.seed, name);
  with_output(a.output, out, [&](std::ostream& o) { write_database(o, db, a.out_format); });
  err << "gen extend: rows=" << db.size() << " items=" << db.num_items() << '\n';
  return kOk;
}

/// Reports one comparison; returns false on mismatch.
bool compare(const std::string& what, const PatternStore& miner, const PatternStore& oracle,
             const ItemUniverse& universe, std::ostream& out) {
  if (miner.same_patterns(oracle)) {
    out << what << "\tok\t" << miner.size() << '\n';
    return true;
  }
  out << what << "\tmismatch\tminer=" << miner.size() << "\toracle=" << oracle.size() << '\n';
  std::size_t shown = 0;
  for (const auto& e : oracle.entries()) {
    if (miner.support_of(e.ranking) != e.support && shown++ < 10) {
      out << "  missing\t" << to_string(e.ranking, universe) << '\t' << e.support << '\n';
    }
  }
  for (const auto& e : miner.entries()) {
    if (oracle.support_of(e.ranking) != e.support && shown++ < 20) {
      out << "  extra\t" << to_string(e.ranking, universe) << '\t' << e.support << '\n';
    }
  }
  return false;
}

int do_oracle(const OracleArgs& a, std::ostream& out, std::ostream& err) {
  const MiningConfig cfg{parse_threshold(a.min_support), 1};
  const RankDatabase db = a.input.load();
  const std::size_t delta = cfg.threshold.resolve(db.size());
  bool ok = true;
  const bool all = a.mode == "all";
  if (all || a.mode == "frequent") {
    ok &= compare("frequent", mine_frequent(db, cfg),
                  oracle::to_store(oracle::brute_frequent(db, delta)), db.universe(), out);
  }
  if (all || a.mode == "closed") {
    const auto expected = oracle::to_store(oracle::brute_closed(db, delta));
    ok &= compare("closed", mine_closed(db, cfg), expected, db.universe(), out);
    ok &= compare("closed-post", post_tesma(db, cfg), expected, db.universe(), out);
  }
  if (all || a.mode == "maximal") {
    ok &= compare("maximal", extract_maximal(mine_frequent(db, cfg)),
                  oracle::to_store(oracle::brute_maximal(db, delta)), db.universe(), out);
  }
  err << "oracle: min_support=" << delta << (ok ? " all ok" : " MISMATCH") << '\n';
  return ok ? kOk : kDataError;
}

int do_bench(const BenchArgs& a, std::ostream& out, std::ostream& err) {
  const MiningConfig cfg{parse_threshold(a.min_support), a.threads};
  const RankDatabase db = a.input.load();
  const Mode mode = mode_names().at(a.mode);
  std::size_t warmup = a.warmup;
  if (a.reps <= warmup) {
    err << "warning: " << a.reps << " repetition(s) leave nothing after " << warmup
        << " warm-up run(s); averaging all runs\n";
    warmup = 0;
  }
  std::vector<double> times;
  std::size_t patterns = 0;
  for (std::size_t r = 0; r < a.reps; ++r) {
    const auto start = Clock::now();
    patterns = mine(db, cfg, mode).size();
    times.push_back(seconds_since(start));
  }
  double sum = 0;
  for (std::size_t r = warmup; r < times.size(); ++r) sum += times[r];
  const double mean = sum / static_cast<double>(times.size() - warmup);

  out << "run\tseconds\twarmup\n";
  for (std::size_t r = 0; r < times.size(); ++r) {
    out << r + 1 << '\t' << times[r] << '\t' << (r < warmup ? 1 : 0) << '\n';
  }
  out << "mean\t" << mean << '\t' << times.size() - warmup << '\n';
  err << "bench: mode=" << a.mode << " transactions=" << db.size() << " patterns=" << patterns
      << " mean_seconds=" << mean << '\n';
  return kOk;
}

}  // namespace

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Frequent and closed subranking mining over rank data", "rankmine"};
  app.require_subcommand(1);
  const unsigned env_threads = default_threads(err);
  std::vector<std::string> mode_list;
  for (const auto& [name, mode] : mode_names()) mode_list.push_back(name);

  MineArgs mine_args;
  mine_args.threads = env_threads;
  auto* mine_cmd = app.add_subcommand("mine", "Mine frequent, closed or maximal rankings");
  mine_args.input.attach(mine_cmd);
  mine_cmd->add_option("--min-support,-s", mine_args.min_support,
                       "Fraction in (0,1] or abs:<count>")->required();
  mine_cmd->add_option("--mode,-m", mine_args.mode)->check(CLI::IsMember(mode_list));
  mine_cmd->add_option("--output,-o", mine_args.output, "Pattern TSV (default stdout)");
  mine_cmd->add_option("--threads,-t", mine_args.threads)->check(CLI::Range(1u, 1024u));

  RulesArgs rules_args;
  rules_args.threads = env_threads;
  auto* rules_cmd = app.add_subcommand("rules", "Mine association rules between rankings");
  rules_args.input.attach(rules_cmd);
  rules_cmd->add_option("--min-support,-s", rules_args.min_support)->required();
  rules_cmd->add_option("--mode,-m", rules_args.mode, "Pattern source")
      ->check(CLI::IsMember({"frequent", "closed"}));
  rules_cmd->add_option("--min-conf", rules_args.min_conf)->check(CLI::Range(0.0, 1.0));
  rules_cmd->add_option("--min-interest", rules_args.min_interest)->check(CLI::Range(-1.0, 1.0));
  rules_cmd->add_option("--rule-support", rules_args.rule_support,
                        "Lowest joint support count (default: the mining threshold)");
  rules_cmd->add_option("--max-items", rules_args.max_items, "Cap on |A|+|B|; 0 = none");
  rules_cmd->add_option("--top", rules_args.top, "Keep only the first N rules");
  rules_cmd->add_option("--output,-o", rules_args.output);
  rules_cmd->add_option("--threads,-t", rules_args.threads)->check(CLI::Range(1u, 1024u));

  GenArgs gen_args;
  auto* gen_cmd = app.add_subcommand("gen", "Generate synthetic or derived datasets");
  gen_cmd->require_subcommand(1);
  auto add_core_options = [&](CLI::App* cmd) {
    cmd->add_option("--size,-N", gen_args.size)->check(CLI::PositiveNumber);
    cmd->add_option("--k,-K", gen_args.k)->check(CLI::Range(std::size_t{2}, std::size_t{100000}));
    cmd->add_option("--n-core", gen_args.n_core)->check(CLI::PositiveNumber);
    cmd->add_option("--p", gen_args.p, "Neighbour swap probability")->check(CLI::Range(0.0, 1.0));
  };
  auto add_output = [&](CLI::App* cmd) {
    cmd->add_option("--seed", gen_args.seed);
    cmd->add_option("--output,-o", gen_args.output);
    cmd->add_option("--out-format", gen_args.out_format)
        ->check(CLI::IsMember({"matrix", "orders"}));
  };
  auto* basic_cmd = gen_cmd->add_subcommand("basic", "Replicated noisy core rankings");
  add_core_options(basic_cmd);
  add_output(basic_cmd);
  auto* inc_cmd = gen_cmd->add_subcommand("increasing", "Datasets with 1, 2, ... frequent rankings");
  add_core_options(inc_cmd);
  add_output(inc_cmd);
  inc_cmd->add_option("--min-support,-s", gen_args.min_support);
  inc_cmd->add_option("--output-dir", gen_args.output_dir)->required();
  auto* inflate_cmd = gen_cmd->add_subcommand("inflate", "Noisy copies of a dataset");
  gen_args.input.attach(inflate_cmd);
  add_output(inflate_cmd);
  inflate_cmd->add_option("--factor,-v", gen_args.factor)->check(CLI::PositiveNumber);
  inflate_cmd->add_option("--p-swap", gen_args.p_swap)->check(CLI::Range(0.0, 1.0));
  auto* extend_cmd = gen_cmd->add_subcommand("extend", "Insert a new item into every ranking");
  gen_args.input.attach(extend_cmd);
  add_output(extend_cmd);
  extend_cmd->add_option("--pair", gen_args.pair, "Anchor pair 'i,j' by item name")->required();
  extend_cmd->add_option("--item", gen_args.item, "Name of the new item");

  OracleArgs oracle_args;
  auto* oracle_cmd = app.add_subcommand("oracle", "Check the miners against brute force");
  oracle_args.input.attach(oracle_cmd);
  oracle_cmd->add_option("--min-support,-s", oracle_args.min_support)->required();
  oracle_cmd->add_option("--mode,-m", oracle_args.mode)
      ->check(CLI::IsMember({"all", "frequent", "closed", "maximal"}));

  BenchArgs bench_args;
  bench_args.threads = env_threads;
  auto* bench_cmd = app.add_subcommand("bench", "Time repeated mining runs");
  bench_args.input.attach(bench_cmd);
  bench_cmd->add_option("--min-support,-s", bench_args.min_support)->required();
  bench_cmd->add_option("--mode,-m", bench_args.mode)->check(CLI::IsMember(mode_list));
  bench_cmd->add_option("--reps", bench_args.reps)->check(CLI::PositiveNumber);
  bench_cmd->add_option("--warmup", bench_args.warmup);
  bench_cmd->add_option("--threads,-t", bench_args.threads)->check(CLI::Range(1u, 1024u));

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e, out, err) == 0 ? kOk : kUsageError;
  }

  try {
    if (mine_cmd->parsed()) return do_mine(mine_args, out, err);
    if (rules_cmd->parsed()) return do_rules(rules_args, out, err);
    if (basic_cmd->parsed()) return do_gen_basic(gen_args, out, err);
    if (inc_cmd->parsed()) return do_gen_increasing(gen_args, out, err);
    if (inflate_cmd->parsed()) return do_gen_inflate(gen_args, out, err);
    if (extend_cmd->parsed()) return do_gen_extend(gen_args, out, err);
    if (oracle_cmd->parsed()) return do_oracle(oracle_args, out, err);
    if (bench_cmd->parsed()) return do_bench(bench_args, out, err);
  } catch (const UsageError& e) {
    err << "error: " << e.what() << '\n';
    return kUsageError;
  } catch (const PreconditionError& e) {
    err << "error: " << e.what() << '\n';
    return kUsageError;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kDataError;
  }
  return kUsageError;
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  std::vector<const char*> argv;
  argv.reserve(args.size());
  for (const auto& a : args) argv.push_back(a.c_str());
  return run(static_cast<int>(argv.size()), argv.data(), out, err);
}

}  // namespace rankmine::cli
