#include <cmath>
#include <cstdio>
#include <iostream>
#include <map>
#include <sstream>
#include <string>

#include "CLI11.hpp"
#include "json.hpp"
#include "pancake/exact.hpp"
#include "pancake/experiments.hpp"
#include "pancake/potential.hpp"
#include "pancake/sorters.hpp"
#include "pancake/text_io.hpp"

namespace {

using nlohmann::json;
using namespace pancake;

enum ExitCode {
  kOk = 0,
  kDomainError = 1,
  kUsageError = 2,
  kResourceLimit = 3,
};

struct Options {
  std::string format = "text";
  std::uint64_t seed = 0;
  int threads = 1;
};

std::vector<int> parse_flip_list(const std::string& text) {
  std::vector<int> flips;
  std::stringstream in(text);
  std::string tok;
  while (std::getline(in, tok, ',')) {
    if (tok.empty()) continue;
    size_t pos = 0;
    int v;
    try {
      v = std::stoi(tok, &pos);
    } catch (const std::exception&) {
      throw std::invalid_argument("bad flip size: " + tok);
    }
    if (pos != tok.size()) throw std::invalid_argument("bad flip size: " + tok);
    flips.push_back(v);
  }
  return flips;
}

std::string join_ints(const std::vector<int>& xs, char sep = ',') {
  std::string out;
  for (int x : xs) {
    if (!out.empty()) out += sep;
    out += std::to_string(x);
  }
  return out;
}

Variant parse_variant(const std::string& v) {
  if (v == "burnt") return Variant::Burnt;
  if (v == "unburnt") return Variant::Unburnt;
  throw std::invalid_argument("variant must be burnt or unburnt");
}

void emit(const Options& opt, const std::string& text,
          const std::string& csv_header, const std::string& csv_row,
          const json& j) {
  if (opt.format == "text")
    std::cout << text << "\n";
  else if (opt.format == "csv")
    std::cout << csv_header << "\n" << csv_row << "\n";
  else
    std::cout << j.dump(2) << "\n";
}

int run_sort(const Options& opt, const std::string& algo,
             const std::string& stack_text) {
  const Algorithm a = algorithm_from_name(algo);
  const AnyStack s = parse_stack(stack_text);
  SortOutcome out;
  if (a == Algorithm::UnburntRandomized) {
    const auto* u = std::get_if<UnburntStack>(&s);
    if (!u)
      throw std::invalid_argument("unburnt-rand needs an unburnt stack");
    out = sort_unburnt_randomized(*u, opt.seed);
  } else {
    const auto* b = std::get_if<BurntStack>(&s);
    if (!b) throw std::invalid_argument(algo + " needs a burnt stack");
    out = a == Algorithm::BurntAverage ? sort_burnt_average(*b)
                                       : sort_greedy_lookahead(*b);
  }
  const std::string flips = join_ints(out.trace.flips);
  emit(opt,
       "stack: " + format_stack(s) + "\nflips: " + flips +
           "\ncount: " + std::to_string(out.flips_used),
       "algo,stack,count,flips",
       algo + ",\"" + format_stack(s) + "\"," +
           std::to_string(out.flips_used) + ",\"" + flips + "\"",
       json{{"algo", algo},
            {"stack", format_stack(s)},
            {"flips", out.trace.flips},
            {"count", out.flips_used}});
  return kOk;
}

int run_bound(const Options& opt, const std::string& stack_text) {
  const AnyStack s = parse_stack(stack_text);
  int pot = 0, greedy = 0;
  bool greedy_exact = false;
  if (const auto* b = std::get_if<BurntStack>(&s)) {
    pot = lower_bound_potential(*b);
    const LowerBound lb = greedy_lb_burnt(*b);
    greedy = lb.bound;
    greedy_exact = lb.exact;
  } else if (const auto* u = std::get_if<UnburntStack>(&s)) {
    const LowerBound lb = greedy_lb_unburnt(*u);
    greedy = lb.bound;
    greedy_exact = lb.exact;
  } else {
    throw std::invalid_argument("bound needs a burnt or unburnt stack");
  }
  const int bound = std::max(pot, greedy);
  emit(opt, std::to_string(bound), "stack,potential,greedy,exact,bound",
       "\"" + format_stack(s) + "\"," + std::to_string(pot) + "," +
           std::to_string(greedy) + "," + std::to_string(greedy_exact) +
           "," + std::to_string(bound),
       json{{"stack", format_stack(s)},
            {"potential_bound", pot},
            {"greedy_bound", greedy},
            {"greedy_exact", greedy_exact},
            {"bound", bound}});
  return kOk;
}

int run_exact(const Options& opt, const std::string& stack_text,
              int endgame_size) {
  const AnyStack s = parse_stack(stack_text);
  SolverConfig cfg;
  cfg.endgame_table_size = endgame_size;
  int d;
  if (const auto* b = std::get_if<BurntStack>(&s))
    d = astar_distance(*b, cfg);
  else if (const auto* u = std::get_if<UnburntStack>(&s))
    d = astar_distance(*u, cfg);
  else
    throw std::invalid_argument("exact needs a burnt or unburnt stack");
  emit(opt, "distance: " + std::to_string(d), "stack,distance",
       "\"" + format_stack(s) + "\"," + std::to_string(d),
       json{{"stack", format_stack(s)}, {"distance", d}});
  return kOk;
}

int run_bfs(const Options& opt, int n, const std::string& variant_name,
            const std::string& out_path) {
  const Variant v = parse_variant(variant_name);
  const DistanceTable t = bfs_distances(n, v);
  if (!out_path.empty()) t.save(out_path);
  const auto hist = t.histogram();
  std::string csv, text;
  json rows = json::array();
  for (std::size_t d = 0; d < hist.size(); ++d) {
    csv += std::to_string(n) + "," + variant_name + "," + std::to_string(d) +
           "," + std::to_string(hist[d]) + "\n";
    text += "distance " + std::to_string(d) + ": " +
            std::to_string(hist[d]) + "\n";
    rows.push_back({{"distance", d}, {"count", hist[d]}});
  }
  text += "max: " + std::to_string(t.max_distance());
  if (!csv.empty()) csv.pop_back();
  emit(opt, text, "n,variant,distance,count", csv,
       json{{"n", n},
            {"variant", variant_name},
            {"max", t.max_distance()},
            {"histogram", rows}});
  return kOk;
}

int run_candidates(const Options& opt, int n, int m,
                   const std::string& variant_name, bool solve) {
  const Variant v = parse_variant(variant_name);
  if (n < 2) throw std::invalid_argument("candidates need n >= 2");
  const DistanceTable prev = bfs_distances(n - 1, v);
  const CandidateSet cand = v == Variant::Burnt
                                ? candidate_set_burnt(prev, m)
                                : candidate_set_unburnt(prev, m);
  if (!solve) {
    emit(opt,
         "candidates: " + std::to_string(cand.stacks.size()) +
             "\nm_min: " + std::to_string(m),
         "n,variant,m,candidates",
         std::to_string(n) + "," + variant_name + "," + std::to_string(m) +
             "," + std::to_string(cand.stacks.size()),
         json{{"n", n},
              {"variant", variant_name},
              {"m", m},
              {"candidates", cand.stacks.size()}});
    return kOk;
  }
  std::map<int, std::uint64_t> hist;
  for (std::uint64_t r : cand.stacks) {
    const int d = v == Variant::Burnt
                      ? astar_distance(unrank_burnt(r, n))
                      : astar_distance(unrank_unburnt(r, n));
    ++hist[d];
  }
  std::string csv, text;
  json rows = json::array();
  for (const auto& [d, c] : hist) {
    csv += std::to_string(n) + "," + variant_name + "," + std::to_string(d) +
           "," + std::to_string(c) + "\n";
    text += "distance " + std::to_string(d) + ": " + std::to_string(c) + "\n";
    rows.push_back({{"distance", d}, {"count", c}});
  }
  if (!csv.empty()) csv.pop_back();
  if (!text.empty()) text.pop_back();
  emit(opt, text, "n,variant,distance,count", csv,
       json{{"n", n},
            {"variant", variant_name},
            {"m", m},
            {"histogram", rows}});
  return kOk;
}

int run_bench(const Options& opt, const std::string& algo, int n,
              std::uint64_t samples, bool exhaustive) {
  const ExperimentReport r = average_flips(algorithm_from_name(algo), n,
                                           exhaustive, samples, opt.seed,
                                           opt.threads);
  char text[512];
  std::snprintf(text, sizeof text,
                "algo: %s\nn: %d\nsamples: %llu\nmean: %.6f\nstd: %.6f\n"
                "min: %g\nmax: %g",
                r.algorithm.c_str(), r.n,
                static_cast<unsigned long long>(r.sample_count), r.mean,
                r.stddev, r.min, r.max);
  json j{{"algo", r.algorithm}, {"n", r.n},
         {"samples", r.sample_count}, {"seed", r.seed},
         {"mean", r.mean},           {"std", r.stddev},
         {"min", r.min},             {"max", r.max},
         {"bound_lb", r.bound_lb}};
  if (!std::isnan(r.bound_ub)) j["bound_ub"] = r.bound_ub;
  emit(opt, text, report_csv_header(), report_csv(r), j);
  return kOk;
}

int run_verify(const Options& opt, const std::string& stack_text,
               const std::string& flips_text) {
  const AnyStack s = parse_stack(stack_text);
  const std::vector<int> flips = parse_flip_list(flips_text);
  const bool ok = verify_trace(s, flips);
  emit(opt, std::string("sorted: ") + (ok ? "true" : "false"),
       "stack,flips,sorted",
       "\"" + format_stack(s) + "\",\"" + join_ints(flips) + "\"," +
           (ok ? "true" : "false"),
       json{{"stack", format_stack(s)}, {"flips", flips}, {"sorted", ok}});
  return ok ? kOk : kDomainError;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Pancake sorting by prefix reversals"};
  app.require_subcommand(1);

  Options opt;
  app.add_option("--format", opt.format, "Output format")
      ->check(CLI::IsMember({"text", "csv", "json"}))
      ->capture_default_str();
  app.add_option("--seed", opt.seed, "Random seed")->capture_default_str();
  app.add_option("--threads", opt.threads, "Worker threads")
      ->check(CLI::PositiveNumber)
      ->capture_default_str();

  std::string algo = "burnt-avg", stack_text, variant = "burnt";
  std::string out_path, flips_text;
  int n = 0, m = 0, endgame_size = 7;
  std::uint64_t samples = 1000;
  bool exhaustive = false, solve = false;

  auto* sort_cmd = app.add_subcommand("sort", "Run a sorting algorithm");
  sort_cmd->add_option("--algo", algo, "burnt-avg, unburnt-rand or greedy")
      ->required();
  sort_cmd->add_option("--stack", stack_text, "Stack text or shorthand")
      ->required();

  auto* bound_cmd = app.add_subcommand("bound", "Lower bound on distance");
  bound_cmd->add_option("--stack", stack_text)->required();

  auto* exact_cmd = app.add_subcommand("exact", "Exact distance by A*");
  exact_cmd->add_option("--stack", stack_text)->required();
  exact_cmd->add_option("--endgame-size", endgame_size,
                        "Endgame table size (<= 9)");

  auto* bfs_cmd = app.add_subcommand("bfs", "Full distance table by BFS");
  bfs_cmd->add_option("--n", n)->required()->check(CLI::PositiveNumber);
  bfs_cmd->add_option("--variant", variant)
      ->check(CLI::IsMember({"burnt", "unburnt"}));
  bfs_cmd->add_option("--out", out_path, "Write the table to this file");

  auto* cand_cmd = app.add_subcommand("candidates", "Candidate-set pipeline");
  cand_cmd->add_option("--n", n)->required()->check(CLI::PositiveNumber);
  cand_cmd->add_option("--m", m, "Target distance")->required();
  cand_cmd->add_option("--variant", variant)
      ->check(CLI::IsMember({"burnt", "unburnt"}));
  cand_cmd->add_flag("--solve", solve, "Solve candidates and print histogram");

  auto* bench_cmd = app.add_subcommand("bench", "Average-flip measurements");
  bench_cmd->add_option("--algo", algo)->required();
  bench_cmd->add_option("--n", n)->required()->check(CLI::PositiveNumber);
  bench_cmd->add_option("--samples", samples);
  bench_cmd->add_flag("--exhaustive", exhaustive);

  auto* verify_cmd = app.add_subcommand("verify", "Replay a flip sequence");
  verify_cmd->add_option("--stack", stack_text)->required();
  verify_cmd->add_option("--flips", flips_text, "Comma-separated flip sizes")
      ->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? kOk : kUsageError;
  }

  try {
    if (sort_cmd->parsed()) return run_sort(opt, algo, stack_text);
    if (bound_cmd->parsed()) return run_bound(opt, stack_text);
    if (exact_cmd->parsed()) return run_exact(opt, stack_text, endgame_size);
    if (bfs_cmd->parsed()) return run_bfs(opt, n, variant, out_path);
    if (cand_cmd->parsed()) return run_candidates(opt, n, m, variant, solve);
    if (bench_cmd->parsed())
      return run_bench(opt, algo, n, samples, exhaustive);
    if (verify_cmd->parsed()) return run_verify(opt, stack_text, flips_text);
  } catch (const ResourceLimitError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kResourceLimit;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kDomainError;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kDomainError;
  }
  return kUsageError;
}
