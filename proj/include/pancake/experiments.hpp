#pragma once

#include <cstdint>
#include <optional>
#include <random>
#include <string>

#include "pancake/ranking.hpp"
#include "pancake/stack.hpp"

namespace pancake {

enum class Algorithm { BurntAverage, UnburntRandomized, GreedyLookahead };

Algorithm algorithm_from_name(const std::string& name);
std::string algorithm_name(Algorithm a);

// Uniform random stacks via Fisher-Yates plus orientation bits.
BurntStack random_burnt_stack(int n, std::mt19937_64& rng);
UnburntStack random_unburnt_stack(int n, std::mt19937_64& rng);

// RNG for one sample, derived from (master seed, sample index) so that
// results do not depend on how samples are partitioned across workers.
std::mt19937_64 sample_rng(std::uint64_t seed, std::uint64_t index);

struct ExperimentReport {
  std::string algorithm;
  int n = 0;
  std::uint64_t sample_count = 0;
  std::uint64_t seed = 0;
  bool exhaustive = false;
  double mean = 0, stddev = 0, min = 0, max = 0;
  double bound_ub = 0, bound_lb = 0;  // NaN when not applicable
};

// Runs the sorter over every stack (exhaustive; burnt n <= 7, unburnt
// n <= 8) or over seeded samples; every trace is verified. Results are
// independent of the thread count.
ExperimentReport average_flips(Algorithm algo, int n, bool exhaustive,
                               std::uint64_t samples, std::uint64_t seed,
                               int threads = 1);

// Mean flips of the randomized unburnt sorter averaged exactly over all
// stacks of size n and all coin outcomes.
double exhaustive_unburnt_coin_mean(int n);

struct AdjacencyStats {
  double empirical_mean = 0;
  double closed_form = 0;
  double std_error = 0;
  std::uint64_t samples = 0;
};

// Mean adjacency count of a random stack against the closed form:
// (n-1)/(2n) burnt (pairs only), 1/n + 2(n-1)/n unburnt (pancake n at
// the bottom included). samples == 0 enumerates all stacks.
AdjacencyStats adjacency_stats(int n, Variant variant,
                               std::uint64_t samples, std::uint64_t seed);

struct ReferenceBounds {
  std::optional<double> burnt_avg_lb;  // n + n/(16 log2 n) - 3/2, n >= 16
  double burnt_avg_ub = 0;             // 7n/4 + 5
  double unburnt_avg_ub = 0;           // 17n/12 + 9
  double av_plus = 0;                  // 17n/12 + 7b/12 - (n-b+1)b/(6n) + 9
  double unburnt_avg_lb = 0;           // n - 2
  int neg_identity_lb = 0;             // floor(3(n+1)/2)
};

ReferenceBounds reference_bounds(int n, int b = 0);

// `algo,n,samples,seed,mean,std,min,max,bound_ub,bound_lb`
std::string report_csv_header();
std::string report_csv(const ExperimentReport& r);

}  // namespace pancake
