#include "pancake/experiments.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <functional>
#include <limits>
#include <numeric>
#include <thread>

#include "pancake/potential.hpp"
#include "pancake/sorters.hpp"

namespace pancake {

namespace {

const double kNaN = std::numeric_limits<double>::quiet_NaN();

struct Moments {
  double mean = 0, stddev = 0, min = 0, max = 0;
};

Moments moments(const std::vector<double>& xs) {
  Moments m;
  if (xs.empty()) return m;
  m.min = *std::min_element(xs.begin(), xs.end());
  m.max = *std::max_element(xs.begin(), xs.end());
  m.mean = std::accumulate(xs.begin(), xs.end(), 0.0) / xs.size();
  double ss = 0;
  for (double x : xs) ss += (x - m.mean) * (x - m.mean);
  m.stddev = xs.size() > 1 ? std::sqrt(ss / (xs.size() - 1)) : 0.0;
  return m;
}

void for_each_index(std::uint64_t count, int threads,
                    const std::function<void(std::uint64_t)>& fn) {
  if (threads <= 1) {
    for (std::uint64_t i = 0; i < count; ++i) fn(i);
    return;
  }
  std::vector<std::thread> pool;
  const std::uint64_t chunk = (count + threads - 1) / threads;
  for (int t = 0; t < threads; ++t) {
    const std::uint64_t lo = t * chunk;
    const std::uint64_t hi = std::min(count, lo + chunk);
    if (lo >= hi) break;
    pool.emplace_back([lo, hi, &fn] {
      for (std::uint64_t i = lo; i < hi; ++i) fn(i);
    });
  }
  for (auto& th : pool) th.join();
}

int bounded(std::mt19937_64& rng, int inclusive_max) {
  return static_cast<int>(
      std::uniform_int_distribution<int>(0, inclusive_max)(rng));
}

}  // namespace

Algorithm algorithm_from_name(const std::string& name) {
  if (name == "burnt-avg") return Algorithm::BurntAverage;
  if (name == "unburnt-rand") return Algorithm::UnburntRandomized;
  if (name == "greedy") return Algorithm::GreedyLookahead;
  throw std::invalid_argument("unknown algorithm: " + name);
}

std::string algorithm_name(Algorithm a) {
  switch (a) {
    case Algorithm::BurntAverage:
      return "burnt-avg";
    case Algorithm::UnburntRandomized:
      return "unburnt-rand";
    case Algorithm::GreedyLookahead:
      return "greedy";
  }
  throw std::invalid_argument("bad algorithm id");
}

UnburntStack random_unburnt_stack(int n, std::mt19937_64& rng) {
  if (n < 1) throw std::invalid_argument("stack size must be at least 1");
  UnburntStack s;
  s.entries.resize(n);
  std::iota(s.entries.begin(), s.entries.end(), 1);
  for (int i = n - 1; i > 0; --i)
    std::swap(s.entries[i], s.entries[bounded(rng, i)]);
  return s;
}

BurntStack random_burnt_stack(int n, std::mt19937_64& rng) {
  const UnburntStack p = random_unburnt_stack(n, rng);
  BurntStack s;
  s.entries.resize(n);
  for (int i = 0; i < n; ++i)
    s.entries[i] = bounded(rng, 1) ? -p.entries[i] : p.entries[i];
  return s;
}

std::mt19937_64 sample_rng(std::uint64_t seed, std::uint64_t index) {
  std::seed_seq seq{static_cast<std::uint32_t>(seed),
                    static_cast<std::uint32_t>(seed >> 32),
                    static_cast<std::uint32_t>(index),
                    static_cast<std::uint32_t>(index >> 32)};
  return std::mt19937_64(seq);
}

ExperimentReport average_flips(Algorithm algo, int n, bool exhaustive,
                               std::uint64_t samples, std::uint64_t seed,
                               int threads) {
  if (n < 1) throw std::invalid_argument("stack size must be at least 1");
  const bool burnt = algo != Algorithm::UnburntRandomized;
  if (exhaustive && n > (burnt ? 7 : 8))
    throw std::invalid_argument("stack size too large for exhaustive mode");
  if (!exhaustive && samples == 0)
    throw std::invalid_argument("sample count must be positive");

  const std::uint64_t count =
      exhaustive ? stack_count(n, burnt ? Variant::Burnt : Variant::Unburnt)
                 : samples;
  std::vector<double> flips(count);
  for_each_index(count, threads, [&](std::uint64_t i) {
    SortOutcome out;
    switch (algo) {
      case Algorithm::BurntAverage: {
        auto rng = sample_rng(seed, i);
        const BurntStack s =
            exhaustive ? unrank_burnt(i, n) : random_burnt_stack(n, rng);
        out = sort_burnt_average(s);
        break;
      }
      case Algorithm::GreedyLookahead: {
        auto rng = sample_rng(seed, i);
        const BurntStack s =
            exhaustive ? unrank_burnt(i, n) : random_burnt_stack(n, rng);
        out = sort_greedy_lookahead(s);
        break;
      }
      case Algorithm::UnburntRandomized: {
        auto rng = sample_rng(seed, i);
        const UnburntStack s =
            exhaustive ? unrank_unburnt(i, n) : random_unburnt_stack(n, rng);
        out = sort_unburnt_randomized(s, rng());
        break;
      }
    }
    if (!out.trace.ends_sorted())
      throw std::logic_error("sorter produced an unsorted trace");
    flips[i] = static_cast<double>(out.flips_used);
  });

  const Moments m = moments(flips);
  ExperimentReport r;
  r.algorithm = algorithm_name(algo);
  r.n = n;
  r.sample_count = count;
  r.seed = exhaustive ? 0 : seed;
  r.exhaustive = exhaustive;
  r.mean = m.mean;
  r.stddev = m.stddev;
  r.min = m.min;
  r.max = m.max;
  const ReferenceBounds b = reference_bounds(std::max(n, 2));
  r.bound_lb = n - 2;
  switch (algo) {
    case Algorithm::BurntAverage:
      r.bound_ub = b.burnt_avg_ub;
      break;
    case Algorithm::UnburntRandomized:
      r.bound_ub = b.unburnt_avg_ub;
      break;
    case Algorithm::GreedyLookahead:
      r.bound_ub = kNaN;  // no proved bound for the greedy heuristic
      break;
  }
  return r;
}

namespace {

// Averages the flip count over all coin outcomes by branching whenever
// the sorter consumes a coin beyond the fixed prefix.
double coin_mean(const UnburntStack& s, std::vector<int>& prefix) {
  std::size_t used = 0;
  bool past_prefix = false;
  const auto coin = [&]() -> int {
    if (used < prefix.size()) return prefix[used++];
    ++used;
    past_prefix = true;
    return 0;
  };
  const SortOutcome out = sort_unburnt_with_coins(s, coin);
  if (!past_prefix) return static_cast<double>(out.flips_used);
  prefix.push_back(0);
  const double zero = coin_mean(s, prefix);
  prefix.back() = 1;
  const double one = coin_mean(s, prefix);
  prefix.pop_back();
  return (zero + one) / 2;
}

}  // namespace

double exhaustive_unburnt_coin_mean(int n) {
  if (n < 1 || n > 8)
    throw std::invalid_argument("size out of range for exact coin averaging");
  const std::uint64_t count = stack_count(n, Variant::Unburnt);
  double total = 0;
  for (std::uint64_t i = 0; i < count; ++i) {
    std::vector<int> prefix;
    total += coin_mean(unrank_unburnt(i, n), prefix);
  }
  return total / static_cast<double>(count);
}

AdjacencyStats adjacency_stats(int n, Variant variant, std::uint64_t samples,
                               std::uint64_t seed) {
  if (n < 2) throw std::invalid_argument("stack size must be at least 2");
  AdjacencyStats st;
  // Burnt counts pair adjacencies only; unburnt also counts pancake n
  // at the bottom, matching the closed forms.
  const auto count_burnt = [](const BurntStack& s) {
    int a = 0;
    for (int p = 1; p < s.size(); ++p)
      if (s.entries[p] == s.entries[p - 1] + 1) ++a;
    return a;
  };
  const auto count_unburnt = [](const UnburntStack& s) {
    int a = s.entries[s.size() - 1] == s.size() ? 1 : 0;
    for (int p = 1; p < s.size(); ++p)
      if (std::abs(s.entries[p] - s.entries[p - 1]) == 1) ++a;
    return a;
  };
  st.closed_form = variant == Variant::Burnt
                       ? (n - 1) / (2.0 * n)
                       : 1.0 / n + 2.0 * (n - 1) / n;

  std::vector<double> xs;
  if (samples == 0) {
    const std::uint64_t count = stack_count(n, variant);
    xs.reserve(count);
    for (std::uint64_t i = 0; i < count; ++i)
      xs.push_back(variant == Variant::Burnt
                       ? count_burnt(unrank_burnt(i, n))
                       : count_unburnt(unrank_unburnt(i, n)));
  } else {
    xs.reserve(samples);
    for (std::uint64_t i = 0; i < samples; ++i) {
      auto rng = sample_rng(seed, i);
      xs.push_back(variant == Variant::Burnt
                       ? count_burnt(random_burnt_stack(n, rng))
                       : count_unburnt(random_unburnt_stack(n, rng)));
    }
  }
  const Moments m = moments(xs);
  st.empirical_mean = m.mean;
  st.samples = xs.size();
  st.std_error = samples == 0 ? 0.0 : m.stddev / std::sqrt(double(xs.size()));
  return st;
}

ReferenceBounds reference_bounds(int n, int b) {
  if (n < 2) throw std::invalid_argument("stack size must be at least 2");
  if (b < 0 || b > n) throw std::invalid_argument("burnt count out of range");
  ReferenceBounds r;
  if (n >= 16) r.burnt_avg_lb = n + n / (16.0 * std::log2(double(n))) - 1.5;
  r.burnt_avg_ub = 7.0 * n / 4 + 5;
  r.av_plus = 17.0 * n / 12 + 7.0 * b / 12 -
              (double(n) - b + 1) * b / (6.0 * n) + 9;
  r.unburnt_avg_ub = 17.0 * n / 12 + 9;
  r.unburnt_avg_lb = n - 2;
  r.neg_identity_lb = 3 * (n + 1) / 2;
  return r;
}

std::string report_csv_header() {
  return "algo,n,samples,seed,mean,std,min,max,bound_ub,bound_lb";
}

std::string report_csv(const ExperimentReport& r) {
  char buf[256];
  const auto num = [](double x) {
    if (std::isnan(x)) return std::string();
    char b[32];
    std::snprintf(b, sizeof b, "%.6f", x);
    return std::string(b);
  };
  std::snprintf(buf, sizeof buf, "%s,%d,%llu,%llu,", r.algorithm.c_str(),
                r.n, static_cast<unsigned long long>(r.sample_count),
                static_cast<unsigned long long>(r.seed));
  return std::string(buf) + num(r.mean) + "," + num(r.stddev) + "," +
         num(r.min) + "," + num(r.max) + "," + num(r.bound_ub) + "," +
         num(r.bound_lb);
}

}  // namespace pancake
