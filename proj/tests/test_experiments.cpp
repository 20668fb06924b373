#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <cmath>
#include <map>

#include "doctest.h"
#include "pancake/experiments.hpp"
#include "pancake/text_io.hpp"

using namespace pancake;

TEST_CASE("random stacks are deterministic per (seed, index)") {
  auto a = sample_rng(42, 7);
  auto b = sample_rng(42, 7);
  CHECK(random_burnt_stack(10, a) == random_burnt_stack(10, b));
  auto c = sample_rng(42, 8);
  CHECK(random_burnt_stack(10, a) != random_burnt_stack(10, c));
}

TEST_CASE("burnt n=1 coin is fair enough") {
  int neg = 0;
  for (int i = 0; i < 10000; ++i) {
    auto rng = sample_rng(0, i);
    const BurntStack s = random_burnt_stack(1, rng);
    REQUIRE(std::abs(s.entries[0]) == 1);
    if (s.entries[0] < 0) ++neg;
  }
  CHECK(neg > 4600);
  CHECK(neg < 5400);
}

TEST_CASE("chi-square uniformity over burnt n=3") {
  std::map<std::string, int> counts;
  const int samples = 1000000;
  for (int i = 0; i < samples; ++i) {
    auto rng = sample_rng(1, i);
    counts[format_stack(random_burnt_stack(3, rng))]++;
  }
  CHECK(counts.size() == 48);
  const double expected = samples / 48.0;
  double chi2 = 0;
  for (const auto& [k, c] : counts)
    chi2 += (c - expected) * (c - expected) / expected;
  // 47 degrees of freedom; critical value at p = 0.001 is ~84.0.
  CHECK(chi2 < 84.0);
}

TEST_CASE("average flips reports") {
  const ExperimentReport r =
      average_flips(Algorithm::BurntAverage, 4, true, 0, 0);
  CHECK(r.sample_count == 384);
  CHECK(r.mean <= 12.0);
  CHECK(r.exhaustive);

  const ExperimentReport s =
      average_flips(Algorithm::UnburntRandomized, 12, false, 20000, 0, 2);
  CHECK(s.mean <= 26.0);

  CHECK_THROWS_AS(average_flips(Algorithm::BurntAverage, 9, true, 0, 0),
                  std::invalid_argument);
  CHECK_THROWS_AS(average_flips(Algorithm::BurntAverage, 9, false, 0, 0),
                  std::invalid_argument);
}

TEST_CASE("reports are reproducible and thread-invariant") {
  const ExperimentReport a =
      average_flips(Algorithm::GreedyLookahead, 15, false, 2000, 9, 1);
  const ExperimentReport b =
      average_flips(Algorithm::GreedyLookahead, 15, false, 2000, 9, 4);
  CHECK(report_csv(a) == report_csv(b));
  CHECK(report_csv_header() ==
        "algo,n,samples,seed,mean,std,min,max,bound_ub,bound_lb");
}

TEST_CASE("adjacency statistics") {
  const AdjacencyStats b20 = adjacency_stats(20, Variant::Burnt, 200000, 0);
  CHECK(b20.closed_form == doctest::Approx(0.475));
  CHECK(std::abs(b20.empirical_mean - b20.closed_form) <=
        3 * b20.std_error);

  const AdjacencyStats u10 = adjacency_stats(10, Variant::Unburnt, 1000, 0);
  CHECK(u10.closed_form == doctest::Approx(1.9));

  const AdjacencyStats b2 = adjacency_stats(2, Variant::Burnt, 0, 0);
  CHECK(b2.empirical_mean == doctest::Approx(0.25));
  CHECK(b2.closed_form == doctest::Approx(0.25));
  CHECK(b2.samples == 8);
}

TEST_CASE("reference bounds") {
  const ReferenceBounds b16 = reference_bounds(16);
  REQUIRE(b16.burnt_avg_lb.has_value());
  CHECK(*b16.burnt_avg_lb == doctest::Approx(14.75));
  CHECK_FALSE(reference_bounds(12).burnt_avg_lb.has_value());
  CHECK(reference_bounds(12).unburnt_avg_ub == doctest::Approx(26.0));
  CHECK(reference_bounds(12, 0).av_plus == doctest::Approx(26.0));
  CHECK(reference_bounds(100).burnt_avg_ub == doctest::Approx(180.0));
  CHECK(reference_bounds(15).neg_identity_lb == 24);
  CHECK(reference_bounds(10).unburnt_avg_lb == doctest::Approx(8.0));
  CHECK_THROWS_AS(reference_bounds(1), std::invalid_argument);
  CHECK_THROWS_AS(reference_bounds(5, 6), std::invalid_argument);
}
