#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <cstdio>
#include <filesystem>

#include "doctest.h"
#include "pancake/exact.hpp"
#include "pancake/potential.hpp"
#include "pancake/text_io.hpp"

using namespace pancake;

namespace {

const std::vector<int> kWitness = {19, 14, 7, 4,  10, 18, 6,  4, 10, 19,
                                   14, 4, 9, 11, 8,  18, 8,  11, 9, 4,
                                   14, 19, 10, 4, 6,  18, 10, 4, 7, 14};

// Signed inverse permutation: maps sorted to sorted and preserves flip
// distance.
BurntStack signed_inverse(const BurntStack& s) {
  BurntStack r;
  r.entries.assign(s.entries.size(), 0);
  for (int p = 0; p < s.size(); ++p) {
    const int e = s.entries[p];
    r.entries[std::abs(e) - 1] = e > 0 ? p + 1 : -(p + 1);
  }
  return r;
}

}  // namespace

TEST_CASE("bfs maxima match the known tables") {
  const int f[] = {0, 0, 1, 3, 4, 5, 7, 8};  // f(n), n = 2..7 used below
  for (int n = 2; n <= 7; ++n)
    CHECK(bfs_distances(n, Variant::Unburnt).max_distance() == f[n]);
  const int g[] = {0, 0, 4, 6, 8, 10, 12};  // g(n), n = 2..6
  for (int n = 2; n <= 6; ++n)
    CHECK(bfs_distances(n, Variant::Burnt).max_distance() == g[n]);
  const DistanceTable t1 = bfs_distances(1, Variant::Burnt);
  CHECK(t1.dist[rank(BurntStack{{1}})] == 0);
  CHECK(t1.dist[rank(BurntStack{{-1}})] == 1);
  CHECK_THROWS_AS(bfs_distances(12, Variant::Unburnt), ResourceLimitError);
}

TEST_CASE("histogram conservation and save/load") {
  for (const Variant v : {Variant::Burnt, Variant::Unburnt}) {
    const DistanceTable t = bfs_distances(5, v);
    const auto h = t.histogram();
    std::uint64_t total = 0;
    for (std::uint64_t c : h) total += c;
    CHECK(total == stack_count(5, v));
    CHECK(h[0] == 1);

    const std::string path =
        (std::filesystem::temp_directory_path() / "pancake_table_test.bin")
            .string();
    t.save(path);
    const DistanceTable back = DistanceTable::load(path);
    CHECK(back.n == t.n);
    CHECK(back.variant == t.variant);
    CHECK(back.dist == t.dist);
    std::filesystem::remove(path);
  }
}

TEST_CASE("g(-I_n) read from full tables") {
  const int want[] = {0, 1, 4, 6, 8, 10, 12};
  for (int n = 1; n <= 6; ++n) {
    const DistanceTable t = bfs_distances(n, Variant::Burnt);
    CHECK(t.dist[rank(make_special(SpecialKind::NegIdentity, n))] == want[n]);
  }
}

TEST_CASE("greedy lower bounds") {
  CHECK(greedy_lb_unburnt(UnburntStack{{1, 2, 3, 4}}).bound == 0);
  CHECK(greedy_lb_unburnt(UnburntStack{{1, 2, 3, 4}}).exact);
  CHECK(greedy_lb_burnt(make_special(SpecialKind::Identity, 5)).bound == 0);
  CHECK(greedy_lb_burnt(make_special(SpecialKind::Identity, 5)).exact);

  const DistanceTable oracle = bfs_distances(5, Variant::Burnt);
  const LowerBound neg5 =
      greedy_lb_burnt(make_special(SpecialKind::NegIdentity, 5));
  CHECK(neg5.bound <= 10);
  CHECK(neg5.bound <=
        oracle.dist[rank(make_special(SpecialKind::NegIdentity, 5))]);

  for (int n = 1; n <= 5; ++n) {
    const DistanceTable t = bfs_distances(n, Variant::Burnt);
    for (std::uint64_t r = 0; r < t.dist.size(); ++r) {
      const LowerBound lb = greedy_lb_burnt(unrank_burnt(r, n));
      CHECK(lb.bound <= t.dist[r]);
      if (lb.exact) CHECK(lb.bound == t.dist[r]);
      CHECK_FALSE(lb.truncated);
    }
  }
  for (int n = 1; n <= 7; ++n) {
    const DistanceTable t = bfs_distances(n, Variant::Unburnt);
    for (std::uint64_t r = 0; r < t.dist.size(); ++r) {
      const LowerBound lb = greedy_lb_unburnt(unrank_unburnt(r, n));
      CHECK(lb.bound <= t.dist[r]);
      if (lb.exact) CHECK(lb.bound == t.dist[r]);
    }
  }
  // The (3,1,2) example: two missing pair adjacencies plus the bottom
  // condition leave a valid lower bound.
  const DistanceTable u3 = bfs_distances(3, Variant::Unburnt);
  const LowerBound lb312 = greedy_lb_unburnt(UnburntStack{{3, 1, 2}});
  CHECK(lb312.bound <= u3.dist[rank(UnburntStack{{3, 1, 2}})]);
}

TEST_CASE("astar equals bfs on exhaustive ranges") {
  for (int n = 1; n <= 5; ++n) {
    const DistanceTable t = bfs_distances(n, Variant::Burnt);
    for (std::uint64_t r = 0; r < t.dist.size(); ++r)
      CHECK(astar_distance(unrank_burnt(r, n)) == t.dist[r]);
  }
  for (int n = 1; n <= 6; ++n) {
    const DistanceTable t = bfs_distances(n, Variant::Unburnt);
    for (std::uint64_t r = 0; r < t.dist.size(); ++r)
      CHECK(astar_distance(unrank_unburnt(r, n)) == t.dist[r]);
  }
  SolverConfig bad;
  bad.endgame_table_size = 10;
  CHECK_THROWS_AS(astar_distance(BurntStack{{-1}}, bad),
                  std::invalid_argument);
}

TEST_CASE("distance invariant under the signed inverse") {
  for (int n = 2; n <= 5; ++n) {
    const DistanceTable t = bfs_distances(n, Variant::Burnt);
    for (std::uint64_t r = 0; r < t.dist.size(); ++r) {
      const BurntStack s = unrank_burnt(r, n);
      CHECK(t.dist[rank(signed_inverse(s))] == t.dist[r]);
    }
  }
}

TEST_CASE("candidate sets") {
  for (const Variant v : {Variant::Burnt, Variant::Unburnt}) {
    const int n = 5;
    const DistanceTable full = bfs_distances(n, v);
    const DistanceTable prev = bfs_distances(n - 1, v);
    const int m = prev.max_distance();
    const CandidateSet cand = v == Variant::Burnt
                                  ? candidate_set_burnt(prev, m)
                                  : candidate_set_unburnt(prev, m);
    CHECK(cand.n == n);
    CHECK(cand.m_min == m);
    CHECK(std::is_sorted(cand.stacks.begin(), cand.stacks.end()));
    CHECK(std::adjacent_find(cand.stacks.begin(), cand.stacks.end()) ==
          cand.stacks.end());
    std::vector<bool> in(full.dist.size(), false);
    for (std::uint64_t r : cand.stacks) in[r] = true;
    for (std::uint64_t r = 0; r < full.dist.size(); ++r)
      if (full.dist[r] >= full.max_distance()) CHECK(in[r]);
    if (v == Variant::Burnt) {
      const std::uint64_t neg =
          rank(make_special(SpecialKind::NegIdentity, n));
      CHECK(std::binary_search(cand.stacks.begin(), cand.stacks.end(), neg));
    }
  }
  // A floor above every source distance leaves nothing but -I_n (burnt)
  // or nothing at all (unburnt).
  const DistanceTable prev = bfs_distances(4, Variant::Unburnt);
  CHECK(candidate_set_unburnt(prev, prev.max_distance() + 3).stacks.empty());
  const DistanceTable prevb = bfs_distances(4, Variant::Burnt);
  CHECK(candidate_set_burnt(prevb, prevb.max_distance() + 3).stacks.size() ==
        1);
}

TEST_CASE("max flips by candidates matches bfs") {
  for (const Variant v : {Variant::Burnt, Variant::Unburnt}) {
    const MaxFlipsResult by_bfs = max_flips(5, v, {}, MaxFlipsMethod::Bfs);
    const MaxFlipsResult by_cand =
        max_flips(5, v, {}, MaxFlipsMethod::Candidates);
    CHECK(by_bfs.value == by_cand.value);
    CHECK(by_bfs.witnesses == by_cand.witnesses);
  }
  CHECK(max_flips(7, Variant::Unburnt).value == 8);
}

TEST_CASE("witness sequence for -I_19") {
  const AnyStack s = parse_stack("-I19");
  CHECK(verify_trace(s, kWitness));
  CHECK(kWitness.size() == 30);
  CHECK(verify_trace(s, {}) == false);
  CHECK(verify_trace(AnyStack{make_special(SpecialKind::Identity, 4)}, {}));
  CHECK_THROWS_AS(verify_trace(s, {20}), std::invalid_argument);
  CHECK_THROWS_AS(verify_trace(s, {0}), std::invalid_argument);
  std::vector<int> truncated = kWitness;
  truncated.pop_back();
  CHECK_FALSE(verify_trace(s, truncated));
}
