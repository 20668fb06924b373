#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <random>

#include "doctest.h"
#include "pancake/ranking.hpp"
#include "pancake/stack.hpp"
#include "pancake/structure.hpp"
#include "pancake/text_io.hpp"

using namespace pancake;

namespace {

BurntStack bs(std::vector<int> e) { return BurntStack{std::move(e)}; }

// Independent oracle: the flip that gains exactly one adjacency, by
// trying all n flips and recounting.
int count_adj(const BurntStack& s, bool cyclic) {
  int a = 0;
  for (int p = 1; p < s.size(); ++p)
    if (adjacent_at(s, p, cyclic)) ++a;
  return a;
}

std::optional<int> brute_single_flip(const BurntStack& s, bool cyclic) {
  const int base = count_adj(s, cyclic);
  std::optional<int> found;
  for (int i = 1; i <= s.size(); ++i) {
    if (count_adj(flip(s, i), cyclic) == base + 1) {
      REQUIRE_FALSE(found.has_value());  // uniqueness
      found = i;
    }
  }
  return found;
}

BurntStack random_burnt(int n, std::mt19937_64& rng) {
  std::vector<int> e(n);
  std::iota(e.begin(), e.end(), 1);
  std::shuffle(e.begin(), e.end(), rng);
  for (int& x : e)
    if (rng() & 1) x = -x;
  return bs(std::move(e));
}

}  // namespace

TEST_CASE("special stacks") {
  CHECK(make_special(SpecialKind::NegIdentity, 3) == bs({-1, -2, -3}));
  CHECK(make_special(SpecialKind::J, 3) == bs({1, -2, -3}));
  CHECK(make_special(SpecialKind::Y, 4) == bs({-1, -2, 3, -4}));
  CHECK(make_special(SpecialKind::Identity, 2) == bs({1, 2}));
  CHECK_THROWS_AS(make_special(SpecialKind::Identity, 0),
                  std::invalid_argument);
  CHECK_THROWS_AS(make_special(SpecialKind::Y, 1), std::invalid_argument);
}

TEST_CASE("flip semantics") {
  CHECK(flip(bs({-1, -2, -3}), 3) == bs({3, 2, 1}));
  CHECK(flip(bs({2, 1, -3}), 2) == bs({-1, -2, -3}));
  CHECK(flip(UnburntStack{{1, 3, 2}}, 0) == UnburntStack{{1, 3, 2}});
  CHECK(flip(UnburntStack{{1, 3, 2}}, 1) == UnburntStack{{1, 3, 2}});
  CHECK_THROWS_AS(flip(bs({1, 2}), 3), std::invalid_argument);
}

TEST_CASE("flip involution") {
  for (int n = 1; n <= 4; ++n) {
    const std::uint64_t count = stack_count(n, Variant::Burnt);
    for (std::uint64_t r = 0; r < count; ++r) {
      const BurntStack s = unrank_burnt(r, n);
      for (int i = 0; i <= n; ++i) CHECK(flip(flip(s, i), i) == s);
    }
  }
  std::mt19937_64 rng(1);
  for (int k = 0; k < 1000; ++k) {
    const BurntStack s = random_burnt(20, rng);
    const int i = static_cast<int>(rng() % 21);
    CHECK(flip(flip(s, i), i) == s);
  }
}

TEST_CASE("structure reports") {
  const auto i5 = analyze_structure(make_special(SpecialKind::Identity, 5));
  CHECK(i5.adjacency_positions.size() == 4);
  REQUIRE(i5.blocks.size() == 1);
  CHECK(i5.blocks[0] == Interval{1, 5, true});
  CHECK(i5.clans.empty());

  const auto m5 = analyze_structure(make_special(SpecialKind::NegIdentity, 5));
  CHECK(m5.adjacency_positions.empty());
  CHECK(m5.anti_adjacency_positions.size() == 4);
  REQUIRE(m5.clans.size() == 1);
  CHECK(m5.clans[0].surface);

  const auto free3 = analyze_structure(bs({2, -1, 3}));
  CHECK(free3.adjacency_positions.empty());
  CHECK(free3.anti_adjacency_positions.empty());
  CHECK(free3.free_positions == std::vector<int>{1, 2, 3});
}

TEST_CASE("blocks and clans are disjoint") {
  for (int n = 1; n <= 5; ++n) {
    const std::uint64_t count = stack_count(n, Variant::Burnt);
    for (std::uint64_t r = 0; r < count; ++r) {
      const auto rep = analyze_structure(unrank_burnt(r, n));
      std::vector<bool> in_block(n + 1, false);
      for (const auto& b : rep.blocks)
        for (int p = b.first; p <= b.last; ++p) in_block[p] = true;
      for (const auto& c : rep.clans)
        for (int p = c.first; p <= c.last; ++p) CHECK_FALSE(in_block[p]);
    }
  }
}

TEST_CASE("single flip adjacency examples") {
  CHECK(single_flip_adjacency(bs({2, -3, -1, 4})) == 2);
  CHECK_FALSE(
      single_flip_adjacency(make_special(SpecialKind::Identity, 5)));
  CHECK(single_flip_adjacency(bs({-2, 4, 3, 1})) == 2);
  CHECK(flip(bs({-2, 4, 3, 1}), 2) == bs({-4, 2, 3, 1}));
}

TEST_CASE("single flip adjacency agrees with brute force") {
  for (const bool cyclic : {false, true}) {
    for (int n = 2; n <= 5; ++n) {
      const std::uint64_t count = stack_count(n, Variant::Burnt);
      for (std::uint64_t r = 0; r < count; ++r) {
        const BurntStack s = unrank_burnt(r, n);
        CHECK(single_flip_adjacency(s, cyclic) ==
              brute_single_flip(s, cyclic));
      }
    }
    std::mt19937_64 rng(7);
    for (int k = 0; k < 20000; ++k) {
      const BurntStack s = random_burnt(12, rng);
      CHECK(single_flip_adjacency(s, cyclic) ==
            brute_single_flip(s, cyclic));
    }
  }
}

TEST_CASE("contract") {
  CHECK(contract(bs({3, 1, 2}), 2) == bs({2, 1}));
  CHECK(contract(make_special(SpecialKind::Identity, 3), 1) ==
        make_special(SpecialKind::Identity, 2));
  CHECK_THROWS_AS(contract(bs({2, -1, 3}), 1), std::invalid_argument);

  MixedStack m{{{2, Orientation::Unburnt}, {3, Orientation::Down},
                {1, Orientation::Down}}};
  const MixedStack c = contract(m, 1);
  REQUIRE(c.size() == 2);
  CHECK(c.entries[0] == MixedEntry{2, Orientation::Down});
}

TEST_CASE("mixed adjacency") {
  const auto pair = [](MixedEntry a, MixedEntry b) {
    return MixedStack{{a, b}};
  };
  CHECK(mixed_adjacent(pair({2, Orientation::Unburnt},
                            {1, Orientation::Unburnt}), 1));
  CHECK_FALSE(mixed_adjacent(pair({2, Orientation::Unburnt},
                                  {4, Orientation::Unburnt}), 1));
  CHECK(mixed_adjacent(pair({2, Orientation::Down},
                            {3, Orientation::Unburnt}), 1));
  CHECK_FALSE(mixed_adjacent(pair({2, Orientation::Down},
                                  {1, Orientation::Unburnt}), 1));
}

TEST_CASE("expand and round trip") {
  CHECK(expand(bs({1}), 1) == bs({1, 2}));
  CHECK(expand(bs({-1}), 1) == bs({-2, -1}));
  for (int n = 1; n <= 5; ++n) {
    const std::uint64_t count = stack_count(n, Variant::Burnt);
    for (std::uint64_t r = 0; r < count; ++r) {
      const BurntStack s = unrank_burnt(r, n);
      for (int p = 1; p <= n; ++p) {
        const BurntStack e = expand(s, p);
        CHECK(adjacent_at(e, p));
        CHECK(contract(e, p) == s);
      }
    }
  }
}

TEST_CASE("cyclic renumber") {
  CHECK(cyclic_renumber(bs({3, 1, 2})) == bs({2, 3, 1}));
  const BurntStack t = cyclic_renumber(bs({-5, 1, 2, 3, 4}));
  CHECK(t.entries[0] == -2);
  CHECK(cyclic_renumber(t) == t);
}

TEST_CASE("ranking") {
  CHECK(rank(make_special(SpecialKind::Identity, 3)) == 0);
  CHECK(rank(UnburntStack{{1, 2, 3}}) == 0);
  std::vector<bool> seen(48, false);
  for (std::uint64_t r = 0; r < 48; ++r) {
    const std::uint64_t back = rank(unrank_burnt(r, 3));
    CHECK_FALSE(seen[back]);
    seen[back] = true;
  }
  std::mt19937_64 rng(3);
  for (int k = 0; k < 100000; ++k) {
    const BurntStack s = random_burnt(10, rng);
    CHECK(unrank_burnt(rank(s), 10) == s);
  }
  CHECK_THROWS_AS(unrank_burnt(stack_count(3, Variant::Burnt), 3),
                  std::invalid_argument);
  CHECK_THROWS_AS(stack_count(30, Variant::Burnt), std::overflow_error);
}

TEST_CASE("parse and format") {
  CHECK(std::get<BurntStack>(parse_stack("-I4")) == bs({-1, -2, -3, -4}));
  CHECK(std::get<UnburntStack>(parse_stack("3 1 2")) ==
        UnburntStack{{3, 1, 2}});
  CHECK(format_stack(parse_stack("+2 -1 +3")) == "+2 -1 +3");
  CHECK(parse_stack(format_stack(parse_stack("+2 -1 +3"))) ==
        parse_stack("+2 -1 +3"));
  const auto m = std::get<MixedStack>(parse_stack("2u -3 1u"));
  CHECK(m.entries[0] == MixedEntry{2, Orientation::Unburnt});
  CHECK(m.entries[1] == MixedEntry{3, Orientation::Up});
  CHECK(format_stack(m) == "2u -3 1u");
  CHECK_THROWS_AS(parse_stack("1 1 2"), ParseError);
  CHECK_THROWS_AS(parse_stack("0 1"), ParseError);
  CHECK_THROWS_AS(parse_stack(""), ParseError);
  CHECK_THROWS_AS(parse_stack("I0"), ParseError);
}

TEST_CASE("trace replay") {
  FlipTrace t;
  t.start = bs({-1, -2});
  t.flips = {1, 2, 1, 2};
  CHECK(t.ends_sorted());
  t.flips.pop_back();
  CHECK_FALSE(t.ends_sorted());
}
