#pragma once

#include <cstdint>
#include <string>

#include "pancake/ranking.hpp"
#include "pancake/stack.hpp"

namespace pancake {

struct ResourceLimitError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Exact flip distances for every stack of size n, indexed by rank.
struct DistanceTable {
  int n = 0;
  Variant variant = Variant::Burnt;
  std::vector<std::uint8_t> dist;  // 255 = unset

  static constexpr std::uint8_t kUnset = 255;

  int max_distance() const;
  std::vector<std::uint64_t> histogram() const;  // index = distance

  void save(const std::string& path) const;
  static DistanceTable load(const std::string& path);
};

// Full breadth-first search from the sorted stack (unburnt flips >= 2,
// burnt flips >= 1). mem_limit_mb == 0 reads PANCAKE_MEM_LIMIT_MB from
// the environment (unset = no cap). Throws ResourceLimitError when the
// table would not fit.
DistanceTable bfs_distances(int n, Variant variant,
                            std::size_t mem_limit_mb = 0);

struct LowerBound {
  int bound = 0;
  bool exact = false;      // bound equals the exact distance
  bool truncated = false;  // search hit the node limit
};

// Explores all flip sequences creating an adjacency in every flip
// (pancake n at the bottom counts as an adjacency). If one sorts the
// stack its length is the distance; otherwise missing adjacencies + 1
// is a lower bound.
LowerBound greedy_lb_unburnt(const UnburntStack& s);

// Burnt counterpart allowing at most two non-creating flips; sequences
// found of length <= missing + 3 are exact, otherwise missing + 3 is a
// lower bound (missing + 1 when the node limit truncated the search).
LowerBound greedy_lb_burnt(const BurntStack& s,
                           std::size_t node_limit = 1'000'000);

struct SolverConfig {
  int endgame_table_size = 7;  // at most 9
  bool use_potential_bound = true;
  bool use_greedy_bound = true;
  std::size_t node_limit = 50'000'000;
};

// Exact minimal flip count by A* search. Burnt stacks are contracted at
// every expansion (contraction preserves distance) and resolved by a
// precomputed table once small enough; the heuristic is the maximum of
// the potential and greedy lower bounds.
int astar_distance(const BurntStack& s, const SolverConfig& config = {});
int astar_distance(const UnburntStack& s, const SolverConfig& config = {});

// Superset of all stacks of size n at distance >= m, generated from the
// distance-classified stacks of size n - 1.
struct CandidateSet {
  int n = 0;
  Variant variant = Variant::Burnt;
  int m_min = 0;
  std::vector<std::uint64_t> stacks;  // sorted ranks, deduplicated
};

// Appends pancake n at the bottom of each source stack at distance
// >= m - 2, flips the whole stack, then tries every flip; the results
// and both intermediates are collected.
CandidateSet candidate_set_unburnt(const DistanceTable& prev, int m);

// Expands each source stack at every position, then applies all flip
// sequences of length <= 2, keeping intermediates; -I_n is always
// included.
CandidateSet candidate_set_burnt(const DistanceTable& prev, int m);

enum class MaxFlipsMethod { Auto, Bfs, Candidates };

struct MaxFlipsResult {
  int value = 0;
  std::vector<std::uint64_t> witnesses;  // ranks of stacks at value
};

// f(n) (unburnt) or g(n) (burnt) with all witness stacks, either by a
// full BFS or by candidate generation from size n - 1 plus A*.
MaxFlipsResult max_flips(int n, Variant variant,
                         const SolverConfig& config = {},
                         MaxFlipsMethod method = MaxFlipsMethod::Auto);

// True iff replaying the flips from the stack yields the sorted stack.
// Throws std::invalid_argument on out-of-range flip sizes.
bool verify_trace(const AnyStack& stack, const std::vector<int>& flips);

}  // namespace pancake
