#pragma once

#include <cstdint>
#include <vector>

#include "mcst/graph.hpp"
#include "mcst/mst.hpp"

namespace mcst {

enum class GameKind { Cost, Saving };

// Result of repeatedly deleting null players until none remain.
struct EliminationResult {
    RootedWeightedGraph reduced;       // surviving players relabeled 1..n'
    std::vector<int> kept;             // new label k -> original label kept[k-1]
    std::vector<int> removed;          // original labels, in removal order
};

// v(S) = sum_{j in S} w(r,j) - c(S). Non-negative; v(empty) = v({i}) = 0.
std::uint64_t saving_value(const RootedWeightedGraph& g, const Coalition& s);

// True iff w(r,i) <= w(i,j) >= w(r,j) for every other player j. A null
// player contributes nothing to any coalition of the saving game. O(n).
bool is_null_player(const RootedWeightedGraph& g, int i);

// 0-1 graphs only: true iff some j gives a weight triple
// (w(r,i), w(i,j), w(r,j)) in {(1,0,0), (1,0,1), (0,0,1)}.
// Equals the negation of is_null_player on 0-1 graphs.
bool is_non_null_simple(const RootedWeightedGraph& g, int i);

EliminationResult eliminate_null_players(const RootedWeightedGraph& g);

// Dummy in the cost game coincides with null in the saving game.
bool is_dummy_player_cost(const RootedWeightedGraph& g, int i);

}  // namespace mcst
