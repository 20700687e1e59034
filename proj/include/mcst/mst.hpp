#pragma once

#include <cstdint>
#include <utility>
#include <vector>

#include "mcst/graph.hpp"

namespace mcst {

// Incremental MST state for a coalition S: the tree edges T_S spanning
// S together with the root, and their total cost c(S).
struct TreeState {
    Coalition members;
    std::vector<std::pair<int, int>> tree_edges;  // (i, j) with i < j, sorted
    std::uint64_t cost = 0;
};

// MST cost of the complete graph induced on S plus the root. c(empty) = 0.
std::uint64_t mst_cost(const RootedWeightedGraph& g, const Coalition& s);

TreeState new_tree_state(const RootedWeightedGraph& g);

// Adds player i to the spanned coalition. The new MST is computed on the
// restricted edge set T_S plus the star of i into S and the root (2|S|+1
// edges), which preserves optimality.
TreeState extend(const RootedWeightedGraph& g, const TreeState& state, int i);

// In-place variant of extend; used by the hot sampling loops.
void extend_inplace(const RootedWeightedGraph& g, TreeState& state, int i);

// Entry k is c({perm[0], ..., perm[k]}), computed by repeated extension.
std::vector<std::uint64_t> permutation_cost_profile(const RootedWeightedGraph& g,
                                                    const std::vector<int>& perm);

}  // namespace mcst
