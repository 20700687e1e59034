#include "mcst/game.hpp"

#include <numeric>
#include <stdexcept>

namespace mcst {

std::uint64_t saving_value(const RootedWeightedGraph& g, const Coalition& s) {
    std::uint64_t star = 0;
    for (int j : s.members()) star += g.weight(0, j);
    return star - mst_cost(g, s);
}

bool is_null_player(const RootedWeightedGraph& g, int i) {
    if (i < 1 || i > g.players()) throw std::out_of_range("player out of range");
    for (int j = 1; j <= g.players(); ++j) {
        if (j == i) continue;
        if (g.weight(0, i) > g.weight(i, j) || g.weight(i, j) < g.weight(0, j))
            return false;
    }
    return true;  // vacuously true for n = 1
}

bool is_non_null_simple(const RootedWeightedGraph& g, int i) {
    if (!g.is_zero_one())
        throw std::invalid_argument("graph is not 0-1 weighted");
    if (i < 1 || i > g.players()) throw std::out_of_range("player out of range");
    for (int j = 1; j <= g.players(); ++j) {
        if (j == i) continue;
        if (g.weight(i, j) != 0) continue;
        if (g.weight(0, i) == 1 || g.weight(0, j) == 1) return true;
    }
    return false;
}

EliminationResult eliminate_null_players(const RootedWeightedGraph& g) {
    std::vector<int> labels(static_cast<std::size_t>(g.players()));
    std::iota(labels.begin(), labels.end(), 1);  // current label k -> original
    RootedWeightedGraph current = g;
    std::vector<int> removed;

    // Removing a null player can only create new null players, so restart
    // the scan from the lowest label after each removal.
    for (;;) {
        int victim = 0;
        for (int i = 1; i <= current.players(); ++i) {
            if (is_null_player(current, i)) {
                victim = i;
                break;
            }
        }
        if (victim == 0) break;
        removed.push_back(labels[static_cast<std::size_t>(victim - 1)]);
        labels.erase(labels.begin() + (victim - 1));
        if (labels.empty()) {
            return EliminationResult{RootedWeightedGraph(0), {}, removed};
        }
        RootedWeightedGraph next(static_cast<int>(labels.size()));
        std::vector<int> verts;  // reduced label k maps to old label
        verts.push_back(0);
        for (int k = 1; k <= current.players(); ++k)
            if (k != victim) verts.push_back(k);
        for (std::size_t a = 0; a < verts.size(); ++a)
            for (std::size_t b = a + 1; b < verts.size(); ++b)
                next.set_weight(static_cast<int>(a), static_cast<int>(b),
                                current.weight(verts[a], verts[b]));
        current = std::move(next);
    }
    return EliminationResult{current, labels, removed};
}

bool is_dummy_player_cost(const RootedWeightedGraph& g, int i) {
    return is_null_player(g, i);
}

}  // namespace mcst
