#pragma once

// Test-only helpers: independent brute-force oracles kept separate from
// the library code paths they check.

#include <algorithm>
#include <cstdint>
#include <vector>

#include "mcst/game.hpp"
#include "mcst/graph.hpp"

namespace mcst::testing {

// The two-player worked example: w(r,1)=1, w(1,2)=2, w(r,2)=4.
inline RootedWeightedGraph two_player_example() {
    RootedWeightedGraph g(2);
    g.set_weight(0, 1, 1);
    g.set_weight(0, 2, 4);
    g.set_weight(1, 2, 2);
    return g;
}

inline Coalition coalition_of(int n, std::initializer_list<int> players) {
    Coalition s(n);
    for (int p : players) s.add(p);
    return s;
}

inline Coalition coalition_from_mask(int n, std::uint32_t mask) {
    Coalition s(n);
    for (int i = 1; i <= n; ++i)
        if (mask & (1u << (i - 1))) s.add(i);
    return s;
}

// From-scratch Kruskal over every edge of the induced subgraph. Oracle for
// mst_cost (which uses Prim) and for the incremental extend kernel.
inline std::uint64_t kruskal_full_cost(const RootedWeightedGraph& g,
                                       const Coalition& s) {
    std::vector<int> verts = s.members();
    verts.insert(verts.begin(), 0);
    struct E {
        std::uint64_t w;
        int a, b;
    };
    std::vector<E> edges;
    for (std::size_t x = 0; x < verts.size(); ++x)
        for (std::size_t y = x + 1; y < verts.size(); ++y)
            edges.push_back({g.weight(verts[x], verts[y]), static_cast<int>(x),
                             static_cast<int>(y)});
    std::sort(edges.begin(), edges.end(),
              [](const E& l, const E& r) { return l.w < r.w; });
    std::vector<int> parent(verts.size());
    for (std::size_t i = 0; i < parent.size(); ++i) parent[i] = static_cast<int>(i);
    auto find = [&](int x) {
        while (parent[x] != x) x = parent[x] = parent[parent[x]];
        return x;
    };
    std::uint64_t total = 0;
    std::size_t used = 0;
    for (const E& e : edges) {
        int ra = find(e.a), rb = find(e.b);
        if (ra == rb) continue;
        parent[ra] = rb;
        total += e.w;
        if (++used == verts.size() - 1) break;
    }
    return total;
}

// Definitional null-player check by exhaustive subset enumeration.
inline bool brute_force_null(const RootedWeightedGraph& g, int i) {
    const int n = g.players();
    for (std::uint32_t mask = 0; mask < (1u << n); ++mask) {
        if (mask & (1u << (i - 1))) continue;
        Coalition s = coalition_from_mask(n, mask);
        std::uint64_t without = saving_value(g, s);
        s.add(i);
        if (saving_value(g, s) != without) return false;
    }
    return true;
}

// Definitional dummy-player check in the cost game.
inline bool brute_force_dummy_cost(const RootedWeightedGraph& g, int i) {
    const int n = g.players();
    Coalition singleton = coalition_of(n, {i});
    std::uint64_t ci = mst_cost(g, singleton);
    for (std::uint32_t mask = 0; mask < (1u << n); ++mask) {
        if (mask & (1u << (i - 1))) continue;
        Coalition s = coalition_from_mask(n, mask);
        std::uint64_t cs = mst_cost(g, s);
        s.add(i);
        if (mst_cost(g, s) != cs + ci) return false;
    }
    return true;
}

}  // namespace mcst::testing
