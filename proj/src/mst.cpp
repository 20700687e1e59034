#include "mcst/mst.hpp"

#include <algorithm>
#include <limits>
#include <stdexcept>

namespace mcst {

namespace {

struct CandidateEdge {
    std::uint64_t w;
    int a, b;  // a < b
    bool operator<(const CandidateEdge& o) const {
        if (w != o.w) return w < o.w;
        if (a != o.a) return a < o.a;
        return b < o.b;
    }
};

int find_root(std::vector<int>& parent, int x) {
    while (parent[x] != x) {
        parent[x] = parent[parent[x]];
        x = parent[x];
    }
    return x;
}

}  // namespace

std::uint64_t mst_cost(const RootedWeightedGraph& g, const Coalition& s) {
    // Dense Prim over S plus the root; independent of the Kruskal kernel
    // used by extend.
    std::vector<int> verts = s.members();
    verts.insert(verts.begin(), 0);
    const std::size_t k = verts.size();
    if (k == 1) return 0;

    constexpr std::uint64_t kInf = std::numeric_limits<std::uint64_t>::max();
    std::vector<std::uint64_t> dist(k, kInf);
    std::vector<char> done(k, 0);
    dist[0] = 0;
    std::uint64_t total = 0;
    for (std::size_t it = 0; it < k; ++it) {
        std::size_t best = k;
        for (std::size_t v = 0; v < k; ++v)
            if (!done[v] && (best == k || dist[v] < dist[best])) best = v;
        done[best] = 1;
        total += dist[best];
        for (std::size_t v = 0; v < k; ++v)
            if (!done[v]) dist[v] = std::min(dist[v], g.weight(verts[best], verts[v]));
    }
    return total;
}

TreeState new_tree_state(const RootedWeightedGraph& g) {
    TreeState st;
    st.members = Coalition(g.players());
    st.cost = 0;
    return st;
}

void extend_inplace(const RootedWeightedGraph& g, TreeState& state, int i) {
    if (i < 1 || i > g.players()) throw std::out_of_range("player out of range");
    if (state.members.contains(i))
        throw std::invalid_argument("player already a member");

    thread_local std::vector<CandidateEdge> edges;
    thread_local std::vector<int> parent;

    const std::vector<int> members = state.members.members();
    edges.clear();
    edges.reserve(state.tree_edges.size() + members.size() + 1);
    for (const auto& [a, b] : state.tree_edges)
        edges.push_back({g.weight(a, b), a, b});
    edges.push_back({g.weight(0, i), std::min(0, i), std::max(0, i)});
    for (int j : members)
        edges.push_back({g.weight(i, j), std::min(i, j), std::max(i, j)});
    std::sort(edges.begin(), edges.end());

    parent.assign(static_cast<std::size_t>(g.players()) + 1, 0);
    parent[0] = 0;
    parent[i] = i;
    for (int j : members) parent[j] = j;

    const std::size_t need = members.size() + 1;
    std::vector<std::pair<int, int>> tree;
    tree.reserve(need);
    std::uint64_t cost = 0;
    for (const CandidateEdge& e : edges) {
        int ra = find_root(parent, e.a);
        int rb = find_root(parent, e.b);
        if (ra == rb) continue;
        parent[ra] = rb;
        tree.emplace_back(e.a, e.b);
        cost += e.w;
        if (tree.size() == need) break;
    }
    std::sort(tree.begin(), tree.end());

    state.members.add(i);
    state.tree_edges = std::move(tree);
    state.cost = cost;
}

TreeState extend(const RootedWeightedGraph& g, const TreeState& state, int i) {
    TreeState next = state;
    extend_inplace(g, next, i);
    return next;
}

std::vector<std::uint64_t> permutation_cost_profile(const RootedWeightedGraph& g,
                                                    const std::vector<int>& perm) {
    const int n = g.players();
    if (static_cast<int>(perm.size()) != n)
        throw std::invalid_argument("permutation has wrong length");
    std::vector<char> seen(static_cast<std::size_t>(n) + 1, 0);
    for (int p : perm) {
        if (p < 1 || p > n || seen[p])
            throw std::invalid_argument("not a bijection on {1,...,n}");
        seen[p] = 1;
    }

    std::vector<std::uint64_t> profile;
    profile.reserve(perm.size());
    TreeState st = new_tree_state(g);
    for (int p : perm) {
        extend_inplace(g, st, p);
        profile.push_back(st.cost);
    }
    return profile;
}

}  // namespace mcst
