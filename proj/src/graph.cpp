#include "mcst/graph.hpp"

#include <algorithm>
#include <cstdio>
#include <sstream>

#include "mcst/rng.hpp"

namespace mcst {

namespace {

constexpr std::uint64_t kWeightLimit = 1ULL << 32;

bool parse_u64(const std::string& tok, std::uint64_t& out) {
    if (tok.empty()) return false;
    for (char c : tok)
        if (c < '0' || c > '9') return false;
    if (tok.size() > 20) return false;
    errno = 0;
    out = std::strtoull(tok.c_str(), nullptr, 10);
    return errno == 0;
}

}  // namespace

RootedWeightedGraph parse_instance(const std::string& text) {
    std::istringstream in(text);
    std::string line;
    int lineno = 0;
    int n = -1;
    std::vector<char> seen;
    std::size_t edges_seen = 0;
    RootedWeightedGraph g(1);

    auto pair_index = [&](int i, int j) {
        return static_cast<std::size_t>(i) * static_cast<std::size_t>(n + 1) +
               static_cast<std::size_t>(j);
    };

    while (std::getline(in, line)) {
        ++lineno;
        if (!line.empty() && line.back() == '\r') line.pop_back();
        std::istringstream ls(line);
        std::string tag;
        if (!(ls >> tag)) continue;  // blank line
        if (tag[0] == '#') continue;

        if (n < 0) {
            if (tag != "n") throw ParseError("expected header 'n <players>'", lineno);
            std::string ntok;
            if (!(ls >> ntok)) throw ParseError("missing player count", lineno);
            std::uint64_t nv;
            if (!parse_u64(ntok, nv) || nv < 1 || nv > 1000000)
                throw ParseError("invalid player count '" + ntok + "'", lineno);
            n = static_cast<int>(nv);
            g = RootedWeightedGraph(n);
            seen.assign(static_cast<std::size_t>(n + 1) * (n + 1), 0);
            continue;
        }

        if (tag != "e") throw ParseError("expected edge line 'e <i> <j> <w>'", lineno);
        std::string itok, jtok, wtok;
        if (!(ls >> itok >> jtok >> wtok))
            throw ParseError("malformed edge line", lineno);
        std::string extra;
        if (ls >> extra) throw ParseError("trailing tokens on edge line", lineno);

        std::uint64_t iv, jv, wv;
        if (!parse_u64(itok, iv) || !parse_u64(jtok, jv))
            throw ParseError("invalid vertex label", lineno);
        if (!parse_u64(wtok, wv)) {
            if (!wtok.empty() && wtok[0] == '-')
                throw ParseError("negative weight", lineno);
            throw ParseError("invalid weight '" + wtok + "'", lineno);
        }
        if (iv > static_cast<std::uint64_t>(n) || jv > static_cast<std::uint64_t>(n))
            throw ParseError("vertex label out of range", lineno);
        if (iv >= jv) throw ParseError("edge requires i < j", lineno);
        if (wv >= kWeightLimit) throw ParseError("weight >= 2^32", lineno);

        int i = static_cast<int>(iv), j = static_cast<int>(jv);
        if (seen[pair_index(i, j)]) throw ParseError("duplicate pair", lineno);
        seen[pair_index(i, j)] = 1;
        g.set_weight(i, j, wv);
        ++edges_seen;
    }

    if (n < 0) throw ParseError("missing header", lineno == 0 ? 1 : lineno);
    std::size_t expected = static_cast<std::size_t>(n + 1) * n / 2;
    if (edges_seen != expected)
        throw ParseError("incomplete graph: " + std::to_string(edges_seen) +
                             " of " + std::to_string(expected) + " pairs",
                         lineno);
    return g;
}

std::string serialize_instance(const RootedWeightedGraph& g) {
    std::string out = "n " + std::to_string(g.players()) + "\n";
    for (int i = 0; i <= g.players(); ++i)
        for (int j = i + 1; j <= g.players(); ++j)
            out += "e " + std::to_string(i) + " " + std::to_string(j) + " " +
                   std::to_string(g.weight(i, j)) + "\n";
    return out;
}

RootedWeightedGraph random_instance(int n, const WeightModel& model,
                                    std::uint64_t seed) {
    if (model.kind == WeightModel::Kind::Binary && !(model.p > 0.0 && model.p < 1.0))
        throw std::invalid_argument("binary model requires 0 < p < 1");
    if (model.kind == WeightModel::Kind::UniformInt && model.lo > model.hi)
        throw std::invalid_argument("uniform-int model requires lo <= hi");

    RootedWeightedGraph g(n);
    SplitMix64 rng(derive_seed(seed, {0x67656eULL}));  // "gen"
    // Fixed lexicographic pair order so instances only depend on (n, model, seed).
    for (int i = 0; i <= n; ++i) {
        for (int j = i + 1; j <= n; ++j) {
            std::uint64_t w;
            if (model.kind == WeightModel::Kind::Binary)
                w = rng.unit() < model.p ? 1 : 0;
            else
                w = model.lo + rng.bounded(model.hi - model.lo + 1);
            g.set_weight(i, j, w);
        }
    }
    return g;
}

ThresholdDecomposition threshold_decompose(const RootedWeightedGraph& g) {
    std::vector<std::uint64_t> levels;
    for (int i = 0; i <= g.players(); ++i)
        for (int j = i + 1; j <= g.players(); ++j)
            if (g.weight(i, j) > 0) levels.push_back(g.weight(i, j));
    std::sort(levels.begin(), levels.end());
    levels.erase(std::unique(levels.begin(), levels.end()), levels.end());
    return ThresholdDecomposition{std::move(levels), g};
}

RootedWeightedGraph level_graph(const ThresholdDecomposition& d, int h) {
    if (h < 1 || h > static_cast<int>(d.levels.size()))
        throw std::out_of_range("level index out of range");
    std::uint64_t gamma = d.levels[static_cast<std::size_t>(h - 1)];
    RootedWeightedGraph out(d.source.players());
    for (int i = 0; i <= d.source.players(); ++i)
        for (int j = i + 1; j <= d.source.players(); ++j)
            out.set_weight(i, j, d.source.weight(i, j) >= gamma ? 1 : 0);
    return out;
}

}  // namespace mcst
