#include "mcst/shapley.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <numeric>
#include <stdexcept>
#include <thread>

#include "mcst/mst.hpp"
#include "mcst/rng.hpp"

namespace mcst {

namespace {

constexpr std::uint64_t kSampleTag = 0x73616d70ULL;  // "samp"

using Int128 = __int128;

BigInt to_big(Int128 v) {
    bool neg = v < 0;
    unsigned __int128 u = neg ? static_cast<unsigned __int128>(-v)
                              : static_cast<unsigned __int128>(v);
    BigInt b = static_cast<std::uint64_t>(u >> 64);
    b <<= 64;
    b += static_cast<std::uint64_t>(u);
    return neg ? BigInt(-b) : b;
}

BigInt factorial(int n) {
    BigInt f = 1;
    for (int k = 2; k <= n; ++k) f *= k;
    return f;
}

Coalition coalition_from_mask(int n, std::uint32_t mask) {
    Coalition s(n);
    for (int i = 1; i <= n; ++i)
        if (mask & (1u << (i - 1))) s.add(i);
    return s;
}

// Characteristic value of the coalition given by mask, as a signed integer.
std::int64_t char_value(const RootedWeightedGraph& g, GameKind kind,
                        std::uint32_t mask) {
    Coalition s = coalition_from_mask(g.players(), mask);
    std::uint64_t c = mst_cost(g, s);
    if (kind == GameKind::Cost) return static_cast<std::int64_t>(c);
    std::uint64_t star = 0;
    for (int j : s.members()) star += g.weight(0, j);
    return static_cast<std::int64_t>(star - c);
}

}  // namespace

ShapleyVector exact_shapley_subsets(const RootedWeightedGraph& g, GameKind kind) {
    const int n = g.players();
    if (n > 24) throw std::invalid_argument("subset oracle limited to n <= 24");
    if (n == 0) return ShapleyVector{};

    const std::uint32_t full = (n == 32) ? 0xffffffffu : ((1u << n) - 1);
    std::vector<std::int64_t> value(static_cast<std::size_t>(full) + 1);
    for (std::uint32_t mask = 0; mask <= full; ++mask)
        value[mask] = char_value(g, kind, mask);

    std::vector<BigInt> size_weight(static_cast<std::size_t>(n));
    for (int s = 0; s < n; ++s)
        size_weight[static_cast<std::size_t>(s)] =
            factorial(s) * factorial(n - s - 1);
    const BigInt n_fact = factorial(n);

    ShapleyVector out;
    out.values.reserve(static_cast<std::size_t>(n));
    for (int i = 1; i <= n; ++i) {
        const std::uint32_t ibit = 1u << (i - 1);
        std::vector<Int128> by_size(static_cast<std::size_t>(n), 0);
        for (std::uint32_t mask = 0; mask <= full; ++mask) {
            if (mask & ibit) continue;
            int s = __builtin_popcount(mask);
            by_size[static_cast<std::size_t>(s)] +=
                static_cast<Int128>(value[mask | ibit]) - value[mask];
        }
        BigInt num = 0;
        for (int s = 0; s < n; ++s)
            num += size_weight[static_cast<std::size_t>(s)] *
                   to_big(by_size[static_cast<std::size_t>(s)]);
        out.values.emplace_back(num, n_fact);
    }
    return out;
}

ShapleyVector exact_shapley_permutations(const RootedWeightedGraph& g,
                                         GameKind kind) {
    const int n = g.players();
    if (n > 9) throw std::invalid_argument("permutation oracle limited to n <= 9");
    if (n == 0) return ShapleyVector{};

    std::vector<int> perm(static_cast<std::size_t>(n));
    std::iota(perm.begin(), perm.end(), 1);
    std::vector<Int128> sums(static_cast<std::size_t>(n), 0);
    do {
        std::vector<std::uint64_t> profile = permutation_cost_profile(g, perm);
        std::uint64_t prev = 0;
        for (int k = 0; k < n; ++k) {
            int i = perm[static_cast<std::size_t>(k)];
            std::int64_t cost_marg =
                static_cast<std::int64_t>(profile[static_cast<std::size_t>(k)]) -
                static_cast<std::int64_t>(prev);
            std::int64_t merg =
                kind == GameKind::Cost
                    ? cost_marg
                    : static_cast<std::int64_t>(g.weight(0, i)) - cost_marg;
            sums[static_cast<std::size_t>(i - 1)] += merg;
            prev = profile[static_cast<std::size_t>(k)];
        }
    } while (std::next_permutation(perm.begin(), perm.end()));

    const BigInt n_fact = factorial(n);
    ShapleyVector out;
    out.values.reserve(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i)
        out.values.emplace_back(to_big(sums[static_cast<std::size_t>(i)]), n_fact);
    return out;
}

namespace {

// Accumulates saving-game marginals of one permutation into phi. The bound
// check enforces Merg in [0, n-1] on 0-1 graphs and Merg >= 0 always.
void accumulate_permutation(const RootedWeightedGraph& g,
                            const std::vector<int>& perm, bool zero_one,
                            std::vector<Int128>& phi) {
    const int n = g.players();
    TreeState st = new_tree_state(g);
    std::uint64_t prev = 0;
    for (int k = 0; k < n; ++k) {
        int i = perm[static_cast<std::size_t>(k)];
        extend_inplace(g, st, i);
        std::int64_t merg = static_cast<std::int64_t>(g.weight(0, i) + prev) -
                            static_cast<std::int64_t>(st.cost);
        if (merg < 0 || (zero_one && merg > n - 1))
            throw std::logic_error("marginal contribution out of bounds");
        phi[static_cast<std::size_t>(i - 1)] += merg;
        prev = st.cost;
    }
}

}  // namespace

EstimateReport monte_carlo_shapley(const RootedWeightedGraph& g, std::uint64_t m,
                                   std::uint64_t seed, bool per_level,
                                   int workers) {
    if (m == 0) throw std::invalid_argument("sample count must be positive");
    const int n = g.players();
    const bool zero_one = g.is_zero_one();

    std::vector<RootedWeightedGraph> levels;
    if (per_level) {
        ThresholdDecomposition d = threshold_decompose(g);
        levels.reserve(d.levels.size());
        for (int h = 1; h <= static_cast<int>(d.levels.size()); ++h)
            levels.push_back(level_graph(d, h));
    }
    const std::size_t H = levels.size();

    struct Accum {
        std::vector<Int128> phi;
        std::vector<std::vector<Int128>> lvl;
    };

    auto run_range = [&](std::uint64_t lo, std::uint64_t hi, Accum& acc) {
        acc.phi.assign(static_cast<std::size_t>(n), 0);
        acc.lvl.assign(H, std::vector<Int128>(static_cast<std::size_t>(n), 0));
        for (std::uint64_t k = lo; k < hi; ++k) {
            SplitMix64 rng(derive_seed(seed, {kSampleTag, k}));
            std::vector<int> perm = random_permutation(n, rng);
            accumulate_permutation(g, perm, zero_one, acc.phi);
            for (std::size_t h = 0; h < H; ++h)
                accumulate_permutation(levels[h], perm, true, acc.lvl[h]);
        }
    };

    Accum total;
    if (workers <= 1 || m < 2) {
        run_range(0, m, total);
    } else {
        const std::size_t w =
            std::min<std::size_t>(static_cast<std::size_t>(workers), m);
        std::vector<Accum> parts(w);
        std::vector<std::thread> threads;
        threads.reserve(w);
        for (std::size_t t = 0; t < w; ++t) {
            std::uint64_t lo = m * t / w;
            std::uint64_t hi = m * (t + 1) / w;
            threads.emplace_back(run_range, lo, hi, std::ref(parts[t]));
        }
        for (auto& th : threads) th.join();
        total.phi.assign(static_cast<std::size_t>(n), 0);
        total.lvl.assign(H, std::vector<Int128>(static_cast<std::size_t>(n), 0));
        for (const Accum& p : parts) {
            for (int i = 0; i < n; ++i) total.phi[i] += p.phi[i];
            for (std::size_t h = 0; h < H; ++h)
                for (int i = 0; i < n; ++i) total.lvl[h][i] += p.lvl[h][i];
        }
    }

    EstimateReport report;
    report.sample_count = m;
    report.seed = seed;
    report.estimates.reserve(static_cast<std::size_t>(n));
    const BigInt mm = m;
    for (int i = 0; i < n; ++i)
        report.estimates.emplace_back(to_big(total.phi[static_cast<std::size_t>(i)]),
                                      mm);
    if (per_level) {
        report.per_level.resize(H);
        for (std::size_t h = 0; h < H; ++h) {
            report.per_level[h].reserve(static_cast<std::size_t>(n));
            for (int i = 0; i < n; ++i)
                report.per_level[h].emplace_back(
                    to_big(total.lvl[h][static_cast<std::size_t>(i)]), mm);
        }
    }
    return report;
}

std::uint64_t required_samples(int n, double eps, double delta, int h_levels,
                               SampleScope scope, bool weighted) {
    if (!(eps > 0.0)) throw std::invalid_argument("eps must be positive");
    if (!(delta > 0.0 && delta < 1.0))
        throw std::invalid_argument("delta must lie in (0,1)");
    if (weighted && h_levels < 1)
        throw std::invalid_argument("h_levels must be >= 1");
    if (n < 2) return 1;  // (n-1)^4 factor vanishes; the game is trivial

    const long double h = weighted ? static_cast<long double>(h_levels) : 1.0L;
    long double a = 2.0L * h;
    if (scope == SampleScope::All) a *= static_cast<long double>(n);

    const long double nn = static_cast<long double>(n);
    const long double front = nn * nn * powl(nn - 1.0L, 4.0L);
    const long double val =
        front * logl(a / static_cast<long double>(delta)) /
        (2.0L * static_cast<long double>(eps) * static_cast<long double>(eps));
    return static_cast<std::uint64_t>(ceill(val));
}

std::vector<Rational> cost_estimates_from_saving(const RootedWeightedGraph& g,
                                                 const EstimateReport& report) {
    if (report.estimates.size() != static_cast<std::size_t>(g.players()))
        throw std::invalid_argument("report dimension mismatch");
    std::vector<Rational> out;
    out.reserve(report.estimates.size());
    for (int i = 1; i <= g.players(); ++i)
        out.push_back(Rational(g.weight(0, i)) -
                      report.estimates[static_cast<std::size_t>(i - 1)]);
    return out;
}

std::string rational_to_string(const Rational& r) {
    return numerator(r).str() + "/" + denominator(r).str();
}

std::string rational_to_decimal(const Rational& r) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.17g", r.convert_to<double>());
    return buf;
}

}  // namespace mcst
