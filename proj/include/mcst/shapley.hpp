#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <cstdint>
#include <string>
#include <vector>

#include "mcst/game.hpp"
#include "mcst/graph.hpp"

namespace mcst {

using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

// Exact Shapley values, one reduced rational per player.
struct ShapleyVector {
    std::vector<Rational> values;
};

// Monte Carlo estimate: phi^A_i = phi'_i / M with integer phi'_i.
struct EstimateReport {
    std::vector<Rational> estimates;                 // length n
    std::uint64_t sample_count = 0;                  // M
    std::uint64_t seed = 0;                          // master seed
    std::vector<std::vector<Rational>> per_level;    // H x n; empty unless requested
};

enum class SampleScope { Single, All };

// Subset-weighted exact oracle: sum over S not containing i of
// |S|! (n-|S|-1)! / n! times the marginal of i. Enumeration-bounded.
ShapleyVector exact_shapley_subsets(const RootedWeightedGraph& g, GameKind kind);

// Permutation-average exact oracle over all n! orderings; independent
// formula used to cross-check the subset oracle.
ShapleyVector exact_shapley_permutations(const RootedWeightedGraph& g,
                                         GameKind kind);

// Uniform permutation sampling for the saving game. Deterministic given
// (m, seed) for any worker count: sample k draws its permutation from the
// stream derive_seed(seed, {kSampleTag, k}). per_level additionally
// accumulates the estimates of every 0-1 level game on the same
// permutations; the main estimates are unchanged by that mode.
EstimateReport monte_carlo_shapley(const RootedWeightedGraph& g, std::uint64_t m,
                                   std::uint64_t seed, bool per_level,
                                   int workers = 1);

// Hoeffding-based sample count ceil(n^2 (n-1)^4 ln(A/delta) / (2 eps^2))
// with A = 2, 2n, 2H or 2nH depending on (scope, weighted). Returns 1 for
// n < 2 (the game is trivial there).
std::uint64_t required_samples(int n, double eps, double delta, int h_levels,
                               SampleScope scope, bool weighted);

// Cost-game estimates w(r,i) - phi^A_i from a saving-game report.
std::vector<Rational> cost_estimates_from_saving(const RootedWeightedGraph& g,
                                                 const EstimateReport& report);

std::string rational_to_string(const Rational& r);          // "num/den"
std::string rational_to_decimal(const Rational& r);         // 17 significant digits

}  // namespace mcst
