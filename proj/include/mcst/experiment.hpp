#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "mcst/graph.hpp"
#include "mcst/shapley.hpp"

namespace mcst {

// Protocol parameters: player range, accuracy grid, confidence, trial
// count, and the step/ceiling of the sample-size search.
struct ExperimentConfig {
    std::vector<int> n_range = {3, 4, 5, 6, 7, 8, 9, 10};
    std::vector<std::string> eps_grid = {"0.9", "0.8", "0.7", "0.6", "0.5",
                                         "0.4", "0.3", "0.2", "0.1"};
    std::string delta = "0.25";
    int trials = 20;
    std::uint64_t m_step = 100;
    std::uint64_t m_cap = 1000000;
    int instances_per_n = 3;
    WeightModel model = WeightModel::binary(0.5);
    std::uint64_t master_seed = 1;
    int workers = 1;
    std::string success_csv = "success.csv";
    std::string mmin_csv = "mmin.csv";

    void validate() const;
};

struct SuccessRow {
    int n;
    int instance_id;
    std::string eps;
    std::uint64_t m;
    int successes;
    int trials;
};

struct MminRow {
    int n;
    std::string eps;
    std::optional<std::uint64_t> m_min;  // nullopt when the search hit m_cap
    std::uint64_t theoretical_m;
};

struct ExperimentResult {
    std::vector<SuccessRow> success;
    std::vector<MminRow> mmin;
};

// Parses a flat key=value config; '#' starts a comment. Unknown keys are
// rejected. Lists are comma separated; n_range also accepts "a..b".
ExperimentConfig parse_config(const std::string& text);

// Parses "binary:p" or "uniform:lo,hi".
WeightModel parse_weight_model(const std::string& text);

// Exact rational from a plain decimal literal such as "0.25".
Rational rational_from_decimal(const std::string& text);

// Regenerates from sub-seeds derive_seed(seed, {kAttemptTag, attempt})
// until the given player is non-null. attempts_out reports how many
// draws were needed. Throws on exceeding max_attempts.
RootedWeightedGraph generate_nonnull_instance(int n, const WeightModel& model,
                                              std::uint64_t seed, int player,
                                              int* attempts_out,
                                              int max_attempts = 100000);

// Runs the full protocol: per n, generate instances with player 1
// non-null, compute exact phi_1, then scan M = m_step, 2 m_step, ...
// recording for each eps the minimal M at which every instance reaches
// success rate >= 1 - delta simultaneously. Trial seeds derive from
// (master_seed, n, instance_id, M, trial).
ExperimentResult run_experiment(const ExperimentConfig& cfg);

std::string success_csv_text(const std::vector<SuccessRow>& rows);
std::string mmin_csv_text(const std::vector<MminRow>& rows);

// Plot coordinates from mmin.csv content. mode "eps": (inv_eps_sq, M_min)
// for a fixed n. mode "players": (n, ln M_min, ln theoretical_M) for a
// fixed eps. CAP rows are skipped.
std::string plotdata_eps(const std::string& mmin_csv, int fixed_n);
std::string plotdata_players(const std::string& mmin_csv, const std::string& fixed_eps);

// CSV rendering of a real value with 12 significant digits.
std::string csv_real(double v);

}  // namespace mcst
