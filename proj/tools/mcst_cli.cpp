// Command line driver: exact and Monte Carlo Shapley values for minimum
// cost spanning tree games, instance generation, and the sample-size
// experiment protocol.

#include <CLI11.hpp>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include "mcst/experiment.hpp"
#include "mcst/game.hpp"
#include "mcst/graph.hpp"
#include "mcst/rng.hpp"
#include "mcst/shapley.hpp"

namespace {

constexpr int kExitUsage = 2;
constexpr int kExitBudget = 3;
constexpr int kExitGenerationCap = 4;

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw std::runtime_error("cannot open '" + path + "'");
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

void write_file(const std::string& path, const std::string& text) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw std::runtime_error("cannot write '" + path + "'");
    out << text;
}

mcst::RootedWeightedGraph load_instance(const std::string& path) {
    return mcst::parse_instance(read_file(path));
}

void print_vector(const std::vector<mcst::Rational>& values) {
    std::string rationals, decimals;
    for (std::size_t i = 0; i < values.size(); ++i) {
        if (i) {
            rationals += " ";
            decimals += " ";
        }
        rationals += mcst::rational_to_string(values[i]);
        decimals += mcst::rational_to_decimal(values[i]);
    }
    std::cout << rationals << "\n" << decimals << "\n";
}

int cmd_exact(const std::string& path, const std::string& kind_name) {
    mcst::RootedWeightedGraph g = load_instance(path);
    if (g.players() > 24) {
        std::cerr << "error: n = " << g.players()
                  << " exceeds the exact oracle budget (24)\n";
        return kExitBudget;
    }
    mcst::GameKind kind =
        kind_name == "cost" ? mcst::GameKind::Cost : mcst::GameKind::Saving;
    print_vector(mcst::exact_shapley_subsets(g, kind).values);
    return 0;
}

int cmd_estimate(const std::string& path, std::uint64_t samples, double eps,
                 double delta, const std::string& scope_name,
                 std::uint64_t seed, bool per_level, int workers) {
    mcst::RootedWeightedGraph g = load_instance(path);

    std::uint64_t m = samples;
    if (m == 0) {
        mcst::SampleScope scope = scope_name == "all" ? mcst::SampleScope::All
                                                      : mcst::SampleScope::Single;
        // 0-1 instances use the simple-game bound; otherwise the bound
        // picks up the number of distinct positive weight levels.
        bool weighted = !g.is_zero_one();
        int h = weighted
                    ? static_cast<int>(mcst::threshold_decompose(g).levels.size())
                    : 1;
        m = mcst::required_samples(g.players(), eps, delta, h, scope, weighted);
    }

    mcst::EstimateReport rep =
        mcst::monte_carlo_shapley(g, m, seed, per_level, workers);
    std::cout << "M " << rep.sample_count << "\n";
    std::cout << "seed " << rep.seed << "\n";
    print_vector(rep.estimates);
    if (per_level) {
        for (std::size_t h = 0; h < rep.per_level.size(); ++h) {
            std::cout << "level " << (h + 1);
            for (const mcst::Rational& r : rep.per_level[h])
                std::cout << " " << mcst::rational_to_string(r);
            std::cout << "\n";
        }
    }
    return 0;
}

int cmd_generate(int n, const std::string& model_text, std::uint64_t seed,
                 int require_nonnull, const std::string& out_path) {
    mcst::WeightModel model = mcst::parse_weight_model(model_text);
    std::string text;
    if (require_nonnull > 0) {
        int attempts = 0;
        try {
            mcst::RootedWeightedGraph g = mcst::generate_nonnull_instance(
                n, model, seed, require_nonnull, &attempts);
            text = "# attempts " + std::to_string(attempts) + "\n" +
                   mcst::serialize_instance(g);
        } catch (const std::runtime_error& e) {
            std::cerr << "error: " << e.what() << "\n";
            return kExitGenerationCap;
        }
    } else {
        text = mcst::serialize_instance(mcst::random_instance(n, model, seed));
    }
    if (out_path.empty())
        std::cout << text;
    else
        write_file(out_path, text);
    return 0;
}

int cmd_experiment(const std::string& config_path) {
    mcst::ExperimentConfig cfg = mcst::parse_config(read_file(config_path));
    mcst::ExperimentResult res = mcst::run_experiment(cfg);
    write_file(cfg.success_csv, mcst::success_csv_text(res.success));
    write_file(cfg.mmin_csv, mcst::mmin_csv_text(res.mmin));
    std::cout << "wrote " << cfg.success_csv << " (" << res.success.size()
              << " rows) and " << cfg.mmin_csv << " (" << res.mmin.size()
              << " rows)\n";
    return 0;
}

int cmd_plotdata(const std::string& mmin_path, const std::string& mode, int n,
                 const std::string& eps, const std::string& out_path) {
    std::string csv = read_file(mmin_path);
    std::string out = mode == "eps" ? mcst::plotdata_eps(csv, n)
                                    : mcst::plotdata_players(csv, eps);
    if (out_path.empty())
        std::cout << out;
    else
        write_file(out_path, out);
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Shapley values of minimum cost spanning tree games"};
    app.require_subcommand(1);

    std::string instance_path, kind = "saving";
    auto* exact = app.add_subcommand("exact", "exact Shapley value of an instance");
    exact->add_option("instance", instance_path, "instance file")->required();
    exact->add_option("--kind", kind, "saving or cost")
        ->check(CLI::IsMember({"saving", "cost"}));

    std::string est_path, scope = "single";
    std::uint64_t samples = 0, seed = 1;
    double eps = 0.0, delta = 0.0;
    bool per_level = false;
    int workers = 1;
    auto* estimate =
        app.add_subcommand("estimate", "Monte Carlo Shapley estimate");
    estimate->add_option("instance", est_path, "instance file")->required();
    auto* samples_opt = estimate->add_option("--samples", samples, "sample count M");
    auto* eps_opt = estimate->add_option("--eps", eps, "relative error target");
    auto* delta_opt = estimate->add_option("--delta", delta, "failure probability");
    estimate->add_option("--scope", scope, "single or all")
        ->check(CLI::IsMember({"single", "all"}));
    estimate->add_option("--seed", seed, "master seed");
    estimate->add_flag("--per-level", per_level, "also report 0-1 level estimates");
    estimate->add_option("--workers", workers, "worker threads");
    samples_opt->excludes(eps_opt)->excludes(delta_opt);
    eps_opt->needs(delta_opt);

    int gen_n = 0, require_nonnull = 0;
    std::string model_text = "binary:0.5", gen_out;
    std::uint64_t gen_seed = 1;
    auto* generate = app.add_subcommand("generate", "random instance generation");
    generate->add_option("-n,--players", gen_n, "player count")
        ->required()
        ->check(CLI::PositiveNumber);
    generate->add_option("--model", model_text, "binary:p or uniform:lo,hi");
    generate->add_option("--seed", gen_seed, "seed");
    generate->add_option("--require-nonnull", require_nonnull,
                         "regenerate until this player is non-null");
    generate->add_option("-o,--output", gen_out, "output file (default stdout)");

    std::string config_path;
    auto* experiment = app.add_subcommand("experiment", "sample-size protocol");
    experiment->add_option("config", config_path, "key=value config file")
        ->required();

    std::string mmin_path, plot_mode, plot_eps, plot_out;
    int plot_n = 0;
    auto* plotdata = app.add_subcommand("plotdata", "plot coordinates from mmin.csv");
    plotdata->add_option("mmin", mmin_path, "mmin.csv file")->required();
    plotdata->add_option("--mode", plot_mode, "eps or players")
        ->required()
        ->check(CLI::IsMember({"eps", "players"}));
    plotdata->add_option("--n", plot_n, "fixed player count (mode eps)");
    plotdata->add_option("--eps", plot_eps, "fixed eps (mode players)");
    plotdata->add_option("-o,--output", plot_out, "output file (default stdout)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : kExitUsage;
    }

    try {
        if (*exact) return cmd_exact(instance_path, kind);
        if (*estimate) {
            if (samples == 0 && eps == 0.0) {
                std::cerr << "error: give exactly one of --samples or --eps/--delta\n";
                return kExitUsage;
            }
            return cmd_estimate(est_path, samples, eps, delta, scope, seed,
                                per_level, workers);
        }
        if (*generate)
            return cmd_generate(gen_n, model_text, gen_seed, require_nonnull,
                                gen_out);
        if (*experiment) return cmd_experiment(config_path);
        if (*plotdata) {
            if (plot_mode == "eps" && plot_n == 0) {
                std::cerr << "error: mode eps requires --n\n";
                return kExitUsage;
            }
            if (plot_mode == "players" && plot_eps.empty()) {
                std::cerr << "error: mode players requires --eps\n";
                return kExitUsage;
            }
            return cmd_plotdata(mmin_path, plot_mode, plot_n, plot_eps, plot_out);
        }
    } catch (const mcst::ParseError& e) {
        std::cerr << "parse error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 0;
}
