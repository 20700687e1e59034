#include "mcst/experiment.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <sstream>
#include <stdexcept>
#include <thread>

#include "mcst/game.hpp"
#include "mcst/rng.hpp"

namespace mcst {

namespace {

constexpr std::uint64_t kGenTag = 0x696e7374ULL;      // "inst"
constexpr std::uint64_t kAttemptTag = 0x617474ULL;    // "att"
constexpr std::uint64_t kTrialTag = 0x7472696cULL;    // "tril"

std::vector<std::string> split(const std::string& s, char sep) {
    std::vector<std::string> out;
    std::string cur;
    for (char c : s) {
        if (c == sep) {
            out.push_back(cur);
            cur.clear();
        } else {
            cur += c;
        }
    }
    out.push_back(cur);
    return out;
}

std::string trim(const std::string& s) {
    std::size_t a = s.find_first_not_of(" \t\r");
    if (a == std::string::npos) return "";
    std::size_t b = s.find_last_not_of(" \t\r");
    return s.substr(a, b - a + 1);
}

std::vector<int> parse_int_list(const std::string& text) {
    std::vector<int> out;
    std::size_t dots = text.find("..");
    if (dots != std::string::npos) {
        int lo = std::stoi(text.substr(0, dots));
        int hi = std::stoi(text.substr(dots + 2));
        if (lo > hi) throw std::invalid_argument("empty range '" + text + "'");
        for (int v = lo; v <= hi; ++v) out.push_back(v);
        return out;
    }
    for (const std::string& tok : split(text, ','))
        out.push_back(std::stoi(trim(tok)));
    return out;
}

}  // namespace

Rational rational_from_decimal(const std::string& text) {
    std::string t = trim(text);
    bool neg = false;
    std::size_t pos = 0;
    if (pos < t.size() && (t[pos] == '+' || t[pos] == '-')) {
        neg = t[pos] == '-';
        ++pos;
    }
    BigInt num = 0;
    BigInt den = 1;
    bool saw_digit = false, saw_dot = false;
    for (; pos < t.size(); ++pos) {
        char c = t[pos];
        if (c == '.') {
            if (saw_dot) throw std::invalid_argument("bad decimal '" + text + "'");
            saw_dot = true;
        } else if (c >= '0' && c <= '9') {
            num = num * 10 + (c - '0');
            if (saw_dot) den *= 10;
            saw_digit = true;
        } else {
            throw std::invalid_argument("bad decimal '" + text + "'");
        }
    }
    if (!saw_digit) throw std::invalid_argument("bad decimal '" + text + "'");
    if (neg) num = -num;
    return Rational(num, den);
}

WeightModel parse_weight_model(const std::string& text) {
    std::string t = trim(text);
    std::size_t colon = t.find(':');
    std::string kind = colon == std::string::npos ? t : t.substr(0, colon);
    std::string args = colon == std::string::npos ? "" : t.substr(colon + 1);
    if (kind == "binary") {
        double p = args.empty() ? 0.5 : std::stod(args);
        return WeightModel::binary(p);
    }
    if (kind == "uniform") {
        std::vector<std::string> parts = split(args, ',');
        if (parts.size() != 2)
            throw std::invalid_argument("uniform model needs 'uniform:lo,hi'");
        return WeightModel::uniform_int(std::stoull(trim(parts[0])),
                                        std::stoull(trim(parts[1])));
    }
    throw std::invalid_argument("unknown weight model '" + text + "'");
}

void ExperimentConfig::validate() const {
    if (n_range.empty()) throw std::invalid_argument("n_range is empty");
    for (int n : n_range)
        if (n < 1) throw std::invalid_argument("n_range entries must be >= 1");
    if (eps_grid.empty()) throw std::invalid_argument("eps_grid is empty");
    double prev = 2.0;
    for (const std::string& e : eps_grid) {
        double v = std::stod(e);
        if (!(v > 0.0 && v < 1.0))
            throw std::invalid_argument("eps entries must lie in (0,1)");
        if (v >= prev)
            throw std::invalid_argument("eps_grid must be sorted descending");
        prev = v;
    }
    double d = std::stod(delta);
    if (!(d > 0.0 && d < 1.0))
        throw std::invalid_argument("delta must lie in (0,1)");
    if (trials < 1 || instances_per_n < 1 || m_step < 1 || m_cap < m_step)
        throw std::invalid_argument("counts must be positive and m_cap >= m_step");
}

ExperimentConfig parse_config(const std::string& text) {
    ExperimentConfig cfg;
    std::istringstream in(text);
    std::string line;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        std::string t = trim(line);
        if (t.empty() || t[0] == '#') continue;
        std::size_t eq = t.find('=');
        if (eq == std::string::npos)
            throw std::invalid_argument("config line " + std::to_string(lineno) +
                                        ": expected key=value");
        std::string key = trim(t.substr(0, eq));
        std::string val = trim(t.substr(eq + 1));
        if (key == "n_range") {
            cfg.n_range = parse_int_list(val);
        } else if (key == "eps_grid") {
            cfg.eps_grid.clear();
            for (const std::string& tok : split(val, ','))
                cfg.eps_grid.push_back(trim(tok));
        } else if (key == "delta") {
            cfg.delta = val;
        } else if (key == "trials") {
            cfg.trials = std::stoi(val);
        } else if (key == "m_step") {
            cfg.m_step = std::stoull(val);
        } else if (key == "m_cap") {
            cfg.m_cap = std::stoull(val);
        } else if (key == "instances_per_n") {
            cfg.instances_per_n = std::stoi(val);
        } else if (key == "weight_model") {
            cfg.model = parse_weight_model(val);
        } else if (key == "master_seed") {
            cfg.master_seed = std::stoull(val);
        } else if (key == "workers") {
            cfg.workers = std::stoi(val);
        } else if (key == "success_csv") {
            cfg.success_csv = val;
        } else if (key == "mmin_csv") {
            cfg.mmin_csv = val;
        } else {
            throw std::invalid_argument("config line " + std::to_string(lineno) +
                                        ": unknown key '" + key + "'");
        }
    }
    cfg.validate();
    return cfg;
}

RootedWeightedGraph generate_nonnull_instance(int n, const WeightModel& model,
                                              std::uint64_t seed, int player,
                                              int* attempts_out,
                                              int max_attempts) {
    for (int attempt = 1; attempt <= max_attempts; ++attempt) {
        std::uint64_t sub =
            derive_seed(seed, {kAttemptTag, static_cast<std::uint64_t>(attempt)});
        RootedWeightedGraph g = random_instance(n, model, sub);
        if (!is_null_player(g, player)) {
            if (attempts_out) *attempts_out = attempt;
            return g;
        }
    }
    throw std::runtime_error("instance generation attempt cap exceeded");
}

namespace {

// Relative errors of player 1 across all trials at one (instance, M) cell.
// Trial t uses the stream derive_seed(master, {kTrialTag, n, id, M, t}).
std::vector<Rational> trial_errors(const RootedWeightedGraph& g,
                                   const Rational& exact_phi1,
                                   std::uint64_t master, int n, int id,
                                   std::uint64_t m, int trials, int workers) {
    std::vector<Rational> errors(static_cast<std::size_t>(trials));
    auto run = [&](int lo, int hi) {
        for (int t = lo; t < hi; ++t) {
            std::uint64_t s = derive_seed(
                master, {kTrialTag, static_cast<std::uint64_t>(n),
                         static_cast<std::uint64_t>(id), m,
                         static_cast<std::uint64_t>(t)});
            EstimateReport rep = monte_carlo_shapley(g, m, s, false, 1);
            errors[static_cast<std::size_t>(t)] =
                abs(rep.estimates[0] - exact_phi1) / exact_phi1;
        }
    };
    if (workers <= 1) {
        run(0, trials);
    } else {
        int w = std::min(workers, trials);
        std::vector<std::thread> threads;
        threads.reserve(static_cast<std::size_t>(w));
        for (int t = 0; t < w; ++t)
            threads.emplace_back(run, trials * t / w, trials * (t + 1) / w);
        for (auto& th : threads) th.join();
    }
    return errors;
}

}  // namespace

ExperimentResult run_experiment(const ExperimentConfig& cfg) {
    cfg.validate();
    ExperimentResult result;

    const Rational delta_r = rational_from_decimal(cfg.delta);
    const Rational needed_rate = Rational(1) - delta_r;
    const double delta_d = cfg.delta.empty() ? 0.25 : std::stod(cfg.delta);

    std::vector<Rational> eps_r;
    std::vector<double> eps_d;
    for (const std::string& e : cfg.eps_grid) {
        eps_r.push_back(rational_from_decimal(e));
        eps_d.push_back(std::stod(e));
    }

    for (int n : cfg.n_range) {
        std::vector<RootedWeightedGraph> instances;
        std::vector<Rational> exact_phi1;
        for (int id = 0; id < cfg.instances_per_n; ++id) {
            std::uint64_t seed = derive_seed(
                cfg.master_seed, {kGenTag, static_cast<std::uint64_t>(n),
                                  static_cast<std::uint64_t>(id)});
            RootedWeightedGraph g =
                generate_nonnull_instance(n, cfg.model, seed, 1, nullptr);
            exact_phi1.push_back(exact_shapley_subsets(g, GameKind::Saving).values[0]);
            instances.push_back(std::move(g));
        }

        std::vector<std::optional<std::uint64_t>> m_min(cfg.eps_grid.size());
        std::size_t unresolved = cfg.eps_grid.size();

        for (std::uint64_t m = cfg.m_step; m <= cfg.m_cap && unresolved > 0;
             m += cfg.m_step) {
            std::vector<std::vector<Rational>> errors;
            errors.reserve(instances.size());
            for (int id = 0; id < cfg.instances_per_n; ++id)
                errors.push_back(trial_errors(
                    instances[static_cast<std::size_t>(id)],
                    exact_phi1[static_cast<std::size_t>(id)], cfg.master_seed, n,
                    id, m, cfg.trials, cfg.workers));

            for (std::size_t e = 0; e < cfg.eps_grid.size(); ++e) {
                if (m_min[e]) continue;  // already resolved at a smaller M
                bool all_ok = true;
                for (int id = 0; id < cfg.instances_per_n; ++id) {
                    int successes = 0;
                    for (const Rational& err : errors[static_cast<std::size_t>(id)])
                        if (err <= eps_r[e]) ++successes;
                    result.success.push_back(SuccessRow{n, id, cfg.eps_grid[e], m,
                                                        successes, cfg.trials});
                    if (Rational(successes, cfg.trials) < needed_rate)
                        all_ok = false;
                }
                if (all_ok) {
                    m_min[e] = m;
                    --unresolved;
                }
            }
        }

        for (std::size_t e = 0; e < cfg.eps_grid.size(); ++e) {
            std::uint64_t theo =
                required_samples(n, eps_d[e], delta_d, 1, SampleScope::Single, false);
            result.mmin.push_back(MminRow{n, cfg.eps_grid[e], m_min[e], theo});
        }
    }

    auto eps_value = [](const std::string& s) { return std::stod(s); };
    std::sort(result.success.begin(), result.success.end(),
              [&](const SuccessRow& a, const SuccessRow& b) {
                  if (a.n != b.n) return a.n < b.n;
                  if (a.instance_id != b.instance_id)
                      return a.instance_id < b.instance_id;
                  double ea = eps_value(a.eps), eb = eps_value(b.eps);
                  if (ea != eb) return ea < eb;
                  return a.m < b.m;
              });
    return result;
}

std::string csv_real(double v) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.12g", v);
    return buf;
}

std::string success_csv_text(const std::vector<SuccessRow>& rows) {
    std::string out = "n,instance_id,eps,M,successes,trials\n";
    for (const SuccessRow& r : rows)
        out += std::to_string(r.n) + "," + std::to_string(r.instance_id) + "," +
               csv_real(std::stod(r.eps)) + "," + std::to_string(r.m) + "," +
               std::to_string(r.successes) + "," + std::to_string(r.trials) + "\n";
    return out;
}

std::string mmin_csv_text(const std::vector<MminRow>& rows) {
    std::string out = "n,eps,inv_eps_sq,M_min,theoretical_M\n";
    for (const MminRow& r : rows) {
        double e = std::stod(r.eps);
        out += std::to_string(r.n) + "," + csv_real(e) + "," +
               csv_real(1.0 / (e * e)) + "," +
               (r.m_min ? std::to_string(*r.m_min) : std::string("CAP")) + "," +
               std::to_string(r.theoretical_m) + "\n";
    }
    return out;
}

namespace {

struct MminParsed {
    int n;
    double eps;
    std::optional<std::uint64_t> m_min;
    std::uint64_t theoretical_m;
};

std::vector<MminParsed> parse_mmin_csv(const std::string& text) {
    std::istringstream in(text);
    std::string line;
    if (!std::getline(in, line) ||
        trim(line) != "n,eps,inv_eps_sq,M_min,theoretical_M")
        throw std::invalid_argument("not an mmin.csv file");
    std::vector<MminParsed> rows;
    while (std::getline(in, line)) {
        std::string t = trim(line);
        if (t.empty()) continue;
        std::vector<std::string> f = split(t, ',');
        if (f.size() != 5) throw std::invalid_argument("malformed mmin.csv row");
        MminParsed r;
        r.n = std::stoi(f[0]);
        r.eps = std::stod(f[1]);
        if (trim(f[3]) != "CAP") r.m_min = std::stoull(f[3]);
        r.theoretical_m = std::stoull(f[4]);
        rows.push_back(r);
    }
    return rows;
}

}  // namespace

std::string plotdata_eps(const std::string& mmin_csv, int fixed_n) {
    std::vector<MminParsed> rows = parse_mmin_csv(mmin_csv);
    std::string out = "inv_eps_sq,M_min\n";
    bool found = false;
    for (const MminParsed& r : rows) {
        if (r.n != fixed_n) continue;
        found = true;
        if (!r.m_min) continue;
        out += csv_real(1.0 / (r.eps * r.eps)) + "," + std::to_string(*r.m_min) + "\n";
    }
    if (!found)
        throw std::invalid_argument("n=" + std::to_string(fixed_n) +
                                    " not present in mmin.csv");
    return out;
}

std::string plotdata_players(const std::string& mmin_csv,
                             const std::string& fixed_eps) {
    std::vector<MminParsed> rows = parse_mmin_csv(mmin_csv);
    double target = std::stod(fixed_eps);
    std::string out = "n,ln_M_min,ln_theoretical_M\n";
    bool found = false;
    for (const MminParsed& r : rows) {
        if (std::fabs(r.eps - target) > 1e-9) continue;
        found = true;
        if (!r.m_min) continue;
        out += std::to_string(r.n) + "," +
               csv_real(std::log(static_cast<double>(*r.m_min))) + "," +
               csv_real(std::log(static_cast<double>(r.theoretical_m))) + "\n";
    }
    if (!found)
        throw std::invalid_argument("eps=" + fixed_eps +
                                    " not present in mmin.csv");
    return out;
}

}  // namespace mcst
