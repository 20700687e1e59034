#include <doctest.h>

#include <cmath>
#include <sstream>
#include <tuple>

#include "mcst/experiment.hpp"
#include "mcst/game.hpp"

using namespace mcst;

TEST_CASE("rational_from_decimal is exact") {
    CHECK(rational_from_decimal("0.25") == Rational(1, 4));
    CHECK(rational_from_decimal("0.9") == Rational(9, 10));
    CHECK(rational_from_decimal("2") == Rational(2));
    CHECK(rational_from_decimal("-1.5") == Rational(-3, 2));
    CHECK_THROWS_AS(rational_from_decimal("x"), std::invalid_argument);
    CHECK_THROWS_AS(rational_from_decimal("1.2.3"), std::invalid_argument);
}

TEST_CASE("parse_weight_model") {
    WeightModel b = parse_weight_model("binary:0.3");
    CHECK(b.kind == WeightModel::Kind::Binary);
    CHECK(b.p == doctest::Approx(0.3));
    WeightModel u = parse_weight_model("uniform:2,9");
    CHECK(u.kind == WeightModel::Kind::UniformInt);
    CHECK(u.lo == 2);
    CHECK(u.hi == 9);
    CHECK_THROWS_AS(parse_weight_model("gauss:1"), std::invalid_argument);
}

TEST_CASE("parse_config applies defaults and overrides") {
    ExperimentConfig cfg = parse_config(
        "# protocol\n"
        "n_range = 3..5\n"
        "trials = 10\n"
        "master_seed = 42\n");
    CHECK(cfg.n_range == std::vector<int>{3, 4, 5});
    CHECK(cfg.trials == 10);
    CHECK(cfg.master_seed == 42);
    CHECK(cfg.eps_grid.size() == 9);
    CHECK(cfg.delta == "0.25");
    CHECK(cfg.m_step == 100);
    CHECK(cfg.instances_per_n == 3);

    CHECK_THROWS_AS(parse_config("bogus = 1\n"), std::invalid_argument);
    CHECK_THROWS_AS(parse_config("eps_grid = 0.1,0.9\n"), std::invalid_argument);
    CHECK_THROWS_AS(parse_config("delta = 1.5\n"), std::invalid_argument);
}

TEST_CASE("generate_nonnull_instance honors the predicate deterministically") {
    int attempts1 = 0, attempts2 = 0;
    RootedWeightedGraph a = generate_nonnull_instance(
        3, WeightModel::binary(0.5), 77, 1, &attempts1);
    RootedWeightedGraph b = generate_nonnull_instance(
        3, WeightModel::binary(0.5), 77, 1, &attempts2);
    CHECK(a == b);
    CHECK(attempts1 == attempts2);
    CHECK(!is_null_player(a, 1));

    // all-ones graphs make every player null; the cap must trip
    CHECK_THROWS_AS(generate_nonnull_instance(2, WeightModel::uniform_int(1, 1),
                                              5, 1, nullptr, 50),
                    std::runtime_error);
}

TEST_CASE("run_experiment on a small grid") {
    ExperimentConfig cfg;
    cfg.n_range = {3};
    cfg.eps_grid = {"0.9", "0.5", "0.3"};
    cfg.trials = 10;
    cfg.m_step = 100;
    cfg.m_cap = 20000;
    cfg.instances_per_n = 2;
    cfg.master_seed = 2024;
    cfg.workers = 4;

    ExperimentResult res = run_experiment(cfg);
    REQUIRE(res.mmin.size() == 3);

    std::uint64_t prev = 0;
    for (const MminRow& row : res.mmin) {
        REQUIRE(row.m_min.has_value());
        CHECK(*row.m_min % cfg.m_step == 0);
        CHECK(*row.m_min >= prev);  // smaller eps never needs fewer samples
        prev = *row.m_min;
        CHECK(row.theoretical_m >= *row.m_min);
    }

    // determinism of the whole pipeline
    ExperimentResult res2 = run_experiment(cfg);
    CHECK(success_csv_text(res.success) == success_csv_text(res2.success));
    CHECK(mmin_csv_text(res.mmin) == mmin_csv_text(res2.mmin));

    // success rows are sorted by (n, instance_id, eps, M)
    for (std::size_t i = 1; i < res.success.size(); ++i) {
        const SuccessRow& a = res.success[i - 1];
        const SuccessRow& b = res.success[i];
        auto key = [](const SuccessRow& r) {
            return std::tuple<int, int, double, std::uint64_t>(
                r.n, r.instance_id, std::stod(r.eps), r.m);
        };
        CHECK(key(a) < key(b));
    }
}

TEST_CASE("plotdata modes") {
    std::string mmin =
        "n,eps,inv_eps_sq,M_min,theoretical_M\n"
        "3,0.9,1.23456790123,100,185\n"
        "3,0.1,100,2300,14972\n"
        "4,0.1,100,9000,119288\n";

    std::string eps_mode = plotdata_eps(mmin, 3);
    CHECK(eps_mode ==
          "inv_eps_sq,M_min\n"
          "1.23456790123,100\n"
          "100,2300\n");
    CHECK_THROWS_AS(plotdata_eps(mmin, 7), std::invalid_argument);

    std::string players_mode = plotdata_players(mmin, "0.1");
    CHECK(players_mode.substr(0, 26) == "n,ln_M_min,ln_theoretical_");
    // ln(theoretical) strictly increases with n
    std::istringstream in(players_mode);
    std::string line;
    std::getline(in, line);
    double prev = -1;
    int rows = 0;
    while (std::getline(in, line)) {
        std::size_t last = line.rfind(',');
        double v = std::stod(line.substr(last + 1));
        CHECK(v > prev);
        prev = v;
        ++rows;
    }
    CHECK(rows == 2);
    CHECK_THROWS_AS(plotdata_players(mmin, "0.7"), std::invalid_argument);

    // ln(14972) reference point
    CHECK(std::fabs(std::log(14972.0) - 9.614) < 1e-3);
}

TEST_CASE("csv_real renders with 12 significant digits") {
    CHECK(csv_real(0.9) == "0.9");
    CHECK(csv_real(1.0 / 0.81) == "1.23456790123");
}
