#include <catch2/catch_amalgamated.hpp>

#include "olec/experiment.hpp"
#include "olec/stats.hpp"
#include "olec/verify.hpp"

using namespace olec;

TEST_CASE("reports are byte-identical across reruns and thread counts") {
    ExperimentConfig cfg;
    cfg.generator = {GeneratorSpec::Kind::RandomRegular, 300, 12, 0, 0.0, OrderMode::UniformlyRandom};
    cfg.strategy = StrategyKind::Greedy;
    cfg.trials = 6;
    cfg.seed = 20240601;
    cfg.threads = 1;
    const std::string once = run_experiment(cfg).to_csv();
    const std::string twice = run_experiment(cfg).to_csv();
    REQUIRE(once == twice);
    cfg.threads = 4;
    const std::string threaded = run_experiment(cfg).to_csv();
    REQUIRE(once == threaded);
    REQUIRE(once.rfind("# schema=1\n", 0) == 0);
}

TEST_CASE("greedy experiment honors the 2*delta - 1 bound") {
    ExperimentConfig cfg;
    cfg.generator = {GeneratorSpec::Kind::RandomRegular, 2000, 16, 0, 0.0, OrderMode::UniformlyRandom};
    cfg.strategy = StrategyKind::Greedy;
    cfg.trials = 5;
    cfg.seed = 99;
    const Report report = run_experiment(cfg);
    int seen = 0;
    for (const auto& row : report.rows) {
        if (row.scope == "trial" && row.metric == "colors_used") {
            REQUIRE(row.value <= 31.0);
            ++seen;
        }
    }
    REQUIRE(seen == 5);
}

TEST_CASE("matcher experiment pools the match frequency near 1/C") {
    ExperimentConfig cfg;
    cfg.generator = {GeneratorSpec::Kind::RandomTree, 100, 0, 0, 0.0, OrderMode::UniformlyRandom};
    cfg.strategy = StrategyKind::Matcher;
    cfg.trials = 2000;
    cfg.seed = 7;
    cfg.fix_graph = true;
    cfg.threads = 4;
    const Report report = run_experiment(cfg);
    const double C = report.find("trial", "matcher_C").value();
    const double freq = report.find("aggregate", "pooled_match_frequency").value();
    const double edges = report.find("trial", "edges").value();
    const long long pooled = static_cast<long long>(edges) * cfg.trials;
    REQUIRE(std::abs(freq - 1.0 / C) <= 4.0 * binomial_sigma(1.0 / C, pooled));
}

TEST_CASE("experiments run every strategy end to end") {
    for (StrategyKind strat : {StrategyKind::Greedy, StrategyKind::Cascade,
                               StrategyKind::TreeColoring, StrategyKind::Pipeline,
                               StrategyKind::BlankEps}) {
        ExperimentConfig cfg;
        cfg.generator = {GeneratorSpec::Kind::RandomRegular, 120, 36, 0, 0.0,
                         OrderMode::UniformlyRandom};
        cfg.strategy = strat;
        cfg.trials = 2;
        cfg.seed = 1234;
        if (strat == StrategyKind::Pipeline) cfg.params.delta_prime = 6;
        const Report report = run_experiment(cfg);
        REQUIRE(report.find("aggregate", "colors_used_mean").has_value());
    }
}

TEST_CASE("cycle metric reports on demand") {
    ExperimentConfig cfg;
    cfg.generator = {GeneratorSpec::Kind::RandomTree, 60, 0, 0, 0.0, OrderMode::AsGenerated};
    cfg.strategy = StrategyKind::Greedy;
    cfg.trials = 1;
    cfg.seed = 5;
    cfg.cycle_metric = true;
    cfg.params.g = 2;
    const Report report = run_experiment(cfg);
    REQUIRE(report.find("trial", "cycle_g2_frequency").value() == 0.0);
}

TEST_CASE("unknown verify suite is a usage error") {
    REQUIRE_THROWS_AS(verify_suite("nope"), std::invalid_argument);
    REQUIRE(verify_suite_names().size() == 5);
}

TEST_CASE("json report mirrors the csv rows") {
    ExperimentConfig cfg;
    cfg.generator = {GeneratorSpec::Kind::Path, 10, 0, 0, 0.0, OrderMode::AsGenerated};
    cfg.strategy = StrategyKind::Greedy;
    cfg.trials = 1;
    cfg.seed = 3;
    const Report report = run_experiment(cfg);
    const std::string json = report.to_json();
    REQUIRE(json.find("\"schema\":1") != std::string::npos);
    REQUIRE(json.find("colors_used") != std::string::npos);
}
