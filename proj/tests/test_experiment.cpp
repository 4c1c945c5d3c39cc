#include <doctest.h>

#include <filesystem>
#include <fstream>
#include <random>
#include <sstream>

#include "frarl/experiment.hpp"
#include "helpers.hpp"

using namespace frarl;
using namespace frarl::test;

namespace fs = std::filesystem;

namespace {

std::string slurp(const fs::path& p) {
    std::ifstream in(p, std::ios::binary);
    REQUIRE(in);
    std::stringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

std::vector<std::vector<std::string>> read_csv(const fs::path& p) {
    std::vector<std::vector<std::string>> rows;
    std::istringstream is(slurp(p));
    std::string line;
    while (std::getline(is, line)) {
        std::vector<std::string> fields;
        std::istringstream ls(line);
        std::string field;
        while (std::getline(ls, field, ',')) fields.push_back(field);
        rows.push_back(std::move(fields));
    }
    return rows;
}

// Reference implementation: first 1-based step whose trailing window average
// clears the threshold.
long brute_convergence(const std::vector<float>& rewards, int window, double threshold) {
    long n = static_cast<long>(rewards.size());
    for (long t = window; t <= n; ++t) {
        double sum = 0.0;
        for (long i = t - window; i < t; ++i) sum += rewards[i];
        if (sum / window >= threshold) return t;
    }
    return -1;
}

// Small deterministic map where the office sequence a,b,a,c is walkable:
// a four-cell corridor with one landmark per cell after the start.
const char* kTinyMap = R"({
  "width": 4, "height": 1, "initial": [0, 0], "slip": 0.0,
  "landmarks": [
    {"cell": [0, 1], "prop": "a"},
    {"cell": [0, 2], "prop": "b"},
    {"cell": [0, 3], "prop": "c"}
  ]
})";

ExperimentConfig tiny_config(const fs::path& dir) {
    fs::create_directories(dir);
    std::ofstream map(dir / "map.json");
    map << kTinyMap;
    map.close();

    ExperimentConfig cfg;
    cfg.env = "office";
    cfg.task = 1;
    cfg.seeds = {0, 1};
    cfg.eplength = 50;
    cfg.total_steps = 20000;
    cfg.map_path = (dir / "map.json").string();
    cfg.out_dir = (dir / "out").string();
    cfg.workers = 2;
    return cfg;
}

}  // namespace

TEST_CASE("config defaults depend on the env and task") {
    ExperimentConfig cfg;
    cfg.finalize();
    CHECK(cfg.eplength == 200);
    CHECK(cfg.total_steps == 1000000);

    cfg = {};
    cfg.task = 3;
    cfg.finalize();
    CHECK(cfg.eplength == 800);
    CHECK(cfg.total_steps == 6000000);

    cfg = {};
    cfg.env = "craft";
    cfg.finalize();
    CHECK(cfg.eplength == 400);
    CHECK(cfg.total_steps == 400000);

    cfg = {};
    cfg.env = "craft";
    cfg.task = 2;
    cfg.finalize();
    CHECK(cfg.total_steps == 250000);

    // Explicit values survive finalize.
    cfg = {};
    cfg.eplength = 123;
    cfg.total_steps = 456;
    cfg.finalize();
    CHECK(cfg.eplength == 123);
    CHECK(cfg.total_steps == 456);
}

TEST_CASE("config validation names the broken field") {
    ExperimentConfig cfg;
    cfg.env = "desert";
    CHECK_THROWS_WITH_AS(cfg.finalize(), doctest::Contains("env"), std::invalid_argument);

    cfg = {};
    cfg.task = 9;
    CHECK_THROWS_WITH_AS(cfg.finalize(), doctest::Contains("task"), std::invalid_argument);

    cfg = {};
    cfg.seeds = {};
    CHECK_THROWS_WITH_AS(cfg.finalize(), doctest::Contains("seeds"), std::invalid_argument);

    cfg = {};
    cfg.alpha = 0.0;
    CHECK_THROWS_WITH_AS(cfg.finalize(), doctest::Contains("alpha"), std::invalid_argument);

    cfg = {};
    cfg.gamma = 1.5;
    CHECK_THROWS_WITH_AS(cfg.finalize(), doctest::Contains("gamma"), std::invalid_argument);
}

TEST_CASE("convergence step matches a brute-force reference") {
    std::vector<float> flat(1500, 1.0f);
    CHECK(convergence_step(flat, 1000, 0.95) == 1000);
    CHECK(convergence_step(std::vector<float>(500, 1.0f), 1000, 0.95) == -1);
    CHECK(convergence_step(std::vector<float>(1500, 0.0f), 1000, 0.5) == -1);

    std::vector<float> late(2000, 0.0f);
    for (std::size_t i = 1000; i < late.size(); ++i) late[i] = 1.0f;
    // The trailing window is clean only once it contains no zeros.
    CHECK(convergence_step(late, 1000, 0.95) == brute_convergence(late, 1000, 0.95));
    CHECK(convergence_step(late, 1000, 0.95) > 1000);

    std::mt19937 rng(77);
    std::bernoulli_distribution coin(0.7);
    for (int trial = 0; trial < 50; ++trial) {
        std::vector<float> rewards(40);
        for (auto& r : rewards) r = coin(rng) ? 1.0f : 0.0f;
        CHECK(convergence_step(rewards, 5, 0.6) == brute_convergence(rewards, 5, 0.6));
    }
}

TEST_CASE("optimal step reward uses the episode-length optimum") {
    GridWorld env = make_corridor_world(3);
    // One unit of reward is attainable per episode regardless of length.
    CHECK(optimal_step_reward(env, 10) == doctest::Approx(0.1));
    CHECK(optimal_step_reward(env, 2) == doctest::Approx(0.5));
}

TEST_CASE("experiment runs write complete deterministic artifacts") {
    fs::path base = fs::temp_directory_path() / "frarl_test_experiment";
    fs::remove_all(base);
    ExperimentConfig cfg = tiny_config(base / "run1");
    ExperimentResult res = run_experiment(cfg);
    REQUIRE(res.seeds.size() == 2);
    CHECK(res.optimal_step_reward > 0.0);

    for (int seed : {0, 1}) {
        fs::path csv = fs::path(cfg.out_dir) / ("rewards_seed" + std::to_string(seed) + ".csv");
        auto rows = read_csv(csv);
        REQUIRE(rows.size() == static_cast<std::size_t>(cfg.total_steps) + 1);
        CHECK(rows[0] ==
              std::vector<std::string>{"step", "reward", "avg10", "phase", "hyp_states"});
        // Steps count up from 1; avg10 is the trailing 10-step mean.
        double window = 0.0;
        std::vector<double> rewards;
        for (std::size_t i = 1; i < rows.size(); ++i) {
            REQUIRE(rows[i].size() == 5);
            CHECK(rows[i][0] == std::to_string(i));
            double r = std::stod(rows[i][1]);
            rewards.push_back(r);
            window += r;
            if (rewards.size() > 10) window -= rewards[rewards.size() - 11];
            double avg10 = window / std::min<std::size_t>(rewards.size(), 10);
            CHECK(std::stod(rows[i][2]) == doctest::Approx(avg10).epsilon(1e-4));
            CHECK((rows[i][3] == "bootstrap" || rows[i][3] == "membership" ||
                   rows[i][3] == "equivalence"));
        }
        CHECK(fs::exists(fs::path(cfg.out_dir) / ("hypothesis_seed" + std::to_string(seed) + ".dot")));
        fs::path fra = fs::path(cfg.out_dir) / ("hypothesis_seed" + std::to_string(seed) + ".fra");
        REQUIRE(fs::exists(fra));
        CHECK_NOTHROW(fra_from_text(slurp(fra)));
    }

    auto summary = read_csv(fs::path(cfg.out_dir) / "summary.csv");
    REQUIRE(summary.size() == 3);
    CHECK(summary[0][0] == "seed");
    CHECK(summary[1][0] == "0");
    CHECK(summary[2][0] == "1");

    // Same config and seeds again: byte-identical outputs.
    ExperimentConfig cfg2 = tiny_config(base / "run2");
    run_experiment(cfg2);
    for (const char* name : {"rewards_seed0.csv", "rewards_seed1.csv", "summary.csv"})
        CHECK(slurp(fs::path(cfg.out_dir) / name) == slurp(fs::path(cfg2.out_dir) / name));
    CHECK(slurp(fs::path(cfg.out_dir) / "hypothesis_seed0.fra") ==
          slurp(fs::path(cfg2.out_dir) / "hypothesis_seed0.fra"));
    fs::remove_all(base);
}

TEST_CASE("automaton files can be inspected") {
    fs::path dir = fs::temp_directory_path() / "frarl_test_inspect";
    fs::create_directories(dir);
    Fra task = make_sequence_fra(letters("ab"), letters("ab"), false);
    std::ofstream out(dir / "task.fra");
    out << fra_to_text(task);
    out.close();

    std::string report = inspect_automaton((dir / "task.fra").string());
    CHECK(report.find("states:  3") != std::string::npos);
    CHECK(report.find("initial: w0") != std::string::npos);
    CHECK(report.find("w1  b  w2  1") != std::string::npos);
    CHECK_THROWS_AS(inspect_automaton((dir / "missing.fra").string()), std::runtime_error);
    fs::remove_all(dir);
}
