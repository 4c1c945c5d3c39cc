#pragma once

#include <optional>
#include <string>
#include <vector>

#include "frarl/env.hpp"
#include "frarl/orchestrator.hpp"

namespace frarl {

struct ExperimentConfig {
    std::string env = "office";      // office | craft
    int task = 1;
    std::vector<int> seeds = {0, 1, 2, 3, 4, 5, 6, 7, 8, 9};
    long total_steps = 0;            // 0 = per-task default
    int eplength = 0;                // 0 = per-task default
    int budget_c = 500;
    double alpha = 0.1;
    double gamma = 0.9;
    double epsilon = 0.1;
    bool compress_empty = true;
    std::optional<std::string> map_path;
    std::string out_dir = "out";
    int workers = 0;                 // 0 = hardware concurrency

    /// Fills total_steps/eplength defaults for the env/task pair and
    /// validates fields; throws std::invalid_argument naming the field.
    void finalize();
};

struct SeedResult {
    int seed = 0;
    bool converged = false;
    long convergence_step = -1;
    int hypothesis_states = 0;
    long steps = 0;
};

struct ExperimentResult {
    std::vector<SeedResult> seeds;
    double optimal_step_reward = 0.0;  // optimum per-step reward for one episode
};

/// Builds the configured environment (default map or --map override).
GridWorld make_experiment_env(const ExperimentConfig& config);

/// Optimal expected per-step reward over one episode of the configured
/// length, from finite-horizon dynamic programming on the true product MDP.
double optimal_step_reward(const GridWorld& env, int eplength);

/// First step at which the trailing `window`-step average reward reaches
/// `threshold`; -1 if it never does.
long convergence_step(const std::vector<float>& rewards, int window, double threshold);

/// Runs one orchestrator per seed (bounded worker pool), writing
/// rewards_seed<k>.csv, hypothesis_seed<k>.dot/.fra and summary.csv into
/// out_dir. Returns per-seed convergence results.
ExperimentResult run_experiment(const ExperimentConfig& config);

/// Human-readable transition table of a serialized automaton file.
std::string inspect_automaton(const std::string& path);

}  // namespace frarl
