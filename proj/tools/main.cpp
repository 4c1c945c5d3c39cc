#include <CLI11.hpp>

#include <iostream>

#include "frarl/experiment.hpp"

int main(int argc, char** argv) {
    CLI::App app{"Active reward-automaton inference and tabular Q-learning"};
    app.require_subcommand(1);

    frarl::ExperimentConfig config;
    std::string seeds_csv = "0,1,2,3,4,5,6,7,8,9";
    std::string map_path;

    auto* run = app.add_subcommand("run", "Run a multi-seed experiment");
    run->add_option("--env", config.env, "Environment: office | craft")
        ->check(CLI::IsMember({"office", "craft"}));
    run->add_option("--task", config.task, "Task id");
    run->add_option("--seeds", seeds_csv, "Comma-separated seed list");
    run->add_option("--total-steps", config.total_steps, "Global environment-step budget");
    run->add_option("--eplength", config.eplength, "Episode length in steps");
    run->add_option("--alpha", config.alpha, "Learning rate");
    run->add_option("--gamma", config.gamma, "Discount factor");
    run->add_option("--epsilon", config.epsilon, "Exploration rate");
    run->add_option("--budget-c", config.budget_c, "Episode budget per membership query");
    run->add_option("--map", map_path, "Grid config JSON overriding the default map");
    run->add_option("--out", config.out_dir, "Output directory");
    run->add_option("--workers", config.workers, "Worker threads (0 = hardware)");
    run->add_flag_callback("--no-compress-empty",
                           [&] { config.compress_empty = false; },
                           "Keep unlabeled zero-reward steps in inference traces");

    std::string inspect_path;
    auto* inspect = app.add_subcommand("inspect", "Render a serialized automaton file");
    inspect->add_option("path", inspect_path, "Automaton file")->required();

    CLI11_PARSE(app, argc, argv);

    try {
        if (run->parsed()) {
            config.seeds.clear();
            for (const auto& tok : CLI::detail::split(seeds_csv, ','))
                config.seeds.push_back(std::stoi(tok));
            if (!map_path.empty()) config.map_path = map_path;
            auto result = frarl::run_experiment(config);
            std::cout << "optimal per-step reward: " << result.optimal_step_reward << "\n";
            for (const auto& s : result.seeds) {
                std::cout << "seed " << s.seed << ": "
                          << (s.converged ? "converged at step " +
                                                std::to_string(s.convergence_step)
                                          : "did not converge")
                          << ", hypothesis states " << s.hypothesis_states << "\n";
            }
        } else if (inspect->parsed()) {
            std::cout << frarl::inspect_automaton(inspect_path);
        }
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 0;
}
