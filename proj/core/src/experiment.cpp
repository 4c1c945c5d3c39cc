#include "frarl/experiment.hpp"

#include <atomic>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <mutex>
#include <sstream>
#include <thread>

#include "frarl/oracle.hpp"

namespace frarl {

namespace fs = std::filesystem;

void ExperimentConfig::finalize() {
    struct Defaults {
        int eplength;
        long total_steps;
    };
    Defaults d;
    if (env == "office") {
        switch (task) {
            case 1: d = {200, 1000000}; break;
            case 2: d = {800, 2000000}; break;
            case 3: d = {800, 6000000}; break;
            default: throw std::invalid_argument("task: office tasks are 1, 2, 3");
        }
    } else if (env == "craft") {
        switch (task) {
            case 1: d = {400, 400000}; break;
            case 2: d = {400, 250000}; break;
            default: throw std::invalid_argument("task: craft tasks are 1, 2");
        }
    } else {
        throw std::invalid_argument("env: must be 'office' or 'craft'");
    }
    if (eplength == 0) eplength = d.eplength;
    if (total_steps == 0) total_steps = d.total_steps;
    if (eplength < 0) throw std::invalid_argument("eplength: must be positive");
    if (total_steps < 0) throw std::invalid_argument("total-steps: must be positive");
    if (budget_c < 0) throw std::invalid_argument("budget-c: must be nonnegative");
    if (seeds.empty()) throw std::invalid_argument("seeds: at least one seed required");
    if (!(alpha > 0.0 && alpha <= 1.0)) throw std::invalid_argument("alpha: must be in (0,1]");
    if (!(gamma > 0.0 && gamma < 1.0)) throw std::invalid_argument("gamma: must be in (0,1)");
    if (!(epsilon >= 0.0 && epsilon <= 1.0))
        throw std::invalid_argument("epsilon: must be in [0,1]");
    if (workers < 0) throw std::invalid_argument("workers: must be nonnegative");
}

GridWorld make_experiment_env(const ExperimentConfig& config) {
    std::optional<GridSpec> spec;
    if (config.map_path) {
        std::ifstream in(*config.map_path);
        if (!in) throw std::runtime_error("cannot open map file: " + *config.map_path);
        std::stringstream buf;
        buf << in.rdbuf();
        spec = load_grid_config(buf.str());
    }
    return config.env == "office" ? make_office_world(config.task, std::move(spec))
                                  : make_craft_world(config.task, std::move(spec));
}

double optimal_step_reward(const GridWorld& env, int eplength) {
    ExplicitMdp m = product_mdp(env, env.task_fra());
    return finite_horizon_value(m, eplength) / eplength;
}

long convergence_step(const std::vector<float>& rewards, int window, double threshold) {
    long n = static_cast<long>(rewards.size());
    double sum = 0.0;
    for (long i = 0; i < n; ++i) {
        sum += rewards[i];
        if (i >= window) sum -= rewards[i - window];
        if (i >= window - 1 && sum / window >= threshold) return i + 1;  // 1-based step
    }
    return -1;
}

namespace {

std::string fmt(double v) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.6g", v);
    return buf;
}

SeedResult run_seed(const ExperimentConfig& config, int seed, double opt) {
    GridWorld env = make_experiment_env(config);

    fs::path dir(config.out_dir);
    std::ofstream csv(dir / ("rewards_seed" + std::to_string(seed) + ".csv"),
                      std::ios::binary);
    if (!csv) throw std::runtime_error("cannot write to out dir: " + config.out_dir);
    csv << "step,reward,avg10,phase,hyp_states\n";

    std::vector<float> rewards;
    rewards.reserve(config.total_steps);
    double window10 = 0.0;

    TrainerConfig tc;
    tc.hp.alpha = config.alpha;
    tc.hp.gamma = config.gamma;
    tc.hp.epsilon = config.epsilon;
    tc.hp.eplength = config.eplength;
    tc.budget_c = config.budget_c;
    tc.total_steps = config.total_steps;
    tc.compress_empty = config.compress_empty;

    ActiveTrainer trainer(env, tc, static_cast<std::uint64_t>(seed), [&](const StepRecord& rec) {
        rewards.push_back(static_cast<float>(rec.reward));
        window10 += rec.reward;
        if (rewards.size() > 10) window10 -= rewards[rewards.size() - 11];
        double avg10 = window10 / std::min<std::size_t>(rewards.size(), 10);
        csv << rec.step << "," << fmt(rec.reward) << "," << fmt(avg10) << ","
            << phase_name(rec.phase) << "," << rec.hypothesis_states << "\n";
    });
    TrainResult tr = trainer.run();

    std::ofstream dot(dir / ("hypothesis_seed" + std::to_string(seed) + ".dot"),
                      std::ios::binary);
    dot << fra_to_dot(tr.hypothesis);
    std::ofstream fra(dir / ("hypothesis_seed" + std::to_string(seed) + ".fra"),
                      std::ios::binary);
    fra << fra_to_text(tr.hypothesis);

    SeedResult res;
    res.seed = seed;
    res.convergence_step = convergence_step(rewards, 1000, 0.95 * opt);
    res.converged = res.convergence_step >= 0;
    res.hypothesis_states = tr.hypothesis.num_states();
    res.steps = tr.steps;
    return res;
}

}  // namespace

ExperimentResult run_experiment(const ExperimentConfig& config_in) {
    ExperimentConfig config = config_in;
    config.finalize();

    std::error_code ec;
    fs::create_directories(config.out_dir, ec);
    if (ec) throw std::runtime_error("cannot create out dir: " + config.out_dir);

    ExperimentResult result;
    {
        GridWorld env = make_experiment_env(config);
        result.optimal_step_reward = optimal_step_reward(env, config.eplength);
    }

    result.seeds.resize(config.seeds.size());
    unsigned workers = config.workers > 0 ? static_cast<unsigned>(config.workers)
                                          : std::max(1u, std::thread::hardware_concurrency());
    workers = std::min<unsigned>(workers, config.seeds.size());

    std::atomic<std::size_t> next{0};
    std::vector<std::thread> pool;
    std::atomic<bool> failed{false};
    std::string error_message;
    std::mutex error_mutex;
    for (unsigned i = 0; i < workers; ++i) {
        pool.emplace_back([&] {
            for (;;) {
                std::size_t idx = next.fetch_add(1);
                if (idx >= config.seeds.size() || failed) break;
                try {
                    result.seeds[idx] =
                        run_seed(config, config.seeds[idx], result.optimal_step_reward);
                } catch (const std::exception& e) {
                    std::lock_guard lock(error_mutex);
                    error_message = e.what();
                    failed = true;
                }
            }
        });
    }
    for (auto& t : pool) t.join();
    if (failed) throw std::runtime_error(error_message);

    std::ofstream summary(fs::path(config.out_dir) / "summary.csv", std::ios::binary);
    summary << "seed,converged,convergence_step,hyp_states,optimal_step_reward\n";
    for (const auto& s : result.seeds)
        summary << s.seed << "," << (s.converged ? 1 : 0) << "," << s.convergence_step << ","
                << s.hypothesis_states << "," << fmt(result.optimal_step_reward) << "\n";
    return result;
}

std::string inspect_automaton(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open automaton file: " + path);
    std::stringstream buf;
    buf << in.rdbuf();
    Fra a = fra_from_text(buf.str());

    std::ostringstream os;
    os << "states:  " << a.num_states() << "\n";
    os << "initial: w" << a.initial() << "\n";
    os << "labels: ";
    for (const auto& l : a.input_alphabet()) os << " " << l.str();
    os << "\n";
    os << "rewards:";
    for (const auto& r : a.reward_alphabet()) os << " " << r.str();
    os << "\n\n";
    os << "state  label  next  reward\n";
    for (int s = 0; s < a.num_states(); ++s)
        for (const auto& l : a.input_alphabet())
            os << "w" << s << "  " << l.str() << "  w" << a.delta(s, l) << "  "
               << a.eta(s, l).str() << "\n";
    return os.str();
}

}  // namespace frarl
