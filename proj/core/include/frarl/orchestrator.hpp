#pragma once

#include <functional>
#include <optional>
#include <unordered_map>

#include "frarl/env.hpp"
#include "frarl/fra.hpp"
#include "frarl/obs_table.hpp"
#include "frarl/qlearn.hpp"
#include "frarl/samples.hpp"

namespace frarl {

enum class Phase { kBootstrap, kMembership, kEquivalence };

inline const char* phase_name(Phase p) {
    switch (p) {
        case Phase::kBootstrap: return "bootstrap";
        case Phase::kMembership: return "membership";
        default: return "equivalence";
    }
}

struct StepRecord {
    long step;            // cumulative environment steps, 1-based
    double reward;        // environment reward attained at this step
    Phase phase;
    int hypothesis_states;
};

using MetricsSink = std::function<void(const StepRecord&)>;

struct TrainerConfig {
    Hyperparams hp;
    int budget_c = 500;            // episode budget per membership query
    long total_steps = 100000;     // global environment-step budget
    bool compress_empty = true;    // drop (empty label, 0) steps from traces
    int bootstrap_episode_cap = 20000;
};

struct TrainResult {
    Fra hypothesis = Fra::constant_zero();
    QTable q_h;
    long steps = 0;
    int counterexamples = 0;
    int membership_queries_rl = 0;   // answered by environment interaction
    int membership_queries_cached = 0;
};

/// Returns the shortest prefix of the trace on which the hypothesis's
/// predicted rewards disagree with the observed ones, if any. Labels the
/// hypothesis does not know predict reward 0.
std::optional<Trace> find_counterexample(const Trace& trace, const Fra& hypothesis);

/// Drops steps whose label is empty and reward is 0.
Trace compress_trace(const Trace& trace);

/// Runs the full active inference + RL loop on one environment.
class ActiveTrainer {
public:
    ActiveTrainer(Environment& env, TrainerConfig config, std::uint64_t seed,
                  MetricsSink sink = {});

    TrainResult run();

private:
    Trace observe(const Trace& raw) const;
    bool budget_left() const { return steps_ < cfg_.total_steps; }

    std::optional<Trace> bootstrap();
    // Returns true if a table flip occurred (outer loop must regenerate chi).
    bool mquery(const std::vector<Word>& chi);
    std::optional<Trace> equery();
    void repair_table();

    Environment& env_;
    TrainerConfig cfg_;
    Rng rng_;
    MetricsSink sink_;

    ObservationTable table_;
    SampleStore store_;
    Fra hypothesis_;
    QTable q_h_;
    std::unordered_map<Word, QTable> q_m_store_;
    long steps_ = 0;
    Phase phase_ = Phase::kBootstrap;
    TrainResult result_;
};

}  // namespace frarl
