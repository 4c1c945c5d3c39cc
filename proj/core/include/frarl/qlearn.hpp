#pragma once

#include <cstdint>
#include <functional>
#include <random>
#include <unordered_map>
#include <vector>

#include "frarl/fra.hpp"
#include "frarl/types.hpp"

namespace frarl {

using Rng = std::mt19937_64;

struct Hyperparams {
    double alpha = 0.1;      // learning rate, (0, 1]
    double gamma = 0.9;      // discount, (0, 1)
    double epsilon = 0.1;    // exploration rate, [0, 1]
    int eplength = 100;      // steps per episode

    void validate() const;
};

/// Sparse tabular q-function over (env state, automaton state, action).
/// Unvisited triples read as default_value.
class QTable {
public:
    explicit QTable(double default_value = 0.0) : default_value_(default_value) {}

    double get(int x, int w, int a) const {
        auto it = values_.find(key(x, w, a));
        return it == values_.end() ? default_value_ : it->second;
    }
    void set(int x, int w, int a, double v) { values_[key(x, w, a)] = v; }

    double max_over_actions(int x, int w, int num_actions) const {
        double best = get(x, w, 0);
        for (int a = 1; a < num_actions; ++a) best = std::max(best, get(x, w, a));
        return best;
    }

    double default_value() const { return default_value_; }
    std::size_t visited_count() const { return values_.size(); }

    /// Tab-separated (x, w, a, value) rows, key-sorted.
    std::string dump_tsv() const;

private:
    static std::uint64_t key(int x, int w, int a) {
        return (static_cast<std::uint64_t>(x) << 24) |
               (static_cast<std::uint64_t>(w) << 8) | static_cast<std::uint64_t>(a);
    }
    double default_value_;
    std::unordered_map<std::uint64_t, double> values_;
};

struct StepOutcome {
    int next_state;
    Label label;
    RewardValue reward;  // hidden task reward observed from the environment
};

/// A labeled MDP the agent interacts with. The observable state is an
/// integer id; any non-Markovian reward structure stays hidden inside.
class Environment {
public:
    virtual ~Environment() = default;
    virtual int reset() = 0;
    virtual StepOutcome step(int action, Rng& rng) = 0;
    virtual int num_states() const = 0;
    virtual int num_actions() const = 0;
};

/// With probability eps a uniform action, otherwise an argmax action of
/// q(x, w, .) with uniform random tie-breaking.
int epsilon_greedy_action(const QTable& q, int x, int w, int num_actions, double eps, Rng& rng);

/// q(x,w,a) <- (1-alpha) q(x,w,a) + alpha (r + gamma max_a' q(x',w',a')).
void q_update(QTable& q, int x, int w, int a, double r, int x2, int w2, int num_actions,
              double alpha, double gamma);

enum class QueryKind { kMembership, kEquivalence };

struct EngineStep {
    int x;                    // next environment state
    int w;                    // next automaton state
    Label label;              // emitted label
    RewardValue env_reward;   // reward observed from the environment
};

/// One step of Q-learning on the product space. In membership mode the
/// update reward comes from the automaton, in equivalence mode from the
/// environment. Counterfactual updates run for every other automaton state
/// with rewards from the automaton in both modes.
EngineStep engine_step(QueryKind kind, const Fra& a, QTable& q, int x, int w, Environment& env,
                       const Hyperparams& hp, Rng& rng);

using StepCallback = std::function<void(const EngineStep&)>;

/// Runs exactly hp.eplength steps from a fresh episode; the returned trace
/// records the environment-observed rewards (not the automaton's).
Trace run_episode(QueryKind kind, const Fra& a, QTable& q, Environment& env,
                  const Hyperparams& hp, Rng& rng, const StepCallback& on_step = {});

}  // namespace frarl
