#pragma once

#include <vector>

#include "frarl/dfa.hpp"
#include "frarl/env.hpp"
#include "frarl/fra.hpp"
#include "frarl/lstar.hpp"

namespace frarl {

/// Explicit finite MDP with list-of-successors transition representation.
struct ExplicitMdp {
    int num_states = 0;
    int num_actions = 0;
    int initial = 0;
    // [state][action] -> (successor, probability, reward) triples; per-row
    // probabilities sum to 1 and zero-probability entries never appear.
    struct Arc {
        int next;
        double prob;
        double reward;
    };
    std::vector<std::vector<std::vector<Arc>>> arcs;
};

/// Synchronous product of the grid world's analytic model and a reward
/// automaton: states are (cell, automaton state), rewards from the
/// automaton's output function. Product state id = cell * |W| + w.
ExplicitMdp product_mdp(const GridWorld& env, const Fra& a);

struct ValueIterationResult {
    std::vector<double> values;
    std::vector<int> policy;  // greedy, smallest-index tie-break
    int sweeps = 0;
};

/// Discounted value iteration to sup-norm Bellman residual < tol.
ValueIterationResult value_iteration(const ExplicitMdp& m, double gamma, double tol);

/// Optimal expected total (undiscounted) reward over a `horizon`-step episode
/// starting from the initial state, by backward dynamic programming.
double finite_horizon_value(const ExplicitMdp& m, int horizon);

/// Expected total reward of the greedy policy of q over one episode of the
/// given horizon, evaluated on the explicit model. Ties in q break toward
/// the smallest action index.
double policy_value(const ExplicitMdp& m, const std::vector<int>& policy, double gamma,
                    double tol);

/// All distinct traces of length <= max_len with strictly positive path
/// probability, rewards produced by the environment's concealed automaton.
/// Throws std::runtime_error if more than `limit` label sequences appear.
std::vector<Trace> enumerate_attainable_traces(const GridWorld& env, int max_len,
                                               std::size_t limit = 200000);

/// Episode length bound above which learning all attainable sequences is
/// almost sure in the limit: 2^(|M|+1) * (|A|+1) - 1.
long min_episode_length(int mdp_states, int fra_states);

/// Exact L* teacher backed by a known target automaton: membership via the
/// converted DFA, equivalence via shortest distinguishing word (BFS product).
class ExactTeacher : public Teacher {
public:
    explicit ExactTeacher(const Fra& target);

    bool membership(const Word& word) override;
    std::optional<Word> counterexample(const Fra& hypothesis) override;

    const Dfa& target_dfa() const { return target_dfa_; }

private:
    Dfa target_dfa_;
};

}  // namespace frarl
