#pragma once

#include <iosfwd>
#include <optional>
#include <unordered_map>
#include <utility>
#include <vector>

#include "frarl/types.hpp"

namespace frarl {

/// A finite reward automaton: a Mealy machine with label inputs and a finite
/// set of reward outputs. delta and eta are total over states x alphabet.
class Fra {
public:
    // Builder-style construction: add states first, then transitions.
    Fra(std::vector<Label> input_alphabet, std::vector<RewardValue> reward_alphabet,
        int num_states, int initial);

    int num_states() const { return static_cast<int>(delta_.size()); }
    int initial() const { return initial_; }
    const std::vector<Label>& input_alphabet() const { return input_alphabet_; }
    const std::vector<RewardValue>& reward_alphabet() const { return reward_alphabet_; }

    bool has_label(const Label& l) const { return label_index_.count(l) > 0; }

    void set_transition(int state, const Label& l, int next, RewardValue reward);

    int delta(int state, const Label& l) const;
    RewardValue eta(int state, const Label& l) const;

    // Transition that is total over *all* labels: labels outside the input
    // alphabet self-loop with reward 0. Used when driving the automaton with
    // raw environment labels.
    std::pair<int, RewardValue> step_total(int state, const Label& l) const;

    /// Runs the automaton on a label sequence, returning the reward sequence.
    /// Labels outside the input alphabet raise std::invalid_argument.
    std::vector<RewardValue> run(const std::vector<Label>& labels) const;

    /// Like run() but with self-loop/reward-0 semantics on unknown labels.
    std::vector<RewardValue> run_total(const std::vector<Label>& labels) const;

    /// The trivial single-state automaton emitting reward 0 on everything.
    static Fra constant_zero(std::vector<Label> input_alphabet = {});

private:
    int label_index(const Label& l) const;

    std::vector<Label> input_alphabet_;
    std::vector<RewardValue> reward_alphabet_;
    std::unordered_map<Label, int> label_index_;
    int initial_;
    std::vector<std::vector<int>> delta_;          // [state][label] -> state
    std::vector<std::vector<RewardValue>> eta_;    // [state][label] -> reward
};

/// Builds the query automaton for a membership trace: k+1 states, reward 1 on
/// each transition advancing along the trace's label sequence, 0 elsewhere,
/// final state absorbing with reward 0.
Fra build_query_fra(const Trace& zeta);

/// Builds a prefix-tree automaton reproducing every trace's rewards exactly.
/// Labels unseen at a node self-loop with reward 0. Throws
/// std::invalid_argument naming the conflicting pair if two traces share a
/// label prefix but disagree on its rewards.
Fra build_prefix_tree_fra(const std::vector<Trace>& traces);

/// The grid {r_min + n*eps : 0 <= n, r_min + n*eps <= r_max}, ascending.
std::vector<RewardValue> quantize_rewards(double r_min, double r_max, double eps);

/// Nearest grid point to r; ties break toward the smaller value.
RewardValue nearest_reward(const std::vector<RewardValue>& grid, double r);

/// DOT digraph with one "label/reward" edge per (state, label).
std::string fra_to_dot(const Fra& a);

/// Stable line-oriented text serialization (diff-friendly field order).
std::string fra_to_text(const Fra& a);
Fra fra_from_text(const std::string& text);  // throws ParseError

}  // namespace frarl
