#pragma once

#include <functional>
#include <map>
#include <random>
#include <string>
#include <vector>

#include "frarl/dfa.hpp"
#include "frarl/fra.hpp"

namespace frarl::test {

inline std::vector<Label> letters(const std::string& props) {
    std::vector<Label> out;
    for (char p : props) out.push_back(Label(std::string(1, p)));
    return out;
}

inline Label lbl(char p) { return Label(std::string(1, p)); }

inline Trace make_trace(const std::string& props, const std::vector<int>& rewards) {
    Trace t;
    for (std::size_t i = 0; i < props.size(); ++i)
        t.push_back(lbl(props[i]), RewardValue::from_int(rewards[i]));
    return t;
}

/// Uniformly random total FRA with the given state bound and alphabets.
inline Fra random_fra(std::mt19937_64& rng, int max_states, const std::vector<Label>& labels,
                      const std::vector<RewardValue>& rewards) {
    std::uniform_int_distribution<int> nstates(1, max_states);
    int n = nstates(rng);
    Fra a(labels, rewards, n, 0);
    std::uniform_int_distribution<int> state(0, n - 1);
    std::uniform_int_distribution<std::size_t> reward(0, rewards.size() - 1);
    for (int s = 0; s < n; ++s)
        for (const auto& l : labels) a.set_transition(s, l, state(rng), rewards[reward(rng)]);
    return a;
}

/// All words of length exactly `len` over the alphabet, lexicographic.
inline void enumerate_words(const std::vector<Symbol>& alphabet, int len,
                            const std::function<void(const Word&)>& visit) {
    Word w(len);
    std::function<void(int)> rec = [&](int pos) {
        if (pos == len) {
            visit(w);
            return;
        }
        for (const auto& sym : alphabet) {
            w[pos] = sym;
            rec(pos + 1);
        }
    };
    rec(0);
}

/// Number of states of the minimal DFA for the given DFA's language,
/// including the rejecting sink if the language requires one. Reachable
/// states only; Moore partition refinement.
inline int minimal_dfa_states(const Dfa& d) {
    // Reachable trim.
    std::vector<int> reach;
    std::vector<bool> seen(d.num_states(), false);
    reach.push_back(d.initial());
    seen[d.initial()] = true;
    for (std::size_t i = 0; i < reach.size(); ++i)
        for (const auto& sym : d.alphabet()) {
            int t = d.delta(reach[i], sym);
            if (!seen[t]) {
                seen[t] = true;
                reach.push_back(t);
            }
        }
    std::vector<int> cls(d.num_states(), -1);
    for (int s : reach) cls[s] = d.accepting(s) ? 1 : 0;
    for (;;) {
        // Signature = (class, classes of successors).
        std::map<std::vector<int>, int> next_class;
        std::vector<int> next(d.num_states(), -1);
        for (int s : reach) {
            std::vector<int> sig{cls[s]};
            for (const auto& sym : d.alphabet()) sig.push_back(cls[d.delta(s, sym)]);
            auto [it, inserted] = next_class.try_emplace(sig, static_cast<int>(next_class.size()));
            next[s] = it->second;
        }
        bool changed = false;
        for (int s : reach)
            if (next[s] != cls[s]) changed = true;
        int count = static_cast<int>(next_class.size());
        cls = next;
        if (!changed) return count;
    }
}

}  // namespace frarl::test
