#pragma once

#include <optional>
#include <unordered_map>
#include <vector>

#include "frarl/fra.hpp"
#include "frarl/types.hpp"

namespace frarl {

/// DFA over the combined alphabet 2^P x R.
class Dfa {
public:
    Dfa(std::vector<Symbol> alphabet, int num_states, int initial);

    int num_states() const { return static_cast<int>(delta_.size()); }
    int initial() const { return initial_; }
    const std::vector<Symbol>& alphabet() const { return alphabet_; }

    void set_transition(int state, const Symbol& sym, int next);
    void set_accepting(int state, bool accepting);

    int delta(int state, const Symbol& sym) const;  // throws on unknown symbol
    bool accepting(int state) const { return accepting_[state]; }
    bool has_symbol(const Symbol& sym) const { return sym_index_.count(sym) > 0; }

    bool accepts(const Word& word) const;

private:
    int sym_index(const Symbol& sym) const;

    std::vector<Symbol> alphabet_;
    std::unordered_map<Symbol, int> sym_index_;
    int initial_;
    std::vector<std::vector<int>> delta_;
    std::vector<bool> accepting_;
};

/// Converts a finite reward automaton to the DFA over 2^P x R accepting
/// exactly the words whose reward components match the automaton's outputs.
/// The result has exactly |A|+1 states; the extra state is an absorbing
/// rejecting sink.
Dfa mealy_to_dfa(const Fra& a);

inline bool dfa_run_accepts(const Dfa& d, const Word& word) { return d.accepts(word); }

/// Shortest word accepted by exactly one of the two DFAs, found by BFS over
/// the synchronous product; std::nullopt if the languages are equal. Symbols
/// missing from one DFA's alphabet send that DFA to an implicit rejecting
/// sink, so the search runs over the union alphabet.
std::optional<Word> dfa_distinguish(const Dfa& a, const Dfa& b);

}  // namespace frarl
