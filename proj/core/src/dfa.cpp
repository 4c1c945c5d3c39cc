#include "frarl/dfa.hpp"

#include <deque>
#include <set>

namespace frarl {

Dfa::Dfa(std::vector<Symbol> alphabet, int num_states, int initial)
    : alphabet_(std::move(alphabet)), initial_(initial) {
    std::sort(alphabet_.begin(), alphabet_.end());
    alphabet_.erase(std::unique(alphabet_.begin(), alphabet_.end()), alphabet_.end());
    if (num_states < 1) throw std::invalid_argument("Dfa needs at least one state");
    if (initial < 0 || initial >= num_states) throw std::invalid_argument("initial out of range");
    for (std::size_t i = 0; i < alphabet_.size(); ++i)
        sym_index_[alphabet_[i]] = static_cast<int>(i);
    delta_.assign(num_states, std::vector<int>(alphabet_.size()));
    for (int s = 0; s < num_states; ++s)
        for (std::size_t i = 0; i < alphabet_.size(); ++i) delta_[s][i] = s;
    accepting_.assign(num_states, false);
}

int Dfa::sym_index(const Symbol& sym) const {
    auto it = sym_index_.find(sym);
    if (it == sym_index_.end())
        throw std::invalid_argument("symbol not in DFA alphabet: " + sym.str());
    return it->second;
}

void Dfa::set_transition(int state, const Symbol& sym, int next) {
    if (state < 0 || state >= num_states() || next < 0 || next >= num_states())
        throw std::invalid_argument("state out of range");
    delta_[state][sym_index(sym)] = next;
}

void Dfa::set_accepting(int state, bool accepting) { accepting_[state] = accepting; }

int Dfa::delta(int state, const Symbol& sym) const { return delta_[state][sym_index(sym)]; }

bool Dfa::accepts(const Word& word) const {
    int v = initial_;
    for (const auto& sym : word) v = delta_[v][sym_index(sym)];
    return accepting_[v];
}

Dfa mealy_to_dfa(const Fra& a) {
    std::vector<Symbol> alphabet;
    for (const auto& l : a.input_alphabet())
        for (const auto& r : a.reward_alphabet()) alphabet.push_back({l, r});
    const int sink = a.num_states();
    Dfa d(std::move(alphabet), a.num_states() + 1, a.initial());
    for (int s = 0; s < a.num_states(); ++s) {
        d.set_accepting(s, true);
        for (const auto& l : a.input_alphabet()) {
            RewardValue out = a.eta(s, l);
            for (const auto& r : a.reward_alphabet())
                d.set_transition(s, {l, r}, r == out ? a.delta(s, l) : sink);
        }
    }
    // Sink default transitions are self-loops already; keep it rejecting.
    return d;
}

std::optional<Word> dfa_distinguish(const Dfa& a, const Dfa& b) {
    std::vector<Symbol> alphabet = a.alphabet();
    alphabet.insert(alphabet.end(), b.alphabet().begin(), b.alphabet().end());
    std::sort(alphabet.begin(), alphabet.end());
    alphabet.erase(std::unique(alphabet.begin(), alphabet.end()), alphabet.end());

    // State -1 encodes the implicit rejecting sink for out-of-alphabet symbols.
    auto step = [](const Dfa& d, int s, const Symbol& sym) -> int {
        if (s < 0 || !d.has_symbol(sym)) return -1;
        return d.delta(s, sym);
    };
    auto accepting = [](const Dfa& d, int s) { return s >= 0 && d.accepting(s); };

    struct Node {
        int sa, sb;
        int parent;   // index into the visit list
        int sym;      // symbol index leading here
    };
    std::vector<Node> nodes;
    std::set<std::pair<int, int>> seen;
    std::deque<int> queue;

    nodes.push_back({a.initial(), b.initial(), -1, -1});
    seen.insert({a.initial(), b.initial()});
    queue.push_back(0);

    while (!queue.empty()) {
        int idx = queue.front();
        queue.pop_front();
        Node cur = nodes[idx];
        if (accepting(a, cur.sa) != accepting(b, cur.sb)) {
            Word w;
            for (int i = idx; nodes[i].parent >= 0; i = nodes[i].parent)
                w.push_back(alphabet[nodes[i].sym]);
            std::reverse(w.begin(), w.end());
            return w;
        }
        for (std::size_t si = 0; si < alphabet.size(); ++si) {
            int na = step(a, cur.sa, alphabet[si]);
            int nb = step(b, cur.sb, alphabet[si]);
            if (seen.insert({na, nb}).second) {
                nodes.push_back({na, nb, idx, static_cast<int>(si)});
                queue.push_back(static_cast<int>(nodes.size()) - 1);
            }
        }
    }
    return std::nullopt;
}

}  // namespace frarl
