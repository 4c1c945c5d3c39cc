#include "frarl/fra.hpp"

#include <cmath>
#include <map>
#include <sstream>

namespace frarl {

std::string RewardValue::str() const {
    std::int64_t m = micros_;
    std::string sign;
    if (m < 0) {
        sign = "-";
        m = -m;
    }
    std::int64_t whole = m / kScale;
    std::int64_t frac = m % kScale;
    if (frac == 0) return sign + std::to_string(whole);
    std::string digits = std::to_string(frac);
    digits.insert(digits.begin(), 6 - digits.size(), '0');
    while (digits.back() == '0') digits.pop_back();
    return sign + std::to_string(whole) + "." + digits;
}

RewardValue RewardValue::parse(const std::string& token) {
    std::size_t pos = 0;
    double v = std::stod(token, &pos);
    if (pos != token.size()) throw std::invalid_argument("bad reward token: " + token);
    return from_double(v);
}

Fra::Fra(std::vector<Label> input_alphabet, std::vector<RewardValue> reward_alphabet,
         int num_states, int initial)
    : input_alphabet_(std::move(input_alphabet)),
      reward_alphabet_(std::move(reward_alphabet)),
      initial_(initial) {
    std::sort(input_alphabet_.begin(), input_alphabet_.end());
    input_alphabet_.erase(std::unique(input_alphabet_.begin(), input_alphabet_.end()),
                          input_alphabet_.end());
    std::sort(reward_alphabet_.begin(), reward_alphabet_.end());
    reward_alphabet_.erase(std::unique(reward_alphabet_.begin(), reward_alphabet_.end()),
                           reward_alphabet_.end());
    if (num_states < 1) throw std::invalid_argument("Fra needs at least one state");
    if (initial < 0 || initial >= num_states) throw std::invalid_argument("initial out of range");
    for (std::size_t i = 0; i < input_alphabet_.size(); ++i)
        label_index_[input_alphabet_[i]] = static_cast<int>(i);
    // Default transitions: self-loop with reward 0.
    delta_.assign(num_states, std::vector<int>(input_alphabet_.size()));
    eta_.assign(num_states, std::vector<RewardValue>(input_alphabet_.size(), kRewardZero));
    for (int s = 0; s < num_states; ++s)
        for (std::size_t l = 0; l < input_alphabet_.size(); ++l) delta_[s][l] = s;
}

int Fra::label_index(const Label& l) const {
    auto it = label_index_.find(l);
    if (it == label_index_.end())
        throw std::invalid_argument("label not in input alphabet: " + l.str());
    return it->second;
}

void Fra::set_transition(int state, const Label& l, int next, RewardValue reward) {
    if (state < 0 || state >= num_states() || next < 0 || next >= num_states())
        throw std::invalid_argument("state out of range");
    int li = label_index(l);
    delta_[state][li] = next;
    eta_[state][li] = reward;
}

int Fra::delta(int state, const Label& l) const { return delta_[state][label_index(l)]; }

RewardValue Fra::eta(int state, const Label& l) const { return eta_[state][label_index(l)]; }

std::pair<int, RewardValue> Fra::step_total(int state, const Label& l) const {
    auto it = label_index_.find(l);
    if (it == label_index_.end()) return {state, kRewardZero};
    return {delta_[state][it->second], eta_[state][it->second]};
}

std::vector<RewardValue> Fra::run(const std::vector<Label>& labels) const {
    std::vector<RewardValue> out;
    out.reserve(labels.size());
    int w = initial_;
    for (const auto& l : labels) {
        int li = label_index(l);
        out.push_back(eta_[w][li]);
        w = delta_[w][li];
    }
    return out;
}

std::vector<RewardValue> Fra::run_total(const std::vector<Label>& labels) const {
    std::vector<RewardValue> out;
    out.reserve(labels.size());
    int w = initial_;
    for (const auto& l : labels) {
        auto [next, r] = step_total(w, l);
        out.push_back(r);
        w = next;
    }
    return out;
}

Fra Fra::constant_zero(std::vector<Label> input_alphabet) {
    return Fra(std::move(input_alphabet), {kRewardZero}, 1, 0);
}

Fra build_query_fra(const Trace& zeta) {
    std::vector<Label> alphabet(zeta.labels.begin(), zeta.labels.end());
    Fra a(std::move(alphabet), {kRewardZero, kRewardOne},
          static_cast<int>(zeta.size()) + 1, 0);
    // Defaults already self-loop with 0; the final state stays absorbing.
    for (std::size_t i = 0; i < zeta.size(); ++i)
        a.set_transition(static_cast<int>(i), zeta.labels[i], static_cast<int>(i) + 1, kRewardOne);
    return a;
}

namespace {

struct PrefixNode {
    std::map<Label, int> children;
    std::map<Label, RewardValue> rewards;
};

}  // namespace

Fra build_prefix_tree_fra(const std::vector<Trace>& traces) {
    std::vector<PrefixNode> nodes(1);
    std::vector<Label> alphabet;
    std::vector<RewardValue> rewards{kRewardZero};
    for (const auto& t : traces) {
        int cur = 0;
        for (std::size_t i = 0; i < t.size(); ++i) {
            const Label& l = t.labels[i];
            alphabet.push_back(l);
            rewards.push_back(t.rewards[i]);
            auto rit = nodes[cur].rewards.find(l);
            if (rit != nodes[cur].rewards.end()) {
                if (rit->second != t.rewards[i])
                    throw std::invalid_argument(
                        "inconsistent traces: label prefix ending in '" + l.str() +
                        "' maps to both reward " + rit->second.str() + " and " +
                        t.rewards[i].str());
                cur = nodes[cur].children.at(l);
            } else {
                nodes[cur].rewards[l] = t.rewards[i];
                nodes[cur].children[l] = static_cast<int>(nodes.size());
                cur = static_cast<int>(nodes.size());
                nodes.emplace_back();
            }
        }
    }
    Fra a(std::move(alphabet), std::move(rewards), static_cast<int>(nodes.size()), 0);
    for (std::size_t s = 0; s < nodes.size(); ++s)
        for (const auto& [l, next] : nodes[s].children)
            a.set_transition(static_cast<int>(s), l, next, nodes[s].rewards.at(l));
    return a;
}

std::vector<RewardValue> quantize_rewards(double r_min, double r_max, double eps) {
    if (eps <= 0) throw std::invalid_argument("quantize_rewards: eps must be positive");
    if (r_min > r_max) throw std::invalid_argument("quantize_rewards: r_min > r_max");
    std::vector<RewardValue> grid;
    for (std::int64_t n = 0;; ++n) {
        double v = r_min + static_cast<double>(n) * eps;
        if (v > r_max + 1e-12) break;
        grid.push_back(RewardValue::from_double(v));
    }
    return grid;
}

RewardValue nearest_reward(const std::vector<RewardValue>& grid, double r) {
    if (grid.empty()) throw std::invalid_argument("nearest_reward: empty grid");
    RewardValue best = grid.front();
    double best_dist = std::abs(best.value() - r);
    for (const auto& g : grid) {
        double d = std::abs(g.value() - r);
        if (d < best_dist) {  // ties keep the earlier (smaller) value
            best = g;
            best_dist = d;
        }
    }
    return best;
}

std::string fra_to_dot(const Fra& a) {
    std::ostringstream os;
    os << "digraph fra {\n";
    os << "  rankdir=LR;\n";
    os << "  __start [shape=point];\n";
    for (int s = 0; s < a.num_states(); ++s)
        os << "  w" << s << " [shape=circle];\n";
    os << "  __start -> w" << a.initial() << ";\n";
    for (int s = 0; s < a.num_states(); ++s)
        for (const auto& l : a.input_alphabet())
            os << "  w" << s << " -> w" << a.delta(s, l) << " [label=\"" << l.str() << "/"
               << a.eta(s, l).str() << "\"];\n";
    os << "}\n";
    return os.str();
}

std::string fra_to_text(const Fra& a) {
    std::ostringstream os;
    os << "fra\n";
    os << "states " << a.num_states() << "\n";
    os << "initial " << a.initial() << "\n";
    os << "labels";
    for (const auto& l : a.input_alphabet()) os << " " << l.str();
    os << "\n";
    os << "rewards";
    for (const auto& r : a.reward_alphabet()) os << " " << r.str();
    os << "\n";
    for (int s = 0; s < a.num_states(); ++s)
        for (const auto& l : a.input_alphabet())
            os << "trans " << s << " " << l.str() << " " << a.delta(s, l) << " "
               << a.eta(s, l).str() << "\n";
    os << "end\n";
    return os.str();
}

Fra fra_from_text(const std::string& text) {
    std::istringstream is(text);
    std::string line;
    int lineno = 0;
    auto next_line = [&]() -> bool {
        while (std::getline(is, line)) {
            ++lineno;
            if (!line.empty()) return true;
        }
        return false;
    };
    auto fail = [&](const std::string& what) -> ParseError { return ParseError(lineno, what); };

    if (!next_line() || line != "fra") throw fail("expected 'fra' header");

    int num_states = -1, initial = -1;
    std::vector<Label> labels;
    std::vector<RewardValue> rewards;
    if (!next_line()) throw fail("unexpected end of input");
    {
        std::istringstream ls(line);
        std::string kw;
        ls >> kw >> num_states;
        if (kw != "states" || num_states < 1) throw fail("expected 'states <n>'");
    }
    if (!next_line()) throw fail("unexpected end of input");
    {
        std::istringstream ls(line);
        std::string kw;
        ls >> kw >> initial;
        if (kw != "initial" || initial < 0) throw fail("expected 'initial <i>'");
    }
    if (!next_line()) throw fail("unexpected end of input");
    {
        std::istringstream ls(line);
        std::string kw, tok;
        ls >> kw;
        if (kw != "labels") throw fail("expected 'labels ...'");
        while (ls >> tok) labels.push_back(Label::parse(tok));
    }
    if (!next_line()) throw fail("unexpected end of input");
    {
        std::istringstream ls(line);
        std::string kw, tok;
        ls >> kw;
        if (kw != "rewards") throw fail("expected 'rewards ...'");
        while (ls >> tok) {
            try {
                rewards.push_back(RewardValue::parse(tok));
            } catch (const std::exception&) {
                throw fail("bad reward value: " + tok);
            }
        }
    }
    if (initial >= num_states) throw fail("initial state out of range");

    Fra a(labels, rewards, num_states, initial);
    while (next_line()) {
        if (line == "end") return a;
        std::istringstream ls(line);
        std::string kw, ltok, rtok;
        int s = -1, next = -1;
        ls >> kw >> s >> ltok >> next >> rtok;
        if (kw != "trans" || ls.fail()) throw fail("expected 'trans <s> <label> <s'> <r>'");
        if (s < 0 || s >= num_states || next < 0 || next >= num_states)
            throw fail("transition state out of range");
        try {
            a.set_transition(s, Label::parse(ltok), next, RewardValue::parse(rtok));
        } catch (const std::exception& e) {
            throw fail(e.what());
        }
    }
    throw fail("missing 'end'");
}

}  // namespace frarl
