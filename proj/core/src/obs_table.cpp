#include "frarl/obs_table.hpp"

#include <deque>
#include <map>
#include <sstream>

namespace frarl {

namespace {

std::string word_str(const Word& w) {
    if (w.empty()) return "eps";
    std::string out;
    for (std::size_t i = 0; i < w.size(); ++i) {
        if (i) out += ".";
        out += w[i].str();
    }
    return out;
}

Word concat(const Word& a, const Word& b) {
    Word out = a;
    out.insert(out.end(), b.begin(), b.end());
    return out;
}

}  // namespace

ObservationTable::ObservationTable(std::vector<Symbol> alphabet)
    : alphabet_(std::move(alphabet)) {
    std::sort(alphabet_.begin(), alphabet_.end());
    alphabet_.erase(std::unique(alphabet_.begin(), alphabet_.end()), alphabet_.end());
    s_.push_back({});
    s_set_.insert({});
    e_.push_back({});
    e_set_.insert({});
}

void ObservationTable::extend_alphabet(const std::vector<Symbol>& symbols) {
    for (const auto& sym : symbols) {
        if (std::find(alphabet_.begin(), alphabet_.end(), sym) == alphabet_.end())
            alphabet_.push_back(sym);
    }
    std::sort(alphabet_.begin(), alphabet_.end());
}

Cell ObservationTable::cell(const Word& word) const {
    auto it = t_.find(word);
    return it == t_.end() ? Cell::kUnknown : it->second;
}

void ObservationTable::set_cell(const Word& word, bool value) {
    t_[word] = value ? Cell::kOne : Cell::kZero;
}

std::vector<Word> ObservationTable::s_sigma_rows() const {
    std::vector<Word> rows;
    rows.reserve(s_.size() * alphabet_.size());
    for (const auto& s : s_)
        for (const auto& sym : alphabet_) {
            Word w = s;
            w.push_back(sym);
            rows.push_back(std::move(w));
        }
    return rows;
}

std::vector<Word> ObservationTable::pending_words() const {
    std::vector<Word> pending;
    std::unordered_set<Word> seen;
    auto visit = [&](const Word& prefix) {
        for (const auto& e : e_) {
            Word w = concat(prefix, e);
            if (cell(w) == Cell::kUnknown && seen.insert(w).second) pending.push_back(std::move(w));
        }
    };
    for (const auto& s : s_) visit(s);
    for (const auto& t : s_sigma_rows()) visit(t);
    return pending;
}

void ObservationTable::insert_s(const Word& word) {
    if (s_set_.insert(word).second) s_.push_back(word);
}

void ObservationTable::add_counterexample(const Word& word) {
    for (std::size_t n = 1; n <= word.size(); ++n)
        insert_s(Word(word.begin(), word.begin() + n));
}

RowSignature ObservationTable::row(const Word& word) const {
    RowSignature sig;
    sig.reserve(e_.size());
    for (const auto& e : e_) {
        Cell c = cell(concat(word, e));
        if (c == Cell::kUnknown)
            throw StalenessError("unanswered table entry: " + word_str(concat(word, e)));
        sig.push_back(static_cast<std::uint8_t>(c));
    }
    return sig;
}

bool ObservationTable::is_closed() const {
    std::unordered_set<std::string> s_rows;
    for (const auto& s : s_) {
        auto sig = row(s);
        s_rows.insert(std::string(sig.begin(), sig.end()));
    }
    for (const auto& t : s_sigma_rows()) {
        auto sig = row(t);
        if (!s_rows.count(std::string(sig.begin(), sig.end()))) return false;
    }
    return true;
}

bool ObservationTable::is_consistent() const {
    for (std::size_t i = 0; i < s_.size(); ++i)
        for (std::size_t j = i + 1; j < s_.size(); ++j) {
            if (row(s_[i]) != row(s_[j])) continue;
            for (const auto& sym : alphabet_) {
                Word a = s_[i], b = s_[j];
                a.push_back(sym);
                b.push_back(sym);
                if (row(a) != row(b)) return false;
            }
        }
    return true;
}

std::vector<Word> ObservationTable::check_obs_table() {
    // Consistency defect: add the distinguishing suffix sigma.e to E.
    for (std::size_t i = 0; i < s_.size(); ++i)
        for (std::size_t j = i + 1; j < s_.size(); ++j) {
            if (row(s_[i]) != row(s_[j])) continue;
            for (const auto& sym : alphabet_) {
                for (const auto& e : e_) {
                    Word suffix;
                    suffix.push_back(sym);
                    suffix.insert(suffix.end(), e.begin(), e.end());
                    Cell a = cell(concat(s_[i], suffix));
                    Cell b = cell(concat(s_[j], suffix));
                    if (a == Cell::kUnknown || b == Cell::kUnknown)
                        throw StalenessError("check_obs_table on stale table");
                    if (a != b) {
                        if (e_set_.insert(suffix).second) e_.push_back(suffix);
                        std::vector<Word> chi;
                        std::unordered_set<Word> seen;
                        auto add = [&](const Word& prefix) {
                            Word w = concat(prefix, suffix);
                            if (seen.insert(w).second) chi.push_back(std::move(w));
                        };
                        for (const auto& s : s_) add(s);
                        for (const auto& t : s_sigma_rows()) add(t);
                        return chi;
                    }
                }
            }
        }

    // Closedness defect: move the uncovered row s.sigma into S.
    std::unordered_set<std::string> s_rows;
    for (const auto& s : s_) {
        auto sig = row(s);
        s_rows.insert(std::string(sig.begin(), sig.end()));
    }
    for (const auto& s : s_) {
        for (const auto& sym : alphabet_) {
            Word t = s;
            t.push_back(sym);
            auto sig = row(t);
            if (s_rows.count(std::string(sig.begin(), sig.end()))) continue;
            insert_s(t);
            std::vector<Word> chi;
            std::unordered_set<Word> seen;
            auto add = [&](const Word& prefix) {
                for (const auto& e : e_) {
                    Word w = concat(prefix, e);
                    if (seen.insert(w).second) chi.push_back(std::move(w));
                }
            };
            add(t);
            for (const auto& sym2 : alphabet_) {
                Word ext = t;
                ext.push_back(sym2);
                add(ext);
            }
            return chi;
        }
    }
    return {};
}

Fra ObservationTable::hypothesis() const {
    if (cell({}) != Cell::kOne)
        throw StalenessError("hypothesis requires T(epsilon) = 1");

    // Representative S word per row signature.
    std::map<RowSignature, Word> reps;
    for (const auto& s : s_) {
        auto sig = row(s);
        reps.try_emplace(sig, s);
    }

    std::vector<Label> labels;
    std::vector<RewardValue> rewards{kRewardZero};
    for (const auto& sym : alphabet_) {
        labels.push_back(sym.label);
        rewards.push_back(sym.reward);
    }
    std::sort(labels.begin(), labels.end());
    labels.erase(std::unique(labels.begin(), labels.end()), labels.end());
    std::sort(rewards.begin(), rewards.end());
    rewards.erase(std::unique(rewards.begin(), rewards.end()), rewards.end());

    // Reachable accepting rows, BFS from row(epsilon). Sink rows (T(s)=0)
    // are never entered because transitions require T(s.(l,r)) = 1.
    std::map<RowSignature, int> state_of;
    std::vector<RowSignature> order;
    std::deque<RowSignature> queue;
    RowSignature init = row({});
    state_of[init] = 0;
    order.push_back(init);
    queue.push_back(init);

    struct Edge {
        int from;
        Label label;
        RowSignature to;
        RewardValue reward;
    };
    std::vector<Edge> edges;

    while (!queue.empty()) {
        RowSignature sig = queue.front();
        queue.pop_front();
        int from = state_of.at(sig);
        const Word& s = reps.at(sig);
        for (const auto& l : labels) {
            // Smallest reward whose extension row is accepting wins.
            bool found = false;
            for (const auto& r : rewards) {
                Symbol sym{l, r};
                if (std::find(alphabet_.begin(), alphabet_.end(), sym) == alphabet_.end())
                    continue;
                Word ext = s;
                ext.push_back(sym);
                Cell c = cell(ext);
                if (c == Cell::kUnknown)
                    throw StalenessError("hypothesis on stale table");
                if (c != Cell::kOne) continue;
                RowSignature to = row(ext);
                auto it = state_of.find(to);
                if (it == state_of.end()) {
                    state_of[to] = static_cast<int>(order.size());
                    order.push_back(to);
                    queue.push_back(to);
                }
                edges.push_back({from, l, to, r});
                found = true;
                break;
            }
            (void)found;  // no accepting extension: keep the default self-loop/0
        }
    }

    Fra a(labels, rewards, static_cast<int>(order.size()), 0);
    for (const auto& e : edges) a.set_transition(e.from, e.label, state_of.at(e.to), e.reward);
    return a;
}

std::string ObservationTable::dump_tsv() const {
    std::ostringstream os;
    os << "row";
    for (const auto& e : e_) os << "\t" << word_str(e);
    os << "\n";
    auto emit = [&](const Word& prefix) {
        os << word_str(prefix);
        for (const auto& e : e_) {
            Cell c = cell(concat(prefix, e));
            os << "\t" << (c == Cell::kUnknown ? "?" : c == Cell::kOne ? "1" : "0");
        }
        os << "\n";
    };
    for (const auto& s : s_) emit(s);
    for (const auto& t : s_sigma_rows()) emit(t);
    return os.str();
}

}  // namespace frarl
