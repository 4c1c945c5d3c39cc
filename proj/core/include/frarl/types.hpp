#pragma once

#include <algorithm>
#include <cstdint>
#include <functional>
#include <stdexcept>
#include <string>
#include <vector>

namespace frarl {

// Raised when an observation-table cell is read before it has been answered.
struct StalenessError : std::logic_error {
    using std::logic_error::logic_error;
};

// Raised by text parsers; carries the 1-based offending line.
struct ParseError : std::runtime_error {
    ParseError(int line, const std::string& what)
        : std::runtime_error("line " + std::to_string(line) + ": " + what), line(line) {}
    int line;
};

// A label is a set of propositions, stored as a sorted, deduplicated string
// of single-character proposition identifiers. The empty string is the empty
// label.
class Label {
public:
    Label() = default;
    explicit Label(std::string props) : props_(std::move(props)) {
        std::sort(props_.begin(), props_.end());
        props_.erase(std::unique(props_.begin(), props_.end()), props_.end());
    }

    bool empty() const { return props_.empty(); }
    const std::string& props() const { return props_; }

    // Token form used by the serialization format and DOT export: "{}" for
    // the empty label, otherwise the proposition characters.
    std::string str() const { return props_.empty() ? "{}" : props_; }

    static Label parse(const std::string& token) {
        return token == "{}" ? Label() : Label(token);
    }

    friend bool operator==(const Label&, const Label&) = default;
    friend auto operator<=>(const Label&, const Label&) = default;

private:
    std::string props_;
};

// A reward value with exact comparison semantics. Values are stored in
// millionths so that automaton alphabets hash and compare deterministically.
class RewardValue {
public:
    static constexpr std::int64_t kScale = 1'000'000;

    constexpr RewardValue() = default;
    static constexpr RewardValue from_micros(std::int64_t micros) {
        RewardValue r;
        r.micros_ = micros;
        return r;
    }
    static RewardValue from_double(double v) {
        return from_micros(static_cast<std::int64_t>(v < 0 ? v * kScale - 0.5 : v * kScale + 0.5));
    }
    static constexpr RewardValue from_int(std::int64_t v) { return from_micros(v * kScale); }

    std::int64_t micros() const { return micros_; }
    double value() const { return static_cast<double>(micros_) / kScale; }
    bool is_zero() const { return micros_ == 0; }

    // Minimal decimal rendering, e.g. "0", "1", "0.25", "-0.5".
    std::string str() const;
    static RewardValue parse(const std::string& token);

    friend bool operator==(const RewardValue&, const RewardValue&) = default;
    friend auto operator<=>(const RewardValue&, const RewardValue&) = default;

private:
    std::int64_t micros_ = 0;
};

inline const RewardValue kRewardZero = RewardValue::from_int(0);
inline const RewardValue kRewardOne = RewardValue::from_int(1);

// A paired label sequence and reward sequence of equal length.
struct Trace {
    std::vector<Label> labels;
    std::vector<RewardValue> rewards;

    std::size_t size() const { return labels.size(); }
    bool empty() const { return labels.empty(); }
    void push_back(Label l, RewardValue r) {
        labels.push_back(std::move(l));
        rewards.push_back(r);
    }
    Trace prefix(std::size_t n) const {
        return Trace{{labels.begin(), labels.begin() + n}, {rewards.begin(), rewards.begin() + n}};
    }
    friend bool operator==(const Trace&, const Trace&) = default;
};

// One symbol of the combined alphabet 2^P x R.
struct Symbol {
    Label label;
    RewardValue reward;

    std::string str() const { return label.str() + "/" + reward.str(); }
    friend bool operator==(const Symbol&, const Symbol&) = default;
    friend auto operator<=>(const Symbol&, const Symbol&) = default;
};

using Word = std::vector<Symbol>;

inline Word to_word(const Trace& t) {
    Word w;
    w.reserve(t.size());
    for (std::size_t i = 0; i < t.size(); ++i) w.push_back({t.labels[i], t.rewards[i]});
    return w;
}

inline Trace to_trace(const Word& w) {
    Trace t;
    for (const auto& sym : w) t.push_back(sym.label, sym.reward);
    return t;
}

inline std::size_t hash_combine(std::size_t seed, std::size_t v) {
    return seed ^ (v + 0x9e3779b97f4a7c15ULL + (seed << 6) + (seed >> 2));
}

}  // namespace frarl

template <>
struct std::hash<frarl::Label> {
    std::size_t operator()(const frarl::Label& l) const {
        return std::hash<std::string>{}(l.props());
    }
};

template <>
struct std::hash<frarl::RewardValue> {
    std::size_t operator()(const frarl::RewardValue& r) const {
        return std::hash<std::int64_t>{}(r.micros());
    }
};

template <>
struct std::hash<frarl::Symbol> {
    std::size_t operator()(const frarl::Symbol& s) const {
        return frarl::hash_combine(std::hash<frarl::Label>{}(s.label),
                                   std::hash<frarl::RewardValue>{}(s.reward));
    }
};

template <>
struct std::hash<frarl::Word> {
    std::size_t operator()(const frarl::Word& w) const {
        std::size_t h = 0xcbf29ce484222325ULL;
        for (const auto& s : w) h = frarl::hash_combine(h, std::hash<frarl::Symbol>{}(s));
        return h;
    }
};
