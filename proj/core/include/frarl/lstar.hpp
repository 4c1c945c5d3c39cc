#pragma once

#include <optional>

#include "frarl/fra.hpp"
#include "frarl/obs_table.hpp"

namespace frarl {

/// Answers membership and equivalence queries for the L* learner. In
/// production the RL engine plays this role; tests use an exact teacher.
class Teacher {
public:
    virtual ~Teacher() = default;
    virtual bool membership(const Word& word) = 0;
    /// A counterexample word, or nullopt if the hypothesis is correct.
    virtual std::optional<Word> counterexample(const Fra& hypothesis) = 0;
};

struct LearnStats {
    int membership_queries = 0;
    int equivalence_queries = 0;  // queries answered with a counterexample
};

struct LearnResult {
    Fra hypothesis;
    LearnStats stats;
};

/// Classic L* over the combined alphabet, driven by an exact teacher.
LearnResult learn_fra(const std::vector<Symbol>& alphabet, Teacher& teacher);

}  // namespace frarl
