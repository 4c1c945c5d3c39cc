#pragma once

#include <string>
#include <unordered_map>
#include <unordered_set>
#include <vector>

#include "frarl/fra.hpp"
#include "frarl/types.hpp"

namespace frarl {

enum class Cell : std::uint8_t { kZero = 0, kOne = 1, kUnknown = 2 };

using RowSignature = std::vector<std::uint8_t>;

/// L* observation table (S, E, T) over the combined alphabet 2^P x R.
/// S is kept prefix-closed; epsilon is always in both S and E. Cells start
/// unknown and are filled by membership answers.
class ObservationTable {
public:
    explicit ObservationTable(std::vector<Symbol> alphabet = {});

    const std::vector<Symbol>& alphabet() const { return alphabet_; }
    const std::vector<Word>& s_words() const { return s_; }
    const std::vector<Word>& e_words() const { return e_; }

    /// Adds new symbols to the combined alphabet. New S*Sigma rows start
    /// unknown. Existing answers are preserved.
    void extend_alphabet(const std::vector<Symbol>& symbols);

    Cell cell(const Word& word) const;
    void set_cell(const Word& word, bool value);

    /// All unanswered words among (S u S*Sigma) * E, deterministic order.
    std::vector<Word> pending_words() const;

    /// Inserts the word and all its prefixes into S.
    void add_counterexample(const Word& word);

    // Both require every referenced cell to be answered (StalenessError).
    bool is_closed() const;
    bool is_consistent() const;

    /// Table-repair step: if inconsistent, extends E by one suffix; else if
    /// not closed, moves one row into S; returns the membership-query words
    /// created. Empty result means the table is closed and consistent.
    std::vector<Word> check_obs_table();

    /// Extracts the hypothesis automaton from a closed, consistent table.
    /// Requires T(epsilon) = 1.
    Fra hypothesis() const;

    /// Tab-separated dump: rows = S then S*Sigma, columns = E, cells 0/1/?.
    std::string dump_tsv() const;

private:
    RowSignature row(const Word& word) const;
    std::vector<Word> s_sigma_rows() const;
    void insert_s(const Word& word);

    std::vector<Symbol> alphabet_;
    std::vector<Word> s_;  // insertion order, prefix-closed
    std::vector<Word> e_;  // insertion order, contains epsilon
    std::unordered_set<Word> s_set_;
    std::unordered_set<Word> e_set_;
    std::unordered_map<Word, Cell> t_;  // keyed by the concatenated word s.e
};

}  // namespace frarl
