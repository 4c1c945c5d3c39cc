#include "frarl/lstar.hpp"

namespace frarl {

LearnResult learn_fra(const std::vector<Symbol>& alphabet, Teacher& teacher) {
    ObservationTable table(alphabet);
    LearnStats stats;

    auto answer_pending = [&] {
        for (const auto& w : table.pending_words()) {
            table.set_cell(w, teacher.membership(w));
            ++stats.membership_queries;
        }
    };

    answer_pending();
    for (;;) {
        while (true) {
            auto chi = table.check_obs_table();
            if (chi.empty()) break;
            for (const auto& w : chi) {
                if (table.cell(w) == Cell::kUnknown) {
                    table.set_cell(w, teacher.membership(w));
                    ++stats.membership_queries;
                }
            }
        }
        Fra hyp = table.hypothesis();
        auto ce = teacher.counterexample(hyp);
        if (!ce) return {std::move(hyp), stats};
        ++stats.equivalence_queries;
        table.add_counterexample(*ce);
        answer_pending();
    }
}

}  // namespace frarl
