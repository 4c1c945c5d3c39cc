#include "frarl/samples.hpp"

#include <algorithm>

namespace frarl {

void SampleStore::add_sample(const Trace& t) {
    if (std::find(sample.begin(), sample.end(), t) == sample.end()) sample.push_back(t);
}

void SampleStore::add_nsample(const Trace& t) {
    if (std::find(nsample.begin(), nsample.end(), t) == nsample.end()) nsample.push_back(t);
}

bool traces_inconsistent(const Trace& zeta, const Trace& tau) {
    std::size_t n = std::min(zeta.size(), tau.size());
    for (std::size_t j = 0; j < n; ++j) {
        if (zeta.labels[j] != tau.labels[j]) return false;
        if (zeta.rewards[j] != tau.rewards[j]) return true;
    }
    return false;
}

bool trace_is_prefix(const Trace& zeta, const Trace& tau) {
    if (zeta.size() > tau.size()) return false;
    for (std::size_t i = 0; i < zeta.size(); ++i)
        if (zeta.labels[i] != tau.labels[i] || zeta.rewards[i] != tau.rewards[i]) return false;
    return true;
}

std::optional<bool> check_sample(const Trace& zeta, const SampleStore& store) {
    for (const auto& tau : store.sample) {
        if (trace_is_prefix(zeta, tau)) return true;
        if (traces_inconsistent(zeta, tau)) return false;
    }
    return std::nullopt;
}

bool check_nsample(const Trace& trace, SampleStore& store, ObservationTable& table) {
    bool changed = false;
    auto it = store.nsample.begin();
    while (it != store.nsample.end()) {
        if (trace_is_prefix(*it, trace)) {
            table.set_cell(to_word(*it), true);
            changed = true;
            it = store.nsample.erase(it);
        } else {
            ++it;
        }
    }
    return changed;
}

}  // namespace frarl
