#pragma once

#include <optional>
#include <vector>

#include "frarl/obs_table.hpp"
#include "frarl/types.hpp"

namespace frarl {

/// Caches of observed ground-truth traces (sample) and of membership traces
/// answered 0 by budget exhaustion (nsample), subject to later flipping.
struct SampleStore {
    std::vector<Trace> sample;
    std::vector<Trace> nsample;

    /// Adds a trace if not already present (set semantics).
    void add_sample(const Trace& t);
    void add_nsample(const Trace& t);
};

/// True iff the two traces agree on some label prefix but differ in the
/// reward at its last position.
bool traces_inconsistent(const Trace& zeta, const Trace& tau);

/// True iff zeta's combined word is a prefix of tau's.
bool trace_is_prefix(const Trace& zeta, const Trace& tau);

/// Answers a membership trace from the sample cache: true if it is a prefix
/// of a cached trace, false if it is inconsistent with one, nullopt if the
/// cache cannot decide. Prefix is tested before inconsistency per trace.
std::optional<bool> check_sample(const Trace& zeta, const SampleStore& store);

/// Flips T(zeta') to 1 for every nsample entry that is a prefix of the given
/// trace; flipped entries are removed from nsample. Returns whether any flip
/// happened.
bool check_nsample(const Trace& trace, SampleStore& store, ObservationTable& table);

}  // namespace frarl
