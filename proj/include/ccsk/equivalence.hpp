#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "ccsk/lts.hpp"

namespace ccsk {

struct EquivOptions {
    LtsOptions lts;
    // State budget for the bidirectional closure search; hitting it makes
    // a negative verdict non-exhaustive ("not equivalent within bound").
    std::size_t max_states = 50000;
    bool allow_insertions = true;
};

struct EquivResult {
    bool equivalent = false;
    // True when the verdict is definitive: either the traces met, or the
    // closure was fully explored without exhausting the state budget.
    bool exhaustive = true;
};

// Causal equivalence, decided by a bidirectional breadth-first closure
// under cancellation of adjacent inverse pairs, commutation of adjacent
// concurrent steps, and insertion of inverse pairs whose label already
// occurs in either trace (length-capped). Traces with different sources or
// different endpoints are never equivalent.
EquivResult causally_equivalent(const Trace& a, const Trace& b, const EquivOptions& opts = {});

// A causally equivalent trace of shape backward*;forward* with the same
// endpoints and all cancellable pairs removed. Throws std::runtime_error
// if a non-cancellable, non-concurrent forward;backward adjacency blocks
// normalization (possible only outside the marked fragment).
Trace parabolic_normal_form(const Trace& t, const LtsOptions& opts = {});

// Parabolic normal form followed by a greedy commutation sort of adjacent
// concurrent steps ordered by collapsed label text. Equal canonical forms
// imply equivalence; unequal forms are settled by the closure search.
Trace canonical_form(const Trace& t, const LtsOptions& opts = {});

struct EquivalenceViolation {
    std::string trace_a;
    std::string trace_b;
    bool within_bound = true;  // false: search gave up at the state budget
};

struct BackwardConcurrencyViolation {
    std::string process;
    std::string label1;
    std::string label2;
};

struct ConsistencyReport {
    std::size_t traces = 0;
    std::size_t endpoint_groups = 0;
    std::size_t pairs_checked = 0;
    std::size_t states = 0;
    std::vector<EquivalenceViolation> equivalence_violations;
    std::vector<BackwardConcurrencyViolation> backward_concurrency_violations;

    bool ok() const {
        return equivalence_violations.empty() && backward_concurrency_violations.empty();
    }
};

// Enumerates every trace from p of length <= depth (canonical fresh keys),
// groups them by endpoint and checks that each coinitial-cofinal group is
// mutually causally equivalent; also checks that distinct coinitial
// backward transitions of every explored state are concurrent.
ConsistencyReport check_causal_consistency(const ProcessPtr& p, std::size_t depth,
                                           const EquivOptions& opts = {});

}  // namespace ccsk
