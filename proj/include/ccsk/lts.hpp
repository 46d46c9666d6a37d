#pragma once

#include <optional>
#include <string>
#include <vector>

#include "ccsk/label.hpp"
#include "ccsk/process.hpp"

namespace ccsk {

enum class Direction { Forward, Backward };

Direction flip(Direction d);
std::string to_string(Direction d);

struct Transition {
    ProcessPtr source;
    Direction direction = Direction::Forward;
    EnhancedLabel label;
    ProcessPtr target;
};

bool equal(const Transition& a, const Transition& b);

// Pairwise composable steps; empty traces keep their source explicitly.
struct Trace {
    ProcessPtr source;
    std::vector<Transition> steps;

    ProcessPtr final_target() const {
        return steps.empty() ? source : steps.back().target;
    }
};

bool composable(const Trace& t);

struct LtsOptions {
    // When set, replication targets mark the spawned copy and backward
    // steps consuming a marked prefix are inadmissible (the reverse
    // replication rules are exempt: they consume the copy wholesale).
    bool marking = true;
};

// All forward transitions of p. The single fresh key of each transition is
// instantiated canonically (smallest index absent from p) unless
// forced_key is given; a forced key must be fresh in p.
// Enumeration order is deterministic: at a parallel node left steps, then
// synchronisations, then right steps; at a sum left then right; at a
// replication repl.1 steps then repl.2 steps.
std::vector<Transition> forward_steps(const ProcessPtr& p, const LtsOptions& opts = {},
                                      std::optional<unsigned> forced_key = std::nullopt);

// All admissible backward transitions of p. Keys carried by labels are
// always unmarked; marks live on term occurrences only.
std::vector<Transition> backward_steps(const ProcessPtr& p, const LtsOptions& opts = {});

// Steps in the requested direction whose collapsed label equals
// collapse(pattern); forward derivation is forced to the pattern's key.
std::vector<Transition> steps_matching(const ProcessPtr& p, Direction dir,
                                       const EnhancedLabel& pattern, const LtsOptions& opts);

// The unique opposite transition with the same label (loop lemma);
// reverse(reverse(t)) == t.
Transition reverse(const Transition& t);

// True iff t is derivable (and admissible) under opts.
bool derivable(const Transition& t, const LtsOptions& opts = {});

// Exhaustive backward exploration down to terms with no admissible
// backward step.
struct OriginReport {
    std::vector<ProcessPtr> origins;  // distinct standard endpoints
    std::vector<ProcessPtr> stuck;    // distinct non-standard dead ends
    std::size_t longest_walk = 0;

    bool confluent() const { return origins.size() == 1 && stuck.empty(); }
};

OriginReport origin_report(const ProcessPtr& p, const LtsOptions& opts = {});

// The standard origin of p; throws std::runtime_error with both endpoints
// when backward exploration is not confluent (possible only with marking
// disabled).
ProcessPtr origin(const ProcessPtr& p, const LtsOptions& opts = {});

// Strips sum contexts, restrictions and keyed prefixes crossed
// transparently by the derivation of t, down to the sub-process whose
// primary connector produced the label: the acting prefix for a pathless
// action, the parallel composition for |L/|R/sync labels, the replication
// for forward !-labels (for backward !-labels, the parallel node whose
// left component is the replication being rewound).
struct Focus {
    ProcessPtr subprocess;
    Transition subtransition;
};

Focus focus(const Transition& t);

std::string to_string(const Transition& t);

}  // namespace ccsk
