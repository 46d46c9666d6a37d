#pragma once

#include <stdexcept>
#include <utility>

#include "ccsk/causality.hpp"
#include "ccsk/lts.hpp"

namespace ccsk {

struct CommuteError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

// Commutes a composable pair t1; t2 of concurrent transitions into
// t2'; t1' with the same endpoints, found by re-derivation: labels match
// the originals up to collapse (exactly, outside the replication
// fragment). Works for every direction combination.
std::pair<Transition, Transition> commute_adjacent(const Transition& t1, const Transition& t2,
                                                   const LtsOptions& opts = {});

// Forward diamond: both transitions forward.
std::pair<Transition, Transition> commute_forward(const Transition& t1, const Transition& t2,
                                                  const LtsOptions& opts = {});

// Sideways diamond: t1 forward, t2 backward. Rejects t; reverse(t)
// (dependent by reflexivity).
std::pair<Transition, Transition> commute_sideways(const Transition& t1, const Transition& t2,
                                                   const LtsOptions& opts = {});

// Square property: closes two coinitial concurrent transitions to a common
// target. Returns (t1': target(t1) -> Y with t2's label and direction,
//                  t2': target(t2) -> Y with t1's label and direction),
// labels up to collapse.
std::pair<Transition, Transition> close_square(const Transition& t1, const Transition& t2,
                                               const LtsOptions& opts = {});

// True iff some commutation of t1; t2 with identical endpoints and
// collapse-equal labels exists (exhaustive successor search; no
// concurrency precondition).
bool commutation_exists(const Transition& t1, const Transition& t2, const LtsOptions& opts = {});

// Likewise for the square closure of a coinitial pair.
bool square_exists(const Transition& t1, const Transition& t2, const LtsOptions& opts = {});

}  // namespace ccsk
