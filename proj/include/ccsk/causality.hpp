#pragma once

#include <string>
#include <vector>

#include "ccsk/label.hpp"
#include "ccsk/lts.hpp"

namespace ccsk {

// The dependency relation on enhanced keyed labels, by structural
// recursion over the axioms:
//   alpha[k] < theta
//   |d theta < |d theta'          if theta < theta'
//   <tL,tR>  < theta              if some side  < theta
//   theta    < <tL,tR>            if theta < some side
//   !theta   < !theta'            if theta < theta', or exactly one of
//                                 theta, theta' is a bare sync (a spawn of
//                                 a single copy and a spawn of a copy pair
//                                 produce incompatible targets)
//   !theta   < |L theta'
//   !theta   < |R theta'          if theta is a sync and theta' starts
//                                 with |L or |R, or theta < theta' otherwise
// Reflexive by construction.
bool depends(const EnhancedLabel& a, const EnhancedLabel& b);

// Human-readable chain of axioms justifying depends(a, b); empty when the
// pair is independent.
std::vector<std::string> depends_trail(const EnhancedLabel& a, const EnhancedLabel& b);

// theta_i causes theta_j in T (1-based positions, i < j required).
bool causes_in_trace(const Trace& t, std::size_t i, std::size_t j);

// Neither position's label depends on the other; false on i == j.
bool concurrent_in_trace(const Trace& t, std::size_t i, std::size_t j);

// Concurrency of two coinitial transitions, evaluated on reverse(t1); t2.
bool coinitial_concurrent(const Transition& t1, const Transition& t2);

enum class Side { Left, Right };

// The pi projections of the decomposition lemma: every step of t must be a
// |L/|R/sync step of a top-level parallel composition, projectable on the
// requested side. Throws std::invalid_argument otherwise ("undefined").
Trace project(Side d, const Trace& t);

}  // namespace ccsk
