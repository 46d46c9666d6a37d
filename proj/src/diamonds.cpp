#include "ccsk/diamonds.hpp"

#include <optional>

#include "ccsk/parser.hpp"

namespace ccsk {

namespace {

bool labels_concurrent(const EnhancedLabel& a, const EnhancedLabel& b) {
    return !depends(a, b) && !depends(b, a);
}

std::optional<std::pair<Transition, Transition>> search_commutation(const Transition& t1,
                                                                    const Transition& t2,
                                                                    const LtsOptions& opts) {
    for (const auto& s2 : steps_matching(t1.source, t2.direction, t2.label, opts))
        for (const auto& s1 : steps_matching(s2.target, t1.direction, t1.label, opts))
            if (equal(s1.target, t2.target)) return std::make_pair(s2, s1);
    return std::nullopt;
}

std::optional<std::pair<Transition, Transition>> search_square(const Transition& t1,
                                                               const Transition& t2,
                                                               const LtsOptions& opts) {
    auto from1 = steps_matching(t1.target, t2.direction, t2.label, opts);
    auto from2 = steps_matching(t2.target, t1.direction, t1.label, opts);
    for (const auto& a : from1)
        for (const auto& b : from2)
            if (equal(a.target, b.target)) return std::make_pair(a, b);
    return std::nullopt;
}

void require_composable(const Transition& t1, const Transition& t2) {
    if (!equal(t1.target, t2.source))
        throw CommuteError("transitions are not composable");
}

void require_concurrent(const Transition& t1, const Transition& t2) {
    if (!labels_concurrent(t1.label, t2.label))
        throw CommuteError("transitions are not concurrent: " + to_string(t1.label) + " vs " +
                           to_string(t2.label));
}

}  // namespace

std::pair<Transition, Transition> commute_adjacent(const Transition& t1, const Transition& t2,
                                                   const LtsOptions& opts) {
    require_composable(t1, t2);
    require_concurrent(t1, t2);
    if (auto found = search_commutation(t1, t2, opts)) return *found;
    throw CommuteError("no commutation found for a concurrent pair (invariant violation): " +
                       to_string(t1.label) + " ; " + to_string(t2.label) + " from " +
                       print(t1.source));
}

std::pair<Transition, Transition> commute_forward(const Transition& t1, const Transition& t2,
                                                  const LtsOptions& opts) {
    if (t1.direction != Direction::Forward || t2.direction != Direction::Forward)
        throw CommuteError("commute_forward requires two forward transitions");
    return commute_adjacent(t1, t2, opts);
}

std::pair<Transition, Transition> commute_sideways(const Transition& t1, const Transition& t2,
                                                   const LtsOptions& opts) {
    if (t1.direction != Direction::Forward || t2.direction != Direction::Backward)
        throw CommuteError("commute_sideways requires a forward then a backward transition");
    return commute_adjacent(t1, t2, opts);
}

std::pair<Transition, Transition> close_square(const Transition& t1, const Transition& t2,
                                               const LtsOptions& opts) {
    if (!equal(t1.source, t2.source)) throw CommuteError("transitions are not coinitial");
    if (!coinitial_concurrent(t1, t2))
        throw CommuteError("transitions are not coinitial-concurrent: " + to_string(t1.label) +
                           " vs " + to_string(t2.label));
    if (auto found = search_square(t1, t2, opts)) return *found;
    throw CommuteError("no square closure for a concurrent coinitial pair (invariant violation): " +
                       to_string(t1.label) + " vs " + to_string(t2.label) + " from " +
                       print(t1.source));
}

bool commutation_exists(const Transition& t1, const Transition& t2, const LtsOptions& opts) {
    require_composable(t1, t2);
    return search_commutation(t1, t2, opts).has_value();
}

bool square_exists(const Transition& t1, const Transition& t2, const LtsOptions& opts) {
    if (!equal(t1.source, t2.source)) throw CommuteError("transitions are not coinitial");
    return search_square(t1, t2, opts).has_value();
}

}  // namespace ccsk
