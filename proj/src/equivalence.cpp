#include "ccsk/equivalence.hpp"

#include <deque>
#include <map>
#include <set>
#include <stdexcept>

#include "ccsk/causality.hpp"
#include "ccsk/diamonds.hpp"
#include "ccsk/parser.hpp"
#include "ccsk/trace_io.hpp"

namespace ccsk {

namespace {

bool labels_concurrent(const EnhancedLabel& a, const EnhancedLabel& b) {
    return !depends(a, b) && !depends(b, a);
}

bool is_inverse_pair(const Transition& a, const Transition& b) {
    return equal(b, reverse(a));
}

}  // namespace

Trace parabolic_normal_form(const Trace& t, const LtsOptions& opts) {
    Trace out = t;
    auto& steps = out.steps;
    for (;;) {
        bool changed = false;
        for (std::size_t i = 0; i + 1 < steps.size(); ++i) {
            if (steps[i].direction != Direction::Forward ||
                steps[i + 1].direction != Direction::Backward)
                continue;
            if (is_inverse_pair(steps[i], steps[i + 1])) {
                steps.erase(steps.begin() + i, steps.begin() + i + 2);
            } else if (labels_concurrent(steps[i].label, steps[i + 1].label)) {
                auto [s2, s1] = commute_adjacent(steps[i], steps[i + 1], opts);
                steps[i] = s2;
                steps[i + 1] = s1;
            } else {
                throw std::runtime_error(
                    "parabolic normalization stuck on a dependent forward;backward pair: " +
                    to_string(steps[i].label) + " ; " + to_string(steps[i + 1].label));
            }
            changed = true;
            break;
        }
        if (!changed) break;
    }
    // The seam between the backward and forward blocks may still cancel.
    for (;;) {
        bool cancelled = false;
        for (std::size_t i = 0; i + 1 < steps.size(); ++i) {
            if (steps[i].direction == Direction::Backward &&
                steps[i + 1].direction == Direction::Forward &&
                is_inverse_pair(steps[i], steps[i + 1])) {
                steps.erase(steps.begin() + i, steps.begin() + i + 2);
                cancelled = true;
                break;
            }
        }
        if (!cancelled) break;
    }
    return out;
}

Trace canonical_form(const Trace& t, const LtsOptions& opts) {
    Trace out = parabolic_normal_form(t, opts);
    auto& steps = out.steps;
    bool changed = true;
    while (changed) {
        changed = false;
        for (std::size_t i = 0; i + 1 < steps.size(); ++i) {
            if (steps[i].direction != steps[i + 1].direction) continue;
            std::string a = to_string(collapse(steps[i].label));
            std::string b = to_string(collapse(steps[i + 1].label));
            if (!(b < a)) continue;
            if (!labels_concurrent(steps[i].label, steps[i + 1].label)) continue;
            try {
                auto [s2, s1] = commute_adjacent(steps[i], steps[i + 1], opts);
                steps[i] = s2;
                steps[i + 1] = s1;
                changed = true;
            } catch (const CommuteError&) {
                // Not commutable at the term level; leave the order as is.
            }
        }
    }
    return out;
}

namespace {

struct SearchState {
    Trace trace;
    std::string key;
};

std::string encode(const Trace& t) { return write_trace(t); }

ProcessPtr process_at(const Trace& t, std::size_t pos) {
    return pos == 0 ? t.source : t.steps[pos - 1].target;
}

std::vector<Trace> neighbors(const Trace& t, const std::vector<EnhancedLabel>& pool,
                             std::size_t length_cap, const EquivOptions& opts) {
    std::vector<Trace> out;
    const auto& steps = t.steps;
    for (std::size_t i = 0; i + 1 < steps.size(); ++i) {
        if (is_inverse_pair(steps[i], steps[i + 1])) {
            Trace n = t;
            n.steps.erase(n.steps.begin() + i, n.steps.begin() + i + 2);
            out.push_back(std::move(n));
        }
        if (labels_concurrent(steps[i].label, steps[i + 1].label)) {
            try {
                auto [s2, s1] = commute_adjacent(steps[i], steps[i + 1], opts.lts);
                Trace n = t;
                n.steps[i] = s2;
                n.steps[i + 1] = s1;
                out.push_back(std::move(n));
            } catch (const CommuteError&) {
            }
        }
    }
    if (opts.allow_insertions && steps.size() + 2 <= length_cap) {
        for (std::size_t pos = 0; pos <= steps.size(); ++pos) {
            ProcessPtr x = process_at(t, pos);
            for (const auto& l : pool) {
                for (Direction dir : {Direction::Forward, Direction::Backward}) {
                    for (const auto& cand : steps_matching(x, dir, l, opts.lts)) {
                        if (!(cand.label == l)) continue;
                        Trace n = t;
                        n.steps.insert(n.steps.begin() + pos, {cand, reverse(cand)});
                        out.push_back(std::move(n));
                    }
                }
            }
        }
    }
    return out;
}

}  // namespace

EquivResult causally_equivalent(const Trace& a, const Trace& b, const EquivOptions& opts) {
    if (!composable(a) || !composable(b))
        throw std::invalid_argument("causally_equivalent: traces must be composable");
    if (!equal(a.source, b.source)) return {false, true};
    if (!equal(a.final_target(), b.final_target())) return {false, true};

    std::string ka = encode(a), kb = encode(b);
    if (ka == kb) return {true, true};
    try {
        if (encode(canonical_form(a, opts.lts)) == encode(canonical_form(b, opts.lts)))
            return {true, true};
    } catch (const std::runtime_error&) {
        // Normalization can be stuck outside the marked fragment; fall
        // back to the closure search.
    }

    std::vector<EnhancedLabel> pool;
    std::set<std::string> pool_seen;
    for (const Trace* t : {&a, &b})
        for (const auto& s : t->steps)
            if (pool_seen.insert(to_string(s.label)).second) pool.push_back(s.label);
    std::size_t cap = std::max(a.steps.size(), b.steps.size());

    std::map<std::string, bool> visited_a{{ka, true}}, visited_b{{kb, true}};
    std::deque<SearchState> frontier_a{{a, ka}}, frontier_b{{b, kb}};
    std::size_t states = 2;

    while (!frontier_a.empty() && !frontier_b.empty()) {
        bool expand_a = frontier_a.size() <= frontier_b.size();
        auto& frontier = expand_a ? frontier_a : frontier_b;
        auto& mine = expand_a ? visited_a : visited_b;
        auto& theirs = expand_a ? visited_b : visited_a;
        std::size_t layer = frontier.size();
        for (std::size_t i = 0; i < layer; ++i) {
            SearchState cur = std::move(frontier.front());
            frontier.pop_front();
            for (auto& n : neighbors(cur.trace, pool, cap, opts)) {
                std::string key = encode(n);
                if (theirs.count(key)) return {true, true};
                if (!mine.emplace(key, true).second) continue;
                if (++states > opts.max_states) return {false, false};
                frontier.push_back({std::move(n), std::move(key)});
            }
        }
    }
    return {false, true};
}

namespace {

void enumerate_traces(const Trace& cur, std::size_t depth, const LtsOptions& opts,
                      std::vector<Trace>& out) {
    out.push_back(cur);
    if (cur.steps.size() >= depth) return;
    ProcessPtr at = cur.final_target();
    auto extend = [&](const Transition& t) {
        Trace next = cur;
        next.steps.push_back(t);
        enumerate_traces(next, depth, opts, out);
    };
    for (const auto& t : forward_steps(at, opts)) extend(t);
    for (const auto& t : backward_steps(at, opts)) extend(t);
}

}  // namespace

ConsistencyReport check_causal_consistency(const ProcessPtr& p, std::size_t depth,
                                           const EquivOptions& opts) {
    ConsistencyReport report;
    std::vector<Trace> traces;
    enumerate_traces(Trace{p, {}}, depth, opts.lts, traces);
    report.traces = traces.size();

    std::map<std::string, std::vector<std::size_t>> groups;
    for (std::size_t i = 0; i < traces.size(); ++i)
        groups[print(traces[i].final_target())].push_back(i);

    for (const auto& [endpoint, members] : groups) {
        if (members.size() < 2) continue;
        ++report.endpoint_groups;
        const Trace& first = traces[members.front()];
        for (std::size_t i = 1; i < members.size(); ++i) {
            const Trace& other = traces[members[i]];
            ++report.pairs_checked;
            EquivResult r = causally_equivalent(first, other, opts);
            if (!r.equivalent)
                report.equivalence_violations.push_back(
                    {encode(first), encode(other), r.exhaustive});
        }
    }

    std::set<std::string> seen;
    for (const auto& t : traces) {
        ProcessPtr state = t.final_target();
        if (!seen.insert(print(state)).second) continue;
        ++report.states;
        auto bwd = backward_steps(state, opts.lts);
        for (std::size_t i = 0; i < bwd.size(); ++i)
            for (std::size_t j = i + 1; j < bwd.size(); ++j)
                if (!coinitial_concurrent(bwd[i], bwd[j]))
                    report.backward_concurrency_violations.push_back(
                        {print(state), to_string(bwd[i].label), to_string(bwd[j].label)});
    }
    return report;
}

}  // namespace ccsk
