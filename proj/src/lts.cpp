#include "ccsk/lts.hpp"

#include <deque>
#include <map>
#include <stdexcept>

#include "ccsk/parser.hpp"

namespace ccsk {

Direction flip(Direction d) {
    return d == Direction::Forward ? Direction::Backward : Direction::Forward;
}

std::string to_string(Direction d) { return d == Direction::Forward ? "fw" : "bw"; }

bool equal(const Transition& a, const Transition& b) {
    return a.direction == b.direction && a.label == b.label && equal(a.source, b.source) &&
           equal(a.target, b.target);
}

bool composable(const Trace& t) {
    ProcessPtr at = t.source;
    for (const auto& s : t.steps) {
        if (!equal(at, s.source)) return false;
        at = s.target;
    }
    return true;
}

namespace {

SimpleLabel side(Tag t, const EnhancedLabel& premise) {
    SimpleLabel s = as_simple(premise);
    s.path.insert(s.path.begin(), t);
    return s;
}

bool simple_non_tau(const EnhancedLabel& l) {
    return !l.is_sync() && !l.act().action.is_tau();
}

bool action_touches(const ActionLabel& a, const std::string& restricted) {
    return !a.is_tau() && a.name == restricted;
}

struct FStep {
    EnhancedLabel label;
    ProcessPtr target;
};

std::vector<FStep> fwd(const ProcessPtr& p, unsigned k, bool marking) {
    std::vector<FStep> out;
    switch (p->kind) {
        case Process::Kind::Nil:
            break;
        case Process::Kind::Prefix:
            if (is_standard(p->left)) {
                Key fresh{k, false};
                out.push_back({simple_label({}, p->action, fresh),
                               keyed_prefix(p->action, fresh, p->left)});
            }
            break;
        case Process::Kind::KeyedPrefix:
            // pre.: the fresh key differs from p->key by global freshness.
            for (auto& s : fwd(p->left, k, marking))
                out.push_back({std::move(s.label), keyed_prefix(p->action, p->key, s.target)});
            break;
        case Process::Kind::Restrict:
            for (auto& s : fwd(p->left, k, marking))
                if (!action_touches(action_of(s.label), p->restricted))
                    out.push_back({std::move(s.label), restrict_name(s.target, p->restricted)});
            break;
        case Process::Kind::Sum:
            if (is_standard(p->right))
                for (auto& s : fwd(p->left, k, marking))
                    out.push_back({std::move(s.label), sum(s.target, p->right)});
            if (is_standard(p->left))
                for (auto& s : fwd(p->right, k, marking))
                    out.push_back({std::move(s.label), sum(p->left, s.target)});
            break;
        case Process::Kind::Par: {
            auto ls = fwd(p->left, k, marking);
            auto rs = fwd(p->right, k, marking);
            for (const auto& s : ls)
                out.push_back({with_tag(Tag::ParL, s.label), par(s.target, p->right)});
            for (const auto& sl : ls) {
                if (!simple_non_tau(sl.label)) continue;
                for (const auto& sr : rs) {
                    if (!simple_non_tau(sr.label)) continue;
                    if (!(complement(sl.label.act().action) == sr.label.act().action)) continue;
                    out.push_back({sync_label({}, side(Tag::ParL, sl.label), side(Tag::ParR, sr.label)),
                                   par(sl.target, sr.target)});
                }
            }
            for (const auto& s : rs)
                out.push_back({with_tag(Tag::ParR, s.label), par(p->left, s.target)});
            break;
        }
        case Process::Kind::Bang: {
            auto bs = fwd(p->left, k, marking);
            auto spawn = [&](const ProcessPtr& copy) {
                return par(p, marking ? mark_all(copy) : copy);
            };
            for (const auto& s : bs)
                out.push_back({with_tag(Tag::Bang, s.label), spawn(s.target)});
            // repl.2: both orientations of a complementary premise pair are
            // rule instances (the diamonds need the mirrored one).
            for (const auto& sl : bs) {
                if (!simple_non_tau(sl.label)) continue;
                for (const auto& sr : bs) {
                    if (!simple_non_tau(sr.label)) continue;
                    if (!(complement(sl.label.act().action) == sr.label.act().action)) continue;
                    out.push_back(
                        {sync_label({Tag::Bang}, side(Tag::ParL, sl.label), side(Tag::ParR, sr.label)),
                         spawn(par(sl.target, sr.target))});
                }
            }
            break;
        }
    }
    return out;
}

struct BStep {
    EnhancedLabel label;
    ProcessPtr target;
    bool consumed_marked = false;
};

std::vector<BStep> bwd(const ProcessPtr& p) {
    std::vector<BStep> out;
    switch (p->kind) {
        case Process::Kind::Nil:
        case Process::Kind::Prefix:
        case Process::Kind::Bang:
            break;
        case Process::Kind::KeyedPrefix:
            if (is_standard(p->left)) {
                // Labels carry unmarked keys; the mark of the consumed
                // occurrence decides admissibility.
                out.push_back({simple_label({}, p->action, Key{p->key.index, false}),
                               prefix(p->action, p->left), p->key.marked});
            } else {
                for (auto& s : bwd(p->left))
                    if (key_of(s.label).index != p->key.index)
                        out.push_back({std::move(s.label),
                                       keyed_prefix(p->action, p->key, s.target),
                                       s.consumed_marked});
            }
            break;
        case Process::Kind::Restrict:
            for (auto& s : bwd(p->left))
                if (!action_touches(action_of(s.label), p->restricted))
                    out.push_back({std::move(s.label), restrict_name(s.target, p->restricted),
                                   s.consumed_marked});
            break;
        case Process::Kind::Sum:
            if (is_standard(p->right))
                for (auto& s : bwd(p->left))
                    out.push_back({std::move(s.label), sum(s.target, p->right), s.consumed_marked});
            if (is_standard(p->left))
                for (auto& s : bwd(p->right))
                    out.push_back({std::move(s.label), sum(p->left, s.target), s.consumed_marked});
            break;
        case Process::Kind::Par: {
            auto ls = bwd(p->left);
            auto rs = bwd(p->right);
            auto lidx = key_indices(p->left);
            auto ridx = key_indices(p->right);
            for (const auto& s : ls)
                if (!ridx.count(key_of(s.label).index))
                    out.push_back({with_tag(Tag::ParL, s.label), par(s.target, p->right),
                                   s.consumed_marked});
            for (const auto& sl : ls) {
                if (!simple_non_tau(sl.label)) continue;
                for (const auto& sr : rs) {
                    if (!simple_non_tau(sr.label)) continue;
                    if (sl.label.act().key != sr.label.act().key) continue;
                    if (!(complement(sl.label.act().action) == sr.label.act().action)) continue;
                    out.push_back({sync_label({}, side(Tag::ParL, sl.label), side(Tag::ParR, sr.label)),
                                   par(sl.target, sr.target),
                                   sl.consumed_marked || sr.consumed_marked});
                }
            }
            for (const auto& s : rs)
                if (!lidx.count(key_of(s.label).index))
                    out.push_back({with_tag(Tag::ParR, s.label), par(p->left, s.target),
                                   s.consumed_marked});
            // Reverse replication: !X | Y rewinds to !X when the unmarked
            // copy undoes a single step back to the body.
            if (p->left->kind == Process::Kind::Bang && is_standard(p->left->left)) {
                const ProcessPtr& body = p->left->left;
                for (const auto& s : bwd(unmark_all(p->right)))
                    if (equal(s.target, body))
                        out.push_back({with_tag(Tag::Bang, s.label), p->left, false});
                if (p->right->kind == Process::Kind::Par) {
                    auto l1 = bwd(unmark_all(p->right->left));
                    auto l2 = bwd(unmark_all(p->right->right));
                    for (const auto& s1 : l1) {
                        if (!simple_non_tau(s1.label)) continue;
                        if (!equal(s1.target, body)) continue;
                        for (const auto& s2 : l2) {
                            if (!simple_non_tau(s2.label)) continue;
                            if (s1.label.act().key != s2.label.act().key) continue;
                            if (!(complement(s1.label.act().action) == s2.label.act().action))
                                continue;
                            if (!equal(s2.target, body)) continue;
                            out.push_back({sync_label({Tag::Bang}, side(Tag::ParL, s1.label),
                                                      side(Tag::ParR, s2.label)),
                                           p->left, false});
                        }
                    }
                }
            }
            break;
        }
    }
    return out;
}

}  // namespace

std::vector<Transition> forward_steps(const ProcessPtr& p, const LtsOptions& opts,
                                      std::optional<unsigned> forced_key) {
    unsigned k = forced_key ? *forced_key : min_fresh_index(p);
    if (key_indices(p).count(k))
        throw std::invalid_argument("forced key " + std::to_string(k) + " is not fresh in " +
                                    print(p));
    std::vector<Transition> out;
    for (auto& s : fwd(p, k, opts.marking))
        out.push_back({p, Direction::Forward, std::move(s.label), std::move(s.target)});
    return out;
}

std::vector<Transition> backward_steps(const ProcessPtr& p, const LtsOptions& opts) {
    std::vector<Transition> out;
    for (auto& s : bwd(p)) {
        if (opts.marking && s.consumed_marked) continue;
        out.push_back({p, Direction::Backward, std::move(s.label), std::move(s.target)});
    }
    return out;
}

std::vector<Transition> steps_matching(const ProcessPtr& p, Direction dir,
                                       const EnhancedLabel& pattern, const LtsOptions& opts) {
    EnhancedLabel want = collapse(pattern);
    std::vector<Transition> candidates;
    if (dir == Direction::Forward) {
        unsigned k = key_of(pattern).index;
        if (key_indices(p).count(k)) return {};
        candidates = forward_steps(p, opts, k);
    } else {
        candidates = backward_steps(p, opts);
    }
    std::vector<Transition> out;
    for (auto& t : candidates)
        if (collapse(t.label) == want) out.push_back(std::move(t));
    return out;
}

Transition reverse(const Transition& t) {
    return {t.target, flip(t.direction), t.label, t.source};
}

bool derivable(const Transition& t, const LtsOptions& opts) {
    std::vector<Transition> candidates;
    if (t.direction == Direction::Forward) {
        unsigned k = key_of(t.label).index;
        if (key_indices(t.source).count(k)) return false;
        candidates = forward_steps(t.source, opts, k);
    } else {
        candidates = backward_steps(t.source, opts);
    }
    for (const auto& c : candidates)
        if (c.label == t.label && equal(c.target, t.target)) return true;
    return false;
}

OriginReport origin_report(const ProcessPtr& p, const LtsOptions& opts) {
    OriginReport report;
    std::map<std::string, std::size_t> seen;  // canonical form -> depth first reached
    std::map<std::string, ProcessPtr> origin_set, stuck_set;
    std::deque<std::pair<ProcessPtr, std::size_t>> queue{{p, 0}};
    seen[print(p)] = 0;
    while (!queue.empty()) {
        auto [x, depth] = queue.front();
        queue.pop_front();
        report.longest_walk = std::max(report.longest_walk, depth);
        auto steps = backward_steps(x, opts);
        if (steps.empty()) {
            (is_standard(x) ? origin_set : stuck_set).emplace(print(x), x);
            continue;
        }
        for (const auto& s : steps) {
            std::string key = print(s.target);
            if (seen.emplace(key, depth + 1).second) queue.push_back({s.target, depth + 1});
        }
    }
    for (auto& [_, proc] : origin_set) report.origins.push_back(proc);
    for (auto& [_, proc] : stuck_set) report.stuck.push_back(proc);
    return report;
}

ProcessPtr origin(const ProcessPtr& p, const LtsOptions& opts) {
    auto report = origin_report(p, opts);
    if (report.confluent()) return report.origins.front();
    std::string msg = "backward exploration of " + print(p) + " is not confluent:";
    for (const auto& o : report.origins) msg += " origin " + print(o) + ";";
    for (const auto& s : report.stuck) msg += " stuck " + print(s) + ";";
    throw std::runtime_error(msg);
}

namespace {

enum class LabelShape { Act, Parish, Bangish };

LabelShape shape_of(const EnhancedLabel& l) {
    if (l.path.empty()) return l.is_sync() ? LabelShape::Parish : LabelShape::Act;
    switch (l.path.front()) {
        case Tag::ParL:
        case Tag::ParR: return LabelShape::Parish;
        case Tag::Bang: return LabelShape::Bangish;
    }
    return LabelShape::Act;
}

[[noreturn]] void focus_fail(const Transition& t) {
    throw std::invalid_argument("focus: transition does not match any derivation shape: " +
                                to_string(t.label) + " at " + print(t.source));
}

}  // namespace

Focus focus(const Transition& t) {
    LabelShape sh = shape_of(t.label);
    ProcessPtr s = t.source, g = t.target;
    for (;;) {
        switch (s->kind) {
            case Process::Kind::Nil:
                focus_fail(t);
            case Process::Kind::Prefix:
                if (sh == LabelShape::Act && t.direction == Direction::Forward)
                    return {s, {s, t.direction, t.label, g}};
                focus_fail(t);
            case Process::Kind::KeyedPrefix:
                if (sh == LabelShape::Act && t.direction == Direction::Backward &&
                    key_of(t.label).index == s->key.index)
                    return {s, {s, t.direction, t.label, g}};
                if (g->kind != Process::Kind::KeyedPrefix) focus_fail(t);
                s = s->left;
                g = g->left;
                break;
            case Process::Kind::Restrict:
                if (g->kind != Process::Kind::Restrict) focus_fail(t);
                s = s->left;
                g = g->left;
                break;
            case Process::Kind::Sum:
                if (g->kind != Process::Kind::Sum) focus_fail(t);
                if (!equal(s->left, g->left)) {
                    s = s->left;
                    g = g->left;
                } else {
                    s = s->right;
                    g = g->right;
                }
                break;
            case Process::Kind::Par:
                if (sh == LabelShape::Parish) return {s, {s, t.direction, t.label, g}};
                if (sh == LabelShape::Bangish && t.direction == Direction::Backward &&
                    s->left->kind == Process::Kind::Bang)
                    return {s, {s, t.direction, t.label, g}};
                focus_fail(t);
            case Process::Kind::Bang:
                if (sh == LabelShape::Bangish && t.direction == Direction::Forward)
                    return {s, {s, t.direction, t.label, g}};
                focus_fail(t);
        }
    }
}

std::string to_string(const Transition& t) {
    return to_string(t.direction) + " " + to_string(t.label) + " :: " + print(t.target);
}

}  // namespace ccsk
