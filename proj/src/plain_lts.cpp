#include "ccsk/plain_lts.hpp"

#include <stdexcept>

#include "ccsk/parser.hpp"

namespace ccsk {

namespace {

bool touches(const ActionLabel& a, const std::string& restricted) {
    return !a.is_tau() && a.name == restricted;
}

struct PF {
    ActionLabel action;
    ProcessPtr target;
};

std::vector<PF> pfwd(const ProcessPtr& p, unsigned k, bool marking) {
    std::vector<PF> out;
    switch (p->kind) {
        case Process::Kind::Nil:
            break;
        case Process::Kind::Prefix:
            if (is_standard(p->left))
                out.push_back({p->action, keyed_prefix(p->action, Key{k, false}, p->left)});
            break;
        case Process::Kind::KeyedPrefix:
            for (auto& s : pfwd(p->left, k, marking))
                out.push_back({s.action, keyed_prefix(p->action, p->key, s.target)});
            break;
        case Process::Kind::Restrict:
            for (auto& s : pfwd(p->left, k, marking))
                if (!touches(s.action, p->restricted))
                    out.push_back({s.action, restrict_name(s.target, p->restricted)});
            break;
        case Process::Kind::Sum:
            if (is_standard(p->right))
                for (auto& s : pfwd(p->left, k, marking))
                    out.push_back({s.action, sum(s.target, p->right)});
            if (is_standard(p->left))
                for (auto& s : pfwd(p->right, k, marking))
                    out.push_back({s.action, sum(p->left, s.target)});
            break;
        case Process::Kind::Par: {
            auto ls = pfwd(p->left, k, marking);
            auto rs = pfwd(p->right, k, marking);
            for (const auto& s : ls) out.push_back({s.action, par(s.target, p->right)});
            for (const auto& sl : ls) {
                if (sl.action.is_tau()) continue;
                for (const auto& sr : rs) {
                    if (sr.action.is_tau()) continue;
                    if (!(complement(sl.action) == sr.action)) continue;
                    out.push_back({act_tau(), par(sl.target, sr.target)});
                }
            }
            for (const auto& s : rs) out.push_back({s.action, par(p->left, s.target)});
            break;
        }
        case Process::Kind::Bang: {
            auto bs = pfwd(p->left, k, marking);
            auto spawn = [&](const ProcessPtr& copy) {
                return par(p, marking ? mark_all(copy) : copy);
            };
            for (const auto& s : bs) out.push_back({s.action, spawn(s.target)});
            for (const auto& sl : bs) {
                if (sl.action.is_tau()) continue;
                for (const auto& sr : bs) {
                    if (sr.action.is_tau() || !(complement(sl.action) == sr.action)) continue;
                    out.push_back({act_tau(), spawn(par(sl.target, sr.target))});
                }
            }
            break;
        }
    }
    return out;
}

struct PB {
    ActionLabel action;
    unsigned key = 0;
    ProcessPtr target;
    bool consumed_marked = false;
};

std::vector<PB> pbwd(const ProcessPtr& p) {
    std::vector<PB> out;
    switch (p->kind) {
        case Process::Kind::Nil:
        case Process::Kind::Prefix:
        case Process::Kind::Bang:
            break;
        case Process::Kind::KeyedPrefix:
            if (is_standard(p->left)) {
                out.push_back({p->action, p->key.index, prefix(p->action, p->left), p->key.marked});
            } else {
                for (auto& s : pbwd(p->left))
                    if (s.key != p->key.index)
                        out.push_back({s.action, s.key, keyed_prefix(p->action, p->key, s.target),
                                       s.consumed_marked});
            }
            break;
        case Process::Kind::Restrict:
            for (auto& s : pbwd(p->left))
                if (!touches(s.action, p->restricted))
                    out.push_back({s.action, s.key, restrict_name(s.target, p->restricted),
                                   s.consumed_marked});
            break;
        case Process::Kind::Sum:
            if (is_standard(p->right))
                for (auto& s : pbwd(p->left))
                    out.push_back({s.action, s.key, sum(s.target, p->right), s.consumed_marked});
            if (is_standard(p->left))
                for (auto& s : pbwd(p->right))
                    out.push_back({s.action, s.key, sum(p->left, s.target), s.consumed_marked});
            break;
        case Process::Kind::Par: {
            auto ls = pbwd(p->left);
            auto rs = pbwd(p->right);
            auto lidx = key_indices(p->left);
            auto ridx = key_indices(p->right);
            for (const auto& s : ls)
                if (!ridx.count(s.key))
                    out.push_back({s.action, s.key, par(s.target, p->right), s.consumed_marked});
            for (const auto& sl : ls) {
                if (sl.action.is_tau()) continue;
                for (const auto& sr : rs) {
                    if (sr.action.is_tau()) continue;
                    if (sl.key != sr.key || !(complement(sl.action) == sr.action)) continue;
                    out.push_back({act_tau(), sl.key, par(sl.target, sr.target),
                                   sl.consumed_marked || sr.consumed_marked});
                }
            }
            for (const auto& s : rs)
                if (!lidx.count(s.key))
                    out.push_back({s.action, s.key, par(p->left, s.target), s.consumed_marked});
            if (p->left->kind == Process::Kind::Bang && is_standard(p->left->left)) {
                const ProcessPtr& body = p->left->left;
                for (const auto& s : pbwd(unmark_all(p->right)))
                    if (equal(s.target, body))
                        out.push_back({s.action, s.key, p->left, false});
                if (p->right->kind == Process::Kind::Par) {
                    for (const auto& s1 : pbwd(unmark_all(p->right->left))) {
                        if (s1.action.is_tau() || !equal(s1.target, body)) continue;
                        for (const auto& s2 : pbwd(unmark_all(p->right->right))) {
                            if (s2.action.is_tau() || s1.key != s2.key) continue;
                            if (!(complement(s1.action) == s2.action)) continue;
                            if (!equal(s2.target, body)) continue;
                            out.push_back({act_tau(), s1.key, p->left, false});
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

std::vector<PlainStep> plain_forward(const ProcessPtr& p, const LtsOptions& opts,
                                     std::optional<unsigned> forced_key) {
    unsigned k = forced_key ? *forced_key : min_fresh_index(p);
    if (key_indices(p).count(k))
        throw std::invalid_argument("forced key " + std::to_string(k) + " is not fresh in " +
                                    print(p));
    std::vector<PlainStep> out;
    for (auto& s : pfwd(p, k, opts.marking))
        out.push_back({std::move(s.action), Key{k, false}, std::move(s.target)});
    return out;
}

std::vector<PlainStep> plain_backward(const ProcessPtr& p, const LtsOptions& opts) {
    std::vector<PlainStep> out;
    for (auto& s : pbwd(p)) {
        if (opts.marking && s.consumed_marked) continue;
        out.push_back({std::move(s.action), Key{s.key, false}, std::move(s.target)});
    }
    return out;
}

bool plain_derivable(const ProcessPtr& source, Direction dir, const ActionLabel& action,
                     unsigned key_index, const ProcessPtr& target, const LtsOptions& opts) {
    std::vector<PlainStep> candidates;
    if (dir == Direction::Forward) {
        if (key_indices(source).count(key_index)) return false;
        candidates = plain_forward(source, opts, key_index);
    } else {
        candidates = plain_backward(source, opts);
    }
    for (const auto& c : candidates)
        if (c.action == action && c.key.index == key_index && equal(c.target, target)) return true;
    return false;
}

}  // namespace ccsk
