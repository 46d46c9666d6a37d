#include "ccsk/process.hpp"

#include <map>
#include <stdexcept>

namespace ccsk {

ActionLabel act_name(std::string n) { return {ActKind::Name, std::move(n)}; }
ActionLabel act_coname(std::string n) { return {ActKind::CoName, std::move(n)}; }
ActionLabel act_tau() { return {ActKind::Tau, {}}; }

ActionLabel complement(const ActionLabel& a) {
    switch (a.kind) {
        case ActKind::Name: return {ActKind::CoName, a.name};
        case ActKind::CoName: return {ActKind::Name, a.name};
        case ActKind::Tau: break;
    }
    throw std::invalid_argument("complement undefined on tau");
}

std::string to_string(const ActionLabel& a) {
    switch (a.kind) {
        case ActKind::Name: return a.name;
        case ActKind::CoName: return "'" + a.name;
        case ActKind::Tau: return "tau";
    }
    return {};
}

std::string to_string(const Key& k) {
    return std::to_string(k.index) + (k.marked ? "!" : "");
}

namespace {
ProcessPtr make(Process p) { return std::make_shared<const Process>(std::move(p)); }
}  // namespace

ProcessPtr nil() {
    static const ProcessPtr n = make({});
    return n;
}

ProcessPtr prefix(ActionLabel a, ProcessPtr p) {
    Process q;
    q.kind = Process::Kind::Prefix;
    q.action = std::move(a);
    q.left = std::move(p);
    return make(std::move(q));
}

ProcessPtr keyed_prefix(ActionLabel a, Key k, ProcessPtr p) {
    Process q;
    q.kind = Process::Kind::KeyedPrefix;
    q.action = std::move(a);
    q.key = k;
    q.left = std::move(p);
    return make(std::move(q));
}

ProcessPtr sum(ProcessPtr l, ProcessPtr r) {
    Process q;
    q.kind = Process::Kind::Sum;
    q.left = std::move(l);
    q.right = std::move(r);
    return make(std::move(q));
}

ProcessPtr par(ProcessPtr l, ProcessPtr r) {
    Process q;
    q.kind = Process::Kind::Par;
    q.left = std::move(l);
    q.right = std::move(r);
    return make(std::move(q));
}

ProcessPtr restrict_name(ProcessPtr p, std::string name) {
    Process q;
    q.kind = Process::Kind::Restrict;
    q.restricted = std::move(name);
    q.left = std::move(p);
    return make(std::move(q));
}

ProcessPtr bang(ProcessPtr p) {
    Process q;
    q.kind = Process::Kind::Bang;
    q.left = std::move(p);
    return make(std::move(q));
}

bool equal(const Process& a, const Process& b) {
    if (a.kind != b.kind) return false;
    switch (a.kind) {
        case Process::Kind::Nil: return true;
        case Process::Kind::Prefix:
            return a.action == b.action && equal(*a.left, *b.left);
        case Process::Kind::KeyedPrefix:
            return a.action == b.action && a.key == b.key && equal(*a.left, *b.left);
        case Process::Kind::Sum:
        case Process::Kind::Par:
            return equal(*a.left, *b.left) && equal(*a.right, *b.right);
        case Process::Kind::Restrict:
            return a.restricted == b.restricted && equal(*a.left, *b.left);
        case Process::Kind::Bang:
            return equal(*a.left, *b.left);
    }
    return false;
}

bool equal(const ProcessPtr& a, const ProcessPtr& b) {
    if (a == b) return true;
    if (!a || !b) return false;
    return equal(*a, *b);
}

namespace {

template <typename F>
void for_each_key(const ProcessPtr& p, F&& f) {
    if (!p) return;
    switch (p->kind) {
        case Process::Kind::Nil: return;
        case Process::Kind::KeyedPrefix:
            f(p->key);
            [[fallthrough]];
        case Process::Kind::Prefix:
        case Process::Kind::Restrict:
        case Process::Kind::Bang:
            for_each_key(p->left, f);
            return;
        case Process::Kind::Sum:
        case Process::Kind::Par:
            for_each_key(p->left, f);
            for_each_key(p->right, f);
            return;
    }
}

}  // namespace

std::vector<Key> keys(const ProcessPtr& p) {
    std::vector<Key> out;
    for_each_key(p, [&](const Key& k) { out.push_back(k); });
    return out;
}

std::set<unsigned> key_indices(const ProcessPtr& p) {
    std::set<unsigned> out;
    for_each_key(p, [&](const Key& k) { out.insert(k.index); });
    return out;
}

unsigned min_fresh_index(const ProcessPtr& p) {
    auto used = key_indices(p);
    unsigned i = 0;
    while (used.count(i)) ++i;
    return i;
}

bool is_standard(const ProcessPtr& p) {
    bool found = false;
    for_each_key(p, [&](const Key&) { found = true; });
    return !found;
}

namespace {

ProcessPtr map_marks(const ProcessPtr& p, bool marked) {
    if (!p) return p;
    switch (p->kind) {
        case Process::Kind::Nil: return p;
        case Process::Kind::Prefix: return prefix(p->action, map_marks(p->left, marked));
        case Process::Kind::KeyedPrefix:
            return keyed_prefix(p->action, Key{p->key.index, marked}, map_marks(p->left, marked));
        case Process::Kind::Sum: return sum(map_marks(p->left, marked), map_marks(p->right, marked));
        case Process::Kind::Par: return par(map_marks(p->left, marked), map_marks(p->right, marked));
        case Process::Kind::Restrict:
            return restrict_name(map_marks(p->left, marked), p->restricted);
        case Process::Kind::Bang: return bang(map_marks(p->left, marked));
    }
    return p;
}

}  // namespace

ProcessPtr mark_all(const ProcessPtr& p) { return map_marks(p, true); }
ProcessPtr unmark_all(const ProcessPtr& p) { return map_marks(p, false); }

namespace {

// Leftmost traversal; a guarded subterm beta.X stops the search and once
// the occurrence is removed nothing past it is visited.
ProcessPtr remove_first(const ProcessPtr& p, const ActionLabel& alpha, const Key& k, bool& done) {
    if (!p || done) return p;
    switch (p->kind) {
        case Process::Kind::Nil:
        case Process::Kind::Prefix:
            return p;
        case Process::Kind::KeyedPrefix:
            if (p->action == alpha && p->key == k) {
                done = true;
                return p->left;
            }
            return keyed_prefix(p->action, p->key, remove_first(p->left, alpha, k, done));
        case Process::Kind::Sum: {
            auto l = remove_first(p->left, alpha, k, done);
            auto r = remove_first(p->right, alpha, k, done);
            return sum(l, r);
        }
        case Process::Kind::Par: {
            auto l = remove_first(p->left, alpha, k, done);
            auto r = remove_first(p->right, alpha, k, done);
            return par(l, r);
        }
        case Process::Kind::Restrict:
            return restrict_name(remove_first(p->left, alpha, k, done), p->restricted);
        case Process::Kind::Bang:
            return bang(remove_first(p->left, alpha, k, done));
    }
    return p;
}

}  // namespace

ProcessPtr remove_keyed(const ProcessPtr& p, const ActionLabel& alpha, const Key& k) {
    bool done = false;
    return remove_first(p, alpha, k, done);
}

ProcessPtr remove_key_pair(const ProcessPtr& p, const ActionLabel& alpha, const Key& k) {
    if (alpha.is_tau()) return remove_keyed(p, alpha, k);
    return remove_keyed(remove_keyed(p, complement(alpha), k), alpha, k);
}

std::size_t keyed_prefix_count(const ProcessPtr& p) {
    std::size_t n = 0;
    for_each_key(p, [&](const Key&) { ++n; });
    return n;
}

namespace {

void collect_issues(const ProcessPtr& p, bool under_bang, std::vector<ValidationIssue>& out) {
    if (!p) return;
    switch (p->kind) {
        case Process::Kind::Nil: return;
        case Process::Kind::Prefix:
        case Process::Kind::KeyedPrefix:
            if (p->action.is_tau())
                out.push_back({ValidationIssue::Code::TauPrefix, "tau used as a prefix"});
            collect_issues(p->left, under_bang, out);
            return;
        case Process::Kind::Sum:
            if (!is_standard(p->left) && !is_standard(p->right))
                out.push_back({ValidationIssue::Code::SumOfNonStandard,
                               "both operands of a sum carry keys"});
            collect_issues(p->left, under_bang, out);
            collect_issues(p->right, under_bang, out);
            return;
        case Process::Kind::Par:
            collect_issues(p->left, under_bang, out);
            collect_issues(p->right, under_bang, out);
            return;
        case Process::Kind::Restrict:
            collect_issues(p->left, under_bang, out);
            return;
        case Process::Kind::Bang:
            if (under_bang)
                out.push_back({ValidationIssue::Code::NestedBang,
                               "replication nested under replication"});
            if (!is_standard(p->left))
                out.push_back({ValidationIssue::Code::BangBodyNotStandard,
                               "replication body carries keys"});
            collect_issues(p->left, true, out);
            return;
    }
}

struct KeyUse {
    std::size_t count = 0;
    std::vector<ActionLabel> actions;
};

void collect_key_uses(const ProcessPtr& p, std::map<unsigned, KeyUse>& uses) {
    if (!p) return;
    if (p->kind == Process::Kind::KeyedPrefix) {
        auto& u = uses[p->key.index];
        ++u.count;
        u.actions.push_back(p->action);
    }
    collect_key_uses(p->left, uses);
    collect_key_uses(p->right, uses);
}

}  // namespace

std::vector<ValidationIssue> validate(const ProcessPtr& p) {
    std::vector<ValidationIssue> out;
    collect_issues(p, false, out);
    std::map<unsigned, KeyUse> uses;
    collect_key_uses(p, uses);
    for (const auto& [idx, use] : uses) {
        if (use.count > 2) {
            out.push_back({ValidationIssue::Code::KeyOverused,
                           "key " + std::to_string(idx) + " occurs " +
                               std::to_string(use.count) + " times"});
        } else if (use.count == 2) {
            const auto& a = use.actions[0];
            const auto& b = use.actions[1];
            if (a.is_tau() || b.is_tau() || !(complement(a) == b))
                out.push_back({ValidationIssue::Code::KeyPairNotComplementary,
                               "key " + std::to_string(idx) +
                                   " shared by non-complementary prefixes"});
        }
    }
    return out;
}

bool has_nested_bang(const ProcessPtr& p) {
    for (const auto& issue : validate(p))
        if (issue.code == ValidationIssue::Code::NestedBang) return true;
    return false;
}

}  // namespace ccsk
