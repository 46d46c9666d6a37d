#include "ccsk/causality.hpp"

#include <stdexcept>

namespace ccsk {

namespace {

// A view into a label with part of its path consumed, so the recursion can
// peel tags without copying.
struct LView {
    const Tag* tags = nullptr;
    std::size_t n = 0;
    const ActCore* act = nullptr;
    const SyncCore* sync = nullptr;
};

LView view(const EnhancedLabel& l) {
    LView v;
    v.tags = l.path.data();
    v.n = l.path.size();
    if (l.is_sync())
        v.sync = &l.sync();
    else
        v.act = &l.act();
    return v;
}

LView view(const SimpleLabel& l) {
    return {l.path.data(), l.path.size(), &l.core, nullptr};
}

LView tail(LView v) {
    return {v.tags + 1, v.n - 1, v.act, v.sync};
}

bool dep(LView a, LView b) {
    if (a.n == 0) {
        if (a.act) return true;                                      // alpha[k] < theta
        return dep(view(a.sync->left), b) || dep(view(a.sync->right), b);
    }
    if (b.n == 0) {
        if (b.sync) return dep(a, view(b.sync->left)) || dep(a, view(b.sync->right));
        return false;  // path-headed label never causes a bare action
    }
    Tag h1 = a.tags[0], h2 = b.tags[0];
    if (h1 == Tag::ParL || h1 == Tag::ParR) return h1 == h2 && dep(tail(a), tail(b));
    // h1 == Bang
    if (h2 == Tag::Bang) {
        LView t = tail(a), tp = tail(b);
        // A spawn of a single copy and a spawn of a synchronised copy pair
        // produce structurally incompatible targets; otherwise the
        // premises decide.
        bool pair_a = t.n == 0 && t.sync;
        bool pair_b = tp.n == 0 && tp.sync;
        if (pair_a != pair_b) return true;
        return dep(t, tp);
    }
    if (h2 == Tag::ParL) return true;
    LView t = tail(a), tp = tail(b);
    if (t.n == 0 && t.sync && tp.n > 0 && (tp.tags[0] == Tag::ParL || tp.tags[0] == Tag::ParR))
        return true;  // spawn of a self-sync causes both halves of the copy
    return dep(t, tp);
}

std::string show(LView v) {
    EnhancedLabel l;
    l.path.assign(v.tags, v.tags + v.n);
    if (v.act)
        l.core = *v.act;
    else
        l.core = *v.sync;
    return to_string(l);
}

bool dep_trail(LView a, LView b, std::vector<std::string>& trail) {
    auto note = [&](const std::string& rule) {
        trail.push_back(show(a) + " < " + show(b) + "  [" + rule + "]");
    };
    if (a.n == 0) {
        if (a.act) {
            note("action is a dependency of everything after it");
            return true;
        }
        std::size_t mark = trail.size();
        note("sync component");
        if (dep_trail(view(a.sync->left), b, trail)) return true;
        trail.resize(mark);
        note("sync component");
        if (dep_trail(view(a.sync->right), b, trail)) return true;
        trail.resize(mark);
        return false;
    }
    if (b.n == 0) {
        if (b.sync) {
            std::size_t mark = trail.size();
            note("sync component");
            if (dep_trail(a, view(b.sync->left), trail)) return true;
            trail.resize(mark);
            note("sync component");
            if (dep_trail(a, view(b.sync->right), trail)) return true;
            trail.resize(mark);
        }
        return false;
    }
    Tag h1 = a.tags[0], h2 = b.tags[0];
    if (h1 == Tag::ParL || h1 == Tag::ParR) {
        if (h1 != h2) return false;
        note("peel matching parallel tag");
        if (dep_trail(tail(a), tail(b), trail)) return true;
        trail.pop_back();
        return false;
    }
    if (h2 == Tag::Bang) {
        LView t = tail(a), tp = tail(b);
        bool pair_a = t.n == 0 && t.sync;
        bool pair_b = tp.n == 0 && tp.sync;
        if (pair_a != pair_b) {
            note("single-copy and copy-pair spawns cannot be exchanged");
            return true;
        }
        note("replication spawns ordered by their premises");
        if (dep_trail(t, tp, trail)) return true;
        trail.pop_back();
        return false;
    }
    if (h2 == Tag::ParL) {
        note("spawn causes later left-component actions");
        return true;
    }
    LView t = tail(a), tp = tail(b);
    if (t.n == 0 && t.sync && tp.n > 0 && (tp.tags[0] == Tag::ParL || tp.tags[0] == Tag::ParR)) {
        note("self-sync spawn causes both halves of its copy");
        return true;
    }
    note("spawn versus action in the spawned copy");
    if (dep_trail(t, tp, trail)) return true;
    trail.pop_back();
    return false;
}

}  // namespace

bool depends(const EnhancedLabel& a, const EnhancedLabel& b) {
    return dep(view(a), view(b));
}

std::vector<std::string> depends_trail(const EnhancedLabel& a, const EnhancedLabel& b) {
    std::vector<std::string> trail;
    if (!dep_trail(view(a), view(b), trail)) trail.clear();
    return trail;
}

bool causes_in_trace(const Trace& t, std::size_t i, std::size_t j) {
    if (i < 1 || j <= i || j > t.steps.size())
        throw std::invalid_argument("causes_in_trace requires 1 <= i < j <= length");
    return depends(t.steps[i - 1].label, t.steps[j - 1].label);
}

bool concurrent_in_trace(const Trace& t, std::size_t i, std::size_t j) {
    if (i < 1 || j < 1 || i > t.steps.size() || j > t.steps.size())
        throw std::invalid_argument("concurrent_in_trace: position out of range");
    if (i == j) return false;
    const auto& a = t.steps[std::min(i, j) - 1].label;
    const auto& b = t.steps[std::max(i, j) - 1].label;
    return !depends(a, b) && !depends(b, a);
}

bool coinitial_concurrent(const Transition& t1, const Transition& t2) {
    if (!equal(t1.source, t2.source))
        throw std::invalid_argument("coinitial_concurrent requires a common source");
    // Concurrency of positions 1, 2 in reverse(t1); t2.
    return !depends(t1.label, t2.label) && !depends(t2.label, t1.label);
}

namespace {

EnhancedLabel project_label(Side d, const EnhancedLabel& l) {
    if (l.path.empty() && l.is_sync()) {
        const SimpleLabel& s = d == Side::Left ? l.sync().left : l.sync().right;
        SimpleLabel stripped = s;
        stripped.path.erase(stripped.path.begin());
        return as_enhanced(stripped);
    }
    Tag want = d == Side::Left ? Tag::ParL : Tag::ParR;
    if (!l.path.empty() && l.path.front() == want) {
        EnhancedLabel out = l;
        out.path.erase(out.path.begin());
        return out;
    }
    throw std::invalid_argument("projection undefined for label " + to_string(l));
}

ProcessPtr project_process(Side d, const ProcessPtr& p) {
    if (p->kind != Process::Kind::Par)
        throw std::invalid_argument("projection requires a top-level parallel composition");
    return d == Side::Left ? p->left : p->right;
}

}  // namespace

Trace project(Side d, const Trace& t) {
    Trace out;
    out.source = project_process(d, t.source);
    for (const auto& s : t.steps) {
        Transition p;
        p.source = project_process(d, s.source);
        p.direction = s.direction;
        p.label = project_label(d, s.label);
        p.target = project_process(d, s.target);
        out.steps.push_back(std::move(p));
    }
    return out;
}

}  // namespace ccsk
