#include "ccsk/generate.hpp"

namespace ccsk {

namespace {

ActionLabel random_action(Rng& rng, const GenOptions& gen) {
    std::uniform_int_distribution<std::size_t> pick(0, gen.names.size() - 1);
    const std::string& n = gen.names[pick(rng)];
    return (rng() & 1) ? act_name(n) : act_coname(n);
}

ProcessPtr gen_rec(Rng& rng, const GenOptions& gen, std::size_t budget, bool in_bang);

// Summands are kept guarded (a prefix, or a sum of guarded terms): the
// dependency relation does not record sums, and rival transitions into
// unguarded summands would defeat the square property.
ProcessPtr gen_guarded(Rng& rng, const GenOptions& gen, std::size_t budget, bool in_bang) {
    if (budget >= 3 && rng() % 4 == 0) {
        std::size_t lb = 1 + rng() % (budget - 1);
        return sum(gen_guarded(rng, gen, lb, in_bang),
                   gen_guarded(rng, gen, budget - lb, in_bang));
    }
    return prefix(random_action(rng, gen),
                  budget <= 1 ? nil() : gen_rec(rng, gen, budget - 1, in_bang));
}

ProcessPtr gen_rec(Rng& rng, const GenOptions& gen, std::size_t budget, bool in_bang) {
    if (budget <= 1) {
        if (rng() % 4 == 0) return nil();
        return prefix(random_action(rng, gen), nil());
    }
    // prefix-heavy mix so walks have depth
    unsigned roll = static_cast<unsigned>(rng() % 12);
    if (roll < 5) return prefix(random_action(rng, gen), gen_rec(rng, gen, budget - 1, in_bang));
    if (roll < 7) {
        std::size_t lb = 1 + rng() % (budget - 1);
        return sum(gen_guarded(rng, gen, lb, in_bang),
                   gen_guarded(rng, gen, budget - lb, in_bang));
    }
    if (roll < 10) {
        std::size_t lb = 1 + rng() % (budget - 1);
        return par(gen_rec(rng, gen, lb, in_bang), gen_rec(rng, gen, budget - lb, in_bang));
    }
    if (roll == 10 && gen.allow_restrict) {
        std::uniform_int_distribution<std::size_t> pick(0, gen.names.size() - 1);
        return restrict_name(gen_rec(rng, gen, budget - 1, in_bang), gen.names[pick(rng)]);
    }
    if (gen.allow_bang && !in_bang) return bang(gen_rec(rng, gen, budget - 1, true));
    return prefix(random_action(rng, gen), gen_rec(rng, gen, budget - 1, in_bang));
}

}  // namespace

ProcessPtr gen_standard(Rng& rng, const GenOptions& gen) {
    return gen_rec(rng, gen, gen.size ? gen.size : 1, false);
}

Trace random_walk(const ProcessPtr& p, std::size_t len, const LtsOptions& opts, Rng& rng,
                  double forward_bias) {
    Trace trace{p, {}};
    std::uniform_real_distribution<double> coin(0.0, 1.0);
    for (std::size_t i = 0; i < len; ++i) {
        ProcessPtr at = trace.final_target();
        auto fwd = forward_steps(at, opts);
        auto bwd = backward_steps(at, opts);
        const std::vector<Transition>* from = nullptr;
        if (fwd.empty() && bwd.empty()) break;
        if (bwd.empty() || (!fwd.empty() && coin(rng) < forward_bias))
            from = &fwd;
        else
            from = &bwd;
        std::uniform_int_distribution<std::size_t> pick(0, from->size() - 1);
        trace.steps.push_back((*from)[pick(rng)]);
    }
    return trace;
}

ProcessPtr gen_reachable(Rng& rng, const GenOptions& gen, std::size_t walk_len,
                         const LtsOptions& opts) {
    ProcessPtr p = gen_standard(rng, gen);
    return random_walk(p, walk_len, opts, rng).final_target();
}

}  // namespace ccsk
