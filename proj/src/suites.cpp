#include "ccsk/suites.hpp"

#include <chrono>
#include <set>
#include <stdexcept>

#include "ccsk/causality.hpp"
#include "ccsk/diamonds.hpp"
#include "ccsk/equivalence.hpp"
#include "ccsk/parser.hpp"
#include "ccsk/plain_lts.hpp"

namespace ccsk {

namespace {

struct Ctx {
    SuiteResult result;
    std::uint64_t seed = 0;
    std::size_t iter = 0;

    bool check(bool ok, const std::string& msg) {
        ++result.checks;
        if (!ok && result.passed) {
            result.passed = false;
            result.failure = "iteration " + std::to_string(iter) + " (replay with --seed " +
                             std::to_string(seed) + "): " + msg;
        }
        return ok;
    }
    bool failed() const { return !result.passed; }
};

bool labels_concurrent(const EnhancedLabel& a, const EnhancedLabel& b) {
    return !depends(a, b) && !depends(b, a);
}

bool member(const Transition& t, const std::vector<Transition>& set) {
    for (const auto& s : set)
        if (equal(s, t)) return true;
    return false;
}

std::string pair_msg(const ProcessPtr& p, const Transition& a, const Transition& b,
                     const char* what) {
    return std::string(what) + " for " + print(p) + " with " + to_string(a.direction) + " " +
           to_string(a.label) + " and " + to_string(b.direction) + " " + to_string(b.label);
}

void suite_loop(Ctx& ctx, const SuiteParams& params) {
    Rng rng(params.seed);
    GenOptions gen{params.size, true, true, {"a", "b", "c"}};
    LtsOptions lts{params.marking};
    for (ctx.iter = 0; ctx.iter < params.count && !ctx.failed(); ++ctx.iter) {
        ProcessPtr p = gen_reachable(rng, gen, params.walk_len, lts);
        for (const auto& t : forward_steps(p, lts)) {
            Transition rt = reverse(t);
            ctx.check(member(rt, backward_steps(t.target, lts)),
                      "reverse of a forward step is not a backward step of its target: " +
                          print(p) + " --> " + to_string(t));
            ctx.check(equal(reverse(rt), t), "reverse is not an involution on " + to_string(t));
        }
        for (const auto& b : backward_steps(p, lts)) {
            Transition rb = reverse(b);
            ctx.check(derivable(rb, lts),
                      "reverse of a backward step is not derivable forward: " + print(p) +
                          " --> " + to_string(b));
            ctx.check(equal(reverse(rb), b), "reverse is not an involution on " + to_string(b));
        }
    }
}

void check_commutation(Ctx& ctx, const ProcessPtr& p, const Transition& t1, const Transition& t2,
                       const LtsOptions& lts) {
    try {
        auto [s2, s1] = t2.direction == Direction::Backward ? commute_sideways(t1, t2, lts)
                                                            : commute_forward(t1, t2, lts);
        bool endpoints = equal(s2.source, t1.source) && equal(s1.target, t2.target);
        bool sigma = collapse(s2.label) == collapse(t2.label) &&
                     collapse(s1.label) == collapse(t1.label);
        bool exact = true;
        if (!has_bang(t1.label) && !has_bang(t2.label) && !has_bang(s1.label) &&
            !has_bang(s2.label))
            exact = s2.label == t2.label && s1.label == t1.label;
        ctx.check(endpoints && sigma && exact,
                  pair_msg(p, t1, t2, "commutation returned wrong endpoints or labels"));
    } catch (const CommuteError& e) {
        ctx.check(false, pair_msg(p, t1, t2, "commutation failed") + ": " + e.what());
    }
}

// Positive half on the unmarked fragment, where the diamonds preserve
// endpoints exactly; no-false-diamond half on the marked fragment, where
// the marks rule out closures the dependency relation forbids.
void suite_diamond(Ctx& ctx, const SuiteParams& params, bool sideways) {
    Rng rng(params.seed);
    GenOptions gen{params.size, true, true, {"a", "b", "c"}};
    LtsOptions unmarked{false}, marked{true};
    for (ctx.iter = 0; ctx.iter < params.count && !ctx.failed(); ++ctx.iter) {
        ProcessPtr p = gen_reachable(rng, gen, params.walk_len, unmarked);
        for (const auto& t1 : forward_steps(p, unmarked)) {
            auto seconds = sideways ? backward_steps(t1.target, unmarked)
                                    : forward_steps(t1.target, unmarked);
            for (const auto& t2 : seconds)
                if (labels_concurrent(t1.label, t2.label))
                    check_commutation(ctx, p, t1, t2, unmarked);
        }
    }
    for (ctx.iter = 0; ctx.iter < params.count && !ctx.failed(); ++ctx.iter) {
        ProcessPtr p = gen_reachable(rng, gen, params.walk_len, marked);
        for (const auto& t1 : forward_steps(p, marked)) {
            auto seconds =
                sideways ? backward_steps(t1.target, marked) : forward_steps(t1.target, marked);
            for (const auto& t2 : seconds)
                if (!labels_concurrent(t1.label, t2.label))
                    ctx.check(!commutation_exists(t1, t2, marked),
                              pair_msg(p, t1, t2, "false diamond: dependent pair commutes"));
        }
    }
}

std::vector<std::pair<Transition, Transition>> coinitial_pairs(const ProcessPtr& p,
                                                               const LtsOptions& lts) {
    std::vector<std::pair<Transition, Transition>> out;
    auto fwd = forward_steps(p, lts);
    auto bwd = backward_steps(p, lts);
    if (!fwd.empty()) {
        // Distinct fresh keys so that exchanged labels can be re-derived.
        unsigned k0 = key_of(fwd.front().label).index;
        auto used = key_indices(p);
        unsigned k1 = 0;
        while (used.count(k1) || k1 == k0) ++k1;
        auto fwd2 = forward_steps(p, lts, k1);
        for (const auto& a : fwd)
            for (const auto& b : fwd2) out.emplace_back(a, b);
        for (const auto& a : fwd)
            for (const auto& b : bwd) out.emplace_back(a, b);
    }
    for (std::size_t i = 0; i < bwd.size(); ++i)
        for (std::size_t j = i + 1; j < bwd.size(); ++j) out.emplace_back(bwd[i], bwd[j]);
    return out;
}

void suite_square(Ctx& ctx, const SuiteParams& params) {
    Rng rng(params.seed);
    GenOptions gen{params.size, true, true, {"a", "b", "c"}};
    LtsOptions unmarked{false};
    for (ctx.iter = 0; ctx.iter < params.count && !ctx.failed(); ++ctx.iter) {
        ProcessPtr p = gen_reachable(rng, gen, params.walk_len, unmarked);
        for (const auto& [t1, t2] : coinitial_pairs(p, unmarked)) {
            if (!coinitial_concurrent(t1, t2)) continue;
            try {
                auto [c1, c2] = close_square(t1, t2, unmarked);
                bool cofinal = equal(c1.target, c2.target);
                bool dirs = c1.direction == t2.direction && c2.direction == t1.direction;
                bool sigma = collapse(c1.label) == collapse(t2.label) &&
                             collapse(c2.label) == collapse(t1.label);
                ctx.check(cofinal && dirs && sigma,
                          pair_msg(p, t1, t2, "square closed with wrong shape"));
            } catch (const CommuteError& e) {
                ctx.check(false, pair_msg(p, t1, t2, "square failed") + ": " + e.what());
            }
        }
    }
}

void suite_bwd_conc(Ctx& ctx, const SuiteParams& params) {
    Rng rng(params.seed);
    GenOptions gen{params.size, true, true, {"a", "b", "c"}};
    LtsOptions lts{params.marking};
    for (ctx.iter = 0; ctx.iter < params.count && !ctx.failed(); ++ctx.iter) {
        ProcessPtr p = gen_reachable(rng, gen, params.walk_len, lts);
        auto bwd = backward_steps(p, lts);
        for (std::size_t i = 0; i < bwd.size(); ++i)
            for (std::size_t j = i + 1; j < bwd.size(); ++j)
                ctx.check(coinitial_concurrent(bwd[i], bwd[j]),
                          pair_msg(p, bwd[i], bwd[j],
                                   "coinitial backward transitions are not concurrent"));
    }
}

void suite_wellfounded(Ctx& ctx, const SuiteParams& params) {
    Rng rng(params.seed);
    GenOptions gen{params.size, true, true, {"a", "b", "c"}};
    LtsOptions lts{params.marking};
    for (ctx.iter = 0; ctx.iter < params.count && !ctx.failed(); ++ctx.iter) {
        ProcessPtr p = gen_reachable(rng, gen, params.walk_len, lts);
        auto report = origin_report(p, lts);
        ctx.check(report.confluent(),
                  "backward exploration of " + print(p) + " is not confluent (" +
                      std::to_string(report.origins.size()) + " origins, " +
                      std::to_string(report.stuck.size()) + " stuck)");
        ctx.check(report.longest_walk <= keyed_prefix_count(p),
                  "backward walk of " + print(p) + " exceeded the keyed prefix count");
        if (!report.origins.empty())
            ctx.check(is_standard(report.origins.front()),
                      "origin of " + print(p) + " is not standard");
    }
}

void suite_consistency(Ctx& ctx, const SuiteParams& params) {
    Rng rng(params.seed);
    GenOptions gen{params.size, true, true, {"a", "b", "c"}};
    EquivOptions opts;
    opts.lts.marking = params.marking;
    for (ctx.iter = 0; ctx.iter < params.count && !ctx.failed(); ++ctx.iter) {
        ProcessPtr p = gen_reachable(rng, gen, params.walk_len, opts.lts);
        auto report = check_causal_consistency(p, params.depth, opts);
        std::string detail;
        if (!report.equivalence_violations.empty())
            detail = "non-equivalent cofinal traces:\n" +
                     report.equivalence_violations.front().trace_a + "--- versus ---\n" +
                     report.equivalence_violations.front().trace_b;
        else if (!report.backward_concurrency_violations.empty())
            detail = "conflicting backward transitions of " +
                     report.backward_concurrency_violations.front().process + ": " +
                     report.backward_concurrency_violations.front().label1 + " vs " +
                     report.backward_concurrency_violations.front().label2;
        ctx.check(report.ok(), "causal consistency violated for " + print(p) + ": " + detail);
    }
}

void suite_projection(Ctx& ctx, const SuiteParams& params) {
    Rng rng(params.seed);
    GenOptions gen{params.size, true, true, {"a", "b", "c"}};
    LtsOptions lts{params.marking};
    std::size_t checked = 0;
    for (ctx.iter = 0; checked < params.count && !ctx.failed(); ++ctx.iter) {
        ProcessPtr p = gen_reachable(rng, gen, params.walk_len, lts);
        auto all = forward_steps(p, lts);
        for (auto& b : backward_steps(p, lts)) all.push_back(std::move(b));
        for (const auto& t : all) {
            if (checked >= params.count) break;
            ++checked;
            ctx.check(plain_derivable(t.source, t.direction, action_of(t.label),
                                      key_of(t.label).index, t.target, lts),
                      "path erasure of " + to_string(t.label) + " at " + print(t.source) +
                          " is not derivable in the plain LTS");
        }
    }
}

void suite_rpi(Ctx& ctx, const SuiteParams& params) {
    Rng rng(params.seed);
    GenOptions gen{params.size, true, true, {"a", "b", "c"}};
    LtsOptions lts{params.marking};
    for (ctx.iter = 0; ctx.iter < params.count && !ctx.failed(); ++ctx.iter) {
        ProcessPtr p = gen_reachable(rng, gen, params.walk_len, lts);
        auto firsts = forward_steps(p, lts);
        for (auto& b : backward_steps(p, lts)) firsts.push_back(std::move(b));
        for (const auto& t1 : firsts) {
            auto seconds = forward_steps(t1.target, lts);
            for (auto& b : backward_steps(t1.target, lts)) seconds.push_back(std::move(b));
            for (const auto& t2 : seconds) {
                Trace direct{p, {t1, t2}};
                Trace reversed{t2.target, {reverse(t2), reverse(t1)}};
                ctx.check(concurrent_in_trace(direct, 1, 2) ==
                              concurrent_in_trace(reversed, 1, 2),
                          pair_msg(p, t1, t2, "concurrency verdict changed under reversal"));
            }
        }
    }
}

}  // namespace

SuiteResult run_suite(const std::string& name, const SuiteParams& params) {
    Ctx ctx;
    ctx.result.name = name;
    ctx.seed = params.seed;
    auto start = std::chrono::steady_clock::now();
    if (name == "loop")
        suite_loop(ctx, params);
    else if (name == "fwd-diamond")
        suite_diamond(ctx, params, false);
    else if (name == "side-diamond")
        suite_diamond(ctx, params, true);
    else if (name == "square")
        suite_square(ctx, params);
    else if (name == "bwd-conc")
        suite_bwd_conc(ctx, params);
    else if (name == "wellfounded")
        suite_wellfounded(ctx, params);
    else if (name == "consistency")
        suite_consistency(ctx, params);
    else if (name == "projection")
        suite_projection(ctx, params);
    else if (name == "rpi")
        suite_rpi(ctx, params);
    else
        throw std::invalid_argument("unknown suite '" + name + "'");
    ctx.result.seconds =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    return ctx.result;
}

const std::vector<std::string>& suite_names() {
    static const std::vector<std::string> names = {
        "loop",       "fwd-diamond", "side-diamond", "square", "bwd-conc",
        "wellfounded", "consistency", "projection",   "rpi"};
    return names;
}

}  // namespace ccsk
