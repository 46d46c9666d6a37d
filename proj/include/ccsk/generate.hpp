#pragma once

#include <random>
#include <vector>

#include "ccsk/lts.hpp"
#include "ccsk/process.hpp"

namespace ccsk {

using Rng = std::mt19937_64;

struct GenOptions {
    std::size_t size = 8;  // node budget for generated standard terms
    bool allow_bang = true;
    bool allow_restrict = true;
    std::vector<std::string> names = {"a", "b", "c"};
};

// A random standard term. Never nests replication under replication,
// never produces tau prefixes, and keeps sums guarded (every summand is a
// prefix or a guarded sum): the dependency relation does not track sums,
// so causal analysis is only meaningful on guarded choice.
ProcessPtr gen_standard(Rng& rng, const GenOptions& gen = {});

// A random forward-biased walk of at most len steps; the returned trace
// starts at p and is composable by construction.
Trace random_walk(const ProcessPtr& p, std::size_t len, const LtsOptions& opts, Rng& rng,
                  double forward_bias = 0.7);

// gen_standard followed by a random walk; returns the walk's endpoint.
ProcessPtr gen_reachable(Rng& rng, const GenOptions& gen, std::size_t walk_len,
                         const LtsOptions& opts);

}  // namespace ccsk
