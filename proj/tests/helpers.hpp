#pragma once

#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "ccsk/label.hpp"
#include "ccsk/lts.hpp"
#include "ccsk/parser.hpp"

namespace ccsk::test {

inline ProcessPtr P(const std::string& text) { return parse(text); }

inline EnhancedLabel L(const std::string& text) { return parse_label(text); }

// The unique step of p in the given direction with exactly this label;
// forward labels may use any fresh key (the derivation is forced to it).
inline Transition step(const ProcessPtr& p, const std::string& dir, const std::string& label,
                       const LtsOptions& opts = {}) {
    Direction d = dir == "fw" ? Direction::Forward : Direction::Backward;
    EnhancedLabel want = parse_label(label);
    std::vector<Transition> hits;
    for (const auto& t : steps_matching(p, d, want, opts))
        if (t.label == want) hits.push_back(t);
    if (hits.size() != 1)
        throw std::runtime_error("expected exactly one step '" + dir + " " + label + "' from " +
                                 print(p) + ", found " + std::to_string(hits.size()));
    return hits.front();
}

// Replays a script of (direction, label) pairs from a source term.
inline Trace replay(const std::string& source,
                    const std::vector<std::pair<std::string, std::string>>& script,
                    const LtsOptions& opts = {}) {
    Trace t{P(source), {}};
    for (const auto& [dir, label] : script)
        t.steps.push_back(step(t.final_target(), dir, label, opts));
    return t;
}

inline std::vector<std::string> label_texts(const std::vector<Transition>& steps) {
    std::vector<std::string> out;
    for (const auto& t : steps) out.push_back(to_string(t.label));
    return out;
}

}  // namespace ccsk::test
