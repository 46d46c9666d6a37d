#pragma once

#include <optional>
#include <vector>

#include "ccsk/lts.hpp"
#include "ccsk/process.hpp"

namespace ccsk {

// The keyed LTS without proved labels: transitions carry only an action
// and a key. Implemented directly from the plain rules, independently of
// the proved engine, so it can serve as an oracle for path erasure.
struct PlainStep {
    ActionLabel action;
    Key key;  // unmarked in labels
    ProcessPtr target;
};

std::vector<PlainStep> plain_forward(const ProcessPtr& p, const LtsOptions& opts = {},
                                     std::optional<unsigned> forced_key = std::nullopt);

std::vector<PlainStep> plain_backward(const ProcessPtr& p, const LtsOptions& opts = {});

bool plain_derivable(const ProcessPtr& source, Direction dir, const ActionLabel& action,
                     unsigned key_index, const ProcessPtr& target, const LtsOptions& opts = {});

}  // namespace ccsk
