#pragma once

#include <string>

#include <json.hpp>

#include "ccsk/lts.hpp"

namespace ccsk {

// Trace file format: a header line holding the source process, then one
// transition per line as
//   <direction> <label> :: <target-process>
// with direction fw or bw. An empty trace is just the header.
std::string write_trace(const Trace& t);

// Parses and, when validate is set, re-derives every step under opts.
// Throws std::runtime_error with a line number on malformed or
// non-derivable input.
Trace read_trace(const std::string& text, const LtsOptions& opts = {}, bool validate = true);

nlohmann::json to_json(const Key& k);
nlohmann::json to_json(const ActionLabel& a);
nlohmann::json to_json(const EnhancedLabel& l);
nlohmann::json to_json(const Transition& t);
nlohmann::json to_json(const Trace& t);

}  // namespace ccsk
