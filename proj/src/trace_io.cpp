#include "ccsk/trace_io.hpp"

#include <sstream>
#include <stdexcept>

#include "ccsk/parser.hpp"

namespace ccsk {

std::string write_trace(const Trace& t) {
    std::string out = print(t.source);
    out += '\n';
    for (const auto& s : t.steps) {
        out += to_string(s);
        out += '\n';
    }
    return out;
}

Trace read_trace(const std::string& text, const LtsOptions& opts, bool validate) {
    std::istringstream in(text);
    std::string line;
    std::size_t lineno = 0;
    Trace trace;
    while (std::getline(in, line)) {
        ++lineno;
        std::size_t begin = line.find_first_not_of(" \t\r");
        if (begin == std::string::npos) continue;
        std::size_t end = line.find_last_not_of(" \t\r");
        std::string body = line.substr(begin, end - begin + 1);
        if (body.empty() || body[0] == '#') continue;
        try {
            if (!trace.source) {
                trace.source = parse(body);
                continue;
            }
            std::size_t sep = body.find("::");
            if (sep == std::string::npos) throw std::runtime_error("missing '::'");
            std::string head = body.substr(0, sep);
            std::string target_text = body.substr(sep + 2);
            std::istringstream hs(head);
            std::string dir_token;
            hs >> dir_token;
            Direction dir;
            if (dir_token == "fw")
                dir = Direction::Forward;
            else if (dir_token == "bw")
                dir = Direction::Backward;
            else
                throw std::runtime_error("direction must be fw or bw, got '" + dir_token + "'");
            std::string label_text;
            std::getline(hs, label_text);
            Transition t;
            t.source = trace.final_target();
            t.direction = dir;
            t.label = parse_label(label_text);
            t.target = parse(target_text);
            if (validate && !derivable(t, opts))
                throw std::runtime_error("transition is not derivable from " + print(t.source));
            trace.steps.push_back(std::move(t));
        } catch (const std::exception& e) {
            throw std::runtime_error("trace line " + std::to_string(lineno) + ": " + e.what());
        }
    }
    if (!trace.source) throw std::runtime_error("trace file has no header process");
    return trace;
}

nlohmann::json to_json(const Key& k) {
    return {{"index", k.index}, {"marked", k.marked}};
}

nlohmann::json to_json(const ActionLabel& a) {
    return to_string(a);
}

namespace {

nlohmann::json path_json(const std::vector<Tag>& path) {
    nlohmann::json arr = nlohmann::json::array();
    for (Tag t : path) arr.push_back(to_string(t));
    return arr;
}

nlohmann::json simple_json(const SimpleLabel& l) {
    return {{"path", path_json(l.path)},
            {"action", to_json(l.core.action)},
            {"key", to_json(l.core.key)}};
}

}  // namespace

nlohmann::json to_json(const EnhancedLabel& l) {
    nlohmann::json j;
    j["path"] = path_json(l.path);
    if (l.is_sync()) {
        j["core"] = {{"kind", "sync"},
                     {"left", simple_json(l.sync().left)},
                     {"right", simple_json(l.sync().right)}};
    } else {
        j["core"] = {{"kind", "act"},
                     {"action", to_json(l.act().action)},
                     {"key", to_json(l.act().key)}};
    }
    j["text"] = to_string(l);
    return j;
}

nlohmann::json to_json(const Transition& t) {
    return {{"source", print(t.source)},
            {"direction", t.direction == Direction::Forward ? "forward" : "backward"},
            {"label", to_json(t.label)},
            {"target", print(t.target)}};
}

nlohmann::json to_json(const Trace& t) {
    nlohmann::json steps = nlohmann::json::array();
    for (const auto& s : t.steps) steps.push_back(to_json(s));
    return {{"source", print(t.source)}, {"steps", steps}};
}

}  // namespace ccsk
