// ccsklab: a workbench for reversible CCS with keys and replication.
// Derives proved forward/backward transitions, decides dependency and
// concurrency, rewrites traces through the diamonds, and checks causal
// equivalence and consistency.

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <map>
#include <optional>
#include <sstream>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "ccsk/causality.hpp"
#include "ccsk/diamonds.hpp"
#include "ccsk/equivalence.hpp"
#include "ccsk/parser.hpp"
#include "ccsk/suites.hpp"
#include "ccsk/trace_io.hpp"

using namespace ccsk;
using nlohmann::json;

namespace {

std::string slurp(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open " + path);
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

void emit(const std::string& path, const std::string& content) {
    if (path.empty() || path == "-") {
        std::cout << content;
        return;
    }
    std::ofstream out(path);
    if (!out) throw std::runtime_error("cannot write " + path);
    out << content;
}

// Replaces key names inside brackets by their mapped indices, so walk
// scripts can use the paper's key names: "a[m]" with m=0 becomes "a[0]".
std::string substitute_keys(const std::string& text, const std::map<std::string, unsigned>& keys) {
    std::string out;
    std::size_t i = 0;
    while (i < text.size()) {
        if (text[i] != '[') {
            out += text[i++];
            continue;
        }
        std::size_t close = text.find(']', i);
        if (close == std::string::npos) {
            out += text.substr(i);
            break;
        }
        std::string inner = text.substr(i + 1, close - i - 1);
        bool marked = !inner.empty() && inner.back() == '!';
        std::string name = marked ? inner.substr(0, inner.size() - 1) : inner;
        auto it = keys.find(name);
        out += '[';
        out += it != keys.end() ? std::to_string(it->second) : name;
        if (marked) out += '!';
        out += ']';
        i = close + 1;
    }
    return out;
}

std::map<std::string, unsigned> parse_key_map(const std::string& spec) {
    std::map<std::string, unsigned> out;
    std::istringstream in(spec);
    std::string item;
    while (std::getline(in, item, ',')) {
        if (item.empty()) continue;
        auto eq = item.find('=');
        if (eq == std::string::npos)
            throw std::runtime_error("--keys entries must look like m=0, got '" + item + "'");
        out[item.substr(0, eq)] = static_cast<unsigned>(std::stoul(item.substr(eq + 1)));
    }
    return out;
}

std::uint64_t env_seed(std::uint64_t fallback) {
    if (const char* s = std::getenv("CCSKLAB_SEED")) return std::strtoull(s, nullptr, 10);
    return fallback;
}

json violation_json(const ConsistencyReport& report) {
    json out;
    out["traces"] = report.traces;
    out["endpoint_groups"] = report.endpoint_groups;
    out["pairs_checked"] = report.pairs_checked;
    out["states"] = report.states;
    out["ok"] = report.ok();
    json eq = json::array();
    for (const auto& v : report.equivalence_violations)
        eq.push_back({{"trace_a", v.trace_a}, {"trace_b", v.trace_b},
                      {"within_bound", v.within_bound}});
    out["equivalence_violations"] = eq;
    json bc = json::array();
    for (const auto& v : report.backward_concurrency_violations)
        bc.push_back({{"process", v.process}, {"label1", v.label1}, {"label2", v.label2}});
    out["backward_concurrency_violations"] = bc;
    return out;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"workbench for reversible CCS with keys and replication"};
    app.require_subcommand(1);

    bool no_marking = false;
    app.add_flag("--no-marking", no_marking,
                 "disable replica key marking and backward admissibility filtering");
    bool as_json = false;
    app.add_flag("--json", as_json, "emit JSON instead of text");

    // parse
    std::string parse_text;
    auto* cmd_parse = app.add_subcommand("parse", "parse a process and print its canonical form");
    cmd_parse->add_option("process", parse_text)->required();

    // steps
    std::string steps_text;
    bool dir_fwd = false, dir_bwd = false, dir_both = false;
    std::optional<unsigned> forced_key;
    auto* cmd_steps = app.add_subcommand("steps", "list derivable transitions");
    cmd_steps->add_option("process", steps_text)->required();
    cmd_steps->add_flag("--forward", dir_fwd, "forward transitions only (default)");
    cmd_steps->add_flag("--backward", dir_bwd, "backward transitions only");
    cmd_steps->add_flag("--both", dir_both, "both directions");
    cmd_steps->add_option("--key", forced_key, "fresh key for forward transitions");

    // walk
    std::string walk_text, walk_keys, walk_out;
    std::vector<std::string> walk_script;
    auto* cmd_walk = app.add_subcommand(
        "walk", "follow a script of steps ('fw |L a[0]' ...) and write the trace");
    cmd_walk->add_option("process", walk_text)->required();
    cmd_walk->add_option("selector", walk_script, "direction and label, e.g. \"fw |L a[m]\"");
    cmd_walk->add_option("--keys", walk_keys, "key name mapping, e.g. m=0,n=1");
    cmd_walk->add_option("-o,--output", walk_out, "trace file to write (default stdout)");

    // concurrent
    std::string conc_file;
    std::size_t conc_i = 0, conc_j = 0;
    auto* cmd_conc =
        app.add_subcommand("concurrent", "decide concurrency of two positions of a trace");
    cmd_conc->add_option("trace-file", conc_file)->required();
    cmd_conc->add_option("i", conc_i)->required();
    cmd_conc->add_option("j", conc_j)->required();

    // swap
    std::string swap_file, swap_out;
    std::size_t swap_i = 0;
    auto* cmd_swap = app.add_subcommand("swap", "commute steps i and i+1 of a trace");
    cmd_swap->add_option("trace-file", swap_file)->required();
    cmd_swap->add_option("i", swap_i)->required();
    cmd_swap->add_option("-o,--output", swap_out, "rewritten trace file (default stdout)");

    // normalize
    std::string norm_file, norm_out;
    auto* cmd_norm = app.add_subcommand("normalize", "parabolic normal form of a trace");
    cmd_norm->add_option("trace-file", norm_file)->required();
    cmd_norm->add_option("-o,--output", norm_out, "normalized trace file (default stdout)");

    // equiv
    std::string equiv_a, equiv_b;
    auto* cmd_equiv = app.add_subcommand("equiv", "decide causal equivalence of two traces");
    cmd_equiv->add_option("trace-a", equiv_a)->required();
    cmd_equiv->add_option("trace-b", equiv_b)->required();

    // consistency
    std::string cons_text;
    std::size_t cons_depth = 4;
    auto* cmd_cons =
        app.add_subcommand("consistency", "exhaustive causal-consistency check up to a depth");
    cmd_cons->add_option("process", cons_text)->required();
    cmd_cons->add_option("--depth", cons_depth, "maximum trace length (default 4)");

    // origin
    std::string origin_text;
    auto* cmd_origin = app.add_subcommand("origin", "rewind a process to its standard origin");
    cmd_origin->add_option("process", origin_text)->required();

    // quickcheck
    std::string qc_suite;
    std::uint64_t qc_seed = 0xCC5C;
    bool qc_seed_set = false;
    std::size_t qc_count = 100, qc_size = 8, qc_depth = 4;
    auto* cmd_qc = app.add_subcommand("quickcheck", "randomized property suites");
    cmd_qc->add_option("suite", qc_suite, "one of: loop fwd-diamond side-diamond square bwd-conc wellfounded consistency projection rpi")
        ->required();
    cmd_qc->add_option("--seed", qc_seed)->each([&](const std::string&) { qc_seed_set = true; });
    cmd_qc->add_option("--count", qc_count, "generated processes (default 100)");
    cmd_qc->add_option("--size", qc_size, "term budget (default 8)");
    cmd_qc->add_option("--depth", qc_depth, "trace depth for consistency (default 4)");

    CLI11_PARSE(app, argc, argv);

    LtsOptions lts{!no_marking};
    try {
        if (*cmd_parse) {
            ProcessPtr p = parse(parse_text);
            if (as_json) {
                json out{{"canonical", print(p)}, {"standard", is_standard(p)}};
                json ks = json::array();
                for (const auto& k : keys(p)) ks.push_back(to_json(k));
                out["keys"] = ks;
                std::cout << out.dump(2) << "\n";
            } else {
                std::cout << print(p) << "\n";
            }
            return 0;
        }

        if (*cmd_steps) {
            ProcessPtr p = parse(steps_text);
            std::vector<Transition> all;
            bool want_fwd = dir_fwd || dir_both || (!dir_bwd && !dir_both);
            bool want_bwd = dir_bwd || dir_both;
            if (want_fwd)
                for (auto& t : forward_steps(p, lts, forced_key)) all.push_back(std::move(t));
            if (want_bwd)
                for (auto& t : backward_steps(p, lts)) all.push_back(std::move(t));
            if (as_json) {
                json out = json::array();
                for (const auto& t : all) out.push_back(to_json(t));
                std::cout << out.dump(2) << "\n";
            } else {
                for (const auto& t : all) std::cout << to_string(t) << "\n";
            }
            return 0;
        }

        if (*cmd_walk) {
            auto key_map = parse_key_map(walk_keys);
            Trace trace{parse(walk_text), {}};
            for (const auto& raw : walk_script) {
                std::istringstream sel(substitute_keys(raw, key_map));
                std::string dir_token;
                sel >> dir_token;
                if (dir_token != "fw" && dir_token != "bw")
                    throw std::runtime_error("selector must start with fw or bw: " + raw);
                Direction dir = dir_token == "fw" ? Direction::Forward : Direction::Backward;
                std::string label_text;
                std::getline(sel, label_text);
                EnhancedLabel want = parse_label(label_text);
                std::vector<Transition> hits;
                for (const auto& t : steps_matching(trace.final_target(), dir, want, lts))
                    if (t.label == want) hits.push_back(t);
                if (hits.empty())
                    throw std::runtime_error("no step matches selector '" + raw + "' at " +
                                             print(trace.final_target()));
                if (hits.size() > 1)
                    throw std::runtime_error("selector '" + raw + "' is ambiguous (" +
                                             std::to_string(hits.size()) + " steps)");
                trace.steps.push_back(hits.front());
            }
            emit(walk_out, as_json ? to_json(trace).dump(2) + "\n" : write_trace(trace));
            return 0;
        }

        if (*cmd_conc) {
            Trace t = read_trace(slurp(conc_file), lts);
            bool verdict = concurrent_in_trace(t, conc_i, conc_j);
            json out{{"i", conc_i}, {"j", conc_j}, {"concurrent", verdict}};
            if (!verdict && conc_i != conc_j) {
                const auto& a = t.steps[std::min(conc_i, conc_j) - 1].label;
                const auto& b = t.steps[std::max(conc_i, conc_j) - 1].label;
                json w = json::array();
                auto fwd_trail = depends_trail(a, b);
                auto bwd_trail = depends_trail(b, a);
                if (!fwd_trail.empty())
                    w.push_back({{"direction", "earlier causes later"}, {"path", fwd_trail}});
                if (!bwd_trail.empty())
                    w.push_back({{"direction", "later causes earlier"}, {"path", bwd_trail}});
                out["witness"] = w;
            }
            if (as_json) {
                std::cout << out.dump(2) << "\n";
            } else {
                std::cout << (verdict ? "concurrent" : "not concurrent") << "\n";
                if (out.contains("witness"))
                    for (const auto& w : out["witness"])
                        for (const auto& line : w["path"])
                            std::cout << "  " << line.get<std::string>() << "\n";
            }
            return verdict ? 0 : 1;
        }

        if (*cmd_swap) {
            Trace t = read_trace(slurp(swap_file), lts);
            if (swap_i < 1 || swap_i + 1 > t.steps.size())
                throw std::runtime_error("swap position out of range");
            auto [s2, s1] = commute_adjacent(t.steps[swap_i - 1], t.steps[swap_i], lts);
            t.steps[swap_i - 1] = s2;
            t.steps[swap_i] = s1;
            emit(swap_out, as_json ? to_json(t).dump(2) + "\n" : write_trace(t));
            return 0;
        }

        if (*cmd_norm) {
            Trace t = read_trace(slurp(norm_file), lts);
            Trace n = parabolic_normal_form(t, lts);
            emit(norm_out, as_json ? to_json(n).dump(2) + "\n" : write_trace(n));
            return 0;
        }

        if (*cmd_equiv) {
            EquivOptions opts;
            opts.lts = lts;
            Trace a = read_trace(slurp(equiv_a), lts);
            Trace b = read_trace(slurp(equiv_b), lts);
            EquivResult r = causally_equivalent(a, b, opts);
            if (as_json) {
                std::cout << json{{"equivalent", r.equivalent}, {"exhaustive", r.exhaustive}}
                                 .dump(2)
                          << "\n";
            } else if (r.equivalent) {
                std::cout << "causally equivalent\n";
            } else {
                std::cout << (r.exhaustive ? "not causally equivalent"
                                           : "not equivalent within bound")
                          << "\n";
            }
            return r.equivalent ? 0 : 1;
        }

        if (*cmd_cons) {
            EquivOptions opts;
            opts.lts = lts;
            auto report = check_causal_consistency(parse(cons_text), cons_depth, opts);
            if (as_json) {
                std::cout << violation_json(report).dump(2) << "\n";
            } else {
                std::cout << "traces: " << report.traces
                          << ", endpoint groups: " << report.endpoint_groups
                          << ", pairs checked: " << report.pairs_checked << "\n";
                for (const auto& v : report.backward_concurrency_violations)
                    std::cout << "conflicting undos of " << v.process << ": " << v.label1
                              << " vs " << v.label2 << "\n";
                for (const auto& v : report.equivalence_violations)
                    std::cout << "non-equivalent cofinal traces:\n"
                              << v.trace_a << "--- versus ---\n"
                              << v.trace_b;
                std::cout << (report.ok() ? "consistent\n" : "violations found\n");
            }
            return report.ok() ? 0 : 1;
        }

        if (*cmd_origin) {
            auto report = origin_report(parse(origin_text), lts);
            if (as_json) {
                json out{{"confluent", report.confluent()},
                         {"longest_walk", report.longest_walk}};
                json origins = json::array(), stuck = json::array();
                for (const auto& p : report.origins) origins.push_back(print(p));
                for (const auto& p : report.stuck) stuck.push_back(print(p));
                out["origins"] = origins;
                out["stuck"] = stuck;
                std::cout << out.dump(2) << "\n";
            } else {
                for (const auto& p : report.origins) std::cout << print(p) << "\n";
                for (const auto& p : report.stuck)
                    std::cout << "stuck (not standard): " << print(p) << "\n";
                if (!report.confluent()) std::cout << "not confluent\n";
            }
            return report.confluent() ? 0 : 1;
        }

        if (*cmd_qc) {
            SuiteParams params;
            params.seed = qc_seed_set ? qc_seed : env_seed(qc_seed);
            params.count = qc_count;
            params.size = qc_size;
            params.depth = qc_depth;
            params.marking = !no_marking;
            SuiteResult r = run_suite(qc_suite, params);
            if (as_json) {
                std::cout << json{{"suite", r.name},
                                  {"passed", r.passed},
                                  {"checks", r.checks},
                                  {"seconds", r.seconds},
                                  {"seed", params.seed},
                                  {"failure", r.failure}}
                                 .dump(2)
                          << "\n";
            } else {
                std::cout << r.name << ": " << (r.passed ? "PASS" : "FAIL") << " (" << r.checks
                          << " checks, seed " << params.seed << ", " << r.seconds << "s)\n";
                if (!r.passed) std::cout << r.failure << "\n";
            }
            return r.passed ? 0 : 1;
        }
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 0;
}
