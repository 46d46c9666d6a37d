#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "ccsk/equivalence.hpp"
#include "ccsk/generate.hpp"
#include "ccsk/parser.hpp"
#include "ccsk/trace_io.hpp"
#include "helpers.hpp"

using namespace ccsk;
using test::P;
using test::replay;
using test::step;

namespace {

Trace example_trace() {
    return replay("a.'b | b + c", {{"fw", "|L a[0]"},
                                   {"fw", "|L 'b[1]"},
                                   {"fw", "|R c[2]"},
                                   {"bw", "|L 'b[1]"},
                                   {"bw", "|R c[2]"},
                                   {"fw", "< |L 'b[1] , |R b[1] >"}});
}

}  // namespace

TEST_CASE("parabolic normal form of the example trace") {
    Trace t = example_trace();
    Trace n = parabolic_normal_form(t);
    REQUIRE(n.steps.size() == 2);
    CHECK(n.steps[0].direction == Direction::Forward);
    CHECK(to_string(n.steps[0].label) == "|L a[0]");
    CHECK(to_string(n.steps[1].label) == "< |L 'b[1] , |R b[1] >");
    CHECK(equal(n.source, t.source));
    CHECK(equal(n.final_target(), t.final_target()));
}

TEST_CASE("parabolic normal form leaves forward traces alone") {
    Trace t = replay("a.'b | b + c", {{"fw", "|L a[0]"}, {"fw", "|L 'b[1]"}});
    Trace n = parabolic_normal_form(t);
    CHECK(write_trace(n) == write_trace(t));
}

TEST_CASE("a do-undo pair cancels to the empty trace") {
    ProcessPtr p = P("a.0 | b.0");
    auto t = step(p, "fw", "|L a[0]");
    Trace loop{p, {t, reverse(t)}};
    Trace n = parabolic_normal_form(loop);
    CHECK(n.steps.empty());
    CHECK(equal(n.source, p));

    Trace undone_first{t.target, {reverse(t), t}};
    CHECK(parabolic_normal_form(undone_first).steps.empty());
}

TEST_CASE("normal form shape is backward then forward") {
    Trace t = replay("a[0].0 | b.0", {{"fw", "|R b[1]"}, {"bw", "|L a[0]"}});
    Trace n = parabolic_normal_form(t);
    REQUIRE(n.steps.size() == 2);
    CHECK(n.steps[0].direction == Direction::Backward);
    CHECK(n.steps[1].direction == Direction::Forward);
    CHECK(equal(n.final_target(), t.final_target()));
}

TEST_CASE("the example trace is equivalent to its normal form") {
    Trace t = example_trace();
    Trace n = replay("a.'b | b + c", {{"fw", "|L a[0]"}, {"fw", "< |L 'b[1] , |R b[1] >"}});
    auto r = causally_equivalent(t, n);
    CHECK(r.equivalent);
    CHECK(r.exhaustive);
    CHECK(causally_equivalent(t, t).equivalent);
}

TEST_CASE("the two interleavings of a parallel pair are equivalent") {
    Trace t1 = replay("a.0 | b.0", {{"fw", "|L a[0]"}, {"fw", "|R b[1]"}});
    Trace t2 = replay("a.0 | b.0", {{"fw", "|R b[1]"}, {"fw", "|L a[0]"}});
    CHECK(equal(t1.final_target(), t2.final_target()));
    CHECK(causally_equivalent(t1, t2).equivalent);
    CHECK(write_trace(canonical_form(t1)) == write_trace(canonical_form(t2)));
}

TEST_CASE("traces with different endpoints are never equivalent") {
    Trace t1 = replay("a.0 | b.0", {{"fw", "|L a[0]"}});
    Trace t2 = replay("a.0 | b.0", {{"fw", "|R b[0]"}});
    CHECK_FALSE(causally_equivalent(t1, t2).equivalent);
    Trace other{P("c.0"), {}};
    CHECK_FALSE(causally_equivalent(t1, other).equivalent);
}

TEST_CASE("a dependent do-undo of different keys is not equivalent to the empty trace") {
    // fw a[0]; fw b[1]; bw b[1]; bw a[0] cancels pairwise and IS empty-equivalent.
    Trace t = replay("a.b.0", {{"fw", "a[0]"}, {"fw", "b[1]"}, {"bw", "b[1]"}, {"bw", "a[0]"}});
    Trace eps{P("a.b.0"), {}};
    CHECK(causally_equivalent(t, eps).equivalent);
}

TEST_CASE("equivalence relation spot checks") {
    Trace t1 = replay("a.0 | b.0", {{"fw", "|L a[0]"}, {"fw", "|R b[1]"}});
    Trace t2 = replay("a.0 | b.0", {{"fw", "|R b[1]"}, {"fw", "|L a[0]"}});
    Trace t3 = replay("a.0 | b.0", {{"fw", "|L a[0]"},
                                    {"bw", "|L a[0]"},
                                    {"fw", "|L a[0]"},
                                    {"fw", "|R b[1]"}});
    // reflexive, symmetric, transitive on the tested universe
    for (const Trace* t : {&t1, &t2, &t3}) CHECK(causally_equivalent(*t, *t).equivalent);
    CHECK(causally_equivalent(t1, t2).equivalent);
    CHECK(causally_equivalent(t2, t1).equivalent);
    CHECK(causally_equivalent(t2, t3).equivalent);
    CHECK(causally_equivalent(t1, t3).equivalent);
}

TEST_CASE("normal forms are equivalent to their inputs") {
    Rng rng(99);
    GenOptions gen;
    gen.size = 6;
    LtsOptions lts;
    for (int i = 0; i < 40; ++i) {
        ProcessPtr p = gen_standard(rng, gen);
        Trace t = random_walk(p, 5, lts, rng, 0.6);
        Trace n = parabolic_normal_form(t, lts);
        CHECK(equal(n.source, t.source));
        CHECK(equal(n.final_target(), t.final_target()));
        bool seen_forward = false;
        for (const auto& s : n.steps) {
            if (s.direction == Direction::Forward) seen_forward = true;
            else CHECK_FALSE(seen_forward);  // backward* ; forward*
        }
        CHECK(causally_equivalent(t, n).equivalent);
    }
}

TEST_CASE("consistency check on the running example") {
    auto report = check_causal_consistency(P("a.'b | b + c"), 3);
    CHECK(report.ok());
    CHECK(report.traces > 10);
    CHECK(report.endpoint_groups > 0);
    CHECK(report.pairs_checked > 0);
}

TEST_CASE("consistency check on a replicated process with marking") {
    auto report = check_causal_consistency(P("!(a.0)"), 3);
    CHECK(report.ok());
}

TEST_CASE("the unmarked conflict is reported as a violation") {
    EquivOptions opts;
    opts.lts.marking = false;
    auto report = check_causal_consistency(P("!(a.0) | a[0].0"), 2, opts);
    CHECK_FALSE(report.ok());
    REQUIRE_FALSE(report.backward_concurrency_violations.empty());
    const auto& v = report.backward_concurrency_violations.front();
    CHECK(v.process == "!a.0 | a[0].0");
    CHECK(((v.label1 == "! a[0]" && v.label2 == "|R a[0]") ||
           (v.label1 == "|R a[0]" && v.label2 == "! a[0]")));
}

TEST_CASE("trace files round-trip") {
    Trace t = example_trace();
    std::string text = write_trace(t);
    Trace back = read_trace(text);
    CHECK(write_trace(back) == text);
    CHECK_THROWS(read_trace("a.0\nfw b[0] :: b[0].0"));     // not derivable
    CHECK_THROWS(read_trace("a.0\nzz a[0] :: a[0].0"));     // bad direction
    CHECK(read_trace("a.0\n").steps.empty());
    CHECK_THROWS(read_trace(""));
}

TEST_CASE("transition JSON carries the label structure") {
    auto t = step(P("a.0 | 'a.0"), "fw", "< |L a[0] , |R 'a[0] >");
    auto j = to_json(t);
    CHECK(j["direction"] == "forward");
    CHECK(j["label"]["core"]["kind"] == "sync");
    CHECK(j["label"]["core"]["left"]["action"] == "a");
    CHECK(j["label"]["core"]["left"]["key"]["index"] == 0);
    CHECK(j["source"] == "a.0 | 'a.0");
}
