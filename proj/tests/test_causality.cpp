#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "ccsk/causality.hpp"
#include "ccsk/generate.hpp"
#include "ccsk/parser.hpp"
#include "helpers.hpp"

using namespace ccsk;
using test::P;
using test::replay;
using test::step;

namespace {

// The six-step example trace with keys m=0, n=1, n'=2.
Trace example_trace() {
    return replay("a.'b | b + c", {{"fw", "|L a[0]"},
                                   {"fw", "|L 'b[1]"},
                                   {"fw", "|R c[2]"},
                                   {"bw", "|L 'b[1]"},
                                   {"bw", "|R c[2]"},
                                   {"fw", "< |L 'b[1] , |R b[1] >"}});
}

}  // namespace

TEST_CASE("causality along the example trace") {
    Trace t = example_trace();
    REQUIRE(t.steps.size() == 6);
    CHECK(print(t.final_target()) == "a[0].'b[1].0 | b[1].0 + c.0");

    CHECK(causes_in_trace(t, 1, 2));        // |L a[0] < |L 'b[1]
    CHECK(causes_in_trace(t, 2, 4));        // the same label twice: reflexivity
    CHECK_FALSE(causes_in_trace(t, 2, 3));  // |L 'b[1] vs |R c[2]
    CHECK(causes_in_trace(t, 1, 6));        // |L a[0] < the closing sync
    CHECK_THROWS_AS(causes_in_trace(t, 3, 2), std::invalid_argument);
    CHECK_THROWS_AS(causes_in_trace(t, 0, 2), std::invalid_argument);
}

TEST_CASE("concurrency along the example trace") {
    Trace t = example_trace();
    CHECK(concurrent_in_trace(t, 2, 3));
    CHECK(concurrent_in_trace(t, 3, 2));  // symmetric
    CHECK_FALSE(concurrent_in_trace(t, 2, 2));
    CHECK_FALSE(concurrent_in_trace(t, 1, 2));
    CHECK_FALSE(concurrent_in_trace(t, 2, 4));
}

TEST_CASE("coinitial concurrency") {
    ProcessPtr p = P("a.0 | b.0");
    auto t1 = step(p, "fw", "|L a[0]");
    auto t2 = step(p, "fw", "|R b[0]");
    CHECK(coinitial_concurrent(t1, t2));
    CHECK_FALSE(coinitial_concurrent(t1, t1));  // reflexive dependency

    LtsOptions unmarked{false};
    auto undos = backward_steps(P("!(a.0) | a[0].0"), unmarked);
    REQUIRE(undos.size() == 2);
    CHECK_FALSE(coinitial_concurrent(undos[0], undos[1]));

    auto other = step(P("a.0"), "fw", "a[0]");
    CHECK_THROWS_AS(coinitial_concurrent(t1, other), std::invalid_argument);
}

TEST_CASE("projection of a left-threaded trace") {
    Trace t = replay("a.b.0 | c.0", {{"fw", "|L a[0]"}, {"fw", "|L b[1]"}});
    Trace pl = project(Side::Left, t);
    CHECK(print(pl.source) == "a.b.0");
    CHECK(to_string(pl.steps[0].label) == "a[0]");
    CHECK(to_string(pl.steps[1].label) == "b[1]");
    CHECK(print(pl.final_target()) == "a[0].b[1].0");

    CHECK_THROWS_AS(project(Side::Right, t), std::invalid_argument);  // pi_R(|L ...) undefined
}

TEST_CASE("projection of a synchronisation takes the component") {
    Trace t = replay("a.0 | 'a.0", {{"fw", "< |L a[0] , |R 'a[0] >"}});
    Trace pl = project(Side::Left, t);
    CHECK(to_string(pl.steps[0].label) == "a[0]");
    CHECK(print(pl.final_target()) == "a[0].0");
    Trace pr = project(Side::Right, t);
    CHECK(to_string(pr.steps[0].label) == "'a[0]");
}

TEST_CASE("projection preserves concurrency on random two-step traces") {
    Rng rng(31);
    GenOptions gen;
    gen.size = 5;
    LtsOptions lts;
    std::size_t checked = 0;
    while (checked < 200) {
        ProcessPtr l = random_walk(gen_standard(rng, gen), 2, lts, rng).final_target();
        ProcessPtr r = random_walk(gen_standard(rng, gen), 2, lts, rng).final_target();
        ProcessPtr p = par(l, r);
        auto firsts = forward_steps(p, lts);
        for (auto& b : backward_steps(p, lts)) firsts.push_back(b);
        for (const auto& s1 : firsts) {
            auto seconds = forward_steps(s1.target, lts);
            for (auto& b : backward_steps(s1.target, lts)) seconds.push_back(b);
            for (const auto& s2 : seconds) {
                Trace t{p, {s1, s2}};
                for (Side d : {Side::Left, Side::Right}) {
                    Trace proj;
                    try {
                        proj = project(d, t);
                    } catch (const std::invalid_argument&) {
                        continue;  // a component is undefined for this side
                    }
                    ++checked;
                    if (concurrent_in_trace(t, 1, 2)) CHECK(concurrent_in_trace(proj, 1, 2));
                }
            }
        }
    }
}
