#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "ccsk/generate.hpp"

namespace ccsk {

// Randomized suites shared by the quickcheck CLI command and the
// acceptance tests. Every suite is deterministic given its parameters.
struct SuiteParams {
    std::uint64_t seed = 0xCC5C;
    std::size_t count = 100;    // generated processes
    std::size_t size = 8;       // term budget
    std::size_t walk_len = 6;   // walk length used to reach a random state
    std::size_t depth = 4;      // trace depth for the consistency suite
    bool marking = true;        // honored by bwd-conc / wellfounded / consistency
};

struct SuiteResult {
    std::string name;
    bool passed = true;
    std::size_t checks = 0;  // individual assertions evaluated
    std::string failure;     // first counterexample, with replay data
    double seconds = 0.0;
};

// Suites: loop, fwd-diamond, side-diamond, square, bwd-conc, wellfounded,
// consistency, projection, rpi. Throws std::invalid_argument on an unknown
// name. The diamond and square suites check their positive half on the
// unmarked replication fragment and the no-false-diamond half on the
// marked fragment, where each statement holds exactly.
SuiteResult run_suite(const std::string& name, const SuiteParams& params);

const std::vector<std::string>& suite_names();

}  // namespace ccsk
