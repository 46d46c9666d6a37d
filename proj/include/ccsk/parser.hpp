#pragma once

#include <stdexcept>
#include <string>

#include "ccsk/process.hpp"

namespace ccsk {

struct ParseError : std::runtime_error {
    ParseError(std::size_t position, const std::string& message)
        : std::runtime_error("parse error at " + std::to_string(position) + ": " + message),
          pos(position) {}
    std::size_t pos;
};

// Grammar (precedence low to high: |, +, !, prefix, \):
//   proc     := par
//   par      := sum ("|" sum)*
//   sum      := bang ("+" bang)*
//   bang     := "!" bang | prefixed
//   prefixed := act ("[" nat "!"? "]")? ("." prefixed)? | atom
//   atom     := ("0" | "(" proc ")") ("\" name)*
//   act      := name | "'" name ;  name := [a-z][a-z0-9_]*
// A trailing ".0" may be omitted on input; the printer always emits it.
// Rejected inputs: tau as a prefix, a key index used more than twice or
// twice on non-complementary actions.
ProcessPtr parse(const std::string& text);

// Canonical form with minimal parentheses; parse(print(p)) == p.
std::string print(const ProcessPtr& p);

}  // namespace ccsk
