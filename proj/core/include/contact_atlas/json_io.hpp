#pragma once

#include <cstddef>
#include <string>
#include <utility>
#include <vector>

#include "contact_atlas/divisor.hpp"
#include "contact_atlas/fan.hpp"
#include "contact_atlas/matrix.hpp"
#include "contact_atlas/numeric.hpp"

namespace contact_atlas {

// 1-based (line, column) of a byte offset, for parse error reporting.
std::pair<int, int> text_position(const std::string& text, std::size_t byte_offset);

// Rational from "p" or "p/q" with optional leading minus.
Rat rat_from_string(const std::string& s);

// Fan <-> { "rank": int, "rays": [[int]], "max_cones": [[int]] }.
// Integers that do not fit in 64 bits are written as decimal strings and
// accepted back in either form. Keys are emitted in sorted order, so output
// is byte-deterministic.
std::string fan_to_json_text(const Fan& fan);
Fan fan_from_json_text(const std::string& text, FanCheck level = FanCheck::full);

// Divisor -> { "coeffs": [int] }; reading returns the coefficients, to be
// paired with a fan by the caller.
std::string divisor_to_json_text(const ToricDivisor& d);
IntVec divisor_coeffs_from_json_text(const std::string& text);

// Group action input: { "n": int, "generators": [[[rational-as-string]]] },
// each generator a (2n+2)-square matrix in row-major nested arrays.
struct ActionInput {
    int n = 0;
    std::vector<RationalMatrix> generators;
};

std::string action_to_json_text(const ActionInput& a);
ActionInput action_from_json_text(const std::string& text);

// Reads and parses a file; parse failures report path, line, and column.
ActionInput load_action_file(const std::string& path);

}  // namespace contact_atlas
