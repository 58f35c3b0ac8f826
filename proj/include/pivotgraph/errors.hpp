#pragma once

#include <stdexcept>
#include <string>

namespace pivotgraph {

// Bad or inconsistent caller input (unknown vertex, malformed JSON, ...).
struct InputError : std::runtime_error {
    explicit InputError(const std::string& msg) : std::runtime_error(msg) {}
};

// A configured resource cap was exceeded (group order, subgroup count).
// Distinct from InputError so harnesses can skip instead of fail.
struct CapacityError : std::runtime_error {
    explicit CapacityError(const std::string& msg) : std::runtime_error(msg) {}
};

// Structurally valid data whose numbers contradict each other
// (non-integral fiber genus, fiber square nonzero, ...).
struct DataError : std::runtime_error {
    explicit DataError(const std::string& msg) : std::runtime_error(msg) {}
};

}  // namespace pivotgraph
