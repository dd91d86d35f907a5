#pragma once

#include <stdexcept>
#include <string>

namespace codegraph {

// Thrown when an exhaustive operation (vector enumeration, BFS oracle,
// subspace enumeration) would exceed its configured size cap. These
// operations are exact or absent; there is no sampling fallback.
struct cap_exceeded : std::runtime_error {
    explicit cap_exceeded(const std::string& what) : std::runtime_error(what) {}
};

// Malformed or inconsistent input file.
struct parse_error : std::runtime_error {
    explicit parse_error(const std::string& what) : std::runtime_error(what) {}
};

// An input generator matrix spans a degenerate code.
struct degenerate_input : std::runtime_error {
    explicit degenerate_input(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace codegraph
