#pragma once

#include <stdexcept>
#include <string>

namespace bipwalk {

// Input text could not be parsed. `line` is 1-based.
struct ParseError : std::runtime_error {
    ParseError(const std::string& msg, int line_no)
        : std::runtime_error("line " + std::to_string(line_no) + ": " + msg), line(line_no) {}
    int line;
};

// A structural contract was violated (graph invariants, partition goodness, ...).
struct ValidationError : std::runtime_error {
    explicit ValidationError(const std::string& msg) : std::runtime_error(msg) {}
};

// The request is valid in principle but exceeds a hard size bound of the
// implementation (e.g. exact enumeration limits).
struct CapacityError : std::runtime_error {
    explicit CapacityError(const std::string& msg) : std::runtime_error(msg) {}
};

// An assumption that holds for minor-free inputs failed (e.g. no low-degree
// vertex exists in a contracted multigraph).
struct DiagnosticError : std::runtime_error {
    explicit DiagnosticError(const std::string& msg) : std::runtime_error(msg) {}
};

}  // namespace bipwalk
