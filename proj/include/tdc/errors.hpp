#pragma once

#include <stdexcept>
#include <string>

namespace tdc {

/// Input file could not be parsed; line is 1-based.
struct parse_error : std::runtime_error {
    int line;
    parse_error(int line_, const std::string& msg)
        : std::runtime_error("line " + std::to_string(line_) + ": " + msg), line(line_) {}
};

/// An exact solver was asked to exceed its configured size cap.
struct cap_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

enum class colorer_failure {
    no_configuration,  // nothing reducible and the graph is too large for the oracle
    stuck,             // an extension vertex ran out of colors (detector/plan bug)
    infeasible,        // oracle proved the base case has no coloring
    list_size,         // some list is smaller than Delta+3
};

struct colorer_error : std::runtime_error {
    colorer_failure kind;
    colorer_error(colorer_failure k, const std::string& msg) : std::runtime_error(msg), kind(k) {}
};

struct generation_error : std::runtime_error {
    unsigned long long seed;
    generation_error(unsigned long long s, const std::string& msg)
        : std::runtime_error(msg + " (seed " + std::to_string(s) + ")"), seed(s) {}
};

}  // namespace tdc
