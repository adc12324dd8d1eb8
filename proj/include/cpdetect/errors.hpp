#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace cpdetect {

// Invalid generator / experiment parameters. Message names the offending
// parameter(s).
class ConfigError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

// Malformed edge-list input. Carries the 1-based line number.
class ParseError : public std::runtime_error {
public:
    ParseError(std::size_t line, const std::string& what)
        : std::runtime_error("line " + std::to_string(line) + ": " + what),
          line_(line) {}

    std::size_t line() const { return line_; }

private:
    std::size_t line_;
};

// The metric is undefined for the whole graph (empty or complete).
class DegenerateGraphError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Refused because the requested computation exceeds a hard cost bound.
class CostLimitError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

} // namespace cpdetect
