#pragma once

#include <stdexcept>
#include <string>

namespace tspga {

/// Malformed city or document input. Carries the 1-based line when known.
class ParseError : public std::runtime_error {
public:
    ParseError(const std::string& what, std::size_t line = 0)
        : std::runtime_error(line ? "line " + std::to_string(line) + ": " + what : what),
          line_(line) {}

    std::size_t line() const noexcept { return line_; }

private:
    std::size_t line_;
};

/// A caller broke an operation's precondition (bad permutation, bad max, ...).
class ContractError : public std::logic_error {
public:
    using std::logic_error::logic_error;
};

/// Invalid GA configuration or city count unsuitable for a run.
class ConfigError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// An external subject crashed, violated the wire protocol, or diverged between repetitions.
class SubjectError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Traces from different subjects disagree.
class ConformanceError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

}  // namespace tspga
