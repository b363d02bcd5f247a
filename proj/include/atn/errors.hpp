#pragma once

#include <stdexcept>
#include <string>

namespace atn {

// Malformed digraph file. `line` is 1-based and refers to the input stream.
class ParseError : public std::runtime_error {
public:
    ParseError(int line, const std::string& what)
        : std::runtime_error("line " + std::to_string(line) + ": " + what), line_(line) {}

    int line() const { return line_; }

private:
    int line_;
};

// Numerical failure (eigensolver non-convergence, Gram matrix not PSD).
class NumericalError : public std::runtime_error {
public:
    explicit NumericalError(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace atn
