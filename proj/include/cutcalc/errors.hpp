#pragma once

#include <stdexcept>
#include <string>

namespace cutcalc {

/// Input text could not be parsed. Positions are 1-based.
class ParseError : public std::runtime_error {
public:
    ParseError(int line, int col, const std::string& what)
        : std::runtime_error("parse error at " + std::to_string(line) + ":" +
                             std::to_string(col) + ": " + what),
          line_(line),
          col_(col) {}

    int line() const { return line_; }
    int col() const { return col_; }

private:
    int line_;
    int col_;
};

/// A scenario hypothesis or user-supplied map fails a mathematical requirement.
class ValidationError : public std::runtime_error {
public:
    explicit ValidationError(const std::string& what) : std::runtime_error(what) {}
};

/// A product would land above the truncation degree. Truncation is part of the
/// algebra's definition, so this is reported separately from other failures.
class DegreeOverflowError : public std::runtime_error {
public:
    explicit DegreeOverflowError(const std::string& what) : std::runtime_error(what) {}
};

/// Violated contract between algebra values: dimension mismatch, vector not in
/// a subspace, ideal closure failure, disconnected algebra, and the like.
class AlgebraError : public std::runtime_error {
public:
    explicit AlgebraError(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace cutcalc
