#pragma once

#include <stdexcept>
#include <string>

namespace ginwb {

enum class ErrorKind {
    invalid_argument,
    arity_mismatch,
    parse,
    zero_polynomial,
    degree_bound_exceeded,
    singular_matrix,
    not_regular_sequence,
    disagreement_across_trials,
    infeasible_state,
    check_failure,
};

class Error : public std::runtime_error {
public:
    Error(ErrorKind kind, const std::string& message)
        : std::runtime_error(message), kind_(kind) {}

    ErrorKind kind() const noexcept { return kind_; }

private:
    ErrorKind kind_;
};

class ParseError : public Error {
public:
    ParseError(int line, int column, const std::string& message)
        : Error(ErrorKind::parse,
                "parse error at line " + std::to_string(line) + ", column " +
                    std::to_string(column) + ": " + message),
          line_(line),
          column_(column) {}

    int line() const noexcept { return line_; }
    int column() const noexcept { return column_; }

private:
    int line_;
    int column_;
};

inline Error arity_mismatch(const std::string& message) {
    return Error(ErrorKind::arity_mismatch, message);
}

inline Error invalid_argument(const std::string& message) {
    return Error(ErrorKind::invalid_argument, message);
}

} // namespace ginwb
