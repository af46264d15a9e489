#pragma once

#include <stdexcept>
#include <string>

namespace dricci {

enum class ErrorKind {
    Parse,
    NotStronglyConnected,
    SelfLoop,
    Domain,
    PerronDegenerate,
    BudgetExceeded,
    NotRegular,
    NotAnEdge,
    Internal,
};

const char* error_kind_name(ErrorKind kind);

/// Base of every error the library throws. `what()` is prefixed with the
/// kind name, e.g. "NotStronglyConnected: no path b->a".
class Error : public std::runtime_error {
public:
    Error(ErrorKind kind, const std::string& message)
        : std::runtime_error(std::string(error_kind_name(kind)) + ": " + message), kind_(kind) {}

    [[nodiscard]] ErrorKind kind() const { return kind_; }

private:
    ErrorKind kind_;
};

class ParseError : public Error {
public:
    ParseError(std::size_t line, const std::string& message)
        : Error(ErrorKind::Parse, "line " + std::to_string(line) + ": " + message), line_(line) {}
    [[nodiscard]] std::size_t line() const { return line_; }

private:
    std::size_t line_;
};

class DomainError : public Error {
public:
    explicit DomainError(const std::string& message) : Error(ErrorKind::Domain, message) {}
};

class BudgetExceeded : public Error {
public:
    explicit BudgetExceeded(const std::string& message)
        : Error(ErrorKind::BudgetExceeded, message) {}
};

}  // namespace dricci
