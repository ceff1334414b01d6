// Error taxonomy shared by all modules. The CLI maps these onto exit codes:
// parse_error -> 2, domain/unsupported/resource -> 3, theorem_violation -> 4.
#pragma once

#include <stdexcept>
#include <string>

namespace thinpoly {

// Malformed input text (ASCII grid or JSON); carries a position when known.
class parse_error : public std::runtime_error {
public:
    parse_error(const std::string& msg, int line = -1, int column = -1)
        : std::runtime_error(format(msg, line, column)), line_(line), column_(column) {}
    int line() const { return line_; }
    int column() const { return column_; }

private:
    static std::string format(const std::string& msg, int line, int column) {
        if (line < 0) return msg;
        return msg + " (line " + std::to_string(line) + ", column " + std::to_string(column) + ")";
    }
    int line_;
    int column_;
};

// An argument violates an operation's precondition (cell not in the set,
// disconnected input where a polyomino is required, ...).
class domain_error : public std::runtime_error {
public:
    explicit domain_error(const std::string& msg) : std::runtime_error(msg) {}
};

// Structurally valid input outside the class an operation is defined for.
class unsupported_input : public std::runtime_error {
public:
    explicit unsupported_input(const std::string& msg) : std::runtime_error(msg) {}
};

// A configured size/monomial budget would be exceeded.
class resource_error : public std::runtime_error {
public:
    explicit resource_error(const std::string& msg) : std::runtime_error(msg) {}
};

// A verified identity failed, or an internal invariant that the underlying
// mathematics guarantees did not hold. Batch runs abort on this and serialize
// the offending fixture; it should never fire.
class theorem_violation : public std::runtime_error {
public:
    explicit theorem_violation(const std::string& msg) : std::runtime_error(msg) {}
};

// Hilbert-function data inconsistent with the assumed Krull dimension or
// h-polynomial degree. Escalated like a theorem violation: the formula, not
// the instance, is the first suspect.
class inconsistency_error : public theorem_violation {
public:
    explicit inconsistency_error(const std::string& msg) : theorem_violation(msg) {}
};

}  // namespace thinpoly
