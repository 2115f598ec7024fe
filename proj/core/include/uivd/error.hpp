#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace uivd {

/// Raised when an operation is handed an argument outside its domain
/// (dead vertex id, out-of-range block index, budget below zero, ...).
class DomainError : public std::logic_error {
public:
    using std::logic_error::logic_error;
};

/// Malformed graph file. `line()` is 1-based; 0 means "no particular line".
class ParseError : public std::runtime_error {
public:
    ParseError(std::size_t line, const std::string& what);

    std::size_t line() const noexcept { return line_; }

private:
    std::size_t line_;
};

/// A claimed certificate (ordering, model) does not hold for the graph.
class CertificateError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Broken internal invariant. Seeing one of these is a bug.
class InternalError : public std::logic_error {
public:
    using std::logic_error::logic_error;
};

} // namespace uivd
