#pragma once

#include <stdexcept>
#include <string>

namespace idemdim {

// All hard errors are exceptions derived from Error.  Membership queries
// never return "unknown": a family/ring combination the engine cannot
// decide is rejected at construction with UnsupportedQuery or
// UnsupportedFamily.
struct Error : std::runtime_error {
    explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

struct TagMismatch : Error {
    explicit TagMismatch(const std::string& msg) : Error("tag mismatch: " + msg) {}
};

struct RingMismatch : Error {
    explicit RingMismatch(const std::string& msg) : Error("ring mismatch: " + msg) {}
};

struct MalformedTable : Error {
    explicit MalformedTable(const std::string& msg) : Error("malformed table: " + msg) {}
};

struct CarrierCap : Error {
    explicit CarrierCap(const std::string& msg) : Error("carrier cap exceeded: " + msg) {}
};

struct UnsupportedBase : Error {
    explicit UnsupportedBase(const std::string& msg) : Error("unsupported base: " + msg) {}
};

struct UnsupportedFamily : Error {
    explicit UnsupportedFamily(const std::string& msg) : Error("unsupported family: " + msg) {}
};

struct UnsupportedQuery : Error {
    explicit UnsupportedQuery(const std::string& msg) : Error("unsupported query: " + msg) {}
};

struct NontrivialKernel : Error {
    explicit NontrivialKernel(const std::string& msg) : Error("nontrivial kernel: " + msg) {}
};

struct NotADomainTop : Error {
    explicit NotADomainTop(const std::string& msg) : Error("top step needs a B quotient: " + msg) {}
};

struct NotCancellative : Error {
    explicit NotCancellative(const std::string& msg) : Error("carrier not cancellative: " + msg) {}
};

struct NegativeExponentAtZero : Error {
    explicit NegativeExponentAtZero(const std::string& msg)
        : Error("negative exponent evaluated at zero: " + msg) {}
};

struct SyntaxError : Error {
    std::size_t column;
    SyntaxError(const std::string& msg, std::size_t col)
        : Error("syntax error at column " + std::to_string(col + 1) + ": " + msg), column(col) {}
};

struct ModeError : Error {
    explicit ModeError(const std::string& msg) : Error("mode error: " + msg) {}
};

struct BaseError : Error {
    explicit BaseError(const std::string& msg) : Error("base error: " + msg) {}
};

}  // namespace idemdim
