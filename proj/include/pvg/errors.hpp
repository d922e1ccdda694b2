#ifndef PVG_ERRORS_HPP
#define PVG_ERRORS_HPP

#include <stdexcept>
#include <string>
#include <cstddef>

namespace pvg {

struct ZeroPolynomial : std::invalid_argument {
    ZeroPolynomial() : std::invalid_argument("zero polynomial not allowed here") {}
};

struct ZeroInput : std::invalid_argument {
    explicit ZeroInput(const std::string& what) : std::invalid_argument(what) {}
};

struct PoleAtPoint : std::domain_error {
    explicit PoleAtPoint(const std::string& what) : std::domain_error(what) {}
};

struct NotKummer : std::invalid_argument {
    NotKummer() : std::invalid_argument("classification is not of Kummer type") {}
};

struct ZeroObjectPoint : std::invalid_argument {
    ZeroObjectPoint() : std::invalid_argument("object point c = 0 lies outside O") {}
};

struct ShapeMismatch : std::invalid_argument {
    explicit ShapeMismatch(const std::string& what) : std::invalid_argument(what) {}
};

struct SyntaxError : std::runtime_error {
    std::size_t position;
    SyntaxError(const std::string& what, std::size_t pos)
        : std::runtime_error(what + " (at position " + std::to_string(pos) + ")"),
          position(pos) {}
};

struct UnsupportedOrder : std::runtime_error {
    explicit UnsupportedOrder(const std::string& what) : std::runtime_error(what) {}
};

struct UnsupportedInput : std::runtime_error {
    explicit UnsupportedInput(const std::string& what) : std::runtime_error(what) {}
};

// Raised when an exact procedure exhausts its step budget or an internal
// invariant fails; never used to hide an approximate answer.
struct InternalError : std::logic_error {
    explicit InternalError(const std::string& what) : std::logic_error(what) {}
};

} // namespace pvg

#endif
