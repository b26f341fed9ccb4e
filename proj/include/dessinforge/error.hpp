#ifndef DESSINFORGE_ERROR_HPP
#define DESSINFORGE_ERROR_HPP

#include <stdexcept>
#include <string>

namespace dessinforge {

// Bad spec string or bad CLI usage. CLI maps this to exit code 2.
class SpecParseError : public std::runtime_error {
public:
    SpecParseError(const std::string& what, std::size_t position)
        : std::runtime_error(what), pos(position) {}
    std::size_t pos;
};

// A constructed group failed its own validation (associativity, laws,
// defining relations). Always a bug in a collection rule, never user error.
class ValidationError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// A closure or construction would exceed the configured order cap.
// CLI maps this to exit code 3.
class OrderCapError : public std::runtime_error {
public:
    OrderCapError(const std::string& what, long long requested_cap)
        : std::runtime_error(what), cap(requested_cap) {}
    long long cap;
};

// Operation called on input outside its domain (non-abelian group passed to
// abelian_invariants, non-nilpotent to sylow_decompose, ...).
class UnsupportedInputError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

} // namespace dessinforge

#endif
