#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace petalknot {

// Invalid textual or structural input. `position` is 1-based where it applies
// (token index for permutation parsing), 0 when there is no meaningful position.
class ParseError : public std::runtime_error {
public:
    ParseError(const std::string& msg, std::size_t position = 0)
        : std::runtime_error(msg), position_(position) {}
    std::size_t position() const noexcept { return position_; }

private:
    std::size_t position_;
};

// A resource cap was hit (e.g. crossing budget for the bracket state sum).
class BudgetError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// An internal self-check failed. Reaching this means a bug, not bad input.
class VerificationError : public std::logic_error {
public:
    using std::logic_error::logic_error;
};

} // namespace petalknot
