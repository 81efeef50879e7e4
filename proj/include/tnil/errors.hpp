#pragma once

#include <stdexcept>
#include <string>

namespace tnil {

/// Malformed input text (Laurent literals, edge lists).
class ParseError : public std::runtime_error {
public:
    ParseError(const std::string& what, std::size_t position)
        : std::runtime_error(what + " at position " + std::to_string(position)), position_(position)
    {
    }
    std::size_t position() const noexcept { return position_; }

private:
    std::size_t position_;
};

/// An operation was called outside its domain (e.g. a denominator not in S).
class PreconditionError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// Elements from different truncation levels were combined.
class LevelMismatch : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// A denominator is not realizable at any stage of the tower built so far.
class InsufficientTower : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// An exact check that the mathematics guarantees has failed.
class TheoremViolation : public std::logic_error {
public:
    using std::logic_error::logic_error;
};

} // namespace tnil
