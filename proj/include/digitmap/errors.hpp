#pragma once

#include <stdexcept>
#include <string>

namespace digitmap {

// Input that violates a documented precondition (bad map, bad parameters).
class InvalidInput : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

// A map that fails the premises required by a witness construction.
class PremiseFailure : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// A search ran out of candidates before finding a witness.
class BudgetExceeded : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// A recipe needs concrete values that tower past the configured depth or size.
class DepthExceeded : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// A sparse number whose dense expansion exceeds the requested digit limit.
class TooLarge : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Two sparse operands whose digit intervals overlap. Always a construction bug.
class OverlapError : public std::logic_error {
public:
    using std::logic_error::logic_error;
};

}  // namespace digitmap
