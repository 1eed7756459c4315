#pragma once

#include <stdexcept>
#include <string>

namespace schur {

// Raised when an enumeration would exceed the configured order or ring-count ceiling.
class BudgetExceeded : public std::runtime_error {
   public:
    using std::runtime_error::runtime_error;
};

// A closed-form formula was called with parameters outside its stated side conditions.
class SideConditionError : public std::invalid_argument {
   public:
    using std::invalid_argument::invalid_argument;
};

// Malformed serialized ring document.
class ParseError : public std::runtime_error {
   public:
    using std::runtime_error::runtime_error;
};

// An invariant that the mathematics guarantees was observed to fail.
class InternalError : public std::logic_error {
   public:
    using std::logic_error::logic_error;
};

}  // namespace schur
