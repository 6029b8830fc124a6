#pragma once

#include <stdexcept>
#include <string>

namespace hyperreg {

// Malformed input text (bad tokens, duplicate edges in a file, ...).
class ParseError : public std::runtime_error {
public:
    explicit ParseError(const std::string& what) : std::runtime_error(what) {}
};

// A documented operation precondition does not hold.
class PreconditionError : public std::runtime_error {
public:
    explicit PreconditionError(const std::string& what) : std::runtime_error(what) {}
};

// Construction would exceed the configured size budget.
class BudgetError : public std::runtime_error {
public:
    explicit BudgetError(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace hyperreg
