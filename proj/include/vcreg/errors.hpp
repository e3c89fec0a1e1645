#pragma once

#include <stdexcept>
#include <string>

namespace vcreg {

// Hard error: bad input, violated invariant, exceeded budget.  CLI exit 1.
struct Error : std::runtime_error {
    explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

// Precondition refusal: the operation declines to run, by contract.
// Not a failure of the tool.  CLI exit 2.
struct Refusal : std::runtime_error {
    explicit Refusal(const std::string& msg) : std::runtime_error(msg) {}
};

}  // namespace vcreg
