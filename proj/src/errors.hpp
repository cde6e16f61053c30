#pragma once

#include <stdexcept>

namespace arrdeform {

// Bad user input: malformed instance files, dimension mismatches, invalid field data.
struct InputError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// An exhaustive scan would exceed its cap; the message names the cap that was hit.
struct BudgetError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// A documented precondition was violated by the caller.
struct ContractError : std::logic_error {
    using std::logic_error::logic_error;
};

// A cross-checked internal invariant failed. Always a bug, never user error.
struct InternalError : std::logic_error {
    using std::logic_error::logic_error;
};

}  // namespace arrdeform
