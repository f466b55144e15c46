#pragma once

#include <stdexcept>

namespace qderange {

// Asked about an n outside an operation's stated validity range (the
// structural results on d_n(q) start at n = 6).
struct scope_error : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

// Inputs to check_lemma1 that do not satisfy the lemma's premise. Distinct
// from a property failure: the lemma says nothing about such inputs.
struct premise_error : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

// An enumeration would exceed its configured cap.
struct resource_limit_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

}  // namespace qderange
