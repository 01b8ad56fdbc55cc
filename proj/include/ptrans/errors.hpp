#pragma once

#include <stdexcept>
#include <string>

namespace ptrans {

/// Thrown when an operation receives a non-finite or out-of-contract input.
class InvalidParameter : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// Thrown by peak_width when the requested lattice peak coincides with the
/// inverse-sqrt resonance (the width formula has a vanishing denominator).
class SingularPeak : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Thrown when a resonance solver is asked to run outside its relation regime.
class NotApplicableError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

} // namespace ptrans
