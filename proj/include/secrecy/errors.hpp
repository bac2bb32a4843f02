#pragma once

#include <stdexcept>
#include <string>

namespace secrecy {

struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// g evaluated to a non-finite value at a support point of the distribution.
struct NonIntegrable : Error {
    using Error::Error;
};

// Channel inversion requested on a zero main gain.
struct DegenerateGain : Error {
    using Error::Error;
};

// The inversion set has zero probability (or infinite required power).
struct InfeasibleOutage : Error {
    using Error::Error;
};

// Sub-problem target rate above R_max.
struct InfeasibleRate : Error {
    using Error::Error;
};

// An iterative solve hit its iteration cap; message carries diagnostics.
struct NoConvergence : Error {
    using Error::Error;
};

// Simulation or CLI configuration rejected.
struct InvalidConfig : Error {
    using Error::Error;
};

// Closed-form bound evaluated outside its valid domain (vacuous bound).
struct DomainError : Error {
    using Error::Error;
};

// Simulated search cannot reach the requested operating point.
struct Unreachable : Error {
    using Error::Error;
};

}  // namespace secrecy
