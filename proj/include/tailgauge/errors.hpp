#ifndef TAILGAUGE_ERRORS_HPP
#define TAILGAUGE_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace tailgauge {

// Invalid parameters or a malformed distribution description.
class SpecError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

// The operation needs a capability the given spec does not have
// (closed-form cdf, finite variance, finite mean).
class UnsupportedSpecError : public SpecError {
public:
    using SpecError::SpecError;
};

// Zero empirical or theoretical variance: the standardized outlier
// functional is undefined for such input.
class DegenerateSampleError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// A numerical routine failed to converge within its budget.
class NumericalError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

} // namespace tailgauge

#endif
