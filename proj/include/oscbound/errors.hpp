#ifndef OSCBOUND_ERRORS_HPP
#define OSCBOUND_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace oscb {

struct InvalidInputError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

struct NoSignChangeError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct NoInteriorMinimumError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// PHI forward solve hit a zero leading coefficient (E on the degenerate set).
struct DegenerateEnergyError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct PrecisionError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct EmptyWindowError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// feasible islands of adjacent states overlap at this order
struct ResolutionError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct InvalidBoundError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct AmbiguousStateError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

}  // namespace oscb

#endif
