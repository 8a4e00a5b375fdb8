#pragma once

#include <stdexcept>
#include <string>

namespace klab {

// Error categories map onto process exit codes in the CLI:
//   config -> 4, verification -> 2, budget -> 3.
struct Error : std::runtime_error {
    explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

struct DimensionMismatch : Error {
    using Error::Error;
};
struct NonSymmetricForm : Error {
    using Error::Error;
};
struct NonPositiveScale : Error {
    using Error::Error;
};
struct NegativeLength : Error {
    using Error::Error;
};
struct ResolutionTooLarge : Error {
    using Error::Error;
};
struct EmptyFamily : Error {
    using Error::Error;
};
struct EmptyNet : Error {
    using Error::Error;
};
struct AnchorInfeasible : Error {
    using Error::Error;
};
struct DomainNotReduced : Error {
    using Error::Error;
};
struct QuadratureUnresolved : Error {
    using Error::Error;
};
struct GridMismatch : Error {
    using Error::Error;
};
struct SupportsOverlap : Error {
    using Error::Error;
};
struct ThresholdExceeded : Error {
    using Error::Error;
};
struct ConfigError : Error {
    using Error::Error;
};

// Carries the best assignment found when an iteration budget runs out;
// the payload lives in the message plus the fields below.
struct BudgetExhausted : Error {
    double achieved_ratio;
    int last_scale_log2;
    BudgetExhausted(const std::string& msg, double achieved, int scale_log2)
        : Error(msg), achieved_ratio(achieved), last_scale_log2(scale_log2) {}
};

}  // namespace klab
