#pragma once

#include <stdexcept>
#include <string>

namespace monobump {

/// Argument outside the documented domain of an operation.
class DomainError : public std::domain_error {
public:
    using std::domain_error::domain_error;
};

/// A quadrature exhausted its evaluation budget before reaching tolerance.
class ToleranceNotMet : public std::runtime_error {
public:
    ToleranceNotMet(const std::string& msg, double value, double errEstimate)
        : std::runtime_error(msg), value(value), errEstimate(errEstimate) {}
    double value;
    double errEstimate;
};

/// Real-axis and contour transforms disagree in the overlap band.
class CrossValidationFailure : public std::runtime_error {
public:
    CrossValidationFailure(const std::string& msg, double realAxis, double contour)
        : std::runtime_error(msg), realAxis(realAxis), contour(contour) {}
    double realAxis;
    double contour;
};

/// Too few samples survive a filter to perform a fit.
class InsufficientSamples : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// A truncated tail cannot be certified negligible at the requested level.
class TailNotNegligible : public std::runtime_error {
public:
    TailNotNegligible(const std::string& msg, double bound, double threshold)
        : std::runtime_error(msg), bound(bound), threshold(threshold) {}
    double bound;
    double threshold;
};

/// A regression window contains too few usable nodes.
class WindowTooSmall : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

}  // namespace monobump
