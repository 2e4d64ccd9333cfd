#pragma once

#include <stdexcept>
#include <string>

namespace cdfbounds {

// Series or continued fraction failed to meet the tolerance within the term
// budget. Carries the partial estimate accumulated so far.
class ConvergenceError : public std::runtime_error {
  public:
    ConvergenceError(const std::string& msg, double partial)
        : std::runtime_error(msg), partial_estimate(partial) {}
    double partial_estimate;
};

// The density ratio does not cross 1 on the given interval; the difference
// bounds degenerate to the trivial bound 1.
class NoCrossingError : public std::runtime_error {
  public:
    explicit NoCrossingError(const std::string& msg) : std::runtime_error(msg) {}
};

// r(x) = 1 within tolerance: the 1/(1-r) denominator carries no information.
class SingularDenominatorError : public std::runtime_error {
  public:
    SingularDenominatorError(const std::string& msg, double ratio)
        : std::runtime_error(msg), ratio_value(ratio) {}
    double ratio_value;
};

// The quantile fixed-point iteration left its domain: beta is too large for
// the small-beta bracket estimator.
class BracketUnavailableError : public std::runtime_error {
  public:
    explicit BracketUnavailableError(const std::string& msg) : std::runtime_error(msg) {}
};

}  // namespace cdfbounds
