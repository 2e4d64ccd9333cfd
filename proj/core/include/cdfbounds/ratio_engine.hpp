#pragma once

#include <functional>

#include "cdfbounds/bound_value.hpp"
#include "cdfbounds/config.hpp"
#include "cdfbounds/errors.hpp"

// Generic machinery for a pair of densities g1, g2 on (lo, hi) whose ratio
// r = g2/g1 is strictly monotone: the unique crossing point where r = 1, the
// ratio bounds min/max{1, r} on G2/G1 and its complement, and the
// difference-based bounds U1 = (G1-G2)/(1-r), U2 = r*U1.
//
// Monotonicity of r is a declared property of the pair (the underlying
// families prove it analytically); tests verify it by sampling. The engine
// adds no state of its own.

namespace cdfbounds {

enum class RatioDirection { increasing, decreasing };

struct DensityPair {
    std::function<double(double)> g1;
    std::function<double(double)> g2;
    RatioDirection ratio_direction = RatioDirection::increasing;
    double lo = 0.0;
    double hi = 1.0;

    double ratio(double t) const { return g2(t) / g1(t); }
};

// Unique x0 in (lo, hi) with r(x0) = 1, located by bisection on r - 1 over
// the bracket [bracket_lo, bracket_hi] (defaults to just inside (lo, hi)).
// Throws NoCrossingError if r - 1 does not change sign on the bracket.
double crossing_point(const DensityPair& pair, const EvalConfig& cfg = {});
double crossing_point(const DensityPair& pair, double bracket_lo, double bracket_hi,
                      const EvalConfig& cfg = {});

struct RatioBounds {
    BoundValue cdf_ratio;         // bound on G2(x)/G1(x)
    BoundValue complement_ratio;  // bound on (1-G2(x))/(1-G1(x))
};

// Increasing r: G2/G1 < min{1, r(x)} and Gbar2/Gbar1 > max{1, r(x)};
// sides flipped for decreasing r.
RatioBounds ratio_bound(const DensityPair& pair, double x);

struct DifferenceBounds {
    BoundValue u1;  // value (G1-G2)/(1-r); for x < x0 an upper bound on G1
    BoundValue u2;  // value r*u1;         for x < x0 an upper bound on G2
};

// diff must equal G1(x) - G2(x), supplied in closed form by the caller.
// Requires the increasing-ratio case (the one the recurrence families
// realize). For x > x0 the returned values are negative and -u1, -u2 are
// upper bounds on the complements; valid flags encode the regime. Throws
// SingularDenominatorError when |1 - r(x)| < 1e-8.
DifferenceBounds difference_bounds(const DensityPair& pair, double diff, double x,
                                   const EvalConfig& cfg = {});

}  // namespace cdfbounds
