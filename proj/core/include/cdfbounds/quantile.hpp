#pragma once

#include "cdfbounds/config.hpp"
#include "cdfbounds/errors.hpp"

// Certified brackets (y_l, y_u) for the central beta quantile at small target
// probability beta, plus a safeguarded inversion inside the bracket.
//
// y_l is the root of the closed-form upper CDF bound
//   f(y) = y^a (1-y)^b / (B(a,b)(a - (a+b)y)) = beta   on (0, a/(a+b)),
// y_u the root of the series lower bound
//   g(y) = y^a (1-y)^b (1 + ((a+b)/(a+1)) y) / (a B(a,b)) = beta,
// so B(0, y_l) < beta < B(0, y_u) whenever both solves converge.

namespace cdfbounds {

struct QuantileBracket {
    double y_l = 0.0;
    double y_u = 0.0;
    double beta = 0.0;
    int iterations_l = 0;
    int iterations_u = 0;
    bool converged = false;
};

// Fixed-point solves for y_l and y_u. Each outer step applies the isolating
// map twice: the composed map is monotone from below, so every reported
// iterate is itself a certified lower value for the respective root (the
// single-step map can overshoot and alternate). Stops when successive
// iterates agree to 1e-13 relative or after 200 map applications. Throws
// BracketUnavailableError if the lower map leaves (0, a/(a+b)): beta is too
// large for this estimator.
QuantileBracket beta_quantile_bracket(double a, double b, double beta,
                                      const EvalConfig& cfg = {});

// Inversion of B_{a,b}(0, y) = beta by Newton steps on the central-beta CDF
// (analytic density as derivative) restricted to [y_l, y_u], falling back to
// bisection whenever a step would leave the bracket. Residual
// |B(0,y) - beta| <= 1e-12 beta.
double beta_quantile(double a, double b, double beta, const EvalConfig& cfg = {});

// Same inversion on a caller-supplied bracket [lo, hi] that must straddle the
// quantile.
double beta_quantile_in(double a, double b, double beta, double lo, double hi,
                        const EvalConfig& cfg = {});

}  // namespace cdfbounds
