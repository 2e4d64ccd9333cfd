#pragma once

#include "cdfbounds/bound_value.hpp"
#include "cdfbounds/config.hpp"
#include "cdfbounds/specfun.hpp"

// Noncentral beta distribution and its bound families: recurrence-based
// bounds, ratio bounds with a closed-form surd alternative, a convergent
// series of lower bounds, and bounds in terms of the central distribution.
//
//   B_{a,b}(x,y) = e^{-x/2} sum_j (x/2)^j/j! I_y(a+j, b)
//                = int_0^y g_{a,b}(x,t) dt,
//   g_{a,b}(x,y) = e^{-x/2}/B(a,b) y^{a-1} (1-y)^{b-1} M(a+b, a, xy/2).

namespace cdfbounds {

struct BetaParams {
    double a;  // shape, in (0, 100]
    double b;  // shape, in (0, 100]
    double x;  // noncentrality, in [0, 200]
    double y;  // argument, in [0, 1]

    double z() const { return 0.5 * x * y; }
    void validate() const;
};

struct BetaNcCdf {
    double b;      // B_{a,b}(x,y)
    double b_bar;  // 1 - B_{a,b}(x,y)
};

// Poisson mixture over central betas; both tails computed natively so each
// keeps relative accuracy, with truncation certified by the monotonicity of
// I_y(a+j, b) in j.
BetaNcCdf beta_nc_cdf(const BetaParams& p, const EvalConfig& cfg = {});

// g_{a,b}(x,y), y in (0,1). Reduces to the central beta density at x = 0.
double beta_nc_density(const BetaParams& p, const EvalConfig& cfg = {});

enum class ShiftKind { a_up, b_up, a_down_b_up };

// Inhomogeneous term of the parameter recurrences:
//   a_up:        B_{a,b} = B_{a+1,b}   + (C/a)  M(a+b, a+1, z)
//   b_up:        B_{a,b} = B_{a,b+1}   - (C/b)  M(a+b, a,   z)
//   a_down_b_up: B_{a,b} = B_{a-1,b+1} - (C/by) M(a+b, a,   z)
// with C = C_{a,b}(x,y) = e^{-x/2} y^a (1-y)^b / B(a,b). The complementary
// function satisfies the same recurrences with the term's sign reversed.
struct RecurrenceShift {
    ShiftKind kind;
    double term;       // always >= 0
    double prefactor;  // C_{a,b}(x,y)
};

// a_down_b_up requires a > 1.
RecurrenceShift recurrence_shift(const BetaParams& p, ShiftKind kind,
                                 const EvalConfig& cfg = {});

struct BetaRatioBound {
    BoundValue kummer_form;  // ((a+b)/a) y M(a+b+1,a+1,z)/M(a+b,a,z)
    BoundValue closed_form;  // (1/x)(z+1-a+sqrt((z+1-a)^2+4(a+b)z))
};

// Upper bounds on B_{a+1,b}/B_{a,b}; kummer_form <= closed_form everywhere.
// x > 0, y in (0,1). The surd is rationalized when z+1-a < 0.
BetaRatioBound ratio_bound_a(const BetaParams& p, const EvalConfig& cfg = {});

// The y in (0,1) where g_{a+1,b} = g_{a,b}; equals a/(a+b) exactly at x = 0.
double beta_recurrence_crossing(double a, double b, double x, const EvalConfig& cfg = {});

struct BetaRecurrenceBounds {
    BoundValue b_upper;          // B_{a,b}   < C M(a+b,a+1,z)/(a(1-r))  (y < y0)
    BoundValue b_next_upper;     // B_{a+1,b} < r * (same)               (y < y0)
    BoundValue bbar_upper;       // Bbar_{a,b}   < C M(a+b,a+1,z)/(a(r-1)) (y > y0)
    BoundValue bbar_next_upper;  // Bbar_{a+1,b} < r * (same)             (y > y0)
    double crossing;             // y0
};

// r = g_{a+1,b}/g_{a,b}. At x = 0 the b_upper value is exactly
// y^a (1-y)^b / (B(a,b)(a - (a+b)y)) and bbar_upper its reflection.
// Throws SingularDenominatorError when |1 - r| < 1e-8.
BetaRecurrenceBounds recurrence_difference_bounds_beta(const BetaParams& p,
                                                       const EvalConfig& cfg = {});

struct BetaSeriesBound {
    BoundValue b_lower;     // (C/a) sum_{j=0}^{N} ((a+b)_j/(a+1)_j) y^j M(a+b+j, a+j+1, z)
    BoundValue bbar_lower;  // (C_{a-1,b}/(a-1)) M(a+b-1, a, z), defined for a > 1
};

// Nondecreasing in N, converges to B as N grows. bbar_lower is flagged
// invalid when a <= 1 (the shifted parameter leaves the domain).
BetaSeriesBound series_lower_bound_beta(const BetaParams& p, int n_terms,
                                        const EvalConfig& cfg = {});

struct CentralFactorBounds {
    double factor;            // e^{-x(rho-1)/2} M(a+b,a,rho z)/M(a+b,a,z)
    BoundValue b_upper;       // B_{a,b}(x,y)    < B_{a,b}(rho x, y)/factor
    BoundValue bbar_lower;    // Bbar_{a,b}(x,y) > Bbar_{a,b}(rho x, y)/factor
    double curious_margin;    // e^{x/2} - Bbar_{a,b}(0,y) M(a+b,a,z) > 0
};

// rho in [0,1), x > 0. At rho = 0 the bounds read
//   B < e^{-x/2} M(a+b,a,z) B_{a,b}(0,y),  Bbar > e^{-x/2} M(a+b,a,z) Bbar_{a,b}(0,y).
CentralFactorBounds central_factor_bounds(const BetaParams& p, double rho,
                                          const EvalConfig& cfg = {});

}  // namespace cdfbounds
