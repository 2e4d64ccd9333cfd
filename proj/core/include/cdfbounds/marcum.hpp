#pragma once

#include <map>
#include <mutex>
#include <utility>

#include "cdfbounds/bound_value.hpp"
#include "cdfbounds/config.hpp"
#include "cdfbounds/specfun.hpp"

// Noncentral gamma (Marcum) functions P_mu/Q_mu and the three bound families
// built on them: recurrence/ratio bounds in terms of Bessel ratios, error
// function bounds, and incomplete gamma bounds, plus the marginal positivity
// inequalities that fall out of them.
//
//   P_mu(x,y) = int_0^y g_mu(x,t) dt,  Q_mu = 1 - P_mu,
//   g_mu(x,y) = (y/x)^{(mu-1)/2} e^{-x-y} I_{mu-1}(2 sqrt(xy)).
//
// All evaluation is in exponential-cancelling form; naive transcriptions of
// the formulas overflow at desk scale.

namespace cdfbounds {

struct GammaParams {
    double mu;  // order, in (0, 100]
    double x;   // noncentrality, in [0, 200]
    double y;   // argument, in [0, 200]

    // The variables of the error-function bounds: a = sqrt(2x), b = sqrt(2y).
    double chi_a() const;
    double chi_b() const;
    static GammaParams from_chi(double mu, double a, double b);

    void validate() const;  // throws std::domain_error outside desk scale
};

struct MarcumPQ {
    double p;
    double q;
};

// Oracle evaluator: P as the Poisson mixture sum_j e^{-x} x^j/j! P(mu+j, y)
// of regularized lower incomplete gammas, Q as the mirrored mixture of upper
// tails. Both tails keep full relative accuracy; truncation is certified by
// the monotonicity of the incomplete-gamma terms in j.
MarcumPQ marcum_pq(const GammaParams& p, const EvalConfig& cfg = {});

// g_mu(x,y), y > 0. At x = 0 returns the limit y^{mu-1} e^{-y} / Gamma(mu).
double marcum_density(const GammaParams& p, const EvalConfig& cfg = {});

struct CmuBound {
    double c;  // c_mu(x,y) = sqrt(y/x) I_mu(2 sqrt(xy)) / I_{mu-1}(2 sqrt(xy))
    BoundValue p_ratio_upper;  // P_{mu+1}/P_mu < c
    BoundValue q_ratio_lower;  // Q_{mu+1}/Q_mu > c
};

// x > 0, y > 0. c_mu -> y/mu as y -> 0.
CmuBound ratio_bound_c(const GammaParams& p, const EvalConfig& cfg = {});

// The y where c_mu(x, y) = 1: boundary between the P-side and Q-side validity
// regions of the difference bounds. Bisection on c - 1 (c is increasing in y).
double recurrence_crossing(double mu, double x, const EvalConfig& cfg = {});

// Thread-safe memo for recurrence_crossing, keyed on (mu, x); used by sweeps
// that revisit the same (mu, x) for many y.
class CrossingCache {
  public:
    double get(double mu, double x, const EvalConfig& cfg = {}) const;

  private:
    mutable std::mutex mutex_;
    mutable std::map<std::pair<double, double>, double> values_;
};

struct MarcumRecurrenceBounds {
    BoundValue p_upper;       // P_mu    < g_{mu+1}/(1 - c_mu)      (y < y0)
    BoundValue p_next_upper;  // P_{mu+1} < c_mu g_{mu+1}/(1 - c_mu) (y < y0)
    BoundValue q_upper;       // Q_mu    < g_{mu+1}/(c_mu - 1)      (y > y0)
    BoundValue q_next_upper;  // Q_{mu+1} < c_mu g_{mu+1}/(c_mu - 1) (y > y0)
    double crossing;          // y0
};

// Throws SingularDenominatorError when |1 - c_mu| < 1e-8 (y at the crossing).
MarcumRecurrenceBounds recurrence_difference_bounds(const GammaParams& p,
                                                    const EvalConfig& cfg = {});

struct OrderShiftBound {
    double prefactor;   // (y/x)^{(nu-mu)/2} I_{nu-1}(2 sqrt(xy)) / I_{mu-1}(2 sqrt(xy))
    BoundValue p_upper; // P_nu < prefactor * P_mu
    BoundValue q_lower; // Q_nu > prefactor * Q_mu
};

// nu >= mu. Proven for mu >= 1; mu in [1/2, 1) only in conjectured mode
// (flagged in the validity notes); mu < 1/2 is always rejected.
OrderShiftBound order_shift_bound(double nu, const GammaParams& p_base,
                                  const EvalConfig& cfg = {});

struct ErfBoundSet {
    BoundValue b1;  // lower bound on Qt_nu(a,b), valid nu > 1/2
    BoundValue b2;  // lower bound 1 - (erf term), valid nu > 1/2
    BoundValue l1;  // sharper lower bound, valid nu > 3/2
    BoundValue l2;  // complement-path analog of l1, valid nu > 3/2
    double g_nu;    // prefactor G_nu(a,b) = (a/2) sqrt(pi/2) (b/a)^nu
};

// Bounds on Qt_nu(a,b) = Q_nu(a^2/2, b^2/2) in terms of error functions,
// with nu = p.mu, a = sqrt(2x), b = sqrt(2y). Requires nu > 1/2, x, y > 0.
// cosh/tanh factors are evaluated with the exponential cancelled against the
// scaled Bessel kernel.
ErfBoundSet erf_bounds(const GammaParams& p, const EvalConfig& cfg = {});

// RHS - LHS of
//   (erfc((b-a)/sqrt2) + erfc((b+a)/sqrt2)) I_nu(ab) < sqrt(2/pi) a^nu/b^{nu+1} (e^{ab}+e^{-ab}),
// positive for nu >= -1/2, a, b > 0.
double erfc_bessel_inequality_margin(double nu, double a, double b,
                                     const EvalConfig& cfg = {});

struct IncGammaBounds {
    double prefactor;  // rho^{nu-1} e^{-x(1-rho^2)} I_{nu-1}(2 sqrt(xy))/I_{nu-1}(2 rho sqrt(xy))
    BoundValue p_upper;
    BoundValue q_lower;
};

// rho in [0, 1): P_nu(x,y) < prefactor * P_nu(rho^2 x, y), mirrored Q bound.
// At rho = 0 these are the incomplete-gamma forms
//   b1 = e^{-x} (sqrt(xy))^{1-nu} I_{nu-1}(2 sqrt(xy)) gamma_nu(y),
//   b2 = same with Gamma_nu(y), bounding P and Q directly.
// nu = p.mu; proven mode requires nu >= 1, conjectured mode admits nu > 0.
IncGammaBounds incgamma_bounds(const GammaParams& p, double rho,
                               const EvalConfig& cfg = {});

// e^x (sqrt(xy))^nu - I_nu(2 sqrt(xy)) Gamma_{nu+1}(y), positive for
// nu > -1, x, y > 0.
double curious_gamma_inequality_margin(double nu, double x, double y,
                                       const EvalConfig& cfg = {});

struct MarcumSeriesBound {
    BoundValue p_lower;  // P_mu > sum_{n=1}^{N} g_{mu+n}(x,y)
    BoundValue q_lower;  // Q_mu > g_mu(x,y) (the N-free bound)
};

// Nondecreasing in N, converges to P_mu as N grows.
MarcumSeriesBound series_lower_bound_p(const GammaParams& p, int n_terms,
                                       const EvalConfig& cfg = {});

}  // namespace cdfbounds
