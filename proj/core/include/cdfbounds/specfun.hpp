#pragma once

#include "cdfbounds/config.hpp"
#include "cdfbounds/errors.hpp"

// Reference-precision kernels for the classical special functions the bound
// families are built from. Everything is evaluated by ascending power series
// or Lentz continued fractions on a desk-scale domain (Bessel argument
// t <= 400, Kummer argument z <= 400); asymptotic regimes are out of scope.
// All functions are pure and reentrant.

namespace cdfbounds {

// e^{-t} I_nu(t).  nu > -1, 0 <= t <= 400.
double bessel_i_scaled(double nu, double t, const EvalConfig& cfg = {});

// (t/2)^{-nu} I_nu(t): the entire part of I_nu, sum_k (t^2/4)^k / (k! Gamma(nu+k+1)).
// Equals 1/Gamma(nu+1) at t = 0. Never overflows on the admitted domain.
double bessel_i_norm(double nu, double t, const EvalConfig& cfg = {});

// e^{-t} (t/2)^{-nu} I_nu(t). The canonical kernel: bound formulas combine it
// so that exponentials cancel algebraically rather than numerically.
double bessel_i_scaled_norm(double nu, double t, const EvalConfig& cfg = {});

// I_nu(t) / I_{nu-1}(t), computed as (t/2) * inorm(nu)/inorm(nu-1) so the
// exponential scale cancels exactly. Behaves like t/(2 nu) as t -> 0.
double bessel_i_ratio(double nu, double t, const EvalConfig& cfg = {});

// Kummer confluent hypergeometric M(alpha, beta, z) = 1F1(alpha; beta; z),
// alpha, beta > 0, 0 <= z <= 400. All Taylor terms are positive, so the
// result is >= 1 and term-ratio stopping certifies the tail.
double kummer_m(double alpha, double beta, double z, const EvalConfig& cfg = {});

struct IncompleteGamma {
    double lower;      // gamma_nu(y)  = int_0^y t^{nu-1} e^{-t} dt
    double upper;      // Gamma_nu(y)  = int_y^inf t^{nu-1} e^{-t} dt
    double reg_lower;  // P(nu, y) = lower / Gamma(nu)
    double reg_upper;  // Q(nu, y) = upper / Gamma(nu)
};

// nu in (0, 170] (unregularized outputs need Gamma(nu) in range), y >= 0.
// Series for P when y < nu+1, Lentz continued fraction for Q otherwise, so
// the smaller tail is always the one computed natively.
IncompleteGamma incomplete_gamma(double nu, double y, const EvalConfig& cfg = {});

struct RegGammaPQ {
    double p;
    double q;
};

// Regularized pair only. Admits much larger orders than incomplete_gamma
// (nu up to 2000) since no Gamma(nu) factor is ever formed; this is what the
// Poisson mixtures iterate over.
RegGammaPQ reg_gamma_pq(double nu, double y, const EvalConfig& cfg = {});

struct CentralBetaPair {
    double cdf;   // I_y(a, b)
    double ccdf;  // 1 - I_y(a, b)
};

// Regularized incomplete beta I_y(a,b) by the standard continued fraction,
// switched about y = (a+1)/(a+b+2) so the natively computed side is the small
// one; the pair keeps both tails relatively accurate.
CentralBetaPair central_beta_pair(double a, double b, double y, const EvalConfig& cfg = {});
double central_beta(double a, double b, double y, const EvalConfig& cfg = {});

struct ErfPair {
    double erf;
    double erfc;
};

ErfPair erfc_pair(double u);

// log Gamma(v), v > 0. Lanczos approximation, |error| well under 1e-13 on the
// desk-scale domain.
double log_gamma(double v);

// log B(a,b) = log Gamma(a) + log Gamma(b) - log Gamma(a+b).
double log_beta(double a, double b);

}  // namespace cdfbounds
