#pragma once

#include "cdfbounds/config.hpp"

// Monotonicity and closed-form bounds for Kummer-function ratios: the
// characteristic-root sandwich for M'/M and the shifted-ratio bound for
// M(a+1,b,z)/M(a,b,z). These drive the beta ratio bounds and are exposed both
// as formulas and as diagnostics for the sampled monotonicity tests.

namespace cdfbounds {

// D(a,b,z) = (z - b + sqrt((z-b)^2 + 4az)) / (2z), a > 0, z > 0, any real b
// (callers use b and b-1). Rationalized when z < b to avoid cancellation;
// D -> a/b as z -> 0+ for b > 0.
double dee(double a, double b, double z);

// Closed root of the shifted-ratio Riccati equation:
// (z + 1 - b + 2a + sqrt((z+1-b)^2 + 4za)) / (2a). Defined for z >= 0;
// equals 1 at z = 0 when b >= 1, and 1 + (1-b)/a when b < 1.
double lambda_plus(double a, double b, double z);

struct RatioDiagnostics {
    double h;        // M(a+1,b+1,z)/M(a,b,z); decreasing iff a > b, constant iff a = b
    double zh;       // z h(z), increasing for all a,b > 0
    double g;        // (a/b) h = M'(a,b,z)/M(a,b,z)
    double shifted;  // M(a+1,b,z)/M(a,b,z), increasing in z
    double d_lower;  // D(a,b,z);   g > d_lower when a > b, g < d_lower when a <= b
    double d_upper;  // D(a,b-1,z); g < d_upper
    double lambda_plus;
};

// a, b, z > 0.
RatioDiagnostics ratio_h_diag(double a, double b, double z, const EvalConfig& cfg = {});

struct ShiftedRatioBound {
    double ratio;        // M(a+1,b,z)/M(a,b,z)
    double lambda_plus;  // strict upper bound on ratio
};

// a, b > 0, z >= 0. ratio -> 1 with slope 1/b at z = 0 and behaves like z/a
// for large z.
ShiftedRatioBound shifted_ratio_bound(double a, double b, double z,
                                      const EvalConfig& cfg = {});

}  // namespace cdfbounds
