#include "cdfbounds/kummer_ratios.hpp"

#include <cmath>
#include <stdexcept>

#include "cdfbounds/specfun.hpp"

namespace cdfbounds {

double dee(double a, double b, double z) {
    if (!(a > 0.0)) throw std::domain_error("dee: a must be > 0");
    if (!(z > 0.0)) throw std::domain_error("dee: z must be > 0");
    if (!std::isfinite(b)) throw std::domain_error("dee: b must be finite");
    const double u = z - b;
    const double s = std::sqrt(u * u + 4.0 * a * z);
    // (u + s)/(2z); rationalized to 2a/(s - u) when u < 0
    return u >= 0.0 ? (u + s) / (2.0 * z) : 2.0 * a / (s - u);
}

double lambda_plus(double a, double b, double z) {
    if (!(a > 0.0)) throw std::domain_error("lambda_plus: a must be > 0");
    if (z < 0.0) throw std::domain_error("lambda_plus: z must be >= 0");
    const double u = z + 1.0 - b;
    const double s = std::sqrt(u * u + 4.0 * z * a);
    // (u + 2a + s)/(2a); the u + s part rationalized when u < 0
    const double us = u >= 0.0 ? u + s : (z == 0.0 ? 0.0 : 4.0 * z * a / (s - u));
    return 1.0 + us / (2.0 * a);
}

RatioDiagnostics ratio_h_diag(double a, double b, double z, const EvalConfig& cfg) {
    cfg.validate();
    if (!(a > 0.0) || !(b > 0.0) || !(z > 0.0))
        throw std::domain_error("ratio_h_diag: a, b, z must be > 0");
    const double m = kummer_m(a, b, z, cfg);
    const double m_both_up = kummer_m(a + 1.0, b + 1.0, z, cfg);
    const double m_a_up = kummer_m(a + 1.0, b, z, cfg);
    RatioDiagnostics out;
    out.h = m_both_up / m;
    out.zh = z * out.h;
    out.g = (a / b) * out.h;  // = M'(a,b,z)/M(a,b,z)
    out.shifted = m_a_up / m;
    out.d_lower = dee(a, b, z);
    out.d_upper = dee(a, b - 1.0, z);
    out.lambda_plus = cdfbounds::lambda_plus(a, b, z);
    return out;
}

ShiftedRatioBound shifted_ratio_bound(double a, double b, double z, const EvalConfig& cfg) {
    cfg.validate();
    if (!(a > 0.0) || !(b > 0.0))
        throw std::domain_error("shifted_ratio_bound: a, b must be > 0");
    if (z < 0.0) throw std::domain_error("shifted_ratio_bound: z must be >= 0");
    ShiftedRatioBound out;
    out.ratio = z == 0.0 ? 1.0 : kummer_m(a + 1.0, b, z, cfg) / kummer_m(a, b, z, cfg);
    out.lambda_plus = cdfbounds::lambda_plus(a, b, z);
    return out;
}

}  // namespace cdfbounds
