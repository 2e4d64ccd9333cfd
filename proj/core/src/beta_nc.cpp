#include "cdfbounds/beta_nc.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>

namespace cdfbounds {

namespace {

constexpr double kSingularTol = 1e-8;

// C_{a,b}(x,y) = e^{-x/2} y^a (1-y)^b / B(a,b), in log form.
double prefactor_c(double a, double b, double x, double y) {
    return std::exp(-0.5 * x + a * std::log(y) + b * std::log1p(-y) - log_beta(a, b));
}

// g_{a+1,b}/g_{a,b} = ((a+b)/a) y M(a+b+1,a+1,z)/M(a+b,a,z); proven increasing in y.
double density_ratio(double a, double b, double x, double y, const EvalConfig& cfg) {
    const double z = 0.5 * x * y;
    return ((a + b) / a) * y * kummer_m(a + b + 1.0, a + 1.0, z, cfg) /
           kummer_m(a + b, a, z, cfg);
}

}  // namespace

void BetaParams::validate() const {
    if (!std::isfinite(a) || !std::isfinite(b) || !std::isfinite(x) || !std::isfinite(y))
        throw std::domain_error("BetaParams: values must be finite");
    if (!(a > 0.0) || a > 100.0 || !(b > 0.0) || b > 100.0)
        throw std::domain_error("BetaParams: a, b must be in (0, 100]");
    if (x < 0.0 || x > 200.0) throw std::domain_error("BetaParams: x must be in [0, 200]");
    if (y < 0.0 || y > 1.0) throw std::domain_error("BetaParams: y must be in [0, 1]");
}

BetaNcCdf beta_nc_cdf(const BetaParams& p, const EvalConfig& cfg) {
    p.validate();
    cfg.validate();
    if (p.y == 0.0) return {0.0, 1.0};
    if (p.y == 1.0) return {1.0, 0.0};
    const double half_x = 0.5 * p.x;
    double w = std::exp(-half_x);
    double cumw = w;
    auto ib = central_beta_pair(p.a, p.b, p.y, cfg);
    double bsum = w * ib.cdf;
    double barsum = w * ib.ccdf;
    for (int j = 1; j <= cfg.max_terms; ++j) {
        // Remaining-weight bound: the computed 1-cumw plus accumulated rounding,
        // or the geometric tail from the next weight once the ratio is < 1.
        const double wnext = w * (half_x / j);
        const double ratio = half_x / (j + 1.0);
        const double geo = ratio < 0.9 ? wnext / (1.0 - ratio)
                                       : std::numeric_limits<double>::infinity();
        const double linear = std::max(0.0, 1.0 - cumw) + (j + 2) * 2.3e-16;
        const double tail = std::min(linear, geo);
        // I_y(a+j,b) decreases in j and the complement is <= 1.
        const bool b_done = tail * ib.cdf <= cfg.rel_tol * bsum;
        const bool bar_done = tail <= cfg.rel_tol * barsum;
        if (b_done && bar_done) return {bsum, barsum};
        w = wnext;
        cumw += w;
        ib = central_beta_pair(p.a + j, p.b, p.y, cfg);
        bsum += w * ib.cdf;
        barsum += w * ib.ccdf;
    }
    throw ConvergenceError("beta_nc_cdf: Poisson mixture did not converge", bsum);
}

double beta_nc_density(const BetaParams& p, const EvalConfig& cfg) {
    p.validate();
    cfg.validate();
    if (!(p.y > 0.0) || !(p.y < 1.0))
        throw std::domain_error("beta_nc_density: y must be in (0, 1)");
    const double pref = std::exp(-0.5 * p.x + (p.a - 1.0) * std::log(p.y) +
                                 (p.b - 1.0) * std::log1p(-p.y) - log_beta(p.a, p.b));
    return pref * kummer_m(p.a + p.b, p.a, p.z(), cfg);
}

RecurrenceShift recurrence_shift(const BetaParams& p, ShiftKind kind,
                                 const EvalConfig& cfg) {
    p.validate();
    cfg.validate();
    if (!(p.y > 0.0) || !(p.y < 1.0))
        throw std::domain_error("recurrence_shift: y must be in (0, 1)");
    const double c = prefactor_c(p.a, p.b, p.x, p.y);
    const double z = p.z();
    RecurrenceShift out;
    out.kind = kind;
    out.prefactor = c;
    switch (kind) {
        case ShiftKind::a_up:
            out.term = (c / p.a) * kummer_m(p.a + p.b, p.a + 1.0, z, cfg);
            break;
        case ShiftKind::b_up:
            out.term = (c / p.b) * kummer_m(p.a + p.b, p.a, z, cfg);
            break;
        case ShiftKind::a_down_b_up:
            if (!(p.a > 1.0))
                throw std::domain_error("recurrence_shift: a_down_b_up requires a > 1");
            out.term = (c / (p.b * p.y)) * kummer_m(p.a + p.b, p.a, z, cfg);
            break;
    }
    return out;
}

BetaRatioBound ratio_bound_a(const BetaParams& p, const EvalConfig& cfg) {
    p.validate();
    cfg.validate();
    if (!(p.x > 0.0)) throw std::domain_error("ratio_bound_a: x must be > 0");
    if (!(p.y > 0.0) || !(p.y < 1.0))
        throw std::domain_error("ratio_bound_a: y must be in (0, 1)");
    const double z = p.z();
    const double kf = density_ratio(p.a, p.b, p.x, p.y, cfg);
    const double u = z + 1.0 - p.a;
    const double s = std::sqrt(u * u + 4.0 * (p.a + p.b) * z);
    // rationalize when u < 0 so small z does not cancel
    const double num = u >= 0.0 ? u + s : 4.0 * (p.a + p.b) * z / (s - u);
    const double cf = num / p.x;
    BetaRatioBound out;
    out.kummer_form = make_upper(kf, "B_{a+1,b}/B_{a,b}");
    out.closed_form = make_upper(cf, "B_{a+1,b}/B_{a,b}");
    return out;
}

double beta_recurrence_crossing(double a, double b, double x, const EvalConfig& cfg) {
    cfg.validate();
    if (!(a > 0.0) || !(b > 0.0))
        throw std::domain_error("beta_recurrence_crossing: a, b must be > 0");
    if (x < 0.0) throw std::domain_error("beta_recurrence_crossing: x must be >= 0");
    if (x == 0.0) return a / (a + b);
    double lo = 0.0;
    double hi = 1.0 - 1e-12;
    if (density_ratio(a, b, x, hi, cfg) <= 1.0)
        throw NoCrossingError("beta_recurrence_crossing: ratio stays below 1");
    for (int it = 0; it < 200; ++it) {
        const double mid = 0.5 * (lo + hi);
        if (hi - lo <= 1e-12 * std::max(mid, 1e-300)) return mid;
        (density_ratio(a, b, x, mid, cfg) < 1.0 ? lo : hi) = mid;
    }
    return 0.5 * (lo + hi);
}

BetaRecurrenceBounds recurrence_difference_bounds_beta(const BetaParams& p,
                                                       const EvalConfig& cfg) {
    p.validate();
    cfg.validate();
    if (!(p.y > 0.0) || !(p.y < 1.0))
        throw std::domain_error("recurrence_difference_bounds_beta: y must be in (0, 1)");
    const double r = density_ratio(p.a, p.b, p.x, p.y, cfg);
    if (std::fabs(1.0 - r) < kSingularTol)
        throw SingularDenominatorError(
            "recurrence_difference_bounds_beta: g_{a+1,b} = g_{a,b} within tolerance", r);
    const double diff =
        (prefactor_c(p.a, p.b, p.x, p.y) / p.a) * kummer_m(p.a + p.b, p.a + 1.0, p.z(), cfg);
    const double u1 = diff / (1.0 - r);
    const double u2 = r * u1;
    const double y0 = beta_recurrence_crossing(p.a, p.b, p.x, cfg);
    const bool below = p.y < y0;
    BetaRecurrenceBounds out;
    out.crossing = y0;
    out.b_upper = make_upper(u1, "B_{a,b}", below, below ? "" : "valid only for y < y0");
    out.b_next_upper =
        make_upper(u2, "B_{a+1,b}", below, below ? "" : "valid only for y < y0");
    out.bbar_upper =
        make_upper(-u1, "Bbar_{a,b}", !below, below ? "valid only for y > y0" : "");
    out.bbar_next_upper =
        make_upper(-u2, "Bbar_{a+1,b}", !below, below ? "valid only for y > y0" : "");
    return out;
}

BetaSeriesBound series_lower_bound_beta(const BetaParams& p, int n_terms,
                                        const EvalConfig& cfg) {
    p.validate();
    cfg.validate();
    if (n_terms < 0) throw std::domain_error("series_lower_bound_beta: N must be >= 0");
    if (!(p.y > 0.0) || !(p.y < 1.0))
        throw std::domain_error("series_lower_bound_beta: y must be in (0, 1)");
    const double z = p.z();
    const double c = prefactor_c(p.a, p.b, p.x, p.y);
    double poch = 1.0;  // (a+b)_j / (a+1)_j
    double ypow = 1.0;
    double sum = 0.0;
    for (int j = 0; j <= n_terms; ++j) {
        sum += poch * ypow * kummer_m(p.a + p.b + j, p.a + j + 1.0, z, cfg);
        poch *= (p.a + p.b + j) / (p.a + 1.0 + j);
        ypow *= p.y;
    }
    BetaSeriesBound out;
    out.b_lower = make_lower((c / p.a) * sum, "B_{a,b}");
    if (p.a > 1.0) {
        const double c_shift = prefactor_c(p.a - 1.0, p.b, p.x, p.y);
        out.bbar_lower = make_lower(
            (c_shift / (p.a - 1.0)) * kummer_m(p.a + p.b - 1.0, p.a, z, cfg), "Bbar_{a,b}");
    } else {
        out.bbar_lower = make_lower(0.0, "Bbar_{a,b}", false, "requires a > 1");
    }
    return out;
}

CentralFactorBounds central_factor_bounds(const BetaParams& p, double rho,
                                          const EvalConfig& cfg) {
    p.validate();
    cfg.validate();
    if (!(p.x > 0.0)) throw std::domain_error("central_factor_bounds: x must be > 0");
    if (!(rho >= 0.0) || rho >= 1.0)
        throw std::domain_error("central_factor_bounds: rho must be in [0, 1)");
    if (!(p.y > 0.0) || !(p.y < 1.0))
        throw std::domain_error("central_factor_bounds: y must be in (0, 1)");
    const double z = p.z();
    const double m_full = kummer_m(p.a + p.b, p.a, z, cfg);
    const double m_reduced = rho == 0.0 ? 1.0 : kummer_m(p.a + p.b, p.a, rho * z, cfg);
    const double factor = std::exp(0.5 * p.x * (1.0 - rho)) * m_reduced / m_full;
    const auto reduced = beta_nc_cdf({p.a, p.b, rho * p.x, p.y}, cfg);
    const auto central = central_beta_pair(p.a, p.b, p.y, cfg);
    CentralFactorBounds out;
    out.factor = factor;
    out.b_upper = make_upper(reduced.b / factor, "B_{a,b}");
    out.bbar_lower = make_lower(reduced.b_bar / factor, "Bbar_{a,b}");
    out.curious_margin = std::exp(0.5 * p.x) - central.ccdf * m_full;
    return out;
}

}  // namespace cdfbounds
