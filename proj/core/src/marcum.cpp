#include "cdfbounds/marcum.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>

namespace cdfbounds {

namespace {

constexpr double kSingularTol = 1e-8;
constexpr double kPi = 3.14159265358979323846;

double sqr(double v) { return v * v; }

// (sqrt(x) - sqrt(y))^2 = x + y - 2 sqrt(xy), the exponent that survives when
// e^{-x-y} is cancelled against the scaled Bessel kernel.
double exponent_gap(double x, double y) { return sqr(std::sqrt(x) - std::sqrt(y)); }

// g_mu(x,y) without the public-params cap; shifted orders mu+n pass through
// here. g_mu = y^{mu-1} e^{-(sqrt x - sqrt y)^2} * [e^{-t}(t/2)^{-(mu-1)} I_{mu-1}(t)].
double density_impl(double mu, double x, double y, const EvalConfig& cfg) {
    const double t = 2.0 * std::sqrt(x * y);
    return std::exp((mu - 1.0) * std::log(y) - exponent_gap(x, y)) *
           bessel_i_scaled_norm(mu - 1.0, t, cfg);
}

}  // namespace

double GammaParams::chi_a() const { return std::sqrt(2.0 * x); }
double GammaParams::chi_b() const { return std::sqrt(2.0 * y); }

GammaParams GammaParams::from_chi(double mu, double a, double b) {
    return GammaParams{mu, 0.5 * a * a, 0.5 * b * b};
}

void GammaParams::validate() const {
    if (!std::isfinite(mu) || !std::isfinite(x) || !std::isfinite(y))
        throw std::domain_error("GammaParams: values must be finite");
    if (!(mu > 0.0) || mu > 100.0)
        throw std::domain_error("GammaParams: mu must be in (0, 100]");
    if (x < 0.0 || x > 200.0) throw std::domain_error("GammaParams: x must be in [0, 200]");
    if (y < 0.0 || y > 200.0) throw std::domain_error("GammaParams: y must be in [0, 200]");
}

MarcumPQ marcum_pq(const GammaParams& p, const EvalConfig& cfg) {
    p.validate();
    cfg.validate();
    if (p.y == 0.0) return {0.0, 1.0};
    if (p.x == 0.0) {
        const auto pq = reg_gamma_pq(p.mu, p.y, cfg);
        return {pq.p, pq.q};
    }
    double w = std::exp(-p.x);
    double cumw = w;
    auto pq = reg_gamma_pq(p.mu, p.y, cfg);
    double psum = w * pq.p;
    double qsum = w * pq.q;
    for (int j = 1; j <= cfg.max_terms; ++j) {
        // Remaining Poisson weight over indices >= j: the computed 1-cumw plus
        // accumulated rounding, or the geometric bound from the next weight
        // once the term ratio is < 1; take whichever is smaller.
        const double wnext = w * (p.x / j);
        const double ratio = p.x / (j + 1.0);
        const double geo = ratio < 0.9 ? wnext / (1.0 - ratio)
                                       : std::numeric_limits<double>::infinity();
        const double linear = std::max(0.0, 1.0 - cumw) + (j + 2) * 2.3e-16;
        const double tail = std::min(linear, geo);
        // P(mu+j, y) decreases in j and Q(mu+j, y) <= 1, bounding both tails.
        const bool p_done = tail * pq.p <= cfg.rel_tol * psum;
        const bool q_done = tail <= cfg.rel_tol * qsum;
        if (p_done && q_done) return {psum, qsum};
        w = wnext;
        cumw += w;
        pq = reg_gamma_pq(p.mu + j, p.y, cfg);
        psum += w * pq.p;
        qsum += w * pq.q;
    }
    throw ConvergenceError("marcum_pq: Poisson mixture did not converge", psum);
}

double marcum_density(const GammaParams& p, const EvalConfig& cfg) {
    p.validate();
    cfg.validate();
    if (!(p.y > 0.0)) throw std::domain_error("marcum_density: y must be > 0");
    return density_impl(p.mu, p.x, p.y, cfg);
}

CmuBound ratio_bound_c(const GammaParams& p, const EvalConfig& cfg) {
    p.validate();
    cfg.validate();
    if (!(p.x > 0.0) || !(p.y > 0.0))
        throw std::domain_error("ratio_bound_c: x and y must be > 0");
    const double t = 2.0 * std::sqrt(p.x * p.y);
    // sqrt(y/x) I_mu/I_{mu-1} collapses to y * inorm(mu)/inorm(mu-1)
    const double c = p.y * bessel_i_norm(p.mu, t, cfg) / bessel_i_norm(p.mu - 1.0, t, cfg);
    CmuBound out;
    out.c = c;
    out.p_ratio_upper = make_upper(c, "P_{mu+1}/P_mu");
    out.q_ratio_lower = make_lower(c, "Q_{mu+1}/Q_mu");
    return out;
}

double recurrence_crossing(double mu, double x, const EvalConfig& cfg) {
    cfg.validate();
    if (!(mu > 0.0) || !(x > 0.0))
        throw std::domain_error("recurrence_crossing: mu and x must be > 0");
    const auto c_of = [&](double y) {
        const double t = 2.0 * std::sqrt(x * y);
        return y * bessel_i_norm(mu, t, cfg) / bessel_i_norm(mu - 1.0, t, cfg);
    };
    double lo = 0.0;
    double hi = std::max({x, mu, 1.0});
    int guard = 0;
    while (c_of(hi) <= 1.0) {
        lo = hi;
        hi *= 2.0;
        if (++guard > 60) throw NoCrossingError("recurrence_crossing: no crossing found");
    }
    for (int it = 0; it < 200; ++it) {
        const double mid = 0.5 * (lo + hi);
        if (hi - lo <= 1e-12 * std::max(mid, 1e-300)) return mid;
        (c_of(mid) < 1.0 ? lo : hi) = mid;
    }
    return 0.5 * (lo + hi);
}

double CrossingCache::get(double mu, double x, const EvalConfig& cfg) const {
    const auto key = std::make_pair(mu, x);
    {
        std::lock_guard<std::mutex> lock(mutex_);
        const auto it = values_.find(key);
        if (it != values_.end()) return it->second;
    }
    const double y0 = recurrence_crossing(mu, x, cfg);
    std::lock_guard<std::mutex> lock(mutex_);
    return values_.emplace(key, y0).first->second;
}

MarcumRecurrenceBounds recurrence_difference_bounds(const GammaParams& p,
                                                    const EvalConfig& cfg) {
    p.validate();
    cfg.validate();
    if (!(p.x > 0.0) || !(p.y > 0.0))
        throw std::domain_error("recurrence_difference_bounds: x and y must be > 0");
    const double c = ratio_bound_c(p, cfg).c;
    if (std::fabs(1.0 - c) < kSingularTol)
        throw SingularDenominatorError(
            "recurrence_difference_bounds: c_mu = 1 within tolerance (y at the crossing)", c);
    const double g_next = density_impl(p.mu + 1.0, p.x, p.y, cfg);
    const double u1 = g_next / (1.0 - c);
    const double u2 = c * u1;
    const double y0 = recurrence_crossing(p.mu, p.x, cfg);
    const bool below = p.y < y0;
    MarcumRecurrenceBounds out;
    out.crossing = y0;
    out.p_upper = make_upper(u1, "P_mu", below, below ? "" : "valid only for y < y0");
    out.p_next_upper = make_upper(u2, "P_{mu+1}", below, below ? "" : "valid only for y < y0");
    out.q_upper = make_upper(-u1, "Q_mu", !below, below ? "valid only for y > y0" : "");
    out.q_next_upper =
        make_upper(-u2, "Q_{mu+1}", !below, below ? "valid only for y > y0" : "");
    return out;
}

OrderShiftBound order_shift_bound(double nu, const GammaParams& p_base,
                                  const EvalConfig& cfg) {
    p_base.validate();
    cfg.validate();
    if (!std::isfinite(nu) || nu < p_base.mu)
        throw std::domain_error("order_shift_bound: requires nu >= mu");
    if (!(p_base.x > 0.0) || !(p_base.y > 0.0))
        throw std::domain_error("order_shift_bound: x and y must be > 0");
    const bool conjectured_range = p_base.mu < 1.0;
    if (conjectured_range) {
        if (p_base.mu < 0.5)
            throw std::domain_error("order_shift_bound: mu must be >= 1/2");
        if (cfg.validity_mode == ValidityMode::proven)
            throw std::domain_error(
                "order_shift_bound: mu < 1 requires validity_mode=conjectured");
    }
    const double t = 2.0 * std::sqrt(p_base.x * p_base.y);
    // (y/x)^{(nu-mu)/2} I_{nu-1}/I_{mu-1} = y^{nu-mu} inorm(nu-1)/inorm(mu-1)
    const double pref =
        std::exp((nu - p_base.mu) * std::log(p_base.y) +
                 std::log(bessel_i_norm(nu - 1.0, t, cfg)) -
                 std::log(bessel_i_norm(p_base.mu - 1.0, t, cfg)));
    const auto pq = marcum_pq(p_base, cfg);
    const std::string note =
        conjectured_range ? "conjectured range: mu in [1/2, 1)" : std::string{};
    OrderShiftBound out;
    out.prefactor = pref;
    out.p_upper = make_upper(pref * pq.p, "P_nu", true, note);
    out.q_lower = make_lower(pref * pq.q, "Q_nu", true, note);
    return out;
}

ErfBoundSet erf_bounds(const GammaParams& p, const EvalConfig& cfg) {
    p.validate();
    cfg.validate();
    const double nu = p.mu;
    if (!(nu > 0.5)) throw std::domain_error("erf_bounds: requires nu > 1/2");
    if (!(p.x > 0.0) || !(p.y > 0.0))
        throw std::domain_error("erf_bounds: x and y must be > 0");
    const double a = p.chi_a();
    const double b = p.chi_b();
    const double ab = a * b;  // = 2 sqrt(xy)
    const double g_nu = 0.5 * a * std::sqrt(0.5 * kPi) * std::pow(b / a, nu);
    const double i_scaled = bessel_i_scaled(nu - 1.0, ab, cfg);
    // I_{nu-1}(ab)/cosh(ab) with the exponential cancelled
    const double i_over_cosh = i_scaled / (0.5 * (1.0 + std::exp(-2.0 * ab)));
    const double erfc_sum =
        std::erfc((b - a) / std::sqrt(2.0)) + std::erfc((b + a) / std::sqrt(2.0));
    const double erf_sum =
        std::erf((b - a) / std::sqrt(2.0)) + std::erf((b + a) / std::sqrt(2.0));
    const double erfc_term = g_nu * erfc_sum * i_over_cosh;
    const double erf_term = g_nu * erf_sum * i_over_cosh;
    // (b/a)^{nu-1} e^{-(a^2+b^2)/2} I_{nu-1}(ab) = (b/a)^{nu-1} e^{-(a-b)^2/2} scaled
    const double tail =
        std::pow(b / a, nu - 1.0) * std::exp(-0.5 * sqr(a - b)) * i_scaled;
    const double coth_scale = a / (b * std::tanh(ab));
    const bool sharp_ok = nu > 1.5;
    const char* note = sharp_ok ? "" : "requires nu > 3/2";
    ErfBoundSet out;
    out.g_nu = g_nu;
    out.b1 = make_lower(erfc_term, "Qt_nu");
    out.b2 = make_lower(1.0 - erf_term, "Qt_nu");
    out.l1 = make_lower(coth_scale * erfc_term + tail, "Qt_nu", sharp_ok, note);
    out.l2 = make_lower(1.0 - coth_scale * erf_term + tail, "Qt_nu", sharp_ok, note);
    return out;
}

double erfc_bessel_inequality_margin(double nu, double a, double b, const EvalConfig& cfg) {
    cfg.validate();
    if (!(nu >= -0.5)) throw std::domain_error("erfc_bessel_inequality_margin: nu >= -1/2");
    if (!(a > 0.0) || !(b > 0.0))
        throw std::domain_error("erfc_bessel_inequality_margin: a, b must be > 0");
    const double ab = a * b;
    if (ab > 400.0)
        throw std::domain_error("erfc_bessel_inequality_margin: ab exceeds the desk scale");
    const double i_scaled = bessel_i_scaled(nu, ab, cfg);
    const double lhs_scaled =
        (std::erfc((b - a) / std::sqrt(2.0)) + std::erfc((b + a) / std::sqrt(2.0))) * i_scaled;
    const double rhs_scaled = std::sqrt(2.0 / kPi) * std::pow(a, nu) /
                              std::pow(b, nu + 1.0) * (1.0 + std::exp(-2.0 * ab));
    return std::exp(ab) * (rhs_scaled - lhs_scaled);
}

IncGammaBounds incgamma_bounds(const GammaParams& p, double rho, const EvalConfig& cfg) {
    p.validate();
    cfg.validate();
    const double nu = p.mu;
    if (!(rho >= 0.0) || rho >= 1.0)
        throw std::domain_error("incgamma_bounds: rho must be in [0, 1)");
    if (!(p.x > 0.0) || !(p.y > 0.0))
        throw std::domain_error("incgamma_bounds: x and y must be > 0");
    if (cfg.validity_mode == ValidityMode::proven && nu < 1.0)
        throw std::domain_error("incgamma_bounds: nu < 1 requires validity_mode=conjectured");
    const std::string note = nu < 1.0 ? "conjectured range: nu in (0, 1)" : std::string{};
    const double t = 2.0 * std::sqrt(p.x * p.y);
    IncGammaBounds out;
    if (rho == 0.0) {
        // b1 = e^{-x} inorm_{nu-1}(t) gamma_nu(y), b2 with the upper tail.
        const auto ig = incomplete_gamma(nu, p.y, cfg);
        const double core = std::exp(t - p.x) * bessel_i_scaled_norm(nu - 1.0, t, cfg);
        out.prefactor = core * std::exp(log_gamma(nu));  // vs P_nu(0,y) scale
        out.p_upper = make_upper(core * ig.lower, "P_nu", true, note);
        out.q_lower = make_lower(core * ig.upper, "Q_nu", true, note);
        return out;
    }
    // rho^{nu-1} cancels against the normalized kernels:
    // pref = e^{-x(1-rho^2)} inorm(t)/inorm(rho t)
    const double pref = std::exp(-p.x * (1.0 - rho * rho) + t * (1.0 - rho) +
                                 std::log(bessel_i_scaled_norm(nu - 1.0, t, cfg)) -
                                 std::log(bessel_i_scaled_norm(nu - 1.0, rho * t, cfg)));
    const auto pq_reduced = marcum_pq({nu, rho * rho * p.x, p.y}, cfg);
    out.prefactor = pref;
    out.p_upper = make_upper(pref * pq_reduced.p, "P_nu", true, note);
    out.q_lower = make_lower(pref * pq_reduced.q, "Q_nu", true, note);
    return out;
}

double curious_gamma_inequality_margin(double nu, double x, double y,
                                       const EvalConfig& cfg) {
    cfg.validate();
    if (!(nu > -1.0)) throw std::domain_error("curious_gamma_inequality_margin: nu > -1");
    if (!(x > 0.0) || !(y > 0.0))
        throw std::domain_error("curious_gamma_inequality_margin: x, y must be > 0");
    if (nu + 1.0 > 170.0 || x > 200.0 || y > 200.0)
        throw std::domain_error("curious_gamma_inequality_margin: desk scale exceeded");
    const double t = 2.0 * std::sqrt(x * y);
    const double upper_tail = incomplete_gamma(nu + 1.0, y, cfg).upper;
    // (sqrt(xy))^nu (e^x - inorm_nu(t) Gamma_{nu+1}(y)), inorm = e^t * scaled form
    const double inorm = std::exp(t) * bessel_i_scaled_norm(nu, t, cfg);
    return std::pow(std::sqrt(x * y), nu) * (std::exp(x) - inorm * upper_tail);
}

MarcumSeriesBound series_lower_bound_p(const GammaParams& p, int n_terms,
                                       const EvalConfig& cfg) {
    p.validate();
    cfg.validate();
    if (n_terms < 1) throw std::domain_error("series_lower_bound_p: N must be >= 1");
    if (!(p.y > 0.0)) throw std::domain_error("series_lower_bound_p: y must be > 0");
    double sum = 0.0;
    for (int n = 1; n <= n_terms; ++n) sum += density_impl(p.mu + n, p.x, p.y, cfg);
    MarcumSeriesBound out;
    out.p_lower = make_lower(sum, "P_mu");
    // Q_mu = Q_{mu-1} + g_mu needs Q_{mu-1} >= 0, which holds only for mu >= 1
    // (for mu < 1 the order mu-2 Bessel factor in g_{mu-1} changes sign).
    const bool q_ok = p.mu >= 1.0;
    out.q_lower = make_lower(density_impl(p.mu, p.x, p.y, cfg), "Q_mu", q_ok,
                             q_ok ? "" : "requires mu >= 1");
    return out;
}

}  // namespace cdfbounds
