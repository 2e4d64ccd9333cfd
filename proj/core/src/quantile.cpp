#include "cdfbounds/quantile.hpp"

#include <cmath>
#include <string>

#include "cdfbounds/specfun.hpp"

namespace cdfbounds {

namespace {

constexpr double kStepTol = 1e-13;
constexpr int kMaxMapApplications = 200;

bool step_converged(double y_prev, double y_next) {
    return std::fabs(y_next - y_prev) <= kStepTol * std::max(y_prev, 1e-300);
}

struct FixedPointResult {
    double y = 0.0;
    int iterations = 0;
    bool converged = false;
};

// Double-step fixed-point iteration from y = 0. Applying the map twice per
// outer step keeps the reported iterates monotone from below even when the
// single-step map alternates around the root.
template <class Map, class DomainOk>
FixedPointResult iterate_map(const Map& map, const DomainOk& in_domain,
                             const char* what) {
    FixedPointResult res;
    double y = 0.0;
    while (res.iterations < kMaxMapApplications) {
        const double y1 = map(y);
        ++res.iterations;
        if (!in_domain(y1))
            throw BracketUnavailableError(std::string(what) +
                                          ": iteration left its domain (beta too large "
                                          "for the small-beta estimator)");
        const double y2 = map(y1);
        ++res.iterations;
        if (!in_domain(y2))
            throw BracketUnavailableError(std::string(what) +
                                          ": iteration left its domain (beta too large "
                                          "for the small-beta estimator)");
        if (step_converged(y, y1) || step_converged(y1, y2)) {
            res.y = y2;
            res.converged = true;
            return res;
        }
        y = y2;
    }
    res.y = y;
    return res;
}

}  // namespace

QuantileBracket beta_quantile_bracket(double a, double b, double beta,
                                      const EvalConfig& cfg) {
    cfg.validate();
    if (!(a > 0.0) || a > 100.0 || !(b > 0.0) || b > 100.0)
        throw std::domain_error("beta_quantile_bracket: a, b must be in (0, 100]");
    if (!(beta > 0.0) || !(beta < 1.0))
        throw std::domain_error("beta_quantile_bracket: beta must be in (0, 1)");
    const double cap = a / (a + b);
    const double log_b_ab = log_beta(a, b);
    const double k = (a + b) / (a + 1.0);

    // y = (beta B(a,b) (a-(a+b)y) (1-y)^{-b})^{1/a}
    const auto lower_map = [&](double y) {
        return std::exp((std::log(beta) + log_b_ab + std::log(a - (a + b) * y) -
                         b * std::log1p(-y)) /
                        a);
    };
    const auto lower_ok = [&](double y) { return y > 0.0 && y < cap; };

    // y = (1 + ((a+b)/(a+1)) y)^{-1/a} (a beta B(a,b) (1-y)^{-b})^{1/a}
    const auto upper_map = [&](double y) {
        return std::exp((std::log(a * beta) + log_b_ab - b * std::log1p(-y) -
                         std::log1p(k * y)) /
                        a);
    };
    const auto upper_ok = [&](double y) { return y > 0.0 && y < 1.0; };

    const auto lower = iterate_map(lower_map, lower_ok, "beta_quantile_bracket lower map");
    const auto upper = iterate_map(upper_map, upper_ok, "beta_quantile_bracket upper map");

    QuantileBracket out;
    out.beta = beta;
    out.y_l = lower.y;
    out.y_u = upper.y;
    out.iterations_l = lower.iterations;
    out.iterations_u = upper.iterations;
    out.converged = lower.converged && upper.converged && lower.y <= upper.y;
    return out;
}

double beta_quantile_in(double a, double b, double beta, double lo, double hi,
                        const EvalConfig& cfg) {
    cfg.validate();
    if (!(a > 0.0) || !(b > 0.0))
        throw std::domain_error("beta_quantile_in: a, b must be > 0");
    if (!(beta > 0.0) || !(beta < 1.0))
        throw std::domain_error("beta_quantile_in: beta must be in (0, 1)");
    if (!(lo > 0.0) || !(hi < 1.0) || !(lo <= hi))
        throw std::domain_error("beta_quantile_in: need 0 < lo <= hi < 1");
    const double log_b_ab = log_beta(a, b);
    double y = 0.5 * (lo + hi);
    double residual = central_beta(a, b, y, cfg) - beta;
    for (int it = 0; it < 200; ++it) {
        if (std::fabs(residual) <= 1e-12 * beta) return y;
        (residual < 0.0 ? lo : hi) = y;
        const double density =
            std::exp((a - 1.0) * std::log(y) + (b - 1.0) * std::log1p(-y) - log_b_ab);
        const double newton = y - residual / density;
        y = (newton > lo && newton < hi) ? newton : 0.5 * (lo + hi);
        residual = central_beta(a, b, y, cfg) - beta;
    }
    throw ConvergenceError("beta_quantile_in: residual target not reached", y);
}

double beta_quantile(double a, double b, double beta, const EvalConfig& cfg) {
    const auto bracket = beta_quantile_bracket(a, b, beta, cfg);
    if (!bracket.converged)
        throw BracketUnavailableError("beta_quantile: bracket iteration did not converge");
    return beta_quantile_in(a, b, beta, bracket.y_l, bracket.y_u, cfg);
}

}  // namespace cdfbounds
