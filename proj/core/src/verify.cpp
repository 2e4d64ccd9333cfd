#include "cdfbounds/verify.hpp"

#include <algorithm>
#include <cmath>
#include <cstdarg>
#include <cstdio>
#include <functional>
#include <limits>
#include <string>
#include <utility>
#include <vector>

#include "json.hpp"

#include "cdfbounds/beta_nc.hpp"
#include "cdfbounds/kummer_ratios.hpp"
#include "cdfbounds/marcum.hpp"
#include "cdfbounds/quantile.hpp"
#include "cdfbounds/specfun.hpp"

namespace cdfbounds {

namespace {

std::string strf(const char* fmt, ...) {
    char buf[256];
    va_list args;
    va_start(args, fmt);
    std::vsnprintf(buf, sizeof buf, fmt, args);
    va_end(args);
    return buf;
}

// Accumulates one family's sweep: cells, per-cell claims (bound vs oracle,
// positivity margins, identity residuals) and the worst normalized margin.
class Tracker {
  public:
    Tracker(std::string family, std::string grid_spec) {
        rep_.family = std::move(family);
        rep_.grid_spec = std::move(grid_spec);
    }

    void begin_cell(std::string desc) {
        ++rep_.cells_total;
        cell_ = std::move(desc);
        claims_ = 0;
        violated_ = false;
        skipped_ = false;
    }

    // A bound claim: `bound` must lie on `side` of `oracle`.
    void claim(Side side, double bound, double oracle) {
        const double scale = std::max(std::fabs(oracle), 1e-300);
        const double m =
            side == Side::upper ? (bound - oracle) / scale : (oracle - bound) / scale;
        record(m, -kMarginNoiseBudget);
    }

    // A positivity claim: margin/scale must be nonnegative (within the budget).
    void claim_margin(double margin, double scale) {
        record(margin / std::max(scale, 1e-300), -kMarginNoiseBudget);
    }

    // An identity claim: |resid|/scale must be <= tol.
    void claim_residual(double resid, double scale, double tol) {
        record(tol - std::fabs(resid) / std::max(scale, 1e-300), 0.0);
    }

    void skip_cell(const std::string& reason) {
        skipped_ = true;
        skip_note_ = reason;
    }

    void end_cell() {
        if (skipped_) {
            ++rep_.cells_skipped;
            return;
        }
        if (claims_ > 0) ++rep_.cells_valid;
        if (violated_) ++rep_.violations;
    }

    void sharpness(std::string limit_point, double deviation, double tolerance) {
        rep_.sharpness_checks.push_back({std::move(limit_point), deviation, tolerance});
    }

    SweepReport take() {
        if (!has_min_) rep_.min_margin = 0.0;
        return std::move(rep_);
    }

    const std::string& skip_note() const { return skip_note_; }

  private:
    void record(double margin, double threshold) {
        if (skipped_) return;
        ++claims_;
        if (!has_min_ || margin < rep_.min_margin) {
            has_min_ = true;
            rep_.min_margin = margin;
            rep_.worst_cell = cell_;
        }
        if (margin < threshold) violated_ = true;
    }

    SweepReport rep_;
    std::string cell_;
    std::string skip_note_;
    int claims_ = 0;
    bool violated_ = false;
    bool skipped_ = false;
    bool has_min_ = false;
};

template <class Fn>
void run_cell(Tracker& t, std::string desc, const Fn& fn) {
    t.begin_cell(std::move(desc));
    try {
        fn();
    } catch (const std::exception& e) {
        t.skip_cell(e.what());
    }
    t.end_cell();
}

std::vector<double> grid_mu(bool dense) {
    std::vector<double> g{0.6, 1.0, 1.5, 2.0, 5.0, 10.0};
    if (dense) g.insert(g.end(), {0.8, 3.0, 7.0});
    std::sort(g.begin(), g.end());
    return g;
}
std::vector<double> grid_x(bool dense) {
    std::vector<double> g{0.1, 1.0, 5.0, 20.0, 50.0};
    if (dense) g.insert(g.end(), {0.5, 10.0});
    std::sort(g.begin(), g.end());
    return g;
}
std::vector<double> grid_y(bool dense) {
    std::vector<double> g{0.01, 0.5, 1.0, 5.0, 20.0, 80.0};
    if (dense) g.insert(g.end(), {0.1, 2.0, 10.0, 40.0});
    std::sort(g.begin(), g.end());
    return g;
}

std::vector<double> grid_ab(bool dense) {
    std::vector<double> g{0.5, 1.0, 2.0, 5.0, 10.0};
    if (dense) g.insert(g.end(), {3.0, 20.0});
    std::sort(g.begin(), g.end());
    return g;
}
std::vector<double> grid_bx(bool dense) {
    std::vector<double> g{0.0, 0.5, 2.0, 10.0};
    if (dense) g.push_back(5.0);
    std::sort(g.begin(), g.end());
    return g;
}
std::vector<double> grid_by(bool dense) {
    std::vector<double> g{0.05, 0.2, 0.5, 0.8, 0.95};
    if (dense) g.insert(g.end(), {0.35, 0.65});
    std::sort(g.begin(), g.end());
    return g;
}

std::vector<double> log_grid(double lo, double hi, int n) {
    std::vector<double> g(n);
    const double l0 = std::log(lo);
    const double l1 = std::log(hi);
    for (int i = 0; i < n; ++i) g[i] = std::exp(l0 + (l1 - l0) * i / (n - 1.0));
    return g;
}

// ---------------------------------------------------------------- gamma ----

SweepReport sweep_gamma_c_ratio(const EvalConfig& cfg, bool dense) {
    Tracker t("gamma-c-ratio", "mu x y grids; c_mu vs oracle tail ratios");
    for (double mu : grid_mu(dense))
        for (double x : grid_x(dense))
            for (double y : grid_y(dense))
                run_cell(t, strf("mu=%g x=%g y=%g", mu, x, y), [&] {
                    const auto base = marcum_pq({mu, x, y}, cfg);
                    const auto next = marcum_pq({mu + 1.0, x, y}, cfg);
                    const auto cb = ratio_bound_c({mu, x, y}, cfg);
                    t.claim(Side::upper, cb.c, next.p / base.p);
                    t.claim(Side::lower, cb.c, next.q / base.q);
                });
    return t.take();
}

SweepReport sweep_gamma_recurrence(const EvalConfig& cfg, bool dense) {
    Tracker t("gamma-recurrence", "mu x y grids; difference bounds vs oracle");
    CrossingCache cache;
    for (double mu : grid_mu(dense))
        for (double x : grid_x(dense))
            for (double y : grid_y(dense))
                run_cell(t, strf("mu=%g x=%g y=%g", mu, x, y), [&] {
                    const auto rb = recurrence_difference_bounds({mu, x, y}, cfg);
                    const auto base = marcum_pq({mu, x, y}, cfg);
                    const auto next = marcum_pq({mu + 1.0, x, y}, cfg);
                    if (rb.p_upper.valid) {
                        t.claim(Side::upper, rb.p_upper.value, base.p);
                        t.claim(Side::upper, rb.p_next_upper.value, next.p);
                    } else {
                        t.claim(Side::upper, rb.q_upper.value, base.q);
                        t.claim(Side::upper, rb.q_next_upper.value, next.q);
                    }
                });
    // Sharpness at the limit points: P-side bound as y -> 0, the complementary
    // Q-side bound at the largest admissible y = min(4(mu+x), 200).
    for (double mu : grid_mu(dense))
        for (double x : grid_x(dense)) {
            const double ys = 1e-4 * std::min(1.0, mu / x);
            const auto rbs = recurrence_difference_bounds({mu, x, ys}, cfg);
            const auto ps = marcum_pq({mu, x, ys}, cfg);
            t.sharpness(strf("P-side mu=%g x=%g y=%g", mu, x, ys),
                        std::fabs(rbs.p_upper.value / ps.p - 1.0), 5e-3);
            const double yq = std::min(4.0 * (mu + x), 200.0);
            const auto rbq = recurrence_difference_bounds({mu, x, yq}, cfg);
            const auto pq = marcum_pq({mu, x, yq}, cfg);
            t.sharpness(strf("Q-side mu=%g x=%g y=%g", mu, x, yq),
                        std::fabs(rbq.q_upper.value / pq.q - 1.0), 5e-3);
        }
    return t.take();
}

SweepReport sweep_gamma_order_shift(const EvalConfig& cfg, bool dense) {
    Tracker t("gamma-order-shift", "nu = mu + {0.5, 2}; mu x y grids");
    const bool conj = cfg.validity_mode == ValidityMode::conjectured;
    for (double delta : {0.5, 2.0})
        for (double mu : grid_mu(dense)) {
            if (mu < 1.0 && !conj) continue;
            if (mu < 0.5) continue;
            for (double x : grid_x(dense))
                for (double y : grid_y(dense))
                    run_cell(t, strf("mu=%g delta=%g x=%g y=%g", mu, delta, x, y), [&] {
                        const auto os = order_shift_bound(mu + delta, {mu, x, y}, cfg);
                        const auto shifted = marcum_pq({mu + delta, x, y}, cfg);
                        t.claim(Side::upper, os.p_upper.value, shifted.p);
                        t.claim(Side::lower, os.q_lower.value, shifted.q);
                    });
        }
    return t.take();
}

SweepReport sweep_gamma_erf(const EvalConfig& cfg, bool dense) {
    Tracker t("gamma-erf", "nu x y grids; erf-family lower bounds on Qt_nu");
    for (double nu : grid_mu(dense))
        for (double x : grid_x(dense))
            for (double y : grid_y(dense))
                run_cell(t, strf("nu=%g x=%g y=%g", nu, x, y), [&] {
                    const auto set = erf_bounds({nu, x, y}, cfg);
                    const double qt = marcum_pq({nu, x, y}, cfg).q;
                    t.claim(Side::lower, set.b1.value, qt);
                    t.claim(Side::lower, set.b2.value, qt);
                    if (set.l1.valid) {
                        t.claim(Side::lower, set.l1.value, qt);
                        t.claim(Side::lower, set.l2.value, qt);
                    }
                });
    return t.take();
}

SweepReport sweep_gamma_incgamma(const EvalConfig& cfg, bool dense) {
    Tracker t("gamma-incgamma", "rho in {0, 0.5, 0.9}; nu x y grids");
    const bool conj = cfg.validity_mode == ValidityMode::conjectured;
    for (double rho : {0.0, 0.5, 0.9})
        for (double nu : grid_mu(dense)) {
            if (nu < 1.0 && !conj) continue;
            for (double x : grid_x(dense))
                for (double y : grid_y(dense))
                    run_cell(t, strf("nu=%g rho=%g x=%g y=%g", nu, rho, x, y), [&] {
                        const auto ib = incgamma_bounds({nu, x, y}, rho, cfg);
                        const auto pq = marcum_pq({nu, x, y}, cfg);
                        t.claim(Side::upper, ib.p_upper.value, pq.p);
                        t.claim(Side::lower, ib.q_lower.value, pq.q);
                    });
        }
    // The rho = 0 form collapses onto the central tail as x -> 0.
    for (double nu : {1.0, 1.5, 2.0, 5.0, 10.0})
        for (double yv : {0.5, 1.0, 5.0, 20.0}) {
            const auto b1 = incgamma_bounds({nu, 1e-8, yv}, 0.0, cfg);
            const auto central = reg_gamma_pq(nu, yv, cfg);
            t.sharpness(strf("box-limit nu=%g y=%g x=1e-8", nu, yv),
                        std::fabs(b1.p_upper.value / central.p - 1.0), 1e-6);
        }
    return t.take();
}

SweepReport sweep_gamma_series(const EvalConfig& cfg, bool dense) {
    Tracker t("gamma-series", "N=5; mu x y grids");
    for (double mu : grid_mu(dense))
        for (double x : grid_x(dense))
            for (double y : grid_y(dense))
                run_cell(t, strf("mu=%g x=%g y=%g", mu, x, y), [&] {
                    const auto sb = series_lower_bound_p({mu, x, y}, 5, cfg);
                    const auto pq = marcum_pq({mu, x, y}, cfg);
                    t.claim(Side::lower, sb.p_lower.value, pq.p);
                    if (sb.q_lower.valid) t.claim(Side::lower, sb.q_lower.value, pq.q);
                });
    return t.take();
}

SweepReport sweep_gamma_erfc_bessel(const EvalConfig& cfg, bool dense) {
    Tracker t("gamma-erfc-bessel-margin", "nu in {-0.5,0,1,2.5}; a,b grids");
    std::vector<double> as{0.3, 1.0, 3.0, 8.0};
    std::vector<double> bs{0.3, 1.0, 3.0, 20.0};
    if (dense) {
        as.push_back(0.05);
        bs.push_back(12.0);
    }
    for (double nu : {-0.5, 0.0, 1.0, 2.5})
        for (double a : as)
            for (double b : bs)
                run_cell(t, strf("nu=%g a=%g b=%g", nu, a, b), [&] {
                    const double margin = erfc_bessel_inequality_margin(nu, a, b, cfg);
                    const double scale = std::exp(a * b) * std::sqrt(2.0 / 3.14159265358979323846) *
                                         std::pow(a, nu) / std::pow(b, nu + 1.0) *
                                         (1.0 + std::exp(-2.0 * a * b));
                    t.claim_margin(margin, scale);
                });
    return t.take();
}

SweepReport sweep_gamma_curious(const EvalConfig& cfg, bool dense) {
    Tracker t("gamma-curious-margin", "nu in {-0.5,0,1,3}; x y grids");
    std::vector<double> xs{0.1, 1.0, 10.0, 50.0};
    std::vector<double> ys{0.01, 0.5, 5.0, 20.0};
    if (dense) {
        xs.push_back(100.0);
        ys.push_back(80.0);
    }
    for (double nu : {-0.5, 0.0, 1.0, 3.0})
        for (double x : xs)
            for (double y : ys)
                run_cell(t, strf("nu=%g x=%g y=%g", nu, x, y), [&] {
                    const double margin = curious_gamma_inequality_margin(nu, x, y, cfg);
                    const double scale = std::exp(x) * std::pow(std::sqrt(x * y), nu);
                    t.claim_margin(margin, scale);
                });
    return t.take();
}

// ----------------------------------------------------------------- beta ----

SweepReport sweep_beta_identity(const EvalConfig& cfg, bool dense) {
    Tracker t("beta-recurrence-identity", "a b x y grids; a-up/b-up/a-down-b-up identities to 1e-10");
    for (double a : grid_ab(dense))
        for (double b : grid_ab(dense))
            for (double x : grid_bx(dense))
                for (double y : grid_by(dense))
                    run_cell(t, strf("a=%g b=%g x=%g y=%g", a, b, x, y), [&] {
                        const BetaParams p{a, b, x, y};
                        const auto full = beta_nc_cdf(p, cfg);
                        const auto a_up = beta_nc_cdf({a + 1.0, b, x, y}, cfg);
                        const auto b_up = beta_nc_cdf({a, b + 1.0, x, y}, cfg);
                        const double ta = recurrence_shift(p, ShiftKind::a_up, cfg).term;
                        const double tb = recurrence_shift(p, ShiftKind::b_up, cfg).term;
                        t.claim_residual(full.b - a_up.b - ta, full.b, 1e-10);
                        t.claim_residual(full.b - b_up.b + tb, full.b, 1e-10);
                        // complementary recurrences: inhomogeneous sign reversed
                        t.claim_residual(full.b_bar - a_up.b_bar + ta, full.b_bar, 1e-10);
                        t.claim_residual(full.b_bar - b_up.b_bar - tb, full.b_bar, 1e-10);
                        if (a > 1.0) {
                            const auto ab_shift = beta_nc_cdf({a - 1.0, b + 1.0, x, y}, cfg);
                            const double tab =
                                recurrence_shift(p, ShiftKind::a_down_b_up, cfg).term;
                            t.claim_residual(full.b - ab_shift.b + tab, full.b, 1e-10);
                        }
                    });
    return t.take();
}

SweepReport sweep_beta_ratio(const EvalConfig& cfg, bool dense) {
    Tracker t("beta-ratio", "a b x>0 y grids; Kummer and closed-form ratio bounds");
    for (double a : grid_ab(dense))
        for (double b : grid_ab(dense))
            for (double x : grid_bx(dense)) {
                if (x == 0.0) continue;
                for (double y : grid_by(dense))
                    run_cell(t, strf("a=%g b=%g x=%g y=%g", a, b, x, y), [&] {
                        const auto rb = ratio_bound_a({a, b, x, y}, cfg);
                        const double ratio = beta_nc_cdf({a + 1.0, b, x, y}, cfg).b /
                                             beta_nc_cdf({a, b, x, y}, cfg).b;
                        t.claim(Side::upper, rb.kummer_form.value, ratio);
                        t.claim(Side::upper, rb.closed_form.value, ratio);
                        // the closed form dominates the Kummer form everywhere
                        t.claim(Side::upper, rb.closed_form.value, rb.kummer_form.value);
                    });
            }
    return t.take();
}

SweepReport sweep_beta_recurrence(const EvalConfig& cfg, bool dense) {
    Tracker t("beta-recurrence-bounds", "a b x y grids; difference bounds vs oracle");
    for (double a : grid_ab(dense))
        for (double b : grid_ab(dense))
            for (double x : grid_bx(dense))
                for (double y : grid_by(dense))
                    run_cell(t, strf("a=%g b=%g x=%g y=%g", a, b, x, y), [&] {
                        const auto rb = recurrence_difference_bounds_beta({a, b, x, y}, cfg);
                        const auto full = beta_nc_cdf({a, b, x, y}, cfg);
                        const auto next = beta_nc_cdf({a + 1.0, b, x, y}, cfg);
                        if (rb.b_upper.valid) {
                            t.claim(Side::upper, rb.b_upper.value, full.b);
                            t.claim(Side::upper, rb.b_next_upper.value, next.b);
                        } else {
                            t.claim(Side::upper, rb.bbar_upper.value, full.b_bar);
                            t.claim(Side::upper, rb.bbar_next_upper.value, next.b_bar);
                        }
                    });
    for (double a : grid_ab(dense))
        for (double b : grid_ab(dense))
            for (double x : grid_bx(dense)) {
                const double ys = 1e-4;
                const auto rbs = recurrence_difference_bounds_beta({a, b, x, ys}, cfg);
                const auto fs = beta_nc_cdf({a, b, x, ys}, cfg);
                t.sharpness(strf("B-side a=%g b=%g x=%g y=1e-4", a, b, x),
                            std::fabs(rbs.b_upper.value / fs.b - 1.0), 5e-3);
                const double yb = 1.0 - 1e-4;
                const auto rbb = recurrence_difference_bounds_beta({a, b, x, yb}, cfg);
                if (rbb.bbar_upper.valid) {
                    const auto fb = beta_nc_cdf({a, b, x, yb}, cfg);
                    t.sharpness(strf("Bbar-side a=%g b=%g x=%g y=1-1e-4", a, b, x),
                                std::fabs(rbb.bbar_upper.value / fb.b_bar - 1.0), 5e-3);
                }
            }
    return t.take();
}

SweepReport sweep_beta_series(const EvalConfig& cfg, bool dense) {
    Tracker t("beta-series", "N=5; a b x y grids");
    for (double a : grid_ab(dense))
        for (double b : grid_ab(dense))
            for (double x : grid_bx(dense))
                for (double y : grid_by(dense))
                    run_cell(t, strf("a=%g b=%g x=%g y=%g", a, b, x, y), [&] {
                        const auto sb = series_lower_bound_beta({a, b, x, y}, 5, cfg);
                        const auto full = beta_nc_cdf({a, b, x, y}, cfg);
                        t.claim(Side::lower, sb.b_lower.value, full.b);
                        if (sb.bbar_lower.valid)
                            t.claim(Side::lower, sb.bbar_lower.value, full.b_bar);
                    });
    return t.take();
}

SweepReport sweep_beta_central_factor(const EvalConfig& cfg, bool dense) {
    Tracker t("beta-central-factor", "rho in {0, 0.5}; a b x>0 y grids");
    for (double rho : {0.0, 0.5})
        for (double a : grid_ab(dense))
            for (double b : grid_ab(dense))
                for (double x : grid_bx(dense)) {
                    if (x == 0.0) continue;
                    for (double y : grid_by(dense))
                        run_cell(t, strf("a=%g b=%g x=%g y=%g rho=%g", a, b, x, y, rho),
                                 [&] {
                                     const auto cf =
                                         central_factor_bounds({a, b, x, y}, rho, cfg);
                                     const auto full = beta_nc_cdf({a, b, x, y}, cfg);
                                     t.claim(Side::upper, cf.b_upper.value, full.b);
                                     t.claim(Side::lower, cf.bbar_lower.value, full.b_bar);
                                 });
                }
    return t.take();
}

SweepReport sweep_beta_curious(const EvalConfig& cfg, bool dense) {
    Tracker t("beta-curious-margin", "a b x>0 y grids; Bbar(0,y) M(a+b,a,z) < e^{x/2}");
    for (double a : grid_ab(dense))
        for (double b : grid_ab(dense))
            for (double x : grid_bx(dense)) {
                if (x == 0.0) continue;
                for (double y : grid_by(dense))
                    run_cell(t, strf("a=%g b=%g x=%g y=%g", a, b, x, y), [&] {
                        const auto cf = central_factor_bounds({a, b, x, y}, 0.0, cfg);
                        t.claim_margin(cf.curious_margin, std::exp(0.5 * x));
                    });
            }
    return t.take();
}

// --------------------------------------------------------------- kummer ----

SweepReport sweep_kummer_sandwich(const EvalConfig& cfg, bool dense) {
    Tracker t("kummer-sandwich", "a>b pairs x 50-pt z grid; D(a,b,z) < (a/b)h < D(a,b-1,z)");
    const std::vector<std::pair<double, double>> pairs{
        {1.5, 0.5}, {2.0, 1.0}, {3.0, 1.0}, {5.0, 2.0}, {7.0, 6.5}, {10.0, 3.0}};
    const auto zs = log_grid(1e-3, 150.0, dense ? 80 : 50);
    for (const auto& [a, b] : pairs)
        for (double z : zs)
            run_cell(t, strf("a=%g b=%g z=%g", a, b, z), [&, a = a, b = b] {
                const auto d = ratio_h_diag(a, b, z, cfg);
                const double scale = std::max(d.g, 1.0);
                t.claim_margin(d.g - d.d_lower, scale);
                t.claim_margin(d.d_upper - d.g, scale);
            });
    return t.take();
}

SweepReport sweep_kummer_upper(const EvalConfig& cfg, bool dense) {
    Tracker t("kummer-upper-a-le-b", "a<=b pairs x z grid; (a/b)h < D(a,b,z)");
    const std::vector<std::pair<double, double>> pairs{
        {0.5, 1.5}, {1.0, 3.0}, {2.0, 5.0}, {4.0, 9.0}};
    const auto zs = log_grid(1e-3, 150.0, dense ? 80 : 50);
    for (const auto& [a, b] : pairs)
        for (double z : zs)
            run_cell(t, strf("a=%g b=%g z=%g", a, b, z), [&, a = a, b = b] {
                const auto d = ratio_h_diag(a, b, z, cfg);
                t.claim_margin(d.d_lower - d.g, std::max(d.g, 1.0));
            });
    return t.take();
}

SweepReport sweep_kummer_lambda(const EvalConfig& cfg, bool dense) {
    Tracker t("kummer-lambda-plus", "a,b in {0.5,1,2,5}^2 x z grid; shifted ratio < lambda+");
    const auto zs = log_grid(1e-3, 150.0, dense ? 60 : 40);
    for (double a : {0.5, 1.0, 2.0, 5.0})
        for (double b : {0.5, 1.0, 2.0, 5.0})
            for (double z : zs)
                run_cell(t, strf("a=%g b=%g z=%g", a, b, z), [&] {
                    const auto s = shifted_ratio_bound(a, b, z, cfg);
                    t.claim_margin(s.lambda_plus - s.ratio, s.ratio);
                });
    return t.take();
}

SweepReport sweep_kummer_monotonicity(const EvalConfig& cfg, bool dense) {
    Tracker t("kummer-monotonicity",
              "sampled pairwise ordering: h by sign(b-a), zh up, shifted up, Bessel ratios up");
    const auto zs = log_grid(1e-2, 150.0, dense ? 80 : 50);
    const double budget = 1e-11;

    const auto check_sequence = [&](const std::string& desc, bool increasing,
                                    const std::function<double(double)>& f) {
        run_cell(t, desc, [&] {
            double worst = std::numeric_limits<double>::infinity();
            double prev = f(zs.front());
            for (size_t i = 1; i < zs.size(); ++i) {
                const double cur = f(zs[i]);
                const double scale = std::max(std::fabs(prev), std::fabs(cur));
                const double inc = (increasing ? cur - prev : prev - cur) / scale;
                worst = std::min(worst, inc);
                prev = cur;
            }
            t.claim_residual(worst < 0.0 ? -worst : 0.0, 1.0, budget);
        });
    };

    const std::vector<std::pair<double, double>> decr{{2, 1}, {5, 2}, {10, 3}, {1.5, 0.5}};
    const std::vector<std::pair<double, double>> incr{{1, 2}, {2, 5}, {0.5, 1.5}, {3, 10}};
    const std::vector<std::pair<double, double>> all_pairs{
        {2, 1}, {5, 2}, {10, 3}, {1.5, 0.5}, {1, 2}, {2, 5}, {0.5, 1.5}, {3, 10}};

    for (const auto& [a, b] : decr)
        check_sequence(strf("h decreasing a=%g b=%g", a, b), false,
                       [&, a = a, b = b](double z) { return ratio_h_diag(a, b, z, cfg).h; });
    for (const auto& [a, b] : incr)
        check_sequence(strf("h increasing a=%g b=%g", a, b), true,
                       [&, a = a, b = b](double z) { return ratio_h_diag(a, b, z, cfg).h; });
    for (double c : {1.0, 4.0})
        run_cell(t, strf("h constant a=b=%g", c), [&] {
            for (double z : zs)
                t.claim_residual(ratio_h_diag(c, c, z, cfg).h - 1.0, 1.0, budget);
        });
    for (const auto& [a, b] : all_pairs) {
        check_sequence(strf("zh increasing a=%g b=%g", a, b), true,
                       [&, a = a, b = b](double z) { return ratio_h_diag(a, b, z, cfg).zh; });
        check_sequence(strf("shifted increasing a=%g b=%g", a, b), true, [&, a = a, b = b](double z) {
            return shifted_ratio_bound(a, b, z, cfg).ratio;
        });
    }

    // t^alpha I_{mu+alpha}(t)/I_mu(t) increasing for alpha, mu > 0
    const std::vector<std::pair<double, double>> alpha_mu{
        {0.5, 0.5}, {1.0, 1.0}, {2.0, 0.7}, {1.5, 3.0}, {1.0, 10.0}};
    for (const auto& [alpha, mu] : alpha_mu)
        check_sequence(strf("t^a I ratio alpha=%g mu=%g", alpha, mu), true,
                       [&, alpha = alpha, mu = mu](double z) {
                           return std::pow(z, alpha) * std::pow(0.5 * z, alpha) *
                                  bessel_i_norm(mu + alpha, z, cfg) /
                                  bessel_i_norm(mu, z, cfg);
                       });

    // x I_{mu+1}(x)/I_mu(x) increasing for mu >= -1 (mu = -1 via I_{-1} = I_1)
    for (double mu : {-1.0, -0.7, 0.0, 1.0, 5.0})
        check_sequence(strf("x I ratio mu=%g", mu), true, [&, mu = mu](double z) {
            if (mu == -1.0)
                return 2.0 * bessel_i_norm(0.0, z, cfg) / bessel_i_norm(1.0, z, cfg);
            return 0.5 * z * z * bessel_i_norm(mu + 1.0, z, cfg) /
                   bessel_i_norm(mu, z, cfg);
        });
    return t.take();
}

// ------------------------------------------------------------- quantile ----

SweepReport sweep_quantile(const EvalConfig& cfg, bool /*dense*/) {
    Tracker t("quantile-bracket", "a,b in {0.7,1,2,5,10}^2; beta ladder 1e-10..1e-2");
    const std::vector<double> ab{0.7, 1.0, 2.0, 5.0, 10.0};
    const std::vector<double> betas{1e-10, 1e-8, 1e-6, 1e-4, 1e-2};
    for (double a : ab)
        for (double b : ab) {
            std::vector<std::pair<double, double>> widths;  // (beta, width/y_beta)
            for (double beta : betas)
                run_cell(t, strf("a=%g b=%g beta=%g", a, b, beta), [&] {
                    const auto br = beta_quantile_bracket(a, b, beta, cfg);
                    if (!br.converged) {
                        t.skip_cell("bracket iteration did not converge");
                        return;
                    }
                    const double at_l = central_beta(a, b, br.y_l, cfg);
                    const double at_u = central_beta(a, b, br.y_u, cfg);
                    t.claim_margin(beta - at_l, beta);
                    t.claim_margin(at_u - beta, beta);
                    const double yq = beta_quantile_in(a, b, beta, br.y_l, br.y_u, cfg);
                    t.claim_residual(central_beta(a, b, yq, cfg) - beta, beta, 1e-12);
                    widths.emplace_back(beta, (br.y_u - br.y_l) / yq);
                });
            // width(beta)/y_beta shrinks as beta decreases (ladder ascends in beta)
            double worst_increase = 0.0;
            for (size_t i = 1; i < widths.size(); ++i)
                worst_increase =
                    std::max(worst_increase, (widths[i - 1].second - widths[i].second) /
                                                 widths[i].second);
            if (widths.size() >= 2)
                t.sharpness(strf("width ratio shrinks a=%g b=%g", a, b),
                            std::max(0.0, worst_increase), 1e-6);
        }
    return t.take();
}

}  // namespace

bool SweepReport::pass() const { return violations == 0; }

std::vector<SweepReport> run_gamma_suite(const EvalConfig& cfg, bool dense) {
    return {sweep_gamma_c_ratio(cfg, dense),    sweep_gamma_recurrence(cfg, dense),
            sweep_gamma_order_shift(cfg, dense), sweep_gamma_erf(cfg, dense),
            sweep_gamma_incgamma(cfg, dense),   sweep_gamma_series(cfg, dense),
            sweep_gamma_erfc_bessel(cfg, dense), sweep_gamma_curious(cfg, dense)};
}

std::vector<SweepReport> run_beta_suite(const EvalConfig& cfg, bool dense) {
    return {sweep_beta_identity(cfg, dense),       sweep_beta_ratio(cfg, dense),
            sweep_beta_recurrence(cfg, dense),     sweep_beta_series(cfg, dense),
            sweep_beta_central_factor(cfg, dense), sweep_beta_curious(cfg, dense)};
}

std::vector<SweepReport> run_kummer_suite(const EvalConfig& cfg, bool dense) {
    return {sweep_kummer_sandwich(cfg, dense), sweep_kummer_upper(cfg, dense),
            sweep_kummer_lambda(cfg, dense), sweep_kummer_monotonicity(cfg, dense)};
}

std::vector<SweepReport> run_quantile_suite(const EvalConfig& cfg, bool dense) {
    return {sweep_quantile(cfg, dense)};
}

std::vector<SweepReport> run_suite(const std::string& suite, const EvalConfig& cfg,
                                   bool dense) {
    if (suite == "gamma") return run_gamma_suite(cfg, dense);
    if (suite == "beta") return run_beta_suite(cfg, dense);
    if (suite == "kummer") return run_kummer_suite(cfg, dense);
    if (suite == "quantile") return run_quantile_suite(cfg, dense);
    if (suite == "all") {
        std::vector<SweepReport> all;
        for (const char* s : {"gamma", "beta", "kummer", "quantile"}) {
            auto part = run_suite(s, cfg, dense);
            all.insert(all.end(), std::make_move_iterator(part.begin()),
                       std::make_move_iterator(part.end()));
        }
        return all;
    }
    throw std::domain_error("run_suite: unknown suite '" + suite + "'");
}

std::string to_json(const SweepReport& report) {
    nlohmann::json j;
    j["family"] = report.family;
    j["grid_spec"] = report.grid_spec;
    j["cells_total"] = report.cells_total;
    j["cells_valid"] = report.cells_valid;
    j["cells_skipped"] = report.cells_skipped;
    j["violations"] = report.violations;
    j["min_margin"] = report.min_margin;
    j["worst_cell"] = report.worst_cell;
    nlohmann::json checks = nlohmann::json::array();
    for (const auto& s : report.sharpness_checks)
        checks.push_back({{"limit_point", s.limit_point},
                          {"deviation", s.deviation},
                          {"tolerance", s.tolerance}});
    j["sharpness_checks"] = checks;
    j["pass"] = report.pass();
    return j.dump();
}

}  // namespace cdfbounds
