#include "doctest.h"

#include <cmath>

#include "cdfbounds/beta_nc.hpp"
#include "cdfbounds/marcum.hpp"
#include "cdfbounds/ratio_engine.hpp"
#include "support/oracles.hpp"

using namespace cdfbounds;

namespace {

// g1 = 1, g2 = 2t on (0,1): G1 = t, G2 = t^2, r = 2t
DensityPair synthetic_pair() {
    return {[](double) { return 1.0; }, [](double t) { return 2.0 * t; },
            RatioDirection::increasing, 0.0, 1.0};
}

}  // namespace

TEST_CASE("crossing_point: synthetic pairs") {
    CHECK(std::fabs(crossing_point(synthetic_pair()) - 0.5) < 1e-11);
    // reciprocal pair, decreasing ratio
    DensityPair dec{[](double t) { return 2.0 * t; }, [](double) { return 1.0; },
                    RatioDirection::decreasing, 0.0, 1.0};
    CHECK(std::fabs(crossing_point(dec) - 0.5) < 1e-11);
    DensityPair flat{[](double) { return 1.0; }, [](double t) { return 0.1 * t; },
                     RatioDirection::increasing, 0.0, 1.0};
    CHECK_THROWS_AS(crossing_point(flat), NoCrossingError);
}

TEST_CASE("crossing_point: Marcum recurrence pair matches c_mu bisection") {
    const double mu = 1.0, x = 1.0;
    DensityPair pair{
        [&](double y) { return marcum_density({mu, x, y}); },
        [&](double y) { return marcum_density({mu + 1.0, x, y}); },
        RatioDirection::increasing, 0.0, 40.0};
    const double y0_engine = crossing_point(pair, 1e-6, 40.0);
    const double y0_module = recurrence_crossing(mu, x);
    CHECK(std::fabs(y0_engine - y0_module) < 1e-8 * y0_module);
    // dense-sampling cross-check: the ratio straddles 1 across y0
    CHECK(pair.ratio(y0_module * 0.999) < 1.0);
    CHECK(pair.ratio(y0_module * 1.001) > 1.0);
}

TEST_CASE("ratio_bound: min/max with the trivial bound") {
    const auto pair = synthetic_pair();
    const auto at_quarter = ratio_bound(pair, 0.25);
    CHECK(at_quarter.cdf_ratio.side == Side::upper);
    CHECK(at_quarter.cdf_ratio.value == 0.5);
    CHECK(0.25 < at_quarter.cdf_ratio.value);  // G2/G1 = t = 0.25
    const auto at_three_quarters = ratio_bound(pair, 0.75);
    CHECK(at_three_quarters.cdf_ratio.value == 1.0);  // min{1, 1.5}
    CHECK(at_three_quarters.complement_ratio.value == 1.5);
    CHECK(at_three_quarters.complement_ratio.side == Side::lower);
}

TEST_CASE("ratio_bound: Marcum pair vs oracle") {
    const double mu = 2.0, x = 3.0, y = 1.0;
    DensityPair pair{
        [&](double t) { return marcum_density({mu, x, t}); },
        [&](double t) { return marcum_density({mu + 1.0, x, t}); },
        RatioDirection::increasing, 0.0, 60.0};
    const auto rb = ratio_bound(pair, y);
    const auto base = marcum_pq({mu, x, y});
    const auto next = marcum_pq({mu + 1.0, x, y});
    CHECK(next.p / base.p < rb.cdf_ratio.value);
    CHECK(next.q / base.q > rb.complement_ratio.value);
    // the unclipped ratio is c_mu
    CHECK(std::fabs(pair.ratio(y) - ratio_bound_c({mu, x, y}).c) < 1e-11);
}

TEST_CASE("difference_bounds: hand algebra on the synthetic pair") {
    const auto pair = synthetic_pair();
    const auto low = difference_bounds(pair, 0.25 - 0.25 * 0.25, 0.25);
    CHECK(low.u1.valid);
    CHECK(std::fabs(low.u1.value - 0.375) < 1e-15);
    CHECK(low.u1.value > 0.25);  // G1 = t
    CHECK(std::fabs(low.u2.value - 0.5 * 0.375) < 1e-15);
    const auto high = difference_bounds(pair, 0.75 - 0.75 * 0.75, 0.75);
    CHECK_FALSE(high.u1.valid);
    CHECK(std::fabs(-high.u1.value - 0.375) < 1e-15);
    CHECK(-high.u1.value > 1.0 - 0.75);  // complement of G1
    CHECK_THROWS_AS(difference_bounds(pair, 0.25, 0.5), SingularDenominatorError);
    DensityPair dec{[](double t) { return 2.0 * t; }, [](double) { return 1.0; },
                    RatioDirection::decreasing, 0.0, 1.0};
    CHECK_THROWS_AS(difference_bounds(dec, 0.1, 0.25), std::domain_error);
}

TEST_CASE("difference_bounds: U2 = r U1 exactly; Marcum pair vs oracle") {
    const double mu = 1.0, x = 2.0, y = 0.5;
    DensityPair pair{
        [&](double t) { return marcum_density({mu, x, t}); },
        [&](double t) { return marcum_density({mu + 1.0, x, t}); },
        RatioDirection::increasing, 0.0, 60.0};
    const double diff = marcum_density({mu + 1.0, x, y});
    const auto db = difference_bounds(pair, diff, y);
    const double r = pair.ratio(y);
    CHECK(std::fabs(db.u2.value - r * db.u1.value) <= 1e-14 * std::fabs(db.u2.value));
    CHECK(db.u1.value > marcum_pq({mu, x, y}).p);
    CHECK(db.u2.value > marcum_pq({mu + 1.0, x, y}).p);
}

TEST_CASE("monotone inheritance: CDF ratio inherits the density-ratio direction") {
    // Marcum pair: increasing ratio -> increasing P_{mu+1}/P_mu
    const double mu = 1.5, x = 2.0;
    double prev = -1.0;
    for (int i = 1; i <= 50; ++i) {
        const double y = 0.1 + (20.0 - 0.1) * i / 50.0;
        const double h = marcum_pq({mu + 1.0, x, y}).p / marcum_pq({mu, x, y}).p;
        CHECK(h >= prev - 1e-10 * std::fabs(h));
        prev = h;
    }
    // beta central-factor pair: decreasing ratio -> decreasing B(rho x,.)/B(x,.)
    const double a = 2.0, b = 3.0, xb = 4.0, rho = 0.5;
    prev = 1e300;
    for (int i = 1; i <= 50; ++i) {
        const double y = 0.99 * i / 50.0 + 0.005;
        const double h = beta_nc_cdf({a, b, rho * xb, y}).b / beta_nc_cdf({a, b, xb, y}).b;
        CHECK(h <= prev + 1e-10 * std::fabs(h));
        prev = h;
    }
}

TEST_CASE("sharpness: CDF-ratio/density-ratio tends to 1 where the end ratio is nonzero") {
    // synthetic pair with r(0) = 1/2 > 0: g1 = 1, g2 = (1+2t)/2
    DensityPair pos{[](double) { return 1.0; }, [](double t) { return 0.5 * (1.0 + 2.0 * t); },
                    RatioDirection::increasing, 0.0, 1.0};
    const double t0 = 1e-4;
    const double h = (0.5 * (t0 + t0 * t0)) / t0;  // G2/G1 = (t + t^2)/2 / t
    CHECK(std::fabs(h / pos.ratio(t0) - 1.0) < 1e-3);
    // complementary side at hi-: synthetic pair, ratio -> r(1) = 2
    const double t1 = 1.0 - 1e-4;
    const double hbar = (1.0 - t1 * t1) / (1.0 - t1);
    CHECK(std::fabs(hbar / synthetic_pair().ratio(t1) - 1.0) < 1e-3);
    // noncentrality-reduction Marcum pair: r(0+) = e^{x(1-rho^2)} > 0
    const double nu = 2.0, x = 3.0, rho = 0.5;
    DensityPair red{
        [&](double y) { return marcum_density({nu, x, y}); },
        [&](double y) { return marcum_density({nu, rho * rho * x, y}); },
        RatioDirection::decreasing, 0.0, 60.0};
    const double ys = 1e-6;
    const double hred = marcum_pq({nu, rho * rho * x, ys}).p / marcum_pq({nu, x, ys}).p;
    CHECK(std::fabs(hred / red.ratio(ys) - 1.0) < 1e-3);
    // beta recurrence pair, complementary side near y = 1
    const double a = 2.0, b = 3.0, xb = 2.0;
    DensityPair bpair{
        [&](double y) { return beta_nc_density({a, b, xb, y}); },
        [&](double y) { return beta_nc_density({a + 1.0, b, xb, y}); },
        RatioDirection::increasing, 0.0, 1.0};
    const double yb = 1.0 - 1e-4;
    const double hb =
        beta_nc_cdf({a + 1.0, b, xb, yb}).b_bar / beta_nc_cdf({a, b, xb, yb}).b_bar;
    CHECK(std::fabs(hb / bpair.ratio(yb) - 1.0) < 1e-3);
}

TEST_CASE("declared monotonicity of the family ratios holds on samples") {
    // r = g_{mu+1}/g_mu increasing in y (checked by sampling, as declared)
    DensityPair pair{
        [](double y) { return marcum_density({1.0, 1.0, y}); },
        [](double y) { return marcum_density({2.0, 1.0, y}); },
        RatioDirection::increasing, 0.0, 60.0};
    CHECK(testsup::worst_increment([&](double y) { return pair.ratio(y); },
                                   testsup::log_grid(1e-3, 50.0, 60), true) > -1e-12);
}
