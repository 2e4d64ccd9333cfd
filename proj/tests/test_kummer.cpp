#include "doctest.h"

#include <cmath>
#include <tuple>
#include <utility>

#include "cdfbounds/kummer_ratios.hpp"
#include "cdfbounds/specfun.hpp"
#include "support/golden_values.hpp"
#include "support/oracles.hpp"

using namespace cdfbounds;

namespace {
double rel_err(double got, double want) {
    return std::fabs(got - want) / std::max(std::fabs(want), 1e-300);
}
}  // namespace

TEST_CASE("dee: identity at a=b=1, small-z limit, rationalized golden value") {
    for (double z : {1e-3, 0.1, 1.0, 10.0, 100.0})
        CHECK(rel_err(dee(1.0, 1.0, z), 1.0) < 1e-14);
    CHECK(rel_err(dee(2.0, 1.0, 1e-10), 2.0) < 1e-8);
    // z < b takes the rationalized branch; frozen 60-digit value
    CHECK(rel_err(dee(3.0, 5.0, 0.01), golden::kDee_3_5_0p01) < 1e-14);
    // both branches agree where the naive form is stable
    const double a = 3.0, b = 5.0, z = 4.0;
    const double naive = (z - b + std::sqrt((z - b) * (z - b) + 4.0 * a * z)) / (2.0 * z);
    CHECK(rel_err(dee(a, b, z), naive) < 1e-13);
    CHECK_THROWS_AS(dee(3.0, 5.0, 0.0), std::domain_error);
}

TEST_CASE("ratio_h_diag: degenerate a=b, sandwich for a>b, upper bound for a<=b") {
    const auto deg = ratio_h_diag(2.0, 2.0, 1.3);
    CHECK(rel_err(deg.h, 1.0) < 1e-13);
    CHECK(rel_err(deg.g, 1.0) < 1e-13);
    CHECK(rel_err(deg.d_lower, 1.0) < 1e-14);
    const auto mid = ratio_h_diag(3.0, 1.0, 2.0);
    CHECK(mid.d_lower < mid.g);
    CHECK(mid.g < mid.d_upper);
    // independent Kummer route for the same diagnostics
    const double g_naive = (3.0 / 1.0) *
                           (double)(testsup::naive_kummer_m(4.0L, 2.0L, 2.0L) /
                                    testsup::naive_kummer_m(3.0L, 1.0L, 2.0L));
    CHECK(rel_err(mid.g, g_naive) < 1e-12);
    const auto flip = ratio_h_diag(1.0, 3.0, 2.0);
    CHECK(flip.g < flip.d_lower);  // for a <= b the D(a,b,z) root is the upper bound
    CHECK(flip.h > 1.0);           // increasing direction
    CHECK(mid.h < 1.0);            // decreasing direction
}

TEST_CASE("shifted_ratio_bound: z=0 algebra, margin, slope, large-z scaling") {
    const auto z0b2 = shifted_ratio_bound(2.0, 2.0, 0.0);
    CHECK(z0b2.ratio == 1.0);
    CHECK(z0b2.lambda_plus == 1.0);
    const auto z0b_small = shifted_ratio_bound(2.0, 0.5, 0.0);
    CHECK(rel_err(z0b_small.lambda_plus, 1.0 + 0.5 / 2.0) < 1e-14);
    const auto s = shifted_ratio_bound(2.0, 3.0, 5.0);
    CHECK(s.ratio < s.lambda_plus);
    // slope 1/b at the origin
    const double h = 1e-6;
    const double slope = (shifted_ratio_bound(2.0, 3.0, h).ratio - 1.0) / h;
    CHECK(rel_err(slope, 1.0 / 3.0) < 1e-4);
    // ratio ~ z/a for large z
    const auto big = shifted_ratio_bound(2.0, 3.0, 150.0);
    CHECK(std::fabs(big.ratio / (150.0 / 2.0) - 1.0) < 0.05);
}

TEST_CASE("monotonicity: h by sign(b-a), zh and shifted ratio increasing") {
    const auto zs = testsup::log_grid(1e-2, 150.0, 60);
    CHECK(testsup::worst_increment(
              [](double z) { return ratio_h_diag(5.0, 2.0, z).h; }, zs, false) > -1e-11);
    CHECK(testsup::worst_increment(
              [](double z) { return ratio_h_diag(2.0, 5.0, z).h; }, zs, true) > -1e-11);
    CHECK(testsup::worst_increment(
              [](double z) { return ratio_h_diag(1.5, 0.5, z).zh; }, zs, true) > -1e-11);
    CHECK(testsup::worst_increment(
              [](double z) { return shifted_ratio_bound(0.5, 5.0, z).ratio; }, zs, true) >
          -1e-11);
}

TEST_CASE("sandwich strictness over a dense grid") {
    double min_low = 1e300, min_high = 1e300;
    for (const auto& [a, b] : {std::pair{2.0, 1.0}, {5.0, 2.0}, {10.0, 3.0}, {1.5, 0.5}})
        for (double z : testsup::log_grid(1e-3, 150.0, 50)) {
            const auto d = ratio_h_diag(a, b, z);
            min_low = std::min(min_low, (d.g - d.d_lower) / std::max(d.g, 1.0));
            min_high = std::min(min_high, (d.d_upper - d.g) / std::max(d.g, 1.0));
        }
    CHECK(min_low > 0.0);
    CHECK(min_high > 0.0);
}

TEST_CASE("Bessel-ratio monotonicity reuses the same harness") {
    const auto ts = testsup::log_grid(1e-2, 150.0, 60);
    // t^alpha I_{mu+alpha}(t)/I_mu(t) increasing for alpha, mu > 0
    for (const auto& [alpha, mu] : {std::pair{0.5, 0.5}, {2.0, 0.7}, {1.5, 3.0}})
        CHECK(testsup::worst_increment(
                  [&, alpha = alpha, mu = mu](double t) {
                      return std::pow(t, alpha) * std::pow(0.5 * t, alpha) *
                             bessel_i_norm(mu + alpha, t) / bessel_i_norm(mu, t);
                  },
                  ts, true) > -1e-11);
    // x I_{mu+1}(x)/I_mu(x) increasing for mu >= -1
    for (double mu : {-1.0, -0.7, 0.0, 1.0, 5.0})
        CHECK(testsup::worst_increment(
                  [&, mu = mu](double x) {
                      if (mu == -1.0)
                          return 2.0 * bessel_i_norm(0.0, x) / bessel_i_norm(1.0, x);
                      return 0.5 * x * x * bessel_i_norm(mu + 1.0, x) / bessel_i_norm(mu, x);
                  },
                  ts, true) > -1e-11);
}

TEST_CASE("RatioDiagnostics values are finite and positive") {
    for (double a : {0.5, 2.0, 10.0})
        for (double b : {0.5, 2.0, 10.0})
            for (double z : {1e-3, 1.0, 50.0}) {
                const auto d = ratio_h_diag(a, b, z);
                for (double v : {d.h, d.zh, d.g, d.shifted, d.d_lower, d.lambda_plus}) {
                    CHECK(std::isfinite(v));
                    CHECK(v > 0.0);
                }
            }
}
