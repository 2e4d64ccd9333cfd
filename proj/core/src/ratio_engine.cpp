#include "cdfbounds/ratio_engine.hpp"

#include <algorithm>
#include <cmath>

namespace cdfbounds {

namespace {
constexpr double kSingularTol = 1e-8;
}

double crossing_point(const DensityPair& pair, double bracket_lo, double bracket_hi,
                      const EvalConfig& cfg) {
    cfg.validate();
    double lo = bracket_lo;
    double hi = bracket_hi;
    double flo = pair.ratio(lo) - 1.0;
    double fhi = pair.ratio(hi) - 1.0;
    if (flo == 0.0) return lo;
    if (fhi == 0.0) return hi;
    if ((flo > 0.0) == (fhi > 0.0))
        throw NoCrossingError("crossing_point: ratio - 1 has no sign change on the bracket");
    for (int it = 0; it < 200; ++it) {
        const double mid = 0.5 * (lo + hi);
        if (hi - lo <= 1e-12 * std::max(std::fabs(mid), 1e-300)) return mid;
        const double fmid = pair.ratio(mid) - 1.0;
        if (fmid == 0.0) return mid;
        if ((fmid > 0.0) == (flo > 0.0)) {
            lo = mid;
            flo = fmid;
        } else {
            hi = mid;
        }
    }
    return 0.5 * (lo + hi);
}

double crossing_point(const DensityPair& pair, const EvalConfig& cfg) {
    const double off = 1e-9 * (pair.hi - pair.lo);
    return crossing_point(pair, pair.lo + off, pair.hi - off, cfg);
}

RatioBounds ratio_bound(const DensityPair& pair, double x) {
    const double r = pair.ratio(x);
    if (pair.ratio_direction == RatioDirection::increasing) {
        return {make_upper(std::min(1.0, r), "G2/G1"),
                make_lower(std::max(1.0, r), "comp(G2)/comp(G1)")};
    }
    return {make_lower(std::max(1.0, r), "G2/G1"),
            make_upper(std::min(1.0, r), "comp(G2)/comp(G1)")};
}

DifferenceBounds difference_bounds(const DensityPair& pair, double diff, double x,
                                   const EvalConfig& cfg) {
    cfg.validate();
    if (pair.ratio_direction != RatioDirection::increasing)
        throw std::domain_error("difference_bounds: requires the increasing-ratio case");
    const double r = pair.ratio(x);
    if (std::fabs(1.0 - r) < kSingularTol)
        throw SingularDenominatorError("difference_bounds: r(x) = 1 within tolerance", r);
    const double u1 = diff / (1.0 - r);
    const double u2 = r * u1;
    const bool below = r < 1.0;
    const char* note_ok = "upper bound for x < x0";
    const char* note_comp = "x > x0 here; -value is an upper bound on the complement";
    DifferenceBounds out;
    out.u1 = make_upper(u1, "G1", below, below ? note_ok : note_comp);
    out.u2 = make_upper(u2, "G2", below, below ? note_ok : note_comp);
    return out;
}

}  // namespace cdfbounds
