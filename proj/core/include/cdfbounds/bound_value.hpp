#pragma once

#include <string>

namespace cdfbounds {

enum class Side { lower, upper };

inline const char* to_string(Side s) { return s == Side::upper ? "upper" : "lower"; }

// One computed bound. `valid` is false whenever the evaluation point lies
// outside the bound's proven region; the value is still reported so callers
// can see what the formula gives there.
struct BoundValue {
    double value = 0.0;
    Side side = Side::upper;
    std::string target;
    bool valid = true;
    std::string validity_note;
};

inline BoundValue make_upper(double v, std::string target, bool valid = true,
                             std::string note = {}) {
    return BoundValue{v, Side::upper, std::move(target), valid, std::move(note)};
}

inline BoundValue make_lower(double v, std::string target, bool valid = true,
                             std::string note = {}) {
    return BoundValue{v, Side::lower, std::move(target), valid, std::move(note)};
}

}  // namespace cdfbounds
