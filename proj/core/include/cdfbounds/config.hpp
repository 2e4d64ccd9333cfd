#pragma once

#include <stdexcept>

namespace cdfbounds {

// Whether bounds whose hypotheses are only numerically checked (not proven)
// may be evaluated. In proven mode such requests are rejected with a domain
// error; in conjectured mode they are computed and flagged.
enum class ValidityMode { proven, conjectured };

struct EvalConfig {
    double rel_tol = 1e-12;
    int max_terms = 10000;
    ValidityMode validity_mode = ValidityMode::proven;

    void validate() const {
        if (!(rel_tol > 0.0) || !(rel_tol < 1e-6))
            throw std::domain_error("EvalConfig: rel_tol must be in (0, 1e-6)");
        if (max_terms < 100)
            throw std::domain_error("EvalConfig: max_terms must be >= 100");
    }
};

}  // namespace cdfbounds
