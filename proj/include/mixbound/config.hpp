#ifndef MIXBOUND_CONFIG_HPP
#define MIXBOUND_CONFIG_HPP

#include <cstdint>

namespace mixbound {

/// All numerical tolerances in one place. Every operation that compares
/// against a tolerance takes one of these (defaulted), so test suites can
/// tighten or loosen uniformly.
struct Tolerances {
    double row_sum = 1e-12;       // row-stochasticity check
    double entry_clamp = 1e-15;   // entries in [-entry_clamp, 0) clamp to 0
    double eig = 1e-9;            // eigenvalue-1 identification
    double reversibility = 1e-10; // detailed balance check
    double stationary = 1e-10;    // pi P = pi residual
    double link = 1e-9;           // link entry nonnegativity / row sums
    double intertwining = 1e-8;   // |Lambda P - Q Lambda| max norm
};

/// Compute budget for matrix-powering loops. MIXBOUND_BUDGET (CLI) scales
/// max_steps.
struct Budget {
    long max_states = 512;
    std::int64_t max_steps = 1000000;
};

inline const Tolerances& default_tolerances() {
    static const Tolerances tols{};
    return tols;
}

} // namespace mixbound

#endif
