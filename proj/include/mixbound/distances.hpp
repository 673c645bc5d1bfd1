#ifndef MIXBOUND_DISTANCES_HPP
#define MIXBOUND_DISTANCES_HPP

#include <Eigen/Dense>
#include <algorithm>
#include <cmath>
#include <vector>

#include "mixbound/chain_analysis.hpp"
#include "mixbound/transition_matrix.hpp"

namespace mixbound {

namespace detail {

inline void check_probability_vector(const RowVector& v) {
    if (v.minCoeff() < -1e-12 || std::abs(v.sum() - 1.0) > 1e-10)
        throw NotAProbabilityVector();
}

} // namespace detail

/// Total variation distance: half the L1 distance.
inline double tv_distance(const RowVector& mu, const RowVector& nu) {
    if (mu.size() != nu.size()) throw DimensionMismatch();
    detail::check_probability_vector(mu);
    detail::check_probability_vector(nu);
    return 0.5 * (mu - nu).cwiseAbs().sum();
}

/// Separation distance max_x [1 - mu(x)/pi(x)], taken over the support of
/// pi. Mass of mu outside the support does not enter the max: separation is
/// the least s with mu >= (1-s) pi, and states with pi(x) = 0 impose no
/// constraint. Clamped at 0 from below.
inline double sep_distance(const RowVector& mu, const RowVector& pi) {
    if (mu.size() != pi.size()) throw DimensionMismatch();
    double worst = 0.0;
    for (long x = 0; x < mu.size(); ++x) {
        if (pi(x) <= 0.0) continue;
        worst = std::max(worst, 1.0 - mu(x) / pi(x));
    }
    return std::min(worst, 1.0);
}

/// Worst-start distances to stationarity at t = 0..horizon.
struct DistanceProfile {
    long horizon = 0;       // last recorded t
    std::vector<double> tv; // tv[t] = max_x |P^t(x,.) - pi|_TV
    std::vector<double> sep;
};

/// Iterates M <- M P from M = I, recording worst-start TV and separation.
/// Stops early once TV < 1e-15.
inline DistanceProfile distance_profile(const TransitionMatrix& P,
                                        const StationaryDistribution& pi,
                                        long t_max,
                                        const Budget& budget = Budget{}) {
    if (P.size() > budget.max_states)
        throw BudgetExceeded("N = " + std::to_string(P.size()));
    if (t_max > budget.max_steps)
        throw BudgetExceeded("t_max = " + std::to_string(t_max));
    const long n = P.size();
    DistanceProfile prof;
    Matrix M = Matrix::Identity(n, n);
    for (long t = 0; t <= t_max; ++t) {
        double tv = 0.0, sp = 0.0;
        for (long x = 0; x < n; ++x) {
            RowVector row = M.row(x);
            tv = std::max(tv, 0.5 * (row - pi.weights.transpose()).cwiseAbs().sum());
            sp = std::max(sp, sep_distance(row, pi.weights.transpose()));
        }
        prof.tv.push_back(tv);
        prof.sep.push_back(sp);
        prof.horizon = t;
        if (tv < 1e-15) break;
        if (t < t_max) M *= P.entries();
    }
    return prof;
}

/// Same profile but from a fixed initial distribution mu instead of the
/// worst start.
inline DistanceProfile distance_profile_from(const TransitionMatrix& P,
                                             const StationaryDistribution& pi,
                                             RowVector mu, long t_max,
                                             const Budget& budget = Budget{}) {
    if (mu.size() != P.size()) throw DimensionMismatch();
    if (P.size() > budget.max_states)
        throw BudgetExceeded("N = " + std::to_string(P.size()));
    DistanceProfile prof;
    for (long t = 0; t <= t_max; ++t) {
        prof.tv.push_back(0.5 * (mu - pi.weights.transpose()).cwiseAbs().sum());
        prof.sep.push_back(sep_distance(mu, pi.weights.transpose()));
        prof.horizon = t;
        if (prof.tv.back() < 1e-15) break;
        if (t < t_max) mu = mu * P.entries();
    }
    return prof;
}

enum class DistanceKind { tv, sep };

struct MixingTime {
    long time = 0;
    /// Worst-start TV need not be monotone; true when the threshold also
    /// holds at every later recorded t.
    bool stable = true;
};

/// First t with profile value <= epsilon. Errors when even the final
/// recorded value is above epsilon.
inline MixingTime exact_mixing_time(const DistanceProfile& profile,
                                    double epsilon, DistanceKind kind) {
    if (epsilon <= 0 || epsilon >= 1) throw EpsilonOutOfRange(epsilon);
    const std::vector<double>& vals =
        kind == DistanceKind::tv ? profile.tv : profile.sep;
    if (vals.empty() || vals.back() > epsilon) throw HorizonTooShort();
    MixingTime mt;
    long first = -1;
    for (long t = 0; t < static_cast<long>(vals.size()); ++t) {
        if (vals[t] <= epsilon) {
            if (first < 0) first = t;
        } else if (first >= 0) {
            mt.stable = false;
        }
    }
    mt.time = first;
    return mt;
}

} // namespace mixbound

#endif
