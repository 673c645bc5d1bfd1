#ifndef MIXBOUND_BOUNDS_HPP
#define MIXBOUND_BOUNDS_HPP

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>
#include <vector>

#include "mixbound/chain_analysis.hpp"
#include "mixbound/transition_matrix.hpp"

namespace mixbound {

constexpr double kInf = std::numeric_limits<double>::infinity();

/// L2 lower bound: log(2 eps)^{-1} (t_rel - 1). Valid for any chain.
inline double l2_lower_bound(double t_rel, double epsilon) {
    if (epsilon <= 0 || epsilon >= 0.5) throw EpsilonOutOfRange(epsilon);
    if (t_rel < 1) throw InfiniteRelaxation();
    return std::log(1.0 / (2.0 * epsilon)) * (t_rel - 1.0);
}

/// L2 upper bound for reversible chains:
/// ceil[(1/2 log pi_min^{-1} + log(2 eps)^{-1}) t_rel].
inline double l2_upper_bound(double t_rel, double pi_min, double epsilon) {
    if (epsilon <= 0 || epsilon >= 0.5) throw EpsilonOutOfRange(epsilon);
    if (pi_min <= 0) throw ZeroPiMin();
    return std::ceil((0.5 * std::log(1.0 / pi_min) +
                      std::log(1.0 / (2.0 * epsilon))) *
                     t_rel);
}

/// The general spectral upper bound:
/// 2 N t_rel log t_rel + 4(1+log 2) N t_rel + 2(log eps^{-1} - 1) t_rel.
inline double main_upper_bound(long N, double t_rel, double epsilon) {
    if (epsilon <= 0 || epsilon >= 1) throw EpsilonOutOfRange(epsilon);
    if (!(t_rel >= 1) || std::isinf(t_rel)) throw InfiniteRelaxation();
    return 2.0 * N * t_rel * std::log(t_rel) +
           4.0 * (1.0 + std::log(2.0)) * N * t_rel +
           2.0 * (std::log(1.0 / epsilon) - 1.0) * t_rel;
}

/// Sharpened reversible upper bound:
/// 2 (N + 2 log eps^{-1} - 1 + sqrt(2(N-2) log eps^{-1})) t_rel,
/// with the leading 2 dropped when the spectrum is nonnegative.
/// The (N-2) under the root floors at 0 so N = 2 degenerates gracefully.
inline double rev_sharpen_upper_bound(long N, double t_rel, double epsilon,
                                      bool nonneg_spectrum) {
    if (epsilon <= 0 || epsilon >= 1) throw EpsilonOutOfRange(epsilon);
    if (!(t_rel >= 1) || std::isinf(t_rel)) throw InfiniteRelaxation();
    double le = std::log(1.0 / epsilon);
    double base =
        (N + 2.0 * le - 1.0 + std::sqrt(2.0 * std::max<long>(N - 2, 0) * le)) *
        t_rel;
    return nonneg_spectrum ? base : 2.0 * base;
}

struct TvBound {
    double capped; // min(raw, 1)
    double raw;
};

/// Worst-start TV bound at a fixed time t >= N-1:
/// (N-1) binom(t,N-1) sum_k binom(N-2,k) beta_star^{t-k}/(t-k).
/// Evaluated in log domain; binom(t,N-1) overflows doubles well before the
/// bound becomes informative.
inline TvBound tv_bound_at_time(long N, double beta_star, long t) {
    if (N < 2) throw IndexOutOfRange();
    if (t < N - 1) throw TimeTooSmall(t, N);
    if (beta_star < 0 || beta_star >= 1) throw BetaOutOfRange(beta_star);
    if (beta_star == 0.0) return TvBound{0.0, 0.0};

    auto lbinom = [](long n, long k) {
        return std::lgamma(n + 1.0) - std::lgamma(k + 1.0) -
               std::lgamma(n - k + 1.0);
    };
    const double lead = std::log(static_cast<double>(N - 1)) + lbinom(t, N - 1);
    const double lb = std::log(beta_star);
    std::vector<double> logs;
    logs.reserve(N - 1);
    for (long k = 0; k <= N - 2; ++k)
        logs.push_back(lead + lbinom(N - 2, k) + (t - k) * lb -
                       std::log(static_cast<double>(t - k)));
    double mx = *std::max_element(logs.begin(), logs.end());
    double acc = 0.0;
    for (double l : logs) acc += std::exp(l - mx);
    double raw = std::exp(mx) * acc;
    return TvBound{std::min(raw, 1.0), raw};
}

/// Tail P(tau_1 + ... + tau_{N-1} > t) of a sum of independent geometrics
/// with holding probabilities betas, via the pure-birth forward recursion.
inline double sst_tail(const std::vector<double>& betas, long t) {
    for (double b : betas)
        if (b < 0 || b >= 1) throw BetaOutOfRange(b);
    const long N = static_cast<long>(betas.size()) + 1;
    std::vector<double> v(N, 0.0), w(N);
    v[0] = 1.0;
    for (long s = 0; s < t; ++s) {
        for (long j = 0; j < N; ++j) {
            double hold = j < N - 1 ? betas[j] : 1.0;
            w[j] = v[j] * hold;
            if (j > 0) w[j] += v[j - 1] * (1.0 - betas[j - 1]);
        }
        v.swap(w);
    }
    return 1.0 - v[N - 1];
}

/// Chernoff bound on the negative-binomial tail: with
/// delta = 1 - (N-2)/((1-beta_star) t) >= 0, the tail is at most
/// exp(-delta^2 (1-beta_star) t / 2).
inline double chernoff_negative_binomial_bound(long N, double gap, long t) {
    if (gap <= 0 || gap > 1) throw BetaOutOfRange(1.0 - gap);
    double delta = 1.0 - static_cast<double>(N - 2) / (gap * t);
    if (delta < 0) throw DeltaNegative();
    return std::exp(-delta * delta * gap * t / 2.0);
}

/// Brute-force Cheeger constant: min over subsets S with 0 < pi(S) <= 1/2
/// of the escaping flow Q(S,S^c) over pi(S). Exhaustive in 2^N, capped at
/// N = 24.
inline double cheeger_constant(const TransitionMatrix& P,
                               const StationaryDistribution& pi) {
    const long n = P.size();
    if (n > 24) throw StateSpaceTooLarge(n);
    double best = kInf;
    const std::uint64_t total = std::uint64_t{1} << n;
    for (std::uint64_t mask = 1; mask + 1 < total; ++mask) {
        double pis = 0.0;
        for (long x = 0; x < n; ++x)
            if (mask >> x & 1) pis += pi(x);
        if (pis <= 0.0 || pis > 0.5 + 1e-12) continue;
        double flow = 0.0;
        for (long x = 0; x < n; ++x) {
            if (!(mask >> x & 1)) continue;
            for (long y = 0; y < n; ++y)
                if (!(mask >> y & 1)) flow += pi(x) * P(x, y);
        }
        best = std::min(best, flow / pis);
    }
    return best == kInf ? 0.0 : best;
}

/// Evolving-sets upper bound for lazy chains:
/// ceil[(2/Phi^2) log(1/(eps pi_min))].
inline double cheeger_lazy_upper_bound(double phi, double pi_min, double epsilon) {
    if (epsilon <= 0 || epsilon >= 1) throw EpsilonOutOfRange(epsilon);
    if (phi <= 0) throw ZeroPhi();
    if (pi_min <= 0) throw ZeroPiMin();
    return std::ceil(2.0 / (phi * phi) * std::log(1.0 / (epsilon * pi_min)));
}

/// Multiplicative-reversibilization upper bound:
/// ceil[(1/(1-alpha)) log(1/(2 eps sqrt(pi_min)))].
inline double multiplicative_upper_bound(double alpha, double pi_min,
                                         double epsilon) {
    if (epsilon <= 0 || epsilon >= 0.5) throw EpsilonOutOfRange(epsilon);
    if (pi_min <= 0) throw ZeroPiMin();
    if (alpha >= 1.0 - 1e-12) throw AlphaOne();
    return std::ceil(1.0 / (1.0 - alpha) *
                     std::log(1.0 / (2.0 * epsilon * std::sqrt(pi_min))));
}

/// One evaluated bound; inapplicable bounds keep their value (or +inf) but
/// carry the failed hypothesis instead of being dropped.
struct BoundReport {
    std::string name;
    double epsilon;
    double value;
    bool applicable;
    bool is_upper; // false: lower bound
    std::string failed_hypothesis;
};

/// Evaluates every bound in the library against one chain, flagging the
/// ones whose hypotheses fail.
inline std::vector<BoundReport> evaluate_all_bounds(
    const TransitionMatrix& P, const StationaryDistribution& pi,
    const Spectrum& spec, double epsilon,
    const Tolerances& tol = default_tolerances()) {
    std::vector<BoundReport> out;
    const long n = P.size();
    bool reversible = spec.reversible;
    bool lazy = P.entries().diagonal().minCoeff() >= 0.5 - 1e-12;

    auto push = [&](const std::string& name, bool upper, auto&& eval,
                    const std::string& hypothesis_if_missing = "") {
        BoundReport r{name, epsilon, kInf, true, upper, ""};
        if (!hypothesis_if_missing.empty()) {
            r.applicable = false;
            r.failed_hypothesis = hypothesis_if_missing;
        }
        try {
            r.value = eval();
        } catch (const Error& e) {
            r.applicable = false;
            if (r.failed_hypothesis.empty()) r.failed_hypothesis = e.what();
        }
        out.push_back(std::move(r));
    };

    push("l2_lower", false, [&] { return l2_lower_bound(spec.t_rel, epsilon); });
    push("l2_upper", true,
         [&] { return l2_upper_bound(spec.t_rel, pi.pi_min, epsilon); },
         reversible ? "" : "not reversible");
    push("main_upper", true, [&] { return main_upper_bound(n, spec.t_rel, epsilon); });
    {
        bool nonneg = true;
        if (reversible) {
            try {
                for (double b : spec.sorted_betas(tol.eig))
                    if (b < -tol.eig) nonneg = false;
            } catch (const Error&) {
                nonneg = false;
            }
        }
        push("rev_sharpen_upper", true,
             [&] {
                 return rev_sharpen_upper_bound(n, spec.t_rel, epsilon, nonneg);
             },
             reversible ? "" : "not reversible");
    }
    push("cheeger_lazy_upper", true,
         [&] {
             double phi = cheeger_constant(P, pi);
             return cheeger_lazy_upper_bound(phi, pi.pi_min, epsilon);
         },
         lazy ? "" : "not lazy");
    push("multiplicative_upper", true, [&] {
        Reversibilizations rev = reversibilizations(P, pi, tol);
        return multiplicative_upper_bound(rev.alpha, pi.pi_min, epsilon);
    });
    return out;
}

} // namespace mixbound

#endif
