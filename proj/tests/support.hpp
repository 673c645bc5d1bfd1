// Shared helpers for the test suites: seeded random chain generators and
// independent oracles kept free of the library code paths they check.
#ifndef MIXBOUND_TESTS_SUPPORT_HPP
#define MIXBOUND_TESTS_SUPPORT_HPP

#include <random>
#include <vector>

#include "mixbound/chain_analysis.hpp"
#include "mixbound/transition_matrix.hpp"

namespace mixbound::testsupport {

inline std::mt19937& rng() {
    static std::mt19937 gen(20240817);
    return gen;
}

inline TransitionMatrix random_stochastic(long n, std::mt19937& gen = rng()) {
    std::uniform_real_distribution<double> u(0.05, 1.0);
    Matrix M(n, n);
    for (long i = 0; i < n; ++i) {
        for (long j = 0; j < n; ++j) M(i, j) = u(gen);
        M.row(i) /= M.row(i).sum();
    }
    return TransitionMatrix::validate(std::move(M));
}

/// P = D^{-1} A for a symmetric positive A; reversible w.r.t. pi ~ rowsums.
inline TransitionMatrix random_reversible(long n, std::mt19937& gen = rng()) {
    std::uniform_real_distribution<double> u(0.05, 1.0);
    Matrix A(n, n);
    for (long i = 0; i < n; ++i)
        for (long j = i; j < n; ++j) A(i, j) = A(j, i) = u(gen);
    Matrix M(n, n);
    for (long i = 0; i < n; ++i) M.row(i) = A.row(i) / A.row(i).sum();
    return TransitionMatrix::validate(std::move(M));
}

inline TransitionMatrix random_lazy_reversible(long n, std::mt19937& gen = rng()) {
    TransitionMatrix R = random_reversible(n, gen);
    return TransitionMatrix::validate(
        0.5 * (Matrix::Identity(n, n) + R.entries()));
}

inline RowVector random_distribution(long n, std::mt19937& gen = rng()) {
    std::uniform_real_distribution<double> u(0.0, 1.0);
    RowVector mu(n);
    for (long i = 0; i < n; ++i) mu(i) = u(gen);
    return mu / mu.sum();
}

/// Tail of a sum of independent geometrics by explicit pmf convolution.
/// Independent of the pure-birth recursion it cross-checks.
inline double geometric_sum_tail_oracle(const std::vector<double>& betas, long t) {
    std::vector<double> pmf{1.0}; // distribution of the partial sum, offset 0
    for (double beta : betas) {
        std::vector<double> next(t + 1, 0.0);
        for (long s = 0; s <= t; ++s) {
            if (pmf.size() > static_cast<std::size_t>(s) && pmf[s] > 0) {
                // add one geometric on {1,2,...}
                for (long g = 1; s + g <= t; ++g)
                    next[s + g] += pmf[s] * std::pow(beta, g - 1) * (1.0 - beta);
            }
        }
        pmf = std::move(next);
    }
    double cdf = 0.0;
    for (double v : pmf) cdf += v;
    return 1.0 - cdf;
}

/// Binomial CDF in plain double arithmetic: P(Binom(t, p) <= k).
inline double binomial_cdf(long t, double p, long k) {
    if (p <= 0.0) return 1.0;
    if (p >= 1.0) return k >= t ? 1.0 : 0.0;
    double acc = 0.0;
    for (long i = 0; i <= k && i <= t; ++i) {
        double lterm = std::lgamma(t + 1.0) - std::lgamma(i + 1.0) -
                       std::lgamma(t - i + 1.0);
        lterm += i * std::log(p) + (t - i) * std::log1p(-p);
        acc += std::exp(lterm);
    }
    return std::min(acc, 1.0);
}

inline Matrix matrix_power(const Matrix& A, long t) {
    Matrix M = Matrix::Identity(A.rows(), A.cols());
    for (long s = 0; s < t; ++s) M = M * A;
    return M;
}

} // namespace mixbound::testsupport

#endif
