#ifndef MIXBOUND_EXAMPLE_CHAINS_HPP
#define MIXBOUND_EXAMPLE_CHAINS_HPP

#include <Eigen/Dense>
#include <cmath>
#include <complex>
#include <optional>
#include <string>
#include <vector>

#include "mixbound/chain_analysis.hpp"
#include "mixbound/transition_matrix.hpp"

namespace mixbound {

/// A generated chain with its closed-form ground truths, when known.
/// States are indexed {0..N-1}; generators that the formulas describe on
/// {1..N} or {0..N} are shifted accordingly.
struct ExampleChain {
    TransitionMatrix matrix;
    std::optional<std::vector<std::complex<double>>> known_spectrum;
    std::optional<Vector> known_pi;
    bool reversible = false;
    std::string name;
};

/// Pure birth chain: holds with probability beta, else advances; state N-1
/// absorbing. Spectrum is 1 plus N-1 copies of beta in a Jordan block.
inline ExampleChain pure_birth(long N, double beta) {
    if (N < 1) throw NTooSmall(N);
    if (beta < 0 || beta >= 1) throw BetaOutOfRange(beta);
    Matrix M = Matrix::Zero(N, N);
    for (long i = 0; i + 1 < N; ++i) {
        M(i, i) = beta;
        M(i, i + 1) = 1.0 - beta;
    }
    M(N - 1, N - 1) = 1.0;
    ExampleChain ex{TransitionMatrix::validate(std::move(M)), {}, {}, true,
                    "pure-birth"};
    std::vector<std::complex<double>> spec(N, beta);
    spec.back() = 1.0;
    ex.known_spectrum = std::move(spec);
    Vector pi = Vector::Zero(N);
    pi(N - 1) = 1.0;
    ex.known_pi = std::move(pi);
    return ex;
}

/// Biased walk on the path: left p, hold q, right r, with reflecting
/// boundary rows. pi(i) is proportional to (r/p)^i and the non-unit
/// eigenvalues are q + 2 sqrt(pr) cos(j pi / N).
inline ExampleChain biased_walk(long N, double p, double q, double r) {
    if (N < 2) throw NTooSmall(N);
    if (p < 0 || q < 0 || r < 0 || std::abs(p + q + r - 1.0) > 1e-12)
        throw NotAProbabilityTriple();
    Matrix M = Matrix::Zero(N, N);
    M(0, 0) = p + q;
    M(0, 1) = r;
    for (long i = 1; i + 1 < N; ++i) {
        M(i, i - 1) = p;
        M(i, i) = q;
        M(i, i + 1) = r;
    }
    M(N - 1, N - 2) = p;
    M(N - 1, N - 1) = q + r;
    ExampleChain ex{TransitionMatrix::validate(std::move(M)), {}, {}, true,
                    "biased-walk"};
    std::vector<std::complex<double>> spec;
    spec.reserve(N);
    for (long j = 1; j <= N - 1; ++j)
        spec.emplace_back(q + 2.0 * std::sqrt(p * r) * std::cos(j * M_PI / N),
                          0.0);
    spec.emplace_back(1.0, 0.0);
    ex.known_spectrum = std::move(spec);
    if (p > 0) {
        Vector pi(N);
        for (long i = 0; i < N; ++i) pi(i) = std::pow(r / p, double(i));
        pi /= pi.sum();
        ex.known_pi = std::move(pi);
    }
    return ex;
}

/// Unbiased lazy walk on the path with a sticky right endpoint:
/// P(N-1,N-2) = 1/(4(N-1)), so half the stationary mass sits at the end.
inline ExampleChain sticky_walk(long N) {
    if (N < 2) throw NTooSmall(N);
    Matrix M = Matrix::Zero(N, N);
    M(0, 0) = 0.75;
    M(0, 1) = 0.25;
    for (long i = 1; i + 1 < N; ++i) {
        M(i, i - 1) = 0.25;
        M(i, i) = 0.5;
        M(i, i + 1) = 0.25;
    }
    double sticky = 1.0 / (4.0 * (N - 1));
    M(N - 1, N - 2) = sticky;
    M(N - 1, N - 1) = 1.0 - sticky;
    ExampleChain ex{TransitionMatrix::validate(std::move(M)), {}, {}, true,
                    "sticky-walk"};
    Vector pi(N);
    for (long i = 0; i + 1 < N; ++i) pi(i) = 1.0 / (2.0 * (N - 1));
    pi(N - 1) = 0.5;
    ex.known_pi = std::move(pi);
    return ex;
}

/// Nonreversible skip-free chain with uniform stationary distribution:
/// from state i (1-based) jump to i+1 with probability i/(i+1), otherwise
/// uniform over {1..i}; the top state resets uniformly. The optional beta
/// gives the lazy variant beta I + (1-beta) P.
inline ExampleChain skip_free(long N, double beta = 0.0) {
    if (N < 2) throw NTooSmall(N);
    if (beta < 0 || beta >= 1) throw BetaOutOfRange(beta);
    Matrix M = Matrix::Zero(N, N);
    for (long i = 1; i <= N - 1; ++i) {
        for (long j = 1; j <= i; ++j)
            M(i - 1, j - 1) = 1.0 / (double(i) * (i + 1));
        M(i - 1, i) = double(i) / (i + 1);
    }
    for (long j = 0; j < N; ++j) M(N - 1, j) = 1.0 / N;
    if (beta > 0)
        M = beta * Matrix::Identity(N, N) + (1.0 - beta) * M;
    ExampleChain ex{TransitionMatrix::validate(std::move(M)), {}, {}, false,
                    "skip-free"};
    std::vector<std::complex<double>> spec(N, beta);
    spec.back() = 1.0;
    ex.known_spectrum = std::move(spec);
    ex.known_pi = Vector::Constant(N, 1.0 / N);
    return ex;
}

/// Lazy random walk on the n-dimensional hypercube (N = 2^n states).
/// The absolute spectral gap is 1/n.
inline ExampleChain hypercube(long n) {
    if (n < 1) throw NTooSmall(n);
    if (n > 12) throw DimensionTooLarge(n);
    const long N = 1L << n;
    Matrix M = Matrix::Zero(N, N);
    for (long x = 0; x < N; ++x) {
        M(x, x) = 0.5;
        for (long b = 0; b < n; ++b) M(x, x ^ (1L << b)) = 0.5 / n;
    }
    ExampleChain ex{TransitionMatrix::validate(std::move(M)), {}, {}, true,
                    "hypercube"};
    // eigenvalue 1 - k/n with multiplicity binom(n,k)
    std::vector<std::complex<double>> spec;
    spec.reserve(N);
    for (long x = 0; x < N; ++x) {
        long k = 0;
        for (long b = 0; b < n; ++b) k += x >> b & 1;
        spec.emplace_back(1.0 - double(k) / n, 0.0);
    }
    ex.known_spectrum = std::move(spec);
    ex.known_pi = Vector::Constant(N, 1.0 / N);
    return ex;
}

/// Spectrum of a generated chain, from the closed form when one is known.
/// The defective examples (pure birth, skip-free) are out of reach of a
/// dense eigensolver, which splatters a Jordan block across the complex
/// plane; their ground truths must not go through it.
inline Spectrum example_spectrum(const ExampleChain& ex,
                                 const Tolerances& tol = default_tolerances()) {
    if (!ex.known_spectrum) return spectrum(ex.matrix, tol);
    Spectrum spec;
    spec.eigenvalues = *ex.known_spectrum;
    spec.reversible = ex.reversible;
    std::size_t skip = spec.unit_index();
    spec.beta_star = detail::beta_star_of(spec.eigenvalues, skip);
    spec.ergodic = spec.beta_star < 1.0 - tol.eig;
    spec.gap = 1.0 - spec.beta_star;
    spec.t_rel = spec.beta_star >= 1.0
                     ? std::numeric_limits<double>::infinity()
                     : 1.0 / spec.gap;
    return spec;
}

} // namespace mixbound

#endif
