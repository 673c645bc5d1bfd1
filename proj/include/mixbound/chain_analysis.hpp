#ifndef MIXBOUND_CHAIN_ANALYSIS_HPP
#define MIXBOUND_CHAIN_ANALYSIS_HPP

#include <Eigen/Dense>
#include <Eigen/Eigenvalues>
#include <algorithm>
#include <cmath>
#include <complex>
#include <limits>
#include <vector>

#include "mixbound/errors.hpp"
#include "mixbound/transition_matrix.hpp"

namespace mixbound {

struct StationaryDistribution {
    Vector weights;
    double pi_min = 0.0;

    long size() const { return weights.size(); }
    double operator()(long i) const { return weights(i); }
};

/// Full eigenvalue multiset of a transition matrix with the derived
/// quantities. For reversible chains the eigenvalues are real and sorted
/// increasingly with beta_N = 1 last.
struct Spectrum {
    std::vector<std::complex<double>> eigenvalues;
    double beta_star = 0.0;
    double gap = 1.0;
    double t_rel = 1.0; // +inf when beta_star = 1
    bool reversible = false;
    bool ergodic = true; // false when a second eigenvalue sits at 1

    /// The N-1 non-unit eigenvalues as reals, sorted increasingly.
    /// Only meaningful when the spectrum is real (reversible chains or
    /// chains whose imaginary parts are below tol).
    std::vector<double> sorted_betas(double tol = 1e-9) const {
        std::vector<double> out;
        out.reserve(eigenvalues.size());
        // drop the single eigenvalue closest to 1
        std::size_t skip = unit_index();
        for (std::size_t k = 0; k < eigenvalues.size(); ++k) {
            if (k == skip) continue;
            if (std::abs(eigenvalues[k].imag()) > tol) throw NegativeSpectrum();
            out.push_back(eigenvalues[k].real());
        }
        std::sort(out.begin(), out.end());
        return out;
    }

    std::size_t unit_index() const {
        std::size_t best = 0;
        double dist = std::numeric_limits<double>::infinity();
        for (std::size_t k = 0; k < eigenvalues.size(); ++k) {
            double d = std::abs(eigenvalues[k] - std::complex<double>(1.0, 0.0));
            if (d < dist) {
                dist = d;
                best = k;
            }
        }
        return best;
    }
};

/// Solves pi P = pi by a null-space computation on P^T - I and normalizes.
/// Errors with NonUniqueStationary when the kernel is not one-dimensional.
inline StationaryDistribution stationary_distribution(
    const TransitionMatrix& P, const Tolerances& tol = default_tolerances()) {
    const long n = P.size();
    Matrix A = P.entries().transpose() - Matrix::Identity(n, n);
    Eigen::FullPivLU<Matrix> lu(A);
    lu.setThreshold(1e-9);
    if (lu.dimensionOfKernel() != 1) throw NonUniqueStationary();
    Vector v = lu.kernel().col(0);
    if (v.sum() < 0) v = -v;
    // tiny negative components are numerical noise
    for (long i = 0; i < n; ++i)
        if (v(i) < 0 && v(i) > -1e-10) v(i) = 0.0;
    double s = v.sum();
    if (s <= 0) throw NonUniqueStationary();
    v /= s;
    if (((RowVector)v.transpose() * P.entries() - v.transpose()).cwiseAbs().maxCoeff() >
        tol.stationary * 100)
        throw NonUniqueStationary();
    StationaryDistribution pi;
    pi.weights = v;
    pi.pi_min = v.minCoeff();
    return pi;
}

/// Detailed balance check: max_{x,y} |pi(x)P(x,y) - pi(y)P(y,x)| < tol.
/// For pi_min = 0 chains this is a heuristic stand-in for membership in the
/// closure of the reversible class.
inline bool is_reversible(const TransitionMatrix& P,
                          const StationaryDistribution& pi,
                          const Tolerances& tol = default_tolerances()) {
    const long n = P.size();
    double worst = 0.0;
    for (long x = 0; x < n; ++x)
        for (long y = x + 1; y < n; ++y)
            worst = std::max(worst,
                             std::abs(pi(x) * P(x, y) - pi(y) * P(y, x)));
    return worst < tol.reversibility;
}

namespace detail {

inline double beta_star_of(const std::vector<std::complex<double>>& eigs,
                           std::size_t skip) {
    double bs = 0.0;
    for (std::size_t k = 0; k < eigs.size(); ++k)
        if (k != skip) bs = std::max(bs, std::abs(eigs[k]));
    return bs;
}

} // namespace detail

/// Full spectrum via a dense nonsymmetric solve; reversible chains with
/// pi_min > 0 are re-solved through the symmetrization D^{1/2} P D^{-1/2}.
/// Exactly one eigenvalue nearest 1 is excluded from the beta_star max; if
/// a second one is within tol.eig of 1 the chain is flagged non-ergodic.
inline Spectrum spectrum(const TransitionMatrix& P,
                         const Tolerances& tol = default_tolerances()) {
    const long n = P.size();
    Spectrum spec;

    bool symmetric_path = false;
    try {
        StationaryDistribution pi = stationary_distribution(P, tol);
        if (is_reversible(P, pi, tol)) {
            spec.reversible = true;
            if (pi.pi_min > 0) symmetric_path = true;
        }
    } catch (const NonUniqueStationary&) {
        // fall through to the nonsymmetric solver; multiple unit
        // eigenvalues are reported via the ergodic flag
    }

    spec.eigenvalues.reserve(n);
    if (symmetric_path) {
        StationaryDistribution pi = stationary_distribution(P, tol);
        Vector d = pi.weights.cwiseSqrt();
        Matrix S = d.asDiagonal() * P.entries() * d.cwiseInverse().asDiagonal();
        S = 0.5 * (S + S.transpose());
        Eigen::SelfAdjointEigenSolver<Matrix> es(S);
        if (es.info() != Eigen::Success) throw EigensolverFailure();
        for (long k = 0; k < n; ++k)
            spec.eigenvalues.emplace_back(es.eigenvalues()(k), 0.0);
    } else {
        Eigen::EigenSolver<Matrix> es(P.entries());
        if (es.info() != Eigen::Success) throw EigensolverFailure();
        for (long k = 0; k < n; ++k) {
            std::complex<double> z = es.eigenvalues()(k);
            if (spec.reversible && std::abs(z.imag()) < tol.eig)
                z = std::complex<double>(z.real(), 0.0);
            spec.eigenvalues.push_back(z);
        }
        if (spec.reversible)
            std::sort(spec.eigenvalues.begin(), spec.eigenvalues.end(),
                      [](auto a, auto b) { return a.real() < b.real(); });
    }

    std::size_t skip = spec.unit_index();
    spec.beta_star = detail::beta_star_of(spec.eigenvalues, skip);
    spec.ergodic = spec.beta_star < 1.0 - tol.eig;
    spec.gap = 1.0 - spec.beta_star;
    spec.t_rel = spec.beta_star >= 1.0
                     ? std::numeric_limits<double>::infinity()
                     : 1.0 / spec.gap;
    return spec;
}

/// Time reversal P*(x,y) = pi(y) P(y,x) / pi(x). Needs pi_min > 0.
inline TransitionMatrix time_reversal(const TransitionMatrix& P,
                                      const StationaryDistribution& pi,
                                      const Tolerances& tol = default_tolerances()) {
    if (pi.pi_min <= 0) throw ZeroStationaryMass();
    const long n = P.size();
    Matrix R(n, n);
    for (long x = 0; x < n; ++x)
        for (long y = 0; y < n; ++y) R(x, y) = pi(y) * P(y, x) / pi(x);
    Tolerances loose = tol;
    loose.row_sum = 1e-9; // the reversal inherits rounding from pi
    return TransitionMatrix::validate(std::move(R), P.labels(), loose);
}

struct Reversibilizations {
    TransitionMatrix additive;       // (P + P*)/2
    TransitionMatrix multiplicative; // P* P
    double alpha;                    // sqrt of second-highest eigenvalue of P*P
};

inline Reversibilizations reversibilizations(
    const TransitionMatrix& P, const StationaryDistribution& pi,
    const Tolerances& tol = default_tolerances()) {
    if (pi.pi_min <= 0) throw ZeroStationaryMass();
    const long n = P.size();
    TransitionMatrix rev = time_reversal(P, pi, tol);
    Tolerances loose = tol;
    loose.row_sum = 1e-9;
    TransitionMatrix add = TransitionMatrix::validate(
        0.5 * (P.entries() + rev.entries()), P.labels(), loose);
    TransitionMatrix mult = TransitionMatrix::validate(
        rev.entries() * P.entries(), P.labels(), loose);

    double alpha = 0.0;
    if (n >= 2) {
        // P*P is reversible w.r.t. pi, so symmetrize and use the
        // self-adjoint solver
        Vector d = pi.weights.cwiseSqrt();
        Matrix S = d.asDiagonal() * mult.entries() * d.cwiseInverse().asDiagonal();
        S = 0.5 * (S + S.transpose());
        Eigen::SelfAdjointEigenSolver<Matrix> es(S);
        if (es.info() != Eigen::Success) throw EigensolverFailure();
        double second = es.eigenvalues()(n - 2); // sorted increasing
        alpha = std::sqrt(std::clamp(second, 0.0, 1.0));
    }
    return Reversibilizations{std::move(add), std::move(mult), alpha};
}

} // namespace mixbound

#endif
