#ifndef MIXBOUND_DUALITY_HPP
#define MIXBOUND_DUALITY_HPP

#include <Eigen/Dense>
#include <algorithm>
#include <cmath>
#include <vector>

#include "mixbound/bounds.hpp"
#include "mixbound/chain_analysis.hpp"
#include "mixbound/distances.hpp"
#include "mixbound/transition_matrix.hpp"

namespace mixbound {

/// The bidiagonal dual chain, stored as its holding probabilities
/// beta_1 <= ... <= beta_{N-1} (beta_N = 1 implied).
struct PureBirthChain {
    std::vector<double> betas;

    long size() const { return static_cast<long>(betas.size()) + 1; }
};

/// Builds the pure-birth chain, checking that the betas are weakly
/// increasing in [0,1).
inline PureBirthChain build_pure_birth(std::vector<double> betas) {
    for (std::size_t j = 0; j < betas.size(); ++j) {
        if (betas[j] < 0 || betas[j] >= 1) throw BetaOutOfRange(betas[j]);
        if (j > 0 && betas[j] < betas[j - 1]) throw NotSorted();
    }
    return PureBirthChain{std::move(betas)};
}

/// Materializes Q: Q(j,j) = beta_j, Q(j,j+1) = 1 - beta_j, Q(N,N) = 1.
inline TransitionMatrix to_transition_matrix(const PureBirthChain& Q) {
    const long n = Q.size();
    Matrix M = Matrix::Zero(n, n);
    for (long j = 0; j + 1 < n; ++j) {
        M(j, j) = Q.betas[j];
        M(j, j + 1) = 1.0 - Q.betas[j];
    }
    M(n - 1, n - 1) = 1.0;
    return TransitionMatrix::validate(std::move(M));
}

/// The intertwining link: row j is the local equilibrium mu_j; row 1 is the
/// initial distribution, row N is pi, and Lambda P = Q Lambda.
struct LinkMatrix {
    Matrix rows;
    PureBirthChain dual;
};

/// Absorption probabilities Q^t(1,N) for t = 0..t_max, by the forward
/// recursion on delta_1 Q^t. 1 - profile[t] is the sst tail.
inline std::vector<double> dual_absorption_profile(const PureBirthChain& Q,
                                                   long t_max) {
    const long n = Q.size();
    std::vector<double> v(n, 0.0), w(n), out;
    v[0] = 1.0;
    out.reserve(t_max + 1);
    out.push_back(n == 1 ? 1.0 : v[n - 1]);
    for (long t = 1; t <= t_max; ++t) {
        for (long j = 0; j < n; ++j) {
            double hold = j < n - 1 ? Q.betas[j] : 1.0;
            w[j] = v[j] * hold;
            if (j > 0) w[j] += v[j - 1] * (1.0 - Q.betas[j - 1]);
        }
        v.swap(w);
        out.push_back(v[n - 1]);
    }
    return out;
}

/// Builds the link from trusted holding probabilities (the sorted non-unit
/// eigenvalues of P) by the forward recursion
/// mu_{j+1} = (mu_j P - beta_j mu_j)/(1 - beta_j), equivalent to the
/// product of (P - beta_i I)/(1 - beta_i) factors. Nonreversible inputs
/// can surface NegativeLinkEntry, which is diagnostic rather than
/// recoverable. Defective chains with a known closed-form spectrum (the
/// Jordan-block examples) must come through this overload: a dense
/// eigensolver scatters a multiple eigenvalue too far to use.
inline LinkMatrix build_link(const TransitionMatrix& P,
                             const StationaryDistribution& pi,
                             const RowVector& mu, std::vector<double> betas,
                             const Tolerances& tol = default_tolerances()) {
    const long n = P.size();
    if (mu.size() != n) throw DimensionMismatch();
    if (static_cast<long>(betas.size()) != n - 1) throw DimensionMismatch();
    for (std::size_t j = 0; j < betas.size(); ++j) {
        if (betas[j] < -tol.eig) throw NegativeSpectrum();
        if (betas[j] >= 1.0 - tol.eig) throw DegenerateGap();
        if (j > 0 && betas[j] < betas[j - 1]) throw NotSorted();
        betas[j] = std::clamp(betas[j], 0.0, 1.0);
    }

    Matrix L(n, n);
    RowVector cur = mu;
    for (long j = 0; j < n; ++j) {
        for (long x = 0; x < n; ++x) {
            double v = cur(x);
            if (v < 0) {
                if (v < -tol.link) throw NegativeLinkEntry(j, x, v);
                v = 0.0;
            }
            L(j, x) = v;
        }
        double s = L.row(j).sum();
        if (std::abs(s - 1.0) > tol.link) throw NegativeLinkEntry(j, -1, s - 1.0);
        L.row(j) /= s;
        if (j + 1 < n)
            cur = (cur * P.entries() - betas[j] * cur) / (1.0 - betas[j]);
    }

    if ((L.row(n - 1).transpose() - pi.weights).cwiseAbs().maxCoeff() > 1e-8)
        throw NegativeSpectrum(); // mu_N failed to converge to pi

    return LinkMatrix{std::move(L), build_pure_birth(std::move(betas))};
}

/// Convenience overload: derives the betas from the computed spectrum,
/// which must be real and nonnegative within tol.eig.
inline LinkMatrix build_link(const TransitionMatrix& P,
                             const StationaryDistribution& pi,
                             const RowVector& mu,
                             const Tolerances& tol = default_tolerances()) {
    Spectrum spec = spectrum(P, tol);
    for (const auto& z : spec.eigenvalues)
        if (std::abs(z.imag()) > tol.eig || z.real() < -tol.eig)
            throw NegativeSpectrum();
    return build_link(P, pi, mu, spec.sorted_betas(tol.eig), tol);
}

/// Max-norm residual of the intertwining identity Lambda P = Q Lambda.
inline double verify_intertwining(const LinkMatrix& link,
                                  const TransitionMatrix& P,
                                  const TransitionMatrix& Q) {
    if (link.rows.cols() != P.size() || link.rows.rows() != Q.size())
        throw DimensionMismatch();
    return (link.rows * P.entries() - Q.entries() * link.rows)
        .cwiseAbs()
        .maxCoeff();
}

struct SharpnessReport {
    /// max_t |P^t(1,N) - Q^t(1,N) pi(N)|
    double identity_residual = 0.0;
    /// worst (1 - Q^t(1,N)) / tv(t); at most 1/pi(N) when the chain of
    /// inequalities holds
    double worst_ratio = 1.0;
    bool bracket_holds = true;
    double pi_last = 0.0;
};

/// Checks, for a skip-free upward chain with nonnegative real spectrum,
/// the identity P^t(1,N) = Q^t(1,N) pi(N) and the bracket
/// pi(N)(1 - Q^t(1,N)) <= |P^t(1,.) - pi|_TV <= 1 - Q^t(1,N)
/// at every t <= t_max.
inline SharpnessReport birth_death_sharpness_check(const TransitionMatrix& P,
                                                   long t_max,
                                                   std::vector<double> betas = {},
                                                   const Tolerances& tol =
                                                       default_tolerances()) {
    const long n = P.size();
    for (long i = 0; i < n; ++i)
        for (long k = i + 2; k < n; ++k)
            if (P(i, k) > 1e-14) throw NotSkipFree();

    StationaryDistribution pi = stationary_distribution(P, tol);
    LinkMatrix link =
        betas.empty() && n > 1
            ? build_link(P, pi, RowVector::Unit(n, 0), tol)
            : build_link(P, pi, RowVector::Unit(n, 0), std::move(betas), tol);
    std::vector<double> absorb = dual_absorption_profile(link.dual, t_max);

    SharpnessReport rep;
    rep.pi_last = pi(n - 1);
    RowVector row = RowVector::Unit(n, 0);
    for (long t = 0; t <= t_max; ++t) {
        double qt = absorb[t];
        rep.identity_residual = std::max(
            rep.identity_residual, std::abs(row(n - 1) - qt * pi(n - 1)));
        double tv = 0.5 * (row - pi.weights.transpose()).cwiseAbs().sum();
        double upper = 1.0 - qt;
        double lower = pi(n - 1) * (1.0 - qt);
        if (tv > upper + 1e-9 || tv < lower - 1e-9) rep.bracket_holds = false;
        if (tv > 1e-13) rep.worst_ratio = std::max(rep.worst_ratio, upper / tv);
        row = row * P.entries();
    }
    return rep;
}

} // namespace mixbound

#endif
