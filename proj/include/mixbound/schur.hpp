#ifndef MIXBOUND_SCHUR_HPP
#define MIXBOUND_SCHUR_HPP

#include <Eigen/Dense>
#include <algorithm>
#include <boost/multiprecision/cpp_int.hpp>
#include <complex>
#include <numeric>
#include <vector>

#include "mixbound/errors.hpp"

namespace mixbound {

using BigInt = boost::multiprecision::cpp_int;

/// Partition (b, 1^c): one row of length b plus a leg of c single boxes.
struct HookShape {
    long arm; // b >= 1
    long leg; // c >= 0
};

/// e_1..e_m of the given roots, by incrementally expanding prod (1 + x_i z).
inline std::vector<double> elementary_symmetric(const std::vector<double>& roots) {
    const std::size_t m = roots.size();
    std::vector<double> e(m + 1, 0.0);
    e[0] = 1.0;
    for (std::size_t i = 0; i < m; ++i)
        for (std::size_t k = i + 1; k >= 1; --k) e[k] += roots[i] * e[k - 1];
    return std::vector<double>(e.begin() + 1, e.end());
}

/// Same expansion over complex roots. When the multiset is closed under
/// conjugation (eigenvalues of a real matrix) the results are real; the
/// real parts are returned.
inline std::vector<double> elementary_symmetric(
    const std::vector<std::complex<double>>& roots) {
    const std::size_t m = roots.size();
    std::vector<std::complex<double>> e(m + 1, 0.0);
    e[0] = 1.0;
    for (std::size_t i = 0; i < m; ++i)
        for (std::size_t k = i + 1; k >= 1; --k) e[k] += roots[i] * e[k - 1];
    std::vector<double> out(m);
    for (std::size_t k = 0; k < m; ++k) out[k] = e[k + 1].real();
    return out;
}

/// h_0..h_kmax from e_1..e_m via the Newton-style convolution
/// h_k = sum_{i>=1} (-1)^{i-1} e_i h_{k-i}.
inline std::vector<double> complete_homogeneous_from_esym(
    const std::vector<double>& esym, long kmax) {
    const long m = static_cast<long>(esym.size());
    std::vector<double> h(kmax + 1, 0.0);
    h[0] = 1.0;
    for (long k = 1; k <= kmax; ++k) {
        double acc = 0.0;
        for (long i = 1; i <= std::min<long>(k, m); ++i)
            acc += (i % 2 == 1 ? 1.0 : -1.0) * esym[i - 1] * h[k - i];
        h[k] = acc;
    }
    return h;
}

/// Hook Schur polynomial s_{(b,1^c)} evaluated at the root multiset carried
/// by esym, without touching the roots themselves: unrolling
/// s_{(k,1^l)} = h_k e_l - s_{(k+1,1^{l-1})} down to s_{(b+c)} = h_{b+c}
/// gives s_{(b,1^c)} = sum_{i=0}^{c} (-1)^i h_{b+i} e_{c-i}.
inline double hook_schur_from_esym(const std::vector<double>& esym, long m,
                                   HookShape shape) {
    if (shape.arm < 1 || shape.leg < 0) throw IndexOutOfRange();
    if (shape.leg >= m) return 0.0; // column would exceed the alphabet
    std::vector<double> h =
        complete_homogeneous_from_esym(esym, shape.arm + shape.leg);
    double acc = 0.0;
    for (long i = 0; i <= shape.leg; ++i) {
        long eidx = shape.leg - i;
        double ev = eidx == 0 ? 1.0 : esym[eidx - 1];
        acc += (i % 2 == 0 ? 1.0 : -1.0) * h[shape.arm + i] * ev;
    }
    return acc;
}

/// Materializes the companion matrix of
/// g(x) = x^m - e_1 x^{m-1} + ... + (-1)^m e_m:
/// ones below the diagonal, C(i,m) = (-1)^{m-i} e_{m-i+1} in the last column.
inline Eigen::MatrixXd companion_matrix(const std::vector<double>& esym, long m) {
    if (m < 1 || static_cast<long>(esym.size()) < m) throw IndexOutOfRange();
    Eigen::MatrixXd C = Eigen::MatrixXd::Zero(m, m);
    for (long j = 1; j <= m - 1; ++j) C(j, j - 1) = 1.0; // C(j+1,j) = 1
    for (long i = 1; i <= m; ++i)
        C(i - 1, m - 1) = ((m - i) % 2 == 0 ? 1.0 : -1.0) * esym[m - i];
    return C;
}

/// C^t(i,j) (1-based) without powering: the small-t branch is an index
/// shift, otherwise the entry is a signed hook Schur polynomial in the
/// roots of g.
inline double companion_power_entry(const std::vector<double>& esym, long m,
                                    long t, long i, long j) {
    if (i < 1 || i > m || j < 1 || j > m || t < 0) throw IndexOutOfRange();
    const long b = t + j - m;
    if (b < 1) return i == t + j ? 1.0 : 0.0;
    double sign = (m - i) % 2 == 0 ? 1.0 : -1.0;
    return sign * hook_schur_from_esym(esym, m, HookShape{b, m - i});
}

/// The coefficients c_{t,k} = C^t(k+1,1), k = 0..N-2, that expand P^t - Pi
/// over the first N-1 powers.
inline std::vector<double> recurrence_coefficients(const std::vector<double>& esym,
                                                   long N, long t) {
    if (N < 2) throw IndexOutOfRange();
    const long m = N - 1;
    std::vector<double> c(N - 1);
    for (long k = 0; k <= N - 2; ++k)
        c[k] = companion_power_entry(esym, m, t, k + 1, 1);
    return c;
}

namespace detail {

inline BigInt big_binomial(long n, long k) {
    if (k < 0 || k > n || n < 0) return 0;
    k = std::min(k, n - k);
    BigInt num = 1;
    for (long i = 0; i < k; ++i) {
        num *= (n - i);
        num /= (i + 1);
    }
    return num;
}

} // namespace detail

/// Number of SSYT of shape (b,1^c) on {1..m}: binom(b+c-1,b-1) binom(b+m-1,b+c).
/// Vanishes for c >= m through the second binomial.
inline BigInt ssyt_count_hook(long b, long c, long m) {
    if (b < 1 || c < 0 || m < 1) throw IndexOutOfRange();
    return detail::big_binomial(b + c - 1, b - 1) *
           detail::big_binomial(b + m - 1, b + c);
}

/// A semistandard Young tableau: rows weakly increase, columns strictly
/// increase, entries in {1..m}.
struct Tableau {
    std::vector<std::vector<int>> rows;
};

struct SsytEnumeration {
    std::vector<Tableau> tableaux;
    BigInt count = 0;
    /// Schur polynomial value at `point` (sum of x^{w(T)}), when a point
    /// was supplied.
    double value = 0.0;
};

/// Exhaustive backtracking enumeration over a general partition shape.
/// An oracle, deliberately exponential: boxes <= 16 and m <= 8.
inline SsytEnumeration ssyt_enumerate(const std::vector<long>& shape, long m,
                                      const std::vector<double>& point = {}) {
    long boxes = std::accumulate(shape.begin(), shape.end(), 0L);
    if (boxes > 16 || m > 8)
        throw TooLarge("shape has " + std::to_string(boxes) + " boxes, m = " +
                       std::to_string(m));
    for (std::size_t r = 1; r < shape.size(); ++r)
        if (shape[r] > shape[r - 1] || shape[r] < 1) throw IndexOutOfRange();
    if (!point.empty() && static_cast<long>(point.size()) != m)
        throw DimensionMismatch();

    SsytEnumeration out;
    const std::size_t nrows = shape.size();
    std::vector<std::vector<int>> fill(nrows);
    for (std::size_t r = 0; r < nrows; ++r) fill[r].assign(shape[r], 0);

    // cells in row-major order
    std::vector<std::pair<std::size_t, long>> cells;
    for (std::size_t r = 0; r < nrows; ++r)
        for (long c = 0; c < shape[r]; ++c) cells.emplace_back(r, c);

    auto record = [&] {
        out.tableaux.push_back(Tableau{fill});
        out.count += 1;
        if (!point.empty()) {
            double mono = 1.0;
            for (const auto& row : fill)
                for (int v : row) mono *= point[v - 1];
            out.value += mono;
        }
    };

    auto rec = [&](auto&& self, std::size_t idx) -> void {
        if (idx == cells.size()) {
            record();
            return;
        }
        auto [r, c] = cells[idx];
        int lo = 1;
        if (c > 0) lo = std::max(lo, fill[r][c - 1]);     // weakly increasing row
        if (r > 0) lo = std::max(lo, fill[r - 1][c] + 1); // strictly increasing col
        for (int v = lo; v <= m; ++v) {
            fill[r][c] = v;
            self(self, idx + 1);
        }
        fill[r][c] = 0;
    };
    rec(rec, 0);
    return out;
}

} // namespace mixbound

#endif
