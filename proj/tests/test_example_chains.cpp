#include <catch2/catch_amalgamated.hpp>

#include <algorithm>
#include <complex>

#include "mixbound/chain_analysis.hpp"
#include "mixbound/example_chains.hpp"
#include "support.hpp"

using namespace mixbound;

namespace {

// multiset comparison of a claimed spectrum against the computed one
void check_spectrum_multiset(const ExampleChain& ex, double tol = 1e-8) {
    REQUIRE(ex.known_spectrum.has_value());
    Spectrum spec = spectrum(ex.matrix);
    std::vector<double> got, want;
    for (const auto& z : spec.eigenvalues) {
        CHECK(std::abs(z.imag()) < tol);
        got.push_back(z.real());
    }
    for (const auto& z : *ex.known_spectrum) want.push_back(z.real());
    std::sort(got.begin(), got.end());
    std::sort(want.begin(), want.end());
    REQUIRE(got.size() == want.size());
    for (std::size_t k = 0; k < got.size(); ++k)
        CHECK(got[k] == Catch::Approx(want[k]).margin(tol));
}

void check_pi(const ExampleChain& ex, double tol = 1e-10) {
    REQUIRE(ex.known_pi.has_value());
    // pi P = pi suffices; absorbing examples have kernel mass the solver
    // also finds
    RowVector pi = ex.known_pi->transpose();
    CHECK((pi * ex.matrix.entries() - pi).cwiseAbs().maxCoeff() < tol);
    CHECK(pi.sum() == Catch::Approx(1.0).margin(tol));
}

} // namespace

TEST_CASE("pure birth chain ground truths") {
    for (long N : {1L, 2L, 5L})
        for (double beta : {0.0, 0.3, 0.9}) {
            ExampleChain ex = pure_birth(N, beta);
            check_pi(ex);
            // a dense eigensolver splatters the Jordan block at beta by
            // roughly eps^{1/(N-1)}, so the comparison is loose
            check_spectrum_multiset(ex, 1e-3);
            CHECK(ex.reversible);
        }
    CHECK_THROWS_AS(pure_birth(0, 0.5), NTooSmall);
    CHECK_THROWS_AS(pure_birth(4, 1.0), BetaOutOfRange);
    CHECK_THROWS_AS(pure_birth(4, -0.1), BetaOutOfRange);
}

TEST_CASE("biased walk ground truths") {
    for (long N : {2L, 3L, 8L, 16L}) {
        ExampleChain ex = biased_walk(N, 0.3, 0.2, 0.5);
        check_pi(ex);
        check_spectrum_multiset(ex);
        CHECK(ex.reversible);
        CHECK(is_reversible(ex.matrix, stationary_distribution(ex.matrix)));
        // geometric stationary profile
        StationaryDistribution pi = stationary_distribution(ex.matrix);
        for (long i = 0; i + 1 < N; ++i)
            CHECK(pi(i + 1) / pi(i) == Catch::Approx(5.0 / 3.0).margin(1e-9));
    }
    // symmetric case: uniform pi, cosine spectrum
    ExampleChain sym = biased_walk(6, 0.25, 0.5, 0.25);
    check_pi(sym);
    check_spectrum_multiset(sym);
    CHECK_THROWS_AS(biased_walk(1, 0.3, 0.2, 0.5), NTooSmall);
    CHECK_THROWS_AS(biased_walk(4, 0.5, 0.2, 0.5), NotAProbabilityTriple);
    CHECK_THROWS_AS(biased_walk(4, -0.1, 0.6, 0.5), NotAProbabilityTriple);
}

TEST_CASE("sticky walk ground truths") {
    for (long N : {2L, 4L, 10L}) {
        ExampleChain ex = sticky_walk(N);
        check_pi(ex);
        CHECK(ex.reversible);
        StationaryDistribution pi = stationary_distribution(ex.matrix);
        CHECK(pi(N - 1) == Catch::Approx(0.5).margin(1e-10));
        CHECK(is_reversible(ex.matrix, pi));
    }
    CHECK_THROWS_AS(sticky_walk(1), NTooSmall);
}

TEST_CASE("skip-free chain ground truths") {
    for (long N : {2L, 4L, 8L}) {
        ExampleChain ex = skip_free(N);
        check_pi(ex);
        CHECK_FALSE(ex.reversible);
        // doubly stochastic: column sums are 1
        CHECK((ex.matrix.entries().colwise().sum().array() - 1.0)
                  .abs()
                  .maxCoeff() < 1e-12);
        StationaryDistribution pi = stationary_distribution(ex.matrix);
        CHECK((pi.weights.array() - 1.0 / N).abs().maxCoeff() < 1e-10);
        if (N > 2) CHECK_FALSE(is_reversible(ex.matrix, pi));
        // lazy variant
        ExampleChain lazy = skip_free(N, 0.5);
        CHECK((lazy.matrix.entries() -
               (0.5 * Matrix::Identity(N, N) + 0.5 * ex.matrix.entries()))
                  .cwiseAbs()
                  .maxCoeff() < 1e-15);
    }
    CHECK_THROWS_AS(skip_free(1), NTooSmall);
    CHECK_THROWS_AS(skip_free(4, 1.0), BetaOutOfRange);
}

TEST_CASE("hypercube walk ground truths") {
    for (long n : {1L, 2L, 4L, 6L}) {
        ExampleChain ex = hypercube(n);
        check_pi(ex);
        check_spectrum_multiset(ex);
        CHECK(ex.reversible);
        Spectrum spec = spectrum(ex.matrix);
        CHECK(spec.gap == Catch::Approx(1.0 / n).margin(1e-9));
    }
    CHECK_THROWS_AS(hypercube(0), NTooSmall);
    CHECK_THROWS_AS(hypercube(13), DimensionTooLarge);
}
