#include <catch2/catch_amalgamated.hpp>

#include "mixbound/bounds.hpp"
#include "mixbound/distances.hpp"
#include "mixbound/duality.hpp"
#include "mixbound/example_chains.hpp"
#include "support.hpp"

using namespace mixbound;
namespace ts = mixbound::testsupport;

TEST_CASE("build_pure_birth materialization") {
    PureBirthChain q = build_pure_birth({0.3, 0.7});
    TransitionMatrix Q = to_transition_matrix(q);
    Matrix expected(3, 3);
    expected << 0.3, 0.7, 0, 0, 0.7, 0.3, 0, 0, 1;
    // 1 - 0.7 is one ulp away from the 0.3 literal
    CHECK((Q.entries() - expected).cwiseAbs().maxCoeff() < 1e-15);

    TransitionMatrix one = to_transition_matrix(build_pure_birth({}));
    CHECK(one.size() == 1);
    CHECK(one(0, 0) == 1.0);

    // constant betas give the pure birth example chain
    TransitionMatrix Q2 = to_transition_matrix(build_pure_birth({0.5, 0.5, 0.5}));
    CHECK((Q2.entries() - pure_birth(4, 0.5).matrix.entries())
              .cwiseAbs()
              .maxCoeff() == 0.0);

    CHECK_THROWS_AS(build_pure_birth({0.7, 0.3}), NotSorted);
    CHECK_THROWS_AS(build_pure_birth({0.5, 1.0}), BetaOutOfRange);
}

TEST_CASE("link rows of the skip-free chain are uniform prefixes") {
    const long N = 5;
    ExampleChain ex = skip_free(N);
    StationaryDistribution pi = stationary_distribution(ex.matrix);
    // the chain is defective (Jordan block at 0), so the closed-form betas
    // go in explicitly
    LinkMatrix link = build_link(ex.matrix, pi, RowVector::Unit(N, 0),
                                 std::vector<double>(N - 1, 0.0));
    for (long j = 0; j < N; ++j)
        for (long x = 0; x < N; ++x) {
            double expected = x <= j ? 1.0 / (j + 1) : 0.0;
            CHECK(link.rows(j, x) == Catch::Approx(expected).margin(1e-9));
        }
}

TEST_CASE("link from mu = pi has every row pi") {
    TransitionMatrix P = ts::random_lazy_reversible(6);
    StationaryDistribution pi = stationary_distribution(P);
    LinkMatrix link = build_link(P, pi, pi.weights.transpose());
    for (long j = 0; j < 6; ++j)
        CHECK((link.rows.row(j).transpose() - pi.weights).cwiseAbs().maxCoeff() <
              1e-8);
}

TEST_CASE("link construction rejects complex spectra") {
    Matrix M = Matrix::Zero(3, 3);
    M(0, 1) = M(1, 2) = M(2, 0) = 1.0; // cube roots of unity
    TransitionMatrix P = TransitionMatrix::validate(M);
    StationaryDistribution pi = stationary_distribution(P);
    CHECK_THROWS_AS(build_link(P, pi, RowVector::Unit(3, 0)), NegativeSpectrum);
}

TEST_CASE("intertwining residual of constructed links is tiny") {
    for (int rep = 0; rep < 20; ++rep) {
        long n = 2 + static_cast<long>(ts::rng()() % 7);
        TransitionMatrix P = ts::random_lazy_reversible(n);
        StationaryDistribution pi = stationary_distribution(P);
        RowVector mu = ts::random_distribution(n);
        LinkMatrix link = build_link(P, pi, mu);
        TransitionMatrix Q = to_transition_matrix(link.dual);
        CHECK(verify_intertwining(link, P, Q) < 1e-8);
        // first row is mu, last row is pi
        CHECK((link.rows.row(0) - mu).cwiseAbs().maxCoeff() < 1e-12);
        CHECK((link.rows.row(n - 1).transpose() - pi.weights).cwiseAbs().maxCoeff() <
              1e-8);
    }
}

TEST_CASE("corrupting the link is visible in the residual") {
    TransitionMatrix P = ts::random_lazy_reversible(5);
    StationaryDistribution pi = stationary_distribution(P);
    LinkMatrix link = build_link(P, pi, RowVector::Unit(5, 0));
    TransitionMatrix Q = to_transition_matrix(link.dual);
    link.rows(2, 3) += 0.1;
    CHECK(verify_intertwining(link, P, Q) >= 0.01);
}

TEST_CASE("recursion agrees with the product form") {
    for (int rep = 0; rep < 20; ++rep) {
        long n = 3 + static_cast<long>(ts::rng()() % 5);
        TransitionMatrix P = ts::random_lazy_reversible(n);
        StationaryDistribution pi = stationary_distribution(P);
        RowVector mu = ts::random_distribution(n);
        LinkMatrix link = build_link(P, pi, mu);
        // independent evaluation: mu_j = mu prod_{i<j} (P - beta_i I)/(1 - beta_i)
        RowVector cur = mu;
        for (long j = 0; j < n; ++j) {
            CHECK((link.rows.row(j) - cur).cwiseAbs().maxCoeff() < 1e-9);
            if (j + 1 < n) {
                double b = link.dual.betas[j];
                cur = cur * ((P.entries() - b * Matrix::Identity(n, n)) / (1.0 - b));
            }
        }
    }
}

TEST_CASE("dual absorption profile equals the negative binomial CDF") {
    const long N = 6;
    const double beta = 0.4;
    PureBirthChain q = build_pure_birth(std::vector<double>(N - 1, beta));
    std::vector<double> absorb = dual_absorption_profile(q, 60);
    for (long t = 0; t <= 60; ++t) {
        // sum of N-1 iid geometrics <= t iff Binom(t, 1-beta) >= N-1
        double cdf = 1.0 - ts::binomial_cdf(t, 1.0 - beta, N - 2);
        CHECK(absorb[t] == Catch::Approx(cdf).margin(1e-10));
    }

    CHECK(dual_absorption_profile(build_pure_birth({}), 5) ==
          std::vector<double>(6, 1.0));
}

TEST_CASE("pure birth sep profile is exactly the dual tail") {
    const long N = 6;
    ExampleChain ex = pure_birth(N, 0.5);
    StationaryDistribution pi = stationary_distribution(ex.matrix);
    DistanceProfile prof =
        distance_profile_from(ex.matrix, pi, RowVector::Unit(N, 0), 100);
    PureBirthChain q = build_pure_birth(std::vector<double>(N - 1, 0.5));
    std::vector<double> absorb = dual_absorption_profile(q, 100);
    for (long t = 0; t <= prof.horizon; ++t)
        CHECK(prof.sep[t] == Catch::Approx(1.0 - absorb[t]).margin(1e-12));
}

TEST_CASE("separation is dominated by the dual tail on random lazy chains") {
    for (int rep = 0; rep < 20; ++rep) {
        long n = 2 + static_cast<long>(ts::rng()() % 7);
        TransitionMatrix P = ts::random_lazy_reversible(n);
        StationaryDistribution pi = stationary_distribution(P);
        RowVector mu = ts::random_distribution(n);
        LinkMatrix link = build_link(P, pi, mu);
        std::vector<double> absorb = dual_absorption_profile(link.dual, 100);
        DistanceProfile prof = distance_profile_from(P, pi, mu, 100);
        for (long t = 0; t <= prof.horizon; ++t)
            CHECK(prof.sep[t] <= 1.0 - absorb[t] + 1e-10);
    }
}

TEST_CASE("sharpness check on the sticky walk") {
    SharpnessReport rep = birth_death_sharpness_check(sticky_walk(6).matrix, 150);
    CHECK(rep.identity_residual < 1e-9);
    CHECK(rep.bracket_holds);
    CHECK(rep.pi_last == Catch::Approx(0.5).margin(1e-12));
    CHECK(rep.worst_ratio <= 2.0 + 1e-6);
}

TEST_CASE("sharpness check is an equality chain for the pure birth chain") {
    SharpnessReport rep = birth_death_sharpness_check(pure_birth(6, 0.5).matrix, 100);
    CHECK(rep.identity_residual < 1e-9);
    CHECK(rep.bracket_holds);
    CHECK(rep.worst_ratio <= 1.0 + 1e-9); // pi(N) = 1: all terms equal
}

TEST_CASE("sharpness check on an unbiased lazy birth-death walk") {
    const long N = 5;
    Matrix M = Matrix::Zero(N, N);
    M(0, 0) = 0.75;
    M(0, 1) = 0.25;
    for (long i = 1; i + 1 < N; ++i) {
        M(i, i - 1) = 0.25;
        M(i, i) = 0.5;
        M(i, i + 1) = 0.25;
    }
    M(N - 1, N - 2) = 0.25;
    M(N - 1, N - 1) = 0.75;
    SharpnessReport rep =
        birth_death_sharpness_check(TransitionMatrix::validate(M), 200);
    CHECK(rep.identity_residual < 1e-9);
    CHECK(rep.bracket_holds);
}

TEST_CASE("sharpness check rejects non-skip-free input") {
    CHECK_THROWS_AS(birth_death_sharpness_check(hypercube(2).matrix, 10),
                    NotSkipFree);
}

TEST_CASE("link suite invariants on 200 random lazy reversible chains") {
    for (int rep = 0; rep < 200; ++rep) {
        long n = 2 + static_cast<long>(ts::rng()() % 7);
        TransitionMatrix P = ts::random_lazy_reversible(n);
        StationaryDistribution pi = stationary_distribution(P);
        RowVector mu = ts::random_distribution(n);
        LinkMatrix link = build_link(P, pi, mu);
        REQUIRE(link.rows.minCoeff() >= -1e-9);
        for (long j = 0; j < n; ++j)
            REQUIRE(std::abs(link.rows.row(j).sum() - 1.0) <= 1e-9);
        TransitionMatrix Q = to_transition_matrix(link.dual);
        REQUIRE(verify_intertwining(link, P, Q) < 1e-8);
    }
}
