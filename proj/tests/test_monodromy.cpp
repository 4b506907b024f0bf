#include <qstokes/monodromy.hpp>

#include "golden_data.hpp"

#include <catch2/catch_amalgamated.hpp>

#include <random>

using namespace qstokes;

TEST_CASE("reflection matrices") {
    const MonodromyGenerators g3(3);
    QMat r1 = QMat::identity(3);
    r1(0, 0) = -1;
    r1(0, 1) = 3;
    r1(0, 2) = 3;
    CHECK(g3.r[0] == r1);
    for (int k = 3; k <= 30; ++k) {
        const MonodromyGenerators g(k);
        for (int j = 0; j < k; ++j) {
            CHECK(g.r[j] * g.r[j] == QMat::identity(k));
            // differs from the identity only in row j
            for (int i = 0; i < k; ++i)
                for (int c = 0; c < k; ++c)
                    if (i != j) CHECK(g.r[j](i, c) == (i == c ? 1 : 0));
        }
    }
    // k = 5 row check against -2G
    const MonodromyGenerators g5(5);
    const GramData gram = gram_from_stokes(build_S(5));
    for (int c = 0; c < 5; ++c)
        CHECK(g5.r[1](1, c) == (c == 1 ? Rat(-1) : Rat(-2) * gram.g(1, c)));
}

TEST_CASE("relation lists for k = 3..7") {
    for (int k = 3; k <= 7; ++k) {
        for (const RelationCheck& rel : verify_relations(k)) {
            INFO("k=" << k << " " << rel.name);
            CHECK(rel.holds);
        }
    }
}

TEST_CASE("universal relations beyond the listed range") {
    for (int k : {8, 9, 12}) {
        for (const RelationCheck& rel : verify_relations(k)) {
            INFO("k=" << k << " " << rel.name);
            if (rel.asserted) CHECK(rel.holds);
        }
    }
}

TEST_CASE("reduced representation") {
    const golden::Table t4 = golden::load(4);
    const golden::Table t6 = golden::load(6);
    for (int k : {4, 6}) {
        const ReducedRepresentation red = reduced_representation(k);
        // t matches the table block (the table stores the (k)x(k) matrix
        // with the invariant coordinate appended)
        const IMat t1 = (k == 4 ? t4 : t6).at("T1");
        for (int i = 0; i + 1 < k; ++i)
            for (int j = 0; j + 1 < k; ++j) CHECK(red.t(i, j) == Rat(t1(i, j)));
        for (const QMat& r : red.r) CHECK(r * r == QMat::identity(k - 1));
        CHECK((red.t * red.r[0]).pow(static_cast<unsigned long>(k)) == QMat::identity(k - 1));
    }
    // k = 4 reduced r_1 row: the sign of the (1,3) entry follows G
    const ReducedRepresentation red4 = reduced_representation(4);
    CHECK(red4.r[0](0, 0) == -1);
    CHECK(red4.r[0](0, 1) == 4);
    CHECK(red4.r[0](0, 2) == -10);
    CHECK_THROWS_AS(reduced_representation(5), std::invalid_argument);
}

TEST_CASE("triangle group generators") {
    for (int k : {3, 4, 7}) {
        const auto [x, y] = triangle_generators(k);
        // X^2 = id and Y^k = id in PSL(2, R)
        const MoebiusMap id{1, 0, 0, 1};
        CHECK(x.compose(x).proportional_to(id, 1e-12));
        MoebiusMap yk = id;
        for (int i = 0; i < k; ++i) yk = yk.compose(y);
        CHECK(yk.proportional_to(id, 1e-12));
        // numerically on sample points
        std::mt19937 rng(5);
        std::uniform_real_distribution<double> re(-2, 2), im(0.2, 2.0);
        for (int t = 0; t < 10; ++t) {
            const std::complex<double> tau(re(rng), im(rng));
            CHECK(std::abs(x(x(tau)) - tau) < 1e-12);
            std::complex<double> w = tau;
            for (int i = 0; i < k; ++i) w = y(w);
            CHECK(std::abs(w - tau) < 1e-9);
        }
    }
    // k = 3: Y is tau -> 1/(1 - tau); k = 4: tau -> 1/(sqrt 2 - tau)
    const auto y3 = triangle_generators(3).second;
    CHECK(std::abs(y3(std::complex<double>(0.3, 0.7)) -
                   1.0 / (1.0 - std::complex<double>(0.3, 0.7))) < 1e-14);
    const auto y4 = triangle_generators(4).second;
    CHECK(std::abs(y4(std::complex<double>(0.3, 0.7)) -
                   1.0 / (std::sqrt(2.0) - std::complex<double>(0.3, 0.7))) < 1e-14);
}

TEST_CASE("triangle identification for k = 3 and 4") {
    std::mt19937 rng(11);
    std::uniform_real_distribution<double> re(-2, 2), im(0.2, 2.5);
    std::vector<std::complex<double>> samples;
    for (int t = 0; t < 25; ++t) samples.emplace_back(re(rng), im(rng));
    samples[0] = {0, 1};        // tau = i
    samples[1] = {1, 2};        // tau = 1 + 2i
    const Theorem3Report r3 = theorem3_check(3, samples, 1.0);
    CHECK(r3.max_identity_error < 1e-10);
    CHECK(r3.max_quadratic_error < 1e-10);
    const Theorem3Report r4 = theorem3_check(4, samples, 2.0);
    CHECK(r4.max_identity_error < 1e-10);
    CHECK(r4.max_quadratic_error < 1e-10);
}
