#include <qstokes/gram.hpp>

#include <catch2/catch_amalgamated.hpp>

using namespace qstokes;

TEST_CASE("chi matrices") {
    IMat want(3);
    want = IMat::identity(3);
    want(0, 1) = 3;
    want(0, 2) = 6;
    want(1, 2) = 3;
    CHECK(gram_chi(2) == want);
    IMat w1 = IMat::identity(2);
    w1(0, 1) = 2;
    CHECK(gram_chi(1) == w1);
    const IMat chi3 = gram_chi(3);
    CHECK(chi3(0, 1) == 4);
    CHECK(chi3(0, 2) == 10);
    CHECK(chi3(0, 3) == 20);
    for (int d = 1; d <= 30; ++d) CHECK(det(gram_chi(d)) == 1);
}

TEST_CASE("chi inverse") {
    IMat want = IMat::identity(3);
    want(0, 1) = -3;
    want(0, 2) = 3;
    want(1, 2) = -3;
    CHECK(gram_chi_inverse(2) == want);
    IMat w1 = IMat::identity(2);
    w1(0, 1) = -2;
    CHECK(gram_chi_inverse(1) == w1);
    CHECK(gram_chi_inverse(9) * gram_chi(9) == IMat::identity(10));
}

TEST_CASE("G from S") {
    const GramData g3 = gram_from_stokes(build_S(3));
    CHECK(g3.g(0, 1) == Rat(-3, 2));
    CHECK(g3.g(0, 2) == Rat(-3, 2));
    CHECK(g3.g(1, 2) == Rat(3, 2));
    CHECK(g3.g(0, 0) == 1);
    CHECK(g3.rank == 3);
    CHECK(!g3.kernel.has_value());

    const GramData g4 = gram_from_stokes(build_S(4));
    CHECK(g4.rank == 3);
    CHECK(det(g4.g) == 0);
    REQUIRE(g4.kernel.has_value());

    const GramData gid = gram_from_stokes(IMat::identity(5));
    CHECK(gid.g == QMat::identity(5));
}

TEST_CASE("rank and kernel dimension for k = 3..30") {
    for (int k = 3; k <= 30; ++k) {
        const GramData g = gram_from_stokes(build_S(k));
        QMat two_g(g.g.size());
        for (std::size_t i = 0; i < g.g.size(); ++i)
            for (std::size_t j = 0; j < g.g.size(); ++j) two_g(i, j) = 2 * g.g(i, j);
        if (k % 2) {
            CHECK(det(two_g) != 0);
            CHECK(g.rank == static_cast<std::size_t>(k));
        } else {
            CHECK(g.rank == static_cast<std::size_t>(k - 1));
            CHECK(g.kernel.has_value());
        }
        // diagonal normalization
        for (std::size_t i = 0; i < g.g.size(); ++i) CHECK(g.g(i, i) == 1);
    }
}

TEST_CASE("conjugation consistency of G") {
    for (int k : {3, 4, 5, 6}) {
        const IMat s = build_S(k);
        SignMatrix sm;
        for (int i = 0; i < k; ++i) sm.diag.push_back(i % 2 ? -1 : 1);
        const GramData g = gram_from_stokes(s);
        const GramData gc = gram_from_stokes(sm.conjugate(s));
        const QMat d = to_rational(sm.matrix());
        CHECK(gc.g == d * g.g * d);
    }
}

TEST_CASE("main theorem for k = 3..10 and k = 20") {
    for (int k = 3; k <= 10; ++k) {
        const MainTheoremReport rep = verify_main_theorem(k);
        CHECK(rep.canonical_is_binomial);
        CHECK(rep.alternating_is_chi_inverse);
        CHECK(rep.inverse_route_agrees);
        CHECK(rep.chi_braid_self_inverse);
    }
    CHECK(verify_main_theorem(20).all());
}
