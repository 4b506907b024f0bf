#include <qstokes/stokes.hpp>

#include "golden_data.hpp"

#include <catch2/catch_amalgamated.hpp>

using namespace qstokes;

TEST_CASE("problem invariants") {
    for (int k = 3; k <= 12; ++k) {
        const StokesProblem p(k);
        Rat sum(0);
        for (const Rat& m : p.mu_hat) sum += m;
        CHECK(sum == 0);
        // eta mu + mu eta = 0 with mu diagonal
        QMat mu(k);
        for (int i = 0; i < k; ++i) mu(i, i) = p.mu_hat[i];
        const QMat eta = to_rational(p.eta);
        CHECK(eta * mu + mu * eta == QMat(k));
        CHECK(p.nilpotent_r.pow(k) == IMat(k));
        CHECK(p.nilpotent_r.pow(k - 1) != IMat(k));
    }
}

TEST_CASE("factors, T, S against the tables") {
    for (int k = 3; k <= 10; ++k) {
        const golden::Table t = golden::load(k);
        CHECK(stokes_factor_k2(k) == t.at("K_k2"));
        if (t.has("K_k3")) CHECK(stokes_factor_k3(k) == t.at("K_k3"));
        CHECK(build_T(k) == t.at("T"));
        CHECK(build_S(k) == t.at("S"));
        if (t.has("P")) CHECK(lex_permutation(k) == t.at("P"));
        if (t.has("S_upper")) CHECK(upper_S(k) == t.at("S_upper"));
        // not listed for every k; derived from the listed P and S
        CHECK(lex_permutation(k) * t.at("S") * inverse(lex_permutation(k)) == upper_S(k));
    }
}

TEST_CASE("k = 3 factor family matches the table pair") {
    const golden::Table t = golden::load(3);
    const auto ks = all_stokes_factors(3);
    CHECK(ks[0] == t.at("K13"));
    CHECK(ks[1] == t.at("K12"));
    CHECK(ks[2] == t.at("K_k2"));
    // closed form = K_13 K_12 K_32
    CHECK(build_S(3) == t.at("K13") * t.at("K12") * t.at("K_k2"));
}

TEST_CASE("T_F shape") {
    const IMat tf = build_TF(3);
    IMat want(3);
    want(0, 2) = 1;
    want(1, 0) = -1;
    want(2, 1) = -1;
    CHECK(tf == want);
    CHECK(inverse(build_TF(4)) * build_TF(4) == IMat::identity(4));
}

TEST_CASE("factor product equals S for k = 3..30") {
    for (int k = 3; k <= 30; ++k) {
        const auto ks = all_stokes_factors(k);
        IMat prod = IMat::identity(k);
        for (const IMat& f : ks) prod = prod * f;
        CHECK(prod == build_S(k));
        for (const IMat& f : ks) CHECK(det(f) == 1);
    }
}

TEST_CASE("factor conjugation relation") {
    for (int k : {5, 8}) {
        const auto ks = all_stokes_factors(k);
        const IMat tf = build_TF(k);
        const IMat tfi = inverse(tf);
        for (int m = 0; m + 2 <= k - 1; ++m) CHECK(ks[m + 2] == tfi * ks[m] * tf);
    }
}

TEST_CASE("both closed forms agree for k = 3..20") {
    for (int k = 3; k <= 20; ++k) {
        const auto ks = all_stokes_factors(k);
        const IMat tf = build_TF(k);
        const IMat tfi = inverse(tf);
        IMat f1(0), f2(0);
        if (k % 2 == 0) {
            const auto h = static_cast<unsigned long>(k / 2);
            f1 = (ks[0] * ks[1] * tfi).pow(h) * tf.pow(h);
            f2 = tf.pow(h) * (tfi * ks[k - 2] * ks[k - 1]).pow(h);
        } else {
            const auto h = static_cast<unsigned long>((k - 1) / 2);
            f1 = (ks[0] * ks[1] * tfi).pow(h) * ks[0] * tf.pow(h);
            f2 = tf.pow(h) * ks[k - 1] * (tfi * ks[k - 2] * ks[k - 1]).pow(h);
        }
        CHECK(f1 == build_S(k));
        CHECK(f2 == build_S(k));
    }
}

TEST_CASE("transposed factor pairs") {
    // K_{ji} = (K_{ij}^{-1})^T for the constructed pairs: with the ray
    // labelling, the factor k steps away is the transposed inverse.
    for (int k = 3; k <= 9; ++k) {
        const auto ks = all_stokes_factors(k);
        const IMat tf = build_TF(k);
        IMat conj = ks[k - 1];
        // K_{k-1+k} = T_F^{-k/2...}: extend the family by conjugation
        // K_{m+2p} = T_F^{-p} K_m T_F^p to reach the opposite ray.
        std::vector<IMat> ext = ks;
        const IMat tfi = inverse(tf);
        for (int m = k; m < 2 * k; ++m) ext.push_back(tfi * ext[m - 2] * tf);
        for (int m = 0; m < k; ++m)
            CHECK(ext[m + k] == inverse(ext[m]).transpose());
    }
}

TEST_CASE("corollary: T^k = (-1)^(k-1) S^-1 S^T for k = 3..30") {
    for (int k = 3; k <= 30; ++k) {
        const IMat s = build_S(k);
        IMat rhs = inverse(s) * s.transpose();
        if (k % 2 == 0) rhs = -rhs;
        CHECK(build_T(k).pow(static_cast<unsigned long>(k)) == rhs);
    }
}

TEST_CASE("unit column of S") {
    CHECK(unit_column_index(4) == 3);
    CHECK(unit_column_index(7) == 4);
    CHECK(unit_column_index(3) == 2);
    for (int k = 3; k <= 30; ++k) {
        const IMat s = build_S(k);
        const int n = unit_column_index(k);
        for (int i = 1; i <= k; ++i) CHECK(s(i - 1, n - 1) == (i == n ? 1 : 0));
    }
}

TEST_CASE("S unimodular, S_upper unitriangular") {
    for (int k = 3; k <= 30; ++k) {
        CHECK(det(build_S(k)) == 1);
        const IMat su = upper_S(k);
        for (int i = 0; i < k; ++i) {
            CHECK(su(i, i) == 1);
            for (int j = 0; j < i; ++j) CHECK(su(i, j) == 0);
        }
    }
}

TEST_CASE("stokes rays") {
    const RayDiagram d3 = stokes_rays(3);
    // R_12 at -pi/3
    bool found = false;
    for (const Ray& r : d3.rays)
        if (r.r == 1 && r.s == 2) {
            CHECK(r.q == Rat(-1, 3));
            found = true;
        }
    CHECK(found);
    // rays coincide when r+s = p+q (r<s)
    const RayDiagram d7 = stokes_rays(7);
    for (const Ray& a : d7.rays)
        for (const Ray& b : d7.rays)
            if (a.r < a.s && b.r < b.s && a.r + a.s == b.r + b.s) CHECK(a.q == b.q);
    // opposite rays differ by pi
    for (const Ray& a : d7.rays)
        for (const Ray& b : d7.rays)
            if (a.r == b.s && a.s == b.r && a.r < a.s) {
                Rat diff = a.q - b.q;
                CHECK((diff == 1 || diff == -1));
            }
    // Im t2 = 2 pi rotates the k = 4 diagram by -pi/2
    const RayDiagram d4a = stokes_rays(4, 0.0);
    const RayDiagram d4b = stokes_rays(4, 2 * 3.14159265358979323846);
    for (std::size_t i = 0; i < d4a.rays.size(); ++i) {
        double rotated = d4a.angle_radians(d4a.rays[i]) - 3.14159265358979323846 / 2;
        while (rotated <= -3.14159265358979323846) rotated += 2 * 3.14159265358979323846;
        CHECK(std::abs(rotated - d4b.angle_radians(d4b.rays[i])) < 1e-12);
    }
    // no ray lies on the admissible line (either direction)
    for (int k = 3; k <= 12; ++k) {
        const RayDiagram d = stokes_rays(k);
        for (const Ray& r : d.rays) {
            CHECK(r.q != d.epsilon_over_pi);
            CHECK(r.q != d.epsilon_over_pi - 1);
        }
    }
}
