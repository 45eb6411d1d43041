#include "sltk/dims.hpp"
#include "sltk/error.hpp"

#include <doctest.h>

#include <random>

using namespace sltk::dims;

namespace {

TopologyProfile single(int l, NeckData neck, int dimY, int b1csX = 0, int q = 1) {
    TopologyProfile p;
    p.q = q;
    p.b1csX = b1csX;
    p.cones = {{l, 0, true}};
    p.necks = {neck};
    p.dimY = dimY;
    return p;
}

}  // namespace

TEST_CASE("dim I") {
    CHECK(dim_I(single(1, {1, 0, 0}, 0)) == 0);
    TopologyProfile two;
    two.b1csX = 3;
    two.cones = {{1, 0, true}, {1, 0, true}};
    two.necks = {{1, 0, 0}, {1, 0, 0}};
    CHECK(dim_I(two) == 2);
    CHECK(dim_I(single(2, {1, 0, 0}, 0, 5, 2)) == 5);
    CHECK_THROWS_AS(dim_I(single(2, {1, 0, 0}, 0, 0, 1)), sltk::InconsistentProfileError);
}

TEST_CASE("AC moduli of single necks") {
    for (int m = 3; m <= 8; ++m) {
        auto hl = ac_moduli_dims({1, m - 2, 0}, 1);
        CHECK(hl.dimM0 == m - 2);
        CHECK(hl.dimZ == 0);
    }
    auto lawlor = ac_moduli_dims({1, 0, 1}, 2);
    CHECK(lawlor.dimZ == 1);
    CHECK(lawlor.dimY == 0);
    CHECK(rate_lambda_dims({1, 0, 1}, {RateRegime::Negative, 0, false}) == 1);
    CHECK(ac_moduli_dims({3, 4, 0}, 3).dimZ == 0);
    CHECK_THROWS_AS(ac_moduli_dims({1, 0, 2}, 1), sltk::InconsistentProfileError);
}

TEST_CASE("dim Z and b1(N)") {
    CHECK(dim_Z(single(2, {1, 0, 1}, 0, 1)) == 1);
    CHECK(dim_Z(single(1, {1, 1, 0}, 0)) == 0);
    TopologyProfile two;
    two.q = 2;
    two.b1csX = 2;
    two.cones = {{2, 0, false}, {2, 0, false}};
    two.necks = {{1, 0, 1}, {1, 0, 1}};
    CHECK(dim_Z(two) == 1);

    for (int b : {0, 1, 4}) {
        CHECK(b1_N(single(1, {1, 1, 0}, 1, b)) == b + 1);
        CHECK(b1_N(single(1, {1, 1, 0}, 0, b)) == b);
    }
    TopologyProfile pair;
    pair.b1csX = 3;
    pair.cones = {{1, 0, true}, {1, 0, true}};
    pair.necks = {{1, 1, 0}, {1, 1, 0}};
    for (int y = 0; y <= 2; ++y) {
        pair.dimY = y;
        CHECK(b1_N(pair) == y + pair.b1csX - 1);
    }
}

TEST_CASE("family dimension and index") {
    auto f = dim_F_and_index(single(1, {1, 1, 0}, 1));
    CHECK(f.indX == 1);
    CHECK_FALSE(f.needsNonRigidCorrection);

    auto lawlor = single(2, {1, 0, 1}, 0, 1);
    lawlor.cones[0].rigid = false;
    auto g = dim_F_and_index(lawlor);
    CHECK(g.indX == 1);
    CHECK(g.needsNonRigidCorrection);
    auto r = report(lawlor);
    CHECK(r.warnings.size() == 1);
    CHECK(r.dimZi == std::vector<int>{1});
}

TEST_CASE("identities on random consistent profiles") {
    std::mt19937_64 rng(53);
    auto u = [&](int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng); };
    int accepted = 0, stable = 0;
    while (accepted < 1000) {
        TopologyProfile p;
        p.m = u(3, 7);
        p.q = u(1, 3);
        p.b1csX = u(0, 6);
        p.dimY = u(0, 4);
        int n = u(1, 4);
        bool allStable = u(0, 1) == 1;
        for (int i = 0; i < n; ++i) {
            int l = u(1, 3);
            p.cones.push_back({l, allStable ? 0 : u(0, 3), u(0, 3) != 0});
            p.necks.push_back({u(1, l), u(0, 3), u(0, 2)});
        }
        DimensionReport r;
        try {
            r = report(p);
        } catch (const sltk::InconsistentProfileError&) {
            continue;
        }
        ++accepted;
        CHECK(r.dimF == r.b1N - r.dimI);
        int sInd = 0;
        for (const auto& c : p.cones) sInd += c.sInd;
        CHECK(r.indX == r.dimF + sInd);
        if (sInd == 0) {
            ++stable;
            CHECK(r.dimI + r.dimF == r.b1N);
            CHECK(r.indX == r.dimF);
        }
        CHECK(r.dimI >= 0);
        CHECK(r.dimZ >= 0);
        CHECK(r.b1N >= 0);
        CHECK(r.dimF >= 0);
    }
    CHECK(stable > 100);
}

TEST_CASE("profile validation") {
    auto p = single(1, {1, 0, 0}, 0);
    p.necks.clear();
    CHECK_THROWS_AS(validate(p), sltk::InconsistentProfileError);
    auto q = single(1, {2, 0, 0}, 0);
    CHECK_THROWS_AS(validate(q), sltk::InconsistentProfileError);
    auto s = single(1, {1, 0, 0}, 0);
    s.cones[0].sInd = -1;
    CHECK_THROWS_AS(validate(s), sltk::InconsistentProfileError);
    auto b = single(1, {1, 0, 0}, 0);
    b.boundaries = {{2, 1}};
    CHECK_NOTHROW(validate(b));
    b.boundaries = {{2, 2}};
    CHECK_THROWS_AS(validate(b), sltk::InconsistentProfileError);
    CHECK_THROWS_AS(dim_Z(single(1, {1, 0, 0}, 0, 0, 3)), sltk::InconsistentProfileError);
}

TEST_CASE("rate-dependent dimensions") {
    for (int m = 3; m <= 6; ++m) CHECK(rate_lambda_dims({1, m - 2, 0}, {RateRegime::Positive, 1, false}) == m - 2);
    CHECK_THROWS_AS(rate_lambda_dims({1, 1, 0}, {RateRegime::Positive, 1, true}), sltk::WallError);
    CHECK(rigid_jump_dims(0, 0, 3) == 6);
    CHECK(rigid_jump_dims(1, 238, 8) == 255);
    CHECK(rate_below_two_dims(1, 13, 6, 1) == 7);
    CHECK_THROWS_AS(rate_below_two_dims(0, 1, 6, 1), sltk::InconsistentProfileError);
}

TEST_CASE("Y and Z vanishing") {
    auto a = yz_vanishing_check({1, 0, 1}, -1.0, 2, 3);
    CHECK(a.yMustVanish);
    CHECK_FALSE(a.zMustVanish);
    auto b = yz_vanishing_check({1, 1, 0}, 1.0, 1, 3);
    CHECK_FALSE(b.yMustVanish);
    CHECK(b.zMustVanish);
    auto c = yz_vanishing_check({1, 2, 0}, 0.0, 2, 3);
    CHECK_FALSE(c.yMustVanish);
    CHECK_FALSE(c.zMustVanish);
    auto d = yz_vanishing_check({1, 2, 0}, -1.5, 2, 3);
    CHECK(d.zMustVanish);
}
