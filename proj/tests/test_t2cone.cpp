#include "sltk/error.hpp"
#include "sltk/exact.hpp"
#include "sltk/t2cone.hpp"

#include <doctest.h>

#include <cmath>
#include <numbers>
#include <random>

using namespace sltk::t2cone;
using sltk::Rational;

namespace {

PairVector pv(long u, long v, long y, long z) { return {{Rational(u), Rational(v)}, {Rational(y), Rational(z)}}; }

sltk::exact::Vector flat(const PairVector& p) { return {p.first[0], p.first[1], p.second[0], p.second[1]}; }

bool in_span(const T2PairBasis& b, int j1, int j2, const Rational& a1, const Rational& a2) {
    auto w1 = family_direction(j1), w2 = family_direction(j2);
    return sltk::exact::in_span({flat(b.B1), flat(b.B2)}, {a1 * w1[0], a1 * w1[1], a2 * w2[0], a2 * w2[1]});
}

const GluingSolution* find(const std::vector<GluingSolution>& f, int j1, int j2) {
    for (const auto& g : f)
        if (g.j1 == j1 && g.j2 == j2) return &g;
    return nullptr;
}

bool zero(const std::array<Rational, 4>& r) {
    for (const auto& v : r)
        if (v != 0) return false;
    return true;
}

// Random B2 orthogonal to B1 under the consistency form, independent of it.
std::optional<T2PairBasis> complete(std::mt19937_64& rng, const PairVector& B1) {
    std::uniform_int_distribution<int> d(-4, 4);
    auto f = flat(B1);
    sltk::exact::Vector c{-f[1], f[0], -f[3], f[2]};
    int pivot = -1;
    for (int i = 0; i < 4; ++i)
        if (c[i] != 0) pivot = i;
    if (pivot < 0) return std::nullopt;
    sltk::exact::Vector x(4);
    Rational s(0);
    for (int i = 0; i < 4; ++i)
        if (i != pivot) {
            x[i] = d(rng);
            s += c[i] * x[i];
        }
    x[pivot] = -s / c[pivot];
    T2PairBasis b{B1, {{x[0], x[1]}, {x[2], x[3]}}};
    if (sltk::exact::rank(sltk::exact::Matrix::from_columns({f, x})) != 2) return std::nullopt;
    return b;
}

}  // namespace

TEST_CASE("k-invariants") {
    CHECK(k_from_generator(1, 0).k == std::array<Int, 3>{0, 1, -1});
    CHECK(k_from_generator(0, 1).k == std::array<Int, 3>{-1, 0, 1});
    CHECK(k_from_generator(-1, 0).k == k_from_generator(1, 0).k);
    CHECK_THROWS_AS(k_from_generator(2, 4), sltk::InputError);
    CHECK_THROWS_AS(k_from_generator(0, 0), sltk::InputError);
    std::mt19937_64 rng(59);
    std::uniform_int_distribution<Int> d(-30, 30);
    for (int t = 0; t < 300; ++t) {
        Int p = d(rng), q = d(rng);
        if (std::gcd(p, q) != 1) continue;
        auto s = k_from_generator(p, q);
        CHECK(s.k[0] + s.k[1] + s.k[2] == 0);
        CHECK_NOTHROW(validate(s));
        CHECK(gluing_candidates(s).size() <= 1);
    }
    CHECK(gluing_candidates({{0, 1, -1}}) == std::vector<int>{1});
    CHECK(gluing_candidates({{-1, 2, -1}}).empty());
    CHECK_THROWS_AS(validate(T2Singularity{{1, 1, 1}}), sltk::InputError);
    CHECK_THROWS_AS(validate(T2Singularity{{2, -4, 2}}), sltk::InputError);
}

TEST_CASE("two parameter gluing") {
    auto f = two_singularity_gluings({pv(1, 0, 0, 0), pv(0, 0, 1, 0)});
    REQUIRE(f.size() == 1);
    CHECK(f[0].j1 == 1);
    CHECK(f[0].j2 == 1);
    CHECK(f[0].kind == FamilyKind::Quadrant);
    CHECK(f[0].dimY == 2);
}

TEST_CASE("one ray") {
    const long r = 2;
    T2PairBasis b{pv(1, 0, r, 0), pv(3, -2, 5, 1)};
    CHECK(consistency_form(b) == 0);
    auto f = two_singularity_gluings(b);
    REQUIRE(f.size() == 1);
    CHECK(f[0].j1 == 1);
    CHECK(f[0].j2 == 1);
    CHECK(f[0].kind == FamilyKind::Ray);
    CHECK(*f[0].ratio == r);
    CHECK(f[0].dimY == 1);
}

TEST_CASE("two and three families") {
    for (Rational r : {Rational(2), Rational(1, 3), Rational(7, 5)}) {
        T2PairBasis b{{{1, 0}, {0, r}}, {{0, r}, {1, 0}}};
        auto f = two_singularity_gluings(b);
        REQUIRE(f.size() == 2);
        auto* g12 = find(f, 1, 2);
        auto* g21 = find(f, 2, 1);
        REQUIRE(g12);
        REQUIRE(g21);
        CHECK(*g12->ratio == r);
        CHECK(*g21->ratio == 1 / r);
        CHECK(g12->dimY == 1);
        CHECK(g21->dimY == 1);
    }
    auto f = two_singularity_gluings({pv(1, 0, 0, 1), pv(0, 1, 1, 0)});
    REQUIRE(f.size() == 3);
    auto* g33 = find(f, 3, 3);
    REQUIRE(g33);
    CHECK(*g33->ratio == 1);
    CHECK(find(f, 1, 2));
    CHECK(find(f, 2, 1));
}

TEST_CASE("bad bases") {
    CHECK_THROWS_AS(two_singularity_gluings({pv(1, 0, 0, 0), pv(0, 1, 0, 0)}), sltk::InputError);
    CHECK_THROWS_AS(two_singularity_gluings({pv(1, 0, 0, 0), pv(2, 0, 0, 0)}), sltk::InputError);
}

TEST_CASE("families agree with a rational grid sweep") {
    std::mt19937_64 rng(61);
    std::uniform_int_distribution<int> d(-3, 3), j(1, 3), a(1, 4);
    int bases = 0, families = 0;
    while (bases < 300) {
        PairVector B1;
        if (bases % 2 == 0) {
            // plant a member
            int j1 = j(rng), j2 = j(rng);
            auto w1 = family_direction(j1), w2 = family_direction(j2);
            Rational a1 = a(rng), a2 = a(rng);
            B1 = {{a1 * w1[0], a1 * w1[1]}, {a2 * w2[0], a2 * w2[1]}};
        } else {
            B1 = pv(d(rng), d(rng), d(rng), d(rng));
        }
        auto basis = complete(rng, B1);
        if (!basis) continue;
        ++bases;
        auto f = two_singularity_gluings(*basis);
        for (int j1 = 1; j1 <= 3; ++j1)
            for (int j2 = 1; j2 <= 3; ++j2) {
                const GluingSolution* g = find(f, j1, j2);
                bool hit = false;
                for (int p = 1; p <= 6; ++p)
                    for (int q = 1; q <= 6; ++q) {
                        Rational a1(p, 2), a2(q, 2);
                        if (!in_span(*basis, j1, j2, a1, a2)) continue;
                        hit = true;
                        REQUIRE(g);
                        if (g->kind == FamilyKind::Ray) CHECK(a2 / a1 == *g->ratio);
                    }
                if (!g) continue;
                ++families;
                CHECK(g->dimY >= 1);
                CHECK(g->dimY <= 2);
                if (g->kind == FamilyKind::Quadrant) {
                    CHECK(hit);
                    CHECK(g->dimY == 2);
                } else {
                    CHECK(*g->ratio > 0);
                    CHECK(in_span(*basis, j1, j2, Rational(3), 3 * *g->ratio));
                    CHECK_FALSE(in_span(*basis, j1, j2, Rational(3), 3 * *g->ratio + Rational(1, 7)));
                }
                const auto& [a1, a2] = g->representative;
                const auto& [c1, c2] = g->coefficients;
                CHECK(a1 > 0);
                CHECK(a2 > 0);
                CHECK(zero(membership_residual(*basis, j1, j2, a1, a2, c1, c2)));
            }
    }
    CHECK(families > 100);
}

TEST_CASE("first homology orders") {
    CHECK(*h1_order({{-2, 1, 1}}, 3, 2) == 3);
    CHECK(*h1_order({{-2, 1, 1}}, 3, 1) == 6);
    CHECK_FALSE(h1_order({{0, 1, -1}}, 5, 1));
    CHECK_THROWS_AS(h1_order({{-2, 1, 1}}, 0, 1), sltk::InputError);
    std::mt19937_64 rng(67);
    std::uniform_int_distribution<Int> d(1, 40), h(1, 12);
    int checked = 0;
    while (checked < 500) {
        Int k2 = d(rng), k3 = d(rng);
        if (std::gcd(k2, k3) != 1) continue;
        T2Singularity s{{-(k2 + k3), k2, k3}};
        if (std::gcd(s.k[0], s.k[1]) != 1) continue;
        ++checked;
        Int hx = h(rng);
        CHECK(*h1_order(s, hx, 1) == *h1_order(s, hx, 2) + *h1_order(s, hx, 3));
    }
}

TEST_CASE("one singularity report") {
    auto r = one_singularity({{0, 1, -1}}, 1, 2);
    CHECK(r.desingularizes);
    CHECK(r.dimY == 1);
    CHECK(r.b1N == 3);
    CHECK(r.indX == 1);
    auto s = one_singularity({{0, 1, -1}}, 2, 2);
    CHECK_FALSE(s.desingularizes);
    CHECK(s.b1N == 2);
    CHECK(s.indX == 0);
    CHECK_THROWS_AS(one_singularity({{0, 1, -1}}, 4, 0), sltk::InputError);
}

TEST_CASE("family regions") {
    constexpr double pi = std::numbers::pi;
    auto w = family_region(0.0, 0);
    CHECK(w.region == Region::Wall);
    CHECK(w.anyT);
    CHECK(w.solvable);
    auto w2 = family_region(0.0, 2);
    CHECK_FALSE(w2.solvable);
    auto p = family_region(pi, 1);
    CHECK(p.region == Region::Positive);
    REQUIRE(p.t);
    CHECK(*p.t == doctest::Approx(1.0));
    CHECK_FALSE(family_region(1.0, -1).solvable);
    auto n = family_region(-2 * pi, -2);
    CHECK(n.region == Region::Negative);
    CHECK(*n.t == doctest::Approx(1.0));
    CHECK_FALSE(family_region(1.0, 0).solvable);
}
