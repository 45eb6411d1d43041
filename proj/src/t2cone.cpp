#include "sltk/t2cone.hpp"

#include "sltk/error.hpp"
#include "sltk/exact.hpp"

#include <cmath>
#include <numbers>
#include <numeric>
#include <string>

namespace sltk::t2cone {

namespace {

void check_j(int j) {
    if (j < 1 || j > 3) throw InputError("family index j must be 1, 2 or 3");
}

exact::Vector flat(const PairVector& p) { return {p.first[0], p.first[1], p.second[0], p.second[1]}; }

}  // namespace

void validate(const T2Singularity& s) {
    const auto& k = s.k;
    if (k[0] + k[1] + k[2] != 0) throw InputError("k1 + k2 + k3 must vanish");
    if (std::gcd(k[0], k[1]) != 1) throw InputError("k1 and k2 must be coprime");
}

T2Singularity k_from_generator(Int p, Int q) {
    if (p == 0 && q == 0) throw InputError("the generator must be nonzero");
    if (std::gcd(p, q) != 1) throw InputError("the generator (p, q) must be primitive");
    if (p < 0 || (p == 0 && q < 0)) {
        p = -p;
        q = -q;
    }
    return {{-q, p, q - p}};
}

std::vector<int> gluing_candidates(const T2Singularity& s) {
    validate(s);
    std::vector<int> out;
    for (int j = 0; j < 3; ++j)
        if (s.k[j] == 0) out.push_back(j + 1);
    return out;
}

std::array<Rational, 2> family_direction(int j) {
    check_j(j);
    switch (j) {
        case 1: return {Rational(1), Rational(0)};
        case 2: return {Rational(0), Rational(1)};
        default: return {Rational(-1), Rational(-1)};
    }
}

Rational consistency_form(const T2PairBasis& b) {
    const auto& [u1, v1] = b.B1.first;
    const auto& [y1, z1] = b.B1.second;
    const auto& [u2, v2] = b.B2.first;
    const auto& [y2, z2] = b.B2.second;
    return u1 * v2 - u2 * v1 + y1 * z2 - y2 * z1;
}

void validate(const T2PairBasis& b) {
    if (exact::rank(exact::Matrix::from_columns({flat(b.B1), flat(b.B2)})) != 2)
        throw InputError("B1 and B2 must be linearly independent");
    Rational f = consistency_form(b);
    if (f != 0) throw InputError("basis violates u1 v2 - u2 v1 + y1 z2 - y2 z1 = 0 (value " + format_rational(f) + ")");
}

std::vector<GluingSolution> two_singularity_gluings(const T2PairBasis& basis) {
    validate(basis);
    const auto B1 = flat(basis.B1), B2 = flat(basis.B2);
    std::vector<GluingSolution> out;
    for (int j1 = 1; j1 <= 3; ++j1)
        for (int j2 = 1; j2 <= 3; ++j2) {
            auto w1 = family_direction(j1), w2 = family_direction(j2);
            exact::Vector W1{w1[0], w1[1], 0, 0}, W2{0, 0, w2[0], w2[1]};
            exact::Vector nB1(4), nB2(4);
            for (int i = 0; i < 4; ++i) {
                nB1[i] = -B1[i];
                nB2[i] = -B2[i];
            }
            // kernel of [W1 W2 -B1 -B2]: (a1, a2, c1, c2)
            auto ker = exact::nullspace(exact::Matrix::from_columns({W1, W2, nB1, nB2}));
            GluingSolution s;
            s.j1 = j1;
            s.j2 = j2;
            s.dimY = static_cast<int>(ker.size());
            if (ker.size() == 2) {
                // (a1, a2) ranges over all of R^2; pick the member with a1 = a2 = 1.
                exact::Matrix sys(2, 2);
                sys(0, 0) = ker[0][0];
                sys(0, 1) = ker[1][0];
                sys(1, 0) = ker[0][1];
                sys(1, 1) = ker[1][1];
                Rational det = sys(0, 0) * sys(1, 1) - sys(0, 1) * sys(1, 0);
                if (det == 0) throw ConsistencyError("two-dimensional Y with degenerate scale map");
                Rational x = (sys(1, 1) - sys(0, 1)) / det;
                Rational y = (sys(0, 0) - sys(1, 0)) / det;
                s.kind = FamilyKind::Quadrant;
                s.representative = {Rational(1), Rational(1)};
                s.coefficients = {x * ker[0][2] + y * ker[1][2], x * ker[0][3] + y * ker[1][3]};
            } else if (ker.size() == 1) {
                const auto& v = ker[0];
                if (v[0] == 0 || v[1] == 0 || (v[0] > 0) != (v[1] > 0)) continue;
                s.kind = FamilyKind::Ray;
                s.ratio = v[1] / v[0];
                s.representative = {Rational(1), *s.ratio};
                s.coefficients = {v[2] / v[0], v[3] / v[0]};
            } else {
                continue;
            }
            out.push_back(std::move(s));
        }
    return out;
}

std::array<Rational, 4> membership_residual(const T2PairBasis& basis, int j1, int j2, const Rational& a1,
                                            const Rational& a2, const Rational& c1, const Rational& c2) {
    auto w1 = family_direction(j1), w2 = family_direction(j2);
    const auto B1 = flat(basis.B1), B2 = flat(basis.B2);
    exact::Vector lhs{a1 * w1[0], a1 * w1[1], a2 * w2[0], a2 * w2[1]};
    std::array<Rational, 4> r;
    for (int i = 0; i < 4; ++i) r[i] = lhs[i] - c1 * B1[i] - c2 * B2[i];
    return r;
}

std::optional<Int> h1_order(const T2Singularity& s, Int h1X, int j) {
    validate(s);
    check_j(j);
    if (h1X < 1) throw InputError("|H_1(X, Z)| must be a positive integer");
    Int kj = s.k[j - 1];
    if (kj == 0) return std::nullopt;
    return (kj < 0 ? -kj : kj) * h1X;
}

OneSingularityReport one_singularity(const T2Singularity& s, int j, int b1csX) {
    validate(s);
    check_j(j);
    if (b1csX < 0) throw InputError("b1_cs(X') must be nonnegative");
    OneSingularityReport r;
    r.j = j;
    r.desingularizes = s.k[j - 1] == 0;
    // Y = <w_j> meets the image of H^1(X') only when k_j = 0.
    r.dimY = r.desingularizes ? 1 : 0;
    r.dimI = b1csX;
    r.b1N = b1csX + r.dimY;
    r.indX = r.dimY;
    r.generatorY1 = family_direction(j);
    return r;
}

const char* to_string(Region r) {
    switch (r) {
        case Region::Positive: return "positive";
        case Region::Negative: return "negative";
        case Region::Wall: return "wall";
    }
    return "?";
}

FamilyRegionResult family_region(double omegaPairing, Int kj) {
    if (!std::isfinite(omegaPairing)) throw InputError("pairing must be finite");
    constexpr double kWallTol = 1e-12;
    FamilyRegionResult r;
    if (std::abs(omegaPairing) <= kWallTol) {
        r.region = Region::Wall;
        r.anyT = kj == 0;
        r.solvable = r.anyT;
        return r;
    }
    r.region = omegaPairing > 0 ? Region::Positive : Region::Negative;
    if (kj != 0 && (omegaPairing > 0) == (kj > 0)) {
        r.solvable = true;
        r.t = std::sqrt(omegaPairing / (std::numbers::pi * static_cast<double>(kj)));
    }
    return r;
}

}  // namespace sltk::t2cone
