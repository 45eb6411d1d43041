#pragma once

// SL 3-folds with singularities modelled on the stable T^2-cone in C^3 and
// the three families L_1^a, L_2^a, L_3^a of AC SL 3-folds asymptotic to it.
// H^1(Sigma) = R^2 via the standard torus coordinates; Y(L_j^a) = pi a w_j
// with w_1 = (1,0), w_2 = (0,1), w_3 = (-1,-1). Y-vectors are stored as
// rational multiples of pi.

#include "sltk/rational.hpp"

#include <array>
#include <optional>
#include <vector>

namespace sltk::t2cone {

using Int = long long;

struct T2Singularity {
    std::array<Int, 3> k{};  // k1 + k2 + k3 = 0, gcd(k1,k2) = 1
};

void validate(const T2Singularity& s);

/// (k2, -k1) = (p, q) after fixing the overall sign so that the first
/// nonzero entry of (p, q) is positive. Returns (-q, p, q - p).
T2Singularity k_from_generator(Int p, Int q);

/// {j : k_j = 0}, 1-based; at most one element.
std::vector<int> gluing_candidates(const T2Singularity& s);

/// w_j for j = 1, 2, 3 (Y(L_j^a) = pi a w_j).
std::array<Rational, 2> family_direction(int j);

using Vec2 = std::array<Rational, 2>;

/// ((u,v),(y,z)) in H^1(Sigma_1) + H^1(Sigma_2).
struct PairVector {
    Vec2 first;
    Vec2 second;
};

struct T2PairBasis {
    PairVector B1;
    PairVector B2;
};

/// Throws InputError unless B1, B2 are independent and satisfy
/// u1 v2 - u2 v1 + y1 z2 - y2 z1 = 0.
void validate(const T2PairBasis& b);
Rational consistency_form(const T2PairBasis& b);

enum class FamilyKind { Ray, Quadrant };

struct GluingSolution {
    int j1 = 1;
    int j2 = 1;
    FamilyKind kind = FamilyKind::Ray;
    std::optional<Rational> ratio;  // a2 / a1 for a ray
    int dimY = 0;
    /// A representative (a1, a2) and its span coefficients, so that
    /// (a1 w_{j1}, a2 w_{j2}) = c1 B1 + c2 B2 exactly.
    std::array<Rational, 2> representative;
    std::array<Rational, 2> coefficients;
};

/// Every (j1, j2) for which some a1, a2 > 0 give (Y(L_1), Y(L_2)) in span(B1, B2).
std::vector<GluingSolution> two_singularity_gluings(const T2PairBasis& basis);

/// Exact residual (a1 w_{j1}, a2 w_{j2}) - c1 B1 - c2 B2 for a member.
std::array<Rational, 4> membership_residual(const T2PairBasis& basis, int j1, int j2,
                                            const Rational& a1, const Rational& a2,
                                            const Rational& c1, const Rational& c2);

/// |H_1(N_j, Z)| = |k_j| |H_1(X, Z)|; nullopt when k_j = 0.
std::optional<Int> h1_order(const T2Singularity& s, Int h1X, int j);

/// One singularity, gluing L_j: the data of the dimension count.
struct OneSingularityReport {
    int j = 1;
    bool desingularizes = false;  // k_j == 0
    int dimY = 0;
    int dimI = 0;
    int b1N = 0;
    int indX = 0;
    Vec2 generatorY1;  // Y_1 = <w_j>
};
OneSingularityReport one_singularity(const T2Singularity& s, int j, int b1csX);

enum class Region { Positive, Negative, Wall };
const char* to_string(Region r);

struct FamilyRegionResult {
    Region region = Region::Wall;
    bool solvable = false;
    bool anyT = false;             // wall with k_j = 0: every t > 0 works
    std::optional<double> t;       // unique solution of pairing = pi t^2 k_j
};

FamilyRegionResult family_region(double omegaPairing, Int kj);

}  // namespace sltk::t2cone
