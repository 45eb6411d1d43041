#include "sltk/dims.hpp"

#include "sltk/error.hpp"

#include <string>

namespace sltk::dims {

namespace {

int nonnegative(int v, const std::string& what) {
    if (v < 0) throw InconsistentProfileError(what + " would be " + std::to_string(v));
    return v;
}

void check_entry(const NeckData& n, const std::string& where) {
    if (n.b0L < 1) throw InconsistentProfileError(where + ": b0(L) must be at least 1");
    if (n.b1L < 0 || n.b1csL < 0) throw InconsistentProfileError(where + ": Betti numbers must be nonnegative");
}

int sum_l(const TopologyProfile& p) {
    int s = 0;
    for (const auto& c : p.cones) s += c.l;
    return s;
}

}  // namespace

void validate(const TopologyProfile& p) {
    if (p.m < 3) throw InconsistentProfileError("m must be at least 3");
    if (p.q < 1) throw InconsistentProfileError("q = b0(X') must be at least 1");
    if (p.b1csX < 0) throw InconsistentProfileError("b1_cs(X') must be nonnegative");
    if (p.dimY < 0) throw InconsistentProfileError("dim Y must be nonnegative");
    if (p.cones.size() != p.necks.size())
        throw InconsistentProfileError("expected one neck per cone, got " + std::to_string(p.necks.size()) +
                                       " necks for " + std::to_string(p.cones.size()) + " cones");
    if (p.cones.empty()) throw InconsistentProfileError("profile has no singular points");
    for (std::size_t i = 0; i < p.cones.size(); ++i) {
        const auto where = "point " + std::to_string(i + 1);
        if (p.cones[i].l < 1) throw InconsistentProfileError(where + ": l = b0(Sigma) must be at least 1");
        if (p.cones[i].sInd < 0) throw InconsistentProfileError(where + ": stability index must be nonnegative");
        check_entry(p.necks[i], where);
        if (p.necks[i].b0L > p.cones[i].l)
            throw InconsistentProfileError(where + ": every component of L has at least one end");
    }
    for (std::size_t i = 0; i < p.boundaries.size(); ++i) {
        const auto& b = p.boundaries[i];
        if (b.b1Sigma < 0 || b.imageDim < 0 || 2 * b.imageDim != b.b1Sigma)
            throw InconsistentProfileError("boundary " + std::to_string(i + 1) +
                                           ": the image of H^1(N) in H^1(Sigma) must have half dimension");
    }
}

int dim_I(const TopologyProfile& p) {
    validate(p);
    return nonnegative(p.b1csX + p.q - sum_l(p), "dim I");
}

AcModuliDims ac_moduli_dims(const NeckData& neck, int l) {
    check_entry(neck, "neck");
    if (l < 1) throw InconsistentProfileError("l must be at least 1");
    AcModuliDims d;
    d.dimY = nonnegative(neck.b1L - neck.b0L + l - neck.b1csL, "dim Y(L)");
    d.dimZ = nonnegative(l - neck.b0L, "dim Z(L)");
    d.dimM0 = nonnegative(neck.b1L - neck.b0L + l, "dim M_L^0");
    return d;
}

int dim_Z(const TopologyProfile& p) {
    validate(p);
    int s = 1 - p.q + sum_l(p);
    for (const auto& n : p.necks) s -= n.b0L;
    return nonnegative(s, "dim Z");
}

int b1_N(const TopologyProfile& p) {
    validate(p);
    int s = p.dimY + 1 + p.b1csX - sum_l(p);
    for (const auto& n : p.necks) s += n.b1csL;
    return nonnegative(s, "b1(N)");
}

FamilyIndex dim_F_and_index(const TopologyProfile& p) {
    validate(p);
    FamilyIndex f;
    f.dimF = p.dimY + 1 - p.q;
    for (const auto& n : p.necks) f.dimF += n.b1csL;
    nonnegative(f.dimF, "dim F");
    f.indX = f.dimF;
    for (const auto& c : p.cones) {
        f.indX += c.sInd;
        if (!c.rigid) f.needsNonRigidCorrection = true;
    }
    const int viaN = b1_N(p) - dim_I(p);
    if (viaN != f.dimF)
        throw InconsistentProfileError("dim F = " + std::to_string(f.dimF) + " but b1(N) - dim I = " +
                                       std::to_string(viaN));
    return f;
}

DimensionReport report(const TopologyProfile& p) {
    validate(p);
    DimensionReport r;
    r.dimI = dim_I(p);
    r.dimZ = dim_Z(p);
    for (std::size_t i = 0; i < p.cones.size(); ++i) {
        auto d = ac_moduli_dims(p.necks[i], p.cones[i].l);
        r.dimYi.push_back(d.dimY);
        r.dimZi.push_back(d.dimZ);
        r.dimML0.push_back(d.dimM0);
    }
    r.b1N = b1_N(p);
    auto f = dim_F_and_index(p);
    r.dimF = f.dimF;
    r.indX = f.indX;
    if (f.needsNonRigidCorrection)
        r.warnings.push_back("a cone is not rigid; the index counts its rigid-case jump and may overstate "
                             "the true codimension");
    return r;
}

int rate_lambda_dims(const NeckData& neck, const RateQuery& q) {
    check_entry(neck, "neck");
    if (q.lambdaInExponents) throw WallError("rate lies in D_Sigma; the moduli dimension is not defined there");
    switch (q.regime) {
        case RateRegime::Positive:
            if (q.nSigmaLambda < 0) throw InconsistentProfileError("N_Sigma(lambda) is nonnegative for lambda > 0");
            return nonnegative(neck.b1L - neck.b0L + q.nSigmaLambda, "dim M_L^lambda");
        case RateRegime::Negative:
            return neck.b1csL;
    }
    return 0;
}

int rate_below_two_dims(int dimM0, int nSigma2, int mSigma2, int b0Sigma) {
    return nonnegative(dimM0 + nSigma2 - mSigma2 - b0Sigma, "dim M_L^lambda");
}

int rigid_jump_dims(int dimM0, int sInd, int m) {
    if (dimM0 < 0 || sInd < 0 || m < 3) throw InconsistentProfileError("invalid rigid jump data");
    return dimM0 + sInd + 2 * m;
}

VanishingCheck yz_vanishing_check(const NeckData& neck, double lambda, int b0Sigma, int m) {
    check_entry(neck, "neck");
    if (b0Sigma < 1) throw InconsistentProfileError("b0(Sigma) must be at least 1");
    VanishingCheck v;
    v.yMustVanish = lambda < 0 || neck.b1L == 0;
    v.zMustVanish = lambda < 2 - m || b0Sigma == 1;
    return v;
}

}  // namespace sltk::dims
