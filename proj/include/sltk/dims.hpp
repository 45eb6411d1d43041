#pragma once

// Dimension counting for desingularizations of an SL m-fold X with conical
// singularities x_1..x_n by gluing AC SL m-folds L_1..L_n. Pure integer
// arithmetic; inconsistent topology is rejected, never clamped.

#include <optional>
#include <string>
#include <vector>

namespace sltk::dims {

struct ConeData {
    int l = 1;         // b0(Sigma_i)
    int sInd = 0;      // stability index of C_i
    bool rigid = true;
};

struct NeckData {
    int b0L = 1;
    int b1L = 0;
    int b1csL = 0;
};

/// Caller-declared boundary data for a 3-manifold with boundary Sigma: the
/// image of H^1(N) -> H^1(Sigma) must have dimension b1(Sigma) / 2.
struct BoundaryData {
    int b1Sigma = 0;
    int imageDim = 0;
};

struct TopologyProfile {
    int m = 3;
    int q = 1;       // b0(X')
    int b1csX = 0;   // b1_cs(X')
    std::vector<ConeData> cones;
    std::vector<NeckData> necks;
    int dimY = 0;
    std::vector<BoundaryData> boundaries;
};

struct AcModuliDims {
    int dimY = 0;
    int dimZ = 0;
    int dimM0 = 0;
};

struct DimensionReport {
    int dimI = 0;
    int dimZ = 0;
    std::vector<int> dimZi;
    std::vector<int> dimYi;
    std::vector<int> dimML0;
    int b1N = 0;
    int dimF = 0;
    int indX = 0;
    std::vector<std::string> warnings;
};

/// Throws InconsistentProfileError on negative entries or size mismatch.
void validate(const TopologyProfile& p);

int dim_I(const TopologyProfile& p);
AcModuliDims ac_moduli_dims(const NeckData& neck, int l);
int dim_Z(const TopologyProfile& p);
int b1_N(const TopologyProfile& p);

struct FamilyIndex {
    int dimF = 0;
    int indX = 0;
    bool needsNonRigidCorrection = false;
};
FamilyIndex dim_F_and_index(const TopologyProfile& p);

DimensionReport report(const TopologyProfile& p);

enum class RateRegime {
    Positive,  // lambda in (0,2) \ D_Sigma
    Negative,  // lambda in (2-m, 0)
};

struct RateQuery {
    RateRegime regime = RateRegime::Positive;
    int nSigmaLambda = 0;         // N_Sigma(lambda), used in the positive regime
    bool lambdaInExponents = false;  // caller found lambda in D_Sigma
};

/// Dimension of the rate-lambda moduli space of L. Throws WallError when
/// lambda lies in D_Sigma.
int rate_lambda_dims(const NeckData& neck, const RateQuery& q);

/// dim M^lambda for lambda just below 2, from the rate-0 dimension and the
/// spectrum: dimM0 + N(2) - m(2) - b0(Sigma).
int rate_below_two_dims(int dimM0, int nSigma2, int mSigma2, int b0Sigma);

/// Same for a rigid cone: dimM0 + sInd + 2m.
int rigid_jump_dims(int dimM0, int sInd, int m);

struct VanishingCheck {
    bool yMustVanish = false;
    bool zMustVanish = false;
};
VanishingCheck yz_vanishing_check(const NeckData& neck, double lambda, int b0Sigma, int m);

}  // namespace sltk::dims
