#pragma once

// Transverse pairs of special Lagrangian m-planes in C^m: characteristic
// angles, type, and Lawlor neck existence.

#include <Eigen/Core>

#include <optional>
#include <vector>

namespace sltk::planes {

using CMatrix = Eigen::MatrixXcd;
using RMatrix = Eigen::MatrixXd;

inline constexpr double kFrameTol = 1e-12;
inline constexpr double kTransverseTol = 1e-9;

/// The plane frame * R^m for a special unitary frame.
class SLPlane {
public:
    /// Throws InputError unless frame is special unitary to kFrameTol.
    explicit SLPlane(CMatrix frame, double tol = kFrameTol);

    const CMatrix& frame() const noexcept { return frame_; }
    int dim() const noexcept { return static_cast<int>(frame_.rows()); }

    /// Pi^phi = diag(e^{i phi_j}) R^m; special only when sum phi is a multiple of pi,
    /// in which case the frame is rescaled by a sign to land in SU(m).
    static SLPlane diagonal(const std::vector<double>& phi);

private:
    CMatrix frame_;
};

struct PlanePairReport {
    std::vector<double> angles;  // ascending, in [0, pi)
    int type = 0;                // sum(angles) / pi
    bool transverse = false;
    bool lawlorExists = false;
};

/// Angles from the eigenphases of S = M M^T with M = p1^{-1} p2.
PlanePairReport characteristic_angles(const SLPlane& p1, const SLPlane& p2,
                                      double tol = kTransverseTol);

/// Z-pairing signs of the Lawlor family: +1 means Z.[Sigma+] = A.
struct LawlorFamily {
    bool exists = false;
    int signPlus = 0;
    int signMinus = 0;
};

/// Throws InputError for a non-transverse report.
bool lawlor_family_exists(const PlanePairReport& report);
LawlorFamily lawlor_family(const PlanePairReport& report);

/// B in SU(m) with B(Pi+) = Pi^0 and B(Pi-) = Pi^phi, phi = report angles.
struct Reconstruction {
    CMatrix B;
    std::vector<double> angles;
};
Reconstruction reconstruct(const SLPlane& p1, const SLPlane& p2, double tol = kTransverseTol);

/// sup-norm distance between orthogonal projectors of two real m-planes in
/// C^m = R^{2m}, given by spanning complex frames.
double subspace_distance(const CMatrix& frameA, const CMatrix& frameB);

}  // namespace sltk::planes
