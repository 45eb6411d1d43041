#pragma once

// Lawlor necks L^{phi,A} in C^m and the Harvey-Lawson cone: the map between
// neck parameters a and (angles, A), the explicit neck parametrization, and
// numerical checks of the special Lagrangian conditions
// omega|_L = 0, Im Omega|_L = 0 for the flat structure on C^m.

#include <Eigen/Core>

#include <complex>
#include <cstdint>
#include <utility>
#include <vector>

namespace sltk::lawlor {

using Complex = std::complex<double>;
using CVector = Eigen::VectorXcd;

inline constexpr double kDefaultTol = 1e-13;
/// Finite-difference step used by verify_sl_neck.
inline constexpr double kDefaultStep = 1e-5;
/// Pass thresholds for the SL residuals.
inline constexpr double kNeckResidualTol = 1e-4;
inline constexpr double kConeResidualTol = 1e-10;
/// A frame whose Hadamard ratio |det| / prod |e_j| falls below this is
/// treated as rank-deficient.
inline constexpr double kDegenerateFrameRatio = 1e-8;

struct NeckParams {
    int m = 0;
    std::vector<double> a;  // all > 0
};

struct AngleSpec {
    int m = 0;
    std::vector<double> phi;  // each in (0, pi), sum pi
    double A = 0.0;           // > 0
};

struct AngleResult {
    AngleSpec spec;
    std::vector<double> errorBound;  // quadrature bound per angle
};

struct SLResidual {
    double maxOmegaResidual = 0.0;  // |omega(u,v)| / (|u||v|) over frame pairs
    double maxPhaseResidual = 0.0;  // |Im Omega(frame)| / |Omega(frame)|
    int samples = 0;
};

/// (m-1)-dimensional measure of the unit sphere S^{m-1}: 2 pi^{m/2} / Gamma(m/2).
double unit_sphere_volume(int m);

/// P(x) = (prod (1 + a_k x^2) - 1) / x^2 evaluated through elementary
/// symmetric functions, so P(0) = sum a_k exactly.
double neck_polynomial(const std::vector<double>& a, double x);

void validate(const NeckParams& p);
void validate(const AngleSpec& s, double sumTol);

AngleResult angles_from_a(const NeckParams& p, double tol = kDefaultTol);

/// d phi_k / d a_j, computed by quadrature of the differentiated integrand.
Eigen::MatrixXd angle_jacobian(const NeckParams& p, double tol = kDefaultTol);

struct InverseOptions {
    double tol = 1e-12;      // residual target on the angle / log-A equations
    int maxIterations = 100;
};

/// Damped Newton iteration in log(a); throws NumericError with the last
/// residual if it does not converge.
NeckParams a_from_angles(const AngleSpec& spec, const InverseOptions& opt = {});

/// psi_k(y) for all k (psi_k(-inf) = 0, psi_k(+inf) = phi_k).
std::vector<double> neck_phases(const NeckParams& p, double y, double tol = kDefaultTol);

/// (z_1(y) x_1, ..., z_m(y) x_m) with z_k(y) = e^{i psi_k(y)} sqrt(1/a_k + y^2).
CVector neck_point(const NeckParams& p, double y, const std::vector<double>& x,
                   double tol = kDefaultTol);

struct NeckSampling {
    int sampleCount = 1000;
    double h = kDefaultStep;
    double yRange = 4.0;  // y uniform in [-yRange, yRange]
    std::uint64_t seed = 20040101;
};

/// Residuals at an explicit set of (y, x) samples.
SLResidual verify_sl_neck_at(const NeckParams& p, const std::vector<std::pair<double, std::vector<double>>>& samples,
                             double h = kDefaultStep);

/// Random samples, evaluated in parallel.
SLResidual verify_sl_neck(const NeckParams& p, const NeckSampling& s = {});
SLResidual verify_sl_neck_serial(const NeckParams& p, const NeckSampling& s = {});

/// Point of the Harvey-Lawson cone at radius r and torus angles theta
/// (m-1 of them); the phase is chosen so i^{m+1} z_1...z_m >= 0.
CVector hl_cone_point(int m, double r, const std::vector<double>& theta);

/// Analytic tangent vectors at the same point: d/dr then d/dtheta_j.
std::vector<CVector> hl_cone_tangents(int m, double r, const std::vector<double>& theta);

SLResidual verify_sl_hl_cone(int m, int sampleCount, std::uint64_t seed = 20040101);

/// Z(L^{phi,A}) in the natural coordinates of H^{m-1}(Sigma) = R^2.
std::pair<double, double> z_invariant(const AngleSpec& spec);

/// Residuals of a single tangent frame; exposed for tests.
SLResidual frame_residual(const std::vector<CVector>& frame);

}  // namespace sltk::lawlor
