#include "sltk/planes.hpp"

#include "sltk/error.hpp"

#include <Eigen/Dense>

#include <algorithm>
#include <cmath>
#include <complex>
#include <numbers>
#include <numeric>
#include <sstream>

namespace sltk::planes {

namespace {

constexpr double kPi = std::numbers::pi;
using Complex = std::complex<double>;

// Common real orthogonal eigenbasis of the commuting real symmetric parts
// of S = X + iY.
struct Eigenphases {
    RMatrix O;                       // columns sorted by phase, det +1
    std::vector<Complex> eig;        // e^{2 i phi_j}
    std::vector<double> phi;         // in [0, pi), ascending
};

Eigenphases eigenphases(const CMatrix& S) {
    const RMatrix X = S.real();
    const RMatrix Y = S.imag();
    const int m = static_cast<int>(S.rows());
    // Irrational-looking mixing weights; a second one is tried if the first
    // happens to merge distinct eigenvalues.
    const double mixes[] = {0.6180339887498949, -1.4142135623730951, 2.718281828459045};
    RMatrix best;
    double bestOff = 1e300;
    for (double mu : mixes) {
        Eigen::SelfAdjointEigenSolver<RMatrix> es(X + mu * Y);
        RMatrix O = es.eigenvectors();
        CMatrix D = O.transpose() * S * O;
        double off = (D - CMatrix(D.diagonal().asDiagonal())).cwiseAbs().maxCoeff();
        if (off < bestOff) {
            bestOff = off;
            best = O;
        }
        if (off < 1e-12) break;
    }
    if (bestOff > 1e-8) {
        std::ostringstream os;
        os << "could not diagonalize M M^T in a real basis (off-diagonal " << bestOff << ")";
        throw ConsistencyError(os.str());
    }
    CMatrix D = best.transpose() * S * best;
    std::vector<double> phi(m);
    std::vector<Complex> eig(m);
    for (int j = 0; j < m; ++j) {
        eig[j] = D(j, j);
        double arg = std::arg(eig[j]);
        if (arg < 0) arg += 2 * kPi;
        phi[j] = arg / 2;
    }
    std::vector<int> order(m);
    std::iota(order.begin(), order.end(), 0);
    std::stable_sort(order.begin(), order.end(), [&](int a, int b) { return phi[a] < phi[b]; });

    Eigenphases out;
    out.O.resize(m, m);
    for (int j = 0; j < m; ++j) {
        out.O.col(j) = best.col(order[j]);
        out.eig.push_back(eig[order[j]]);
        out.phi.push_back(phi[order[j]]);
    }
    if (out.O.determinant() < 0) out.O.col(0) *= -1;
    return out;
}

RMatrix realify(const CMatrix& F) {
    RMatrix R(2 * F.rows(), F.cols());
    R.topRows(F.rows()) = F.real();
    R.bottomRows(F.rows()) = F.imag();
    return R;
}

RMatrix projector(const CMatrix& F) {
    RMatrix R = realify(F);
    Eigen::HouseholderQR<RMatrix> qr(R);
    RMatrix Q = qr.householderQ() * RMatrix::Identity(R.rows(), R.cols());
    return Q * Q.transpose();
}

}  // namespace

SLPlane::SLPlane(CMatrix frame, double tol) : frame_(std::move(frame)) {
    if (frame_.rows() != frame_.cols() || frame_.rows() < 2)
        throw InputError("an SL plane frame must be a square matrix of size at least 2");
    const auto n = frame_.rows();
    double unit = (frame_.adjoint() * frame_ - CMatrix::Identity(n, n)).cwiseAbs().maxCoeff();
    if (unit > tol) {
        std::ostringstream os;
        os << "frame is not unitary (deviation " << unit << ")";
        throw InputError(os.str());
    }
    Complex det = frame_.determinant();
    if (std::abs(det - 1.0) > tol) {
        std::ostringstream os;
        os << "frame determinant is " << det.real() << (det.imag() < 0 ? "" : "+") << det.imag()
           << "i, expected 1";
        throw InputError(os.str());
    }
}

SLPlane SLPlane::diagonal(const std::vector<double>& phi) {
    const int m = static_cast<int>(phi.size());
    double sum = std::accumulate(phi.begin(), phi.end(), 0.0);
    double k = std::round(sum / kPi);
    if (std::abs(sum - k * kPi) > 1e-12)
        throw InputError("diagonal plane is special Lagrangian only if the angles sum to a multiple of pi");
    CMatrix F = CMatrix::Zero(m, m);
    for (int j = 0; j < m; ++j) F(j, j) = std::polar(1.0, phi[j]);
    // Negating a column keeps the plane and fixes det = (-1)^k.
    if (static_cast<long long>(k) % 2 != 0) F.col(0) *= -1;
    return SLPlane(F, 1e-11);
}

PlanePairReport characteristic_angles(const SLPlane& p1, const SLPlane& p2, double tol) {
    if (p1.dim() != p2.dim()) throw InputError("planes live in different dimensions");
    if (!(tol > 0)) throw InputError("tol must be positive");
    const int m = p1.dim();
    CMatrix M = p1.frame().adjoint() * p2.frame();
    auto ep = eigenphases(M * M.transpose());

    PlanePairReport r;
    r.angles = ep.phi;
    r.transverse = std::none_of(ep.eig.begin(), ep.eig.end(),
                                [&](Complex z) { return std::abs(z - 1.0) <= tol; });
    double sum = std::accumulate(r.angles.begin(), r.angles.end(), 0.0);
    double k = std::round(sum / kPi);
    if (std::abs(sum - k * kPi) > 1e-8) {
        std::ostringstream os;
        os << "angle sum " << sum << " is not a multiple of pi";
        throw ConsistencyError(os.str());
    }
    r.type = static_cast<int>(k);
    r.lawlorExists = r.transverse && (r.type == 1 || r.type == m - 1);
    return r;
}

bool lawlor_family_exists(const PlanePairReport& report) {
    if (!report.transverse) throw InputError("Lawlor neck existence needs a transverse pair");
    const int m = static_cast<int>(report.angles.size());
    return report.type == 1 || report.type == m - 1;
}

LawlorFamily lawlor_family(const PlanePairReport& report) {
    LawlorFamily f;
    f.exists = lawlor_family_exists(report);
    if (!f.exists) return f;
    if (report.type == 1) {
        f.signPlus = +1;
        f.signMinus = -1;
    } else {
        f.signPlus = -1;
        f.signMinus = +1;
    }
    return f;
}

Reconstruction reconstruct(const SLPlane& p1, const SLPlane& p2, double tol) {
    auto report = characteristic_angles(p1, p2, tol);
    if (!report.transverse) throw InputError("reconstruction needs a transverse pair");
    CMatrix M = p1.frame().adjoint() * p2.frame();
    auto ep = eigenphases(M * M.transpose());
    // M = O diag(e^{i phi}) R with R real orthogonal; B = O^T p1^dagger sends
    // p1 R^m to R^m and p2 R^m to diag(e^{i phi}) R^m.
    Reconstruction out;
    out.B = ep.O.transpose().cast<Complex>() * p1.frame().adjoint();
    out.angles = ep.phi;
    return out;
}

double subspace_distance(const CMatrix& frameA, const CMatrix& frameB) {
    if (frameA.rows() != frameB.rows() || frameA.cols() != frameB.cols())
        throw InputError("frames have different shapes");
    RMatrix diff = projector(frameA) - projector(frameB);
    Eigen::JacobiSVD<RMatrix> svd(diff);
    return svd.singularValues()(0);
}

}  // namespace sltk::planes
