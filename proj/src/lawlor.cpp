#include "sltk/lawlor.hpp"

#include "sltk/error.hpp"
#include "sltk/quadrature.hpp"

#include <Eigen/Dense>

#include <algorithm>
#include <cmath>
#include <numbers>
#include <random>
#include <sstream>

namespace sltk::lawlor {

namespace {

constexpr double kPi = std::numbers::pi;

std::vector<double> elementary_symmetric(const std::vector<double>& a) {
    std::vector<double> e(a.size() + 1, 0.0);
    e[0] = 1.0;
    for (std::size_t j = 0; j < a.size(); ++j)
        for (std::size_t r = j + 1; r >= 1; --r) e[r] += a[j] * e[r - 1];
    return e;
}

// Integrands in u with x = tan u on [0, pi/2]. Past pi/4 everything is
// rewritten in s = cot u so that no factor blows up near the endpoint.
struct NeckIntegrand {
    int m;
    std::vector<double> a;
    std::vector<double> e;

    explicit NeckIntegrand(const std::vector<double>& av)
        : m(static_cast<int>(av.size())), a(av), e(elementary_symmetric(av)) {}

    // P(t) = sum_r e_r t^{2(r-1)}
    double P(double t2) const {
        double p = e[m];
        for (int r = m - 1; r >= 1; --r) p = p * t2 + e[r];
        return p;
    }
    // Q(s) = s^{2(m-1)} P(1/s) = sum_r e_r s^{2(m-r)}
    double Q(double s2) const {
        double q = e[1];
        for (int r = 2; r <= m; ++r) q = q * s2 + e[r];
        return q;
    }

    Eigen::VectorXd angles(double u) const {
        Eigen::VectorXd g(m);
        if (u <= kPi / 4) {
            double t = std::tan(u), t2 = t * t;
            double base = (1 + t2) / std::sqrt(P(t2));
            for (int k = 0; k < m; ++k) g[k] = a[k] / (1 + a[k] * t2) * base;
        } else {
            double s = std::cos(u) / std::sin(u), s2 = s * s;
            double base = (1 + s2) * std::pow(s, m - 1) / std::sqrt(Q(s2));
            for (int k = 0; k < m; ++k) g[k] = a[k] / (s2 + a[k]) * base;
        }
        return g;
    }

    // Column-major m x m: entry (k, j) = d g_k / d a_j.
    Eigen::VectorXd jacobian(double u) const {
        Eigen::VectorXd out(m * m);
        const bool near = u <= kPi / 4;
        double w2, base, poly;
        if (near) {
            double t = std::tan(u);
            w2 = t * t;
            poly = P(w2);
            base = (1 + w2) / std::sqrt(poly);
        } else {
            double s = std::cos(u) / std::sin(u);
            w2 = s * s;
            poly = Q(w2);
            base = (1 + w2) * std::pow(s, m - 1) / std::sqrt(poly);
        }
        for (int j = 0; j < m; ++j) {
            double dP = 1.0;  // prod_{i != j} (1 + a_i t^2), or (s^2 + a_i) in s-form
            for (int i = 0; i < m; ++i)
                if (i != j) dP *= near ? 1 + a[i] * w2 : w2 + a[i];
            for (int k = 0; k < m; ++k) {
                double denom = near ? 1 + a[k] * w2 : w2 + a[k];
                double v = -0.5 * a[k] / denom * base * dP / poly;
                if (k == j) v += base * (near ? 1.0 : w2) / (denom * denom);
                out[j * m + k] = v;
            }
        }
        return out;
    }
};

quad::Options quad_options(double tol) {
    quad::Options o;
    o.absTol = tol;
    return o;
}

std::vector<double> to_std(const Eigen::VectorXd& v) { return {v.data(), v.data() + v.size()}; }

}  // namespace

double unit_sphere_volume(int m) {
    return 2 * std::pow(kPi, m / 2.0) / std::tgamma(m / 2.0);
}

double neck_polynomial(const std::vector<double>& a, double x) { return NeckIntegrand(a).P(x * x); }

void validate(const NeckParams& p) {
    if (p.m < 3) throw InputError("Lawlor necks need m >= 3");
    if (static_cast<int>(p.a.size()) != p.m) throw InputError("expected m values of a");
    for (double v : p.a)
        if (!(v > 0) || !std::isfinite(v)) throw InputError("every a_k must be a positive finite number");
}

void validate(const AngleSpec& s, double sumTol) {
    if (s.m < 3) throw InputError("Lawlor necks need m >= 3");
    if (static_cast<int>(s.phi.size()) != s.m) throw InputError("expected m angles");
    double sum = 0;
    for (double v : s.phi) {
        if (!(v > 0 && v < kPi)) throw InputError("every angle must lie in (0, pi)");
        sum += v;
    }
    if (std::abs(sum - kPi) > sumTol) {
        std::ostringstream os;
        os << "angles must sum to pi (off by " << sum - kPi << ")";
        throw InputError(os.str());
    }
    if (!(s.A > 0) || !std::isfinite(s.A)) throw InputError("A must be positive");
}

AngleResult angles_from_a(const NeckParams& p, double tol) {
    validate(p);
    if (!(tol > 0)) throw InputError("tol must be positive");
    NeckIntegrand g(p.a);
    // phi_k = 2 * integral over [0, pi/2], so halve the tolerance
    auto r = quad::integrate([&](double u) { return g.angles(u); }, 0.0, kPi / 2, p.m, quad_options(tol / 2));
    AngleResult out;
    out.spec.m = p.m;
    out.spec.phi = to_std(2 * r.value);
    double prod = 1;
    for (double v : p.a) prod *= v;
    out.spec.A = unit_sphere_volume(p.m) / std::sqrt(prod);
    out.errorBound.assign(p.m, 2 * r.error);
    return out;
}

Eigen::MatrixXd angle_jacobian(const NeckParams& p, double tol) {
    validate(p);
    NeckIntegrand g(p.a);
    auto r = quad::integrate([&](double u) { return g.jacobian(u); }, 0.0, kPi / 2, p.m * p.m,
                             quad_options(tol / 2));
    Eigen::MatrixXd J = Eigen::Map<Eigen::MatrixXd>(r.value.data(), p.m, p.m);
    return 2 * J;
}

NeckParams a_from_angles(const AngleSpec& spec, const InverseOptions& opt) {
    validate(spec, 1e-9);
    const int m = spec.m;
    const double logTarget = 2 * std::log(unit_sphere_volume(m) / spec.A);  // sum log a_k

    auto residual = [&](const Eigen::VectorXd& la, Eigen::VectorXd& F) {
        NeckParams p{m, to_std(la.array().exp().matrix())};
        auto ang = angles_from_a(p, kDefaultTol);
        F.resize(m);
        for (int k = 0; k < m - 1; ++k) F[k] = ang.spec.phi[k] - spec.phi[k];
        F[m - 1] = la.sum() - logTarget;
        return F.lpNorm<Eigen::Infinity>();
    };

    Eigen::VectorXd la = Eigen::VectorXd::Constant(m, logTarget / m);
    Eigen::VectorXd F;
    double norm = residual(la, F);
    for (int it = 0; it < opt.maxIterations && norm > opt.tol; ++it) {
        Eigen::VectorXd a = la.array().exp();
        Eigen::MatrixXd Ja = angle_jacobian({m, to_std(a)});
        Eigen::MatrixXd J(m, m);
        for (int k = 0; k < m - 1; ++k)
            for (int j = 0; j < m; ++j) J(k, j) = Ja(k, j) * a[j];
        J.row(m - 1).setOnes();
        Eigen::VectorXd step = J.partialPivLu().solve(-F);

        // Backtrack on the residual norm; no step may move log a by more than 2.
        double lim = step.lpNorm<Eigen::Infinity>();
        double damp = lim > 2 ? 2 / lim : 1.0;
        bool accepted = false;
        for (int half = 0; half < 40; ++half, damp /= 2) {
            Eigen::VectorXd trial = la + damp * step;
            Eigen::VectorXd Ft;
            double nt = residual(trial, Ft);
            if (nt < norm) {
                la = trial;
                F = Ft;
                norm = nt;
                accepted = true;
                break;
            }
        }
        if (!accepted) break;
    }
    if (!(norm <= opt.tol)) {
        std::ostringstream os;
        os << "inverse Lawlor map did not converge (residual " << norm << ")";
        throw NumericError(os.str(), norm);
    }
    return {m, to_std(la.array().exp().matrix())};
}

std::vector<double> neck_phases(const NeckParams& p, double y, double tol) {
    validate(p);
    if (!std::isfinite(y)) throw InputError("y must be finite");
    NeckIntegrand g(p.a);
    const double U = std::atan(std::abs(y));
    auto f = [&](double u) { return g.angles(u); };
    auto lower = quad::integrate(f, 0.0, U, p.m, quad_options(tol));
    auto upper = quad::integrate(f, U, kPi / 2, p.m, quad_options(tol));
    // integral over (-inf, y]: the tail beyond |y| when y < 0, else half plus [0, y]
    Eigen::VectorXd psi = y < 0 ? upper.value : Eigen::VectorXd(2 * lower.value + upper.value);
    return to_std(psi);
}

CVector neck_point(const NeckParams& p, double y, const std::vector<double>& x, double tol) {
    if (static_cast<int>(x.size()) != p.m) throw InputError("x must have m entries");
    double nx = 0;
    for (double v : x) nx += v * v;
    if (std::abs(std::sqrt(nx) - 1) > 1e-9) throw InputError("x must be a unit vector");
    auto psi = neck_phases(p, y, tol);
    CVector z(p.m);
    for (int k = 0; k < p.m; ++k)
        z[k] = std::polar(std::sqrt(1 / p.a[k] + y * y), psi[k]) * x[k];
    return z;
}

SLResidual frame_residual(const std::vector<CVector>& frame) {
    const int n = static_cast<int>(frame.size());
    SLResidual r;
    r.samples = 1;
    Eigen::MatrixXcd M(frame.front().size(), n);
    double hadamard = 1;
    for (int j = 0; j < n; ++j) {
        M.col(j) = frame[j];
        hadamard *= frame[j].norm();
    }
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) {
            double w = (frame[i].conjugate().cwiseProduct(frame[j])).imag().sum();
            r.maxOmegaResidual = std::max(r.maxOmegaResidual, std::abs(w) / (frame[i].norm() * frame[j].norm()));
        }
    if (M.rows() == n) {
        Complex det = M.determinant();
        if (!(std::abs(det) >= kDegenerateFrameRatio * hadamard)) {
            std::ostringstream os;
            os << "degenerate tangent frame (Hadamard ratio " << std::abs(det) / hadamard << ")";
            throw NumericError(os.str(), std::abs(det) / hadamard);
        }
        r.maxPhaseResidual = std::abs(det.imag()) / std::abs(det);
    }
    return r;
}

namespace {

using Sample = std::pair<double, std::vector<double>>;

SLResidual residual_at(const NeckParams& p, const Sample& smp, double h) {
    const int m = p.m;
    const double y = smp.first;
    Eigen::Map<const Eigen::VectorXd> x(smp.second.data(), m);

    std::vector<CVector> frame;
    frame.push_back((neck_point(p, y + h, smp.second) - neck_point(p, y - h, smp.second)) / (2 * h));

    // Orthonormal complement of x, then derivatives along great circles.
    Eigen::MatrixXd basis(m, m);
    basis.col(0) = x;
    basis.rightCols(m - 1) = Eigen::MatrixXd::Identity(m, m).leftCols(m - 1);
    Eigen::MatrixXd Qm = Eigen::HouseholderQR<Eigen::MatrixXd>(basis).householderQ();
    for (int j = 1; j < m; ++j) {
        Eigen::VectorXd t = Qm.col(j);
        Eigen::VectorXd xp = x * std::cos(h) + t * std::sin(h);
        Eigen::VectorXd xm = x * std::cos(h) - t * std::sin(h);
        std::vector<double> vp(xp.data(), xp.data() + m), vm(xm.data(), xm.data() + m);
        frame.push_back((neck_point(p, y, vp) - neck_point(p, y, vm)) / (2 * h));
    }
    return frame_residual(frame);
}

void merge(SLResidual& into, const SLResidual& r) {
    into.maxOmegaResidual = std::max(into.maxOmegaResidual, r.maxOmegaResidual);
    into.maxPhaseResidual = std::max(into.maxPhaseResidual, r.maxPhaseResidual);
    into.samples += r.samples;
}

std::vector<Sample> draw_samples(int m, const NeckSampling& s) {
    if (s.sampleCount < 1) throw InputError("sampleCount must be at least 1");
    if (!(s.h > 0)) throw InputError("finite-difference step must be positive");
    std::mt19937_64 rng(s.seed);
    std::uniform_real_distribution<double> uy(-s.yRange, s.yRange);
    std::normal_distribution<double> gauss;
    std::vector<Sample> out;
    out.reserve(s.sampleCount);
    for (int i = 0; i < s.sampleCount; ++i) {
        std::vector<double> x(m);
        double n2 = 0;
        do {
            n2 = 0;
            for (auto& v : x) {
                v = gauss(rng);
                n2 += v * v;
            }
        } while (n2 < 1e-12);
        for (auto& v : x) v /= std::sqrt(n2);
        out.emplace_back(uy(rng), std::move(x));
    }
    return out;
}

}  // namespace

SLResidual verify_sl_neck_at(const NeckParams& p, const std::vector<Sample>& samples, double h) {
    validate(p);
    SLResidual total;
    for (const auto& s : samples) merge(total, residual_at(p, s, h));
    return total;
}

SLResidual verify_sl_neck_serial(const NeckParams& p, const NeckSampling& s) {
    validate(p);
    return verify_sl_neck_at(p, draw_samples(p.m, s), s.h);
}

SLResidual verify_sl_neck(const NeckParams& p, const NeckSampling& s) {
    validate(p);
    const auto samples = draw_samples(p.m, s);
    const int n = static_cast<int>(samples.size());
    std::vector<SLResidual> per(n);
    std::vector<std::string> failures(n);
    std::vector<double> achieved(n, 0.0);

#pragma omp parallel for schedule(dynamic, 8)
    for (int i = 0; i < n; ++i) {
        try {
            per[i] = residual_at(p, samples[i], s.h);
        } catch (const NumericError& e) {
            failures[i] = e.what();
            achieved[i] = e.achieved();
        }
    }
    SLResidual total;
    for (int i = 0; i < n; ++i) {
        if (!failures[i].empty())
            throw NumericError("sample " + std::to_string(i) + ": " + failures[i], achieved[i]);
        merge(total, per[i]);
    }
    return total;
}

CVector hl_cone_point(int m, double r, const std::vector<double>& theta) {
    if (m < 3) throw InputError("m must be at least 3");
    if (static_cast<int>(theta.size()) != m - 1) throw InputError("expected m-1 torus angles");
    const double gamma = -(m + 1) * kPi / (2 * m);
    CVector z(m);
    double sum = 0;
    for (int j = 0; j < m - 1; ++j) {
        z[j] = std::polar(r / std::sqrt(double(m)), gamma + theta[j]);
        sum += theta[j];
    }
    z[m - 1] = std::polar(r / std::sqrt(double(m)), gamma - sum);
    return z;
}

std::vector<CVector> hl_cone_tangents(int m, double r, const std::vector<double>& theta) {
    CVector z = hl_cone_point(m, r, theta);
    std::vector<CVector> t;
    t.push_back(z / r);
    const Complex I(0, 1);
    for (int j = 0; j < m - 1; ++j) {
        CVector v = CVector::Zero(m);
        v[j] = I * z[j];
        v[m - 1] = -I * z[m - 1];
        t.push_back(v);
    }
    return t;
}

SLResidual verify_sl_hl_cone(int m, int sampleCount, std::uint64_t seed) {
    if (m < 3) throw InputError("m must be at least 3");
    if (sampleCount < 1) throw InputError("sampleCount must be at least 1");
    std::mt19937_64 rng(seed);
    std::uniform_real_distribution<double> ur(0.1, 10.0), ut(0.0, 2 * kPi);
    SLResidual total;
    for (int i = 0; i < sampleCount; ++i) {
        double r = ur(rng);
        std::vector<double> th(m - 1);
        for (auto& v : th) v = ut(rng);
        merge(total, frame_residual(hl_cone_tangents(m, r, th)));
    }
    return total;
}

std::pair<double, double> z_invariant(const AngleSpec& spec) {
    if (!(spec.A > 0)) throw InputError("A must be positive");
    return {spec.A, -spec.A};
}

}  // namespace sltk::lawlor
