#include "sltk/error.hpp"
#include "sltk/lawlor.hpp"
#include "sltk/quadrature.hpp"

#include <doctest.h>

#include <cmath>
#include <numbers>
#include <random>

using namespace sltk::lawlor;
namespace quad = sltk::quad;

namespace {

constexpr double pi = std::numbers::pi;

// P straight from its definition, with a two-term series near x = 0.
double naive_P(const std::vector<double>& a, double x) {
    if (std::abs(x) < 1e-4) {
        double e1 = 0, e2 = 0;
        for (std::size_t i = 0; i < a.size(); ++i) {
            e1 += a[i];
            for (std::size_t j = i + 1; j < a.size(); ++j) e2 += a[i] * a[j];
        }
        return e1 + e2 * x * x;
    }
    double p = 1;
    for (double v : a) p *= 1 + v * x * x;
    return (p - 1) / (x * x);
}

// Composite Simpson after x = sinh(s), truncated at |s| = S.
std::vector<double> simpson_angles(const std::vector<double>& a) {
    const int N = 40000;
    const double S = 24.0, h = 2 * S / N;
    std::vector<double> phi(a.size(), 0.0);
    for (int i = 0; i <= N; ++i) {
        double s = -S + i * h;
        double x = std::sinh(s), dx = std::cosh(s);
        double w = (i == 0 || i == N) ? 1 : (i % 2 ? 4 : 2);
        double root = std::sqrt(naive_P(a, x));
        for (std::size_t k = 0; k < a.size(); ++k) phi[k] += w * a[k] * dx / ((1 + a[k] * x * x) * root);
    }
    for (auto& v : phi) v *= h / 3;
    return phi;
}

std::vector<double> random_a(std::mt19937_64& rng, int m) {
    std::uniform_real_distribution<double> u(0.2, 5.0);
    std::vector<double> a(m);
    for (auto& v : a) v = u(rng);
    return a;
}

double sum(const std::vector<double>& v) {
    double s = 0;
    for (double x : v) s += x;
    return s;
}

}  // namespace

TEST_CASE("quadrature integrates smooth functions and reports failure") {
    auto r = quad::integrate([](double x) { return Eigen::VectorXd::Constant(1, std::exp(x)); }, 0, 1, 1);
    CHECK(std::abs(r.value[0] - (std::exp(1.0) - 1)) < 1e-14);
    CHECK(r.error <= 1e-13);

    quad::Options tight;
    tight.maxIntervals = 5;
    tight.absTol = 1e-15;
    try {
        quad::integrate([](double x) { return Eigen::VectorXd::Constant(1, 1 / std::sqrt(x + 1e-12)); }, 0, 1, 1, tight);
        FAIL("expected NumericError");
    } catch (const sltk::NumericError& e) {
        CHECK(e.achieved() > 1e-15);
    }
}

TEST_CASE("sphere volume convention") {
    CHECK(unit_sphere_volume(2) == doctest::Approx(2 * pi));
    CHECK(unit_sphere_volume(3) == doctest::Approx(4 * pi));
    CHECK(unit_sphere_volume(4) == doctest::Approx(2 * pi * pi));
}

TEST_CASE("P near zero") {
    std::vector<double> a{0.3, 2.0, 4.5};
    CHECK(neck_polynomial(a, 0.0) == sum(a));
    for (double x : {1e-8, 1e-3, 0.5, 3.0, 40.0})
        CHECK(neck_polynomial(a, x) == doctest::Approx(naive_P(a, x)).epsilon(1e-9));
}

TEST_CASE("symmetric necks") {
    for (int m = 3; m <= 7; ++m) {
        auto r = angles_from_a({m, std::vector<double>(m, 1.0)});
        for (double v : r.spec.phi) CHECK(std::abs(v - pi / m) <= 1e-12);
    }
    auto r3 = angles_from_a({3, {1, 1, 1}});
    CHECK(r3.spec.A == doctest::Approx(4 * pi).epsilon(1e-15));
}

TEST_CASE("angles agree with a Simpson oracle") {
    std::mt19937_64 rng(3);
    for (int m = 3; m <= 5; ++m)
        for (int t = 0; t < 4; ++t) {
            auto a = random_a(rng, m);
            auto got = angles_from_a({m, a}).spec.phi;
            auto want = simpson_angles(a);
            for (int k = 0; k < m; ++k) CHECK(std::abs(got[k] - want[k]) < 1e-9);
        }
    auto r = angles_from_a({3, {4, 1, 1}});
    CHECK(r.spec.phi[0] > r.spec.phi[1]);
    CHECK(std::abs(r.spec.phi[1] - r.spec.phi[2]) < 1e-14);
    CHECK(std::abs(sum(r.spec.phi) - pi) < 1e-12);
}

TEST_CASE("angle sum and error bounds") {
    std::mt19937_64 rng(5);
    for (int m = 3; m <= 6; ++m)
        for (int t = 0; t < 10; ++t) {
            auto r = angles_from_a({m, random_a(rng, m)});
            CHECK(std::abs(sum(r.spec.phi) - pi) <= m * kDefaultTol);
            for (double b : r.errorBound) CHECK(b <= kDefaultTol);
        }
}

TEST_CASE("phi_k increases with a_k") {
    std::mt19937_64 rng(9);
    for (int t = 0; t < 20; ++t) {
        int m = 3 + t % 3;
        auto a = random_a(rng, m);
        int k = t % m;
        auto base = angles_from_a({m, a}).spec.phi[k];
        a[k] *= 1.001;
        CHECK(angles_from_a({m, a}).spec.phi[k] > base);
    }
}

TEST_CASE("jacobian matches finite differences") {
    std::vector<double> a{0.4, 1.7, 3.1, 0.9};
    auto J = angle_jacobian({4, a});
    for (int j = 0; j < 4; ++j) {
        auto ap = a, am = a;
        ap[j] += 1e-5;
        am[j] -= 1e-5;
        auto fp = angles_from_a({4, ap}).spec.phi, fm = angles_from_a({4, am}).spec.phi;
        for (int k = 0; k < 4; ++k) CHECK(std::abs((fp[k] - fm[k]) / 2e-5 - J(k, j)) < 1e-8);
    }
    // angles are invariant under a -> c a, so each row kills (a_1, ..., a_m)
    Eigen::Map<const Eigen::VectorXd> av(a.data(), 4);
    CHECK((J * av).cwiseAbs().maxCoeff() < 1e-12);
}

TEST_CASE("inverse map") {
    auto s = a_from_angles({3, {pi / 3, pi / 3, pi / 3}, 4 * pi});
    for (double v : s.a) CHECK(std::abs(v - 1) < 1e-12);

    AngleSpec target{3, {pi / 2, pi / 4, pi / 4}, 1.0};
    auto p = a_from_angles(target);
    auto back = angles_from_a(p);
    for (int k = 0; k < 3; ++k) CHECK(std::abs(back.spec.phi[k] - target.phi[k]) < 1e-11);
    CHECK(back.spec.A == doctest::Approx(1.0).epsilon(1e-12));

    std::mt19937_64 rng(13);
    for (int m = 3; m <= 5; ++m)
        for (int t = 0; t < 5; ++t) {
            auto a = random_a(rng, m);
            auto q = a_from_angles(angles_from_a({m, a}).spec);
            for (int k = 0; k < m; ++k) CHECK(std::abs(q.a[k] / a[k] - 1) <= 1e-8);
        }

    CHECK_THROWS_AS(a_from_angles({3, {1.0, 1.0, 1.0}, 1.0}), sltk::InputError);
    CHECK_THROWS_AS(a_from_angles({3, {pi / 2, pi / 2, 0.0}, 1.0}), sltk::InputError);
    CHECK_THROWS_AS(a_from_angles({3, {pi / 3, pi / 3, pi / 3}, -1.0}), sltk::InputError);
}

TEST_CASE("inverse map reports non-convergence") {
    InverseOptions opt;
    opt.maxIterations = 0;
    CHECK_THROWS_AS(a_from_angles({3, {pi / 2, pi / 4, pi / 4}, 1.0}, opt), sltk::NumericError);
}

TEST_CASE("neck phases interpolate between the two planes") {
    NeckParams p{3, {0.7, 1.9, 2.6}};
    auto phi = angles_from_a(p).spec.phi;
    auto lo = neck_phases(p, -1e6), hi = neck_phases(p, 1e6), mid = neck_phases(p, 0.0);
    for (int k = 0; k < 3; ++k) {
        CHECK(std::abs(lo[k]) < 1e-10);
        CHECK(std::abs(hi[k] - phi[k]) < 1e-10);
        CHECK(std::abs(mid[k] - phi[k] / 2) < 1e-13);
    }
    auto z = neck_point({3, {1, 1, 1}}, 0.0, {1, 0, 0});
    CHECK(std::abs(z[0] - std::polar(1.0, pi / 6)) < 1e-13);
    CHECK(std::abs(z[1]) == 0.0);
    CHECK_THROWS_AS(neck_point(p, 0.0, {1, 1, 0}), sltk::InputError);
}

TEST_CASE("Lawlor necks are special Lagrangian") {
    NeckParams sym{3, {1, 1, 1}};
    auto r = verify_sl_neck(sym);
    CHECK(r.samples == 1000);
    CHECK(r.maxOmegaResidual <= 1e-5);
    CHECK(r.maxPhaseResidual <= 1e-5);

    auto one = verify_sl_neck_at(sym, {{0.0, {1, 0, 0}}});
    CHECK(one.maxOmegaResidual <= r.maxOmegaResidual);
    CHECK(one.maxPhaseResidual <= r.maxPhaseResidual);

    std::mt19937_64 rng(17);
    NeckParams p4{4, random_a(rng, 4)};
    NeckSampling s;
    s.sampleCount = 300;
    auto r4 = verify_sl_neck(p4, s);
    CHECK(r4.maxOmegaResidual <= kNeckResidualTol);
    CHECK(r4.maxPhaseResidual <= kNeckResidualTol);

    auto serial = verify_sl_neck_serial(p4, s);
    CHECK(serial.maxOmegaResidual == r4.maxOmegaResidual);
    CHECK(serial.maxPhaseResidual == r4.maxPhaseResidual);
}

TEST_CASE("a perturbed neck is caught") {
    // Rotating one coordinate by a y-dependent phase breaks the Lagrangian condition.
    NeckParams p{3, {1, 1, 1}};
    std::vector<CVector> frame;
    const double y = 0.3, h = 1e-5;
    std::vector<double> x{0.6, 0.8, 0.0};
    auto bent = [&](double yy, const std::vector<double>& xx) {
        CVector z = neck_point(p, yy, xx);
        z[0] *= std::polar(1.0, 0.5 * xx[1]);
        return z;
    };
    frame.push_back((bent(y + h, x) - bent(y - h, x)) / (2 * h));
    std::vector<std::vector<double>> dirs{{-0.8, 0.6, 0.0}, {0.0, 0.0, 1.0}};
    for (const auto& t : dirs) {
        std::vector<double> xp(3), xm(3);
        for (int i = 0; i < 3; ++i) {
            xp[i] = x[i] * std::cos(h) + t[i] * std::sin(h);
            xm[i] = x[i] * std::cos(h) - t[i] * std::sin(h);
        }
        frame.push_back((bent(y, xp) - bent(y, xm)) / (2 * h));
    }
    CHECK(frame_residual(frame).maxOmegaResidual > 1e-2);
}

TEST_CASE("degenerate frames raise") {
    CVector v(3);
    v << 1, 0, 0;
    CVector w(3);
    w << 0, 1, 0;
    CHECK_THROWS_AS(frame_residual({v, w, v}), sltk::NumericError);
}

TEST_CASE("Harvey-Lawson cone") {
    for (int m : {3, 4, 5, 6}) {
        auto r = verify_sl_hl_cone(m, 1000);
        CHECK(r.maxOmegaResidual <= kConeResidualTol);
        CHECK(r.maxPhaseResidual <= kConeResidualTol);
    }
    for (int m : {3, 4, 5}) {
        auto z = hl_cone_point(m, 1.0, std::vector<double>(m - 1, 0.0));
        std::complex<double> prod(1.0, 0.0);
        for (int k = 0; k < m; ++k) {
            CHECK(std::abs(std::abs(z[k]) - std::abs(z[0])) < 1e-15);
            prod *= z[k];
        }
        prod *= std::pow(std::complex<double>(0, 1), m + 1);
        CHECK(prod.real() > 0);
        CHECK(std::abs(prod.imag()) < 1e-14);
        CHECK(z.norm() == doctest::Approx(1.0));
    }
}

TEST_CASE("Z invariant and dilations") {
    auto z = z_invariant({3, {pi / 3, pi / 3, pi / 3}, 1.0});
    CHECK(z.first == 1.0);
    CHECK(z.second == -1.0);
    CHECK_THROWS_AS(z_invariant({3, {pi / 3, pi / 3, pi / 3}, 0.0}), sltk::InputError);

    // t L^a = L^{a / t^2} as parametrized sets: y' = t y, and A scales by t^m.
    NeckParams p{3, {0.8, 1.5, 2.2}};
    const double t = 1.7;
    NeckParams q{3, {p.a[0] / (t * t), p.a[1] / (t * t), p.a[2] / (t * t)}};
    std::vector<double> x{0.48, 0.6, 0.64};
    for (double y : {-2.0, 0.0, 0.7}) {
        CVector lhs = t * neck_point(p, y, x);
        CVector rhs = neck_point(q, t * y, x);
        CHECK((lhs - rhs).norm() < 1e-12);
    }
    double A = angles_from_a(p).spec.A, At = angles_from_a(q).spec.A;
    CHECK(At == doctest::Approx(std::pow(t, 3) * A).epsilon(1e-13));
    auto zt = z_invariant(angles_from_a(q).spec);
    CHECK(zt.second == doctest::Approx(-std::pow(t, 3) * A).epsilon(1e-13));
}

TEST_CASE("input validation") {
    CHECK_THROWS_AS(angles_from_a({2, {1, 1}}), sltk::InputError);
    CHECK_THROWS_AS(angles_from_a({3, {1, 1}}), sltk::InputError);
    CHECK_THROWS_AS(angles_from_a({3, {1, -1, 1}}), sltk::InputError);
    CHECK_THROWS_AS(angles_from_a({3, {1, 1, 1}}, 0.0), sltk::InputError);
}
