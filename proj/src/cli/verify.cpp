#include "commands.hpp"

#include "sltk/error.hpp"

#include <array>
#include <cmath>
#include <numbers>
#include <random>
#include <sstream>

namespace sltk::cli {

namespace {

struct Suite {
    std::string name;
    Json checks = Json::array();
    bool pass = true;

    void check(const std::string& what, bool ok, const std::string& detail = {}) {
        checks.push_back({{"name", what}, {"pass", ok}, {"detail", detail}});
        pass = pass && ok;
    }
    Json json() const { return {{"name", name}, {"pass", pass}, {"checks", checks}}; }
};

std::string fmt(double v) {
    std::ostringstream os;
    os.precision(3);
    os << v;
    return os.str();
}

// (N(2), m(2), s-ind) for m = 3..12.
constexpr std::array<std::array<long, 3>, 10> kTable1 = {{{13, 6, 0},
                                                          {27, 12, 6},
                                                          {51, 20, 20},
                                                          {93, 30, 50},
                                                          {169, 42, 112},
                                                          {311, 126, 238},
                                                          {331, 240, 240},
                                                          {201, 90, 90},
                                                          {243, 110, 110},
                                                          {289, 132, 132}}};

Suite table1() {
    Suite s{"table1"};
    for (int m = 3; m <= 12; ++m) {
        auto r = spectrum::stability_index(m);
        const auto& want = kTable1[m - 3];
        std::ostringstream got;
        got << "(" << r.nSigma2 << "," << r.mSigma2 << "," << r.sInd << ")";
        s.check("m=" + std::to_string(m) + " triple",
                r.nSigma2 == want[0] && r.mSigma2 == want[1] && r.sInd == want[2], got.str());
        s.check("m=" + std::to_string(m) + " rigid iff m not 8 or 9", r.rigid == (m != 8 && m != 9));
        if (m >= 10)
            s.check("m=" + std::to_string(m) + " N(2) = 2m^2+1, m(2) = m^2-m",
                    r.nSigma2 == 2L * m * m + 1 && r.mSigma2 == long(m) * m - m);
    }
    return s;
}

t2cone::PairVector pv(long u, long v, long y, long z) {
    return {{Rational(u), Rational(v)}, {Rational(y), Rational(z)}};
}

Suite t2examples() {
    using t2cone::FamilyKind;
    Suite s{"t2examples"};
    {
        auto f = t2cone::two_singularity_gluings({pv(1, 0, 0, 0), pv(0, 0, 1, 0)});
        s.check("single quadrant family (1,1) with dim Y 2",
                f.size() == 1 && f[0].j1 == 1 && f[0].j2 == 1 && f[0].kind == FamilyKind::Quadrant && f[0].dimY == 2);
    }
    {
        const long r = 2;
        auto f = t2cone::two_singularity_gluings({pv(1, 0, r, 0), pv(3, -2, 5, 1)});
        s.check("single ray (1,1) with a2/a1 = r",
                f.size() == 1 && f[0].j1 == 1 && f[0].j2 == 1 && f[0].kind == FamilyKind::Ray &&
                    f[0].ratio == Rational(r) && f[0].dimY == 1);
    }
    {
        const Rational r(3, 2);
        t2cone::T2PairBasis b{{{1, 0}, {0, r}}, {{0, r}, {1, 0}}};
        auto f = t2cone::two_singularity_gluings(b);
        bool ok = f.size() == 2 && f[0].j1 == 1 && f[0].j2 == 2 && f[0].ratio == r && f[1].j1 == 2 &&
                  f[1].j2 == 1 && f[1].ratio == 1 / r && f[0].dimY == 1 && f[1].dimY == 1;
        s.check("r != 1: exactly two ray families", ok);
    }
    {
        auto f = t2cone::two_singularity_gluings({pv(1, 0, 0, 1), pv(0, 1, 1, 0)});
        bool ok = f.size() == 3;
        bool has33 = false;
        for (const auto& g : f) {
            ok = ok && g.kind == FamilyKind::Ray && g.ratio == Rational(1) && g.dimY == 1;
            if (g.j1 == 3 && g.j2 == 3) has33 = true;
        }
        s.check("r = 1: exactly three ray families including (3,3)", ok && has33);
    }
    return s;
}

Suite lawlor_suite() {
    Suite s{"lawlor"};
    const double pi = std::numbers::pi;
    for (int m = 3; m <= 6; ++m) {
        auto r = lawlor::angles_from_a({m, std::vector<double>(m, 1.0)});
        double worst = 0;
        for (double v : r.spec.phi) worst = std::max(worst, std::abs(v - pi / m));
        s.check("symmetric a gives phi = pi/m, m=" + std::to_string(m), worst <= 1e-12, fmt(worst));
    }
    std::mt19937_64 rng(7);
    std::uniform_real_distribution<double> ua(0.2, 5.0);
    double worstSum = 0, worstTrip = 0;
    for (int m = 3; m <= 5; ++m)
        for (int i = 0; i < 5; ++i) {
            lawlor::NeckParams p{m, std::vector<double>(m)};
            for (auto& v : p.a) v = ua(rng);
            auto r = lawlor::angles_from_a(p);
            double sum = 0;
            for (double v : r.spec.phi) sum += v;
            worstSum = std::max(worstSum, std::abs(sum - pi));
            auto back = lawlor::a_from_angles(r.spec);
            for (int k = 0; k < m; ++k) worstTrip = std::max(worstTrip, std::abs(back.a[k] / p.a[k] - 1));
        }
    s.check("angle sum equals pi", worstSum <= 1e-10, fmt(worstSum));
    s.check("a -> (phi, A) -> a round trip", worstTrip <= 1e-8, fmt(worstTrip));
    for (int m : {3, 5}) {
        auto r = lawlor::verify_sl_hl_cone(m, 1000);
        s.check("HL cone is SL, m=" + std::to_string(m),
                r.maxOmegaResidual <= lawlor::kConeResidualTol && r.maxPhaseResidual <= lawlor::kConeResidualTol,
                fmt(std::max(r.maxOmegaResidual, r.maxPhaseResidual)));
    }
    auto nr = lawlor::verify_sl_neck({3, {1, 1, 1}});
    s.check("Lawlor neck is SL, m=3",
            nr.maxOmegaResidual <= lawlor::kNeckResidualTol && nr.maxPhaseResidual <= lawlor::kNeckResidualTol,
            fmt(std::max(nr.maxOmegaResidual, nr.maxPhaseResidual)));
    auto z = lawlor::z_invariant({3, {pi / 3, pi / 3, pi / 3}, 1.0});
    s.check("Z = (A, -A)", z.first == 1.0 && z.second == -1.0);
    return s;
}

Suite planes_suite() {
    Suite s{"planes"};
    const double pi = std::numbers::pi;
    auto p0 = planes::SLPlane::diagonal({0, 0, 0});
    auto pphi = planes::SLPlane::diagonal({pi / 4, pi / 4, pi / 2});
    auto a = planes::characteristic_angles(p0, pphi);
    auto b = planes::characteristic_angles(pphi, p0);
    s.check("diagonal pair has type 1",
            a.type == 1 && std::abs(a.angles[0] - pi / 4) < 1e-12 && std::abs(a.angles[2] - pi / 2) < 1e-12);
    bool swap = b.type == 2;
    for (int j = 0; j < 3; ++j) swap = swap && std::abs(b.angles[j] - (pi - a.angles[2 - j])) < 1e-9;
    s.check("swap law", swap);
    auto t2 = planes::characteristic_angles(planes::SLPlane::diagonal({0, 0, 0, 0}),
                                            planes::SLPlane::diagonal({pi / 2, pi / 2, pi / 2, pi / 2}));
    s.check("type 2 pair in C^4 has no Lawlor neck", t2.type == 2 && !planes::lawlor_family_exists(t2));
    return s;
}

Suite consum_suite() {
    using consum::Edge;
    Suite s{"consum"};
    consum::IntersectionGraph both{2, {Edge{0, 1, Rational(1)}, Edge{1, 0, Rational(8)}}};
    consum::IntersectionGraph oneway{2, {Edge{0, 1, Rational(1)}, Edge{0, 1, Rational(1)}}};
    s.check("edges both ways are feasible", consum::feasible(both));
    s.check("edges one way are infeasible", !consum::feasible(oneway));
    auto A = consum::solve_areas(both).A;
    s.check("balanced areas (1, 1/8)", A.size() == 2 && A[0] == 1 && A[1] == Rational(1, 8));
    return s;
}

}  // namespace

Json run_verify(const std::string& suite) {
    std::vector<Suite> run;
    auto want = [&](const char* n) { return suite == "all" || suite == n; };
    if (want("table1")) run.push_back(table1());
    if (want("t2examples")) run.push_back(t2examples());
    if (want("lawlor")) run.push_back(lawlor_suite());
    if (want("planes")) run.push_back(planes_suite());
    if (want("consum")) run.push_back(consum_suite());
    if (run.empty()) throw InputError("unknown suite '" + suite + "'");
    Json out{{"pass", true}, {"suites", Json::array()}};
    for (const auto& s : run) {
        out["suites"].push_back(s.json());
        if (!s.pass) out["pass"] = false;
    }
    return out;
}

}  // namespace sltk::cli
