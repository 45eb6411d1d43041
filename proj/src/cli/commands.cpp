#include "commands.hpp"

#include "sltk/error.hpp"

#include <cmath>
#include <string>

namespace sltk::cli {

namespace {

bool has(const Json& j, const char* key) { return j.is_object() && j.contains(key); }

}  // namespace

Json run_spectrum(const SpectrumArgs& a) {
    const long long cutoff = a.cutoff < 0 ? 2LL * a.m : a.cutoff;
    auto spec = a.serial ? spectrum::enumerate_spectrum_serial(a.m, cutoff) : spectrum::enumerate_spectrum(a.m, cutoff);
    auto data = spectrum::exponents(spec);
    Json out = to_json(spec);
    if (cutoff >= 2LL * a.m)
        out["sInd"] = spectrum::stability_from_exponents(data, 1, a.m - 1).sInd;
    else
        out["sInd"] = nullptr;
    if (a.exponents) {
        Json ex = Json::array();
        for (const auto& e : data.entries) ex.push_back(to_json(e));
        out["exponents"] = ex;
    }
    if (!a.deltas.empty()) {
        Json ns = Json::array();
        for (const auto& d : a.deltas) {
            Rational delta = parse_rational(d);
            ns.push_back({{"delta", to_json(delta)}, {"value", spectrum::n_sigma(data, delta)}});
        }
        out["nSigma"] = ns;
    }
    return out;
}

Json run_stability(int m) { return to_json(spectrum::stability_index(m)); }

// A general link, given by its Laplace spectrum up to a cutoff.
Json run_stability_table(const Json& in) {
    const int m = get_int(require(in, "m"), "m");
    std::vector<std::pair<Rational, spectrum::Int>> table;
    const auto& t = require(in, "table");
    if (!t.is_array()) throw InputError("'table' must be an array of [eigenvalue, multiplicity]");
    for (const auto& e : t) {
        if (!e.is_array() || e.size() != 2) throw InputError("table rows are [eigenvalue, multiplicity]");
        table.emplace_back(get_rational(e[0], "eigenvalue"), get_int64(e[1], "multiplicity"));
    }
    Rational cutoff = get_rational(require(in, "cutoff"), "cutoff");
    auto data = spectrum::exponents_from_table(m, table, cutoff);
    spectrum::Int b0 = has(in, "b0Sigma") ? get_int64(in["b0Sigma"], "b0Sigma") : 1;
    spectrum::Int dimG = get_int64(require(in, "dimG"), "dimG");
    return to_json(spectrum::stability_from_exponents(data, b0, dimG));
}

Json run_lawlor(const Json& in, const LawlorArgs& a) {
    double tol = has(in, "tol") ? get_double(in["tol"], "tol") : a.tol;
    lawlor::NeckParams p;
    Json out;
    if (has(in, "a")) {
        p.a = get_doubles(in["a"], "a");
        p.m = has(in, "m") ? get_int(in["m"], "m") : static_cast<int>(p.a.size());
    } else if (has(in, "phi")) {
        lawlor::AngleSpec s;
        s.phi = get_doubles(in["phi"], "phi");
        s.m = has(in, "m") ? get_int(in["m"], "m") : static_cast<int>(s.phi.size());
        s.A = get_double(require(in, "A"), "A");
        p = lawlor::a_from_angles(s);
    } else {
        throw InputError("lawlor input needs either 'a' or 'phi' and 'A'");
    }
    auto ang = lawlor::angles_from_a(p, tol);
    auto z = lawlor::z_invariant(ang.spec);
    out["m"] = p.m;
    out["a"] = p.a;
    out["phi"] = ang.spec.phi;
    out["A"] = ang.spec.A;
    out["errorBound"] = ang.errorBound;
    out["Z"] = {z.first, z.second};
    if (has(in, "phi")) {
        auto target = get_doubles(in["phi"], "phi");
        double worst = 0;
        for (std::size_t k = 0; k < target.size(); ++k) worst = std::max(worst, std::abs(ang.spec.phi[k] - target[k]));
        out["inverseResidual"] = worst;
    }
    if (a.verify) {
        lawlor::NeckSampling s;
        s.sampleCount = a.samples;
        s.h = a.h;
        s.seed = a.seed;
        auto r = lawlor::verify_sl_neck(p, s);
        Json res = to_json(r);
        res["threshold"] = lawlor::kNeckResidualTol;
        res["pass"] = r.maxOmegaResidual <= lawlor::kNeckResidualTol && r.maxPhaseResidual <= lawlor::kNeckResidualTol;
        out["residual"] = res;
    }
    return out;
}

Json run_planes(const Json& in, double tol, bool reconstruct) {
    auto plane = [&](const char* frameKey, const char* phiKey) {
        if (has(in, frameKey)) return planes::SLPlane(frame_from_json(in[frameKey]));
        if (has(in, phiKey)) return planes::SLPlane::diagonal(get_doubles(in[phiKey], phiKey));
        throw InputError(std::string("missing '") + frameKey + "' (or '" + phiKey + "')");
    };
    const auto p1 = plane("p1", "phi1");
    const auto p2 = plane("p2", "phi2");
    auto rep = planes::characteristic_angles(p1, p2, tol);
    Json out = to_json(rep);
    if (rep.transverse) {
        auto fam = planes::lawlor_family(rep);
        if (fam.exists) {
            out["signPlus"] = fam.signPlus;
            out["signMinus"] = fam.signMinus;
        }
    }
    if (reconstruct) {
        auto rc = planes::reconstruct(p1, p2, tol);
        auto target = planes::SLPlane::diagonal(rc.angles).frame();
        Json r;
        r["B"] = frame_to_json(rc.B);
        r["distancePlus"] = planes::subspace_distance(rc.B * p1.frame(), planes::CMatrix::Identity(p1.dim(), p1.dim()));
        r["distanceMinus"] = planes::subspace_distance(rc.B * p2.frame(), target);
        out["reconstruction"] = r;
    }
    return out;
}

Json run_consum(const Json& in) {
    Json out = Json::object();
    if (has(in, "q")) {
        auto g = graph_from_json(in);
        bool ok = consum::feasible(g);
        out["q"] = g.q;
        out["n"] = g.edges.size();
        out["feasible"] = ok;
        if (ok) {
            auto sol = consum::solve_areas(g);
            Json A = Json::array();
            for (const auto& a : sol.A) A.push_back(to_json(a));
            out["A"] = A;
            out["closedSubset"] = nullptr;
        } else {
            out["A"] = nullptr;
            Json c = Json::array();
            const auto closed = consum::closed_subset(g);
            for (int v : *closed) c.push_back(v + 1);
            out["closedSubset"] = c;
        }
        if (has(in, "b1X")) {
            auto d = consum::moduli_dim_relation(static_cast<int>(g.edges.size()), g.q, get_int(in["b1X"], "b1X"));
            out["dimRelation"] = {{"b1N", d.b1N}, {"indexOne", d.indexOne}};
        }
        if (has(in, "family")) {
            const auto& f = in["family"];
            std::vector<Rational> pairings;
            const auto& pj = require(f, "pairings");
            if (!pj.is_array()) throw InputError("'pairings' must be an array");
            for (const auto& v : pj) pairings.push_back(get_rational(v, "pairing"));
            std::optional<consum::BalanceSolution> A;
            if (has(f, "A")) {
                consum::BalanceSolution s;
                for (const auto& v : f["A"]) s.A.push_back(get_rational(v, "A"));
                A = std::move(s);
            }
            auto r = consum::family_balance_region(g, A, pairings, get_double(require(f, "t"), "t"),
                                                   get_int(require(f, "m"), "m"));
            Json fr{{"holds", r.holds}};
            if (r.witness) {
                Json w = Json::array();
                for (const auto& a : r.witness->A) w.push_back(to_json(a));
                fr["witness"] = w;
            } else {
                fr["witness"] = nullptr;
            }
            out["family"] = fr;
        }
    }
    if (has(in, "phase")) {
        const auto& p = in["phase"];
        consum::PhaseFamilyQuery q;
        q.R1 = get_double(require(p, "R1"), "R1");
        q.R2 = get_double(require(p, "R2"), "R2");
        q.theta1 = get_double(require(p, "theta1"), "theta1");
        q.theta2 = get_double(require(p, "theta2"), "theta2");
        q.psiX = has(p, "psiX") ? get_double(p["psiX"], "psiX") : 1.0;
        q.m = get_int(require(p, "m"), "m");
        out["phase"] = to_json(consum::phase_region(q));
    }
    if (out.empty()) throw InputError("consum input needs a graph ('q', 'edges') or a 'phase' query");
    return out;
}

Json run_t2cone(const Json& in) {
    Json out = Json::object();
    if (has(in, "basis")) {
        auto b = basis_from_json(in["basis"]);
        Json fams = Json::array();
        for (const auto& s : t2cone::two_singularity_gluings(b)) fams.push_back(to_json(s));
        out["families"] = fams;
    }
    std::optional<t2cone::T2Singularity> sing;
    if (has(in, "singularity")) {
        const auto& s = in["singularity"];
        if (has(s, "generator")) {
            const auto& g = s["generator"];
            if (!g.is_array() || g.size() != 2) throw InputError("'generator' is [p, q]");
            sing = t2cone::k_from_generator(get_int64(g[0], "p"), get_int64(g[1], "q"));
        } else {
            const auto& k = require(s, "k");
            if (!k.is_array() || k.size() != 3) throw InputError("'k' is [k1, k2, k3]");
            sing = t2cone::T2Singularity{{get_int64(k[0], "k1"), get_int64(k[1], "k2"), get_int64(k[2], "k3")}};
        }
        t2cone::validate(*sing);
        Json sj{{"k", sing->k}, {"candidates", t2cone::gluing_candidates(*sing)}};
        if (has(in, "h1X")) {
            auto h1X = get_int64(in["h1X"], "h1X");
            Json orders = Json::array();
            for (int j = 1; j <= 3; ++j) {
                auto o = t2cone::h1_order(*sing, h1X, j);
                orders.push_back(o ? Json(*o) : Json(nullptr));
            }
            sj["h1Order"] = orders;
        }
        if (has(in, "j")) {
            int b1cs = has(in, "b1csX") ? get_int(in["b1csX"], "b1csX") : 0;
            sj["oneSingularity"] = to_json(t2cone::one_singularity(*sing, get_int(in["j"], "j"), b1cs));
        }
        out["singularity"] = sj;
    }
    if (has(in, "region")) {
        const auto& r = in["region"];
        t2cone::Int kj;
        if (has(r, "kj")) {
            kj = get_int64(r["kj"], "kj");
        } else {
            if (!sing || !has(in, "j")) throw InputError("region query needs 'kj' or a singularity with 'j'");
            int j = get_int(in["j"], "j");
            if (j < 1 || j > 3) throw InputError("j must be 1, 2 or 3");
            kj = sing->k[j - 1];
        }
        out["region"] = to_json(t2cone::family_region(get_double(require(r, "pairing"), "pairing"), kj));
    }
    if (out.empty()) throw InputError("t2cone input needs 'basis', 'singularity' or 'region'");
    return out;
}

namespace {

// N_Sigma(lambda) for one neck: from an explicit spectrum, a generic table,
// or the Harvey-Lawson cone of the profile dimension.
spectrum::ExponentData rate_exponents(const Json& r, int m, const Rational& lambda) {
    if (has(r, "spectrum")) {
        auto s = cone_spectrum_from_json(r["spectrum"]);
        if (s.m != m) throw InputError("spectrum dimension differs from the profile");
        return spectrum::exponents(s);
    }
    if (has(r, "table")) {
        std::vector<std::pair<Rational, spectrum::Int>> t;
        for (const auto& e : r["table"]) {
            if (!e.is_array() || e.size() != 2) throw InputError("table rows are [eigenvalue, multiplicity]");
            t.emplace_back(get_rational(e[0], "eigenvalue"), get_int64(e[1], "multiplicity"));
        }
        return spectrum::exponents_from_table(m, t, get_rational(require(r, "cutoff"), "cutoff"));
    }
    Rational need = lambda * (lambda + (m - 2));
    spectrum::Int cutoff = 0;
    while (Rational(cutoff) < need) ++cutoff;
    return spectrum::exponents(spectrum::enumerate_spectrum(m, cutoff));
}

}  // namespace

Json run_dims(const Json& in) {
    auto p = profile_from_json(in);
    auto rep = dims::report(p);
    Json out = to_json(rep);

    Json jumps = Json::array();
    for (std::size_t i = 0; i < p.cones.size(); ++i) {
        if (p.cones[i].rigid)
            jumps.push_back(dims::rigid_jump_dims(rep.dimML0[i], p.cones[i].sInd, p.m));
        else
            jumps.push_back(nullptr);
    }
    out["rigidJump"] = jumps;

    if (has(in, "rates")) {
        Json rates = Json::array();
        for (const auto& r : in["rates"]) {
            int i = get_int(require(r, "neck"), "neck");
            if (i < 1 || i > static_cast<int>(p.necks.size())) throw InputError("'neck' index out of range");
            Rational lambda = get_rational(require(r, "lambda"), "lambda");
            dims::RateQuery q;
            if (lambda > 0 && lambda < 2)
                q.regime = dims::RateRegime::Positive;
            else if (lambda < 0 && lambda > 2 - p.m)
                q.regime = dims::RateRegime::Negative;
            else
                throw InputError("rate must lie in (2-m, 0) or (0, 2)");
            auto data = rate_exponents(r, p.m, lambda);
            q.lambdaInExponents = spectrum::m_sigma(data, lambda) > 0;
            if (q.regime == dims::RateRegime::Positive) q.nSigmaLambda = static_cast<int>(spectrum::n_sigma(data, lambda));
            int d = dims::rate_lambda_dims(p.necks[i - 1], q);
            rates.push_back({{"neck", i},
                             {"lambda", to_json(lambda)},
                             {"regime", q.regime == dims::RateRegime::Positive ? "positive" : "negative"},
                             {"nSigmaLambda", q.regime == dims::RateRegime::Positive ? Json(q.nSigmaLambda) : Json(nullptr)},
                             {"dim", d}});
        }
        out["rates"] = rates;
    }
    if (has(in, "vanishing")) {
        Json van = Json::array();
        for (const auto& v : in["vanishing"]) {
            int i = get_int(require(v, "neck"), "neck");
            if (i < 1 || i > static_cast<int>(p.necks.size())) throw InputError("'neck' index out of range");
            int b0 = has(v, "b0Sigma") ? get_int(v["b0Sigma"], "b0Sigma") : p.cones[i - 1].l;
            auto c = dims::yz_vanishing_check(p.necks[i - 1], get_double(require(v, "lambda"), "lambda"), b0, p.m);
            van.push_back({{"neck", i}, {"yMustVanish", c.yMustVanish}, {"zMustVanish", c.zMustVanish}});
        }
        out["vanishing"] = van;
    }
    return out;
}

}  // namespace sltk::cli
