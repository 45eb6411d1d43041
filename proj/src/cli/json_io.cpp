#include "json_io.hpp"

#include "sltk/error.hpp"

#include <string>

namespace sltk::cli {

namespace {

std::string where(const char* what) { return std::string("'") + what + "'"; }

const Json& require_array(const Json& j, const char* what) {
    if (!j.is_array()) throw InputError(where(what) + " must be an array");
    return j;
}

}  // namespace

const Json& require(const Json& j, const char* key) {
    if (!j.is_object()) throw InputError("expected a JSON object");
    auto it = j.find(key);
    if (it == j.end()) throw InputError(std::string("missing field '") + key + "'");
    return *it;
}

long long get_int64(const Json& j, const char* what) {
    if (!j.is_number_integer()) throw InputError(where(what) + " must be an integer");
    return j.get<long long>();
}

int get_int(const Json& j, const char* what) {
    long long v = get_int64(j, what);
    if (v < -(1LL << 31) || v >= (1LL << 31)) throw InputError(where(what) + " is out of range");
    return static_cast<int>(v);
}

double get_double(const Json& j, const char* what) {
    if (!j.is_number()) throw InputError(where(what) + " must be a number");
    return j.get<double>();
}

bool get_bool(const Json& j, const char* what) {
    if (!j.is_boolean()) throw InputError(where(what) + " must be true or false");
    return j.get<bool>();
}

Rational get_rational(const Json& j, const char* what) {
    if (j.is_string()) return parse_rational(j.get<std::string>());
    if (j.is_number_integer()) return Rational(j.get<long long>());
    throw InputError(where(what) + " must be a \"p/q\" string or an integer");
}

std::vector<double> get_doubles(const Json& j, const char* what) {
    require_array(j, what);
    std::vector<double> out;
    for (const auto& v : j) out.push_back(get_double(v, what));
    return out;
}

Json to_json(const Rational& r) { return format_rational(r); }

// spectrum

Json to_json(const spectrum::ConeSpectrum& s) {
    Json entries = Json::array();
    for (const auto& e : s.entries) entries.push_back({e.eigenvalue, e.multiplicity});
    return {{"m", s.m}, {"cutoff", s.cutoff}, {"entries", entries}};
}

Json to_json(const spectrum::StabilityReport& r) {
    return {{"m", r.m},           {"nSigma2", r.nSigma2}, {"mSigma0", r.mSigma0}, {"mSigma1", r.mSigma1},
            {"mSigma2", r.mSigma2}, {"dimG", r.dimG},       {"b0Sigma", r.b0Sigma}, {"sInd", r.sInd},
            {"stable", r.stable}, {"rigid", r.rigid}};
}

Json to_json(const spectrum::Exponent& e) {
    return {{"eigenvalue", to_json(e.eigenvalue)},
            {"branch", e.branch > 0 ? "+" : "-"},
            {"value", e.value},
            {"multiplicity", e.multiplicity}};
}

spectrum::ConeSpectrum cone_spectrum_from_json(const Json& j) {
    spectrum::ConeSpectrum s;
    s.m = get_int(require(j, "m"), "m");
    s.cutoff = get_int64(require(j, "cutoff"), "cutoff");
    for (const auto& e : require_array(require(j, "entries"), "entries")) {
        if (!e.is_array() || e.size() != 2) throw InputError("spectrum entries are [eigenvalue, multiplicity] pairs");
        s.entries.push_back({get_int64(e[0], "eigenvalue"), get_int64(e[1], "multiplicity")});
    }
    return s;
}

// lawlor

Json to_json(const lawlor::SLResidual& r) {
    return {{"maxOmegaResidual", r.maxOmegaResidual},
            {"maxPhaseResidual", r.maxPhaseResidual},
            {"samples", r.samples}};
}

// planes

planes::CMatrix frame_from_json(const Json& j) {
    require_array(j, "frame");
    const auto m = static_cast<Eigen::Index>(j.size());
    if (m == 0) throw InputError("empty frame");
    planes::CMatrix F(m, m);
    for (Eigen::Index r = 0; r < m; ++r) {
        const auto& row = j[r];
        if (!row.is_array() || static_cast<Eigen::Index>(row.size()) != m)
            throw InputError("frame must be square, rows of [re, im] pairs");
        for (Eigen::Index c = 0; c < m; ++c) {
            const auto& z = row[c];
            if (z.is_number()) {
                F(r, c) = {z.get<double>(), 0.0};
            } else if (z.is_array() && z.size() == 2) {
                F(r, c) = {get_double(z[0], "re"), get_double(z[1], "im")};
            } else {
                throw InputError("frame entries are [re, im] pairs");
            }
        }
    }
    return F;
}

Json frame_to_json(const planes::CMatrix& f) {
    Json rows = Json::array();
    for (Eigen::Index r = 0; r < f.rows(); ++r) {
        Json row = Json::array();
        for (Eigen::Index c = 0; c < f.cols(); ++c) row.push_back({f(r, c).real(), f(r, c).imag()});
        rows.push_back(row);
    }
    return rows;
}

Json to_json(const planes::PlanePairReport& r) {
    return {{"m", r.angles.size()},
            {"angles", r.angles},
            {"type", r.type},
            {"transverse", r.transverse},
            {"lawlorExists", r.lawlorExists}};
}

// consum

consum::IntersectionGraph graph_from_json(const Json& j) {
    consum::IntersectionGraph g;
    g.q = get_int(require(j, "q"), "q");
    for (const auto& e : require_array(require(j, "edges"), "edges")) {
        consum::Edge edge;
        edge.tail = get_int(require(e, "tail"), "tail") - 1;
        edge.head = get_int(require(e, "head"), "head") - 1;
        edge.weight = e.contains("weight") ? get_rational(e["weight"], "weight") : Rational(1);
        g.edges.push_back(edge);
    }
    consum::validate(g);
    return g;
}

Json to_json(const consum::PhaseRegionResult& r) {
    Json j{{"region", consum::to_string(r.region)}, {"theta", r.theta}};
    j["t"] = r.t ? Json(*r.t) : Json(nullptr);
    return j;
}

// dims

dims::TopologyProfile profile_from_json(const Json& j) {
    dims::TopologyProfile p;
    p.m = get_int(require(j, "m"), "m");
    p.q = get_int(require(j, "q"), "q");
    p.b1csX = get_int(require(j, "b1csX"), "b1csX");
    p.dimY = j.contains("dimY") ? get_int(j["dimY"], "dimY") : 0;
    for (const auto& c : require_array(require(j, "cones"), "cones")) {
        dims::ConeData d;
        d.l = get_int(require(c, "l"), "l");
        d.sInd = c.contains("sInd") ? get_int(c["sInd"], "sInd") : 0;
        d.rigid = c.contains("rigid") ? get_bool(c["rigid"], "rigid") : true;
        p.cones.push_back(d);
    }
    for (const auto& n : require_array(require(j, "necks"), "necks")) {
        dims::NeckData d;
        d.b0L = get_int(require(n, "b0L"), "b0L");
        d.b1L = get_int(require(n, "b1L"), "b1L");
        d.b1csL = get_int(require(n, "b1csL"), "b1csL");
        p.necks.push_back(d);
    }
    if (j.contains("boundaries"))
        for (const auto& b : require_array(j["boundaries"], "boundaries"))
            p.boundaries.push_back({get_int(require(b, "b1Sigma"), "b1Sigma"), get_int(require(b, "imageDim"), "imageDim")});
    dims::validate(p);
    return p;
}

Json to_json(const dims::DimensionReport& r) {
    return {{"dimI", r.dimI},   {"dimZ", r.dimZ}, {"dimZi", r.dimZi}, {"dimYi", r.dimYi},
            {"dimML0", r.dimML0}, {"b1N", r.b1N},  {"dimF", r.dimF},   {"indX", r.indX},
            {"warnings", r.warnings}};
}

// t2cone

namespace {

t2cone::Vec2 vec2(const Json& j) {
    if (!j.is_array() || j.size() != 2) throw InputError("expected a pair of rationals");
    return {get_rational(j[0], "coordinate"), get_rational(j[1], "coordinate")};
}

t2cone::PairVector pair_vector(const Json& j) {
    if (!j.is_array() || j.size() != 2) throw InputError("basis vectors are [[u, v], [y, z]]");
    return {vec2(j[0]), vec2(j[1])};
}

Json to_json(const t2cone::Vec2& v) { return {format_rational(v[0]), format_rational(v[1])}; }

}  // namespace

t2cone::T2PairBasis basis_from_json(const Json& j) {
    if (!j.is_array() || j.size() != 2) throw InputError("'basis' must hold exactly two vectors");
    return {pair_vector(j[0]), pair_vector(j[1])};
}

Json to_json(const t2cone::GluingSolution& s) {
    Json j{{"j1", s.j1},
           {"j2", s.j2},
           {"kind", s.kind == t2cone::FamilyKind::Ray ? "ray" : "quadrant"}};
    j["ratio"] = s.ratio ? to_json(*s.ratio) : Json(nullptr);
    j["dimY"] = s.dimY;
    j["indX"] = s.dimY;
    j["representative"] = to_json(s.representative);
    j["coefficients"] = to_json(s.coefficients);
    return j;
}

Json to_json(const t2cone::OneSingularityReport& r) {
    return {{"j", r.j},         {"desingularizes", r.desingularizes}, {"dimY", r.dimY}, {"dimI", r.dimI},
            {"b1N", r.b1N},     {"indX", r.indX},                     {"generatorY1", to_json(r.generatorY1)}};
}

Json to_json(const t2cone::FamilyRegionResult& r) {
    Json j{{"region", t2cone::to_string(r.region)}, {"solvable", r.solvable}, {"anyT", r.anyT}};
    j["t"] = r.t ? Json(*r.t) : Json(nullptr);
    return j;
}

}  // namespace sltk::cli
