#pragma once

// JSON <-> module types. Exact quantities travel as "p/q" strings; JSON
// integers are accepted on input, JSON floats are not. Vertices and family
// indices are 1-based on the wire.

#include "sltk/consum.hpp"
#include "sltk/dims.hpp"
#include "sltk/lawlor.hpp"
#include "sltk/planes.hpp"
#include "sltk/spectrum.hpp"
#include "sltk/t2cone.hpp"

#include <json.hpp>

#include <string>

namespace sltk::cli {

using Json = nlohmann::ordered_json;

const Json& require(const Json& j, const char* key);
int get_int(const Json& j, const char* what);
long long get_int64(const Json& j, const char* what);
double get_double(const Json& j, const char* what);
bool get_bool(const Json& j, const char* what);
Rational get_rational(const Json& j, const char* what);
std::vector<double> get_doubles(const Json& j, const char* what);

Json to_json(const Rational& r);

Json to_json(const spectrum::ConeSpectrum& s);
Json to_json(const spectrum::StabilityReport& r);
Json to_json(const spectrum::Exponent& e);
spectrum::ConeSpectrum cone_spectrum_from_json(const Json& j);

Json to_json(const lawlor::SLResidual& r);

planes::CMatrix frame_from_json(const Json& j);
Json frame_to_json(const planes::CMatrix& f);
Json to_json(const planes::PlanePairReport& r);

consum::IntersectionGraph graph_from_json(const Json& j);
Json to_json(const consum::PhaseRegionResult& r);

dims::TopologyProfile profile_from_json(const Json& j);
Json to_json(const dims::DimensionReport& r);

t2cone::T2PairBasis basis_from_json(const Json& j);
Json to_json(const t2cone::GluingSolution& s);
Json to_json(const t2cone::OneSingularityReport& r);
Json to_json(const t2cone::FamilyRegionResult& r);

}  // namespace sltk::cli
