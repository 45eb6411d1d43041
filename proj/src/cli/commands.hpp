#pragma once

#include "json_io.hpp"

#include <cstdint>
#include <string>
#include <vector>

namespace sltk::cli {

struct SpectrumArgs {
    int m = 3;
    long long cutoff = -1;  // -1: use 2m, enough for the stability index
    std::vector<std::string> deltas;
    bool exponents = false;
    bool serial = false;
};

struct LawlorArgs {
    double tol = lawlor::kDefaultTol;
    int samples = 1000;
    double h = lawlor::kDefaultStep;
    std::uint64_t seed = 20040101;
    bool verify = true;
};

Json run_spectrum(const SpectrumArgs& a);
Json run_stability(int m);
Json run_stability_table(const Json& in);
Json run_lawlor(const Json& in, const LawlorArgs& a);
Json run_planes(const Json& in, double tol, bool reconstruct);
Json run_consum(const Json& in);
Json run_t2cone(const Json& in);
Json run_dims(const Json& in);

/// suite: table1, t2examples, lawlor, planes, consum or all.
Json run_verify(const std::string& suite);

}  // namespace sltk::cli
