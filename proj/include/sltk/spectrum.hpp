#pragma once

// Laplace spectrum of the flat torus link T^{m-1} of the Harvey-Lawson
// cone, homogeneity exponents, the counting function N(delta) and the
// stability index.

#include "sltk/rational.hpp"

#include <cstdint>
#include <span>
#include <vector>

namespace sltk::spectrum {

using Int = std::int64_t;

/// A point of Z^{m-1}; labels one eigenfunction of the link Laplacian.
struct LatticePoint {
    std::vector<Int> n;
};

struct SpectrumEntry {
    Int eigenvalue = 0;
    Int multiplicity = 0;
    friend bool operator==(const SpectrumEntry&, const SpectrumEntry&) = default;
};

/// Every eigenvalue <= cutoff together with its exact multiplicity.
struct ConeSpectrum {
    int m = 0;
    Int cutoff = 0;
    std::vector<SpectrumEntry> entries;  // strictly increasing eigenvalue
};

/// One exponent alpha with alpha(alpha+m-2) = eigenvalue, branch +1 for the
/// larger root and -1 for the smaller one. `value` is only an approximation;
/// all threshold comparisons go through the exact quadratic.
struct Exponent {
    Rational eigenvalue;
    int branch = +1;
    double value = 0.0;
    Int multiplicity = 0;
};

struct ExponentData {
    int m = 0;
    Rational cutoff;                // eigenvalues <= cutoff are complete
    std::vector<Exponent> entries;  // sorted by value
};

struct StabilityReport {
    int m = 0;
    Int nSigma2 = 0;
    Int mSigma0 = 0;
    Int mSigma1 = 0;
    Int mSigma2 = 0;
    Int dimG = 0;
    Int b0Sigma = 0;
    Int sInd = 0;
    bool stable = false;
    bool rigid = false;
};

/// Q(n) = m * sum n_i^2 - (sum n_i)^2. Satisfies Q(n) >= |n|^2.
Int hl_eigenvalue(int m, std::span<const Int> n);
inline Int hl_eigenvalue(int m, const LatticePoint& p) { return hl_eigenvalue(m, p.n); }

/// Parallel enumeration (OpenMP over the first coordinate). Results do not
/// depend on the thread count.
ConeSpectrum enumerate_spectrum(int m, Int cutoff);

/// Single-threaded reference for enumerate_spectrum.
ConeSpectrum enumerate_spectrum_serial(int m, Int cutoff);

ExponentData exponents(const ConeSpectrum& spec);

/// Exponents for an arbitrary link given its (eigenvalue, multiplicity)
/// table. Repeated eigenvalues are merged and their multiplicities summed;
/// the table must be complete up to `cutoff`.
ExponentData exponents_from_table(int m, const std::vector<std::pair<Rational, Int>>& table,
                                  const Rational& cutoff);

/// exact three-way comparison of an exponent against a rational threshold
int compare(const Exponent& e, int m, const Rational& delta);

/// N_Sigma(delta). Throws IncompleteSpectrumError if the cutoff cannot
/// certify every exponent needed for delta.
Int n_sigma(const ExponentData& data, const Rational& delta);
Int n_sigma(const ExponentData& data, double delta);

/// m_Sigma(alpha) for alpha = delta (0 if delta is not in D_Sigma).
Int m_sigma(const ExponentData& data, const Rational& delta);

/// Stability data for a general cone: b0Sigma components of the link and a
/// symmetry group of dimension dimG.
StabilityReport stability_from_exponents(const ExponentData& data, Int b0Sigma, Int dimG);

/// Harvey-Lawson cone in C^m: b0 = 1, dim G = m - 1.
StabilityReport stability_index(int m);

}  // namespace sltk::spectrum
