#include "sltk/spectrum.hpp"

#include "sltk/error.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <string>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace sltk::spectrum {

namespace {

constexpr Int kMaxCutoff = 1'000'000'000'000LL;

void check_args(int m, Int cutoff) {
    if (m < 3) throw InputError("m must be at least 3, got " + std::to_string(m));
    if (cutoff < 0) throw InputError("cutoff must be nonnegative");
    if (cutoff > kMaxCutoff) throw InputError("cutoff too large");
}

Int isqrt(Int x) {
    auto r = static_cast<Int>(std::sqrt(static_cast<double>(x)));
    while (r * r > x) --r;
    while ((r + 1) * (r + 1) <= x) ++r;
    return r;
}

using Histogram = std::map<Int, Int>;

// Lattice points of Z^{m-1} with Q(n) <= cutoff. With P = sum of squares and
// s = sum over the assigned coordinates, and r coordinates still free, the
// smallest Q reachable is m (P - s^2/(m-r)).
struct Walker {
    int m;
    Int cutoff;
    Int radius;
    Histogram* hist;

    bool feasible(Int P, Int s, int r) const {
        Int d = m - r;
        return m * (P * d - s * s) <= cutoff * d;
    }

    void walk(int depth, Int P, Int s) {
        const int dims = m - 1;
        if (depth == dims) {
            Int q = m * P - s * s;
            if (q <= cutoff) ++(*hist)[q];
            return;
        }
        const int rAfter = dims - depth - 1;
        for (Int v = -radius; v <= radius; ++v) {
            Int P2 = P + v * v;
            if (P2 > cutoff) continue;
            Int s2 = s + v;
            if (!feasible(P2, s2, rAfter)) continue;
            walk(depth + 1, P2, s2);
        }
    }
};

ConeSpectrum to_spectrum(int m, Int cutoff, const Histogram& h) {
    ConeSpectrum out{m, cutoff, {}};
    out.entries.reserve(h.size());
    for (const auto& [lambda, mult] : h) out.entries.push_back({lambda, mult});
    return out;
}

}  // namespace

Int hl_eigenvalue(int m, std::span<const Int> n) {
    if (m < 3) throw InputError("m must be at least 3");
    if (static_cast<int>(n.size()) != m - 1)
        throw InputError("lattice point must have m-1 = " + std::to_string(m - 1) + " entries");
    Int sq = 0, sum = 0;
    for (Int v : n) {
        sq += v * v;
        sum += v;
    }
    return m * sq - sum * sum;
}

ConeSpectrum enumerate_spectrum_serial(int m, Int cutoff) {
    check_args(m, cutoff);
    Histogram h;
    Walker w{m, cutoff, isqrt(cutoff), &h};
    w.walk(0, 0, 0);
    return to_spectrum(m, cutoff, h);
}

ConeSpectrum enumerate_spectrum(int m, Int cutoff) {
    check_args(m, cutoff);
    const Int radius = isqrt(cutoff);
    const Int width = 2 * radius + 1;
    Histogram total;

#pragma omp parallel
    {
        Histogram local;
        Walker w{m, cutoff, radius, &local};
#pragma omp for schedule(dynamic, 1)
        for (Int i = 0; i < width; ++i) {
            Int v = i - radius;
            Int P = v * v;
            if (w.feasible(P, v, m - 2)) w.walk(1, P, v);
        }
#pragma omp critical(sltk_spectrum_merge)
        for (const auto& [k, c] : local) total[k] += c;
    }
    return to_spectrum(m, cutoff, total);
}

namespace {

Rational vertex(int m) { return Rational(-(m - 2), 2); }

Rational quad(int m, const Rational& lambda, const Rational& t) { return t * t + (m - 2) * t - lambda; }

double root(int m, double lambda, int branch) {
    double b = m - 2;
    return (-b + branch * std::sqrt(b * b + 4 * lambda)) / 2;
}

int sign(const Rational& r) { return r > 0 ? 1 : (r < 0 ? -1 : 0); }

// Largest eigenvalue that must be known to evaluate N(delta): every alpha in
// [0, delta] or (delta, 0) has lambda <= delta (delta + m - 2).
Rational needed_eigenvalue(int m, const Rational& delta) { return delta * (delta + (m - 2)); }

}  // namespace

int compare(const Exponent& e, int m, const Rational& delta) {
    const Rational c = vertex(m);
    const int f = sign(quad(m, e.eigenvalue, delta));
    if (e.branch > 0) {
        if (delta < c) return 1;
        return -f;  // f(delta) > 0 means delta beyond the larger root
    }
    if (delta > c) return -1;
    return f;
}

ExponentData exponents_from_table(int m, const std::vector<std::pair<Rational, Int>>& table,
                                  const Rational& cutoff) {
    if (m < 3) throw InputError("m must be at least 3");
    std::map<Rational, Int> merged;
    for (const auto& [lambda, mult] : table) {
        if (lambda < 0) throw InputError("Laplace eigenvalues are nonnegative");
        if (mult <= 0) throw InputError("multiplicities must be positive");
        if (lambda > cutoff) continue;
        merged[lambda] += mult;
    }
    ExponentData out{m, cutoff, {}};
    for (const auto& [lambda, mult] : merged) {
        double l = to_double(lambda);
        out.entries.push_back({lambda, +1, root(m, l, +1), mult});
        out.entries.push_back({lambda, -1, root(m, l, -1), mult});
    }
    // alpha_- < alpha_+ always; alpha_+ grows with lambda and alpha_- shrinks.
    std::sort(out.entries.begin(), out.entries.end(), [](const Exponent& a, const Exponent& b) {
        if (a.branch != b.branch) return a.branch < b.branch;
        return a.branch > 0 ? a.eigenvalue < b.eigenvalue : a.eigenvalue > b.eigenvalue;
    });
    return out;
}

ExponentData exponents(const ConeSpectrum& spec) {
    std::vector<std::pair<Rational, Int>> table;
    table.reserve(spec.entries.size());
    for (const auto& e : spec.entries) table.emplace_back(Rational(e.eigenvalue), e.multiplicity);
    return exponents_from_table(spec.m, table, Rational(spec.cutoff));
}

Int n_sigma(const ExponentData& data, const Rational& delta) {
    const int m = data.m;
    if (needed_eigenvalue(m, delta) > data.cutoff)
        throw IncompleteSpectrumError("spectrum cutoff " + format_rational(data.cutoff) +
                                      " cannot certify N(" + format_rational(delta) + ")");
    Int total = 0;
    const Rational zero(0);
    for (const auto& e : data.entries) {
        if (delta >= 0) {
            if (compare(e, m, zero) >= 0 && compare(e, m, delta) <= 0) total += e.multiplicity;
        } else {
            if (compare(e, m, delta) > 0 && compare(e, m, zero) < 0) total -= e.multiplicity;
        }
    }
    return total;
}

Int n_sigma(const ExponentData& data, double delta) { return n_sigma(data, rational_from_double(delta)); }

Int m_sigma(const ExponentData& data, const Rational& delta) {
    if (needed_eigenvalue(data.m, delta) > data.cutoff)
        throw IncompleteSpectrumError("spectrum cutoff cannot certify m(" + format_rational(delta) + ")");
    Int total = 0;
    for (const auto& e : data.entries)
        if (compare(e, data.m, delta) == 0) total += e.multiplicity;
    return total;
}

StabilityReport stability_from_exponents(const ExponentData& data, Int b0Sigma, Int dimG) {
    const Int m = data.m;
    StabilityReport r;
    r.m = data.m;
    r.b0Sigma = b0Sigma;
    r.dimG = dimG;
    r.nSigma2 = n_sigma(data, Rational(2));
    r.mSigma0 = m_sigma(data, Rational(0));
    r.mSigma1 = m_sigma(data, Rational(1));
    r.mSigma2 = m_sigma(data, Rational(2));
    r.sInd = r.nSigma2 - b0Sigma - m * m - 2 * m + 1 + dimG;
    r.stable = r.sInd == 0;
    r.rigid = r.mSigma2 == m * m - 1 - dimG;
    if (r.sInd < 0)
        throw InputError("negative stability index; the supplied link data is inconsistent");
    return r;
}

StabilityReport stability_index(int m) {
    if (m < 3) throw InputError("m must be at least 3");
    auto data = exponents(enumerate_spectrum(m, 2 * static_cast<Int>(m)));
    return stability_from_exponents(data, 1, m - 1);
}

}  // namespace sltk::spectrum
