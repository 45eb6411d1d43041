#pragma once

// Globally adaptive 15-point Gauss-Kronrod quadrature for vector-valued
// integrands on a finite interval. The per-interval error estimate is the
// raw |K15 - G7| difference, which over-estimates the error of smooth
// integrands.

#include <Eigen/Core>

#include <functional>

namespace sltk::quad {

struct Result {
    Eigen::VectorXd value;
    double error = 0.0;  // max-norm bound summed over intervals
    int intervals = 0;
};

struct Options {
    double absTol = 1e-13;
    int maxIntervals = 4000;
};

using Integrand = std::function<Eigen::VectorXd(double)>;

/// Throws NumericError (with the achieved bound) if absTol cannot be met
/// within maxIntervals subdivisions.
Result integrate(const Integrand& f, double a, double b, int dim, const Options& opt = {});

/// One K15/G7 panel; exposed for tests.
void gauss_kronrod_15(const Integrand& f, double a, double b, Eigen::VectorXd& kronrod,
                      Eigen::VectorXd& gauss);

}  // namespace sltk::quad
