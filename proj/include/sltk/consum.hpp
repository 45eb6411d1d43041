#pragma once

// Multiple connected sums of an immersed SL m-fold at type-1
// self-intersection points: the graphical feasibility criterion, exact
// positive solutions of the balance equations, and the family versions.

#include "sltk/rational.hpp"

#include <optional>
#include <vector>

namespace sltk::consum {

/// Edge i runs from the component of x_i^+ (tail) to that of x_i^- (head),
/// weighted by psi(x_i)^m. Components are 0-based here, 1-based in JSON.
struct Edge {
    int tail = 0;
    int head = 0;
    Rational weight{1};
};

struct IntersectionGraph {
    int q = 1;
    std::vector<Edge> edges;
};

struct BalanceSolution {
    std::vector<Rational> A;
};

/// Throws InputError for out-of-range endpoints or nonpositive weights.
void validate(const IntersectionGraph& g);

bool weakly_connected(const IntersectionGraph& g);

/// Strong connectivity of the directed multigraph. Throws PreconditionError
/// if the underlying undirected graph is disconnected.
bool feasible(const IntersectionGraph& g);

inline constexpr int kOracleMaxComponents = 20;

/// Literal check over all bipartitions; SizeError-style InputError for q > 20.
bool bipartition_oracle(const IntersectionGraph& g);

/// Net weighted flow out of each component: sum_{tail=k} w A - sum_{head=k} w A.
std::vector<Rational> divergence(const IntersectionGraph& g, const std::vector<Rational>& A);

/// Sum of unit cycle circulations covering every edge, normalized so that
/// min_i w_i A_i = 1. Throws FeasibilityError if g is not strongly connected.
BalanceSolution solve_areas(const IntersectionGraph& g);

/// A nonempty proper set of components with no edge leaving it, if any.
/// Its existence certifies that no positive balanced A exists.
std::optional<std::vector<int>> closed_subset(const IntersectionGraph& g);

struct DimRelation {
    int b1N = 0;
    bool indexOne = false;  // n == q
};

/// b1(N) = n + 1 - q + b1(X). Throws TopologyError when n < q - 1.
DimRelation moduli_dim_relation(int n, int q, int b1X);

enum class Region { Positive, Negative, Wall };
const char* to_string(Region r);

struct PhaseFamilyQuery {
    double R1 = 1.0, R2 = 1.0;
    double theta1 = 0.0, theta2 = 0.0;
    double psiX = 1.0;
    int m = 3;
};

struct PhaseRegionResult {
    Region region = Region::Wall;
    double theta = 0.0;       // phase of R1 e^{i theta1} + R2 e^{i theta2}
    std::optional<double> t;  // only in the positive region
};

inline constexpr double kWallTol = 1e-12;

/// Throws DegeneratePhaseError when R1 e^{i theta1} + R2 e^{i theta2} vanishes.
PhaseRegionResult phase_region(const PhaseFamilyQuery& q);

struct FamilyBalanceResult {
    bool holds = false;
    std::optional<BalanceSolution> witness;  // when A was not supplied
};

/// Checks [Im Omega^s].[X_k] = t^m (sum_{tail=k} w A - sum_{head=k} w A).
/// With A supplied the check is in floating point (relative 1e-12); without
/// it, existence of a strictly positive A is decided exactly and the witness
/// solves the equations exactly at the binary value of t.
FamilyBalanceResult family_balance_region(const IntersectionGraph& g,
                                          const std::optional<BalanceSolution>& A,
                                          const std::vector<Rational>& pairings, double t, int m);

/// Strictly positive edge flows x with divergence(x) = target, if any.
std::optional<std::vector<Rational>> positive_flow(const IntersectionGraph& g,
                                                   const std::vector<Rational>& target);

}  // namespace sltk::consum
