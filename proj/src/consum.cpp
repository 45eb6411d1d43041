#include "sltk/consum.hpp"

#include "sltk/error.hpp"

#include <algorithm>
#include <cmath>
#include <complex>
#include <deque>
#include <numeric>
#include <string>

namespace sltk::consum {

namespace {

std::vector<bool> reach(const IntersectionGraph& g, int start, bool forward) {
    std::vector<std::vector<int>> adj(g.q);
    for (const auto& e : g.edges) {
        if (forward)
            adj[e.tail].push_back(e.head);
        else
            adj[e.head].push_back(e.tail);
    }
    std::vector<bool> seen(g.q, false);
    std::deque<int> todo{start};
    seen[start] = true;
    while (!todo.empty()) {
        int v = todo.front();
        todo.pop_front();
        for (int w : adj[v])
            if (!seen[w]) {
                seen[w] = true;
                todo.push_back(w);
            }
    }
    return seen;
}

bool all_of(const std::vector<bool>& v) { return std::all_of(v.begin(), v.end(), [](bool b) { return b; }); }

// Edge indices of a shortest directed path from `from` to `to`.
std::vector<int> path(const IntersectionGraph& g, int from, int to) {
    std::vector<int> via(g.q, -1);
    std::vector<bool> seen(g.q, false);
    std::deque<int> todo{from};
    seen[from] = true;
    while (!todo.empty() && !seen[to]) {
        int v = todo.front();
        todo.pop_front();
        for (int i = 0; i < static_cast<int>(g.edges.size()); ++i) {
            const auto& e = g.edges[i];
            if (e.tail == v && !seen[e.head]) {
                seen[e.head] = true;
                via[e.head] = i;
                todo.push_back(e.head);
            }
        }
    }
    if (!seen[to]) throw ConsistencyError("no return path in a strongly connected graph");
    std::vector<int> out;
    for (int v = to; v != from; v = g.edges[via[v]].tail) out.push_back(via[v]);
    return out;
}

}  // namespace

void validate(const IntersectionGraph& g) {
    if (g.q < 1) throw InputError("the immersed SL m-fold needs at least one component");
    for (std::size_t i = 0; i < g.edges.size(); ++i) {
        const auto& e = g.edges[i];
        if (e.tail < 0 || e.tail >= g.q || e.head < 0 || e.head >= g.q)
            throw InputError("edge " + std::to_string(i + 1) + " has an endpoint outside 1.." + std::to_string(g.q));
        if (e.weight <= 0) throw InputError("edge " + std::to_string(i + 1) + " has a nonpositive weight");
    }
}

bool weakly_connected(const IntersectionGraph& g) {
    std::vector<int> parent(g.q);
    std::iota(parent.begin(), parent.end(), 0);
    auto find = [&](int v) {
        while (parent[v] != v) v = parent[v] = parent[parent[v]];
        return v;
    };
    int parts = g.q;
    for (const auto& e : g.edges) {
        int a = find(e.tail), b = find(e.head);
        if (a != b) {
            parent[a] = b;
            --parts;
        }
    }
    return parts == 1;
}

bool feasible(const IntersectionGraph& g) {
    validate(g);
    if (!weakly_connected(g)) throw PreconditionError("the intersection graph is disconnected, so N cannot be");
    return all_of(reach(g, 0, true)) && all_of(reach(g, 0, false));
}

bool bipartition_oracle(const IntersectionGraph& g) {
    validate(g);
    if (g.q > kOracleMaxComponents)
        throw InputError("bipartition oracle is limited to " + std::to_string(kOracleMaxComponents) + " components",
                         "size");
    const unsigned long full = (1UL << g.q) - 1;
    for (unsigned long B = 1; B < full; ++B) {
        bool out = false, in = false;
        for (const auto& e : g.edges) {
            bool t = (B >> e.tail) & 1, h = (B >> e.head) & 1;
            if (t && !h) out = true;
            if (!t && h) in = true;
        }
        if (!out || !in) return false;
    }
    return true;
}

std::vector<Rational> divergence(const IntersectionGraph& g, const std::vector<Rational>& A) {
    if (A.size() != g.edges.size()) throw InputError("need one area per intersection point");
    std::vector<Rational> div(g.q, Rational(0));
    for (std::size_t i = 0; i < g.edges.size(); ++i) {
        const auto& e = g.edges[i];
        Rational f = e.weight * A[i];
        div[e.tail] += f;
        div[e.head] -= f;
    }
    return div;
}

BalanceSolution solve_areas(const IntersectionGraph& g) {
    if (!feasible(g)) throw FeasibilityError("some set of components has no edge leaving it");
    const int n = static_cast<int>(g.edges.size());
    std::vector<Rational> flow(n, Rational(0));
    for (int i = 0; i < n; ++i) {
        flow[i] += 1;
        for (int j : path(g, g.edges[i].head, g.edges[i].tail)) flow[j] += 1;
    }
    BalanceSolution s;
    if (n == 0) return s;
    Rational least = *std::min_element(flow.begin(), flow.end());
    for (int i = 0; i < n; ++i) s.A.push_back(flow[i] / least / g.edges[i].weight);
    return s;
}

std::optional<std::vector<int>> closed_subset(const IntersectionGraph& g) {
    validate(g);
    auto fwd = reach(g, 0, true);
    std::vector<int> out;
    if (!all_of(fwd)) {
        for (int v = 0; v < g.q; ++v)
            if (fwd[v]) out.push_back(v);
        return out;
    }
    // Everything is reachable from 0; the vertices that cannot get back are closed.
    auto back = reach(g, 0, false);
    for (int v = 0; v < g.q; ++v)
        if (!back[v]) out.push_back(v);
    if (out.empty()) return std::nullopt;
    return out;
}

DimRelation moduli_dim_relation(int n, int q, int b1X) {
    if (n < 0 || q < 1 || b1X < 0) throw InputError("n, q - 1 and b1(X) must be nonnegative");
    if (n < q - 1)
        throw TopologyError("with " + std::to_string(n) + " connected sums, " + std::to_string(q) +
                            " components cannot become connected");
    return {n + 1 - q + b1X, n == q};
}

const char* to_string(Region r) {
    switch (r) {
        case Region::Positive: return "positive";
        case Region::Negative: return "negative";
        case Region::Wall: return "wall";
    }
    return "?";
}

PhaseRegionResult phase_region(const PhaseFamilyQuery& q) {
    if (!(q.R1 > 0) || !(q.R2 > 0)) throw InputError("R1 and R2 must be positive");
    if (!(q.psiX > 0)) throw InputError("psi(x) must be positive");
    if (q.m < 1) throw InputError("m must be positive");
    using C = std::complex<double>;
    C sum = std::polar(q.R1, q.theta1) + std::polar(q.R2, q.theta2);
    if (std::abs(sum) <= kWallTol * (q.R1 + q.R2))
        throw DegeneratePhaseError("R1 e^{i theta1} + R2 e^{i theta2} vanishes");

    PhaseRegionResult r;
    double rel = std::arg(std::polar(1.0, -q.theta1) * sum);  // theta - theta1 in (-pi, pi]
    r.theta = q.theta1 + rel;
    double s = q.R1 * std::sin(-rel);  // R1 sin(theta1 - theta)
    if (std::abs(s) <= kWallTol * std::max(q.R1, q.R2)) {
        r.region = Region::Wall;
    } else if (s > 0) {
        r.region = Region::Positive;
        r.t = std::pow(s / std::pow(q.psiX, q.m), 1.0 / q.m);
    } else {
        r.region = Region::Negative;
    }
    return r;
}

std::optional<std::vector<Rational>> positive_flow(const IntersectionGraph& g, const std::vector<Rational>& target) {
    validate(g);
    if (static_cast<int>(target.size()) != g.q) throw InputError("need one target per component");
    if (std::accumulate(target.begin(), target.end(), Rational(0)) != 0) return std::nullopt;
    const int n = static_cast<int>(g.edges.size());
    if (n == 0) {
        for (const auto& c : target)
            if (c != 0) return std::nullopt;
        return std::vector<Rational>{};
    }

    // Any positive solution can be chosen with every x_i >= 1 / (n L), L the
    // common denominator of the target, because vertex solutions of the
    // network system have denominators dividing n L. Fixing a smaller floor
    // eps leaves a plain supply/demand problem for y = x - eps.
    const Rational eps = Rational(1) / (Rational(lcm_of_denominators(target)) * (n + 1));
    std::vector<Rational> supply = target;
    for (const auto& e : g.edges) {
        supply[e.tail] -= eps;
        supply[e.head] += eps;
    }

    // Max-flow on source S = q, sink T = q + 1 (Edmonds-Karp).
    const int V = g.q + 2, S = g.q, T = g.q + 1;
    Rational total(0);
    for (const auto& b : supply)
        if (b > 0) total += b;
    const Rational big = total + 1;

    struct Arc {
        int to;
        Rational cap;
        int rev;
    };
    std::vector<std::vector<Arc>> adj(V);
    auto add = [&](int u, int v, const Rational& c) {
        adj[u].push_back({v, c, static_cast<int>(adj[v].size())});
        adj[v].push_back({u, Rational(0), static_cast<int>(adj[u].size()) - 1});
        return std::pair<int, int>{u, static_cast<int>(adj[u].size()) - 1};
    };
    std::vector<std::pair<int, int>> edgeArc(n);
    for (int i = 0; i < n; ++i) {
        const auto& e = g.edges[i];
        if (e.tail == e.head) {
            edgeArc[i] = {-1, -1};
            continue;
        }
        edgeArc[i] = add(e.tail, e.head, big);
    }
    for (int v = 0; v < g.q; ++v) {
        if (supply[v] > 0) add(S, v, supply[v]);
        if (supply[v] < 0) add(v, T, -supply[v]);
    }

    Rational flow(0);
    while (true) {
        std::vector<std::pair<int, int>> prev(V, {-1, -1});
        std::deque<int> todo{S};
        prev[S] = {S, -1};
        while (!todo.empty() && prev[T].first < 0) {
            int u = todo.front();
            todo.pop_front();
            for (int k = 0; k < static_cast<int>(adj[u].size()); ++k) {
                const auto& a = adj[u][k];
                if (a.cap > 0 && prev[a.to].first < 0) {
                    prev[a.to] = {u, k};
                    todo.push_back(a.to);
                }
            }
        }
        if (prev[T].first < 0) break;
        Rational push = big;
        for (int v = T; v != S; v = prev[v].first) push = std::min(push, adj[prev[v].first][prev[v].second].cap);
        for (int v = T; v != S; v = prev[v].first) {
            auto& a = adj[prev[v].first][prev[v].second];
            a.cap -= push;
            adj[a.to][a.rev].cap += push;
        }
        flow += push;
    }
    if (flow != total) return std::nullopt;

    std::vector<Rational> x(n, eps);
    for (int i = 0; i < n; ++i) {
        auto [u, k] = edgeArc[i];
        if (u < 0) continue;
        x[i] += big - adj[u][k].cap;
    }
    return x;
}

FamilyBalanceResult family_balance_region(const IntersectionGraph& g, const std::optional<BalanceSolution>& A,
                                          const std::vector<Rational>& pairings, double t, int m) {
    validate(g);
    if (!(t > 0) || !std::isfinite(t)) throw InputError("t must be positive");
    if (m < 1) throw InputError("m must be positive");
    if (static_cast<int>(pairings.size()) != g.q) throw InputError("need one pairing per component");
    FamilyBalanceResult r;
    // Summing over all components gives [Im Omega^s].[X] = 0.
    if (std::accumulate(pairings.begin(), pairings.end(), Rational(0)) != 0) return r;

    if (A) {
        if (A->A.size() != g.edges.size()) throw InputError("need one area per intersection point");
        for (const auto& a : A->A)
            if (a <= 0) throw InputError("areas must be positive");
        const double tm = std::pow(t, m);
        std::vector<double> div(g.q, 0.0), scale(g.q, 0.0);
        for (std::size_t i = 0; i < g.edges.size(); ++i) {
            const auto& e = g.edges[i];
            double f = tm * to_double(e.weight * A->A[i]);
            div[e.tail] += f;
            div[e.head] -= f;
            scale[e.tail] += f;
            scale[e.head] += f;
        }
        r.holds = true;
        for (int k = 0; k < g.q; ++k) {
            double c = to_double(pairings[k]);
            double tol = 1e-12 * std::max({1.0, std::abs(c), scale[k]});
            if (std::abs(c - div[k]) > tol) r.holds = false;
        }
        return r;
    }

    auto x = positive_flow(g, pairings);
    if (!x) return r;
    r.holds = true;
    const Rational tr = rational_from_double(t);
    Rational tm(1);
    for (int i = 0; i < m; ++i) tm *= tr;
    BalanceSolution w;
    for (std::size_t i = 0; i < g.edges.size(); ++i) w.A.push_back((*x)[i] / (g.edges[i].weight * tm));
    r.witness = std::move(w);
    return r;
}

}  // namespace sltk::consum
