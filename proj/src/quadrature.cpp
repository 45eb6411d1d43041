#include "sltk/quadrature.hpp"

#include "sltk/error.hpp"

#include <queue>
#include <sstream>

namespace sltk::quad {

namespace {

// QUADPACK 15-point Kronrod abscissae; odd indices are the 7 Gauss nodes.
constexpr double xgk[8] = {
    0.991455371120812639206854697526329, 0.949107912342758524526189684047851,
    0.864864423359769072789712788640926, 0.741531185599394439863864773280788,
    0.586087235467691130294144845693013, 0.405845151377397166906606412076961,
    0.207784955007898467600689403773245, 0.000000000000000000000000000000000};
constexpr double wgk[8] = {
    0.022935322010529224963732008058970, 0.063092092629978553290700663189204,
    0.104790010322250183839876322541518, 0.140653259715525918745189590510238,
    0.169004726639267902826583426598550, 0.190350578064785409913256402421014,
    0.204432940075298892414161999234649, 0.209482141084727828012999174891714};
constexpr double wg[4] = {0.129484966168869693270611432679082, 0.279705391489276667901467771423780,
                          0.381830050505118944950369775488975, 0.417959183673469387755102040816327};

struct Panel {
    double a, b;
    Eigen::VectorXd value;
    double error;
    bool operator<(const Panel& o) const { return error < o.error; }
};

Panel make_panel(const Integrand& f, double a, double b) {
    Eigen::VectorXd k, g;
    gauss_kronrod_15(f, a, b, k, g);
    double err = (k - g).cwiseAbs().maxCoeff();
    return {a, b, std::move(k), err};
}

}  // namespace

void gauss_kronrod_15(const Integrand& f, double a, double b, Eigen::VectorXd& kronrod,
                      Eigen::VectorXd& gauss) {
    const double c = 0.5 * (a + b);
    const double h = 0.5 * (b - a);
    Eigen::VectorXd fc = f(c);
    kronrod = wgk[7] * fc;
    gauss = wg[3] * fc;
    for (int j = 0; j < 7; ++j) {
        const double dx = h * xgk[j];
        Eigen::VectorXd s = f(c - dx) + f(c + dx);
        kronrod += wgk[j] * s;
        if (j % 2 == 1) gauss += wg[j / 2] * s;
    }
    kronrod *= h;
    gauss *= h;
}

Result integrate(const Integrand& f, double a, double b, int dim, const Options& opt) {
    std::priority_queue<Panel> heap;
    Panel first = make_panel(f, a, b);
    if (first.value.size() != dim) throw ConsistencyError("integrand dimension mismatch");
    double total = first.error;
    heap.push(std::move(first));
    int intervals = 1;

    while (total > opt.absTol && intervals < opt.maxIntervals) {
        Panel worst = heap.top();
        heap.pop();
        const double mid = 0.5 * (worst.a + worst.b);
        if (mid <= worst.a || mid >= worst.b) {
            heap.push(std::move(worst));
            break;  // interval cannot be split further in double precision
        }
        Panel left = make_panel(f, worst.a, mid);
        Panel right = make_panel(f, mid, worst.b);
        total += left.error + right.error - worst.error;
        heap.push(std::move(left));
        heap.push(std::move(right));
        ++intervals;
    }

    Result r;
    r.value = Eigen::VectorXd::Zero(dim);
    double err = 0.0;
    r.intervals = intervals;
    while (!heap.empty()) {
        r.value += heap.top().value;
        err += heap.top().error;
        heap.pop();
    }
    r.error = err;  // recomputed to avoid drift in the running total
    if (r.error > opt.absTol) {
        std::ostringstream os;
        os << "quadrature did not reach tolerance " << opt.absTol << " (bound " << r.error << " after "
           << intervals << " intervals)";
        throw NumericError(os.str(), r.error);
    }
    return r;
}

}  // namespace sltk::quad
