#include "tqd/quadrature.hpp"

#include <algorithm>
#include <cmath>
#include <vector>

namespace tqd {
namespace {

// Kronrod-15 abscissae on [-1,1] and weights, with the embedded Gauss-7 rule.
constexpr double kXgk[8] = {
    0.991455371120812639206854697526329, 0.949107912342758524526189684047851,
    0.864864423359769072789712788640926, 0.741531185599394439863864773280788,
    0.586087235467691130294144838258730, 0.405845151377397166906606412076961,
    0.207784955007898467600689403773245, 0.000000000000000000000000000000000};

constexpr double kWgk[8] = {
    0.022935322010529224963732008058970, 0.063092092629978553290700663189204,
    0.104790010322250183839876322541518, 0.140653259715525918745189590510238,
    0.169004726639267902826583426598550, 0.190350578064785409913256402421014,
    0.204432940075298892414161999234649, 0.209482141084727828012999174891714};

constexpr double kWg[4] = {
    0.129484966168869693270611432679082, 0.279705391489276667901467771423780,
    0.381830050505118944950369775488975, 0.417959183673469387755102040816327};

struct PanelResult {
    cplx value;
    double err;
    double resabs;  // panel estimate of int |f|
};

PanelResult gk15(const std::function<cplx(double)>& f, double a, double b) {
    const double h = 0.5 * (b - a);
    const double c = 0.5 * (a + b);

    cplx fv[15];
    for (int j = 0; j < 7; ++j) {
        fv[j] = f(c - h * kXgk[j]);
        fv[14 - j] = f(c + h * kXgk[j]);
    }
    fv[7] = f(c);

    cplx resk{0.0, 0.0}, resg{0.0, 0.0};
    for (int j = 0; j < 7; ++j) {
        resk += kWgk[j] * (fv[j] + fv[14 - j]);
    }
    resk += kWgk[7] * fv[7];
    // Gauss-7 uses the odd-indexed Kronrod abscissae.
    for (int j = 0; j < 3; ++j) {
        resg += kWg[j] * (fv[2 * j + 1] + fv[13 - 2 * j]);
    }
    resg += kWg[3] * fv[7];

    PanelResult r;
    r.value = resk * h;
    r.err = std::abs(resk - resg) * std::abs(h);
    // The standard QUADPACK error sharpening.
    double resabs = 0.0;
    for (int j = 0; j < 15; ++j) resabs += std::abs(fv[j]);
    resabs *= std::abs(h) / 15.0;
    r.resabs = resabs;
    if (resabs > 0.0 && r.err > 0.0) {
        const double scale = std::pow(200.0 * r.err / resabs, 1.5);
        if (scale < 1.0) r.err = resabs * scale;
    }
    return r;
}

struct Interval {
    double a, b;
    cplx value;
    double err;
    double resabs;
};

QuadratureResult adaptive_gk(const std::function<cplx(double)>& f, double a, double b,
                             double rel_tol, int max_nodes, double abs_floor, bool* converged) {
    std::vector<Interval> heap;
    PanelResult first = gk15(f, a, b);
    heap.push_back({a, b, first.value, first.err, first.resabs});
    int nodes = 15;

    cplx value = first.value;
    double err = first.err;
    double resabs = first.resabs;
    int since_refresh = 0;

    auto refresh_totals = [&]() {
        value = {0.0, 0.0};
        err = 0.0;
        resabs = 0.0;
        for (const auto& iv : heap) {
            value += iv.value;
            err += iv.err;
            resabs += iv.resabs;
        }
    };

    while (true) {
        if (++since_refresh >= 512) {
            refresh_totals();
            since_refresh = 0;
        }
        // Roundoff floor: the quadrature sum cannot be more accurate than a
        // few ulps of the total |f| mass, so oscillatory cancellation down to
        // that scale counts as converged.
        const double target =
            std::max({rel_tol * std::abs(value), abs_floor, 2e-15 * resabs});
        if (err <= target || nodes >= max_nodes) {
            refresh_totals();
            *converged = (err <= target);
            return {value, err, nodes};
        }
        // Split the interval with the largest error estimate (deterministic:
        // ties broken by position).
        std::size_t worst = 0;
        for (std::size_t i = 1; i < heap.size(); ++i)
            if (heap[i].err > heap[worst].err) worst = i;
        Interval iv = heap[worst];
        const double mid = 0.5 * (iv.a + iv.b);
        if (mid <= iv.a || mid >= iv.b) {
            // Interval no longer splittable in double precision.
            refresh_totals();
            *converged = (err <= target);
            return {value, err, nodes};
        }
        PanelResult left = gk15(f, iv.a, mid);
        PanelResult right = gk15(f, mid, iv.b);
        nodes += 30;
        value += left.value + right.value - iv.value;
        err += left.err + right.err - iv.err;
        resabs += left.resabs + right.resabs - iv.resabs;
        heap[worst] = {iv.a, mid, left.value, left.err, left.resabs};
        heap.push_back({mid, iv.b, right.value, right.err, right.resabs});
    }
}

}  // namespace

QuadratureResult integrate_gk_noexcept(const std::function<cplx(double)>& f, double a, double b,
                                       double rel_tol, int max_nodes, double abs_floor) {
    bool ok = false;
    return adaptive_gk(f, a, b, rel_tol, max_nodes, abs_floor, &ok);
}

QuadratureResult integrate_gk(const std::function<cplx(double)>& f, double a, double b,
                              double rel_tol, int max_nodes, double abs_floor) {
    bool ok = false;
    QuadratureResult r = adaptive_gk(f, a, b, rel_tol, max_nodes, abs_floor, &ok);
    if (!ok)
        throw NonConvergent("integrate_gk: error estimate " + std::to_string(r.err_estimate) +
                            " above tolerance after " + std::to_string(r.nodes_used) + " nodes");
    return r;
}

QuadratureResult haar_integrate(const std::function<cplx(ANPoint)>& f, const Contour& contour,
                                const ModularParam& p) {
    const double d = contour.offset_d;
    cplx total{0.0, 0.0};
    double err = 0.0;
    int nodes = 0;

    // Scale probe over all Z/N components: a component that is pure noise
    // (e.g. identically zero up to roundoff of the integrand) must be judged
    // against the overall mass, not against its own vanishing value.
    double probe_scale = 0.0;
    for (int n = 0; n < p.N; ++n) {
        auto g = [&f, d, n](double t) { return f(ANPoint(cplx(t, d), n)); };
        auto absg = [&g](double t) { return cplx(std::abs(g(t)), 0.0); };
        const int kProbePanels = 8;
        double resabs = 0.0;
        for (int k = 0; k < kProbePanels; ++k) {
            const double a = -contour.x_max + 2.0 * contour.x_max * k / kProbePanels;
            const double b = -contour.x_max + 2.0 * contour.x_max * (k + 1) / kProbePanels;
            QuadratureResult pr = integrate_gk_noexcept(absg, a, b, 1.0, 15, 1e300);
            resabs += pr.value.real();
        }
        probe_scale = std::max(probe_scale, resabs);
        nodes += kProbePanels * 15;
    }
    const double shared_floor = std::max(1e-300, contour.rel_tol * probe_scale / 20.0);

    for (int n = 0; n < p.N; ++n) {
        auto g = [&f, d, n](double t) { return f(ANPoint(cplx(t, d), n)); };

        double xmax = contour.x_max;
        bool ok = false;
        QuadratureResult core = adaptive_gk(g, -xmax, xmax, contour.rel_tol,
                                            contour.max_nodes, shared_floor, &ok);
        cplx value = core.value;
        double e = core.err_estimate;
        nodes += core.nodes_used;

        if (contour.grow_tail) {
            // Extend symmetrically until the outermost panels stop mattering.
            // Tail panels only need absolute accuracy on the scale of the
            // value accumulated so far, otherwise numerically-zero tails
            // would chase a relative tolerance forever.
            const double tail_tol = contour.rel_tol / 10.0;
            for (int iter = 0; iter < 60; ++iter) {
                if (nodes >= contour.max_nodes) break;
                const double span = xmax;
                const double floor =
                    std::max(shared_floor, tail_tol * std::abs(value) / 4.0);
                QuadratureResult right = integrate_gk_noexcept(g, xmax, xmax + span,
                                                               contour.rel_tol,
                                                               contour.max_nodes - nodes, floor);
                nodes += right.nodes_used;
                QuadratureResult left = integrate_gk_noexcept(g, -xmax - span, -xmax,
                                                              contour.rel_tol,
                                                              contour.max_nodes - nodes, floor);
                nodes += left.nodes_used;
                value += right.value + left.value;
                e += right.err_estimate + left.err_estimate;
                xmax += span;
                const double tail = std::abs(right.value) + std::abs(left.value);
                if (tail <= std::max(tail_tol * std::abs(value), shared_floor)) break;
            }
        }

        total += value;
        err += e;
    }

    total /= p.sqrtN();
    err /= p.sqrtN();

    if (err > contour.rel_tol * std::abs(total) + shared_floor && err > 1e-15 &&
        nodes >= contour.max_nodes)
        throw NonConvergent("haar_integrate: integrand decays too slowly or contour near a pole");

    return {total, err, nodes};
}

}  // namespace tqd
