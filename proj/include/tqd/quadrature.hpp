#pragma once

#include <functional>

#include "tqd/common.hpp"
#include "tqd/modular.hpp"

namespace tqd {

// Contour description for integrals over A_N: the real line shifted to
// R + i*offset_d, truncated at |Re| = x_max (grown adaptively when the tail
// still contributes). The Z/NZ factor is always an exact finite sum.
struct Contour {
    double offset_d = 0.0;
    double x_max = 8.0;
    double rel_tol = 1e-10;
    int max_nodes = 200000;
    bool grow_tail = true;  // extend x_max until the last panel is negligible

    Contour() = default;
    Contour(double d, double xmax, double tol = 1e-10, int maxn = 200000)
        : offset_d(d), x_max(xmax), rel_tol(tol), max_nodes(maxn) {
        if (x_max <= 0.0) throw Error("Contour: x_max must be positive");
        if (rel_tol <= 0.0) throw Error("Contour: rel_tol must be positive");
    }

    Contour with_offset(double d) const {
        Contour c = *this;
        c.offset_d = d;
        return c;
    }
};

struct QuadratureResult {
    cplx value{0.0, 0.0};
    double err_estimate = 0.0;
    int nodes_used = 0;
};

// Adaptive Gauss-Kronrod (G7,K15) integration of a complex integrand over the
// real segment [a, b]. Throws NonConvergent when the node budget is exhausted
// before the error estimate falls below rel_tol*|value| + abs_floor.
QuadratureResult integrate_gk(const std::function<cplx(double)>& f, double a, double b,
                              double rel_tol, int max_nodes, double abs_floor = 1e-300);

// Same, but returns the partial result instead of throwing; used internally
// for tail growth where a panel can legitimately be ~0.
QuadratureResult integrate_gk_noexcept(const std::function<cplx(double)>& f, double a, double b,
                                       double rel_tol, int max_nodes, double abs_floor = 1e-300);

// Normalized Haar integral over A_N along a shifted contour:
//   (1/sqrt(N)) * sum_{n=0}^{N-1} int_{R + i d} f(x, n) dx.
// The integrand receives x already shifted (Im x = offset_d).
QuadratureResult haar_integrate(const std::function<cplx(ANPoint)>& f, const Contour& contour,
                                const ModularParam& p);

}  // namespace tqd
