#pragma once

#include <vector>

#include "tqd/common.hpp"
#include "tqd/modular.hpp"

namespace tqd {

// --- q-Pochhammer symbols -------------------------------------------------

// (x; q)_inf = prod_{i>=0} (1 - x q^i), |q| < 1. Throws DivergentProduct for
// |q| >= 1. Truncates once the running factor is within machine epsilon of 1.
cplx qpoch_inf(cplx x, cplx q);

// (x; q)_k finite product, exact.
cplx qpoch_fin(cplx x, cplx q, int k);

// --- classical dilogarithm and Lobachevsky function ------------------------

// Li_2(z), analytic on C minus the cut [1, inf). Accuracy ~1e-13.
cplx li2(cplx z);

// Lobachevsky function L(theta) = -int_0^theta log|2 sin t| dt, extended by
// pi-periodicity and oddness. Computed as Im(Li_2(e^{2 i theta}))/2.
double lobachevsky(double theta);

// --- Faddeev's quantum dilogarithm ------------------------------------------

// Which evaluation path produced a Phi_b value (reported by the CLI).
enum class PhiMethod { ContourIntegral, Ladder, Pochhammer };

// Phi_b(z). For b real: contour-integral representation inside the strip
// |Im z| < 0.9 |Im c_b|, difference-equation ladder outside (up to 64 steps).
// For |b| = 1, Im b != 0: ratio of q-Pochhammer symbols.
cplx phi_b(cplx z, const ModularParam& p);
cplx phi_b(cplx z, const ModularParam& p, PhiMethod* method_out);

// --- level-N quantum dilogarithm --------------------------------------------

// chi^{+-}(x, n) = e^{2 pi b^{+-1} x / sqrt(N)} e^{+- 2 pi i n / N}.
cplx chi_pm(int sign, const ANPoint& a, const ModularParam& p);

// D_b(x, n) as the product of N shifted Faddeev dilogarithms.
cplx d_b(const ANPoint& a, const ModularParam& p);

// D_b(x, n) through the ratio of infinite q-Pochhammer symbols. Requires
// Im(b) > 0 (throws RegimeError otherwise).
cplx d_b_poch(const ANPoint& a, const ModularParam& p);

// varphi_b(x, n) = D_b(x, -n), the notation used by the knot computations.
inline cplx varphi_b(const ANPoint& a, const ModularParam& p) {
    return d_b(ANPoint(a.x, -a.n).reduced(p.N), p);
}

// --- pole/zero/residue data --------------------------------------------------

struct PoleDatum {
    int l = 0;
    int m = 0;
    ANPoint location;
    cplx residue{0.0, 0.0};
};

// Pole location of D_b: x = c_b/sqrt(N) + i(b^{-1} l + b m)/sqrt(N),
// n = m - l mod N. Valid in both regimes (for b real the lattice is stacked
// on the imaginary axis).
ANPoint pole_location(int l, int m, const ModularParam& p);

// Zero location: the negated pole, n = l - m mod N.
ANPoint zero_location(int l, int m, const ModularParam& p);

// Closed-form residue of D_b at pole (l, m). Requires Im(b) > 0.
PoleDatum residue_at(int l, int m, const ModularParam& p);

// Distance from (x, n) to the nearest pole of D_b with the matching residue
// class; used for PoleHit detection.
double pole_distance(const ANPoint& a, const ModularParam& p);

// --- cyclic quantum dilogarithm ----------------------------------------------

// phi_x(n): the finite Z/NZ factor of the b->0 asymptotics of D_b, defined by
// the closed-form phi_x(0) and the first-order recursion; N-periodic in n.
cplx cyclic_phi(cplx x, int n, const ModularParam& p);

// conj(phi_{conj(x)}(n)): the Schwarz reflection of cyclic_phi, which is the
// meaning of the conjugated factors at complex saddle points.
cplx cyclic_phi_bar(cplx x, int n, const ModularParam& p);

}  // namespace tqd
