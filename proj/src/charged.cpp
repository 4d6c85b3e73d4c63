#include "tqd/charged.hpp"

#include <cmath>

#include "tqd/fourier.hpp"

namespace tqd {

ANPoint epsilon_involution(const ANPoint& z, const ModularParam& p) {
    if (p.regime == DilogRegime::UnitCircleB) return z;
    return ANPoint(z.x, -z.n).reduced(p.N);
}

cplx psi_charged(const ANPoint& z, const ChargeTriple& ch, const ModularParam& p) {
    const cplx shifted = z.x - p.c_b * (ch.a + ch.c);
    const cplx num = std::exp(-2.0 * kI * kPi * p.c_b * ch.a * z.x);
    return num / d_b(ANPoint(shifted, z.n), p);
}

cplx phi_charged(const ANPoint& z, const ChargeTriple& ch, const ModularParam& p) {
    return psi_charged(ANPoint(z.x, -z.n), ch, p);
}

cplx phi_charged_tilde(const ANPoint& z, const ChargeTriple& ch, const ModularParam& p) {
    const ChargeTriple swapped(ch.c, ch.a, ch.b, p.N);
    const cplx lhs_nu = nu_pair(ch.a, ch.c, p);
    const cplx rhs_nu = nu_pair(ch.c, ch.b, p);
    return rhs_nu / lhs_nu * phi_charged(z, swapped, p) * gauss_kernel(z, p) *
           exp_ipi(cplx(-static_cast<double>(p.N) / 12.0, 0.0));
}

cplx nu(double x, const ModularParam& p) {
    const cplx cb2 = p.c_b * p.c_b;
    return exp_ipi(-(cb2 / p.sqrtN()) * (2.0 * x + 1.0 / p.sqrtN()) / 6.0);
}

cplx nu_pair(double x, double y, const ModularParam& p) {
    const cplx cb2 = p.c_b * p.c_b;
    return nu(x - y, p) * exp_ipi(cb2 * x * (x + y));
}

ChargedSymmetryReport charged_symmetries_check(const ChargeTriple& ch, const ModularParam& p,
                                               const std::vector<ANPoint>& grid) {
    ChargedSymmetryReport rep;
    rep.points_checked = static_cast<int>(grid.size());

    const cplx cb2 = p.c_b * p.c_b;
    const double eps_sign = p.is_real_b() ? 1.0 : -1.0;  // the lemma's scalar epsilon

    // The psi integrand decays at rate 2 pi Im(c_b) min(a, b, c); pick the
    // contour span from that rate.
    const double rate = 2.0 * kPi * p.c_b.imag() * std::min({ch.a, ch.b, ch.c});
    Contour contour(0.0, std::max(6.0, 44.0 / rate), 1e-9, 400000);

    auto psi = [&](const ANPoint& z) { return psi_charged(z, ch, p); };
    ANFunction psi_tilde = inverse_fourier(psi, p, contour);

    for (const ANPoint& z : grid) {
        const double x = z.x.real();
        const int k = z.n;

        const cplx tilde_numeric = psi_tilde(z);

        // (1) psi~_{a,c}(x,k) = psi_{c,b}(x,k) <x,k> e^{-pi i c_b^2 a(a+2c)} zeta0
        {
            const ChargeTriple cb_ch(ch.c, ch.a, ch.b, p.N);
            const cplx closed = psi_charged(z, cb_ch, p) * gauss_kernel(z, p) *
                                exp_ipi(-cb2 * ch.a * (ch.a + 2.0 * ch.c)) * p.zeta0;
            rep.residual_tilde = std::max(rep.residual_tilde, std::abs(tilde_numeric - closed));
        }

        // (2) conj psi_{a,c}(x,k) = psi_{c,a}(-x, eps k) <x,k> e^{pi i c_b^2 (a+c)^2} / zeta_inv
        {
            const ChargeTriple ca_ch(ch.c, ch.b, ch.a, p.N);
            const ANPoint flipped = ANPoint(-x, static_cast<int>(eps_sign) * k).reduced(p.N);
            const cplx base = psi_charged(flipped, ca_ch, p) * gauss_kernel(z, p);
            const cplx lhs = std::conj(psi_charged(z, ch, p));
            const cplx closed = base * exp_ipi(cb2 * (ch.a + ch.c) * (ch.a + ch.c)) / p.zeta_inv;
            const cplx printed = base * std::exp(kPi * cb2 * (ch.a + ch.c) * (ch.a + ch.c)) *
                                 p.zeta_inv;
            rep.residual_conj = std::max(rep.residual_conj, std::abs(lhs - closed));
            rep.residual_conj_as_printed =
                std::max(rep.residual_conj_as_printed, std::abs(lhs - printed));
        }

        // (3) conj psi~_{a,c}(x,k) = psi_{b,c}(-x, eps k) e^{-2 pi i c_b^2 a b} zeta0
        {
            const ChargeTriple bc_ch(ch.b, ch.a, ch.c, p.N);
            const ANPoint flipped = ANPoint(-x, static_cast<int>(eps_sign) * k).reduced(p.N);
            const cplx closed = psi_charged(flipped, bc_ch, p) *
                                exp_2ipi(-cb2 * ch.a * ch.b) * p.zeta0;
            rep.residual_conj_tilde =
                std::max(rep.residual_conj_tilde, std::abs(std::conj(tilde_numeric) - closed));
        }
    }
    return rep;
}

ChargeConstraintResult charge_pentagon_constraints(const std::array<double, 5>& a,
                                                   const std::array<double, 5>& c, int N) {
    ChargeConstraintResult r;
    r.slack[0] = std::abs(a[1] - a[0] - a[2]);
    r.slack[1] = std::abs(a[3] - a[2] - a[4]);
    r.slack[2] = std::abs(c[1] - c[0] - a[4]);
    r.slack[3] = std::abs(c[3] - a[0] - c[4]);
    r.slack[4] = std::abs(c[2] - c[1] - c[3]);

    bool ok = true;
    for (double s : r.slack) ok = ok && (s < 1e-12);
    if (ok) {
        const double target = 1.0 / std::sqrt(static_cast<double>(N));
        for (int j = 0; j < 5; ++j) {
            const double bj = target - a[j] - c[j];
            if (a[j] <= 0.0 || c[j] <= 0.0 || bj <= 0.0) ok = false;
        }
    }
    r.ok = ok;
    return r;
}

}  // namespace tqd
