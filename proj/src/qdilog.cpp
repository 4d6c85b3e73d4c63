#include "tqd/qdilog.hpp"

#include <algorithm>
#include <array>
#include <cmath>

#include "tqd/quadrature.hpp"

namespace tqd {

// ---------------------------------------------------------------------------
// q-Pochhammer
// ---------------------------------------------------------------------------

cplx qpoch_inf(cplx x, cplx q) {
    if (std::abs(q) >= 1.0)
        throw DivergentProduct("qpoch_inf: |q| >= 1, infinite product diverges");
    cplx prod{1.0, 0.0};
    cplx xq = x;
    for (int i = 0; i < 100000; ++i) {
        if (std::abs(xq) < 1e-18) break;
        prod *= (1.0 - xq);
        xq *= q;
    }
    return prod;
}

cplx qpoch_fin(cplx x, cplx q, int k) {
    if (k < 0) throw Error("qpoch_fin: k must be nonnegative");
    cplx prod{1.0, 0.0};
    cplx xq = x;
    for (int i = 0; i < k; ++i) {
        prod *= (1.0 - xq);
        xq *= q;
    }
    return prod;
}

// ---------------------------------------------------------------------------
// Li2 and Lobachevsky
// ---------------------------------------------------------------------------

namespace {

// Coefficients B_n / (n+1)! of the expansion Li2(z) = sum c_n u^{n+1},
// u = -log(1-z). Odd Bernoulli numbers vanish beyond B_1.
const std::array<double, 16> kEvenBernoulli = {
    1.0, 1.0 / 6, -1.0 / 30, 1.0 / 42, -1.0 / 30, 5.0 / 66, -691.0 / 2730, 7.0 / 6,
    -3617.0 / 510, 43867.0 / 798, -174611.0 / 330, 854513.0 / 138,
    -236364091.0 / 2730, 8553103.0 / 6, -23749461029.0 / 870, 8615841276005.0 / 14322};

std::array<double, 32> make_li2_coeffs() {
    std::array<double, 32> c{};
    double fact = 1.0;  // (n+1)! running
    for (int n = 0; n < 32; ++n) {
        fact *= (n + 1);
        double bn = 0.0;
        if (n == 0) bn = 1.0;
        else if (n == 1) bn = -0.5;
        else if (n % 2 == 0) bn = kEvenBernoulli[n / 2];
        c[n] = bn / fact;
    }
    return c;
}

const std::array<double, 32> kLi2Coeff = make_li2_coeffs();

cplx li2_core(cplx z) {
    // Requires z in the region where u = -log(1-z) is small (|u| < ~2).
    const cplx u = -std::log(1.0 - z);
    cplx sum{0.0, 0.0};
    cplx up = u;
    for (int n = 0; n < 32; ++n) {
        sum += kLi2Coeff[n] * up;
        up *= u;
        if (std::abs(up) * 1e-18 > std::abs(sum) || std::abs(up) < 1e-300) break;
    }
    return sum;
}

}  // namespace

cplx li2(cplx z) {
    if (z.imag() == 0.0 && z.real() >= 1.0)
        throw BranchCut("li2: argument on the branch cut [1, inf)");
    if (z == cplx(0.0, 0.0)) return {0.0, 0.0};

    const double pi2_6 = kPi * kPi / 6.0;
    cplx result{0.0, 0.0};
    cplx sign{1.0, 0.0};

    if (std::abs(z) > 1.0) {
        // Inversion: Li2(z) = -Li2(1/z) - pi^2/6 - log^2(-z)/2.
        const cplx lz = std::log(-z);
        result += -pi2_6 - 0.5 * lz * lz;
        sign = -sign;
        z = 1.0 / z;
    }
    if (z.real() > 0.5) {
        // Reflection: Li2(z) = pi^2/6 - log(z)log(1-z) - Li2(1-z).
        result += sign * (pi2_6 - std::log(z) * std::log(1.0 - z));
        sign = -sign;
        z = 1.0 - z;
    }
    return result + sign * li2_core(z);
}

double lobachevsky(double theta) {
    // Reduce by pi-periodicity; odd around 0.
    double t = std::remainder(theta, kPi);
    if (std::abs(t) < 1e-15) return 0.0;
    return 0.5 * li2(expi(2.0 * t)).imag();
}

// ---------------------------------------------------------------------------
// Faddeev's quantum dilogarithm
// ---------------------------------------------------------------------------

namespace {

// Integrand of log Phi_b on the real axis, away from the origin, in
// overflow-safe exponential form:
//   e^{-2izw} / (4 sinh(wb) sinh(w/b) w).
cplx phi_integrand_tail(double w, cplx z, double b) {
    const double s = b + 1.0 / b;
    const double aw = std::abs(w);
    // 4 sinh(wb) sinh(w/b) = e^{|w| s} (1 - e^{-2|w|b})(1 - e^{-2|w|/b}).
    const double d1 = -std::expm1(-2.0 * aw * b);
    const double d2 = -std::expm1(-2.0 * aw / b);
    const cplx expo = std::exp(-2.0 * kI * z * w - aw * s);
    return expo / (w * d1 * d2);
}

cplx phi_b_contour(cplx z, double b) {
    const double rho = std::min({1.0, b, 1.0 / b}) / 4.0;
    const double s = b + 1.0 / b;
    const double rate = s - 2.0 * std::abs(z.imag());
    if (rate <= 0.05 * s)
        throw EvalFailure("phi_b: argument too close to the strip boundary");
    const double T = std::max(rho * 2.0, 44.0 / rate);

    // Semicircle of radius rho above the origin, traversed from pi to 0.
    auto semi = [&](double theta) -> cplx {
        const cplx w = rho * expi(theta);
        const cplx dw = kI * w;  // d/dtheta of rho e^{i theta}
        const cplx den = 4.0 * std::sinh(w * b) * std::sinh(w / b) * w;
        return -std::exp(-2.0 * kI * z * w) / den * dw;  // minus: theta runs pi->0
    };
    QuadratureResult arc = integrate_gk([&](double th) { return semi(th); }, 0.0, kPi,
                                        3e-13, 20000, 1e-18);

    auto tail = [&](double w) { return phi_integrand_tail(w, z, b); };
    QuadratureResult right = integrate_gk(tail, rho, T, 3e-13, 400000, 1e-18);
    QuadratureResult left = integrate_gk(tail, -T, -rho, 3e-13, 400000, 1e-18);

    return std::exp(arc.value + left.value + right.value);
}

// D_b(x,n) via Pochhammer ratio; requires Im(b) > 0. Shared by d_b_poch and
// the |b|=1 branch of phi_b (at N = 1).
cplx d_b_poch_impl(const ANPoint& a0, const ModularParam& p) {
    const ANPoint a = a0.reduced(p.N);
    const cplx Q = p.q_poch * p.q_poch * p.omega;
    const cplx Qt = p.q_tilde_poch * p.q_tilde_poch * std::conj(p.omega);
    if (std::abs(Q) >= 1.0 || std::abs(Qt) >= 1.0)
        throw RegimeError("d_b_poch: representation requires Im(b) > 0");
    const cplx num = qpoch_inf(chi_pm(+1, ANPoint(a.x + p.c_b / p.sqrtN(), a.n), p), Q);
    const cplx den = qpoch_inf(chi_pm(-1, ANPoint(a.x - p.c_b / p.sqrtN(), a.n), p), Qt);
    if (std::abs(den) < 1e-250)
        throw PoleHit("d_b_poch: evaluation at a pole of D_b");
    return num / den;
}

}  // namespace

cplx phi_b(cplx z, const ModularParam& p, PhiMethod* method_out) {
    if (p.regime == DilogRegime::UnitCircleB) {
        // Phi_b is invariant under b -> 1/b; pick the representative with
        // Im(b) > 0 so the Pochhammer ratio converges.
        cplx beff = (p.b.imag() > 0.0) ? p.b : 1.0 / p.b;
        ModularParam p1(beff, 1);
        if (method_out) *method_out = PhiMethod::Pochhammer;
        return d_b_poch_impl(ANPoint(z, 0), p1);
    }

    const double b = p.b.real();
    const double kappa = 0.5 * (b + 1.0 / b);  // = Im c_b
    if (std::abs(z.imag()) < 0.9 * kappa) {
        if (method_out) *method_out = PhiMethod::ContourIntegral;
        return phi_b_contour(z, b);
    }

    // Ladder out of the strip with the difference equations, stepping by the
    // smaller of b, 1/b toward the real axis.
    if (method_out) *method_out = PhiMethod::Ladder;
    const double step = std::min(b, 1.0 / b);
    const cplx step2 = exp_ipi(cplx(step * step, 0.0));  // e^{i pi step^2}
    cplx factor{1.0, 0.0};
    cplx zz = z;
    int iters = 0;
    while (std::abs(zz.imag()) >= 0.9 * kappa) {
        if (++iters > 64) throw EvalFailure("phi_b: ladder failed to reach the strip");
        if (zz.imag() > 0.0) {
            // Phi(z) = Phi(z - i step) / (1 + e^{i pi step^2} e^{2 pi step (z - i step)})
            zz -= kI * step;
            factor /= (1.0 + step2 * std::exp(2.0 * kPi * step * zz));
        } else {
            // Phi(z) = Phi(z + i step) (1 + e^{i pi step^2} e^{2 pi step z})
            factor *= (1.0 + step2 * std::exp(2.0 * kPi * step * zz));
            zz += kI * step;
        }
    }
    return factor * phi_b_contour(zz, b);
}

cplx phi_b(cplx z, const ModularParam& p) { return phi_b(z, p, nullptr); }

// ---------------------------------------------------------------------------
// level-N quantum dilogarithm
// ---------------------------------------------------------------------------

cplx chi_pm(int sign, const ANPoint& a, const ModularParam& p) {
    if (sign != 1 && sign != -1) throw Error("chi_pm: sign must be +1 or -1");
    const cplx bpow = (sign == 1) ? p.b : 1.0 / p.b;
    const cplx expo = 2.0 * kPi * bpow / p.sqrtN() * a.x;
    const cplx phase = exp_2ipi(cplx(sign * static_cast<double>(a.n) / p.N, 0.0));
    return std::exp(expo) * phase;
}

cplx d_b(const ANPoint& a0, const ModularParam& p) {
    const ANPoint a = a0.reduced(p.N);
    if (pole_distance(a, p) < 1e-12)
        throw PoleHit("d_b: argument within 1e-12 of a pole");
    const double N = p.N;
    const cplx binv = 1.0 / p.b;
    cplx prod{1.0, 0.0};
    for (int j = 0; j < p.N; ++j) {
        const double frac = static_cast<double>((j + a.n) % p.N) / N;
        const cplx arg = a.x / p.sqrtN() + (1.0 - 1.0 / N) * p.c_b -
                         kI * binv * (static_cast<double>(j) / N) - kI * p.b * frac;
        prod *= phi_b(arg, p);
    }
    return prod;
}

cplx d_b_poch(const ANPoint& a, const ModularParam& p) {
    if (p.b.imag() <= 0.0)
        throw RegimeError("d_b_poch: requires Im(b) > 0");
    return d_b_poch_impl(a, p);
}

// ---------------------------------------------------------------------------
// poles, zeros, residues
// ---------------------------------------------------------------------------

ANPoint pole_location(int l, int m, const ModularParam& p) {
    if (l < 0 || m < 0) throw Error("pole_location: l, m must be nonnegative");
    const cplx x = (p.c_b + kI * (static_cast<double>(l) / p.b + static_cast<double>(m) * p.b)) /
                   p.sqrtN();
    return ANPoint(x, m - l).reduced(p.N);
}

ANPoint zero_location(int l, int m, const ModularParam& p) {
    ANPoint pole = pole_location(l, m, p);
    return ANPoint(-pole.x, l - m).reduced(p.N);
}

PoleDatum residue_at(int l, int m, const ModularParam& p) {
    if (l < 0 || m < 0) throw Error("residue_at: l, m must be nonnegative");
    if (p.b.imag() <= 0.0)
        throw RegimeError("residue_at: closed-form residue requires Im(b) > 0");
    const cplx Q = p.q_poch * p.q_poch * p.omega;
    const cplx Qt = p.q_tilde_poch * p.q_tilde_poch * std::conj(p.omega);

    // Simple pole of the Pochhammer-ratio representation: the factor j = l of
    // the denominator vanishes. Derivative of that factor contributes
    // -(2 pi / (b^{-1} sqrt(N))); the remaining denominator factors split into
    // j > l (giving (Qt;Qt)_inf) and j < l (giving the signed finite symbol).
    PoleDatum d;
    d.l = l;
    d.m = m;
    d.location = pole_location(l, m, p);
    const cplx numerator = qpoch_inf(Q, Q) / qpoch_fin(Q, Q, m);
    const double sign_l = (l % 2 == 0) ? 1.0 : -1.0;
    const cplx qt_pow = std::pow(Qt, 0.5 * static_cast<double>(l) * (l + 1));
    const cplx denominator = qpoch_inf(Qt, Qt) * qpoch_fin(Qt, Qt, l);
    d.residue = -(p.sqrtN() * p.b / (2.0 * kPi)) * numerator * sign_l * qt_pow / denominator;
    return d;
}

double pole_distance(const ANPoint& a0, const ModularParam& p) {
    const ANPoint a = a0.reduced(p.N);
    // Scan lattice points with imaginary height near Im(a.x); the lattice
    // starts at strip_height and grows linearly in (l, m).
    const double ih = a.x.imag();
    const double sN = p.sqrtN();
    const double lb = (1.0 / p.b).imag() / sN + (1.0 / p.b).real() / sN;
    (void)lb;
    double best = 1e300;
    const int lmax = 4 + static_cast<int>(std::abs(ih) * sN * std::max(std::abs(p.b), 1.0) * 2.0);
    for (int l = 0; l <= lmax; ++l) {
        for (int m = 0; m <= lmax; ++m) {
            if ((m - l - a.n) % p.N != 0) continue;
            const cplx x = (p.c_b + kI * (static_cast<double>(l) / p.b +
                                          static_cast<double>(m) * p.b)) / sN;
            best = std::min(best, std::abs(a.x - x));
        }
    }
    return best;
}

// ---------------------------------------------------------------------------
// cyclic quantum dilogarithm
// ---------------------------------------------------------------------------

cplx cyclic_phi(cplx x, int n, const ModularParam& p) {
    const double N = p.N;
    const cplx exN = std::exp(x * p.sqrtN());
    const cplx base = 1.0 + exN;
    if (std::abs(base) < 1e-14)
        throw SingularInput("cyclic_phi: 1 + e^{x sqrt(N)} = 0");

    const cplx exn = std::exp(x / p.sqrtN());
    const cplx wbar = std::conj(p.omega);

    // phi_x(0), principal branches throughout.
    cplx phi0 = std::pow(base, -(N - 1.0) / (2.0 * N));
    for (int j = 1; j < p.N; ++j) {
        const cplx root = std::exp(-kI * kPi * (2.0 * j + 1.0) / N);
        phi0 *= std::pow(1.0 - exn * root, static_cast<double>(j) / N);
    }

    int k = n % p.N;
    if (k < 0) k += p.N;
    const cplx stepden = std::pow(base, 1.0 / N);
    cplx phi = phi0;
    for (int j = 0; j < k; ++j) {
        const cplx wfac = std::pow(wbar, cplx(j + 0.5, 0.0));
        phi *= (1.0 - exn * wfac) / stepden;
    }
    return phi;
}

cplx cyclic_phi_bar(cplx x, int n, const ModularParam& p) {
    return std::conj(cyclic_phi(std::conj(x), n, p));
}

}  // namespace tqd
