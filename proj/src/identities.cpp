#include "tqd/identities.hpp"

#include <cmath>
#include <sstream>

#include "tqd/fourier.hpp"
#include "tqd/quadrature.hpp"

namespace tqd {

namespace {

std::string param_string(const ModularParam& p) {
    std::ostringstream os;
    os << "b=" << p.b.real();
    if (p.b.imag() != 0.0) os << (p.b.imag() > 0 ? "+" : "") << p.b.imag() << "i";
    os << " N=" << p.N;
    return os.str();
}

std::vector<ANPoint> test_grid(const ModularParam& p, int points) {
    // Deterministic grid in [-1, 1] x Z/NZ avoiding the origin's symmetry.
    std::vector<ANPoint> g;
    for (int i = 0; i < points; ++i) {
        const double x = -1.0 + 2.0 * (i + 0.37) / points;
        g.emplace_back(x, i % p.N);
    }
    return g;
}

}  // namespace

const std::map<std::string, double>& identity_tolerances() {
    static const std::map<std::string, double> tol = {
        {"inversion", 1e-8},        {"unitarity", 1e-8},
        {"difference", 1e-8},       {"duality", 1e-9},
        {"representation", 1e-8},   {"fourier.closed", 1e-12},
        {"fourier.integral", 1e-6}, {"summation.closed", 1e-10},
        {"summation.integral", 1e-6},
        {"pentagon", 1e-5},         {"charged-sym", 1e-6}};
    return tol;
}

IdentityReport check_inversion(const ModularParam& p, int points) {
    IdentityReport rep{"inversion", param_string(p), 0.0, points, false};
    for (const ANPoint& z : test_grid(p, points)) {
        const cplx lhs = d_b(z, p) * d_b(ANPoint(-z.x, -z.n).reduced(p.N), p);
        const cplx rhs = gauss_kernel(z, p) / p.zeta_inv;
        rep.max_residual = std::max(rep.max_residual, std::abs(lhs - rhs));
    }
    rep.passed = rep.max_residual < identity_tolerances().at("inversion");
    return rep;
}

IdentityReport check_unitarity(const ModularParam& p, int points) {
    IdentityReport rep{"unitarity", param_string(p), 0.0, points, false};
    for (const ANPoint& z : test_grid(p, points)) {
        const cplx v = d_b(z, p);
        cplx other;
        if (p.is_real_b()) {
            other = d_b(ANPoint(z.x, -z.n).reduced(p.N), p);
        } else {
            other = v;
        }
        rep.max_residual = std::max(rep.max_residual, std::abs(std::conj(v) * other - 1.0));
    }
    rep.passed = rep.max_residual < identity_tolerances().at("unitarity");
    return rep;
}

IdentityReport check_difference_equations(const ModularParam& p, int points) {
    IdentityReport rep{"difference", param_string(p), 0.0, points, false};
    const double N = p.N;
    for (const ANPoint& z : test_grid(p, points)) {
        const cplx base = d_b(z, p);
        for (int s : {+1, -1}) {
            const cplx bpow = (s == 1) ? p.b : 1.0 / p.b;
            const cplx chi = chi_pm(s, z, p);
            const cplx up_factor =
                1.0 / (1.0 + chi * exp_ipi(cplx(-(N - 1.0) / N, 0.0)) * exp_ipi(bpow * bpow / N));
            const cplx down_factor =
                1.0 + chi * exp_ipi(cplx((N - 1.0) / N, 0.0)) * exp_ipi(-bpow * bpow / N);

            const cplx up = d_b(ANPoint(z.x + kI * bpow / p.sqrtN(), z.n + s).reduced(p.N), p);
            const cplx down = d_b(ANPoint(z.x - kI * bpow / p.sqrtN(), z.n - s).reduced(p.N), p);

            rep.max_residual = std::max(rep.max_residual, std::abs(up - base * up_factor));
            rep.max_residual = std::max(rep.max_residual, std::abs(down - base * down_factor));
        }
    }
    rep.passed = rep.max_residual < identity_tolerances().at("difference");
    return rep;
}

IdentityReport check_duality(const ModularParam& p, int points) {
    IdentityReport rep{"duality", param_string(p), 0.0, points, false};
    ModularParam pinv(1.0 / p.b, p.N);
    for (const ANPoint& z : test_grid(p, points)) {
        const cplx lhs = d_b(ANPoint(z.x, -z.n).reduced(p.N), p);
        const cplx rhs = d_b(z, pinv);
        rep.max_residual = std::max(rep.max_residual, std::abs(lhs - rhs));
    }
    rep.passed = rep.max_residual < identity_tolerances().at("duality");
    return rep;
}

IdentityReport check_representation(const ModularParam& p, int points) {
    IdentityReport rep{"representation", param_string(p), 0.0, points, false};
    if (p.b.imag() <= 0.0) throw RegimeError("check_representation: requires Im b > 0");
    for (const ANPoint& z : test_grid(p, points)) {
        const cplx lhs = d_b(z, p);
        const cplx rhs = d_b_poch(z, p);
        rep.max_residual = std::max(rep.max_residual, std::abs(lhs - rhs));
    }
    rep.passed = rep.max_residual < identity_tolerances().at("representation");
    return rep;
}

IdentityReport check_fourier_formula(cplx w, int c, const ModularParam& p) {
    IdentityReport rep{"fourier", param_string(p), 0.0, 2, false};
    const double strip = p.strip_height();
    if (!(w.imag() < 0.0) || !(-w.imag() < strip))
        throw NonConvergent("check_fourier_formula: (w,c) outside the convergence region");

    const cplx sN = cplx(p.sqrtN(), 0.0);
    const ANPoint wc(w, c);
    const ANPoint neg(-w - p.c_b / sN, -c);

    // Closed forms of int D_b <.;(w,c)>.
    const cplx f1a = exp_2ipi(w * p.c_b / sN) / d_b(neg.reduced(p.N), p) * p.zeta0;
    const cplx f1b = d_b(ANPoint(w + p.c_b / sN, c).reduced(p.N), p) *
                     gauss_kernel_conj(wc, p) / p.zeta0;
    // Closed forms of int D_b^{-1} <.;(w,c)>.
    const cplx f2a = gauss_kernel(wc, p) / d_b(neg.reduced(p.N), p) * p.zeta0;
    const cplx f2b = d_b(ANPoint(w + p.c_b / sN, c).reduced(p.N), p) *
                     exp_2ipi(-w * p.c_b / sN) / p.zeta0;

    const double closed_res = std::max(std::abs(f1a - f1b), std::abs(f2a - f2b));

    // Numeric integrals. First: contour above -Im(w) (integrand decays both
    // ways there); second: contour below Im(w), above the zero lattice.
    const double d1 = 0.5 * (-w.imag() + strip);
    const double d2 = 0.5 * (w.imag() - strip);
    Contour c1(d1, 6.0 + 4.0 / strip, 1e-9, 400000);
    Contour c2(d2, 6.0 + 4.0 / strip, 1e-9, 400000);

    auto f_num = [&](ANPoint z) { return d_b(z, p) * fourier_kernel(z, wc, p); };
    auto f_den = [&](ANPoint z) { return fourier_kernel(z, wc, p) / d_b(z, p); };
    const cplx i1 = haar_integrate(f_num, c1, p).value;
    const cplx i2 = haar_integrate(f_den, c2, p).value;

    const double int_res = std::max(std::abs(i1 - f1a), std::abs(i2 - f2a));
    rep.max_residual = std::max(closed_res, int_res);
    rep.passed = closed_res < identity_tolerances().at("fourier.closed") &&
                 int_res < identity_tolerances().at("fourier.integral");
    return rep;
}

IdentityReport check_summation(cplx u, cplx v, cplx w, int a, int b, int c,
                               const ModularParam& p) {
    IdentityReport rep{"summation", param_string(p), 0.0, 2, false};
    const cplx sN = cplx(p.sqrtN(), 0.0);
    const cplx shift = p.c_b / sN;

    if (!((v + shift).imag() > 0.0))
        throw PreconditionViolated("summation: Im(v + c_b/sqrt(N)) > 0 fails");
    if (!((-u + shift).imag() > 0.0))
        throw PreconditionViolated("summation: Im(-u + c_b/sqrt(N)) > 0 fails");
    if (!((v - u).imag() < w.imag()))
        throw PreconditionViolated("summation: Im(v-u) < Im(w) fails");
    if (!(w.imag() < 0.0))
        throw PreconditionViolated("summation: Im(w) < 0 fails");

    auto f = [&](ANPoint z) {
        const int d = z.n;
        const cplx num = d_b(ANPoint(z.x + u, a + d).reduced(p.N), p);
        const cplx den = d_b(ANPoint(z.x + v, b + d).reduced(p.N), p);
        return num / den * exp_2ipi(w * z.x) *
               exp_2ipi(cplx(-static_cast<double>(c) * d / p.N, 0.0));
    };
    Contour contour(0.0, 8.0 + 4.0 / p.strip_height(), 1e-9, 400000);
    const cplx psi = haar_integrate(f, contour, p).value;

    auto wpow = [&](int k) { return exp_2ipi(cplx(static_cast<double>(k) / p.N, 0.0)); };

    const cplx closed1 = p.zeta0 *
                         d_b(ANPoint(v - u - w + shift, b - a - c).reduced(p.N), p) /
                         (d_b(ANPoint(-w - shift, -c).reduced(p.N), p) *
                          d_b(ANPoint(v - u + shift, b - a).reduced(p.N), p)) *
                         exp_2ipi(w * (shift - u)) * wpow(a * c);
    const cplx closed2 = 1.0 / p.zeta0 *
                         d_b(ANPoint(w + shift, c).reduced(p.N), p) *
                         d_b(ANPoint(-v + u - shift, -b + a).reduced(p.N), p) /
                         d_b(ANPoint(-v + u + w - shift, -b + a + c).reduced(p.N), p) *
                         exp_2ipi(w * (-shift - v)) * wpow(b * c);

    const double closed_res = std::abs(closed1 - closed2);
    const double int_res = std::abs(psi - closed1);
    rep.max_residual = std::max(closed_res, int_res);
    rep.passed = closed_res < identity_tolerances().at("summation.closed") &&
                 int_res < identity_tolerances().at("summation.integral");
    return rep;
}

IdentityReport check_integral_pentagon(const ANPoint& x, const ANPoint& y,
                                       const ModularParam& p, double charge_scale) {
    IdentityReport rep{"pentagon", param_string(p), 0.0, 1, false};

    // Symmetric solution of the pentagon charge conditions.
    const double t = charge_scale / (8.0 * p.sqrtN());
    const double s = t;
    const std::array<double, 5> ca = {t, 2 * t, t, 2 * t, t};
    const std::array<double, 5> cc = {s, s + t, 2 * s + 2 * t, s + t, s};
    if (!charge_pentagon_constraints(ca, cc, p.N).ok)
        throw Error("check_integral_pentagon: internal charge solution invalid");

    std::vector<ChargeTriple> ch;
    ch.reserve(5);
    for (int j = 0; j < 5; ++j) ch.push_back(ChargeTriple::from_ac(ca[j], cc[j], p.N));

    auto phi_j = [&](int j, const ANPoint& z) {
        const ChargeTriple swapped(ch[j].c, ch[j].a, ch[j].b, p.N);
        return psi_charged(ANPoint(z.x, -z.n), swapped, p);  // varphi_{c_j, b_j}
    };

    // Absolutely convergent charged pentagon:
    //   int phi4(w) phi2(x-w) phi0(y+w) <y,w> <w>^2 dw = mu' phi1(x+y) phi3(x).
    auto integrand = [&](ANPoint wpt) {
        return phi_j(4, wpt) * phi_j(2, (x - wpt).reduced(p.N)) *
               phi_j(0, (y + wpt).reduced(p.N)) * fourier_kernel(y, wpt, p) *
               gauss_kernel(wpt, p) * gauss_kernel(wpt, p);
    };
    const double kappa = p.c_b.imag();
    const double rate = 2.0 * kPi * kappa * std::min(t, s);
    Contour contour(0.0, 46.0 / rate, 1e-8, 800000);
    const cplx lhs = haar_integrate(integrand, contour, p).value;

    const cplx mu = exp_ipi(p.c_b * p.c_b / (6.0 * p.sqrtN()) *
                            (2.0 * (cc[0] + ca[2] + cc[4]) - 1.0 / p.sqrtN()));
    cplx nu_ratio = nu_pair(cc[1], 1.0 / p.sqrtN() - ca[1] - cc[1], p) *
                    nu_pair(cc[3], 1.0 / p.sqrtN() - ca[3] - cc[3], p);
    nu_ratio /= nu_pair(cc[0], 1.0 / p.sqrtN() - ca[0] - cc[0], p) *
                nu_pair(cc[2], 1.0 / p.sqrtN() - ca[2] - cc[2], p) *
                nu_pair(cc[4], 1.0 / p.sqrtN() - ca[4] - cc[4], p);
    const cplx mu_prime = mu * nu_ratio * exp_ipi(cplx(p.N / 12.0, 0.0));

    const cplx rhs = mu_prime * phi_j(1, (x + y).reduced(p.N)) * phi_j(3, x);

    rep.max_residual = std::abs(lhs - rhs) / std::max(1.0, std::abs(rhs));
    rep.passed = rep.max_residual < identity_tolerances().at("pentagon");
    return rep;
}

IdentityReport check_charged_symmetries(const ModularParam& p) {
    const ChargeTriple ch = ChargeTriple::from_ac(0.2 / p.sqrtN(), 0.2 / p.sqrtN(), p.N);
    std::vector<ANPoint> grid;
    for (int i = 0; i < 5; ++i) grid.emplace_back(-1.0 + 0.5 * i, i % p.N);
    const ChargedSymmetryReport r = charged_symmetries_check(ch, p, grid);

    IdentityReport rep{"charged-sym", param_string(p), 0.0, 5, false};
    rep.max_residual =
        std::max({r.residual_tilde, r.residual_conj, r.residual_conj_tilde});
    rep.passed = rep.max_residual < identity_tolerances().at("charged-sym");
    return rep;
}

std::vector<cplx> default_b_grid() {
    return {cplx(0.7, 0.0), cplx(1.0, 0.0), cplx(1.3, 0.0), expi(kPi / 5.0), expi(kPi / 6.0)};
}

std::vector<int> default_n_grid() { return {1, 3, 5}; }

std::vector<std::string> all_suite_names() {
    return {"inversion", "unitarity", "difference", "duality",
            "representation", "fourier", "summation", "pentagon", "charged-sym"};
}

std::vector<IdentityReport> run_suite(const std::vector<std::string>& names,
                                      const std::vector<cplx>& b_grid,
                                      const std::vector<int>& n_grid) {
    const auto known = all_suite_names();
    for (const auto& n : names) {
        bool ok = false;
        for (const auto& k : known) ok = ok || (k == n);
        if (!ok) throw Error("run_suite: unknown suite name '" + n + "'");
    }

    std::vector<IdentityReport> out;
    for (const std::string& name : names) {
        for (cplx b : b_grid) {
            for (int N : n_grid) {
                ModularParam p(b, N);
                const bool unit_circle = !p.is_real_b();
                if (name == "inversion") {
                    out.push_back(check_inversion(p));
                } else if (name == "unitarity") {
                    out.push_back(check_unitarity(p));
                } else if (name == "difference") {
                    out.push_back(check_difference_equations(p));
                } else if (name == "duality") {
                    out.push_back(check_duality(p));
                } else if (name == "representation") {
                    if (!unit_circle || p.b.imag() <= 0.0) continue;
                    out.push_back(check_representation(p));
                } else if (name == "fourier") {
                    const double h = p.strip_height();
                    IdentityReport acc{"fourier", param_string(p), 0.0, 0, true};
                    const std::vector<std::pair<cplx, int>> pts = {
                        {cplx(0.0, -0.30 * h), 0},
                        {cplx(0.0, -0.55 * h), 1 % p.N},
                        {cplx(0.20 * h, -0.40 * h), 2 % p.N},
                        {cplx(-0.15 * h, -0.65 * h), 0}};
                    for (auto [w, c] : pts) {
                        IdentityReport r = check_fourier_formula(w, c, p);
                        acc.max_residual = std::max(acc.max_residual, r.max_residual);
                        acc.passed = acc.passed && r.passed;
                        acc.points_checked += 1;
                    }
                    out.push_back(acc);
                } else if (name == "summation") {
                    const double h = p.strip_height();
                    IdentityReport acc{"summation", param_string(p), 0.0, 0, true};
                    struct Pt { cplx u, v, w; int a, b, c; };
                    const std::vector<Pt> pts = {
                        {cplx(0.0, 0.25 * h), cplx(0.0, -0.25 * h), cplx(-0.1, -0.06 * h), 0, 0, 0},
                        {cplx(0.0, 0.20 * h), cplx(0.0, -0.30 * h), cplx(0.05, -0.10 * h),
                         1 % p.N, 2 % p.N, 1 % p.N},
                        {cplx(0.05, 0.30 * h), cplx(-0.05, -0.20 * h), cplx(0.0, -0.12 * h),
                         0, 1 % p.N, 2 % p.N}};
                    for (const Pt& q : pts) {
                        IdentityReport r = check_summation(q.u, q.v, q.w, q.a, q.b, q.c, p);
                        acc.max_residual = std::max(acc.max_residual, r.max_residual);
                        acc.passed = acc.passed && r.passed;
                        acc.points_checked += 1;
                    }
                    out.push_back(acc);
                } else if (name == "pentagon") {
                    IdentityReport acc{"pentagon", param_string(p), 0.0, 0, true};
                    const std::vector<std::pair<ANPoint, ANPoint>> pts = {
                        {ANPoint(0.0, 0), ANPoint(0.0, 0)},
                        {ANPoint(0.1, 1 % p.N), ANPoint(-0.1, 2 % p.N)},
                        {ANPoint(-0.2, 0), ANPoint(0.15, 1 % p.N)}};
                    for (const auto& [px, py] : pts) {
                        IdentityReport r = check_integral_pentagon(px, py, p);
                        acc.max_residual = std::max(acc.max_residual, r.max_residual);
                        acc.passed = acc.passed && r.passed;
                        acc.points_checked += 1;
                    }
                    out.push_back(acc);
                } else if (name == "charged-sym") {
                    out.push_back(check_charged_symmetries(p));
                }
            }
        }
    }
    return out;
}

}  // namespace tqd
