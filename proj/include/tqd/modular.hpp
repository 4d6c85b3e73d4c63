#pragma once

#include <cmath>
#include <cstdint>

#include "tqd/common.hpp"

namespace tqd {

// Evaluation regime for the quantum dilogarithm family.
//   RealB:       b real positive. Contour-integral representation of Phi_b
//                near the real axis, difference-equation ladder outside.
//   UnitCircleB: |b| = 1 with Im(b) != 0, so Im(b^2) != 0 and the
//                q-Pochhammer ratio representation converges.
enum class DilogRegime { RealB, UnitCircleB };

// The pair (b, N) together with every derived constant used by the theory.
// Valid parameters have Re(b) > 0 and Im(b)*(1 - |b|) = 0, N odd.
struct ModularParam {
    cplx b;
    int N = 1;

    cplx c_b;           // i (b + 1/b) / 2
    cplx omega;         // exp(2 pi i / N)
    cplx q_poch;        // exp(i pi b^2 / N)
    cplx q_tilde_poch;  // exp(-i pi b^-2 / N)
    cplx zeta0;         // exp(-pi i (N - 4 c_b^2 / N) / 12)
    cplx zeta_inv;      // exp( pi i (N + 2 c_b^2 / N) / 6)
    DilogRegime regime = DilogRegime::RealB;

    ModularParam(cplx b_, int N_) : b(b_), N(N_) {
        if (N < 1 || N % 2 == 0) throw Error("ModularParam: N must be odd and >= 1");
        if (b.real() <= 0.0) throw Error("ModularParam: Re(b) must be positive");
        const double unit_defect = std::abs(b.imag()) * std::abs(1.0 - std::abs(b));
        if (unit_defect > 1e-12)
            throw Error("ModularParam: b must be real positive or on the unit circle");
        regime = (std::abs(b.imag()) < 1e-14) ? DilogRegime::RealB : DilogRegime::UnitCircleB;
        if (regime == DilogRegime::RealB) b = cplx(b.real(), 0.0);

        const cplx b2 = b * b;
        const cplx binv = 1.0 / b;
        c_b = kI * (b + binv) * 0.5;
        omega = exp_2ipi(cplx(1.0 / N, 0.0));
        q_poch = exp_ipi(b2 / static_cast<double>(N));
        q_tilde_poch = exp_ipi(-(binv * binv) / static_cast<double>(N));
        const cplx cb2N = c_b * c_b / static_cast<double>(N);
        zeta0 = exp_ipi(-(static_cast<double>(N) - 4.0 * cb2N) / 12.0);
        zeta_inv = exp_ipi((static_cast<double>(N) + 2.0 * cb2N) / 6.0);
    }

    double sqrtN() const { return std::sqrt(static_cast<double>(N)); }

    // Height of the pole-free strip of D_b around the real axis: the first
    // pole/zero sits at |Im x| = Im(c_b)/sqrt(N).
    double strip_height() const { return c_b.imag() / sqrtN(); }

    bool is_real_b() const { return regime == DilogRegime::RealB; }
};

// A point of A_N = R x Z/NZ. The coordinate x is complex-valued so that
// shifted contours ("A_N + i d") can be represented by the same type.
struct ANPoint {
    cplx x{0.0, 0.0};
    int n = 0;

    ANPoint() = default;
    ANPoint(cplx x_, int n_) : x(x_), n(n_) {}
    ANPoint(double x_, int n_) : x(x_, 0.0), n(n_) {}

    ANPoint reduced(int N) const {
        int r = n % N;
        if (r < 0) r += N;
        return ANPoint(x, r);
    }
};

inline ANPoint operator+(const ANPoint& a, const ANPoint& b) { return {a.x + b.x, a.n + b.n}; }
inline ANPoint operator-(const ANPoint& a, const ANPoint& b) { return {a.x - b.x, a.n - b.n}; }
inline ANPoint operator-(const ANPoint& a) { return {-a.x, -a.n}; }

}  // namespace tqd
