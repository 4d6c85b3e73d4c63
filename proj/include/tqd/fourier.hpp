#pragma once

#include <functional>

#include "tqd/modular.hpp"
#include "tqd/quadrature.hpp"

namespace tqd {

// Fourier kernel <(x,n),(y,m)> = e^{2 pi i x y} e^{-2 pi i n m / N}.
inline cplx fourier_kernel(const ANPoint& a, const ANPoint& a2, const ModularParam& p) {
    return exp_2ipi(a.x * a2.x) * exp_2ipi(cplx(-static_cast<double>(a.n) * a2.n / p.N, 0.0));
}

// Gauss kernel <(x,n)> = e^{pi i x^2} e^{-pi i n(n+N)/N}.
inline cplx gauss_kernel(const ANPoint& a, const ModularParam& p) {
    return exp_ipi(a.x * a.x) * exp_ipi(cplx(-static_cast<double>(a.n) * (a.n + p.N) / p.N, 0.0));
}

// Formal conjugates: the kernels with i -> -i, leaving the (possibly complex)
// argument untouched. On real arguments they agree with complex conjugation.
inline cplx fourier_kernel_conj(const ANPoint& a, const ANPoint& a2, const ModularParam& p) {
    return exp_2ipi(-a.x * a2.x) * exp_2ipi(cplx(static_cast<double>(a.n) * a2.n / p.N, 0.0));
}

inline cplx gauss_kernel_conj(const ANPoint& a, const ModularParam& p) {
    return exp_ipi(-a.x * a.x) * exp_ipi(cplx(static_cast<double>(a.n) * (a.n + p.N) / p.N, 0.0));
}

using ANFunction = std::function<cplx(ANPoint)>;

// F(f)(x,n) = int_{A_N} f(y,m) <(x,n),(y,m)> d(y,m), sampled on demand.
ANFunction fourier_transform(const ANFunction& f, const ModularParam& p, const Contour& contour);

// f~(x,n) = int_{A_N} f(y,m) conj<(y,m),(x,n)> d(y,m) (the inverse transform).
ANFunction inverse_fourier(const ANFunction& f, const ModularParam& p, const Contour& contour);

}  // namespace tqd
