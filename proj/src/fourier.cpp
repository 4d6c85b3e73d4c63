#include "tqd/fourier.hpp"

namespace tqd {

ANFunction fourier_transform(const ANFunction& f, const ModularParam& p, const Contour& contour) {
    return [f, p, contour](ANPoint a) -> cplx {
        auto integrand = [&f, &p, &a](ANPoint y) {
            return f(y) * fourier_kernel(a, y, p);
        };
        return haar_integrate(integrand, contour, p).value;
    };
}

ANFunction inverse_fourier(const ANFunction& f, const ModularParam& p, const Contour& contour) {
    return [f, p, contour](ANPoint a) -> cplx {
        auto integrand = [&f, &p, &a](ANPoint y) {
            return f(y) * fourier_kernel_conj(y, a, p);
        };
        return haar_integrate(integrand, contour, p).value;
    };
}

}  // namespace tqd
