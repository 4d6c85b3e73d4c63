#pragma once

#include <complex>
#include <stdexcept>
#include <string>

namespace tqd {

using cplx = std::complex<double>;

inline constexpr double kPi = 3.141592653589793238462643383279502884;
inline const cplx kI{0.0, 1.0};

// Error hierarchy. Each module throws the most specific type; callers that
// only care about "did it work" can catch Error.
struct Error : std::runtime_error {
    explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

struct NonConvergent : Error {
    explicit NonConvergent(const std::string& msg) : Error(msg) {}
};

struct PoleHit : Error {
    explicit PoleHit(const std::string& msg) : Error(msg) {}
};

struct PoleOnContour : Error {
    explicit PoleOnContour(const std::string& msg) : Error(msg) {}
};

struct EvalFailure : Error {
    explicit EvalFailure(const std::string& msg) : Error(msg) {}
};

struct RegimeError : Error {
    explicit RegimeError(const std::string& msg) : Error(msg) {}
};

struct DivergentProduct : Error {
    explicit DivergentProduct(const std::string& msg) : Error(msg) {}
};

struct BranchCut : Error {
    explicit BranchCut(const std::string& msg) : Error(msg) {}
};

struct SingularInput : Error {
    explicit SingularInput(const std::string& msg) : Error(msg) {}
};

struct PreconditionViolated : Error {
    explicit PreconditionViolated(const std::string& msg) : Error(msg) {}
};

struct IllConditioned : Error {
    explicit IllConditioned(const std::string& msg) : Error(msg) {}
};

inline cplx expi(double theta) { return cplx(std::cos(theta), std::sin(theta)); }

// exp(i*pi*z) for complex z, kept as a named helper since phase constants of
// this form appear everywhere in the dilogarithm identities.
inline cplx exp_ipi(const cplx& z) { return std::exp(kI * kPi * z); }

inline cplx exp_2ipi(const cplx& z) { return std::exp(2.0 * kI * kPi * z); }

}  // namespace tqd
