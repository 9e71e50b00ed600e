// Shared numeric conventions: complex scalar type, default tolerances,
// error types used across the library.
#pragma once

#include <complex>
#include <cmath>
#include <stdexcept>
#include <string>

namespace heun {

using cplx = std::complex<double>;

namespace tol {
// Zero tests on equation coefficients a0..a9 (branch selection is
// discontinuous in these, so the knob is exposed through the CLI).
inline constexpr double coefficient_zero = 1e-12;
// Exponent-lattice alignment when merging generalized-polynomial terms.
inline constexpr double exponent_merge = 1e-9;
// Detection of 2(sigma-tau) being a nonnegative integer.
inline constexpr double half_integer = 1e-9;
// Root identities a7 = -2s[a4-a0(1-2s)], a9 = -2t[a6+a2(2t-1)].
inline constexpr double self_consistency = 1e-9;
// Invariant-subspace closure (boundary images must vanish).
inline constexpr double closure = 1e-9;
// Eigenpair residual bound, relative to max(1, ||M||_inf).
inline constexpr double eigen_residual = 1e-9;
// Verification thresholds for quasi-polynomial solutions.
inline constexpr double residual_verified = 1e-9;
inline constexpr double truncation_verified = 1e-8;
}  // namespace tol

inline bool near_zero(const cplx& z, double tolerance = tol::coefficient_zero) {
    return std::abs(z) <= tolerance;
}

// Nearest nonnegative integer to a complex value, or -1 if it is not one
// within `tolerance` (absolute, and the imaginary part must be small too).
inline long nonnegative_integer_near(const cplx& z, double tolerance = tol::half_integer) {
    if (std::abs(z.imag()) > tolerance) return -1;
    const double r = std::round(z.real());
    if (r < -0.5) return -1;
    if (std::abs(z.real() - r) > tolerance) return -1;
    return static_cast<long>(r);
}

// Input that violates a documented precondition (maps to CLI exit code 2).
struct input_error : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

// Iterative numerics failed to converge (maps to CLI exit code 3).
struct numerical_failure : std::runtime_error {
    double defect;
    explicit numerical_failure(const std::string& what, double defect_ = 0.0)
        : std::runtime_error(what), defect(defect_) {}
};

// A (sigma, tau, N) triple does not close an invariant subspace.
struct closure_violation : input_error {
    using input_error::input_error;
};

// Frobenius recurrence hit a vanishing denominator with nonzero numerator.
struct resonant_exponent : std::runtime_error {
    int index;
    explicit resonant_exponent(const std::string& what, int index_)
        : std::runtime_error(what), index(index_) {}
};

// Self-consistency identities violated for a requested (sigma, tau).
struct inconsistent_parameters : input_error {
    using input_error::input_error;
};

}  // namespace heun
