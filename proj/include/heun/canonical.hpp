// The five canonical Heun-class equations and their common coefficient form
//
//   [P3(z) d^2/dz^2 + P2(z) d/dz + P1(z)] y(z) = 0,
//   P3 = a0 z^3 + a1 z^2 + a2 z + a3,
//   P2 = a4 z^2 + a5 z + a6,
//   P1 = a7 z + a8 + a9/z,
//
// where -a8 plays the role of the eigen-parameter.
#pragma once

#include <array>
#include <string>
#include <utility>

#include "heun/numeric.hpp"

namespace heun {

enum class Family { ghe, che, bhe, dhe, the };

inline const char* family_name(Family f) {
    switch (f) {
        case Family::ghe: return "ghe";
        case Family::che: return "che";
        case Family::bhe: return "bhe";
        case Family::dhe: return "dhe";
        case Family::the: return "the";
    }
    return "?";
}

struct GenericCoefficients {
    std::array<cplx, 10> a{};  // a[0]..a[9]
};

// General Heun equation
//   y'' + (gamma/z + delta/(z-1) + epsilon/(z-a)) y' + (alpha beta z - q)/(z(z-1)(z-a)) y = 0
// with regular singularities at 0, 1, a (a != 0, 1) and infinity.
// The Fuchs relation epsilon = alpha + beta - gamma - delta + 1 is enforced at
// construction; the canonical a5 entry presumes it.
struct GeneralHeunParams {
    cplx gamma, delta, epsilon, alpha, beta, q, a;

    static GeneralHeunParams make(cplx gamma, cplx delta, cplx alpha, cplx beta, cplx q, cplx a) {
        GeneralHeunParams p{gamma, delta, alpha + beta - gamma - delta + 1.0, alpha, beta, q, a};
        p.validate();
        return p;
    }
    void validate() const {
        if (near_zero(a) || near_zero(a - 1.0))
            throw input_error("GHE: third finite singularity a must not be 0 or 1");
        if (std::abs(epsilon - (alpha + beta - gamma - delta + 1.0)) > 1e-9)
            throw input_error("GHE: Fuchs relation epsilon = alpha+beta-gamma-delta+1 violated");
    }
};

// Confluent Heun equation
//   y'' + (kappa + gamma/z + delta/(z-1)) y' + (mu/z + nu/(z-1)) y = 0,
// regular singularities at 0 and 1, irregular at infinity.
struct ConfluentHeunParams {
    cplx kappa, gamma, delta, mu, nu;
};

// Biconfluent Heun equation
//   y'' + ((1+alpha)/z - beta - 2z) y' + [(gamma-alpha-2) - (delta+(1+alpha)beta)/(2z)] y = 0,
// regular singularity at 0, irregular at infinity.
struct BiconfluentHeunParams {
    cplx alpha, beta, gamma, delta;
};

// Doubly-confluent Heun equation
//   z^2 y'' + (alpha1 z^2 + z + alpham1) y'
//     + ((B1 + alpha1/2) z + (B0 + alpha1 alpham1/2) + (Bm1 - alpham1/2)/z) y = 0,
// irregular singularities at both 0 and infinity.
struct DoublyConfluentHeunParams {
    cplx alpha1, alpham1, B1, B0, Bm1;
};

// Triconfluent Heun equation
//   y'' - (3z^2 + gamma) y' + [alpha + (beta - 3)] y = 0,
// irregular singularity at infinity only.  The displayed potential term is a
// constant; the tabulated coefficients (a7 = 0, a8 = alpha + beta - 3) are
// followed verbatim.
struct TriconfluentHeunParams {
    cplx alpha, beta, gamma;
};

inline GenericCoefficients to_generic(const GeneralHeunParams& p) {
    p.validate();
    GenericCoefficients c;
    c.a[0] = 1.0;
    c.a[1] = -(p.a + 1.0);
    c.a[2] = p.a;
    c.a[3] = 0.0;
    c.a[4] = 1.0 + p.alpha + p.beta;
    c.a[5] = -(p.a * p.gamma + p.a * p.delta - p.delta + p.alpha + p.beta + 1.0);
    c.a[6] = p.a * p.gamma;
    c.a[7] = p.alpha * p.beta;
    c.a[8] = -p.q;
    c.a[9] = 0.0;
    return c;
}

inline GenericCoefficients to_generic(const ConfluentHeunParams& p) {
    GenericCoefficients c;
    c.a[1] = 1.0;
    c.a[2] = -1.0;
    c.a[4] = p.kappa;
    c.a[5] = p.gamma + p.delta - p.kappa;
    c.a[6] = -p.gamma;
    c.a[7] = p.mu + p.nu;
    c.a[8] = -p.mu;
    return c;
}

inline GenericCoefficients to_generic(const BiconfluentHeunParams& p) {
    GenericCoefficients c;
    c.a[2] = 1.0;
    c.a[4] = -2.0;
    c.a[5] = -p.beta;
    c.a[6] = 1.0 + p.alpha;
    c.a[7] = p.gamma - p.alpha - 2.0;
    c.a[8] = -0.5 * (p.delta + (1.0 + p.alpha) * p.beta);
    return c;
}

inline GenericCoefficients to_generic(const DoublyConfluentHeunParams& p) {
    GenericCoefficients c;
    c.a[1] = 1.0;
    c.a[4] = p.alpha1;
    c.a[5] = 1.0;
    c.a[6] = p.alpham1;
    c.a[7] = p.B1 + 0.5 * p.alpha1;
    c.a[8] = p.B0 + 0.5 * p.alpha1 * p.alpham1;
    c.a[9] = p.Bm1 - 0.5 * p.alpham1;
    return c;
}

inline GenericCoefficients to_generic(const TriconfluentHeunParams& p) {
    GenericCoefficients c;
    c.a[3] = 1.0;
    c.a[4] = -3.0;
    c.a[6] = -p.gamma;
    c.a[8] = p.alpha + (p.beta - 3.0);
    return c;
}

enum class SingularityKind { ordinary, regular, irregular };
enum class SingularPoint { zero, infinity };

// Classification at z = 0 and z = infinity only; the su(1,1) construction
// never looks at the other finite singular points.
inline SingularityKind classify_singularity(const GenericCoefficients& c, SingularPoint point,
                                            double zero_tol = tol::coefficient_zero) {
    const auto& a = c.a;
    if (point == SingularPoint::zero) {
        if (!near_zero(a[3], zero_tol)) return SingularityKind::ordinary;
        if (!near_zero(a[2], zero_tol)) return SingularityKind::regular;
        if (near_zero(a[6], zero_tol) && near_zero(a[9], zero_tol))
            return SingularityKind::regular;  // degree -1 part absent: still regular
        return SingularityKind::irregular;
    }
    if (!near_zero(a[0], zero_tol)) return SingularityKind::regular;
    if (near_zero(a[4], zero_tol) && near_zero(a[7], zero_tol) && near_zero(a[3], zero_tol))
        return SingularityKind::regular;  // degree +1 part absent
    return SingularityKind::irregular;
}

// Translation of a solved eigenvalue lambda = -a8 back to the family's native
// eigen-parameter, with a printable name for reports.
inline std::pair<std::string, cplx> native_eigenvalue(Family f, const cplx& lambda,
                                                      const GenericCoefficients&,
                                                      const cplx& alpha1 = 0.0,
                                                      const cplx& alpham1 = 0.0) {
    switch (f) {
        case Family::ghe: return {"q", lambda};
        case Family::che: return {"mu", lambda};
        case Family::bhe: return {"(delta+(1+alpha)*beta)/2", lambda};
        case Family::dhe: return {"B0", -lambda - 0.5 * alpha1 * alpham1};
        case Family::the: return {"alpha+beta-3", -lambda};
    }
    return {"?", lambda};
}

}  // namespace heun
