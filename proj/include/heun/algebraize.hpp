// Solving the generator parameters (sigma, tau) and the ansatz constants from
// the equation coefficients, including the two non-algebraizable patterns
//   a0 = a4 = 0, a7 != 0   (no sigma can raise a degree +1 term)
//   a2 = a6 = 0, a9 != 0   (no tau can produce a degree -1 tail)
// and the free-parameter cases where a whole graded part is absent.
#pragma once

#include <optional>
#include <vector>

#include "heun/su11.hpp"

namespace heun {

enum class RootBranch { plus, minus, single, forced_zero, double_root };

struct FixedRoot {
    cplx value;
    RootBranch branch;
};

enum class NonAlgReason { raising_part, lowering_part };

inline const char* non_alg_reason_text(NonAlgReason r) {
    return r == NonAlgReason::raising_part ? "a0=a4=0, a7!=0" : "a2=a6=0, a9!=0";
}

struct ParamResolution {
    enum class Kind { fixed, free, non_algebraizable };
    Kind kind = Kind::free;
    std::vector<FixedRoot> roots;             // nonempty iff fixed, at most 2
    std::optional<NonAlgReason> reason;       // set iff non_algebraizable

    bool fixed() const { return kind == Kind::fixed; }
    bool is_free() const { return kind == Kind::free; }
    bool blocked() const { return kind == Kind::non_algebraizable; }
};

namespace detail {
inline ParamResolution fixed_pair(const cplx& sum_term, const cplx& disc, const cplx& denom) {
    // roots (sum_term ± sqrt(disc)) / denom, collapsing double roots
    ParamResolution r;
    r.kind = ParamResolution::Kind::fixed;
    const double scale = std::max({1.0, std::abs(sum_term) * std::abs(sum_term), std::abs(disc)});
    if (std::abs(disc) <= 1e-12 * scale) {
        r.roots = {{sum_term / denom, RootBranch::double_root}};
    } else {
        const cplx s = std::sqrt(disc);
        r.roots = {{(sum_term + s) / denom, RootBranch::plus},
                   {(sum_term - s) / denom, RootBranch::minus}};
    }
    return r;
}
}  // namespace detail

inline ParamResolution solve_sigma(const GenericCoefficients& c,
                                   double zero_tol = tol::coefficient_zero) {
    const auto& a = c.a;
    if (!near_zero(a[0], zero_tol)) {
        // regular point at infinity: a0 s (2s-1) + ... quadratic in sigma
        return detail::fixed_pair(a[0] - a[4], (a[0] - a[4]) * (a[0] - a[4]) - 4.0 * a[0] * a[7],
                                  4.0 * a[0]);
    }
    if (!near_zero(a[4], zero_tol)) {
        ParamResolution r;
        r.kind = ParamResolution::Kind::fixed;
        r.roots = {{-a[7] / (2.0 * a[4]), RootBranch::single}};
        return r;
    }
    if (!near_zero(a[7], zero_tol)) {
        ParamResolution r;
        r.kind = ParamResolution::Kind::non_algebraizable;
        r.reason = NonAlgReason::raising_part;
        return r;
    }
    return {};  // O+ absent: sigma free
}

inline ParamResolution solve_tau(const GenericCoefficients& c,
                                 double zero_tol = tol::coefficient_zero) {
    const auto& a = c.a;
    if (!near_zero(a[3], zero_tol)) {
        // degree -2 part present: J-J- must reduce to d^2/dz^2, so tau = 0
        ParamResolution r;
        r.kind = ParamResolution::Kind::fixed;
        r.roots = {{0.0, RootBranch::forced_zero}};
        return r;
    }
    if (!near_zero(a[2], zero_tol)) {
        return detail::fixed_pair(a[2] - a[6], (a[6] - a[2]) * (a[6] - a[2]) - 4.0 * a[2] * a[9],
                                  4.0 * a[2]);
    }
    if (!near_zero(a[6], zero_tol)) {
        ParamResolution r;
        r.kind = ParamResolution::Kind::fixed;
        r.roots = {{-a[9] / (2.0 * a[6]), RootBranch::single}};
        return r;
    }
    if (!near_zero(a[9], zero_tol)) {
        ParamResolution r;
        r.kind = ParamResolution::Kind::non_algebraizable;
        r.reason = NonAlgReason::lowering_part;
        return r;
    }
    return {};  // O- absent: tau free
}

// Residuals of the two self-consistency identities for a chosen (sigma, tau);
// both vanish exactly when (sigma, tau) come from solve_sigma / solve_tau.
inline double sigma_identity_defect(const GenericCoefficients& c, const cplx& sigma) {
    return std::abs(c.a[7] + 2.0 * sigma * (c.a[4] - c.a[0] * (1.0 - 2.0 * sigma)));
}
inline double tau_identity_defect(const GenericCoefficients& c, const cplx& tau) {
    return std::abs(c.a[9] + 2.0 * tau * (c.a[6] + c.a[2] * (2.0 * tau - 1.0)));
}

inline CCoefficients c_coefficients(const GenericCoefficients& c, const cplx& sigma,
                                    const cplx& tau,
                                    double consistency_tol = tol::self_consistency) {
    const auto& a = c.a;
    double scale = 1.0;
    for (const auto& ai : a) scale = std::max(scale, std::abs(ai));
    scale = std::max(scale, std::abs(sigma) * std::abs(sigma));
    scale = std::max(scale, std::abs(tau) * std::abs(tau));
    if (sigma_identity_defect(c, sigma) > consistency_tol * scale ||
        tau_identity_defect(c, tau) > consistency_tol * scale)
        throw inconsistent_parameters("c_coefficients: (sigma, tau) fail the self-consistency identities");
    CCoefficients cc;
    cc.cp0 = a[0];
    cc.cp = a[4] - a[0] * (1.0 - 3.0 * sigma - tau);
    cc.c0m = a[2];
    cc.cm = a[6] + a[2] * (sigma + 3.0 * tau);
    cc.cpm = a[1];
    cc.c0 = a[5] + 2.0 * a[1] * (sigma + tau);
    cc.cmm = a[3];
    cc.c = a[8] + cc.c0 * (sigma + tau) - 2.0 * a[1] * tau * (1.0 + 2.0 * sigma);
    return cc;
}

// Forward map back to a0..a9; inverse of c_coefficients for any (sigma, tau).
inline GenericCoefficients reconstruct_coefficients(const CCoefficients& cc, const cplx& sigma,
                                                    const cplx& tau) {
    GenericCoefficients c;
    auto& a = c.a;
    a[0] = cc.cp0;
    a[4] = cc.cp + cc.cp0 * (1.0 - 3.0 * sigma - tau);
    a[7] = -2.0 * sigma * (cc.cp - cc.cp0 * (sigma + tau));
    a[2] = cc.c0m;
    a[6] = cc.cm - cc.c0m * (sigma + 3.0 * tau);
    a[9] = -2.0 * tau * (cc.cm - cc.c0m * (1.0 + sigma + tau));
    a[1] = cc.cpm;
    a[5] = cc.c0 - 2.0 * cc.cpm * (sigma + tau);
    a[8] = cc.c - cc.c0 * (sigma + tau) + 2.0 * cc.cpm * tau * (1.0 + 2.0 * sigma);
    a[3] = cc.cmm;
    return c;
}

struct AlgebraizationPair {
    cplx sigma, tau;
    int sigma_index, tau_index;  // indices into the resolutions' root lists
    CCoefficients cc;
};

struct AlgebraizationResult {
    ParamResolution sigma, tau;
    std::vector<AlgebraizationPair> pairs;  // fixed x fixed combinations only

    bool algebraizable() const { return !sigma.blocked() && !tau.blocked(); }
};

inline AlgebraizationResult algebraize(const GenericCoefficients& c,
                                       double zero_tol = tol::coefficient_zero) {
    AlgebraizationResult r;
    r.sigma = solve_sigma(c, zero_tol);
    r.tau = solve_tau(c, zero_tol);
    if (r.sigma.fixed() && r.tau.fixed()) {
        for (std::size_t i = 0; i < r.sigma.roots.size(); ++i)
            for (std::size_t j = 0; j < r.tau.roots.size(); ++j)
                r.pairs.push_back({r.sigma.roots[i].value, r.tau.roots[j].value,
                                   static_cast<int>(i), static_cast<int>(j),
                                   c_coefficients(c, r.sigma.roots[i].value, r.tau.roots[j].value)});
    }
    return r;
}

}  // namespace heun
