// Independent verification layer: indicial exponents at 0 and infinity,
// Frobenius series by the graded-part recurrence, truncation checks, and
// exact operator residuals.  None of this reuses the matrix eigenproblem
// path, which is the point: a quasi-polynomial is accepted only when both
// routes agree.
//
// For a series y = sum_k c_k z^{rho+k}, collecting z^{rho+m} in H y gives
//   A--(rho+m+2) c_{m+2} + A-(rho+m+1) c_{m+1} + A0(rho+m) c_m + A+(rho+m-1) c_{m-1} = 0
// with A± the graded weights; the recurrence couples at most four neighbors.
#pragma once

#include <optional>
#include <vector>

#include "heun/algebraize.hpp"
#include "heun/quasi_polynomial.hpp"
#include "heun/su11.hpp"

namespace heun {

struct IndicialResult {
    SingularPoint point = SingularPoint::zero;
    std::vector<cplx> exponents;  // one or two
    SingularityKind kind = SingularityKind::regular;
    bool eigen_dependent = false;  // exponents involve a8 (absent graded part)
};

inline IndicialResult indicial_exponents(const GenericCoefficients& c, SingularPoint point,
                                         std::optional<cplx> a8_value = std::nullopt,
                                         double zero_tol = tol::coefficient_zero) {
    const auto& a = c.a;
    IndicialResult res;
    res.point = point;
    res.kind = classify_singularity(c, point, zero_tol);
    if (res.kind == SingularityKind::ordinary)
        throw input_error("indicial_exponents: ordinary point has no indicial equation");

    auto quadratic = [](const cplx& half_sum, const cplx& disc, const cplx& denom) {
        const cplx s = std::sqrt(disc);
        return std::vector<cplx>{(half_sum + s) / denom, (half_sum - s) / denom};
    };

    if (point == SingularPoint::zero) {
        if (!near_zero(a[2], zero_tol)) {
            // rho^2 + (A0-1) rho + B0 = 0 with A0 = a6/a2, B0 = a9/a2
            res.exponents = quadratic(a[2] - a[6], (a[2] - a[6]) * (a[2] - a[6]) - 4.0 * a[2] * a[9],
                                      2.0 * a[2]);
            return res;
        }
        if (!near_zero(a[6], zero_tol)) {
            res.exponents = {-a[9] / a[6]};  // linear indicial equation
            return res;
        }
        if (!near_zero(a[9], zero_tol))
            throw input_error("indicial_exponents: degenerate linear indicial equation (a6=0, a9!=0)");
        // degree -1 part absent: regular again, exponents depend on the eigenvalue
        if (!a8_value) throw input_error("indicial_exponents: a8 value required when O- is absent");
        if (near_zero(a[1], zero_tol))
            throw input_error("indicial_exponents: a1 = 0 outside the canonical families");
        res.eigen_dependent = true;
        res.exponents = quadratic(a[1] - a[5], (a[1] - a[5]) * (a[1] - a[5]) - 4.0 * a[1] * *a8_value,
                                  2.0 * a[1]);
        return res;
    }

    // point at infinity
    if (!near_zero(a[0], zero_tol)) {
        res.exponents = quadratic(a[4] - a[0], (a[4] - a[0]) * (a[4] - a[0]) - 4.0 * a[0] * a[7],
                                  2.0 * a[0]);
        return res;
    }
    if (!near_zero(a[4], zero_tol)) {
        // linear indicial equation at the irregular point; the power-series
        // solution behaves like z^{-a7/a4}, i.e. t^{a7/a4} in t = 1/z, which
        // is -2 sigma for sigma = -a7/(2 a4)
        res.exponents = {a[7] / a[4]};
        return res;
    }
    if (!near_zero(a[7], zero_tol))
        throw input_error("indicial_exponents: degenerate linear indicial equation (a4=0, a7!=0)");
    if (!a8_value) throw input_error("indicial_exponents: a8 value required when O+ is absent");
    if (near_zero(a[1], zero_tol))
        throw input_error("indicial_exponents: a1 = 0 outside the canonical families");
    res.eigen_dependent = true;
    res.exponents = quadratic(a[5] - a[1], (a[5] - a[1]) * (a[5] - a[1]) - 4.0 * a[1] * *a8_value,
                              2.0 * a[1]);
    return res;
}

// Unique bounded-below series with leading coefficient 1 at exponent rho,
// computed for the eigenvalue slot a8 := a8_value.  Returns c_0..c_{n_terms}.
//
// The pivot of the forward substitution is the lowest-degree graded part
// actually present: O-- (a3 != 0), else O- (any of a2, a6, a9 nonzero), else
// O0.  With pivot degree -d, collecting z^{rho+k-d} in H y gives
//   w_pivot(rho+k) c_k = -sum over the higher parts of w(rho+k-d-deg) c_{k-d-deg},
// and the z^{rho-d} equation w_pivot(rho) = 0 is the indicial admissibility
// condition for rho.  A zero pivot with (numerically) zero right-hand side
// leaves the coefficient free and sets it to 0; a zero pivot with nonzero
// right-hand side is a resonance.
inline GeneralizedPolynomial series_coefficients(const GenericCoefficients& c, const cplx& rho,
                                                 const cplx& a8_value, int n_terms,
                                                 double zero_tol = tol::coefficient_zero) {
    if (n_terms < 1) throw input_error("series_coefficients: n_terms must be positive");
    GenericCoefficients ce = c;
    ce.a[8] = a8_value;
    const auto& a = ce.a;

    double scale = 1.0;
    for (const auto& ai : a) scale = std::max(scale, std::abs(ai));
    const double mag = std::abs(rho) + static_cast<double>(n_terms) + 2.0;
    scale *= mag * mag;

    GradedPart pivot = GradedPart::o_zero;
    if (!near_zero(a[3], zero_tol))
        pivot = GradedPart::o_minus_minus;
    else if (!near_zero(a[2], zero_tol) || !near_zero(a[6], zero_tol) || !near_zero(a[9], zero_tol))
        pivot = GradedPart::o_minus;
    const int d = -graded_degree(pivot);

    if (std::abs(graded_weight(pivot, ce, rho)) > 1e-6 * scale)
        throw input_error("series_coefficients: rho is not an admissible exponent at zero");

    GeneralizedPolynomial out;
    out.base = rho;
    out.coeffs.assign(static_cast<std::size_t>(n_terms) + 1, 0.0);
    out.coeffs[0] = 1.0;

    auto coeff = [&](long k) -> cplx {
        return (k >= 0 && k <= n_terms) ? out.coeffs[static_cast<std::size_t>(k)] : cplx(0.0);
    };

    constexpr GradedPart all_parts[] = {GradedPart::o_plus, GradedPart::o_zero,
                                        GradedPart::o_minus, GradedPart::o_minus_minus};
    for (long k = 1; k <= n_terms; ++k) {
        cplx rhs = 0.0;
        for (GradedPart part : all_parts) {
            if (part == pivot) continue;
            const long idx = k - d - graded_degree(part);
            if (idx < 0 || idx >= k) continue;  // only earlier coefficients contribute
            rhs -= graded_weight(part, ce, rho + static_cast<double>(idx)) * coeff(idx);
        }
        const cplx denom = graded_weight(pivot, ce, rho + static_cast<double>(k));
        if (near_zero(denom, zero_tol * scale)) {
            if (std::abs(rhs) <= zero_tol * scale * std::max(1.0, std::abs(coeff(k - 1)))) {
                out.coeffs[static_cast<std::size_t>(k)] = 0.0;  // free coefficient
                continue;
            }
            throw resonant_exponent("series_coefficients: resonance at index " + std::to_string(k),
                                    static_cast<int>(k));
        }
        out.coeffs[static_cast<std::size_t>(k)] = rhs / denom;
    }
    return out;
}

struct SeriesTail {
    cplx exponent;            // the series base 2 tau
    std::vector<cplx> tail;   // c_{N+1} .. c_{N+extra}
    double max_rel = 0.0;     // max |tail| / max |c_0..c_N|
};

// Rerun the series at the solution's leading exponent with the solved
// eigenvalue and inspect the coefficients beyond its degree: a genuine
// quasi-polynomial truncates there.  Leading zero coefficients are skipped
// first (eigenvectors of block-triangular instances can start above z^{2tau};
// the series then has to launch from the effective exponent).
inline SeriesTail verify_truncation(const GenericCoefficients& c, const QuasiPolynomial& qp,
                                    int extra, double zero_tol = tol::coefficient_zero) {
    if (extra < 1) throw input_error("verify_truncation: extra must be positive");
    double kmax = 0.0;
    for (const auto& k : qp.coeffs) kmax = std::max(kmax, std::abs(k));
    std::size_t lead = 0;
    while (lead < qp.coeffs.size() && std::abs(qp.coeffs[lead]) <= 1e-13 * kmax) ++lead;
    if (lead == qp.coeffs.size()) throw input_error("verify_truncation: zero coefficient vector");
    const int n = static_cast<int>(qp.coeffs.size() - lead) - 1;  // effective degree
    const cplx rho = qp.tau2 + static_cast<double>(lead);
    const auto series = series_coefficients(c, rho, -qp.eigen, n + extra, zero_tol);
    double head = 0.0;
    for (int k = 0; k <= n; ++k) head = std::max(head, std::abs(series.coeffs[static_cast<std::size_t>(k)]));
    SeriesTail tail;
    tail.exponent = rho;
    tail.tail.assign(series.coeffs.begin() + n + 1, series.coeffs.end());
    double worst = 0.0;
    for (const auto& t : tail.tail) worst = std::max(worst, std::abs(t));
    tail.max_rel = worst / std::max(head, 1e-300);
    return tail;
}

// Apply the full operator (with the eigenvalue slot set from qp) to
// z^{2tau} P_N(z); the result expands over the monomial lattice and is the
// exact residual of the claimed solution.
inline GeneralizedPolynomial operator_residual(const GenericCoefficients& c,
                                               const QuasiPolynomial& qp) {
    GenericCoefficients ce = c;
    ce.a[8] = -qp.eigen;
    GeneralizedPolynomial y;
    y.base = qp.tau2;
    y.coeffs = qp.coeffs;
    return apply_heun_operator(ce, y);
}

inline double operator_residual_max(const GenericCoefficients& c, const QuasiPolynomial& qp) {
    double in = 0.0;
    for (const auto& k : qp.coeffs) in = std::max(in, std::abs(k));
    return operator_residual(c, qp).max_abs_coeff() / std::max(in, 1e-300);
}

}  // namespace heun
