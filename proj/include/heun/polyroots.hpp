// Small-degree complex polynomial roots by Durand-Kerner simultaneous
// iteration (with seeded perturbation restarts and a Newton polish), plus the
// three-term determinant recurrence that turns a complex tridiagonal matrix
// into its characteristic polynomial.  The matrices here are (N+1)x(N+1)
// with N rarely above ~10, so coefficient arithmetic is perfectly adequate.
#pragma once

#include <limits>
#include <random>
#include <vector>

#include "heun/numeric.hpp"

namespace heun {

struct RootFinderOptions {
    std::uint64_t seed = 0;
    int max_iterations = 600;
    int max_restarts = 6;
    double step_tol = 5e-15;
};

inline cplx eval_poly(const std::vector<cplx>& coeffs, const cplx& x) {
    cplx acc = 0.0;
    for (std::size_t k = coeffs.size(); k-- > 0;) acc = acc * x + coeffs[k];
    return acc;
}

inline std::vector<cplx> poly_derivative(const std::vector<cplx>& coeffs) {
    std::vector<cplx> d;
    for (std::size_t k = 1; k < coeffs.size(); ++k) d.push_back(static_cast<double>(k) * coeffs[k]);
    return d;
}

// Characteristic polynomial det(M - lambda I) of a tridiagonal matrix, as
// ascending coefficients in lambda.  D_0 = 1, D_1 = d_0 - lambda,
// D_k = (d_{k-1} - lambda) D_{k-1} - sub_{k-2} sup_{k-2} D_{k-2}.
inline std::vector<cplx> char_poly_tridiagonal(const std::vector<cplx>& diag,
                                               const std::vector<cplx>& sub,
                                               const std::vector<cplx>& sup) {
    const std::size_t n = diag.size();
    if (n == 0) return {1.0};  // D_0
    if (sub.size() + 1 != n || sup.size() + 1 != n)
        throw input_error("char_poly_tridiagonal: band sizes do not match");
    std::vector<cplx> prev = {1.0};  // D_0
    std::vector<cplx> cur = {diag[0], -1.0};  // D_1
    for (std::size_t k = 2; k <= n; ++k) {
        std::vector<cplx> next(cur.size() + 1, 0.0);
        for (std::size_t i = 0; i < cur.size(); ++i) {
            next[i] += diag[k - 1] * cur[i];
            next[i + 1] -= cur[i];
        }
        const cplx w = sub[k - 2] * sup[k - 2];
        for (std::size_t i = 0; i < prev.size(); ++i) next[i] -= w * prev[i];
        prev = std::move(cur);
        cur = std::move(next);
    }
    return cur;
}

// All roots of a complex polynomial (ascending coefficients, degree >= 0).
inline std::vector<cplx> durand_kerner(std::vector<cplx> coeffs, const RootFinderOptions& opts = {}) {
    while (!coeffs.empty() && near_zero(coeffs.back(), 0.0)) coeffs.pop_back();
    if (coeffs.size() <= 1) return {};
    const std::size_t deg = coeffs.size() - 1;
    const cplx lead = coeffs.back();
    for (auto& c : coeffs) c /= lead;

    // Cauchy bound for the root radius
    double radius = 0.0;
    for (std::size_t k = 0; k < deg; ++k) radius = std::max(radius, std::abs(coeffs[k]));
    radius = 1.0 + radius;

    std::mt19937_64 rng(opts.seed);
    std::uniform_real_distribution<double> unit(-0.5, 0.5);
    std::vector<cplx> w(deg);
    auto reseed = [&](bool perturb) {
        const cplx ratio(0.4, 0.9);
        cplx g = 1.0;
        for (std::size_t i = 0; i < deg; ++i) {
            g *= ratio;
            w[i] = radius * g;
            if (perturb) w[i] += 0.1 * radius * cplx(unit(rng), unit(rng));
        }
    };
    reseed(false);

    double best_step = std::numeric_limits<double>::infinity();
    for (int restart = 0; restart <= opts.max_restarts; ++restart) {
        double max_step = 0.0;
        for (int it = 0; it < opts.max_iterations; ++it) {
            max_step = 0.0;
            for (std::size_t i = 0; i < deg; ++i) {
                cplx denom = 1.0;
                for (std::size_t j = 0; j < deg; ++j)
                    if (j != i) denom *= w[i] - w[j];
                if (near_zero(denom, 0.0)) {
                    w[i] += 1e-6 * radius * cplx(unit(rng), unit(rng));
                    max_step = radius;
                    continue;
                }
                const cplx dw = eval_poly(coeffs, w[i]) / denom;
                w[i] -= dw;
                max_step = std::max(max_step, std::abs(dw) / std::max(1.0, std::abs(w[i])));
            }
            if (max_step <= opts.step_tol) break;
        }
        best_step = std::min(best_step, max_step);
        if (max_step <= 1e-10) {
            // Newton polish; quadratic near simple roots, kept short so
            // clustered roots cannot cycle.
            const auto dcoeffs = poly_derivative(coeffs);
            for (auto& root : w) {
                for (int it = 0; it < 3; ++it) {
                    const cplx dp = eval_poly(dcoeffs, root);
                    if (near_zero(dp, 0.0)) break;
                    const cplx step = eval_poly(coeffs, root) / dp;
                    if (std::abs(step) > 0.1 * std::max(1.0, std::abs(root))) break;
                    root -= step;
                }
            }
            return w;
        }
        reseed(true);
    }
    throw numerical_failure("durand_kerner: simultaneous iteration did not converge", best_step);
}

// One inverse-iteration pass on the tridiagonal system (T - lambda I) v = b,
// via LU with partial pivoting (bandwidth grows to two superdiagonals).
inline std::vector<cplx> tridiag_shifted_solve(const std::vector<cplx>& diag,
                                               const std::vector<cplx>& sub,
                                               const std::vector<cplx>& sup, const cplx& lambda,
                                               std::vector<cplx> b, double pivot_floor) {
    const std::size_t n = diag.size();
    std::vector<cplx> d(n), u1(n, 0.0), u2(n, 0.0), l(n, 0.0);
    for (std::size_t i = 0; i < n; ++i) d[i] = diag[i] - lambda;
    for (std::size_t i = 0; i + 1 < n; ++i) {
        u1[i] = sup[i];
        l[i] = sub[i];
    }
    for (std::size_t k = 0; k + 1 < n; ++k) {
        if (std::abs(l[k]) > std::abs(d[k])) {
            std::swap(d[k], l[k]);
            std::swap(u1[k], d[k + 1]);
            if (k + 2 < n) std::swap(u2[k], u1[k + 1]);
            std::swap(b[k], b[k + 1]);
        }
        if (std::abs(d[k]) < pivot_floor) d[k] = pivot_floor;
        const cplx m = l[k] / d[k];
        d[k + 1] -= m * u1[k];
        if (k + 2 < n) u1[k + 1] -= m * u2[k];
        b[k + 1] -= m * b[k];
    }
    if (std::abs(d[n - 1]) < pivot_floor) d[n - 1] = pivot_floor;
    std::vector<cplx> v(n);
    for (std::size_t k = n; k-- > 0;) {
        cplx acc = b[k];
        if (k + 1 < n) acc -= u1[k] * v[k + 1];
        if (k + 2 < n) acc -= u2[k] * v[k + 2];
        v[k] = acc / d[k];
    }
    return v;
}

}  // namespace heun
