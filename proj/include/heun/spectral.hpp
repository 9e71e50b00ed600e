// The (N+1)-dimensional matrix of the Heun operator on the invariant
// monomial subspace z^{2tau+p}, p = 0..N, its complex tridiagonal
// eigenproblem, and the assembly of verified quasi-polynomial solutions.
//
// Column p of the stored matrix expands (H - a8) z^{2tau+p} over the basis:
// the O+ image lands on the subdiagonal, O0 (minus a8) on the diagonal and
// O- on the superdiagonal.  a8 is kept out of the matrix so an eigenvalue
// lambda directly equals the admissible value of -a8.
#pragma once

#include <algorithm>
#include <limits>
#include <vector>

#include "heun/frobenius.hpp"
#include "heun/polyroots.hpp"
#include "heun/solvability.hpp"

namespace heun {

struct InvariantMatrix {
    int n = 0;        // polynomial degree N; the matrix is (N+1)x(N+1)
    cplx tau2 = 0.0;  // basis exponent: powers z^{tau2+p}
    std::vector<cplx> diag;    // N+1 entries, a8 excluded
    std::vector<cplx> sub;     // N entries, (p+1, p)
    std::vector<cplx> sup;     // N entries, (p, p+1)
    std::vector<cplx> subsub;  // (p+2, p) band; populated only when a3 != 0 admits it
    cplx spectral_shift = 0.0;  // the excluded a8

    int size() const { return n + 1; }
    double max_abs() const {
        double m = 0.0;
        for (const auto& v : diag) m = std::max(m, std::abs(v));
        for (const auto& v : sub) m = std::max(m, std::abs(v));
        for (const auto& v : sup) m = std::max(m, std::abs(v));
        for (const auto& v : subsub) m = std::max(m, std::abs(v));
        return m;
    }
    cplx entry(int row, int col) const {
        if (row == col) return diag[static_cast<std::size_t>(row)];
        if (row == col + 1) return sub[static_cast<std::size_t>(col)];
        if (row + 1 == col) return sup[static_cast<std::size_t>(row)];
        if (row == col + 2 && !subsub.empty()) return subsub[static_cast<std::size_t>(col)];
        return 0.0;
    }
};

inline InvariantMatrix build_invariant_matrix(const GenericCoefficients& c, const cplx& sigma,
                                              const cplx& tau, int n,
                                              double closure_tol = tol::closure,
                                              double zero_tol = tol::coefficient_zero) {
    if (n < 0) throw input_error("build_invariant_matrix: N must be >= 0");
    if (nonnegative_integer_near(2.0 * (sigma - tau)) != n)
        throw input_error("build_invariant_matrix: (sigma, tau, N) is not a valid level");
    if (!near_zero(c.a[3], zero_tol) && n > 0)
        throw input_error("build_invariant_matrix: degree -2 band only supports N = 0");

    const cplx tau2 = 2.0 * tau;
    InvariantMatrix m;
    m.n = n;
    m.tau2 = tau2;
    m.spectral_shift = c.a[8];
    m.diag.resize(static_cast<std::size_t>(n) + 1);
    m.sub.resize(static_cast<std::size_t>(n));
    m.sup.resize(static_cast<std::size_t>(n));
    GenericCoefficients shifted = c;
    shifted.a[8] = 0.0;  // diagonal stores O0 without the eigen slot
    for (int p = 0; p <= n; ++p) {
        const cplx q = tau2 + static_cast<double>(p);
        m.diag[static_cast<std::size_t>(p)] = graded_weight(GradedPart::o_zero, shifted, q);
        if (p < n) m.sub[static_cast<std::size_t>(p)] = graded_weight(GradedPart::o_plus, c, q);
        if (p > 0) m.sup[static_cast<std::size_t>(p - 1)] = graded_weight(GradedPart::o_minus, c, q);
    }

    // Closure: the raising image of z^{2sigma} and the lowering image of
    // z^{2tau} must leave no component outside the subspace.
    double scale = std::max(1.0, m.max_abs());
    for (const auto& ai : c.a) scale = std::max(scale, std::abs(ai));
    const cplx top = graded_weight(GradedPart::o_plus, c, tau2 + static_cast<double>(n));
    const cplx bottom = graded_weight(GradedPart::o_minus, c, tau2);
    if (std::abs(top) > closure_tol * scale)
        throw closure_violation("build_invariant_matrix: raising image of the top state does not vanish");
    if (std::abs(bottom) > closure_tol * scale)
        throw closure_violation("build_invariant_matrix: lowering image of the bottom state does not vanish");
    if (!near_zero(c.a[3], zero_tol)) {
        const cplx mm0 = graded_weight(GradedPart::o_minus_minus, c, tau2);
        if (std::abs(mm0) > closure_tol * scale)
            throw closure_violation("build_invariant_matrix: degree -2 image of the bottom state does not vanish");
    }
    return m;
}

struct Eigenpair {
    cplx value;
    std::vector<cplx> vec;  // normalized to unit infinity norm
};

namespace detail {
inline bool eigen_less(const Eigenpair& a, const Eigenpair& b) {
    if (a.value.real() != b.value.real()) return a.value.real() < b.value.real();
    if (a.value.imag() != b.value.imag()) return a.value.imag() < b.value.imag();
    for (std::size_t k = 0; k < std::min(a.vec.size(), b.vec.size()); ++k) {
        if (a.vec[k].real() != b.vec[k].real()) return a.vec[k].real() < b.vec[k].real();
        if (a.vec[k].imag() != b.vec[k].imag()) return a.vec[k].imag() < b.vec[k].imag();
    }
    return false;
}

inline double eigen_residual_inf(const InvariantMatrix& m, const cplx& lambda,
                                 const std::vector<cplx>& v) {
    double worst = 0.0;
    const int sz = m.size();
    for (int i = 0; i < sz; ++i) {
        cplx acc = -lambda * v[static_cast<std::size_t>(i)];
        for (int j = std::max(0, i - 2); j <= std::min(sz - 1, i + 1); ++j)
            acc += m.entry(i, j) * v[static_cast<std::size_t>(j)];
        worst = std::max(worst, std::abs(acc));
    }
    return worst;
}
}  // namespace detail

// All N+1 eigenpairs (with multiplicity) of the tridiagonal invariant matrix.
// Roots of the characteristic polynomial by Durand-Kerner, eigenvectors by
// inverse iteration; residual contract ||Mv - lambda v||_inf <= tol * max(1, ||M||_inf)
// with ||v||_inf = 1.  Sorted by real part, ties by imaginary part.
inline std::vector<Eigenpair> eigen_tridiagonal(const InvariantMatrix& m,
                                                const RootFinderOptions& opts = {},
                                                double residual_tol = tol::eigen_residual) {
    for (const auto& v : m.subsub)
        if (!near_zero(v, 0.0))
            throw input_error("eigen_tridiagonal: matrix has a nonzero degree -2 band");
    const int sz = m.size();
    if (sz == 1) return {{m.diag[0], {1.0}}};

    const double scale = m.max_abs();
    InvariantMatrix ms = m;
    if (scale > 0.0) {
        for (auto& v : ms.diag) v /= scale;
        for (auto& v : ms.sub) v /= scale;
        for (auto& v : ms.sup) v /= scale;
    }
    auto poly = char_poly_tridiagonal(ms.diag, ms.sub, ms.sup);
    auto roots = durand_kerner(poly, opts);

    std::mt19937_64 rng(opts.seed + 0x9e3779b97f4a7c15ULL);
    std::uniform_real_distribution<double> unit(-1.0, 1.0);
    const double norm_inf = std::max(1.0, scale);
    std::vector<Eigenpair> out;
    out.reserve(roots.size());
    for (const auto& r : roots) {
        const cplx lambda = (scale > 0.0 ? r * scale : r);
        std::vector<cplx> v(static_cast<std::size_t>(sz), cplx(1.0));
        const double pivot_floor = 1e-300 + 1e-18 * std::max(1.0, scale);
        bool ok = false;
        for (int attempt = 0; attempt < 8 && !ok; ++attempt) {
            if (attempt > 0)
                for (auto& x : v) x = cplx(unit(rng), unit(rng));
            for (int it = 0; it < 4; ++it) {
                v = tridiag_shifted_solve(m.diag, m.sub, m.sup, lambda, v, pivot_floor);
                double nrm = 0.0;
                for (const auto& x : v) nrm = std::max(nrm, std::abs(x));
                if (nrm == 0.0) break;
                for (auto& x : v) x /= nrm;
                if (detail::eigen_residual_inf(m, lambda, v) <= residual_tol * norm_inf) {
                    ok = true;
                    break;
                }
            }
        }
        if (!ok)
            throw numerical_failure("eigen_tridiagonal: inverse iteration residual stayed above bound",
                                    detail::eigen_residual_inf(m, lambda, v));
        // deterministic phase: largest component real positive
        std::size_t imax = 0;
        for (std::size_t k = 1; k < v.size(); ++k)
            if (std::abs(v[k]) > std::abs(v[imax])) imax = k;
        const cplx phase = v[imax] / std::abs(v[imax]);
        for (auto& x : v) x /= phase;
        out.push_back({lambda, std::move(v)});
    }
    std::sort(out.begin(), out.end(), detail::eigen_less);
    return out;
}

// Solve one quasi-exact level end to end: build the matrix, solve the
// eigenproblem, normalize the coefficient vectors (k0 = 1 when k0 != 0, else
// the first nonzero coefficient) and attach the two verification metrics.
// Verification failures mark the solution unverified instead of throwing.
inline std::vector<QuasiPolynomial> quasi_polynomials(const GenericCoefficients& c,
                                                      const QesInstance& inst,
                                                      const RootFinderOptions& opts = {},
                                                      int tail_extra = 20) {
    const InvariantMatrix m = build_invariant_matrix(c, inst.sigma, inst.tau, inst.n);
    const auto pairs = eigen_tridiagonal(m, opts);
    std::vector<QuasiPolynomial> out;
    out.reserve(pairs.size());
    for (const auto& ep : pairs) {
        QuasiPolynomial qp;
        qp.tau2 = m.tau2;
        qp.coeffs = ep.vec;
        qp.eigen = ep.value;
        double kmax = 0.0;
        for (const auto& k : qp.coeffs) kmax = std::max(kmax, std::abs(k));
        std::size_t lead = 0;
        while (lead < qp.coeffs.size() && std::abs(qp.coeffs[lead]) <= 1e-13 * kmax) ++lead;
        if (lead < qp.coeffs.size()) {
            const cplx k0 = qp.coeffs[lead];
            for (std::size_t j = 0; j < lead; ++j) qp.coeffs[j] = 0.0;
            for (std::size_t j = lead; j < qp.coeffs.size(); ++j) qp.coeffs[j] /= k0;
        }
        qp.residual_max = operator_residual_max(c, qp);
        try {
            qp.truncation_max = verify_truncation(c, qp, tail_extra).max_rel;
        } catch (const resonant_exponent&) {
            qp.truncation_max = std::numeric_limits<double>::infinity();
        }
        out.push_back(std::move(qp));
    }
    return out;
}

}  // namespace heun
