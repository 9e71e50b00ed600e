// Shared helpers for the test and acceptance suites: seeded random parameter
// draws (generic and engineered quasi-exact levels per family) and an
// independent Aberth-Ehrlich root finder used as the eigenvalue oracle.
#pragma once

#include <random>
#include <vector>

#include "heun/heun.hpp"

namespace testsup {

using heun::cplx;

inline double urand(std::mt19937_64& rng, double lo = -1.2, double hi = 1.2) {
    return std::uniform_real_distribution<double>(lo, hi)(rng);
}

inline cplx crand(std::mt19937_64& rng) { return {urand(rng), urand(rng)}; }

// complex draw bounded away from zero
inline cplx crand_away(std::mt19937_64& rng, double min_abs = 0.5) {
    for (;;) {
        const cplx z = crand(rng);
        if (std::abs(z) >= min_abs) return z;
    }
}

// real draw bounded away from every integer (keeps conditions from firing by
// accident and keeps series recurrences non-resonant)
inline double offlattice(std::mt19937_64& rng, double lo = -1.6, double hi = 1.6) {
    for (;;) {
        const double v = urand(rng, lo, hi);
        if (std::abs(v - std::round(v)) > 0.12) return v;
    }
}

// complex with an off-lattice real part, mild imaginary part
inline cplx coff(std::mt19937_64& rng) { return {offlattice(rng), urand(rng, -0.3, 0.3)}; }

// ---- generic (usually non-QES) parameter draws -------------------------------

inline heun::GeneralHeunParams ghe_random(std::mt19937_64& rng) {
    return heun::GeneralHeunParams::make(coff(rng), coff(rng), coff(rng), coff(rng), crand(rng),
                                         cplx(2.2, 0.0) + 0.5 * crand(rng));
}

inline heun::ConfluentHeunParams che_random(std::mt19937_64& rng) {
    return {crand_away(rng), coff(rng), crand(rng), crand(rng), crand(rng)};
}

inline heun::BiconfluentHeunParams bhe_random(std::mt19937_64& rng) {
    return {coff(rng), crand(rng), coff(rng), crand(rng)};
}

inline heun::DoublyConfluentHeunParams dhe_random(std::mt19937_64& rng) {
    return {crand_away(rng), crand_away(rng), crand(rng), crand(rng), crand(rng)};
}

inline heun::TriconfluentHeunParams the_random(std::mt19937_64& rng) {
    return {crand(rng), crand(rng), crand(rng)};
}

// ---- engineered quasi-exact levels --------------------------------------------
// Each returns parameters satisfying the branch's closed-form condition with
// degree n, plus the sigma/tau of the hosting pair.

struct Level {
    cplx sigma, tau;
    int n;
};

inline heun::GeneralHeunParams ghe_qes(std::mt19937_64& rng, int n, int branch, Level& lvl) {
    cplx alpha = coff(rng);
    cplx beta = coff(rng);
    cplx gamma = coff(rng);
    switch (branch) {
        case 0: alpha = -static_cast<double>(n); lvl.tau = 0.0; break;
        case 1: beta = -static_cast<double>(n); lvl.tau = 0.0; break;
        case 2: alpha = gamma - 1.0 - static_cast<double>(n); lvl.tau = 0.5 * (1.0 - gamma); break;
        default: beta = gamma - 1.0 - static_cast<double>(n); lvl.tau = 0.5 * (1.0 - gamma); break;
    }
    lvl.sigma = (branch == 0 || branch == 2) ? -0.5 * alpha : -0.5 * beta;
    lvl.n = n;
    auto p = heun::GeneralHeunParams::make(gamma, coff(rng), alpha, beta, crand(rng),
                                           cplx(2.2, 0.0) + 0.5 * crand(rng));
    return p;
}

inline heun::ConfluentHeunParams che_qes(std::mt19937_64& rng, int n, int branch, Level& lvl) {
    const cplx kappa = crand_away(rng);
    const cplx gamma = coff(rng);
    const cplx mu = crand(rng);
    cplx target = static_cast<double>(n);  // -(mu+nu)/kappa
    lvl.tau = 0.0;
    if (branch == 1) {
        target = static_cast<double>(n) + (1.0 - gamma);
        lvl.tau = 0.5 * (1.0 - gamma);
    }
    const cplx nu = -kappa * target - mu;
    lvl.sigma = -0.5 * (mu + nu) / kappa;
    lvl.n = n;
    return {kappa, gamma, crand(rng), mu, nu};
}

inline heun::BiconfluentHeunParams bhe_qes(std::mt19937_64& rng, int n, int branch, Level& lvl) {
    const cplx alpha = coff(rng);
    const cplx gamma = branch == 0 ? alpha + 2.0 + 2.0 * static_cast<double>(n)
                                   : 2.0 * static_cast<double>(n) + 2.0 - alpha;
    lvl.sigma = 0.25 * (gamma - alpha - 2.0);
    lvl.tau = branch == 0 ? cplx(0.0) : -0.5 * alpha;
    lvl.n = n;
    return {alpha, crand(rng), gamma, crand(rng)};
}

inline heun::DoublyConfluentHeunParams dhe_qes(std::mt19937_64& rng, int n, Level& lvl) {
    const cplx a1 = crand_away(rng), am1 = crand_away(rng);
    const cplx Bm1 = crand(rng), B0 = crand(rng);
    const cplx B1 = a1 * (Bm1 / am1 - 1.0 - static_cast<double>(n));
    lvl.sigma = -(0.5 * B1 / a1 + 0.25);
    lvl.tau = -(0.5 * Bm1 / am1 - 0.25);
    lvl.n = n;
    return {a1, am1, B1, B0, Bm1};
}

// DHE level draw with |alpha_{+-1}| in [mag_lo, mag_hi].  The origin is an
// irregular point, so the ascending series is factorially divergent beyond
// the truncation; the 20-extra-term tail check is numerically meaningful in
// double precision only when the alpha's dominate the divergence envelope
// prod_k (N+k)^2 / (|alpha_{-1}| k).  Solution-verification draws use
// magnitudes ~20-30; matrix cross-checks have no such constraint.
inline heun::DoublyConfluentHeunParams dhe_qes_scaled(std::mt19937_64& rng, int n, Level& lvl,
                                                      double mag_lo = 20.0, double mag_hi = 30.0) {
    auto big = [&] {
        const double theta = urand(rng, 0.0, 6.2831853);
        return cplx(std::cos(theta), std::sin(theta)) * urand(rng, mag_lo, mag_hi);
    };
    const cplx a1 = big(), am1 = big();
    const cplx Bm1 = crand(rng), B0 = crand(rng);
    const cplx B1 = a1 * (Bm1 / am1 - 1.0 - static_cast<double>(n));
    lvl.sigma = -(0.5 * B1 / a1 + 0.25);
    lvl.tau = -(0.5 * Bm1 / am1 - 0.25);
    lvl.n = n;
    return {a1, am1, B1, B0, Bm1};
}

// ---- independent root-finding oracle ------------------------------------------
// Aberth-Ehrlich simultaneous Newton corrections; a different update rule
// than the library's Durand-Kerner, used only from tests.

inline std::vector<cplx> aberth_roots(std::vector<cplx> coeffs, int max_iter = 400) {
    while (!coeffs.empty() && std::abs(coeffs.back()) == 0.0) coeffs.pop_back();
    if (coeffs.size() <= 1) return {};
    const std::size_t deg = coeffs.size() - 1;
    for (auto& c : coeffs) c /= coeffs.back();
    auto deriv = heun::poly_derivative(coeffs);
    double radius = 0.0;
    for (std::size_t k = 0; k < deg; ++k) radius = std::max(radius, std::abs(coeffs[k]));
    radius = 1.0 + radius;
    std::vector<cplx> w(deg);
    cplx g = 1.0;
    for (std::size_t i = 0; i < deg; ++i) {
        g *= cplx(0.28, 0.93);
        w[i] = radius * g * 0.7;
    }
    for (int it = 0; it < max_iter; ++it) {
        double worst = 0.0;
        for (std::size_t i = 0; i < deg; ++i) {
            const cplx pv = heun::eval_poly(coeffs, w[i]);
            const cplx dv = heun::eval_poly(deriv, w[i]);
            if (std::abs(dv) == 0.0) continue;
            const cplx newton = pv / dv;
            cplx repel = 0.0;
            for (std::size_t j = 0; j < deg; ++j)
                if (j != i) repel += 1.0 / (w[i] - w[j]);
            const cplx step = newton / (1.0 - newton * repel);
            w[i] -= step;
            worst = std::max(worst, std::abs(step) / std::max(1.0, std::abs(w[i])));
        }
        if (worst < 1e-14) break;
    }
    return w;
}

// greedy matching distance between two root multisets
inline double root_set_distance(std::vector<cplx> a, std::vector<cplx> b) {
    if (a.size() != b.size()) return std::numeric_limits<double>::infinity();
    double worst = 0.0;
    for (const auto& x : a) {
        std::size_t best = 0;
        double bd = std::numeric_limits<double>::infinity();
        for (std::size_t j = 0; j < b.size(); ++j) {
            const double d = std::abs(x - b[j]);
            if (d < bd) { bd = d; best = j; }
        }
        worst = std::max(worst, bd);
        b.erase(b.begin() + static_cast<std::ptrdiff_t>(best));
    }
    return worst;
}

// matrix helpers for the cross-validation tests
inline heun::InvariantMatrix reverse_basis(const heun::InvariantMatrix& m) {
    heun::InvariantMatrix r = m;
    std::reverse(r.diag.begin(), r.diag.end());
    r.sub.assign(m.sup.rbegin(), m.sup.rend());
    r.sup.assign(m.sub.rbegin(), m.sub.rend());
    return r;
}

inline double matrix_rel_diff(const heun::InvariantMatrix& a, const heun::InvariantMatrix& b) {
    double worst = 0.0;
    for (int i = 0; i <= a.n; ++i)
        for (int j = std::max(0, i - 1); j <= std::min(a.n, i + 1); ++j) {
            const double diff = std::abs(a.entry(i, j) - b.entry(i, j));
            worst = std::max(worst, diff / std::max(1.0, std::abs(b.entry(i, j))));
        }
    return worst;
}

}  // namespace testsup
