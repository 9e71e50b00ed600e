// Quasi-exact / exact solvability classification: a fixed (sigma, tau) pair
// with 2(sigma - tau) = N in {0, 1, 2, ...} spans an (N+1)-dimensional
// invariant monomial subspace z^{2tau+p}; an absent O+ (or absent O-/O--)
// part frees sigma (or tau) and yields such subspaces for every N.
#pragma once

#include <algorithm>
#include <string>
#include <vector>

#include "heun/algebraize.hpp"

namespace heun {

struct QesInstance {
    cplx sigma, tau;
    int n = 0;              // polynomial degree N; subspace dimension N+1
    int sigma_branch = -1;  // index into the fixed sigma roots, -1 = free choice
    int tau_branch = -1;    // index into the fixed tau roots, -1 = free choice
};

enum class SolvabilityMode {
    not_solvable,      // algebraizable but no quasi-polynomial level
    quasi_exact,       // finitely many (sigma, tau, N) instances
    exact_sigma_free,  // O+ absent: one instance for every N at each fixed tau
    exact_tau_free,    // O-/O-- absent: one instance for every N at each fixed sigma
    fully_diagonal     // both absent: all monomials z^c are eigenfunctions
};

inline const char* solvability_mode_name(SolvabilityMode m) {
    switch (m) {
        case SolvabilityMode::not_solvable: return "not_solvable";
        case SolvabilityMode::quasi_exact: return "quasi_exact";
        case SolvabilityMode::exact_sigma_free: return "exact_sigma_free";
        case SolvabilityMode::exact_tau_free: return "exact_tau_free";
        case SolvabilityMode::fully_diagonal: return "fully_diagonal";
    }
    return "?";
}

inline std::string solution_form(const cplx& tau, int n) {
    const cplx e = 2.0 * tau;
    std::string s = "z^(";
    s += std::to_string(e.real());
    if (e.imag() != 0.0) {
        s += (e.imag() > 0 ? "+" : "");
        s += std::to_string(e.imag()) + "i";
    }
    s += ") * P_" + std::to_string(n) + "(z)";
    return s;
}

struct SolvabilityReport {
    SolvabilityMode mode = SolvabilityMode::not_solvable;
    std::vector<QesInstance> instances;   // quasi_exact mode
    std::vector<FixedRoot> fixed_taus;    // exact_sigma_free: the available tau values
    std::vector<FixedRoot> fixed_sigmas;  // exact_tau_free: the available sigma values
};

namespace detail {
inline bool same_instance(const QesInstance& a, const QesInstance& b,
                          double tolerance = tol::half_integer) {
    return a.n == b.n && std::abs(2.0 * a.tau - 2.0 * b.tau) <= tolerance;
}
}  // namespace detail

inline SolvabilityReport classify_solvability(const GenericCoefficients& c,
                                              const AlgebraizationResult& alg,
                                              double half_int_tol = tol::half_integer) {
    (void)c;
    if (!alg.algebraizable())
        throw input_error("classify_solvability: equation is not algebraizable");
    SolvabilityReport rep;
    if (alg.sigma.is_free() && alg.tau.is_free()) {
        rep.mode = SolvabilityMode::fully_diagonal;
        return rep;
    }
    if (alg.sigma.is_free()) {
        rep.mode = SolvabilityMode::exact_sigma_free;
        rep.fixed_taus = alg.tau.roots;
        return rep;
    }
    if (alg.tau.is_free()) {
        rep.mode = SolvabilityMode::exact_tau_free;
        rep.fixed_sigmas = alg.sigma.roots;
        return rep;
    }
    for (std::size_t i = 0; i < alg.sigma.roots.size(); ++i) {
        for (std::size_t j = 0; j < alg.tau.roots.size(); ++j) {
            const cplx s = alg.sigma.roots[i].value;
            const cplx t = alg.tau.roots[j].value;
            const long n = nonnegative_integer_near(2.0 * (s - t), half_int_tol);
            if (n < 0) continue;
            QesInstance inst{s, t, static_cast<int>(n), static_cast<int>(i), static_cast<int>(j)};
            bool dup = false;
            for (const auto& other : rep.instances)
                if (detail::same_instance(other, inst)) { dup = true; break; }
            if (!dup) rep.instances.push_back(inst);
        }
    }
    rep.mode = rep.instances.empty() ? SolvabilityMode::not_solvable : SolvabilityMode::quasi_exact;
    return rep;
}

// Concrete levels up to n_max.  For the fully diagonal operator the subspace
// exponent is a free choice; `diagonal_tau` supplies it (default 0, i.e. the
// constant basis state).
inline std::vector<QesInstance> enumerate_qes_levels(const SolvabilityReport& rep, int n_max,
                                                     const cplx& diagonal_tau = 0.0) {
    if (n_max < 0) throw input_error("enumerate_qes_levels: n_max must be >= 0");
    std::vector<QesInstance> out;
    auto push_unique = [&](const QesInstance& inst) {
        for (const auto& other : out)
            if (detail::same_instance(other, inst)) return;
        out.push_back(inst);
    };
    switch (rep.mode) {
        case SolvabilityMode::not_solvable:
            break;
        case SolvabilityMode::quasi_exact:
            for (const auto& inst : rep.instances)
                if (inst.n <= n_max) push_unique(inst);
            break;
        case SolvabilityMode::exact_sigma_free:
            for (std::size_t j = 0; j < rep.fixed_taus.size(); ++j)
                for (int n = 0; n <= n_max; ++n)
                    push_unique({rep.fixed_taus[j].value + 0.5 * n, rep.fixed_taus[j].value, n, -1,
                                 static_cast<int>(j)});
            break;
        case SolvabilityMode::exact_tau_free:
            for (std::size_t i = 0; i < rep.fixed_sigmas.size(); ++i)
                for (int n = 0; n <= n_max; ++n)
                    push_unique({rep.fixed_sigmas[i].value, rep.fixed_sigmas[i].value - 0.5 * n, n,
                                 static_cast<int>(i), -1});
            break;
        case SolvabilityMode::fully_diagonal:
            out.push_back({diagonal_tau, diagonal_tau, 0, -1, -1});
            break;
    }
    return out;
}

// Family-specific closed-form conditions, evaluated directly from the native
// parameters.  These must agree with classify_solvability on every input.
struct ConditionEntry {
    std::string label;
    bool fires = false;
    int n = -1;
    cplx sigma, tau;
};

struct ConditionReport {
    SolvabilityMode mode = SolvabilityMode::not_solvable;
    std::vector<ConditionEntry> entries;
    std::string note;  // non-algebraizable reason or special-case remark
};

namespace detail {
// All branch entries are kept, fired or not; instance-level dedup by
// (2tau, N) happens when comparing against classify_solvability.
inline void add_condition(ConditionReport& rep, std::string label, const cplx& n_value,
                          const cplx& sigma, const cplx& tau, double tolerance) {
    ConditionEntry e;
    e.label = std::move(label);
    const long n = nonnegative_integer_near(n_value, tolerance);
    if (n >= 0) {
        e.fires = true;
        e.n = static_cast<int>(n);
        e.sigma = sigma;
        e.tau = tau;
    }
    rep.entries.push_back(std::move(e));
}
}  // namespace detail

inline ConditionReport solvability_conditions(const GeneralHeunParams& p,
                                              double tolerance = tol::half_integer) {
    ConditionReport rep;
    rep.mode = SolvabilityMode::not_solvable;
    const cplx s1 = -0.5 * p.alpha, s2 = -0.5 * p.beta;
    const cplx t1 = 0.0, t2 = 0.5 * (1.0 - p.gamma);
    detail::add_condition(rep, "alpha = -N", -p.alpha, s1, t1, tolerance);
    detail::add_condition(rep, "beta = -N", -p.beta, s2, t1, tolerance);
    detail::add_condition(rep, "alpha = gamma-1-N", p.gamma - 1.0 - p.alpha, s1, t2, tolerance);
    detail::add_condition(rep, "beta = gamma-1-N", p.gamma - 1.0 - p.beta, s2, t2, tolerance);
    for (const auto& e : rep.entries)
        if (e.fires) rep.mode = SolvabilityMode::quasi_exact;
    return rep;
}

inline ConditionReport solvability_conditions(const ConfluentHeunParams& p,
                                              double tolerance = tol::half_integer,
                                              double zero_tol = tol::coefficient_zero) {
    ConditionReport rep;
    const cplx t1 = 0.0, t2 = 0.5 * (1.0 - p.gamma);
    if (near_zero(p.kappa, zero_tol)) {
        if (near_zero(p.mu + p.nu, zero_tol)) {
            rep.mode = SolvabilityMode::exact_sigma_free;
            rep.note = "kappa = mu+nu = 0: hypergeometric reduction, sigma free";
        } else {
            rep.mode = SolvabilityMode::not_solvable;
            rep.note = std::string("non-algebraizable: ") + non_alg_reason_text(NonAlgReason::raising_part);
        }
        return rep;
    }
    const cplx sigma = -0.5 * (p.mu + p.nu) / p.kappa;
    detail::add_condition(rep, "-(mu+nu)/kappa = N", -(p.mu + p.nu) / p.kappa, sigma, t1, tolerance);
    detail::add_condition(rep, "-(mu+nu)/kappa-(1-gamma) = N",
                          -(p.mu + p.nu) / p.kappa - (1.0 - p.gamma), sigma, t2, tolerance);
    rep.mode = SolvabilityMode::not_solvable;
    for (const auto& e : rep.entries)
        if (e.fires) rep.mode = SolvabilityMode::quasi_exact;
    return rep;
}

inline ConditionReport solvability_conditions(const BiconfluentHeunParams& p,
                                              double tolerance = tol::half_integer) {
    ConditionReport rep;
    const cplx sigma = 0.25 * (p.gamma - p.alpha - 2.0);
    detail::add_condition(rep, "(gamma-alpha-2)/2 = N", 0.5 * (p.gamma - p.alpha - 2.0), sigma, 0.0,
                          tolerance);
    detail::add_condition(rep, "(gamma+alpha-2)/2 = N", 0.5 * (p.gamma + p.alpha - 2.0), sigma,
                          -0.5 * p.alpha, tolerance);
    rep.mode = SolvabilityMode::not_solvable;
    for (const auto& e : rep.entries)
        if (e.fires) rep.mode = SolvabilityMode::quasi_exact;
    return rep;
}

inline ConditionReport solvability_conditions(const DoublyConfluentHeunParams& p,
                                              double tolerance = tol::half_integer,
                                              double zero_tol = tol::coefficient_zero) {
    ConditionReport rep;
    const bool raising_absent = near_zero(p.alpha1, zero_tol) && near_zero(p.B1, zero_tol);
    const bool lowering_absent = near_zero(p.alpham1, zero_tol) && near_zero(p.Bm1, zero_tol);
    if (near_zero(p.alpha1, zero_tol) && !near_zero(p.B1, zero_tol)) {
        rep.mode = SolvabilityMode::not_solvable;
        rep.note = std::string("non-algebraizable: ") + non_alg_reason_text(NonAlgReason::raising_part);
        return rep;
    }
    if (near_zero(p.alpham1, zero_tol) && !near_zero(p.Bm1, zero_tol)) {
        rep.mode = SolvabilityMode::not_solvable;
        rep.note = std::string("non-algebraizable: ") + non_alg_reason_text(NonAlgReason::lowering_part);
        return rep;
    }
    if (raising_absent && lowering_absent) {
        rep.mode = SolvabilityMode::fully_diagonal;
        rep.note = "all monomial solutions z^c, eigenvalue -B0 = c^2";
        return rep;
    }
    if (raising_absent) {
        rep.mode = SolvabilityMode::exact_sigma_free;
        rep.note = "alpha1 = B1 = 0: sigma free";
        return rep;
    }
    if (lowering_absent) {
        rep.mode = SolvabilityMode::exact_tau_free;
        rep.note = "alpham1 = Bm1 = 0: tau free";
        return rep;
    }
    const cplx sigma = -(0.5 * p.B1 / p.alpha1 + 0.25);
    const cplx tau = -(0.5 * p.Bm1 / p.alpham1 - 0.25);
    detail::add_condition(rep, "-(B1/alpha1+1/2)+(Bm1/alpham1-1/2) = N",
                          -(p.B1 / p.alpha1 + 0.5) + (p.Bm1 / p.alpham1 - 0.5), sigma, tau,
                          tolerance);
    rep.mode = rep.entries.front().fires ? SolvabilityMode::quasi_exact
                                         : SolvabilityMode::not_solvable;
    return rep;
}

inline ConditionReport solvability_conditions(const TriconfluentHeunParams&,
                                              double tolerance = tol::half_integer) {
    (void)tolerance;
    ConditionReport rep;
    rep.mode = SolvabilityMode::quasi_exact;
    ConditionEntry e;
    e.label = "singlet: constant solution only";
    e.fires = true;
    e.n = 0;
    e.sigma = 0.0;
    e.tau = 0.0;
    rep.entries.push_back(e);
    rep.note = "sigma = tau = 0; z^{2tau}P_0(z) = constant";
    return rep;
}

}  // namespace heun
