// Bi-parametric su(1,1) generators acting on generalized monomials,
//
//   J+ = z^2 d/dz - 2 sigma z,   J0 = z d/dz - (sigma+tau),   J- = d/dz - 2 tau / z,
//
// so that on z^q:  J+ z^q = (q-2sigma) z^{q+1},  J0 z^q = (q-sigma-tau) z^q,
// J- z^q = (q-2tau) z^{q-1}.  They satisfy [J0,J±] = ±J± and [J+,J-] = -2 J0
// with quadratic Casimir -(sigma-tau)(sigma-tau+1).
//
// The degree-graded pieces of the Heun operator live here too:
//   O+  = a0 z^3 y'' + a4 z^2 y' + a7 z      (degree +1)
//   O0  = a1 z^2 y'' + a5 z  y' + a8         (degree  0)
//   O-  = a2 z  y''  + a6    y' + a9 / z     (degree -1)
//   O-- = a3 y''                              (degree -2)
#pragma once

#include <span>
#include <vector>

#include "heun/canonical.hpp"
#include "heun/generalized_polynomial.hpp"

namespace heun {

struct GeneratorParams {
    cplx sigma, tau;
};

enum class Generator { j_plus, j_zero, j_minus };
enum class GradedPart { o_plus, o_zero, o_minus, o_minus_minus };

inline GeneralizedPolynomial apply_generator(Generator g, const GeneratorParams& p,
                                             const GeneralizedPolynomial& x) {
    GeneralizedPolynomial out;
    if (x.empty()) return out;
    out.coeffs.resize(x.coeffs.size());
    switch (g) {
        case Generator::j_plus:
            out.base = x.base + 1.0;
            for (std::size_t k = 0; k < x.coeffs.size(); ++k) {
                const cplx q = x.base + static_cast<double>(k);
                out.coeffs[k] = (q - 2.0 * p.sigma) * x.coeffs[k];
            }
            break;
        case Generator::j_zero:
            out.base = x.base;
            for (std::size_t k = 0; k < x.coeffs.size(); ++k) {
                const cplx q = x.base + static_cast<double>(k);
                out.coeffs[k] = (q - p.sigma - p.tau) * x.coeffs[k];
            }
            break;
        case Generator::j_minus:
            out.base = x.base - 1.0;
            for (std::size_t k = 0; k < x.coeffs.size(); ++k) {
                const cplx q = x.base + static_cast<double>(k);
                out.coeffs[k] = (q - 2.0 * p.tau) * x.coeffs[k];
            }
            break;
    }
    return out;
}

// Coefficient produced by each graded part on a single power z^q.
inline cplx graded_weight(GradedPart part, const GenericCoefficients& c, const cplx& q) {
    const auto& a = c.a;
    switch (part) {
        case GradedPart::o_plus: return a[0] * q * (q - 1.0) + a[4] * q + a[7];
        case GradedPart::o_zero: return a[1] * q * (q - 1.0) + a[5] * q + a[8];
        case GradedPart::o_minus: return a[2] * q * (q - 1.0) + a[6] * q + a[9];
        case GradedPart::o_minus_minus: return a[3] * q * (q - 1.0);
    }
    return 0.0;
}

inline int graded_degree(GradedPart part) {
    switch (part) {
        case GradedPart::o_plus: return +1;
        case GradedPart::o_zero: return 0;
        case GradedPart::o_minus: return -1;
        case GradedPart::o_minus_minus: return -2;
    }
    return 0;
}

inline GeneralizedPolynomial apply_graded_part(GradedPart part, const GenericCoefficients& c,
                                               const GeneralizedPolynomial& x) {
    GeneralizedPolynomial out;
    if (x.empty()) return out;
    out.base = x.base + static_cast<double>(graded_degree(part));
    out.coeffs.resize(x.coeffs.size());
    for (std::size_t k = 0; k < x.coeffs.size(); ++k)
        out.coeffs[k] = graded_weight(part, c, x.base + static_cast<double>(k)) * x.coeffs[k];
    return out;
}

// Full operator H = O+ + O0 + O- + O--.
inline GeneralizedPolynomial apply_heun_operator(const GenericCoefficients& c,
                                                 const GeneralizedPolynomial& x) {
    GeneralizedPolynomial out = apply_graded_part(GradedPart::o_plus, c, x);
    out = add(out, apply_graded_part(GradedPart::o_zero, c, x));
    out = add(out, apply_graded_part(GradedPart::o_minus, c, x));
    out = add(out, apply_graded_part(GradedPart::o_minus_minus, c, x));
    return out;
}

enum class CommutatorPair { j0_jp, j0_jm, jp_jm };

// Max coefficient norm of ([A,B] - expected) z^q over the probe powers.
// Identically zero in exact arithmetic for every complex (sigma, tau).
inline double commutator_defect(const GeneratorParams& p, CommutatorPair pair,
                                std::span<const cplx> probes) {
    if (probes.empty()) throw input_error("commutator_defect: empty probe set");
    Generator A{}, B{};
    switch (pair) {
        case CommutatorPair::j0_jp: A = Generator::j_zero; B = Generator::j_plus; break;
        case CommutatorPair::j0_jm: A = Generator::j_zero; B = Generator::j_minus; break;
        case CommutatorPair::jp_jm: A = Generator::j_plus; B = Generator::j_minus; break;
    }
    double worst = 0.0;
    for (const cplx& q : probes) {
        const auto x = GeneralizedPolynomial::monomial(q);
        auto lhs = sub(apply_generator(A, p, apply_generator(B, p, x)),
                       apply_generator(B, p, apply_generator(A, p, x)));
        GeneralizedPolynomial expected;
        switch (pair) {
            case CommutatorPair::j0_jp: expected = apply_generator(Generator::j_plus, p, x); break;
            case CommutatorPair::j0_jm:
                expected = apply_generator(Generator::j_minus, p, x);
                expected *= cplx(-1.0);
                break;
            case CommutatorPair::jp_jm:
                expected = apply_generator(Generator::j_zero, p, x);
                expected *= cplx(-2.0);
                break;
        }
        worst = std::max(worst, sub(lhs, expected).max_abs_coeff());
    }
    return worst;
}

inline cplx casimir_value(const GeneratorParams& p) {
    const cplx j = p.sigma - p.tau;
    return -j * (j + 1.0);
}

// (1/2)(J+J- + J-J+) - J0 J0 applied as operators; equals casimir_value times
// the input on every monomial.
inline GeneralizedPolynomial apply_casimir(const GeneratorParams& p,
                                           const GeneralizedPolynomial& x) {
    auto jp = [&](const GeneralizedPolynomial& v) { return apply_generator(Generator::j_plus, p, v); };
    auto jm = [&](const GeneralizedPolynomial& v) { return apply_generator(Generator::j_minus, p, v); };
    auto j0 = [&](const GeneralizedPolynomial& v) { return apply_generator(Generator::j_zero, p, v); };
    GeneralizedPolynomial out = add(jp(jm(x)), jm(jp(x)));
    out *= cplx(0.5);
    return sub(out, j0(j0(x)));
}

// Constants of the quadratic ansatz
//   H = c_{+0} J+J0 + c_{+-} J+J- + c_{0-} J0J- + c_{--} J-J- + c_+ J+ + c_0 J0 + c_- J- + c.
// (c_{++} and c_{00} vanish identically for the Heun class.)
struct CCoefficients {
    cplx cp0, cp;   // J+J0 and J+
    cplx c0m, cm;   // J0J- and J-
    cplx cpm, c0;   // J+J- and J0
    cplx cmm;       // J-J-
    cplx c;         // constant
};

inline GeneralizedPolynomial apply_ansatz(const CCoefficients& cc, const GeneratorParams& p,
                                          const GeneralizedPolynomial& x) {
    auto gen = [&](Generator g, const GeneralizedPolynomial& v) { return apply_generator(g, p, v); };
    using G = Generator;
    GeneralizedPolynomial out;
    auto acc = [&](const cplx& w, GeneralizedPolynomial v) {
        if (near_zero(w, 0.0)) return;
        v *= w;
        out = add(out, v);
    };
    acc(cc.cp0, gen(G::j_plus, gen(G::j_zero, x)));
    acc(cc.cpm, gen(G::j_plus, gen(G::j_minus, x)));
    acc(cc.c0m, gen(G::j_zero, gen(G::j_minus, x)));
    acc(cc.cmm, gen(G::j_minus, gen(G::j_minus, x)));
    acc(cc.cp, gen(G::j_plus, x));
    acc(cc.c0, gen(G::j_zero, x));
    acc(cc.cm, gen(G::j_minus, x));
    GeneralizedPolynomial cx = x;
    cx *= cc.c;
    return add(out, cx);
}

}  // namespace heun
