// Finite linear combinations of complex powers z^{rho+k}, k = 0..M.
// This is the value type every operator in the library acts on: the basis
// monomials z^{2tau+p}, series expansions and operator residuals all live
// on one exponent lattice rho + Z.
#pragma once

#include <algorithm>
#include <cstddef>
#include <vector>

#include "heun/numeric.hpp"

namespace heun {

struct GeneralizedPolynomial {
    cplx base = 0.0;           // exponent of coeffs[0]
    std::vector<cplx> coeffs;  // coeffs[k] multiplies z^{base+k}

    static GeneralizedPolynomial monomial(const cplx& exponent, const cplx& coefficient = 1.0) {
        GeneralizedPolynomial g;
        g.base = exponent;
        g.coeffs = {coefficient};
        return g;
    }
    static GeneralizedPolynomial zero() { return {}; }

    bool empty() const { return coeffs.empty(); }

    double max_abs_coeff() const {
        double m = 0.0;
        for (const auto& c : coeffs) m = std::max(m, std::abs(c));
        return m;
    }

    // Drop leading/trailing coefficients at or below `threshold` in magnitude;
    // the base exponent advances past removed leading terms.
    void trim(double threshold = 0.0) {
        std::size_t lo = 0;
        while (lo < coeffs.size() && std::abs(coeffs[lo]) <= threshold) ++lo;
        std::size_t hi = coeffs.size();
        while (hi > lo && std::abs(coeffs[hi - 1]) <= threshold) --hi;
        coeffs = std::vector<cplx>(coeffs.begin() + static_cast<std::ptrdiff_t>(lo),
                                   coeffs.begin() + static_cast<std::ptrdiff_t>(hi));
        base += static_cast<double>(lo);
        if (coeffs.empty()) base = 0.0;
    }

    GeneralizedPolynomial& operator*=(const cplx& s) {
        for (auto& c : coeffs) c *= s;
        return *this;
    }
};

// Integer offset between two exponent lattices, or throws if the bases do
// not differ by an integer within the merge tolerance.
inline long lattice_offset(const cplx& from, const cplx& to,
                           double tolerance = tol::exponent_merge) {
    const cplx d = to - from;
    const double r = std::round(d.real());
    if (std::abs(d.imag()) > tolerance || std::abs(d.real() - r) > tolerance)
        throw input_error("generalized polynomials live on different exponent lattices");
    return static_cast<long>(r);
}

inline GeneralizedPolynomial add(const GeneralizedPolynomial& a, const GeneralizedPolynomial& b,
                                 double tolerance = tol::exponent_merge) {
    if (a.empty()) return b;
    if (b.empty()) return a;
    const long off = lattice_offset(a.base, b.base, tolerance);
    const long lo = std::min(0L, off);
    const long hi = std::max(static_cast<long>(a.coeffs.size()),
                             off + static_cast<long>(b.coeffs.size()));
    GeneralizedPolynomial out;
    out.base = a.base + static_cast<double>(lo);
    out.coeffs.assign(static_cast<std::size_t>(hi - lo), cplx(0.0));
    for (std::size_t k = 0; k < a.coeffs.size(); ++k)
        out.coeffs[static_cast<std::size_t>(static_cast<long>(k) - lo)] += a.coeffs[k];
    for (std::size_t k = 0; k < b.coeffs.size(); ++k)
        out.coeffs[static_cast<std::size_t>(off + static_cast<long>(k) - lo)] += b.coeffs[k];
    return out;
}

inline GeneralizedPolynomial sub(const GeneralizedPolynomial& a, const GeneralizedPolynomial& b,
                                 double tolerance = tol::exponent_merge) {
    GeneralizedPolynomial nb = b;
    nb *= cplx(-1.0);
    return add(a, nb, tolerance);
}

}  // namespace heun
