// A solved quasi-polynomial z^{2tau} P_N(z) together with its eigenvalue
// (the value of -a8 for which it solves the equation) and the two
// independent verification metrics attached by the Frobenius layer.
#pragma once

#include <vector>

#include "heun/numeric.hpp"

namespace heun {

struct QuasiPolynomial {
    cplx tau2 = 0.0;           // base exponent 2 tau
    std::vector<cplx> coeffs;  // k_0 .. k_N, leading nonzero normalized to 1
    cplx eigen = 0.0;          // solved value of -a8
    double residual_max = 0.0;     // relative, from operator application
    double truncation_max = 0.0;   // relative, from the series tail

    int degree() const { return static_cast<int>(coeffs.size()) - 1; }
    bool verified(double residual_tol = tol::residual_verified,
                  double truncation_tol = tol::truncation_verified) const {
        return residual_max <= residual_tol && truncation_max <= truncation_tol;
    }
};

}  // namespace heun
