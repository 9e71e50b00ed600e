// su(1,1) representation taxonomy.  With g(h) = -h(h+1), a representation
// with Casimir c places its weights on the line g = c; bounded-above weights
// end on g(h), bounded-below ones on g(h-1).  The solution spaces attached
// to a Heun-class equation are the bounded-below family launched from
// z^{2tau} (lowest weight -(sigma-tau)) and the bounded-above family ending
// at z^{2sigma} (highest weight sigma-tau); for 2(sigma-tau) = N in N_0 the
// two share an (N+1)-dimensional piece, which is the invariant subspace.
#pragma once

#include <optional>
#include <span>
#include <vector>

#include "heun/numeric.hpp"

namespace heun {

enum class RepClass {
    principal_series,
    complementary_series,
    positive_discrete,
    negative_discrete,
    non_unitary_unbounded,
    non_unitary_bounded_below,
    non_unitary_bounded_above,
    finite_dimensional,
    bounded_unclassified  // complex representation parameter: bounded families
                          // persist but the real-weight taxonomy does not apply
};

inline const char* rep_class_name(RepClass c) {
    switch (c) {
        case RepClass::principal_series: return "PS";
        case RepClass::complementary_series: return "CS";
        case RepClass::positive_discrete: return "PD";
        case RepClass::negative_discrete: return "ND";
        case RepClass::non_unitary_unbounded: return "NUB";
        case RepClass::non_unitary_bounded_below: return "NBB";
        case RepClass::non_unitary_bounded_above: return "NBA";
        case RepClass::finite_dimensional: return "FD";
        case RepClass::bounded_unclassified: return "bounded-unclassified";
    }
    return "?";
}

struct WeightData {
    cplx casimir;
    std::optional<cplx> j0_max, j0_min;
    bool bounded_above = false, bounded_below = false;
};

inline WeightData weight_data(const cplx& sigma, const cplx& tau) {
    const cplx j = sigma - tau;
    WeightData w;
    w.casimir = -j * (j + 1.0);
    w.j0_max = j;    // highest weight of the bounded-above family
    w.j0_min = -j;   // lowest weight of the bounded-below family
    w.bounded_above = true;
    w.bounded_below = true;
    return w;
}

struct RepClassification {
    RepClass bounded_below = RepClass::bounded_unclassified;
    RepClass bounded_above = RepClass::bounded_unclassified;
    std::optional<int> finite_dim;  // dimension 2j+1 of the common piece, when present
};

inline RepClassification classify_representation(const WeightData& w,
                                                 double tolerance = tol::half_integer) {
    RepClassification out;
    if (!w.j0_max) return out;
    const cplx j = *w.j0_max;
    if (std::abs(j.imag()) > tolerance) return out;  // figures no longer apply
    if (j.real() < -tolerance) {
        out.bounded_below = RepClass::positive_discrete;
        out.bounded_above = RepClass::negative_discrete;
        return out;
    }
    out.bounded_below = RepClass::non_unitary_bounded_below;
    out.bounded_above = RepClass::non_unitary_bounded_above;
    const long n = nonnegative_integer_near(2.0 * j, tolerance);
    if (n >= 0) out.finite_dim = static_cast<int>(n) + 1;
    return out;
}

// One row of the class-membership table for a given real Casimir value.
// h_low / h_high carry the class-defining boundary weights where they exist:
// the lowest weight for bounded-below classes, the highest for bounded-above,
// both for FD, and the two intersections of the Casimir line with g(h) for
// the continuous classes (the excluded interval for CS, the mandatory
// straddle for NUB, the double root at the vertex for PS at c = 1/4).
struct TaxonomyRow {
    double casimir = 0.0;
    RepClass cls = RepClass::principal_series;
    std::optional<double> h_low, h_high;
    int fd_dim = 0;  // nonzero only for finite_dimensional rows
};

inline std::vector<TaxonomyRow> taxonomy_table(std::span<const double> casimirs,
                                               double tolerance = tol::half_integer) {
    std::vector<TaxonomyRow> rows;
    for (const double c : casimirs) {
        const double under = 1.0 - 4.0 * c;
        const double s = under >= 0.0 ? std::sqrt(under) : 0.0;
        if (c >= 0.25) {
            TaxonomyRow r{c, RepClass::principal_series, {}, {}, 0};
            if (under >= 0.0) {  // vertex touch at c = 1/4
                r.h_low = (-1.0 - s) / 2.0;
                r.h_high = (-1.0 + s) / 2.0;
            }
            rows.push_back(r);
        }
        if (c > 0.0 && c < 0.25)
            rows.push_back({c, RepClass::complementary_series, (-1.0 - s) / 2.0, (-1.0 + s) / 2.0, 0});
        if (c < 0.25)
            rows.push_back({c, RepClass::non_unitary_unbounded, (-1.0 - s) / 2.0, (-1.0 + s) / 2.0, 0});
        if (c <= 0.25 && c > 0.0) {
            // both sign choices of the discrete-series boundary exist here
            rows.push_back({c, RepClass::positive_discrete, (1.0 - s) / 2.0, {}, 0});
            rows.push_back({c, RepClass::positive_discrete, (1.0 + s) / 2.0, {}, 0});
            rows.push_back({c, RepClass::negative_discrete, {}, (-1.0 + s) / 2.0, 0});
            rows.push_back({c, RepClass::negative_discrete, {}, (-1.0 - s) / 2.0, 0});
        }
        if (c <= 0.0) {
            rows.push_back({c, RepClass::positive_discrete, (1.0 + s) / 2.0, {}, 0});
            rows.push_back({c, RepClass::negative_discrete, {}, (-1.0 - s) / 2.0, 0});
            rows.push_back({c, RepClass::non_unitary_bounded_below, (1.0 - s) / 2.0, {}, 0});
            rows.push_back({c, RepClass::non_unitary_bounded_above, {}, (-1.0 + s) / 2.0, 0});
        }
        // finite-dimensional piece at c = (1 - d^2)/4 for a positive integer
        // dimension d, weights (1-d)/2 .. (d-1)/2
        if (c <= 0.25) {
            const double d = std::sqrt(1.0 - 4.0 * c);
            const double dr = std::round(d);
            if (dr >= 1.0 && std::abs(d - dr) <= tolerance) {
                TaxonomyRow r{c, RepClass::finite_dimensional, (1.0 - dr) / 2.0, (dr - 1.0) / 2.0,
                              static_cast<int>(dr)};
                rows.push_back(r);
            }
        }
    }
    return rows;
}

}  // namespace heun
