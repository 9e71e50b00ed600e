#include <catch2/catch_amalgamated.hpp>

#include "support.hpp"

using namespace heun;

TEST_CASE("weight data from generator parameters") {
    auto w = weight_data(1.0, 0.0);
    CHECK(std::abs(w.casimir - cplx(-2.0)) == 0.0);
    CHECK(std::abs(*w.j0_max - cplx(1.0)) == 0.0);
    CHECK(std::abs(*w.j0_min - cplx(-1.0)) == 0.0);

    for (int n = 0; n <= 8; ++n) {
        const cplx tau(0.21, 0.0);
        auto wn = weight_data(tau + 0.5 * n, tau);
        CHECK(std::abs(*wn.j0_max - *wn.j0_min - cplx(n)) < 1e-12);
    }

    auto ws = weight_data(cplx(0.4, 0.8), cplx(0.4, 0.8));
    CHECK(std::abs(*ws.j0_max) == 0.0);
    CHECK(std::abs(*ws.j0_min) == 0.0);
    CHECK(std::abs(ws.casimir) == 0.0);
}

TEST_CASE("representation classes by the sign and arithmetic of j") {
    auto neg = classify_representation(weight_data(-0.7, 0.0));
    CHECK(neg.bounded_below == RepClass::positive_discrete);
    CHECK(neg.bounded_above == RepClass::negative_discrete);
    CHECK_FALSE(neg.finite_dim.has_value());

    auto fd = classify_representation(weight_data(1.0, 0.0));
    CHECK(fd.bounded_below == RepClass::non_unitary_bounded_below);
    CHECK(fd.bounded_above == RepClass::non_unitary_bounded_above);
    REQUIRE(fd.finite_dim.has_value());
    CHECK(*fd.finite_dim == 3);

    auto frac = classify_representation(weight_data(0.3, 0.0));
    CHECK(frac.bounded_below == RepClass::non_unitary_bounded_below);
    CHECK(frac.bounded_above == RepClass::non_unitary_bounded_above);
    CHECK_FALSE(frac.finite_dim.has_value());

    auto cj = classify_representation(weight_data(cplx(0.5, 0.5), 0.0));
    CHECK(cj.bounded_below == RepClass::bounded_unclassified);
    CHECK(cj.bounded_above == RepClass::bounded_unclassified);
}

TEST_CASE("taxonomy boundary weights") {
    {  // c = 1/4: double intersection at the vertex h = -1/2
        double c = 0.25;
        auto rows = taxonomy_table(std::span<const double>(&c, 1));
        bool found = false;
        for (const auto& r : rows)
            if (r.cls == RepClass::principal_series) {
                REQUIRE(r.h_low.has_value());
                CHECK(*r.h_low == Catch::Approx(-0.5));
                CHECK(*r.h_high == Catch::Approx(-0.5));
                found = true;
            }
        CHECK(found);
    }
    {  // c = 0: the singlet is admissible
        double c = 0.0;
        auto rows = taxonomy_table(std::span<const double>(&c, 1));
        bool fd = false;
        for (const auto& r : rows)
            if (r.cls == RepClass::finite_dimensional) {
                CHECK(r.fd_dim == 1);
                CHECK(*r.h_low == Catch::Approx(0.0));
                CHECK(*r.h_high == Catch::Approx(0.0));
                fd = true;
            }
        CHECK(fd);
    }
    {  // c = -2: discrete-series boundaries (1 +- 3)/2
        double c = -2.0;
        auto rows = taxonomy_table(std::span<const double>(&c, 1));
        bool pd = false, nd = false, fd = false;
        for (const auto& r : rows) {
            if (r.cls == RepClass::positive_discrete) {
                CHECK(*r.h_low == Catch::Approx(2.0));
                pd = true;
            }
            if (r.cls == RepClass::negative_discrete) {
                CHECK(*r.h_high == Catch::Approx(-2.0));
                nd = true;
            }
            if (r.cls == RepClass::finite_dimensional) {
                CHECK(r.fd_dim == 3);  // c = (1 - 9)/4
                fd = true;
            }
        }
        CHECK(pd);
        CHECK(nd);
        CHECK(fd);
    }
}

TEST_CASE("finite piece appears exactly for quasi-exact pairs") {
    std::mt19937_64 rng(81);
    for (int i = 0; i < 300; ++i) {
        cplx sigma, tau;
        if (i % 2 == 0) {
            tau = {testsup::offlattice(rng), 0.0};
            sigma = tau + 0.5 * static_cast<double>(i % 9);
        } else {
            sigma = {testsup::offlattice(rng), 0.0};
            tau = {testsup::offlattice(rng), 0.0};
        }
        const auto cls = classify_representation(weight_data(sigma, tau));
        const bool qes = nonnegative_integer_near(2.0 * (sigma - tau)) >= 0;
        CHECK(cls.finite_dim.has_value() == qes);
        if (qes) CHECK(*cls.finite_dim == nonnegative_integer_near(2.0 * (sigma - tau)) + 1);

        // single source of truth for the Casimir
        CHECK(std::abs(weight_data(sigma, tau).casimir - casimir_value({sigma, tau})) == 0.0);
    }

    // FD dimension d pins the Casimir to (1 - d^2)/4
    for (int d = 1; d <= 9; ++d) {
        const cplx tau(0.37, 0.0);
        const cplx sigma = tau + 0.5 * (d - 1.0);
        const auto w = weight_data(sigma, tau);
        CHECK(std::abs(w.casimir - (1.0 - static_cast<double>(d) * d) / 4.0) <= 1e-12);
    }
}
