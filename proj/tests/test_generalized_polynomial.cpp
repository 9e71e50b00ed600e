#include <catch2/catch_amalgamated.hpp>

#include "heun/generalized_polynomial.hpp"

using namespace heun;

TEST_CASE("monomial and arithmetic on one lattice") {
    auto x = GeneralizedPolynomial::monomial(cplx(0.3, 0.1), 2.0);
    REQUIRE(x.coeffs.size() == 1);
    REQUIRE(x.max_abs_coeff() == 2.0);

    GeneralizedPolynomial y;
    y.base = cplx(2.3, 0.1);  // offset +2 on the same lattice
    y.coeffs = {cplx(1.0), cplx(-4.0)};
    auto s = add(x, y);
    REQUIRE(s.coeffs.size() == 4);
    REQUIRE(s.base == x.base);
    REQUIRE(s.coeffs[0] == cplx(2.0));
    REQUIRE(s.coeffs[1] == cplx(0.0));
    REQUIRE(s.coeffs[2] == cplx(1.0));
    REQUIRE(s.coeffs[3] == cplx(-4.0));

    auto d = sub(s, s);
    REQUIRE(d.max_abs_coeff() == 0.0);
}

TEST_CASE("negative offsets extend the front") {
    auto hi = GeneralizedPolynomial::monomial(cplx(1.0), 3.0);
    auto lo = GeneralizedPolynomial::monomial(cplx(-1.0), 5.0);
    auto s = add(hi, lo);
    REQUIRE(s.base == cplx(-1.0));
    REQUIRE(s.coeffs.size() == 3);
    REQUIRE(s.coeffs[0] == cplx(5.0));
    REQUIRE(s.coeffs[2] == cplx(3.0));
}

TEST_CASE("trim removes edges and shifts the base") {
    GeneralizedPolynomial g;
    g.base = cplx(0.5);
    g.coeffs = {cplx(0.0), cplx(1e-14), cplx(2.0), cplx(0.0)};
    g.trim(1e-12);
    REQUIRE(g.coeffs.size() == 1);
    REQUIRE(g.coeffs[0] == cplx(2.0));
    REQUIRE(g.base == cplx(2.5));

    g.coeffs = {cplx(1e-15)};
    g.trim(1e-12);
    REQUIRE(g.empty());
}

TEST_CASE("incompatible exponent lattices are rejected") {
    auto a = GeneralizedPolynomial::monomial(cplx(0.0));
    auto b = GeneralizedPolynomial::monomial(cplx(0.5));
    REQUIRE_THROWS_AS(add(a, b), input_error);
    auto c = GeneralizedPolynomial::monomial(cplx(1.0, 0.5));
    REQUIRE_THROWS_AS(add(a, c), input_error);
}
