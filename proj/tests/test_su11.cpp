#include <catch2/catch_amalgamated.hpp>

#include "support.hpp"

using namespace heun;

TEST_CASE("generator action on the boundary states") {
    GeneratorParams p{cplx(0.3, 0.1), cplx(0.7, 0.0)};
    auto lowest = GeneralizedPolynomial::monomial(2.0 * p.tau);
    auto killed = apply_generator(Generator::j_minus, p, lowest);
    CHECK(killed.max_abs_coeff() == 0.0);

    auto highest = GeneralizedPolynomial::monomial(2.0 * p.sigma);
    CHECK(apply_generator(Generator::j_plus, p, highest).max_abs_coeff() == 0.0);

    auto w = apply_generator(Generator::j_zero, p, highest);
    CHECK(std::abs(w.coeffs[0] - (p.sigma - p.tau)) < 1e-15);
}

TEST_CASE("tau = 0 reduces J- to plain differentiation") {
    GeneratorParams p{cplx(1.2, -0.3), 0.0};
    for (double q : {-3.0, 0.0, 0.5, 7.25}) {
        auto img = apply_generator(Generator::j_minus, p, GeneralizedPolynomial::monomial(q));
        CHECK(std::abs(img.coeffs[0] - cplx(q)) < 1e-15);
        CHECK(img.base == cplx(q - 1.0));
    }
}

TEST_CASE("graded parts obey their degree contract and weights") {
    std::mt19937_64 rng(21);
    auto c = to_generic(testsup::ghe_random(rng));
    const cplx q = testsup::crand(rng);
    auto x = GeneralizedPolynomial::monomial(q);
    auto op = apply_graded_part(GradedPart::o_plus, c, x);
    CHECK(op.base == q + 1.0);
    auto o0 = apply_graded_part(GradedPart::o_zero, c, x);
    CHECK(o0.base == q);
    CHECK(std::abs(o0.coeffs[0] - (c.a[1] * q * (q - 1.0) + c.a[5] * q + c.a[8])) < 1e-12);
    auto om = apply_graded_part(GradedPart::o_minus, c, x);
    CHECK(om.base == q - 1.0);
    auto omm = apply_graded_part(GradedPart::o_minus_minus, c, x);
    CHECK(omm.base == q - 2.0);

    // O+ on 1 with GHE coefficients is a7 z = alpha beta z
    auto p = GeneralHeunParams::make(0.5, 1.0, 2.0, 3.0, 1.0, 2.0);
    auto img = apply_graded_part(GradedPart::o_plus, to_generic(p), GeneralizedPolynomial::monomial(0.0));
    CHECK(std::abs(img.coeffs[0] - p.alpha * p.beta) < 1e-15);
    CHECK(img.base == cplx(1.0));

    // the four parts sum to the full operator
    auto total = apply_heun_operator(c, x);
    auto manual = add(add(op, o0), add(om, omm));
    CHECK(sub(total, manual).max_abs_coeff() < 1e-14);
}

TEST_CASE("commutation relations hold for arbitrary complex parameters") {
    const std::vector<cplx> fixed_probes{cplx(0.0), cplx(1.0), cplx(2.5)};
    CHECK(commutator_defect({1.0, 0.0}, CommutatorPair::j0_jp, fixed_probes) <= 1e-12);
    CHECK(commutator_defect({cplx(5.0), cplx(-5.0)}, CommutatorPair::j0_jm,
                            std::vector<cplx>{cplx(-3.0), cplx(7.0)}) <= 1e-12);

    std::mt19937_64 rng(22);
    for (int i = 0; i < 50; ++i) {
        GeneratorParams p{testsup::crand(rng), testsup::crand(rng)};
        std::vector<cplx> probes{testsup::crand(rng), testsup::crand(rng), testsup::crand(rng)};
        for (auto pair : {CommutatorPair::j0_jp, CommutatorPair::j0_jm, CommutatorPair::jp_jm}) {
            double scale = 1.0;
            for (const auto& q : probes) scale = std::max(scale, std::norm(q) + 1.0);
            CHECK(commutator_defect(p, pair, probes) <= 1e-12 * scale);
        }
    }
    REQUIRE_THROWS_AS(commutator_defect({0.0, 0.0}, CommutatorPair::jp_jm, std::vector<cplx>{}),
                      input_error);
}

TEST_CASE("Casimir closed form and operator form coincide") {
    CHECK(std::abs(casimir_value({cplx(0.4, 1.7), cplx(0.4, 1.7)})) == 0.0);
    CHECK(std::abs(casimir_value({1.0, 0.0}) - cplx(-2.0)) == 0.0);
    for (int n = 0; n <= 6; ++n) {
        const cplx tau(0.37, -0.2);
        const cplx sigma = tau + 0.5 * n;
        const double dim = n + 1.0;
        CHECK(std::abs(casimir_value({sigma, tau}) - (1.0 - dim * dim) / 4.0) < 1e-14);
    }

    std::mt19937_64 rng(23);
    for (int i = 0; i < 50; ++i) {
        GeneratorParams p{testsup::crand(rng), testsup::crand(rng)};
        const cplx q = testsup::crand(rng);
        auto x = GeneralizedPolynomial::monomial(q);
        auto lhs = apply_casimir(p, x);
        auto rhs = x;
        rhs *= casimir_value(p);
        const double scale = 1.0 + std::abs(casimir_value(p));
        CHECK(sub(lhs, rhs).max_abs_coeff() <= 1e-12 * scale);
    }
}

TEST_CASE("ansatz constants rebuild the operator action") {
    std::mt19937_64 rng(24);
    for (int i = 0; i < 40; ++i) {
        GenericCoefficients c;
        switch (i % 4) {
            case 0: c = to_generic(testsup::ghe_random(rng)); break;
            case 1: c = to_generic(testsup::che_random(rng)); break;
            case 2: c = to_generic(testsup::bhe_random(rng)); break;
            default: c = to_generic(testsup::dhe_random(rng)); break;
        }
        const auto alg = algebraize(c);
        REQUIRE(alg.algebraizable());
        for (const auto& pair : alg.pairs) {
            GeneratorParams gp{pair.sigma, pair.tau};
            for (int probe = 0; probe < 3; ++probe) {
                const cplx q = testsup::crand(rng);
                auto x = GeneralizedPolynomial::monomial(q);
                auto via_ansatz = apply_ansatz(pair.cc, gp, x);
                auto direct = apply_heun_operator(c, x);
                double scale = 1.0;
                for (const auto& ai : c.a) scale = std::max(scale, std::abs(ai));
                scale *= (1.0 + std::norm(q) + std::norm(pair.sigma) + std::norm(pair.tau));
                CHECK(sub(via_ansatz, direct).max_abs_coeff() <= 1e-11 * scale);
            }
        }
    }

    // THE: tau is pinned to zero and c_{--} = a3 carries the second derivative
    auto c = to_generic(TriconfluentHeunParams{2.0, 1.0, 0.7});
    auto alg = algebraize(c);
    REQUIRE(alg.pairs.size() == 1);
    CHECK(std::abs(alg.pairs[0].cc.cmm - c.a[3]) == 0.0);
    GeneratorParams gp{alg.pairs[0].sigma, alg.pairs[0].tau};
    auto x = GeneralizedPolynomial::monomial(cplx(1.6, -0.4));
    CHECK(sub(apply_ansatz(alg.pairs[0].cc, gp, x), apply_heun_operator(c, x)).max_abs_coeff() <
          1e-11);
}
