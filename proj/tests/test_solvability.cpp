#include <catch2/catch_amalgamated.hpp>

#include <set>

#include "support.hpp"

using namespace heun;

namespace {
// (2 tau rounded to a lattice key, N) fingerprints for agreement checks
std::set<std::pair<long long, int>> instance_keys(const std::vector<QesInstance>& v) {
    std::set<std::pair<long long, int>> keys;
    for (const auto& inst : v)
        keys.insert({std::llround(inst.tau.real() * 2.0e6) +
                         1000000007LL * std::llround(inst.tau.imag() * 2.0e6),
                     inst.n});
    return keys;
}
std::set<std::pair<long long, int>> condition_keys(const ConditionReport& rep) {
    std::set<std::pair<long long, int>> keys;
    for (const auto& e : rep.entries)
        if (e.fires)
            keys.insert({std::llround(e.tau.real() * 2.0e6) +
                             1000000007LL * std::llround(e.tau.imag() * 2.0e6),
                         e.n});
    return keys;
}
}  // namespace

TEST_CASE("GHE with alpha = -2 is quasi-exact at level 2") {
    auto p = GeneralHeunParams::make(0.37, 0.71, -2.0, 2.6, 0.4, 3.3);
    auto c = to_generic(p);
    auto rep = classify_solvability(c, algebraize(c));
    REQUIRE(rep.mode == SolvabilityMode::quasi_exact);
    REQUIRE(rep.instances.size() == 1);
    CHECK(rep.instances[0].n == 2);
    CHECK(std::abs(rep.instances[0].sigma - cplx(1.0)) < 1e-12);
    CHECK(std::abs(rep.instances[0].tau) < 1e-12);
}

TEST_CASE("CHE with kappa = mu + nu = 0 is exactly solvable with free sigma") {
    auto c = to_generic(ConfluentHeunParams{0.0, 0.5, 0.9, 0.7, -0.7});
    auto rep = classify_solvability(c, algebraize(c));
    REQUIRE(rep.mode == SolvabilityMode::exact_sigma_free);
    REQUIRE(rep.fixed_taus.size() == 2);

    // enumerate: the tau = (1-gamma)/2 branch gives sigma in {1/4, 3/4, 5/4}
    auto levels = enumerate_qes_levels(rep, 2);
    std::vector<double> sigmas;
    for (const auto& inst : levels)
        if (std::abs(inst.tau - cplx(0.25)) < 1e-12) sigmas.push_back(inst.sigma.real());
    std::sort(sigmas.begin(), sigmas.end());
    REQUIRE(sigmas.size() == 3);
    CHECK(sigmas[0] == Catch::Approx(0.25));
    CHECK(sigmas[1] == Catch::Approx(0.75));
    CHECK(sigmas[2] == Catch::Approx(1.25));
}

TEST_CASE("fully diagonal DHE admits every monomial") {
    auto c = to_generic(DoublyConfluentHeunParams{0.0, 0.0, 0.0, 0.55, 0.0});
    auto rep = classify_solvability(c, algebraize(c));
    REQUIRE(rep.mode == SolvabilityMode::fully_diagonal);
    auto levels = enumerate_qes_levels(rep, 5, cplx(0.3, 0.4));
    REQUIRE(levels.size() == 1);
    CHECK(levels[0].n == 0);
    CHECK(levels[0].tau == cplx(0.3, 0.4));
}

TEST_CASE("BHE at gamma - alpha - 2 = 4 hosts the N = 2 polynomial level") {
    BiconfluentHeunParams p{0.3, 1.1, 4.3 + 2.0, 0.8};  // gamma = alpha + 6
    auto c = to_generic(p);
    auto rep = classify_solvability(c, algebraize(c));
    REQUIRE(rep.mode == SolvabilityMode::quasi_exact);
    bool found = false;
    for (const auto& inst : rep.instances)
        if (inst.n == 2 && std::abs(inst.sigma - cplx(1.0)) < 1e-12 && std::abs(inst.tau) < 1e-12)
            found = true;
    CHECK(found);
}

TEST_CASE("exact tau-free enumeration at Nmax = 0 collapses to tau = sigma") {
    auto c = to_generic(DoublyConfluentHeunParams{2.0, 0.0, 0.6, 0.1, 0.0});
    auto rep = classify_solvability(c, algebraize(c));
    REQUIRE(rep.mode == SolvabilityMode::exact_tau_free);
    auto levels = enumerate_qes_levels(rep, 0);
    REQUIRE(levels.size() == 1);
    CHECK(levels[0].n == 0);
    CHECK(std::abs(levels[0].tau - levels[0].sigma) < 1e-14);
    CHECK(std::abs(levels[0].sigma - (-(0.6 / (2.0 * 2.0) + 0.25))) < 1e-14);
}

TEST_CASE("closed-form condition reports") {
    // second GHE route alpha = gamma-1-N with gamma = 3, N = 2 means alpha = 0
    auto rep = solvability_conditions(GeneralHeunParams::make(3.0, 0.7, 0.0, 2.7, 0.1, 2.5));
    bool fired = false;
    for (const auto& e : rep.entries)
        if (e.fires && e.label == "alpha = gamma-1-N") {
            fired = true;
            CHECK(e.n == 2);
        }
    CHECK(fired);

    auto the = solvability_conditions(TriconfluentHeunParams{1.0, 2.0, 3.0});
    REQUIRE(the.mode == SolvabilityMode::quasi_exact);
    REQUIRE(the.entries.size() == 1);
    CHECK(the.entries[0].n == 0);
    CHECK(the.entries[0].label.find("singlet") != std::string::npos);

    auto che = solvability_conditions(ConfluentHeunParams{2.0, 1.0, 0.4, -1.0, -3.0});
    bool che_fired = false;
    for (const auto& e : che.entries)
        if (e.fires) {
            che_fired = true;
            CHECK(e.n == 2);  // -(mu+nu)/kappa = 2
        }
    CHECK(che_fired);
}

TEST_CASE("conditions and classification agree on engineered and generic draws") {
    std::mt19937_64 rng(41);
    for (int i = 0; i < 300; ++i) {
        const int family = i % 5;
        const bool engineer = (i % 2) == 0;
        const int n = static_cast<int>(testsup::urand(rng, 0.0, 6.99));
        testsup::Level lvl{};
        switch (family) {
            case 0: {
                auto p = engineer ? testsup::ghe_qes(rng, n, i % 4, lvl) : testsup::ghe_random(rng);
                auto c = to_generic(p);
                auto cls = classify_solvability(c, algebraize(c));
                CHECK(instance_keys(cls.instances) == condition_keys(solvability_conditions(p)));
                break;
            }
            case 1: {
                auto p = engineer ? testsup::che_qes(rng, n, i % 2, lvl) : testsup::che_random(rng);
                auto c = to_generic(p);
                auto cls = classify_solvability(c, algebraize(c));
                CHECK(instance_keys(cls.instances) == condition_keys(solvability_conditions(p)));
                break;
            }
            case 2: {
                auto p = engineer ? testsup::bhe_qes(rng, n, i % 2, lvl) : testsup::bhe_random(rng);
                auto c = to_generic(p);
                auto cls = classify_solvability(c, algebraize(c));
                CHECK(instance_keys(cls.instances) == condition_keys(solvability_conditions(p)));
                break;
            }
            case 3: {
                auto p = engineer ? testsup::dhe_qes(rng, n, lvl) : testsup::dhe_random(rng);
                auto c = to_generic(p);
                auto cls = classify_solvability(c, algebraize(c));
                CHECK(instance_keys(cls.instances) == condition_keys(solvability_conditions(p)));
                break;
            }
            default: {
                auto p = testsup::the_random(rng);
                auto c = to_generic(p);
                auto cls = classify_solvability(c, algebraize(c));
                CHECK(instance_keys(cls.instances) == condition_keys(solvability_conditions(p)));
                break;
            }
        }
    }
}

TEST_CASE("GHE and BHE never report an exact mode; THE is always the singlet") {
    std::mt19937_64 rng(42);
    for (int i = 0; i < 100; ++i) {
        auto g = to_generic(testsup::ghe_random(rng));
        auto gm = classify_solvability(g, algebraize(g)).mode;
        CHECK((gm == SolvabilityMode::quasi_exact || gm == SolvabilityMode::not_solvable));
        auto b = to_generic(testsup::bhe_random(rng));
        auto bm = classify_solvability(b, algebraize(b)).mode;
        CHECK((bm == SolvabilityMode::quasi_exact || bm == SolvabilityMode::not_solvable));
        auto t = to_generic(testsup::the_random(rng));
        auto tr = classify_solvability(t, algebraize(t));
        REQUIRE(tr.mode == SolvabilityMode::quasi_exact);
        REQUIRE(tr.instances.size() == 1);
        CHECK(tr.instances[0].n == 0);
    }
}

TEST_CASE("every emitted instance satisfies the level and root identities") {
    std::mt19937_64 rng(43);
    for (int i = 0; i < 100; ++i) {
        testsup::Level lvl{};
        auto p = testsup::ghe_qes(rng, 1 + (i % 5), i % 4, lvl);
        auto c = to_generic(p);
        auto rep = classify_solvability(c, algebraize(c));
        for (const auto& inst : rep.instances) {
            CHECK(nonnegative_integer_near(2.0 * (inst.sigma - inst.tau)) == inst.n);
            CHECK(sigma_identity_defect(c, inst.sigma) <= 1e-9);
            CHECK(tau_identity_defect(c, inst.tau) <= 1e-9);
        }
    }
    // classification requires algebraizability
    auto blocked = to_generic(ConfluentHeunParams{0.0, 1.0, 1.0, 0.4, 0.6});
    REQUIRE_THROWS_AS(classify_solvability(blocked, algebraize(blocked)), input_error);
}
