#include <doctest.h>

#include <vector>

#include "criteria.hpp"
#include "errors.hpp"
#include "oracles.hpp"

using namespace polyadic;
using polyadic_test::make_rng;
using polyadic_test::rand_long;
using polyadic_test::random_permutational;
using polyadic_test::random_poly;

namespace {

IntPolynomial poly(std::vector<long> coeffs) {
    std::vector<Int> c(coeffs.begin(), coeffs.end());
    return IntPolynomial(c);
}

const Condition& find_condition(const CriteriaReport& r, const char* label) {
    for (const auto& c : r.conditions)
        if (c.label == label)
            return c;
    REQUIRE(false);
    throw std::logic_error("unreachable");
}

} // namespace

TEST_CASE("permutational criterion worked examples") {
    auto rc6 = is_permutational_2adic(poly({0, 1, 2}));
    CHECK(rc6.kind == "permutational-2adic");
    CHECK(rc6.verdict);
    REQUIRE(rc6.conditions.size() == 3);
    CHECK(rc6.conditions[0].label == "rivest.i");
    CHECK(rc6.conditions[1].label == "rivest.ii");
    CHECK(rc6.conditions[2].label == "rivest.iii");
    for (const auto& c : rc6.conditions) CHECK(c.holds);
    REQUIRE(rc6.profile.has_value());
    CHECK(rc6.profile->k == 0);
    CHECK(rc6.profile->m == 1);
    CHECK(rc6.profile->n == 0);

    auto square = is_permutational_2adic(poly({0, 0, 1}));
    CHECK_FALSE(square.verdict);
    CHECK_FALSE(find_condition(square, "rivest.i").holds);
    CHECK(find_condition(square, "rivest.i").lhs == 0);
    CHECK(find_condition(square, "rivest.i").rhs == 1);
    CHECK_FALSE(square.profile.has_value());

    CHECK(is_permutational_2adic(poly({1, 3, 2})).verdict);

    // Residues are reduced into [0, modulus).
    auto negative = is_permutational_2adic(poly({0, -3, 0, -2}));
    CHECK(find_condition(negative, "rivest.i").lhs == 1);
    CHECK(find_condition(negative, "rivest.iii").lhs == 0);
    CHECK(negative.verdict);
}

TEST_CASE("ergodicity criterion worked examples") {
    auto tau = is_ergodic_2adic(poly({1, 1}));
    CHECK(tau.kind == "ergodic-2adic");
    CHECK(tau.verdict);
    REQUIRE(tau.conditions.size() == 6);
    for (const auto& c : tau.conditions) CHECK(c.holds);

    auto rc6 = is_ergodic_2adic(poly({0, 1, 2}));
    CHECK_FALSE(rc6.verdict);
    CHECK(find_condition(rc6, "rivest.i").holds);
    CHECK(find_condition(rc6, "rivest.ii").holds);
    CHECK(find_condition(rc6, "rivest.iii").holds);
    // Constant term even: the parity condition fails.
    CHECK_FALSE(find_condition(rc6, "main.i").holds);
    CHECK(find_condition(rc6, "main.i").lhs == 0);
    // 2*a_2 = 4 = 0 (mod 4) matches the empty odd tail.
    CHECK(find_condition(rc6, "main.ii").holds);
    // a_2 + a_1 - 1 = 2 but the even tail is empty: also fails.
    CHECK_FALSE(find_condition(rc6, "main.iii").holds);
    CHECK(find_condition(rc6, "main.iii").lhs == 2);
    CHECK(find_condition(rc6, "main.iii").rhs == 0);
    REQUIRE(rc6.profile.has_value()); // bijective even though not ergodic

    auto g = is_ergodic_2adic(poly({1, 3, 2}));
    CHECK(g.verdict);
    CHECK(find_condition(g, "main.ii").lhs == 0);  // 2*2 mod 4
    CHECK(find_condition(g, "main.iii").lhs == 0); // 2+3-1 mod 4

    auto even_a1 = is_ergodic_2adic(poly({1, 2}));
    CHECK_FALSE(even_a1.verdict);
    CHECK_FALSE(find_condition(even_a1, "rivest.i").holds);
}

TEST_CASE("criteria are modulus-only: shifted coefficients do not matter") {
    auto rng = make_rng(0x5eed0301);
    for (int iter = 0; iter < 200; ++iter) {
        auto f = random_poly(rng, 5, -8, 8);
        std::vector<Int> shifted = f.coefficients();
        std::size_t i = static_cast<std::size_t>(
            rand_long(rng, 0, static_cast<long>(shifted.size()) - 1));
        shifted[i] += 4 * Int(rand_long(rng, -3, 3));
        IntPolynomial g{shifted};
        if (g.degree() != f.degree())
            continue; // leading coefficient cancelled; different shape
        CHECK(is_ergodic_2adic(f).verdict == is_ergodic_2adic(g).verdict);
    }
}

TEST_CASE("larin form is equivalent to the six-congruence form") {
    auto rng = make_rng(0x5eed0302);
    for (int iter = 0; iter < 500; ++iter) {
        auto f = random_poly(rng, 6, -10, 10);
        auto a = is_ergodic_2adic(f);
        auto b = is_ergodic_larin(f);
        CHECK(a.verdict == b.verdict);
        CHECK(b.kind == "ergodic-2adic");
        CHECK(b.conditions.size() == 4);
    }
    // Exhaustive over a small cube as well.
    for (long a0 = -2; a0 <= 2; ++a0)
        for (long a1 = -2; a1 <= 2; ++a1)
            for (long a2 = -2; a2 <= 2; ++a2)
                for (long a3 = -2; a3 <= 2; ++a3) {
                    auto f = poly({a0, a1, a2, a3});
                    CHECK(is_ergodic_2adic(f).verdict ==
                          is_ergodic_larin(f).verdict);
                }
}

TEST_CASE("linear transitivity criterion") {
    CHECK(is_level_transitive_linear(poly({1, 5})).verdict);
    CHECK(is_level_transitive_linear(poly({1, 1})).verdict);

    auto bad_a = is_level_transitive_linear(poly({1, 3}));
    CHECK_FALSE(bad_a.verdict);
    CHECK(bad_a.kind == "linear-transitive");
    CHECK(find_condition(bad_a, "linear.i").holds);
    CHECK_FALSE(find_condition(bad_a, "linear.ii").holds);
    CHECK(find_condition(bad_a, "linear.ii").lhs == 3);
    CHECK(find_condition(bad_a, "linear.ii").rhs == 1);

    auto bad_b = is_level_transitive_linear(poly({2, 1}));
    CHECK_FALSE(bad_b.verdict);
    CHECK_FALSE(find_condition(bad_b, "linear.i").holds);

    CHECK_THROWS_AS(is_level_transitive_linear(poly({0, 1, 2})),
                    NonLinearError);

    auto rng = make_rng(0x5eed0303);
    for (int iter = 0; iter < 300; ++iter) {
        IntPolynomial f(std::vector<Int>{Int(rand_long(rng, -20, 20)),
                                         Int(rand_long(rng, -20, 20))});
        CHECK(is_level_transitive_linear(f).verdict ==
              is_ergodic_2adic(f).verdict);
    }
}

TEST_CASE("closed-form criteria are base-2 only") {
    CHECK_THROWS_AS(is_permutational_2adic(poly({1, 1}), Base(3)), DomainError);
    CHECK_THROWS_AS(is_ergodic_2adic(poly({1, 1}), Base(3)), DomainError);
    CHECK_THROWS_AS(is_ergodic_larin(poly({1, 1}), Base(5)), DomainError);
    CHECK_THROWS_AS(is_level_transitive_linear(poly({1, 1}), Base(4)),
                    DomainError);
}

TEST_CASE("brute-force oracles: worked examples") {
    CHECK(brute_force_permutation(poly({0, 1, 2}), Base(2), 8));
    CHECK(brute_force_permutation(poly({0, 0, 1}), Base(2), 1)); // squares mod 2
    CHECK_FALSE(brute_force_permutation(poly({0, 0, 1}), Base(2), 2));
    CHECK(brute_force_permutation(poly({0, 1}), Base(3), 4));

    CHECK(brute_force_transitive(poly({1, 1}), Base(2), 10));
    CHECK_FALSE(brute_force_transitive(poly({0, 1, 2}), Base(2), 1));
    CHECK(brute_force_transitive(poly({1, 3, 2}), Base(2), 2));
    CHECK_FALSE(brute_force_transitive(poly({0, 1}), Base(2), 1));

    CHECK_THROWS_AS(brute_force_permutation(poly({1, 1}), Base(2), 0),
                    DomainError);
    CHECK_THROWS_AS(brute_force_permutation(poly({1, 1}), Base(2), 25),
                    LimitError);
}

TEST_CASE("brute-force oracles agree with the big-integer level machinery") {
    auto rng = make_rng(0x5eed0304);
    for (int iter = 0; iter < 60; ++iter) {
        auto f = random_poly(rng, 5, -9, 9);
        Base d(static_cast<std::uint64_t>(rand_long(rng, 2, 3)));
        unsigned n = static_cast<unsigned>(rand_long(rng, 1, 6));

        auto images = level_map(f, d, n).images;
        std::vector<bool> seen(images.size(), false);
        bool bijective = true;
        for (auto u : images) {
            if (seen[u]) bijective = false;
            seen[u] = true;
        }
        CHECK(brute_force_permutation(f, d, n) == bijective);

        auto o = orbit(f, d, n, 0);
        bool single_cycle =
            o.cycle_start == 0 && o.points.size() == images.size();
        CHECK(brute_force_transitive(f, d, n) == single_cycle);
    }
}

TEST_CASE("consistency verifier on the worked examples") {
    auto good = verify_consistency(poly({1, 3, 2}), 10);
    CHECK(good.agree);
    CHECK(good.levels_checked == 10);
    CHECK(good.permutational.verdict);
    CHECK(good.ergodic.verdict);
    REQUIRE(good.bijective_up_to.size() == 10);
    REQUIRE(good.single_cycle_up_to.size() == 10);
    REQUIRE(good.switch_parity_up_to.size() == 10);
    for (unsigned n = 0; n < 10; ++n) {
        CHECK(good.bijective_up_to[n]);
        CHECK(good.single_cycle_up_to[n]);
        CHECK(good.switch_parity_up_to[n]);
    }

    auto rc6 = verify_consistency(poly({0, 1, 2}), 10);
    CHECK(rc6.agree);
    CHECK(rc6.permutational.verdict);
    CHECK_FALSE(rc6.ergodic.verdict);
    for (unsigned n = 0; n < 10; ++n) {
        CHECK(rc6.bijective_up_to[n]);
        CHECK_FALSE(rc6.single_cycle_up_to[n]);
        CHECK_FALSE(rc6.switch_parity_up_to[n]);
    }

    auto linear = verify_consistency(poly({1, 3}), 10);
    CHECK(linear.agree);
    CHECK(linear.permutational.verdict);
    CHECK_FALSE(linear.ergodic.verdict);
    CHECK(linear.single_cycle_up_to[0]); // transitive on the first level only
    for (unsigned n = 1; n < 10; ++n)
        CHECK_FALSE(linear.single_cycle_up_to[n]);

    // Not bijective: no switch-parity column at all.
    auto square = verify_consistency(poly({0, 0, 1}), 6);
    CHECK(square.agree);
    CHECK(square.switch_parity_up_to.empty());
    CHECK_FALSE(square.bijective_up_to[1]);
}

TEST_CASE("consistency verifier agrees on random polynomials") {
    auto rng = make_rng(0x5eed0305);
    for (int iter = 0; iter < 40; ++iter) {
        auto f = random_poly(rng, 5, -8, 8);
        CHECK(verify_consistency(f, 8).agree);
    }
}

TEST_CASE("sections of bijective actions act bijectively") {
    auto rng = make_rng(0x5eed0306);
    for (int iter = 0; iter < 50; ++iter) {
        auto f = random_permutational(rng, 5, -8, 8);
        REQUIRE(is_permutational_2adic(f).verdict);
        auto p = portrait(f, Base(2), 5);
        for (const auto& node : p.nodes)
            CHECK(is_permutational_2adic(node.section).verdict);
    }
}

TEST_CASE("odd translations act with a single cycle on every level") {
    for (long r = 1; r <= 15; r += 2) {
        auto report = is_ergodic_2adic(poly({r, 1}));
        CHECK(report.verdict);
        for (unsigned n = 1; n <= 8; ++n)
            CHECK(brute_force_transitive(poly({r, 1}), Base(2), n));
    }
}

TEST_CASE("small exhaustive census: criteria match the oracles") {
    for (long a0 = -2; a0 <= 2; ++a0)
        for (long a1 = -2; a1 <= 2; ++a1)
            for (long a2 = -2; a2 <= 2; ++a2)
                for (long a3 = -2; a3 <= 2; ++a3) {
                    auto f = poly({a0, a1, a2, a3});
                    bool bij = true, cyc = true;
                    for (unsigned n = 1; n <= 6; ++n) {
                        bij = bij && brute_force_permutation(f, Base(2), n);
                        cyc = cyc && brute_force_transitive(f, Base(2), n);
                    }
                    CHECK(is_permutational_2adic(f).verdict == bij);
                    CHECK(is_ergodic_2adic(f).verdict == cyc);
                }
}
