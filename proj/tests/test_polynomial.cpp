#include <doctest.h>

#include <vector>

#include "errors.hpp"
#include "oracles.hpp"
#include "polynomial.hpp"

using namespace polyadic;
using polyadic_test::evaluate_by_powers;
using polyadic_test::make_rng;
using polyadic_test::rand_long;
using polyadic_test::random_permutational;
using polyadic_test::random_poly;
using polyadic_test::taylor_by_binomial;

namespace {

IntPolynomial poly(std::vector<long> coeffs) {
    std::vector<Int> c(coeffs.begin(), coeffs.end());
    return IntPolynomial(c);
}

} // namespace

TEST_CASE("parsing: expression form") {
    CHECK(IntPolynomial::parse("2*x^2+x") == poly({0, 1, 2}));
    CHECK(IntPolynomial::parse("x+1") == poly({1, 1}));
    CHECK(IntPolynomial::parse("-x^3+4") == poly({4, 0, 0, -1}));
    CHECK(IntPolynomial::parse("2x^2") == poly({0, 0, 2}));
    CHECK(IntPolynomial::parse(" 2 * x ^ 2 + 3 * x + 1 ") == poly({1, 3, 2}));
    CHECK(IntPolynomial::parse("x") == poly({0, 1}));
    CHECK(IntPolynomial::parse("-x") == poly({0, -1}));
    CHECK(IntPolynomial::parse("0") == poly({0}));
    CHECK(IntPolynomial::parse("7") == poly({7}));
    CHECK(IntPolynomial::parse("x + x") == poly({0, 2}));
    CHECK(IntPolynomial::parse("x^2 - x^2") == poly({0}));
    CHECK(IntPolynomial::parse("3-x") == poly({3, -1}));
    CHECK(IntPolynomial::parse("x^1") == poly({0, 1}));
    CHECK(IntPolynomial::parse("+x") == poly({0, 1}));
}

TEST_CASE("parsing: coefficient-list form") {
    CHECK(IntPolynomial::parse("coeffs:1,3,2") == poly({1, 3, 2}));
    CHECK(IntPolynomial::parse("coeffs: 0, -1, 2") == poly({0, -1, 2}));
    CHECK(IntPolynomial::parse("coeffs:5") == poly({5}));
    CHECK(IntPolynomial::parse("coeffs:1,0,0") == poly({1}));
    // Arbitrary precision straight through the parser.
    auto big = IntPolynomial::parse("coeffs:123456789012345678901234567890,1");
    CHECK(big.coefficient(0) == Int("123456789012345678901234567890"));
}

TEST_CASE("parsing: errors carry the byte offset") {
    CHECK_THROWS_AS(IntPolynomial::parse(""), ParseError);
    CHECK_THROWS_AS(IntPolynomial::parse("2**x"), ParseError);
    CHECK_THROWS_AS(IntPolynomial::parse("x^"), ParseError);
    CHECK_THROWS_AS(IntPolynomial::parse("1+"), ParseError);
    CHECK_THROWS_AS(IntPolynomial::parse("y+1"), ParseError);
    CHECK_THROWS_AS(IntPolynomial::parse("coeffs:"), ParseError);
    CHECK_THROWS_AS(IntPolynomial::parse("coeffs:1,,2"), ParseError);
    CHECK_THROWS_AS(IntPolynomial::parse("coeffs:1,a"), ParseError);
    CHECK_THROWS_AS(IntPolynomial::parse("x^99999999"), ParseError);

    try {
        IntPolynomial::parse("y+1");
        CHECK(false);
    } catch (const ParseError& e) {
        CHECK(e.position() == 0);
    }
    try {
        IntPolynomial::parse("2*x^2 $ 3");
        CHECK(false);
    } catch (const ParseError& e) {
        CHECK(e.position() == 6);
    }
}

TEST_CASE("normalization and accessors") {
    IntPolynomial f(std::vector<Int>{Int(1), Int(3), Int(2), Int(0), Int(0)});
    CHECK(f.degree() == 2);
    CHECK(f == poly({1, 3, 2}));
    CHECK(f.coefficient(0) == 1);
    CHECK(f.coefficient(2) == 2);
    CHECK(f.coefficient(3) == 0);
    CHECK(f.coefficient(100) == 0);

    IntPolynomial zero(std::vector<Int>{});
    CHECK(zero.is_zero());
    CHECK(zero.is_constant());
    CHECK(zero.degree() == 0);
    CHECK(zero.coefficients() == std::vector<Int>{Int(0)});

    CHECK(IntPolynomial().is_zero());
    CHECK(poly({0, 0, 0}).is_zero());
    CHECK(poly({5}).is_constant());
    CHECK_FALSE(poly({5, 1}).is_constant());
}

TEST_CASE("rendering is canonical and parses back") {
    CHECK(poly({1, 3, 2}).render() == "2*x^2 + 3*x + 1");
    CHECK(poly({0, 1, 2}).render() == "2*x^2 + x");
    CHECK(poly({4, 0, 0, -1}).render() == "-x^3 + 4");
    CHECK(poly({0}).render() == "0");
    CHECK(poly({5}).render() == "5");
    CHECK(poly({-5}).render() == "-5");
    CHECK(poly({0, 1}).render() == "x");
    CHECK(poly({0, -1}).render() == "-x");
    CHECK(poly({1, 1}).render() == "x + 1");
    CHECK(poly({-3, 2}).render() == "2*x - 3");
    CHECK(poly({0, 0, -2}).render() == "-2*x^2");
    CHECK(poly({0, -1, 0, 1}).render() == "x^3 - x");

    auto rng = make_rng(0x5eed0101);
    for (int iter = 0; iter < 500; ++iter) {
        auto f = random_poly(rng, 6, -50, 50);
        CHECK(IntPolynomial::parse(f.render()) == f);
    }
}

TEST_CASE("evaluation agrees with explicit powers") {
    CHECK(poly({1, 3, 2}).evaluate(Int(2)) == 15);
    CHECK(poly({1, 3, 2}).evaluate(Int(0)) == 1);
    CHECK(poly({1, 3, 2}).evaluate(Int(-1)) == 0);
    CHECK(poly({0, 1, 2}).evaluate(Int(1)) == 3);

    auto rng = make_rng(0x5eed0102);
    for (int iter = 0; iter < 300; ++iter) {
        auto f = random_poly(rng, 6, -20, 20);
        Int x(rand_long(rng, -100, 100));
        CHECK(f.evaluate(x) == evaluate_by_powers(f, x));
    }
}

TEST_CASE("taylor shift worked examples") {
    auto c = poly({1, 3, 2}).taylor_coefficients(Int(1));
    CHECK(c == std::vector<Int>{Int(6), Int(7), Int(2)});
    CHECK(poly({1, 3, 2}).taylor_coefficients(Int(0)) ==
          poly({1, 3, 2}).coefficients());
    CHECK(poly({0, 0, 0, 1}).taylor_coefficients(Int(1)) ==
          std::vector<Int>{Int(1), Int(3), Int(3), Int(1)});
    CHECK(poly({7}).taylor_coefficients(Int(42)) == std::vector<Int>{Int(7)});
}

TEST_CASE("taylor shift agrees with the binomial expansion") {
    auto rng = make_rng(0x5eed0103);
    for (int iter = 0; iter < 500; ++iter) {
        auto f = random_poly(rng, 6, -8, 8);
        Int x0(rand_long(rng, -5, 5));
        CHECK(f.taylor_coefficients(x0) == taylor_by_binomial(f, x0));
    }
}

TEST_CASE("taylor shift evaluates the shifted polynomial") {
    auto rng = make_rng(0x5eed0104);
    for (int iter = 0; iter < 300; ++iter) {
        auto f = random_poly(rng, 6, -8, 8);
        Int x0(rand_long(rng, -5, 5));
        Int y(rand_long(rng, -5, 5));
        IntPolynomial shifted(f.taylor_coefficients(x0));
        CHECK(shifted.evaluate(y) == f.evaluate(Int(x0 + y)));
    }
}

TEST_CASE("composition: worked examples and order convention") {
    // second(first(x)): the first argument acts first.
    CHECK(compose(poly({1, 1}), poly({0, 3})) == poly({3, 3}));
    CHECK(compose(poly({0, 3}), poly({1, 1})) == poly({1, 3}));
    CHECK(compose(poly({0, 1, 1}), poly({0, 1, 1})) == poly({0, 1, 2, 2, 1}));
    // Constants compose like constant functions.
    CHECK(compose(poly({5}), poly({1, 3, 2})) == poly({66}));
    CHECK(compose(poly({1, 3, 2}), poly({5})) == poly({5}));
}

TEST_CASE("composition: monoid laws and evaluation oracle") {
    auto rng = make_rng(0x5eed0105);
    IntPolynomial id = poly({0, 1});
    for (int iter = 0; iter < 200; ++iter) {
        auto f = random_poly(rng, 3, -6, 6);
        auto g = random_poly(rng, 3, -6, 6);
        auto h = random_poly(rng, 2, -6, 6);

        CHECK(compose(f, id) == f);
        CHECK(compose(id, f) == f);
        CHECK(compose(compose(f, g), h) == compose(f, compose(g, h)));

        Int x(rand_long(rng, -10, 10));
        CHECK(compose(f, g).evaluate(x) == g.evaluate(f.evaluate(x)));

        if (f.degree() >= 1 && g.degree() >= 1)
            CHECK(compose(f, g).degree() == f.degree() * g.degree());
    }
}

TEST_CASE("profile: worked examples") {
    auto p1 = poly({1, 3, 2}).profile();
    CHECK(p1.k == 1);
    CHECK(p1.m == 1);
    CHECK(p1.n == 0);

    auto p2 = poly({0, 1, 2}).profile();
    CHECK(p2.k == 0);
    CHECK(p2.m == 1);
    CHECK(p2.n == 0);

    auto p3 = poly({1, 1}).profile();
    CHECK(p3.k == 0);
    CHECK(p3.m == 0);
    CHECK(p3.n == 0);

    // a_1 = 3, evens 2 + 4 = 6, odds 6 -> k=1, m=3, n=3.
    auto p4 = poly({9, 3, 2, 6, 4}).profile();
    CHECK(p4.k == 1);
    CHECK(p4.m == 3);
    CHECK(p4.n == 3);

    CHECK_THROWS_AS(poly({0, 0, 1}).profile(), NotPermutationalError);
    CHECK_THROWS_AS(poly({0, 1, 1}).profile(), NotPermutationalError);
    CHECK_THROWS_AS(poly({0, 1, 0, 1}).profile(), NotPermutationalError);
    CHECK_THROWS_AS(poly({5}).profile(), NotPermutationalError);
}

TEST_CASE("profile identities pin down the coefficients") {
    auto rng = make_rng(0x5eed0106);
    for (int iter = 0; iter < 300; ++iter) {
        auto f = random_permutational(rng, 6, -8, 8);
        auto pr = f.profile();
        CHECK(f.coefficient(1) == 2 * pr.k + 1);
        Int evens = 0, odds = 0;
        for (std::size_t i = 2; i <= f.degree(); ++i)
            (i % 2 == 0 ? evens : odds) += f.coefficient(i);
        CHECK(evens == 2 * pr.m);
        CHECK(odds == 2 * pr.n);
    }
}

TEST_CASE("bijective-action polynomials are closed under composition") {
    auto rng = make_rng(0x5eed0107);
    for (int iter = 0; iter < 200; ++iter) {
        auto f = random_permutational(rng, 4, -8, 8);
        auto g = random_permutational(rng, 4, -8, 8);
        CHECK_NOTHROW(compose(f, g).profile());
        CHECK_NOTHROW(compose(g, f).profile());
    }
}
