#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <random>

#include "skmaass/quadext.hpp"
#include "skmaass/rational.hpp"
#include "skmaass/series.hpp"

using namespace skmaass;

namespace {

Rational rnd_rational(std::mt19937_64& rng, bool nonzero = false) {
    std::uniform_int_distribution<long> num(-20, 20);
    std::uniform_int_distribution<long> den(1, 20);
    for (;;) {
        Rational r(num(rng), den(rng));
        r.canonicalize();
        if (!nonzero || r != 0)
            return r;
    }
}

QuadExt rnd_scalar(std::mt19937_64& rng, long q, bool nonzero = false) {
    for (;;) {
        QuadExt v(q, rnd_rational(rng), rnd_rational(rng));
        if (!nonzero || !v.is_zero())
            return v;
    }
}

} // namespace

TEST_CASE("rational parsing and serialization") {
    CHECK(parse_rational("3/4") == Rational(3, 4));
    CHECK(parse_rational("-6/4") == Rational(-3, 2));
    CHECK(parse_rational("12") == 12);
    CHECK(parse_rational(" +7/7 ") == 1);
    CHECK(rational_str(Rational(-3, 2)) == "-3/2");
    CHECK(rational_str(Rational(5)) == "5/1");
    CHECK_THROWS_AS(parse_rational("1/0"), std::invalid_argument);
    CHECK_THROWS_AS(parse_rational("a"), std::invalid_argument);
    CHECK_THROWS_AS(parse_rational("1/2/3"), std::invalid_argument);
    CHECK_THROWS_AS(parse_rational(""), std::invalid_argument);
}

TEST_CASE("valuation on rationals") {
    CHECK(valuation(Rational(12), 2) == 2);
    CHECK(valuation(Rational(3, 8), 2) == -3);
    CHECK(valuation(Rational(35), 3) == 0);
    CHECK_THROWS_AS(valuation(Rational(0), 2), std::domain_error);

    // additivity over 200 random nonzero pairs
    std::mt19937_64 rng(42);
    for (int i = 0; i < 200; ++i) {
        Rational r = rnd_rational(rng, true);
        Rational s = rnd_rational(rng, true);
        for (long p : {2L, 3L, 5L})
            CHECK(valuation(r * s, p) == valuation(r, p) + valuation(s, p));
    }
}

TEST_CASE("integer helpers") {
    CHECK(is_prime(2));
    CHECK(is_prime(97));
    CHECK_FALSE(is_prime(1));
    CHECK_FALSE(is_prime(91));
    CHECK(factorize(360) ==
          std::vector<std::pair<std::int64_t, int>>{{2, 3}, {3, 2}, {5, 1}});
    CHECK(divisors(12) == std::vector<std::int64_t>{1, 2, 3, 4, 6, 12});
    CHECK(ipow(3, 5) == 243);
    CHECK(qpow(2, -3) == Rational(1, 8));
}

TEST_CASE("quadratic extension field operations") {
    const QuadExt one(2, Rational(1));
    const QuadExt root2 = QuadExt::sqrt_q(2);

    CHECK(one * root2 == root2);
    CHECK(root2 * root2 == QuadExt(2, Rational(2)));

    // 1/(1+sqrt 2) = -1+sqrt 2: conjugate oracle (1+sqrt2)(-1+sqrt2) = 1
    QuadExt v(2, Rational(1), Rational(1));
    QuadExt inv = one / v;
    CHECK(inv == QuadExt(2, Rational(-1), Rational(1)));
    CHECK(v * inv == one);

    CHECK_THROWS_AS(v / QuadExt(2), std::domain_error);
    CHECK_THROWS_AS(QuadExt::sqrt_q(2) + QuadExt::sqrt_q(3), std::invalid_argument);

    // rationals embed into any radicand
    CHECK(QuadExt(2, Rational(5)) == QuadExt(3, Rational(5)));
    CHECK((QuadExt(3, Rational(2)) + root2) == QuadExt(2, Rational(2), Rational(1)));
}

TEST_CASE("field axioms on random samples") {
    std::mt19937_64 rng(7);
    for (int i = 0; i < 60; ++i) {
        QuadExt a = rnd_scalar(rng, 5), b = rnd_scalar(rng, 5), c = rnd_scalar(rng, 5);
        CHECK((a + b) + c == a + (b + c));
        CHECK((a * b) * c == a * (b * c));
        CHECK(a * (b + c) == a * b + a * c);
        QuadExt nz = rnd_scalar(rng, 5, true);
        CHECK(nz * (a / nz) == a);
        CHECK(a - a == QuadExt(5));
    }
}

TEST_CASE("half powers of q") {
    CHECK(QuadExt::half_power(2, 0) == QuadExt(2, Rational(1)));
    CHECK(QuadExt::half_power(2, 2) == QuadExt(2, Rational(2)));
    CHECK(QuadExt::half_power(2, 1) == QuadExt::sqrt_q(2));
    CHECK(QuadExt::half_power(2, 3) == QuadExt(2, Rational(0), Rational(2)));
    CHECK(QuadExt::half_power(2, -1) == QuadExt(2, Rational(0), Rational(1, 2)));
    CHECK(QuadExt::half_power(2, 1) * QuadExt::half_power(2, -1) == QuadExt(2, Rational(1)));
    for (long n = -9; n <= 9; ++n)
        CHECK(QuadExt::half_power(3, n) * QuadExt::half_power(3, -n) == QuadExt(3, Rational(1)));
}

TEST_CASE("scalar string form") {
    CHECK(QuadExt(2, Rational(3, 2)).str() == "3/2");
    CHECK(QuadExt(2, Rational(0), Rational(1)).str() == "1*sqrt(2)");
    CHECK(QuadExt(3, Rational(-1, 9), Rational(2, 9)).str() == "-1/9+2/9*sqrt(3)");
    CHECK(QuadExt(3, Rational(1), Rational(-2, 3)).str() == "1-2/3*sqrt(3)");
}

TEST_CASE("chebyshev sequence") {
    const QuadExt two(5, Rational(2));
    CHECK(chebyshev_u(two, -1) == QuadExt(5));
    CHECK(chebyshev_u(two, 0) == QuadExt(5, Rational(1)));
    // U_m(2) = m+1 (the degenerate alpha = 1/alpha convention)
    CHECK(chebyshev_u(two, 5) == QuadExt(5, Rational(6)));

    std::mt19937_64 rng(11);
    for (int i = 0; i < 10; ++i) {
        QuadExt a = rnd_scalar(rng, 2);
        CHECK(chebyshev_u(a, 2) == a * a - QuadExt(2, Rational(1)));
        // determinant identity U_m^2 - U_{m+1} U_{m-1} = 1
        for (long m = 0; m <= 20; ++m) {
            QuadExt um = chebyshev_u(a, m);
            CHECK(um * um - chebyshev_u(a, m + 1) * chebyshev_u(a, m - 1) ==
                  QuadExt(2, Rational(1)));
        }
    }
    CHECK_THROWS_AS(chebyshev_u(two, -2), std::invalid_argument);
}

TEST_CASE("series division") {
    const QuadExt one(2, Rational(1));
    // 1/(1-x) = 1 + x + x^2 + ...
    Poly numer{one};
    Poly denom{one, -one};
    auto geo = series_div(numer, denom, 4);
    REQUIRE(geo.size() == 5);
    for (const auto& coef : geo)
        CHECK(coef == one);

    // x/1
    Poly xpoly{QuadExt(2), one};
    auto lin = series_div(xpoly, Poly{one}, 2);
    REQUIRE(lin.size() == 3);
    CHECK(lin[0] == QuadExt(2));
    CHECK(lin[1] == one);
    CHECK(lin[2] == QuadExt(2));

    CHECK_THROWS_AS(series_div(numer, Poly{QuadExt(2), one}, 3), std::domain_error);

    // quotient convolved with denominator reproduces the numerator
    std::mt19937_64 rng(13);
    for (int trial = 0; trial < 20; ++trial) {
        Poly n, d;
        for (int i = 0; i < 4; ++i)
            n.push_back(rnd_scalar(rng, 3));
        d.push_back(rnd_scalar(rng, 3, true));
        for (int i = 0; i < 4; ++i)
            d.push_back(rnd_scalar(rng, 3));
        const int order = 12;
        auto quot = series_div(n, d, order);
        auto back = poly_mul_truncated(quot, d, order);
        for (int i = 0; i <= order; ++i) {
            QuadExt expect = static_cast<std::size_t>(i) < n.size() ? n[i] : QuadExt(3);
            CHECK(back[static_cast<std::size_t>(i)] == expect);
        }
    }
}
