#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "oracles.hpp"
#include "twoschur/errors.hpp"
#include "twoschur/padic.hpp"

using namespace twoschur;

TEST_CASE("digits")
{
    CHECK(digits(49, 3).digits() == std::vector<unsigned>{1, 1, 2, 1});
    CHECK(digits(0, 3).empty());
    CHECK(digits(13, 3).digits() == std::vector<unsigned>{1, 1, 1});
    CHECK(digits(13, 3)[7] == 0);

    CHECK_THROWS_AS(digits(5, 1), InvalidPrime);
    CHECK_THROWS_AS(digits(5, 4), InvalidPrime);
    CHECK_THROWS_AS(digits(5, 0), InvalidPrime);
}

TEST_CASE("digits round-trip and normal form")
{
    for (unsigned p : {2U, 3U, 5U, 7U, 11U}) {
        for (Natural a = 0; a < 3000; ++a) {
            const DigitVector d = digits(a, p);
            REQUIRE(d.value() == a);
            if (!d.empty()) CHECK(d.digits().back() != 0);
            for (unsigned x : d.digits()) CHECK(x < p);
        }
    }
    const Natural big = 0xFFFFFFFFFFFFFFFFULL;
    CHECK(digits(big, 3).value() == big);
}

TEST_CASE("truncate_below")
{
    CHECK(truncate_below(23, 3, 2) == 5);
    CHECK(truncate_below(23, 3, 0) == 0);
    CHECK(truncate_below(13, 3, 3) == 13);
    CHECK(truncate_below(13, 3, 40) == 13);
    for (Natural a = 0; a < 500; ++a) {
        Natural ps = 1;
        for (std::size_t s = 0; s < 7; ++s, ps *= 3) CHECK(truncate_below(a, 3, s) == a % ps);
    }
}

TEST_CASE("lucas_binom examples")
{
    CHECK(lucas_binom(49, 13, 3) == 2);
    CHECK(lucas_binom(6, 2, 3) == 0);
    CHECK(lucas_binom(7, 9, 3) == 0);
    for (Natural a = 0; a < 50; ++a) CHECK(lucas_binom(a, 0, 5) == 1);
    // Large prime: digits are the numbers themselves.
    CHECK(lucas_binom(10, 3, 1000003) == 120);
}

TEST_CASE("lucas_binom agrees with exact factorials")
{
    constexpr unsigned kMax = 300;
    const auto fact = oracle::factorials(kMax);
    for (unsigned p : {2U, 3U, 5U, 7U}) {
        for (unsigned a = 0; a <= kMax; ++a) {
            for (unsigned b = 0; b <= a; ++b) {
                REQUIRE_MESSAGE(lucas_binom(a, b, p) == oracle::binom_mod_factorial(fact, a, b, p),
                                "a=" << a << " b=" << b << " p=" << p);
            }
        }
    }
}

TEST_CASE("big_b")
{
    CHECK(big_b(23, 13, 3) == 2);
    CHECK(big_b(1, 1, 3) == 0);
    for (Natural m = 0; m < 40; ++m) CHECK(big_b(m, 0, 3) == 1);
    for (Natural m = 0; m < 30; ++m) {
        for (Natural g = 0; g < 30; ++g) CHECK(big_b(m, g, 3) == oracle::binom_mod_small(m + 2 * g, g, 3));
    }
    CHECK_THROWS_AS(big_b(1, 0x8000000000000000ULL, 3), RangeError);
}

TEST_CASE("carry_sequence")
{
    const CarrySequence x = carry_sequence(23, 13, 3);
    CHECK(x.carries() == std::vector<unsigned>{1, 1, 1, 0});
    CHECK(x.at(-1) == 0);
    CHECK(x.at(100) == 0);

    for (Natural m = 0; m < 200; ++m) CHECK(carry_sequence(m, 0, 3).all_zero());
    CHECK(carry_sequence(0, 0, 3).size() == 1);
}

TEST_CASE("carry_sequence matches schoolbook addition and the column recurrence")
{
    for (unsigned p : {2U, 3U, 5U}) {
        for (Natural m = 0; m < 300; ++m) {
            for (Natural g = 0; g < 300; g += 7) {
                const CarrySequence x = carry_sequence(m, g, p);
                const auto ref = oracle::add_columns(m, g, p, x.size());
                REQUIRE(x.carries() == ref.carries);
                for (std::size_t u = 0; u < x.size(); ++u) {
                    const long lu = static_cast<long>(u);
                    CHECK(ref.a_digits[u] + ref.b_digits[u] + x.at(lu - 1) == ref.sum_digits[u] + p * x.at(lu));
                }
                CHECK(x.carries().back() == 0);
            }
        }
    }
}

TEST_CASE("carries are 0 or 1")
{
    auto check = [](Natural m, Natural g) {
        const CarrySequence x = carry_sequence(m, g, 3);
        for (unsigned c : x.carries()) REQUIRE(c <= 1);
    };
    for (Natural m = 0; m < 243; ++m) {
        for (Natural g = 0; g < 243; ++g) check(m, g);
    }
    std::uniform_int_distribution<Natural> dist(0, 6561);
    for (int k = 0; k < 200000; ++k) check(dist(oracle::rng()), dist(oracle::rng()));
}

TEST_CASE("carry pattern for m = p^mu, g = p^nu - p^mu + h")
{
    for (unsigned p : {3U, 5U}) {
        for (unsigned mu = 0; mu < 4; ++mu) {
            for (unsigned nu = mu + 1; nu < 6; ++nu) {
                const Natural pm = saturating_pow(p, mu);
                const Natural pn = saturating_pow(p, nu);
                for (Natural h = 1; h < pm; ++h) {
                    if (lucas_binom(2 * h, h, p) == 0) continue;
                    const CarrySequence x = carry_sequence(pm, pn - pm + h, p);
                    for (unsigned u = 0; u < mu; ++u) CHECK(x.at(u) == 0);
                    for (unsigned u = mu; u < nu; ++u) CHECK(x.at(u) == 1);
                }
            }
        }
    }
}

TEST_CASE("digit relation when B(m,g) is non-zero")
{
    for (unsigned p : {2U, 3U, 5U, 7U}) {
        for (Natural m = 0; m < 120; ++m) {
            for (Natural g = 0; g < 120; ++g) {
                if (big_b(m, g, p) == 0) continue;
                const CarrySequence x = carry_sequence(m, g, p);
                const DigitVector top = digits(m + 2 * g, p);
                const DigitVector gd = digits(g, p);
                const DigitVector md = digits(m, p);
                for (std::size_t u = 0; u < x.size() + 1; ++u) {
                    const long lhs = static_cast<long>(top[u]) - 2 * static_cast<long>(gd[u]);
                    const long rhs = static_cast<long>(md[u]) + x.at(static_cast<long>(u) - 1);
                    REQUIRE(((lhs - rhs) % static_cast<long>(p) + p) % p == 0);
                }
                CHECK(carry_sequence(m + g, g, p).all_zero());
            }
        }
    }
}

TEST_CASE("factor_digits")
{
    using P = std::pair<unsigned, unsigned>;
    CHECK(factor_digits(23, 13, 3) == std::vector<P>{{1, 1}, {1, 1}, {2, 1}, {1, 0}});
    CHECK(factor_digits(0, 2, 3) == std::vector<P>{{1, 2}, {1, 0}});
    CHECK(factor_digits(16, 0, 3) == std::vector<P>{{1, 0}, {2, 0}, {1, 0}});
    CHECK(factor_digits(0, 0, 3).empty());
}
