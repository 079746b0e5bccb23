#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "dnc/exact_arith.hpp"

using namespace dnc;

namespace {

const std::vector<Rational> kXGrid = {Rational(1),     Rational(-1),    Rational(2),
                                      Rational(1, 2),  Rational(-1, 2), Rational(3),
                                      Rational(2, 3)};

} // namespace

TEST_CASE("rational basics") {
    CHECK(Rational(2, 4) == Rational(1, 2));
    CHECK(Rational(-2, -4) == Rational(1, 2));
    CHECK(Rational(2, -4) == Rational(-1, 2));
    CHECK(Rational(1, 2).denominator() == 2);
    CHECK(Rational(0, 7).str() == "0");
    CHECK((Rational(1, 3) + Rational(1, 6)).str() == "1/2");
    CHECK((Rational(1, 3) * Rational(3)).str() == "1");
    CHECK_THROWS_AS(Rational(1) / Rational(0), std::domain_error);
    CHECK_THROWS_AS(Rational(BigInt(1), BigInt(0)), std::domain_error);
}

TEST_CASE("rational text format") {
    CHECK(Rational::parse("20").str() == "20");
    CHECK(Rational::parse("-7/2").str() == "-7/2");
    CHECK(Rational::parse("4/6").str() == "2/3");
    CHECK(Rational::parse("1000000014000000049").numerator() ==
          BigInt("1000000014000000049"));
    CHECK_THROWS(Rational::parse(""));
    CHECK_THROWS(Rational::parse("1/0"));
    CHECK_THROWS(Rational::parse("1/-2"));
    CHECK_THROWS(Rational::parse(" 1"));
    CHECK_THROWS(Rational::parse("1.5"));
    CHECK_THROWS(Rational::parse("a"));
}

TEST_CASE("rational powers use 0^0 = 1") {
    CHECK(rat_pow(Rational(0), 0) == Rational(1));
    CHECK(rat_pow(Rational(0), 3) == Rational(0));
    CHECK(rat_pow(Rational(-2, 3), 2) == Rational(4, 9));
    CHECK(rat_pow(Rational(-2, 3), -2) == Rational(9, 4));
    CHECK(rat_pow(Rational(2), -3) == Rational(1, 8));
    CHECK_THROWS_AS(rat_pow(Rational(0), -1), std::domain_error);
    CHECK(rat_pow2(-4) == Rational(1, 16));
    CHECK(rat_pow2(5) == Rational(32));
}

TEST_CASE("binomial") {
    CHECK(binomial(4, 2) == 6);
    CHECK(binomial(3, -1) == 0);
    CHECK(binomial(5, 5) == 1);
    CHECK(binomial(5, 6) == 0);
    CHECK(binomial(0, 0) == 1);
    CHECK_THROWS_AS(binomial(-1, 0), std::invalid_argument);
    // big n, small k
    BigInt n("1000000007");
    CHECK(binomial(n, BigInt(2)) == n * (n - 1) / 2);
}

TEST_CASE("bernoulli numbers") {
    CHECK(bernoulli(0) == Rational(1));
    CHECK(bernoulli(1) == Rational(-1, 2));
    CHECK(bernoulli(2) == Rational(1, 6));
    CHECK(bernoulli(3) == Rational(0));
    CHECK(bernoulli(4) == Rational(-1, 30));

    // defining recurrence and vanishing of odd indices, m <= 40
    for (unsigned m = 1; m <= 40; ++m) {
        Rational acc(0);
        for (unsigned k = 0; k <= m; ++k)
            acc += Rational(binomial(BigInt(m + 1), BigInt(k))) * bernoulli(k);
        CHECK(acc == Rational(0));
        if (m >= 3 && m % 2 == 1) CHECK(bernoulli(m) == Rational(0));
    }

    // a request past the default cache bound extends it and stays consistent
    Rational acc70(0);
    for (unsigned k = 0; k <= 70; ++k)
        acc70 += Rational(binomial(BigInt(71), BigInt(k))) * bernoulli(k);
    CHECK(acc70 == Rational(0));
}

TEST_CASE("bernoulli polynomials") {
    CHECK(bernoulli_poly(0, Rational(5)) == Rational(1));
    CHECK(bernoulli_poly(1, Rational(0)) == Rational(-1, 2));
    CHECK(bernoulli_poly(2, Rational(2)) == Rational(13, 6));

    const std::vector<Rational> grid = {Rational(0),    Rational(1),  Rational(-1),
                                        Rational(1, 2), Rational(-3), Rational(5, 3)};
    for (unsigned m = 0; m <= 20; ++m) {
        // B_m(x+1) = sum_k C(m,k) B_k(x)
        for (const auto& x : grid) {
            Rational rhs(0);
            for (unsigned k = 0; k <= m; ++k)
                rhs += Rational(binomial(BigInt(m), BigInt(k))) * bernoulli_poly(k, x);
            CHECK(bernoulli_poly(m, x + Rational(1)) == rhs);
        }
        Rational sign = (m % 2 == 0) ? Rational(1) : Rational(-1);
        CHECK(bernoulli_poly(m, Rational(1)) == sign * bernoulli(m));
        CHECK(bernoulli_poly(m, Rational(2)) ==
              sign * bernoulli(m) + Rational(static_cast<long>(m)));
    }
}

TEST_CASE("t_closed spot values and domain") {
    CHECK(t_closed(0, 3, Rational(1)) == Rational(3));
    CHECK(t_closed(0, 3, Rational(2)) == Rational(7)); // 1 + 2 + 4
    CHECK(t_closed(1, 4, Rational(1)) == Rational(6)); // 0 + 1 + 2 + 3
    CHECK(t_closed(0, 0, Rational(5)) == Rational(0));
    CHECK(t_closed(1, 0, Rational(5)) == Rational(0));
    CHECK_THROWS_AS(t_closed(2, 3, Rational(2)), std::invalid_argument);
    CHECK_THROWS_AS(t_closed(0, 3, Rational(0)), std::invalid_argument);
}

TEST_CASE("t_ref spot values") {
    CHECK(t_ref(0, 5, Rational(1)) == Rational(5));
    CHECK(t_ref(2, 3, Rational(1)) == Rational(5)); // 0 + 1 + 4
    CHECK(t_ref(1, 1, Rational(7)) == Rational(0)); // single term 0^1 * 7^0
    CHECK(t_ref(0, 1, Rational(7)) == Rational(1)); // 0^0 = 1
}

TEST_CASE("t_closed matches the literal sum") {
    for (unsigned d = 0; d <= 1; ++d)
        for (const auto& x : kXGrid)
            for (unsigned long n = 0; n <= 64; ++n)
                CHECK(t_closed(d, n, x) == t_ref(d, n, x));
}

TEST_CASE("T recurrence links d = 1 to d = 0") {
    for (const auto& x : kXGrid) {
        if (x == Rational(1)) continue;
        for (unsigned long n = 1; n <= 64; ++n) {
            Rational rhs = x / (Rational(1) - x) *
                           (t_closed(0, n, x) - Rational(BigInt(n)) * rat_pow(x, static_cast<long>(n) - 1));
            CHECK(t_closed(1, n, x) == rhs);
        }
    }
}

TEST_CASE("faulhaber power sums") {
    CHECK(faulhaber_sum(2, BigInt(5)) == Rational(30)); // 1 + 4 + 9 + 16
    CHECK(faulhaber_sum(0, BigInt(1)) == Rational(0));
    CHECK(faulhaber_sum(1, BigInt(4)) == Rational(6));

    for (unsigned d = 0; d <= 3; ++d) {
        Rational running(0);
        for (unsigned long n = 1; n <= 200; ++n) {
            if (n > 1) running += Rational(int_pow(BigInt(n - 1), d));
            Rational got = faulhaber_sum(d, BigInt(n));
            CHECK(got == running);
            CHECK(got.is_integer());
        }
    }
}
