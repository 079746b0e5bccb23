#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "dnc/alpha.hpp"

using namespace dnc;

namespace {

const std::vector<Rational> kAGrid = {Rational(1),    Rational(-1), Rational(1, 2),
                                      Rational(-1, 2), Rational(2), Rational(4),
                                      Rational(3),    Rational(2, 3), Rational(-2)};

const std::vector<Rational> kXGrid = {Rational(1),     Rational(-1),   Rational(2),
                                      Rational(1, 2),  Rational(-1, 2), Rational(3),
                                      Rational(2, 3)};

} // namespace

TEST_CASE("s_sum spot values") {
    for (const auto& a : kAGrid) {
        CHECK(s_sum(0, 0, BigInt(8), a) == Rational(0));  // single bit, empty sum
        CHECK(s_sum(0, 0, BigInt(64), a) == Rational(0));
    }
    CHECK(s_sum(0, 0, BigInt(7), Rational(1)) == Rational(2));
    CHECK(s_sum(1, 1, BigInt(6), Rational(2)) == Rational(4));
}

TEST_CASE("alpha_ref spot values") {
    for (const auto& a : kAGrid) CHECK(alpha_ref(0, 0, BigInt(2), a) == Rational(0));
    CHECK(alpha_ref(0, 1, BigInt(4), Rational(1)) == Rational(2));
    CHECK(alpha_ref(1, 0, BigInt(8), Rational(1)) == Rational(2));
}

TEST_CASE("alpha_closed domain") {
    CHECK_THROWS_AS(alpha_closed(2, 0, BigInt(5), Rational(1)), std::invalid_argument);
    CHECK_THROWS_AS(alpha_closed(0, 0, BigInt(5), Rational(0)), std::invalid_argument);
}

TEST_CASE("alpha_closed spot values") {
    for (const auto& a : kAGrid) CHECK(alpha_closed(0, 0, BigInt(1), a) == Rational(0));
    CHECK(alpha_closed(0, 0, BigInt(7), Rational(1)) == Rational(3));
    CHECK(alpha_closed(0, 0, BigInt(6), Rational(2)) == Rational(2));

    // the two displayed a = 1 / a = 2 reductions of alpha^(0,0)
    for (unsigned long n = 1; n <= 128; ++n) {
        BinDecomp D{BigInt(n)};
        const unsigned long s = D.weight(), qs = D.top_exponent();
        Rational a1{BigInt((s - 1) * n)};
        for (unsigned long i = 1; i <= s; ++i)
            a1 += rat_pow2(static_cast<long>(D.q(i)) - 1) *
                  Rational(BigInt(D.q(i)) - 2 * BigInt(i));
        a1 += Rational(1);
        CHECK(alpha_closed(0, 0, D, Rational(1)) == a1);

        Rational a2 = Rational(BigInt(n) * BigInt(n), BigInt(2)) -
                      Rational(BigInt(n), BigInt(2)) -
                      Rational(3 * BigInt(n) * pow2_int(qs) - 2 * pow2_int(2 * qs) - 1, BigInt(3));
        CHECK(alpha_closed(0, 0, D, Rational(2)) == a2);
    }
}

TEST_CASE("alpha closed form equals the definitional double sum") {
    for (const auto& a : kAGrid) {
        for (unsigned d = 0; d <= 1; ++d) {
            for (unsigned m = 0; m <= 4; ++m) {
                Rational running(0); // alpha_ref built incrementally
                for (unsigned long n = 1; n <= 160; ++n) {
                    if (n > 1) running += s_sum(d, m, BigInt(n - 1), a);
                    CHECK(alpha_closed(d, m, BigInt(n), a) == running);
                }
            }
        }
    }
}

TEST_CASE("gamma_ref spot values") {
    CHECK(gamma_ref(0, 0, 1, 0, Rational(7)) == Rational(0));
    CHECK(gamma_ref(2, 1, 3, 0, Rational(-2)) == Rational(0));
    CHECK(gamma_ref(0, 0, 1, 2, Rational(1)) == Rational(3));
    CHECK(gamma_ref(1, 0, 1, 1, Rational(1)) == Rational(0)); // d = 1 kills q = 0
    CHECK_THROWS_AS(gamma_ref(0, 2, 2, 3, Rational(1)), std::invalid_argument);
    CHECK_THROWS_AS(gamma_closed(0, 3, 3, 2, Rational(1)), std::invalid_argument);
}

TEST_CASE("gamma closed form equals the literal sum") {
    CHECK(gamma_closed(0, 0, 1, 2, Rational(1)) == Rational(3));
    CHECK(gamma_closed(0, 1, 2, 3, Rational(1)) == gamma_ref(0, 1, 2, 3, Rational(1)));
    for (const auto& a : kAGrid)
        for (unsigned m = 1; m <= 4; ++m)
            for (unsigned p = 0; p < m; ++p)
                for (unsigned d = 0; d <= 2; ++d)
                    for (unsigned l = 0; l <= 8; ++l)
                        CHECK(gamma_closed(d, p, m, l, a) == gamma_ref(d, p, m, l, a));
}

TEST_CASE("gamma recurrence") {
    // gamma_l = 2 gamma_{l-1} + sum_{q<p} C(p,q) 2^{(p-q)(l-1)} gamma^(d,q,m)_{l-1}
    for (const auto& a : {Rational(1), Rational(2), Rational(-1, 2), Rational(2, 3)}) {
        for (unsigned m = 1; m <= 4; ++m) {
            for (unsigned p = 1; p < m; ++p) {
                for (unsigned d = 0; d <= 1; ++d) {
                    for (unsigned l = 1; l <= 6; ++l) {
                        Rational rhs = 2 * gamma_ref(d, p, m, l - 1, a);
                        for (unsigned q = 0; q < p; ++q)
                            rhs += Rational(binomial(BigInt(p), BigInt(q))) *
                                   rat_pow2(static_cast<long>(p - q) * (static_cast<long>(l) - 1)) *
                                   gamma_ref(d, q, m, l - 1, a);
                        CHECK(gamma_ref(d, p, m, l, a) == rhs);
                    }
                }
            }
        }
    }
}

TEST_CASE("alpha at powers of two") {
    // alpha^(d,m)_{2^l} = 2^{(m+1)l-1}/(m+1) sum_j C(m+1,j) B_j 2^{-j(l-1)} T(d,l-1,a 2^{j-m}),
    // stated for m >= 1
    for (const auto& a : kAGrid) {
        for (unsigned d = 0; d <= 1; ++d) {
            for (unsigned m = 1; m <= 4; ++m) {
                for (unsigned l = 0; l <= 10; ++l) {
                    Rational rhs(0);
                    for (unsigned j = 0; j <= m; ++j)
                        rhs += Rational(binomial(BigInt(m + 1), BigInt(j))) * bernoulli(j) *
                               rat_pow2(-static_cast<long>(j) * (static_cast<long>(l) - 1)) *
                               t_closed(d, l == 0 ? 0 : l - 1,
                                        a * rat_pow2(static_cast<long>(j) - static_cast<long>(m)));
                    rhs *= rat_pow2(static_cast<long>(m + 1) * l - 1) /
                           Rational(static_cast<long>(m) + 1);
                    CHECK(alpha_closed(d, m, pow2_int(l), a) == rhs);
                }
            }
        }
    }
}

TEST_CASE("top-bit geometric sum identity") {
    // sum_{k=1}^{n-1} q_{s_k}^d x^{q_{s_k}} = T(d,q_s,2x) + n q_s^d x^{q_s} - q_s^d (2x)^{q_s}
    for (const auto& x : kXGrid) {
        for (unsigned d = 0; d <= 1; ++d) {
            Rational lhs(0);
            for (unsigned long n = 1; n <= 512; ++n) {
                BinDecomp D{BigInt(n)};
                const unsigned long qs = D.top_exponent();
                Rational rhs = t_closed(d, qs, 2 * x) +
                               Rational(BigInt(n)) * exp_pow(qs, d) * rat_pow(x, static_cast<long>(qs)) -
                               exp_pow(qs, d) * rat_pow(2 * x, static_cast<long>(qs));
                CHECK(lhs == rhs);
                lhs += exp_pow(qs, d) * rat_pow(x, static_cast<long>(qs)); // add the k = n term
            }
        }
    }
}

TEST_CASE("full decomposition double-sum identity") {
    // sum_{k=0}^{n-1} sum_i q_i(k)^d x^{q_i(k)}
    //   = sum_i 2^{q_i-1} T(d,q_i,x) + sum_i q_i^d x^{q_i} (n - M_i)
    for (const auto& x : kXGrid) {
        for (unsigned d = 0; d <= 1; ++d) {
            Rational lhs(0);
            for (unsigned long n = 1; n <= 512; ++n) {
                BinDecomp D{BigInt(n)};
                Rational rhs(0);
                for (unsigned long i = 1; i <= D.weight(); ++i) {
                    rhs += rat_pow2(static_cast<long>(D.q(i)) - 1) * t_closed(d, D.q(i), x) +
                           exp_pow(D.q(i), d) * rat_pow(x, static_cast<long>(D.q(i))) *
                               Rational(BigInt(n) - D.M(i));
                }
                CHECK(lhs == rhs);
                for (unsigned long i = 1; i <= D.weight(); ++i) // add the k = n term
                    lhs += exp_pow(D.q(i), d) * rat_pow(x, static_cast<long>(D.q(i)));
            }
        }
    }
}
