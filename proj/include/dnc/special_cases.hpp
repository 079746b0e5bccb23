#pragma once

// The specialized case formulas (a), (b.1)-(b.4), (c.1)-(c.4) for
// x^(r,t)_n(a), transcribed one by one. They exist purely as a
// differential-testing twin of the general x_rt kernel; production callers
// never dispatch through here. Terms whose binomial factor vanishes are
// dropped before their denominator is formed, which is what keeps (c.3)
// well defined for a = 2^h with h < t.

#include <stdexcept>
#include <string>

#include "dnc/solver.hpp"

namespace dnc {

enum class SpecialCase { A, B1, B2, B3, B4, C1, C2, C3, C4 };

inline const char* to_string(SpecialCase c) {
    switch (c) {
        case SpecialCase::A: return "a";
        case SpecialCase::B1: return "b.1";
        case SpecialCase::B2: return "b.2";
        case SpecialCase::B3: return "b.3";
        case SpecialCase::B4: return "b.4";
        case SpecialCase::C1: return "c.1";
        case SpecialCase::C2: return "c.2";
        case SpecialCase::C3: return "c.3";
        case SpecialCase::C4: return "c.4";
    }
    return "?";
}

// a = 1 (ell = 0, t = 0) goes to (b.2), so (b.4) keeps ell in {1,...,r-1}.
inline SpecialCase classify_special(unsigned r, unsigned t, const Rational& a) {
    if (a.is_zero()) throw std::invalid_argument("classify_special: a must be nonzero");
    const Rational half(1, 2), one(1);
    if (r == 0) return SpecialCase::A;
    if (t == 0) {
        if (a == half) return SpecialCase::B1;
        if (a == one) return SpecialCase::B2;
        auto ell = ell_of(a, 0);
        if (ell && *ell >= 1 && *ell < static_cast<long>(r)) return SpecialCase::B4;
        return SpecialCase::B3;
    }
    if (a == half) return SpecialCase::C1;
    if (a == one) return SpecialCase::C2;
    auto ell = ell_of(a, t);
    if (ell && *ell >= 0 && *ell < static_cast<long>(r)) return SpecialCase::C4;
    return SpecialCase::C3;
}

namespace detail {

// q_s + n 2^{-q_s} - 1, the a = 1/2 shape of the geometric block
inline Rational geo_half(const BinDecomp& D) {
    const unsigned long qs = D.top_exponent();
    return Rational(BigInt(qs)) + Rational(D.n()) * rat_pow2(-static_cast<long>(qs)) - Rational(1);
}

// ((2a)^{q_s} - 1)/(2a - 1) + n a^{q_s} - (2a)^{q_s}, the a != 1/2 shape
inline Rational geo_general(const BinDecomp& D, const Rational& a) {
    const long qs = static_cast<long>(D.top_exponent());
    const Rational two_a_q = rat_pow(2 * a, qs);
    return (two_a_q - Rational(1)) / (2 * a - Rational(1)) +
           Rational(D.n()) * rat_pow(a, qs) - two_a_q;
}

// T(1,q_s,2a) spelled out for 2a != 1, plus q_s a^{q_s} (n - 2^{q_s})
inline Rational resonance_tail(const BinDecomp& D, const Rational& a) {
    const long qs = static_cast<long>(D.top_exponent());
    const Rational qs_r(BigInt(D.top_exponent()));
    const Rational two_a = 2 * a;
    const Rational two_a_q = rat_pow(two_a, qs);
    Rational first = (((two_a - Rational(1)) * qs_r - two_a) * two_a_q + two_a) /
                     ((two_a - Rational(1)) * (two_a - Rational(1)));
    return first + qs_r * rat_pow(a, qs) * Rational(D.n() - pow2_int(D.top_exponent()));
}

} // namespace detail

inline Rational x_rt_special(unsigned r, unsigned t, const BigInt& n, const Rational& a) {
    if (n < 1) throw std::invalid_argument("x_rt_special: n must be >= 1");
    if (n == 1) return Rational(0);
    BinDecomp D(n);
    AlphaCache ac(D, a);
    const Rational one(1);
    const unsigned rt = r + t;
    const Rational n_r(n);
    const SpecialCase which = classify_special(r, t, a);
    Rational res(0);

    switch (which) {
        case SpecialCase::A: {
            for (unsigned i = 0; i < t; ++i)
                res += rat_pow2(-static_cast<long>(i)) *
                       Rational(binomial(BigInt(t), BigInt(i))) * ac.get(0, i);
            if (a == Rational(1, 2))
                res += detail::geo_half(D);
            else
                res += detail::geo_general(D, a);
            return res;
        }

        case SpecialCase::B1: {
            for (unsigned k = 1; k <= r; ++k) {
                Rational coef(0);
                for (unsigned j = k; j <= r; ++j) {
                    const BigInt b1 = binomial(BigInt(r), BigInt(j) - 1);
                    if (b1 == 0) continue;
                    coef += Rational(b1) * Rational(binomial(BigInt(j), BigInt(k))) *
                            bernoulli(j - k) /
                            (Rational(static_cast<long>(j)) * (rat_pow2(j) - one));
                }
                res += 2 * coef * Rational(int_pow(n, k));
            }
            res -= Rational(2);
            Rational mult = one;
            for (unsigned l = 0; l < r; ++l)
                mult -= 2 * Rational(binomial(BigInt(r), BigInt(l))) / (rat_pow2(l + 1) - one);
            res += mult * detail::geo_half(D);
            for (unsigned i = 0; i < r; ++i) {
                Rational coef = rat_pow2(-static_cast<long>(i)) *
                                Rational(binomial(BigInt(r), BigInt(i)));
                for (unsigned l = i + 1; l < r; ++l)
                    coef += 2 * Rational(binomial(BigInt(r), BigInt(l)) *
                                         binomial(BigInt(l), BigInt(i))) /
                            (rat_pow2(l + 1) - one);
                res -= coef * ac.get(0, i);
            }
            return res;
        }

        case SpecialCase::B2: {
            for (unsigned k = 2; k <= r; ++k) {
                Rational coef(0);
                for (unsigned j = k; j <= r; ++j) {
                    const BigInt b1 = binomial(BigInt(r), BigInt(j) - 1);
                    if (b1 == 0) continue;
                    coef += Rational(b1) * Rational(binomial(BigInt(j), BigInt(k))) *
                            bernoulli(j - k) /
                            (Rational(static_cast<long>(j)) * (rat_pow2(static_cast<long>(j) - 1) - one));
                }
                res += coef * Rational(int_pow(n, k));
            }
            Rational ncoef = Rational(BigInt(D.top_exponent())) + one;
            for (unsigned j = 1; j < r; ++j)
                ncoef += Rational(binomial(BigInt(r), BigInt(j))) * (bernoulli(j) - one) /
                         (rat_pow2(j) - one);
            res += ncoef * n_r;
            res += one;
            for (unsigned j = 1; j < r; ++j)
                res += Rational(binomial(BigInt(r), BigInt(j))) / (rat_pow2(j) - one);
            res -= Rational(pow2_int(D.top_exponent() + 1));
            for (unsigned i = 0; i < r; ++i) {
                Rational coef = rat_pow2(-static_cast<long>(i)) *
                                Rational(binomial(BigInt(r), BigInt(i)));
                for (unsigned l = i + 1; l < r; ++l)
                    coef += Rational(binomial(BigInt(r), BigInt(l)) *
                                     binomial(BigInt(l), BigInt(i))) /
                            (rat_pow2(l) - one);
                res -= coef * ac.get(0, i);
            }
            return res;
        }

        case SpecialCase::B3: {
            for (unsigned k = 1; k <= r; ++k) {
                Rational coef(0);
                for (unsigned j = k; j <= r; ++j) {
                    const BigInt b1 = binomial(BigInt(r), BigInt(j) - 1);
                    if (b1 == 0) continue;
                    coef += Rational(b1) * Rational(binomial(BigInt(j), BigInt(k))) *
                            bernoulli(j - k) /
                            (Rational(static_cast<long>(j)) * (rat_pow2(static_cast<long>(j) - 1) - a));
                }
                res += coef * Rational(int_pow(n, k));
            }
            res += one / (a - one);
            Rational mult = one;
            for (unsigned l = 0; l < r; ++l)
                mult -= Rational(binomial(BigInt(r), BigInt(l))) / (rat_pow2(l) - a);
            res += mult * detail::geo_general(D, a);
            for (unsigned i = 0; i < r; ++i) {
                Rational coef = rat_pow2(-static_cast<long>(i)) *
                                Rational(binomial(BigInt(r), BigInt(i)));
                for (unsigned l = i + 1; l < r; ++l)
                    coef += Rational(binomial(BigInt(r), BigInt(l)) *
                                     binomial(BigInt(l), BigInt(i))) /
                            (rat_pow2(l) - a);
                res -= coef * ac.get(0, i);
            }
            return res;
        }

        case SpecialCase::B4: {
            const long ell = *ell_of(a, 0);
            for (unsigned k = 1; k <= r; ++k) {
                Rational coef(0);
                for (unsigned i = k; i <= r; ++i) {
                    if (static_cast<long>(i) == ell + 1) continue;
                    const BigInt b1 = binomial(BigInt(r), BigInt(i) - 1);
                    if (b1 == 0) continue;
                    coef += Rational(b1) * Rational(binomial(BigInt(i), BigInt(k))) *
                            bernoulli(i - k) /
                            (Rational(static_cast<long>(i)) * (rat_pow2(static_cast<long>(i) - 1) - a));
                }
                res += coef * Rational(int_pow(n, k));
            }
            res += one / (a - one);
            Rational mult = one;
            for (unsigned l = 0; l < r; ++l) {
                if (static_cast<long>(l) == ell) continue;
                mult -= Rational(binomial(BigInt(r), BigInt(l))) / (rat_pow2(l) - a);
            }
            res += mult * detail::geo_general(D, a);
            for (unsigned i = 0; i < r; ++i) {
                Rational coef = rat_pow2(-static_cast<long>(i)) *
                                Rational(binomial(BigInt(r), BigInt(i)));
                for (unsigned l = i + 1; l < r; ++l) {
                    if (static_cast<long>(l) == ell) continue;
                    coef += Rational(binomial(BigInt(r), BigInt(l)) *
                                     binomial(BigInt(l), BigInt(i))) /
                            (rat_pow2(l) - a);
                }
                res -= coef * ac.get(0, i);
            }
            const Rational lead = Rational(binomial(BigInt(r), BigInt(ell))) / a;
            res += lead * detail::resonance_tail(D, a);
            Rational alpha_part(0);
            for (long i = 0; i < ell; ++i)
                alpha_part += Rational(binomial(BigInt(ell), BigInt(i))) *
                              ac.get(1, static_cast<unsigned>(i));
            res += lead * alpha_part;
            return res;
        }

        case SpecialCase::C1: {
            for (unsigned k = 1; k <= rt; ++k) {
                Rational coef(0);
                for (unsigned j = k; j <= rt; ++j) {
                    const BigInt b1 = binomial(BigInt(r), BigInt(j) - BigInt(t) - 1);
                    if (b1 == 0) continue;
                    coef += Rational(b1) * Rational(binomial(BigInt(j), BigInt(k))) *
                            bernoulli(j - k) /
                            (Rational(static_cast<long>(j)) * (rat_pow2(j) - one));
                }
                res += 2 * coef * Rational(int_pow(n, k));
            }
            Rational mult = one;
            for (unsigned l = 0; l < r; ++l)
                mult -= 2 * Rational(binomial(BigInt(r), BigInt(l))) /
                        (rat_pow2(static_cast<long>(t) + l + 1) - one);
            res += mult * detail::geo_half(D);
            for (unsigned i = 0; i < rt; ++i) {
                Rational coef = rat_pow2(-static_cast<long>(i)) *
                                    Rational(binomial(BigInt(rt), BigInt(i))) -
                                rat_pow2(1 - static_cast<long>(i)) *
                                    Rational(binomial(BigInt(r), BigInt(i) - BigInt(t)));
                const long l_lo = std::max(0L, static_cast<long>(i) - static_cast<long>(t) + 1);
                for (long l = l_lo; l < static_cast<long>(r); ++l)
                    coef -= 2 * Rational(binomial(BigInt(r), BigInt(l)) *
                                         binomial(BigInt(t) + l, BigInt(i))) /
                            (rat_pow2(static_cast<long>(t) + l + 1) - one);
                res += coef * ac.get(0, i);
            }
            return res;
        }

        case SpecialCase::C2: {
            for (unsigned k = 2; k <= rt; ++k) {
                Rational coef(0);
                for (unsigned j = k; j <= rt; ++j) {
                    const BigInt b1 = binomial(BigInt(r), BigInt(j) - BigInt(t) - 1);
                    if (b1 == 0) continue;
                    coef += Rational(b1) * Rational(binomial(BigInt(j), BigInt(k))) *
                            bernoulli(j - k) /
                            (Rational(static_cast<long>(j)) * (rat_pow2(static_cast<long>(j) - 1) - one));
                }
                res += coef * Rational(int_pow(n, k));
            }
            Rational ncoef = one;
            for (unsigned j = 1; j < rt; ++j) {
                const BigInt b1 = binomial(BigInt(r), BigInt(j) - BigInt(t));
                if (b1 == 0) continue;
                ncoef += Rational(b1) * (bernoulli(j) - one) / (rat_pow2(j) - one);
            }
            res += ncoef * n_r;
            for (unsigned l = 0; l < r; ++l)
                res += Rational(binomial(BigInt(r), BigInt(l))) /
                       (rat_pow2(static_cast<long>(t) + l) - one);
            res -= one;
            for (unsigned i = 0; i < rt; ++i) {
                Rational coef = rat_pow2(-static_cast<long>(i)) *
                                    Rational(binomial(BigInt(rt), BigInt(i))) -
                                rat_pow2(1 - static_cast<long>(i)) *
                                    Rational(binomial(BigInt(r), BigInt(i) - BigInt(t)));
                const long l_lo = std::max(0L, static_cast<long>(i) - static_cast<long>(t) + 1);
                for (long l = l_lo; l < static_cast<long>(r); ++l)
                    coef -= Rational(binomial(BigInt(r), BigInt(l)) *
                                     binomial(BigInt(t) + l, BigInt(i))) /
                            (rat_pow2(static_cast<long>(t) + l) - one);
                res += coef * ac.get(0, i);
            }
            return res;
        }

        case SpecialCase::C3: {
            for (unsigned k = 1; k <= rt; ++k) {
                Rational coef(0);
                for (unsigned j = k; j <= rt; ++j) {
                    const BigInt b1 = binomial(BigInt(r), BigInt(j) - BigInt(t) - 1);
                    if (b1 == 0) continue; // kills the 2^{j-1} = a terms below 2^t too
                    coef += Rational(b1) * Rational(binomial(BigInt(j), BigInt(k))) *
                            bernoulli(j - k) /
                            (Rational(static_cast<long>(j)) * (rat_pow2(static_cast<long>(j) - 1) - a));
                }
                res += coef * Rational(int_pow(n, k));
            }
            Rational mult = one;
            for (unsigned l = 0; l < r; ++l)
                mult -= Rational(binomial(BigInt(r), BigInt(l))) /
                        (rat_pow2(static_cast<long>(t) + l) - a);
            res += mult * detail::geo_general(D, a);
            for (unsigned i = 0; i < rt; ++i) {
                Rational coef = rat_pow2(-static_cast<long>(i)) *
                                    Rational(binomial(BigInt(rt), BigInt(i))) -
                                rat_pow2(1 - static_cast<long>(i)) *
                                    Rational(binomial(BigInt(r), BigInt(i) - BigInt(t)));
                const long l_lo = std::max(0L, static_cast<long>(i) - static_cast<long>(t) + 1);
                for (long l = l_lo; l < static_cast<long>(r); ++l)
                    coef -= Rational(binomial(BigInt(r), BigInt(l)) *
                                     binomial(BigInt(t) + l, BigInt(i))) /
                            (rat_pow2(static_cast<long>(t) + l) - a);
                res += coef * ac.get(0, i);
            }
            return res;
        }

        case SpecialCase::C4: {
            const long ell = *ell_of(a, t);
            const long te = static_cast<long>(t) + ell;
            for (unsigned k = 1; k <= rt; ++k) {
                Rational coef(0);
                for (unsigned j = k; j <= rt; ++j) {
                    if (static_cast<long>(j) == te + 1) continue;
                    const BigInt b1 = binomial(BigInt(r), BigInt(j) - BigInt(t) - 1);
                    if (b1 == 0) continue;
                    coef += Rational(b1) * Rational(binomial(BigInt(j), BigInt(k))) *
                            bernoulli(j - k) /
                            (Rational(static_cast<long>(j)) * (rat_pow2(static_cast<long>(j) - 1) - a));
                }
                res += coef * Rational(int_pow(n, k));
            }
            const Rational lead = Rational(binomial(BigInt(r), BigInt(ell))) / a;
            res += lead * detail::resonance_tail(D, a);
            Rational mult = one;
            for (unsigned l = 0; l < r; ++l) {
                if (static_cast<long>(l) == ell) continue;
                mult -= Rational(binomial(BigInt(r), BigInt(l))) /
                        (rat_pow2(static_cast<long>(t) + l) - a);
            }
            res += mult * detail::geo_general(D, a);
            for (unsigned i = 0; i < rt; ++i) {
                Rational coef = rat_pow2(-static_cast<long>(i)) *
                                    Rational(binomial(BigInt(rt), BigInt(i))) -
                                rat_pow2(1 - static_cast<long>(i)) *
                                    Rational(binomial(BigInt(r), BigInt(i) - BigInt(t)));
                const long l_lo = std::max(0L, static_cast<long>(i) - static_cast<long>(t) + 1);
                for (long l = l_lo; l < static_cast<long>(r); ++l) {
                    if (l == ell) continue;
                    coef -= Rational(binomial(BigInt(r), BigInt(l)) *
                                     binomial(BigInt(t) + l, BigInt(i))) /
                            (rat_pow2(static_cast<long>(t) + l) - a);
                }
                res += coef * ac.get(0, i);
            }
            Rational alpha_part(0);
            for (long i = 0; i < te; ++i)
                alpha_part += Rational(binomial(BigInt(te), BigInt(i))) *
                              ac.get(1, static_cast<unsigned>(i));
            res += lead * alpha_part;
            return res;
        }
    }
    throw std::logic_error("x_rt_special: unreachable");
}

} // namespace dnc
