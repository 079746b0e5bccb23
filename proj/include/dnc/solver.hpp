#pragma once

// Closed-form evaluation of
//
//   x_n = a x_{ceil(n/2)} + a x_{floor(n/2)} + P(ceil(n/2), floor(n/2)),  n >= 2
//
// for a bivariate polynomial toll P and rational a != 0: the per-monomial
// kernel x^(r,t)_n(a), the homogeneous carrier of the initial condition, and
// their assembly into the full solution.

#include <algorithm>
#include <map>
#include <sstream>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "dnc/alpha.hpp"
#include "dnc/binary_decomposition.hpp"
#include "dnc/exact_arith.hpp"
#include "dnc/rational.hpp"

namespace dnc {

// Sparse bivariate toll polynomial P(x,y) = sum b_{r,t} x^r y^t; zero
// coefficients are never stored.
class TollPolynomial {
public:
    using Key = std::pair<unsigned, unsigned>; // (r, t)

    TollPolynomial() = default;

    void set(unsigned r, unsigned t, const Rational& c) {
        if (c.is_zero())
            coeffs_.erase({r, t});
        else
            coeffs_[{r, t}] = c;
    }

    void add(unsigned r, unsigned t, const Rational& c) {
        auto key = Key{r, t};
        auto it = coeffs_.find(key);
        Rational next = (it == coeffs_.end()) ? c : it->second + c;
        if (next.is_zero()) {
            if (it != coeffs_.end()) coeffs_.erase(it);
        } else {
            coeffs_[key] = next;
        }
    }

    const std::map<Key, Rational>& coeffs() const { return coeffs_; }
    bool is_zero() const { return coeffs_.empty(); }

    Rational eval(const BigInt& x, const BigInt& y) const {
        Rational acc(0);
        for (const auto& [rt, c] : coeffs_)
            acc += c * Rational(int_pow(x, rt.first)) * Rational(int_pow(y, rt.second));
        return acc;
    }

    // "r,t:coeff;r,t:coeff" with rational coefficients; "" is the zero polynomial
    static TollPolynomial parse(const std::string& text) {
        TollPolynomial p;
        if (text.empty()) return p;
        std::stringstream ss(text);
        std::string term;
        while (std::getline(ss, term, ';')) {
            auto comma = term.find(',');
            auto colon = term.find(':');
            if (comma == std::string::npos || colon == std::string::npos || colon < comma)
                throw std::invalid_argument("bad polynomial term: " + term);
            BigInt r = parse_bigint(term.substr(0, comma));
            BigInt t = parse_bigint(term.substr(comma + 1, colon - comma - 1));
            if (r < 0 || t < 0 || !r.fits_ulong_p() || !t.fits_ulong_p())
                throw std::invalid_argument("bad polynomial exponents: " + term);
            p.add(static_cast<unsigned>(r.get_ui()), static_cast<unsigned>(t.get_ui()),
                  Rational::parse(term.substr(colon + 1)));
        }
        return p;
    }

    std::string str() const {
        std::string out;
        for (const auto& [rt, c] : coeffs_) {
            if (!out.empty()) out += ';';
            out += std::to_string(rt.first) + ',' + std::to_string(rt.second) + ':' + c.str();
        }
        return out;
    }

private:
    std::map<Key, Rational> coeffs_;
};

struct Recurrence {
    Rational a;
    TollPolynomial poly;
    Rational x1;

    Recurrence(Rational a_, TollPolynomial poly_, Rational x1_)
        : a(std::move(a_)), poly(std::move(poly_)), x1(std::move(x1_)) {
        if (a.is_zero()) throw std::invalid_argument("recurrence coefficient a must be nonzero");
    }
};

namespace detail {

// Division guarded against the zero denominators 2^.. - a; by construction
// they only occur at skipped indices, so hitting one is a defect.
inline Rational checked_div(const Rational& num, const Rational& den) {
    if (den.is_zero()) throw std::logic_error("internal zero divisor reached evaluation");
    return num / den;
}

} // namespace detail

// T(0,q_s,2a) + n a^{q_s} - (2a)^{q_s}  =  sum_{k=1}^{n-1} a^{q_{s_k}(k)}
inline Rational geometric_block(const BinDecomp& D, const Rational& a) {
    const unsigned long qs = D.top_exponent();
    return t_closed(0, qs, 2 * a) + Rational(D.n()) * rat_pow(a, static_cast<long>(qs)) -
           rat_pow(2 * a, static_cast<long>(qs));
}

// Per-monomial solution x^(r,t)_n(a) of the defining recurrence, with x_1 = 0.
// skip_i = log2(a)+1 and skip_l = log2(a)-t (present only for exact powers
// of two) excise the indices whose denominators 2^{i-1}-a resp. 2^{t+l}-a
// vanish; the delta_ell block compensates when the resonance is real.
inline Rational x_rt(unsigned r, unsigned t, const BinDecomp& D, const Rational& a,
                     AlphaCache* alphas = nullptr) {
    if (a.is_zero()) throw std::invalid_argument("x_rt: a must be nonzero");
    if (D.n() == 1) return Rational(0);

    const PowerOfTwoClass pot = classify_power_of_two(a);
    const bool skip = pot.is_power;
    const long skip_i = skip ? pot.exponent + 1 : 0;               // in sums over i (and j)
    const long skip_l = skip ? pot.exponent - static_cast<long>(t) : 0; // in sums over l
    const int dl = delta_ell(a, r, t);
    const unsigned rt = r + t;
    const unsigned long qs = D.top_exponent();

    AlphaCache local(D, a);
    AlphaCache& ac = alphas ? *alphas : local;

    Rational result(0);

    // polynomial block: sum_k ( sum_{i=k, i != t+ell+1}^{r+t} ... ) n^k
    for (unsigned k = 1; k <= rt; ++k) {
        Rational coef(0);
        for (unsigned i = k; i <= rt; ++i) {
            if (skip && static_cast<long>(i) == skip_i) continue;
            const BigInt b1 = binomial(BigInt(r), BigInt(i) - BigInt(t) - 1);
            if (b1 == 0) continue;
            const Rational num = Rational(b1) * Rational(binomial(BigInt(i), BigInt(k))) *
                                 bernoulli(i - k);
            coef += detail::checked_div(
                num, Rational(static_cast<long>(i)) * (rat_pow2(static_cast<long>(i) - 1) - a));
        }
        if (!coef.is_zero()) result += coef * Rational(int_pow(D.n(), k));
    }

    // 1/(a-1) correction, only for r > 0, t = 0, a != 1
    if (r > 0 && t == 0 && a != Rational(1)) result += detail::checked_div(Rational(1), a - Rational(1));

    // geometric block with its 1 - sum_l C(r,l)/(2^{t+l}-a) multiplier
    Rational mult(1);
    for (unsigned l = 0; l < r; ++l) {
        if (skip && static_cast<long>(l) == skip_l) continue;
        mult -= detail::checked_div(Rational(binomial(BigInt(r), BigInt(l))),
                                    rat_pow2(static_cast<long>(t) + l) - a);
    }
    if (!mult.is_zero()) result += mult * geometric_block(D, a);

    // alpha^(0,i) block
    for (unsigned i = 0; i < rt; ++i) {
        Rational coef = rat_pow2(-static_cast<long>(i)) * Rational(binomial(BigInt(rt), BigInt(i))) -
                        rat_pow2(1 - static_cast<long>(i)) *
                            Rational(binomial(BigInt(r), BigInt(i) - BigInt(t)));
        const long l_lo = std::max(0L, static_cast<long>(i) - static_cast<long>(t) + 1);
        for (long l = l_lo; l < static_cast<long>(r); ++l) {
            if (skip && l == skip_l) continue;
            const BigInt b1 = binomial(BigInt(r), BigInt(l));
            const BigInt b2 = binomial(BigInt(t) + l, BigInt(i));
            if (b1 == 0 || b2 == 0) continue;
            coef -= detail::checked_div(Rational(b1 * b2), rat_pow2(static_cast<long>(t) + l) - a);
        }
        if (!coef.is_zero()) result += coef * ac.get(0, i);
    }

    // resonance block, present when a = 2^{t+ell} with ell in {0,...,r-1}
    if (dl) {
        const long ell = skip_l;
        const Rational qs_r{BigInt(qs)};
        Rational block = t_closed(1, qs, 2 * a) +
                         (Rational(D.n()) * rat_pow(a, static_cast<long>(qs)) -
                          rat_pow(2 * a, static_cast<long>(qs))) *
                             qs_r;
        const long te = static_cast<long>(t) + ell;
        for (long i = 0; i < te; ++i)
            block += Rational(binomial(BigInt(te), BigInt(i))) *
                     ac.get(1, static_cast<unsigned>(i));
        result += detail::checked_div(Rational(binomial(BigInt(r), BigInt(ell))), a) * block;
    }

    return result;
}

inline Rational x_rt(unsigned r, unsigned t, const BigInt& n, const Rational& a) {
    if (n < 1) throw std::invalid_argument("x_rt: n must be >= 1");
    if (n == 1) return Rational(0);
    BinDecomp D(n);
    return x_rt(r, t, D, a);
}

// ((2a)^{q_s} + (2a-1)(n a^{q_s} - (2a)^{q_s})) x1
inline Rational homogeneous_term(const BinDecomp& D, const Rational& a, const Rational& x1) {
    if (x1.is_zero()) return Rational(0);
    const long qs = static_cast<long>(D.top_exponent());
    const Rational two_a_q = rat_pow(2 * a, qs);
    return (two_a_q + (2 * a - Rational(1)) * (Rational(D.n()) * rat_pow(a, qs) - two_a_q)) * x1;
}

inline Rational homogeneous_term(const BigInt& n, const Rational& a, const Rational& x1) {
    if (n < 1) throw std::invalid_argument("homogeneous_term: n must be >= 1");
    return homogeneous_term(BinDecomp(n), a, x1);
}

inline Rational solve(const Recurrence& rec, const BigInt& n) {
    if (n < 1) throw std::invalid_argument("solve: n must be >= 1");
    if (n == 1) return rec.x1;
    BinDecomp D(n);
    AlphaCache alphas(D, rec.a);
    Rational acc(0);
    for (const auto& [rt, c] : rec.poly.coeffs())
        acc += c * x_rt(rt.first, rt.second, D, rec.a, &alphas);
    return acc + homogeneous_term(D, rec.a, rec.x1);
}

inline std::vector<Rational> solve_sequence(const Recurrence& rec, unsigned long n_max) {
    if (n_max < 1) throw std::invalid_argument("solve_sequence: n_max must be >= 1");
    std::vector<Rational> out;
    out.reserve(n_max);
    for (unsigned long n = 1; n <= n_max; ++n) out.push_back(solve(rec, BigInt(n)));
    return out;
}

} // namespace dnc
