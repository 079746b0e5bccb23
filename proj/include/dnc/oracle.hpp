#pragma once

// Ground-truth evaluators, independent of the closed-form path: memoized
// direct recursion on the defining equation, and the two difference-sequence
// formulas for y^(r,t)_n = x^(r,t)_n - x^(r,t)_{n-1}.

#include <map>
#include <stdexcept>

#include "dnc/binary_decomposition.hpp"
#include "dnc/solver.hpp"

namespace dnc {

class MemoOracle {
public:
    explicit MemoOracle(Recurrence rec) : rec_(std::move(rec)) {}

    const Rational& eval(const BigInt& n) {
        if (n < 1) throw std::invalid_argument("oracle: n must be >= 1");
        auto it = memo_.find(n);
        if (it != memo_.end()) return it->second;
        Rational v(0);
        if (n == 1) {
            v = rec_.x1;
        } else {
            BigInt up = (n + 1) >> 1, down = n >> 1;
            v = rec_.a * eval(up) + rec_.a * eval(down) + rec_.poly.eval(up, down);
        }
        return memo_.emplace(n, std::move(v)).first->second;
    }

    std::size_t size() const { return memo_.size(); }

    // every cached entry must still satisfy the recurrence against its parents
    bool self_audit() const {
        for (const auto& [n, v] : memo_) {
            if (n == 1) {
                if (v != rec_.x1) return false;
                continue;
            }
            BigInt up = (n + 1) >> 1, down = n >> 1;
            auto iu = memo_.find(up), id = memo_.find(down);
            if (iu == memo_.end() || id == memo_.end()) return false;
            if (v != rec_.a * iu->second + rec_.a * id->second + rec_.poly.eval(up, down))
                return false;
        }
        return true;
    }

private:
    Recurrence rec_;
    std::map<BigInt, Rational> memo_;
};

inline Rational oracle_solve(const Recurrence& rec, const BigInt& n) {
    MemoOracle o(rec);
    return o.eval(n);
}

// y^(r,t)_n = a^{q_s(n-1)} + sum_{k=1}^{q_s(n-1)} a^{k-1} [ (1+floor((n-1)/2^k))^r
//   round((n-1)/2^k)^t - round((n-1)/2^k)^r floor((n-1)/2^k)^t ]
// where round(z) = floor(z + 1/2), evaluated on integers.
inline Rational y_diff(unsigned r, unsigned t, const BigInt& n, const Rational& a) {
    if (n < 2) throw std::invalid_argument("y_diff: n must be >= 2");
    const BigInt prev = n - 1;
    const unsigned long L = bit_length(prev) - 1; // q_{s_{n-1}}(n-1)
    Rational acc = rat_pow(a, static_cast<long>(L));
    Rational apow(1);
    for (unsigned long k = 1; k <= L; ++k) {
        BigInt f, h;
        mpz_fdiv_q_2exp(f.get_mpz_t(), prev.get_mpz_t(), k);
        BigInt num = 2 * prev + pow2_int(k);
        mpz_fdiv_q_2exp(h.get_mpz_t(), num.get_mpz_t(), k + 1);
        const BigInt term =
            int_pow(f + 1, r) * int_pow(h, t) - int_pow(h, r) * int_pow(f, t);
        if (term != 0) acc += apow * Rational(term);
        apow *= a;
    }
    return acc;
}

// The same difference through the closed expression: geometric remainders,
// the S^(0,i) block, and the resonance sum over the decomposition of n-1.
inline Rational y_prop(unsigned r, unsigned t, const BigInt& n, const Rational& a) {
    if (n < 2) throw std::invalid_argument("y_prop: n must be >= 2");
    if (a.is_zero()) throw std::invalid_argument("y_prop: a must be nonzero");
    const BinDecomp D(n - 1);
    const unsigned long qs = D.top_exponent();
    const auto ell = ell_of(a, t);
    const int dl = delta_ell(a, r, t);

    const Rational aq = rat_pow(a, static_cast<long>(qs));
    Rational acc = aq;

    const Rational prev_r(n - 1);
    for (unsigned l = 0; l < r; ++l) {
        if (ell && static_cast<long>(l) == *ell) continue;
        acc += Rational(binomial(BigInt(r), BigInt(l))) /
               (rat_pow2(static_cast<long>(t) + l) - a) *
               (rat_pow(prev_r, static_cast<long>(t) + l) - aq);
    }

    for (unsigned i = 0; i < r + t; ++i) {
        Rational coef = rat_pow2(-static_cast<long>(i)) *
                            Rational(binomial(BigInt(r + t), BigInt(i))) -
                        rat_pow2(1 - static_cast<long>(i)) *
                            Rational(binomial(BigInt(r), BigInt(i) - BigInt(t)));
        const long l_lo = std::max(0L, static_cast<long>(i) - static_cast<long>(t) + 1);
        for (long l = l_lo; l < static_cast<long>(r); ++l) {
            if (ell && l == *ell) continue;
            const BigInt b = binomial(BigInt(r), BigInt(l)) * binomial(BigInt(t) + l, BigInt(i));
            if (b == 0) continue;
            coef -= Rational(b) / (rat_pow2(static_cast<long>(t) + l) - a);
        }
        if (!coef.is_zero()) acc += coef * s_sum(0, i, D, a);
    }

    if (dl) {
        const long te = static_cast<long>(t) + *ell;
        Rational js(0);
        for (unsigned long j = 0; j < D.weight(); ++j)
            js += rat_pow(Rational(D.M(j + 1)), te) *
                  Rational(BigInt(D.q(j + 1)) - BigInt(D.q(j)));
        acc += Rational(binomial(BigInt(r), BigInt(*ell))) / a * js;
    }
    return acc;
}

} // namespace dnc
