#pragma once

// The auxiliary sums that connect the solution to the binary decomposition:
//
//   S^(d,m)_n     = sum_{j=1}^{s_n-1} q_j^d (2^-m a)^{q_j} M_{j+1}^m
//   alpha^(d,m)_n = sum_{k=1}^{n-1} S^(d,m)_k          (definitional oracle)
//   gamma^(d,p,m)_l = sum_{k=1}^{2^l-1} sum_{i=1}^{s_k} q_i^d (2^-m a)^{q_i} M_{i+1}^p
//
// plus their closed forms. gamma's inner sum runs through i = s_k, where
// M_{s_k+1} = 0 and 0^0 = 1 makes the p = 0 term survive.

#include <map>
#include <stdexcept>
#include <utility>

#include "dnc/binary_decomposition.hpp"
#include "dnc/exact_arith.hpp"
#include "dnc/rational.hpp"

namespace dnc {

// q^d with 0^0 = 1
inline Rational exp_pow(unsigned long q, unsigned d) {
    if (d == 0) return Rational(1);
    if (d == 1) return Rational(BigInt(q));
    return Rational(int_pow(BigInt(q), d));
}

inline Rational s_sum(unsigned d, unsigned m, const BinDecomp& D, const Rational& a) {
    const Rational base = a * rat_pow2(-static_cast<long>(m));
    Rational acc(0);
    for (std::size_t j = 1; j + 1 <= D.weight(); ++j)
        acc += exp_pow(D.q(j), d) * rat_pow(base, static_cast<long>(D.q(j))) *
               rat_pow(Rational(D.M(j + 1)), m);
    return acc;
}

inline Rational s_sum(unsigned d, unsigned m, const BigInt& n, const Rational& a) {
    return s_sum(d, m, BinDecomp(n), a);
}

// alpha by its definition; test oracle, any d.
inline Rational alpha_ref(unsigned d, unsigned m, const BigInt& n, const Rational& a) {
    if (n < 1) throw std::invalid_argument("alpha_ref: n must be >= 1");
    Rational acc(0);
    for (BigInt k = 1; k < n; ++k) acc += s_sum(d, m, BinDecomp(k), a);
    return acc;
}

// Single combined closed form (valid for every m >= 0; the T(d,q_s,2a)
// correction fires only at m = 0):
//
//   alpha^(d,m)_n = 1/(2(m+1)) sum_{i=1}^{s} sum_{j=0}^{m} C(m+1,j) B_j 2^j
//                     M_i^{m+1-j} (T(d,q_i,a 2^{j-m}) - T(d,q_{i-1},a 2^{j-m}))
//                 + sum_{i=1}^{s-1} q_i^d (a 2^-m)^{q_i} (n - M_i) M_{i+1}^m
//                 - T(d,q_s,2a) [m = 0]
inline Rational alpha_closed(unsigned d, unsigned m, const BinDecomp& D, const Rational& a) {
    if (d > 1) throw std::invalid_argument("alpha_closed: only d = 0,1 supported");
    if (a.is_zero()) throw std::invalid_argument("alpha_closed: a must be nonzero");
    const unsigned long s = D.weight();

    Rational head(0);
    for (unsigned j = 0; j <= m; ++j) {
        const BigInt bin = binomial(BigInt(m + 1), BigInt(j));
        const Rational bj = bernoulli(j);
        if (bj.is_zero()) continue;
        const Rational weight = Rational(bin) * bj * rat_pow2(j);
        const Rational x = a * rat_pow2(static_cast<long>(j) - static_cast<long>(m));
        Rational inner(0);
        Rational t_prev(0); // T(d, q_0, x) = T(d, 0, x) = 0
        for (unsigned long i = 1; i <= s; ++i) {
            const Rational t_cur = t_closed(d, D.q(i), x);
            inner += rat_pow(Rational(D.M(i)), static_cast<long>(m) + 1 - static_cast<long>(j)) *
                     (t_cur - t_prev);
            t_prev = t_cur;
        }
        head += weight * inner;
    }
    Rational result = head / Rational(2 * (static_cast<long>(m) + 1));

    const Rational base = a * rat_pow2(-static_cast<long>(m));
    for (unsigned long i = 1; i + 1 <= s; ++i)
        result += exp_pow(D.q(i), d) * rat_pow(base, static_cast<long>(D.q(i))) *
                  Rational(D.n() - D.M(i)) * rat_pow(Rational(D.M(i + 1)), m);

    if (m == 0) result -= t_closed(d, D.top_exponent(), 2 * a);
    return result;
}

inline Rational alpha_closed(unsigned d, unsigned m, const BigInt& n, const Rational& a) {
    return alpha_closed(d, m, BinDecomp(n), a);
}

// Memoizes alpha^(d,m) for one fixed (n, a); the solver asks for the same
// handful of (d,m) pairs across monomials.
class AlphaCache {
public:
    AlphaCache(const BinDecomp& D, const Rational& a) : D_(&D), a_(a) {}

    const Rational& get(unsigned d, unsigned m) {
        auto key = std::make_pair(d, m);
        auto it = memo_.find(key);
        if (it == memo_.end())
            it = memo_.emplace(key, alpha_closed(d, m, *D_, a_)).first;
        return it->second;
    }

private:
    const BinDecomp* D_;
    Rational a_;
    std::map<std::pair<unsigned, unsigned>, Rational> memo_;
};

// gamma by its definition; test oracle, any d, requires p < m.
inline Rational gamma_ref(unsigned d, unsigned p, unsigned m, unsigned l, const Rational& a) {
    if (p >= m) throw std::invalid_argument("gamma: requires p < m");
    Rational acc(0);
    const Rational base = a * rat_pow2(-static_cast<long>(m));
    const BigInt top = pow2_int(l);
    for (BigInt k = 1; k < top; ++k) {
        BinDecomp D(k);
        for (unsigned long i = 1; i <= D.weight(); ++i)
            acc += exp_pow(D.q(i), d) * rat_pow(base, static_cast<long>(D.q(i))) *
                   rat_pow(Rational(D.M(i + 1)), p); // M_{s+1} = 0, 0^0 = 1
    }
    return acc;
}

//   gamma^(d,p,m)_l = a^{l-1} 2^{-(m-1)(l-1)+pl} / (p+1)
//                       * sum_{t=1}^{l-1} (l-t-1)^d (a^-1 2^{m-p-1})^t (B_{p+1}(2^t) - B_{p+1})
//                   + (a 2^{-(m-1)})^{l-1} (l-1)^d  [p = 0 and l > 0]
inline Rational gamma_closed(unsigned d, unsigned p, unsigned m, unsigned l, const Rational& a) {
    if (p >= m) throw std::invalid_argument("gamma: requires p < m");
    if (a.is_zero()) throw std::invalid_argument("gamma_closed: a must be nonzero");
    if (l == 0) return Rational(0);

    const long lm1 = static_cast<long>(l) - 1;
    Rational sum(0);
    const Rational ratio = rat_pow(a, -1) * rat_pow2(static_cast<long>(m) - static_cast<long>(p) - 1);
    const Rational b_const = bernoulli(p + 1);
    for (long t = 1; t <= lm1; ++t)
        sum += exp_pow(static_cast<unsigned long>(lm1 - t), d) * rat_pow(ratio, t) *
               (bernoulli_poly(p + 1, rat_pow2(t)) - b_const);

    Rational scale = rat_pow(a, lm1) *
                     rat_pow2(-(static_cast<long>(m) - 1) * lm1 + static_cast<long>(p) * static_cast<long>(l)) /
                     Rational(static_cast<long>(p) + 1);
    Rational result = scale * sum;
    if (p == 0)
        result += rat_pow(a * rat_pow2(-(static_cast<long>(m) - 1)), lm1) *
                  exp_pow(static_cast<unsigned long>(lm1), d);
    return result;
}

} // namespace dnc
