#pragma once

// Scalar-level building blocks: binomial coefficients, Bernoulli numbers and
// polynomials, Faulhaber power sums, and the weighted geometric sums
// T(d,n,x) = sum_{k=0}^{n-1} k^d x^k (with 0^0 = 1).

#include <mutex>
#include <stdexcept>
#include <vector>

#include "dnc/rational.hpp"

namespace dnc {

// C(n,k); 0 when k < 0 or k > n. Negative n is rejected, the formulas here
// never need it.
inline BigInt binomial(const BigInt& n, const BigInt& k) {
    if (n < 0) throw std::invalid_argument("binomial: negative n");
    if (k < 0 || k > n) return BigInt(0);
    if (!k.fits_ulong_p()) throw std::overflow_error("binomial: k too large");
    BigInt r;
    mpz_bin_ui(r.get_mpz_t(), n.get_mpz_t(), k.get_ui());
    return r;
}

inline BigInt binomial(long n, long k) { return binomial(BigInt(n), BigInt(k)); }

namespace detail {

struct BernoulliCache {
    std::mutex mu;
    std::vector<Rational> b; // b[m] = B_m, first kind

    // sum_{k=0}^{m} C(m+1,k) B_k = 0 for m >= 1, starting from B_0 = 1
    void extend(std::size_t upto) {
        if (b.empty()) b.push_back(Rational(1));
        while (b.size() <= upto) {
            std::size_t m = b.size();
            Rational acc(0);
            for (std::size_t k = 0; k < m; ++k)
                acc += Rational(binomial(BigInt(m + 1), BigInt(k))) * b[k];
            b.push_back(-acc / Rational(BigInt(m + 1)));
        }
    }

    static BernoulliCache& instance() {
        static BernoulliCache c;
        return c;
    }
};

inline constexpr std::size_t kBernoulliDefaultBound = 64;

} // namespace detail

// Precompute B_0..B_bound; safe to call concurrently.
inline void bernoulli_reserve(std::size_t bound) {
    auto& c = detail::BernoulliCache::instance();
    std::lock_guard<std::mutex> lock(c.mu);
    c.extend(bound);
}

inline Rational bernoulli(unsigned long m) {
    auto& c = detail::BernoulliCache::instance();
    std::lock_guard<std::mutex> lock(c.mu);
    if (c.b.size() <= m)
        c.extend(m < detail::kBernoulliDefaultBound ? detail::kBernoulliDefaultBound : m);
    return c.b[m];
}

// B_m(x) = sum_{k=0}^{m} C(m,k) B_k x^{m-k}
inline Rational bernoulli_poly(unsigned long m, const Rational& x) {
    Rational acc(0);
    for (unsigned long k = 0; k <= m; ++k)
        acc += Rational(binomial(BigInt(m), BigInt(k))) * bernoulli(k) *
               rat_pow(x, static_cast<long>(m - k));
    return acc;
}

// T(d,n,x) by its closed forms; only d = 0,1 ever appear in the solver.
inline Rational t_closed(unsigned d, unsigned long n, const Rational& x) {
    if (x.is_zero()) throw std::invalid_argument("t_closed: x must be nonzero");
    if (d > 1) throw std::invalid_argument("t_closed: only d = 0,1 have closed forms here");
    if (n == 0) return Rational(0);
    const Rational one(1);
    if (d == 0) {
        if (x == one) return Rational(BigInt(n));
        return (rat_pow(x, static_cast<long>(n)) - one) / (x - one);
    }
    if (x == one) return Rational(binomial(BigInt(n), BigInt(2)));
    Rational xn = rat_pow(x, static_cast<long>(n));
    Rational xm1 = x - one;
    return (Rational(BigInt(n)) * xn * xm1 - x * (xn - one)) / (xm1 * xm1);
}

// Literal sum, any d; test oracle for t_closed and the summation identities.
inline Rational t_ref(unsigned d, unsigned long n, const Rational& x) {
    if (x.is_zero()) throw std::invalid_argument("t_ref: x must be nonzero");
    Rational acc(0);
    Rational xk(1);
    for (unsigned long k = 0; k < n; ++k) {
        if (d == 0)
            acc += xk;
        else if (k != 0)
            acc += Rational(int_pow(BigInt(k), d)) * xk;
        xk *= x;
    }
    return acc;
}

// sum_{k=1}^{n-1} k^d via Faulhaber's formula, exact.
inline Rational faulhaber_sum(unsigned d, const BigInt& n) {
    if (n < 1) throw std::invalid_argument("faulhaber_sum: n must be >= 1");
    Rational acc(0);
    const Rational nr(n);
    for (unsigned j = 0; j <= d + 1; ++j)
        acc += Rational(binomial(BigInt(d + 1), BigInt(j))) * bernoulli(j) *
               rat_pow(nr, static_cast<long>(d + 1 - j));
    Rational tail = bernoulli(d + 1);
    if (d % 2 == 1) tail = -tail;
    return (acc + tail) / Rational(static_cast<long>(d) + 1);
}

} // namespace dnc
