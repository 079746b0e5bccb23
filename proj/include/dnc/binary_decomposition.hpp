#pragma once

// Binary decomposition n = sum_j 2^{q_j}, q_1 < ... < q_s, together with the
// suffix sums M_i = sum_{j>=i} 2^{q_j} and the boundary conventions q_0 = 0,
// M_0 = n+1, M_i = 0 for i > s. Also the exact power-of-two classification
// of a rational coefficient and Thompson's rounding identity.

#include <climits>
#include <optional>
#include <stdexcept>
#include <vector>

#include "dnc/rational.hpp"

namespace dnc {

class BinDecomp {
public:
    explicit BinDecomp(const BigInt& n) : n_(n) {
        if (n < 1) throw std::invalid_argument("decompose: n must be >= 1");
        for (mp_bitcnt_t pos = mpz_scan1(n.get_mpz_t(), 0); pos != ULONG_MAX;
             pos = mpz_scan1(n.get_mpz_t(), pos + 1))
            q_.push_back(pos);
        M_.resize(q_.size());
        BigInt acc(0);
        for (std::size_t i = q_.size(); i-- > 0;) {
            acc += pow2_int(q_[i]);
            M_[i] = acc;
        }
    }

    const BigInt& n() const { return n_; }
    unsigned long weight() const { return q_.size(); } // s_n

    // 1-based, with q_0 = 0
    unsigned long q(std::size_t i) const {
        if (i == 0) return 0;
        if (i > q_.size()) throw std::out_of_range("q_i: i > s_n");
        return q_[i - 1];
    }

    // 1-based, with M_0 = n+1 and M_i = 0 past the top bit
    BigInt M(std::size_t i) const {
        if (i == 0) return n_ + 1;
        if (i > M_.size()) return BigInt(0);
        return M_[i - 1];
    }

    unsigned long top_exponent() const { return q_.back(); } // q_{s_n} = floor(log2 n)

private:
    BigInt n_;
    std::vector<unsigned long> q_;
    std::vector<BigInt> M_;
};

inline BinDecomp decompose(const BigInt& n) { return BinDecomp(n); }

struct PowerOfTwoClass {
    bool is_power = false;
    long exponent = 0; // a = 2^exponent when is_power
};

// Exact test on the reduced fraction: 2^j has a one-bit numerator and unit
// denominator (j >= 0), or unit numerator and one-bit denominator (j < 0).
inline PowerOfTwoClass classify_power_of_two(const Rational& a) {
    if (a.sign() <= 0) return {};
    BigInt num = a.numerator(), den = a.denominator();
    if (den == 1 && mpz_popcount(num.get_mpz_t()) == 1)
        return {true, static_cast<long>(bit_length(num) - 1)};
    if (num == 1 && mpz_popcount(den.get_mpz_t()) == 1)
        return {true, -static_cast<long>(bit_length(den) - 1)};
    return {};
}

// ell_{a,t} = log2(a) - t, present only when a is an exact power of two
inline std::optional<long> ell_of(const Rational& a, unsigned long t) {
    if (a.is_zero()) throw std::invalid_argument("ell_of: a must be nonzero");
    PowerOfTwoClass p = classify_power_of_two(a);
    if (!p.is_power) return std::nullopt;
    return p.exponent - static_cast<long>(t);
}

// 1 iff r > 0 and ell_{a,t} is defined with value in {0,...,r-1}
inline int delta_ell(const Rational& a, unsigned long r, unsigned long t) {
    if (r == 0) return 0;
    auto ell = ell_of(a, t);
    return (ell && *ell >= 0 && *ell < static_cast<long>(r)) ? 1 : 0;
}

// floor((n + sum b_i 2^i) / 2^{m+1}) for a bit word b_m...b_0 (given
// most-significant first); equals the composition of phi_0 = floor(./2),
// phi_1 = ceil(./2) applied right to left.
inline BigInt thompson_phi(const std::vector<int>& bits, const BigInt& n) {
    if (bits.empty()) throw std::invalid_argument("thompson_phi: empty bit word");
    BigInt num = n;
    for (std::size_t pos = 0; pos < bits.size(); ++pos)
        if (bits[pos]) num += pow2_int(bits.size() - 1 - pos);
    BigInt r;
    mpz_fdiv_q_2exp(r.get_mpz_t(), num.get_mpz_t(), bits.size());
    return r;
}

} // namespace dnc
