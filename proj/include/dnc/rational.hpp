#pragma once

// Exact scalar types: arbitrary-precision integers (GMP) and rationals kept
// in lowest terms. Every quantity in this library is one of these two.

#include <gmpxx.h>

#include <cstdlib>
#include <stdexcept>
#include <string>
#include <utility>

namespace dnc {

using BigInt = mpz_class;

inline BigInt pow2_int(unsigned long e) {
    BigInt r;
    mpz_ui_pow_ui(r.get_mpz_t(), 2, e);
    return r;
}

inline BigInt int_pow(const BigInt& base, unsigned long e) {
    BigInt r;
    mpz_pow_ui(r.get_mpz_t(), base.get_mpz_t(), e);
    return r;
}

// bit length of n > 0; floor(log2 n) is bit_length(n) - 1
inline unsigned long bit_length(const BigInt& n) {
    if (n <= 0) throw std::invalid_argument("bit_length: n must be positive");
    return mpz_sizeinbase(n.get_mpz_t(), 2);
}

inline BigInt parse_bigint(const std::string& s) {
    if (s.empty()) throw std::invalid_argument("empty integer literal");
    std::size_t i = (s[0] == '-') ? 1 : 0;
    if (i == s.size()) throw std::invalid_argument("bad integer literal: " + s);
    for (; i < s.size(); ++i)
        if (s[i] < '0' || s[i] > '9')
            throw std::invalid_argument("bad integer literal: " + s);
    return BigInt(s, 10);
}

class Rational {
public:
    Rational() : v_(0) {}
    Rational(long n) : v_(n) {}          // NOLINT: implicit by design
    Rational(const BigInt& n) : v_(n) {} // NOLINT
    Rational(const BigInt& num, const BigInt& den) {
        if (den == 0) throw std::domain_error("rational with zero denominator");
        v_ = mpq_class(num, den);
        v_.canonicalize();
    }
    Rational(long num, long den) : Rational(BigInt(num), BigInt(den)) {}

    // "p" or "p/q", optional leading minus, no whitespace
    static Rational parse(const std::string& s) {
        auto slash = s.find('/');
        if (slash == std::string::npos) return Rational(parse_bigint(s));
        BigInt num = parse_bigint(s.substr(0, slash));
        std::string d = s.substr(slash + 1);
        if (d.empty() || d[0] == '-')
            throw std::invalid_argument("bad rational literal: " + s);
        BigInt den = parse_bigint(d);
        if (den == 0) throw std::domain_error("bad rational literal (zero denominator): " + s);
        return Rational(num, den);
    }

    std::string str() const { return v_.get_str(); }

    BigInt numerator() const { return BigInt(v_.get_num()); }
    BigInt denominator() const { return BigInt(v_.get_den()); }

    bool is_zero() const { return sgn(v_) == 0; }
    bool is_integer() const { return v_.get_den() == 1; }
    int sign() const { return sgn(v_); }

    Rational& operator+=(const Rational& o) { v_ += o.v_; return *this; }
    Rational& operator-=(const Rational& o) { v_ -= o.v_; return *this; }
    Rational& operator*=(const Rational& o) { v_ *= o.v_; return *this; }
    Rational& operator/=(const Rational& o) {
        if (o.is_zero()) throw std::domain_error("rational division by zero");
        v_ /= o.v_;
        return *this;
    }

    friend Rational operator+(Rational a, const Rational& b) { a += b; return a; }
    friend Rational operator-(Rational a, const Rational& b) { a -= b; return a; }
    friend Rational operator*(Rational a, const Rational& b) { a *= b; return a; }
    friend Rational operator/(Rational a, const Rational& b) { a /= b; return a; }
    friend Rational operator-(const Rational& a) { Rational r; r.v_ = -a.v_; return r; }

    friend bool operator==(const Rational& a, const Rational& b) { return a.v_ == b.v_; }
    friend bool operator!=(const Rational& a, const Rational& b) { return a.v_ != b.v_; }
    friend bool operator<(const Rational& a, const Rational& b) { return a.v_ < b.v_; }
    friend bool operator<=(const Rational& a, const Rational& b) { return a.v_ <= b.v_; }
    friend bool operator>(const Rational& a, const Rational& b) { return a.v_ > b.v_; }
    friend bool operator>=(const Rational& a, const Rational& b) { return a.v_ >= b.v_; }

private:
    mpq_class v_;
};

// Exact integer power with the 0^0 = 1 convention used throughout.
inline Rational rat_pow(const Rational& base, long e) {
    if (e == 0) return Rational(1);
    if (base.is_zero()) {
        if (e < 0) throw std::domain_error("0 raised to a negative power");
        return Rational(0);
    }
    unsigned long mag = (e < 0) ? static_cast<unsigned long>(-(e + 1)) + 1
                                : static_cast<unsigned long>(e);
    BigInt num = int_pow(base.numerator(), mag);
    BigInt den = int_pow(base.denominator(), mag);
    if (e < 0) std::swap(num, den); // ctor re-canonicalizes the sign
    return Rational(num, den);
}

// 2^e for signed e, as a rational
inline Rational rat_pow2(long e) {
    if (e >= 0) return Rational(pow2_int(static_cast<unsigned long>(e)));
    return Rational(BigInt(1), pow2_int(static_cast<unsigned long>(-e)));
}

} // namespace dnc
