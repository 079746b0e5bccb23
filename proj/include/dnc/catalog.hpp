#pragma once

// Named recurrence instances with published (or newly derived) closed forms,
// used as ground truth against the solver, plus the transformation that
// turns an OEIS-style pair a_{2n} = C a_n + C a_{n-1} + P(n),
// a_{2n+1} = 2C a_n + Q(n) into a single half-recurrence on x_n = a_{n-1}.

#include <functional>
#include <initializer_list>
#include <stdexcept>
#include <string>
#include <tuple>
#include <vector>

#include "dnc/binary_decomposition.hpp"
#include "dnc/solver.hpp"

namespace dnc {

// dense univariate polynomial, coefficient of x^k at index k
struct Polynomial1 {
    std::vector<Rational> c;

    Polynomial1() = default;
    explicit Polynomial1(std::vector<Rational> coeffs) : c(std::move(coeffs)) { trim(); }

    void trim() {
        while (!c.empty() && c.back().is_zero()) c.pop_back();
    }

    std::size_t degree_bound() const { return c.size(); }

    Rational eval(const Rational& x) const {
        Rational acc(0);
        for (std::size_t k = c.size(); k-- > 0;) acc = acc * x + c[k];
        return acc;
    }

    // coefficients of p(x - 1)
    Polynomial1 shift_down() const {
        std::vector<Rational> out(c.size(), Rational(0));
        for (std::size_t k = 0; k < c.size(); ++k) {
            if (c[k].is_zero()) continue;
            for (std::size_t j = 0; j <= k; ++j) {
                Rational term = c[k] * Rational(binomial(BigInt(k), BigInt(j)));
                if ((k - j) % 2 == 1) term = -term;
                out[j] += term;
            }
        }
        return Polynomial1(std::move(out));
    }
};

// Expand Q(y-1) + (x-y)(P(y) - Q(y-1)) into the ceil/floor monomial basis.
// x1 is the OEIS pair's a_0.
inline Recurrence stephan_transform(const Rational& C, const Polynomial1& P,
                                    const Polynomial1& Q, const Rational& a0) {
    const Polynomial1 Qs = Q.shift_down();
    std::size_t deg = std::max(P.degree_bound(), Qs.degree_bound());
    std::vector<Rational> R(deg, Rational(0)); // P(y) - Q(y-1)
    for (std::size_t k = 0; k < deg; ++k) {
        if (k < P.c.size()) R[k] += P.c[k];
        if (k < Qs.c.size()) R[k] -= Qs.c[k];
    }

    TollPolynomial toll;
    for (std::size_t k = 0; k < Qs.c.size(); ++k) toll.add(0, static_cast<unsigned>(k), Qs.c[k]);
    for (std::size_t k = 0; k < deg; ++k) {
        if (R[k].is_zero()) continue;
        toll.add(1, static_cast<unsigned>(k), R[k]);
        toll.add(0, static_cast<unsigned>(k) + 1, -R[k]);
    }
    return Recurrence(C, std::move(toll), a0);
}

struct CatalogEntry {
    std::string name;
    std::string oeis_id;  // empty when there is no matching OEIS entry
    int oeis_shift;       // x_n corresponds to OEIS a_{n - shift}
    Recurrence recurrence;
    std::function<Rational(const BigInt&)> closed_form;
    std::string note;
};

namespace detail {

inline TollPolynomial make_toll(std::initializer_list<std::tuple<unsigned, unsigned, Rational>> terms) {
    TollPolynomial p;
    for (const auto& [r, t, c] : terms) p.add(r, t, c);
    return p;
}

inline std::vector<CatalogEntry> build_catalog() {
    std::vector<CatalogEntry> entries;
    const Rational half(1, 2), quarter(1, 4);

    entries.push_back({"sackin", "A003314", 0,
        Recurrence(Rational(1), make_toll({{1, 0, Rational(1)}, {0, 1, Rational(1)}}), Rational(0)),
        [](const BigInt& n) {
            BinDecomp D(n);
            const unsigned long qs = D.top_exponent();
            return Rational((BigInt(qs) + 2) * n - pow2_int(qs + 1));
        },
        "minimum Sackin index of a bifurcating tree"});

    entries.push_back({"colless", "A296062", 0,
        Recurrence(Rational(1), make_toll({{1, 0, Rational(1)}, {0, 1, Rational(-1)}}), Rational(0)),
        [](const BigInt& n) {
            BinDecomp D(n);
            const unsigned long s = D.weight(), qs = D.top_exponent();
            BigInt acc(0);
            for (unsigned long i = 1; i + 1 <= s; ++i)
                acc += pow2_int(D.q(i)) *
                       (BigInt(qs) - BigInt(D.q(i)) - 2 * (BigInt(s) - BigInt(i) - 1));
            return Rational(acc);
        },
        "minimum Colless index of a bifurcating tree"});

    entries.push_back({"nsquared", "", 0,
        Recurrence(Rational(2), make_toll({{0, 1, Rational(1)}, {1, 0, Rational(-1)}}), Rational(1)),
        [](const BigInt& n) { return Rational(n * n); },
        "the squares, as a divide-and-conquer instance"});

    entries.push_back({"lebesgue", "", 0,
        Recurrence(half, make_toll({{1, 0, half}, {0, 1, -half}}), Rational(1)),
        [](const BigInt& n) {
            BinDecomp D(n);
            Rational acc(BigInt(D.weight()));
            for (unsigned long i = 1; i <= D.weight(); ++i)
                acc -= rat_pow2(-static_cast<long>(D.q(i))) * Rational(n - D.M(i));
            return acc;
        },
        "Lebesgue constants of the Walsh system"});

    entries.push_back({"a005536", "A005536", 1,
        Recurrence(Rational(-1), make_toll({{0, 1, Rational(1)}}), Rational(0)),
        [](const BigInt& n) {
            BinDecomp D(n);
            const unsigned long s = D.weight();
            // suffix sums of (-1)^{q_j}
            std::vector<long> suf(s + 2, 0);
            for (unsigned long i = s; i >= 1; --i)
                suf[i] = suf[i + 1] + (D.q(i) % 2 == 0 ? 1 : -1);
            BigInt acc(0);
            for (unsigned long i = 1; i <= s; ++i) {
                long inner = (D.q(i) % 2 == 0 ? 0 : 2) + 4 * suf[i + 1];
                acc += pow2_int(D.q(i)) * inner;
            }
            return Rational(acc, BigInt(4));
        },
        "OEIS A005536 via the Stephan half-recurrence"});

    entries.push_back({"a087733", "A087733", 1,
        Recurrence(Rational(-1), make_toll({{1, 1, Rational(1)}}), Rational(0)),
        [](const BigInt& n) {
            BinDecomp D(n);
            const unsigned long s = D.weight();
            std::vector<long> suf(s + 2, 0);
            for (unsigned long i = s; i >= 1; --i)
                suf[i] = suf[i + 1] + (D.q(i) % 2 == 0 ? 1 : -1);
            BigInt neg2(0), cross(0);
            for (unsigned long i = 1; i <= s; ++i) {
                BigInt p = pow2_int(D.q(i));
                neg2 += (D.q(i) % 2 == 0) ? p : -p;
                if (i + 1 <= s) cross += p * suf[i + 1];
            }
            return Rational(n * n - neg2, BigInt(6)) + Rational(2 * cross, BigInt(3));
        },
        "OEIS A087733 via the Stephan half-recurrence"});

    entries.push_back({"cophenetic", "A174605", 0,
        Recurrence(Rational(1),
                   make_toll({{2, 0, half}, {1, 0, -half}, {0, 2, half}, {0, 1, -half}}),
                   Rational(0)),
        [](const BigInt& n) {
            BinDecomp D(n);
            Rational acc(binomial(n, BigInt(2)) - BigInt(D.weight()) * n);
            for (unsigned long i = 1; i <= D.weight(); ++i)
                acc -= rat_pow2(static_cast<long>(D.q(i)) - 1) *
                       Rational(BigInt(D.q(i)) - 2 * BigInt(i));
            return acc;
        },
        "minimum total cophenetic index of a bifurcating tree"});

    entries.push_back({"rqi", "A300445", 0,
        Recurrence(Rational(1),
                   make_toll({{1, 1, quarter}, {2, 1, -quarter}, {1, 2, -quarter}, {2, 2, quarter}}),
                   Rational(0)),
        [](const BigInt& n) {
            BinDecomp D(n);
            BigInt poly = 9 * n * n * n * n - 42 * n * n * n + 63 * n * n - 6 * n;
            BigInt si(0), sm(0);
            for (unsigned long i = 1; i <= D.weight(); ++i) {
                // M_i 2^{-q_i} = floor(n / 2^{q_i}), an integer
                BigInt f;
                mpz_fdiv_q_2exp(f.get_mpz_t(), D.M(i).get_mpz_t(), D.q(i));
                si += (1 + f) * (1 + 3 * f);
                sm += D.M(i) * (1 + f) * (1 + f);
            }
            return Rational(poly + 6 * n * si - 18 * sm, BigInt(504));
        },
        "maximum rooted quartet index of a bifurcating tree"});

    entries.push_back({"a006581", "A006581", 1,
        Recurrence(Rational(2), make_toll({{1, 1, Rational(1)}, {0, 2, Rational(-1)}}), Rational(0)),
        [](const BigInt& n) {
            BinDecomp D(n);
            BigInt head(0), tail(0);
            for (unsigned long i = 1; i <= D.weight(); ++i) {
                head += BigInt(D.q(i)) * pow2_int(D.q(i)) *
                        (n - pow2_int(D.q(i)) - 2 * D.M(i + 1));
                tail += (n - D.M(i)) * D.M(i + 1);
            }
            return Rational(head, BigInt(2)) - Rational(tail);
        },
        "OEIS A006581 via the Stephan half-recurrence"});

    entries.push_back({"a006583", "A006583", 1,
        Recurrence(Rational(2),
                   make_toll({{1, 0, Rational(2)}, {0, 1, Rational(4)}, {0, 0, Rational(-6)},
                              {1, 1, Rational(-1)}, {0, 2, Rational(1)}}),
                   Rational(0)),
        [](const BigInt& n) {
            BinDecomp D(n);
            BigInt head(0), tail(0);
            for (unsigned long i = 1; i <= D.weight(); ++i) {
                head += BigInt(D.q(i)) * pow2_int(D.q(i)) *
                        (n - pow2_int(D.q(i)) - 2 * D.M(i + 1));
                tail += (n - D.M(i)) * D.M(i + 1);
            }
            Rational sigma1 = Rational(head, BigInt(2)) - Rational(tail);
            return Rational(2 * binomial(n - 1, BigInt(2))) - sigma1;
        },
        "OEIS A006583 via the Stephan half-recurrence"});

    return entries;
}

} // namespace detail

inline const std::vector<CatalogEntry>& catalog() {
    static const std::vector<CatalogEntry> entries = detail::build_catalog();
    return entries;
}

inline const CatalogEntry* catalog_find(const std::string& name) {
    for (const auto& e : catalog())
        if (e.name == name) return &e;
    return nullptr;
}

inline std::string catalog_names() {
    std::string out;
    for (const auto& e : catalog()) {
        if (!out.empty()) out += ", ";
        out += e.name;
    }
    return out;
}

inline Rational catalog_eval(const std::string& name, const BigInt& n) {
    if (n < 1) throw std::invalid_argument("catalog_eval: n must be >= 1");
    const CatalogEntry* e = catalog_find(name);
    if (!e)
        throw std::invalid_argument("unknown catalog entry '" + name +
                                    "' (available: " + catalog_names() + ")");
    return e->closed_form(n);
}

} // namespace dnc
