// Command-line front end: parse a recurrence in the text formats, evaluate
// the closed form at one n or over a range, run the closed-form-vs-oracle
// verification sweep, evaluate catalog entries, and spot-check the defining
// recurrence at random big n. All numeric I/O is decimal strings; exit codes
// are 0 (ok / PASS), 1 (verification failure), 2 (usage error).

#include <cstdlib>
#include <iostream>
#include <random>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "dnc/dnc.hpp"

namespace {

using dnc::BigInt;
using dnc::Rational;
using dnc::Recurrence;
using dnc::TollPolynomial;

BigInt parse_n(const std::string& text) {
    BigInt n = dnc::parse_bigint(text);
    if (n < 1) throw std::invalid_argument("n must be a positive integer, got '" + text + "'");
    return n;
}

Recurrence parse_recurrence(const std::string& a_text, const std::string& poly_text,
                            const std::string& x1_text) {
    return Recurrence(Rational::parse(a_text), TollPolynomial::parse(poly_text),
                      Rational::parse(x1_text));
}

int run_solve(const std::string& a, const std::string& poly, const std::string& x1,
              const std::string& n_text) {
    Recurrence rec = parse_recurrence(a, poly, x1);
    std::cout << dnc::solve(rec, parse_n(n_text)).str() << "\n";
    return 0;
}

int run_sequence(const std::string& a, const std::string& poly, const std::string& x1,
                 const std::string& to_text, const std::string& format) {
    Recurrence rec = parse_recurrence(a, poly, x1);
    BigInt to = parse_n(to_text);
    if (!to.fits_ulong_p()) throw std::invalid_argument("sequence: --to is too large to enumerate");
    auto values = dnc::solve_sequence(rec, to.get_ui());
    if (format == "plain") {
        for (const auto& v : values) std::cout << v.str() << "\n";
    } else if (format == "csv") {
        for (std::size_t i = 0; i < values.size(); ++i)
            std::cout << (i + 1) << "," << values[i].str() << "\n";
    } else if (format == "json") {
        std::cout << "[";
        for (std::size_t i = 0; i < values.size(); ++i) {
            if (i) std::cout << ",";
            std::cout << "{\"n\":\"" << (i + 1) << "\",\"value\":\"" << values[i].str() << "\"}";
        }
        std::cout << "]\n";
    } else {
        throw std::invalid_argument("unknown format '" + format + "'");
    }
    return 0;
}

// closed form against the memoized recursion, over the default grid
int run_verify(const std::string& to_text) {
    BigInt to_big = parse_n(to_text);
    if (!to_big.fits_ulong_p()) throw std::invalid_argument("verify: --to is too large");
    const unsigned long to = to_big.get_ui();

    const std::vector<Rational> a_grid = {
        Rational(1), Rational(-1), Rational(1, 2), Rational(-1, 2), Rational(2),
        Rational(4), Rational(3),  Rational(2, 3), Rational(-2)};
    const std::vector<Rational> x1_grid = {Rational(0), Rational(1)};

    unsigned long checked = 0;
    for (const auto& a : a_grid) {
        for (unsigned rt = 0; rt <= 3; ++rt) {
            for (unsigned r = 0; r <= rt; ++r) {
                const unsigned t = rt - r;
                for (const auto& x1 : x1_grid) {
                    TollPolynomial poly;
                    poly.set(r, t, Rational(1));
                    Recurrence rec(a, poly, x1);
                    dnc::MemoOracle oracle(rec);
                    for (unsigned long n = 1; n <= to; ++n) {
                        Rational closed = dnc::solve(rec, BigInt(n));
                        const Rational& truth = oracle.eval(BigInt(n));
                        ++checked;
                        if (closed != truth) {
                            std::cout << "FAIL at a=" << a.str() << " r=" << r << " t=" << t
                                      << " x1=" << x1.str() << " n=" << n
                                      << ": closed=" << closed.str()
                                      << " oracle=" << truth.str() << "\n";
                            return 1;
                        }
                    }
                }
            }
        }
    }
    std::cout << "PASS " << checked
              << " evaluations (a-grid x monomials r+t<=3 x x1 in {0,1}, n in [1," << to << "])\n";
    return 0;
}

int run_catalog(const std::string& name, const std::string& n_text) {
    std::cout << dnc::catalog_eval(name, parse_n(n_text)).str() << "\n";
    return 0;
}

int run_list() {
    for (const auto& e : dnc::catalog()) {
        std::cout << e.name << "\t" << (e.oeis_id.empty() ? "-" : e.oeis_id) << "\t"
                  << "a=" << e.recurrence.a.str() << "\tpoly=\"" << e.recurrence.poly.str()
                  << "\"\tx1=" << e.recurrence.x1.str() << "\toffset=" << e.oeis_shift << "\t"
                  << e.note << "\n";
    }
    return 0;
}

// x_n = a x_ceil + a x_floor + P at random n too big for any direct recursion
int run_recurrence_check(const std::string& a, const std::string& poly, const std::string& x1,
                         unsigned bits, unsigned count, unsigned long long seed) {
    if (bits < 2) throw std::invalid_argument("recurrence-check: --bits must be >= 2");
    Recurrence rec = parse_recurrence(a, poly, x1);
    std::mt19937_64 rng(seed);

    for (unsigned i = 0; i < count; ++i) {
        BigInt n = dnc::pow2_int(bits - 1); // top bit set, exactly `bits` bits
        for (unsigned b = 0; b + 1 < bits; ++b)
            if (rng() & 1) n += dnc::pow2_int(b);
        BigInt up = (n + 1) >> 1, down = n >> 1;
        Rational lhs = dnc::solve(rec, n);
        Rational rhs = rec.a * dnc::solve(rec, up) + rec.a * dnc::solve(rec, down) +
                       rec.poly.eval(up, down);
        if (lhs != rhs) {
            std::cout << "FAIL at n=" << n.get_str() << ": x_n=" << lhs.str()
                      << " but a*x_ceil + a*x_floor + P = " << rhs.str() << "\n";
            return 1;
        }
    }
    std::cout << "PASS " << count << " random n of " << bits << " bits (seed " << seed << ")\n";
    return 0;
}

} // namespace

int main(int argc, char** argv) {
    if (const char* env = std::getenv("DNC_BERNOULLI_CACHE")) {
        char* end = nullptr;
        unsigned long bound = std::strtoul(env, &end, 10);
        if (end && *end == '\0') dnc::bernoulli_reserve(bound);
    }

    CLI::App app{"exact closed-form solver for x_n = a*x_ceil(n/2) + a*x_floor(n/2) + P(ceil(n/2),floor(n/2))"};
    app.require_subcommand(1);

    std::string a_text = "1", poly_text, x1_text = "0", n_text, to_text = "256", name, format = "plain";
    unsigned bits = 128, count = 100;
    unsigned long long seed = 0;

    auto* solve_cmd = app.add_subcommand("solve", "evaluate the closed form at one n");
    solve_cmd->add_option("--a", a_text, "coefficient a (rational, nonzero)")->required();
    solve_cmd->add_option("--poly", poly_text, "toll polynomial, e.g. \"1,0:1;0,1:1\"");
    solve_cmd->add_option("--x1", x1_text, "initial condition x_1 (rational)");
    solve_cmd->add_option("--n", n_text, "index n (positive decimal, any size)")->required();

    auto* seq_cmd = app.add_subcommand("sequence", "print x_1..x_to");
    seq_cmd->add_option("--a", a_text)->required();
    seq_cmd->add_option("--poly", poly_text);
    seq_cmd->add_option("--x1", x1_text);
    seq_cmd->add_option("--to", to_text, "last index")->required();
    seq_cmd->add_option("--format", format, "plain | csv | json");

    auto* verify_cmd = app.add_subcommand("verify", "closed form vs memoized recursion sweep");
    verify_cmd->add_option("--to", to_text, "check n in [1,to] (default 256)");

    auto* cat_cmd = app.add_subcommand("catalog", "evaluate a named instance");
    cat_cmd->add_option("--name", name, "entry name (see `list`)")->required();
    cat_cmd->add_option("--n", n_text)->required();

    app.add_subcommand("list", "list catalog entries");

    auto* check_cmd = app.add_subcommand("recurrence-check",
                                         "three-point recurrence identity at random big n");
    check_cmd->add_option("--a", a_text)->required();
    check_cmd->add_option("--poly", poly_text);
    check_cmd->add_option("--x1", x1_text);
    check_cmd->add_option("--bits", bits, "bit length of sampled n (default 128)");
    check_cmd->add_option("--count", count, "number of samples (default 100)");
    check_cmd->add_option("--seed", seed, "RNG seed (default 0)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    try {
        if (app.got_subcommand("solve")) return run_solve(a_text, poly_text, x1_text, n_text);
        if (app.got_subcommand("sequence"))
            return run_sequence(a_text, poly_text, x1_text, to_text, format);
        if (app.got_subcommand("verify")) return run_verify(to_text);
        if (app.got_subcommand("catalog")) return run_catalog(name, n_text);
        if (app.got_subcommand("list")) return run_list();
        if (app.got_subcommand("recurrence-check"))
            return run_recurrence_check(a_text, poly_text, x1_text, bits, count, seed);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 2;
}
