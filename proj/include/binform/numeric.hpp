#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <stdexcept>
#include <string>

namespace binform {

/// Arbitrary-precision integer and rational scalars.  Rationals produced by
/// gmpxx arithmetic are always canonical (lowest terms, positive denominator),
/// which makes exact equality structural equality.
using Int = mpz_class;
using Rat = mpq_class;

class error : public std::runtime_error {
public:
    explicit error(const std::string& msg) : std::runtime_error(msg) {}
};

inline Rat make_rat(const Int& num, const Int& den) {
    if (den == 0) throw error("rational with zero denominator");
    Rat q(num, den);
    q.canonicalize();
    return q;
}

inline bool is_integer(const Rat& q) { return q.get_den() == 1; }

inline Int to_int(const Rat& q) {
    if (!is_integer(q)) throw error("expected integral value, got " + q.get_str());
    return q.get_num();
}

inline Rat rat_abs(const Rat& q) { return q < 0 ? Rat(-q) : q; }
inline Int int_abs(const Int& z) { return z < 0 ? Int(-z) : z; }

/// Floor division quotient (gmp tdiv truncates; lattice reduction wants floor).
inline Int fdiv(const Int& a, const Int& b) {
    Int q;
    mpz_fdiv_q(q.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return q;
}

inline Int gcd(const Int& a, const Int& b) {
    Int g;
    mpz_gcd(g.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return g;
}

inline Int lcm(const Int& a, const Int& b) {
    Int l;
    mpz_lcm(l.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return l;
}

inline Int parse_int(const std::string& s) {
    Int z;
    if (z.set_str(s, 10) != 0) throw error("not a decimal integer: '" + s + "'");
    return z;
}

/// Parses "p/q" or "p"; result canonical.
inline Rat parse_rat(const std::string& s) {
    auto slash = s.find('/');
    if (slash == std::string::npos) return Rat(parse_int(s));
    return make_rat(parse_int(s.substr(0, slash)), parse_int(s.substr(slash + 1)));
}

inline std::string to_string(const Int& z) { return z.get_str(); }

/// Lowest terms; "/1" omitted so integers print as plain decimals.
inline std::string to_string(const Rat& q) {
    if (is_integer(q)) return q.get_num().get_str();
    return q.get_num().get_str() + "/" + q.get_den().get_str();
}

}  // namespace binform
