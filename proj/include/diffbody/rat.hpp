#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <string>

#include "diffbody/errors.hpp"

namespace diffbody {

// Exact arbitrary-precision rational, always in lowest terms with positive
// denominator. GMP keeps arithmetic results canonical; only direct
// construction from a numerator/denominator pair needs an explicit
// canonicalization, which the helpers below take care of.
using Rat = mpq_class;
using Int = mpz_class;

inline Rat rat(long num, long den = 1) {
    if (den == 0) throw ParseError("rational with zero denominator");
    Rat q(num, den);
    q.canonicalize();
    return q;
}

inline Rat rat(const Int& num, const Int& den) {
    if (den == 0) throw ParseError("rational with zero denominator");
    Rat q(num, den);
    q.canonicalize();
    return q;
}

// Parses "p/q" or "p" with optional sign on p; q must be a positive integer.
Rat parse_rat(const std::string& text);

// Lowest-terms textual form: "p/q", or just "p" when q == 1.
inline std::string rat_str(const Rat& q) { return q.get_str(); }

inline double to_double(const Rat& q) { return q.get_d(); }

inline bool is_integer(const Rat& q) { return q.get_den() == 1; }

Rat rat_pow(const Rat& base, unsigned exp);

Int factorial(unsigned n);
Int binomial(unsigned n, unsigned k);

// Nearest multiple of 1/2^bits (ties round up).
Rat snap_dyadic(const Rat& x, unsigned bits);

}  // namespace diffbody
