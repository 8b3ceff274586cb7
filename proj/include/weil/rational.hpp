#pragma once

#include <gmpxx.h>

#include <string>
#include <vector>

#include "weil/errors.hpp"

namespace weil {

// mpq_class keeps values canonicalized: gcd(num, den) = 1, den > 0.
using Rational = mpq_class;
using Integer = mpz_class;

// Parses "3", "-3", "1/3", "-2/7". Rejects zero denominators and junk.
Rational rational_from_string(const std::string& s);

// "n" when integral, "n/d" otherwise.
std::string rational_to_string(const Rational& r);

inline bool is_integral(const Rational& r) { return r.get_den() == 1; }

// mpq_class(num, den) does not canonicalize; route fractions with a possibly
// shared factor through here.
inline Rational make_rational(long num, long den) {
    Rational r(num, den);
    r.canonicalize();
    return r;
}

inline Integer denominator(const Rational& r) { return r.get_den(); }

Integer lcm(const Integer& a, const Integer& b);

// Comma-separated list of rationals, e.g. "0,0,1/2,1/2,1,1".
std::vector<Rational> rationals_from_csv(const std::string& csv);

} // namespace weil
