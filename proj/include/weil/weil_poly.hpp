#pragma once

#include <string>
#include <vector>

#include "weil/newton.hpp"
#include "weil/rational.hpp"

namespace weil {

// Integer polynomial a_0 T^2g + ... + a_2g with a_0 = 1, satisfying the
// functional equation a_{g+i} = q^i a_{g-i} (roots pair to q). Whether all
// complex roots have modulus sqrt(q) is a numerical check and lives with the
// analyzer.
struct WeilPolynomial {
    int g = 0;
    long p = 0;       // prime
    Integer q;        // p^k
    int k = 0;        // q = p^k
    std::vector<Integer> coeffs; // descending, size 2g+1, coeffs[0] = 1

    std::string to_string() const; // "T^4 - 2*T^3 + ... "
};

// Infers p (and k) from q; q must be a prime power.
long prime_of_prime_power(const Integer& q, int* k_out = nullptr);

// Full list (2g+1 descending coefficients) or the half list a_1..a_g; the
// rest is completed by the functional equation. Validates monicity, q = p^k,
// and the functional equation.
WeilPolynomial parse_weil(const std::vector<Integer>& coeffs, const Integer& q,
                          bool half_list = false);

// p-adic valuations of the coefficients normalized so v(q) = 1; lower convex
// hull; slopes with multiplicity = horizontal length. The result of a genuine
// abelian-variety polynomial validates as a NewtonPolygon.
std::vector<Rational> newton_slopes_of(const WeilPolynomial& P);
NewtonPolygon newton_polygon_of(const WeilPolynomial& P);

} // namespace weil
