#pragma once

#include <string>
#include <vector>

#include "weil/group.hpp"
#include "weil/wpr.hpp"

namespace weil {

// Exponent data of the ideal built from coset translates of a chosen prime:
// one exponent per left coset sigma D of G, equal to w(sigma^-1(1)), scaled
// integral by c = lcm of the denominators. The overall valuation scalar of a
// concrete field is not determined combinatorially, so consumers compare
// shapes and ratios only.
struct ExponentVector {
    std::vector<SignedPerm> coset_reps; // minimal member per coset, in element order
    std::vector<Rational> exponents;
    Integer c;

    std::string to_json() const;
};

// Requires D <= G and D <= Stab(w); throws precondition_error if the weight
// is not constant on some coset (exactly the failure of D <= Stab(w)).
ExponentVector ideal_exponents(const WeightedPermRep& rho, const PermGroup& D);

enum class TrailingSign { positive, negative };

// 1 when the trailing coefficient of the minimal polynomial is positive,
// otherwise 2. (It is never zero: the constant term is +-q^g.)
int epsilon_pi(TrailingSign sign);

// lcm over D-orbits on the 2g symbols of the denominator of the orbit's
// weight sum.
Integer k_pi(const WeightedPermRep& rho, const PermGroup& D);

struct HondaTateResult {
    Integer dimension;          // g * lcm(epsilon, k)
    bool dimension_g_attainable; // k == 1: the variety for pi or pi^2 has dim g
};

HondaTateResult honda_tate_dimension(const WeightedPermRep& rho, const PermGroup& D,
                                     TrailingSign sign);

} // namespace weil
