#include "weil/honda_tate.hpp"

#include <algorithm>
#include <sstream>

namespace weil {

std::string ExponentVector::to_json() const {
    std::ostringstream os;
    os << "{\"cosets\":[";
    for (size_t i = 0; i < coset_reps.size(); ++i) {
        if (i) os << ",";
        os << "\"" << to_cycle_string(coset_reps[i]) << "\"";
    }
    os << "],\"exponents\":[";
    for (size_t i = 0; i < exponents.size(); ++i) {
        if (i) os << ",";
        os << "\"" << rational_to_string(exponents[i]) << "\"";
    }
    os << "],\"c\":" << c.get_str() << "}";
    return os.str();
}

ExponentVector ideal_exponents(const WeightedPermRep& rho, const PermGroup& D) {
    const PermGroup& G = rho.group();
    if (!D.is_subgroup_of(G)) throw precondition_error("D must be a subgroup of G");
    const auto& w = rho.weight();

    ExponentVector out;
    out.c = 1;
    std::vector<bool> assigned(G.order(), false);
    const auto& elems = G.elements();
    for (size_t i = 0; i < elems.size(); ++i) {
        if (assigned[i]) continue;
        // left coset sigma D
        const SignedPerm& sigma = elems[i];
        Rational value = w(inverse(sigma)(0));
        for (const auto& d : D.elements()) {
            SignedPerm e = compose(sigma, d);
            auto it = std::lower_bound(elems.begin(), elems.end(), e);
            if (it == elems.end() || !(*it == e))
                throw precondition_error("coset walk left the group; D is not a subgroup");
            assigned[static_cast<size_t>(it - elems.begin())] = true;
            Rational v2 = w(inverse(e)(0));
            if (v2 != value)
                throw precondition_error(
                    "weight is not constant on a coset: D is not inside Stab(w)");
        }
        out.coset_reps.push_back(sigma);
        out.exponents.push_back(value);
        out.c = lcm(out.c, denominator(value));
    }
    return out;
}

int epsilon_pi(TrailingSign sign) {
    return sign == TrailingSign::positive ? 1 : 2;
}

Integer k_pi(const WeightedPermRep& rho, const PermGroup& D) {
    if (!D.is_subgroup_of(rho.group()))
        throw precondition_error("D must be a subgroup of G");
    const auto& w = rho.weight();
    Integer k = 1;
    for (const auto& orb : D.symbol_orbits()) {
        Rational sum(0);
        for (int x : orb) sum += w(x);
        k = lcm(k, denominator(sum));
    }
    // D <= Stab(w) is implied when every coset has constant weight; verify via
    // the same walk ideal_exponents does
    ideal_exponents(rho, D);
    return k;
}

HondaTateResult honda_tate_dimension(const WeightedPermRep& rho, const PermGroup& D,
                                     TrailingSign sign) {
    Integer k = k_pi(rho, D);
    Integer eps(epsilon_pi(sign));
    HondaTateResult res;
    res.dimension = Integer(rho.g()) * lcm(eps, k);
    res.dimension_g_attainable = (k == 1);
    return res;
}

} // namespace weil
