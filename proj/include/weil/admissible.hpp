#pragma once

#include <optional>
#include <string>
#include <vector>

#include "weil/group.hpp"
#include "weil/wpr.hpp"

namespace weil {

// p = 0 stands for a generic large prime coprime to |G|: the wild part must
// be trivial and the congruence condition on the tame generator is vacuous
// (every unit residue is hit by some large prime).
constexpr int kGenericPrime = 0;

bool is_prime(long p);

// Candidate chain G >= D >= G0 >= G1 at a prime p.
struct Filtration {
    PermGroup D;
    PermGroup G0;
    PermGroup G1;
    int p = kGenericPrime;
};

// Group-theoretic conditions a decomposition/inertia/wild-inertia chain must
// satisfy: normality, cyclic quotients with the right coprimality, G1 a
// p-group, and generators sigma, tau of D/G1 with <tau> = G0/G1 and
// sigma tau sigma^-1 = tau^p (exhaustive search over the quotient).
bool check_local_galois_conditions(const Filtration& f);

// Every D-orbit on the 2g symbols has integral weight sum. D must sit inside
// Stab(w) (precondition_error otherwise).
bool strong_orbit_condition(const WeightedPermRep& rho, const PermGroup& D);

struct AdmissibilityReport {
    bool weak = false;
    bool strong = false;
    std::vector<Filtration> witnesses; // strong-condition flags derivable per witness
    std::vector<bool> witness_strong;
    std::vector<int> checked_p;
};

// Enumerates D <= G cap Stab(w) (up to conjugacy inside that intersection),
// then normal chains (G0, G1) in D, filtered by the local conditions and,
// when strong_only, by the orbit-sum condition. Deterministic order.
AdmissibilityReport find_admissible_filtrations(const WeightedPermRep& rho, int p,
                                                bool strong_only);

// Existence-only fast path used by the classification pipeline.
bool strong_admissible_exists(const WeightedPermRep& rho, const std::vector<int>& p_sweep);

} // namespace weil
