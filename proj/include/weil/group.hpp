#pragma once

#include <string>
#include <vector>

#include "weil/newton.hpp"
#include "weil/perm.hpp"

namespace weil {

// A subgroup of W_2g with its elements materialized and sorted. Everything is
// immutable after construction; the orders here are at most 2^6 * 6! = 46080.
class PermGroup {
public:
    PermGroup() = default; // empty placeholder; use the factories

    // Closure of the generators; rejects non-pairing-preserving input.
    static PermGroup generate(int g, std::vector<SignedPerm> gens);

    // Wraps an element list that is already known to be a subgroup.
    static PermGroup from_elements(int g, std::vector<SignedPerm> elems,
                                   std::vector<SignedPerm> gens = {});

    int g() const { return g_; }
    std::size_t order() const { return elements_.size(); }
    const std::vector<SignedPerm>& elements() const { return elements_; }
    const std::vector<SignedPerm>& generators() const { return generators_; }

    bool contains(const SignedPerm& p) const;
    bool is_subgroup_of(const PermGroup& other) const;

    std::vector<int> orbit(int x) const;
    bool is_transitive() const;
    bool contains_conjugation_element() const;

    // Orbits of the action on the 2g symbols, each sorted, ordered by minimum.
    std::vector<std::vector<int>> symbol_orbits() const;

    bool operator==(const PermGroup& o) const {
        return g_ == o.g_ && elements_ == o.elements_;
    }
    bool operator<(const PermGroup& o) const { return elements_ < o.elements_; }

private:
    PermGroup(int g, std::vector<SignedPerm> elems, std::vector<SignedPerm> gens)
        : g_(g), elements_(std::move(elems)), generators_(std::move(gens)) {}

    int g_ = 0;
    std::vector<SignedPerm> elements_;   // sorted
    std::vector<SignedPerm> generators_; // small generating set
};

PermGroup trivial_group(int g);
PermGroup full_hyperoctahedral(int g);

// { sigma in W_2g : w(sigma(x)) = w(x) for all x }, by filtering W_2g.
PermGroup stabilizer_of_weight(const WeightFunction& w);

PermGroup conjugate_group(const SignedPerm& t, const PermGroup& G);
PermGroup intersect(const PermGroup& A, const PermGroup& B);

// All subgroups of G (exact, no conjugacy reduction), sorted by
// (order, element list). Meant for small G such as Stab(w) intersections.
std::vector<PermGroup> all_subgroups(const PermGroup& G);

// Opaque comparable key: equal iff the arguments are conjugate by an element
// of `by`. Realized as the lexicographically least sorted element list over
// the conjugation orbit, serialized.
std::string canonical_key(const PermGroup& G, const PermGroup& by);

// Short display form of a canonical key: "W{2g}.o{order}.{hash16}".
std::string canonical_label(const PermGroup& G, const std::string& key);

} // namespace weil
