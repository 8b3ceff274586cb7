#pragma once

#include <memory>
#include <string>
#include <vector>

#include "weil/group.hpp"
#include "weil/newton.hpp"
#include "weil/ratmatrix.hpp"

namespace weil {

// A balanced pair of index subsets of {1..g} (stored 0-based) certifying a
// multiplicative relation among normalized eigenvalues. |T+|+|T-| is even and
// positive; codim_bound is the smallest r with 2r >= |T+|+|T-|.
struct ExceptionalWitness {
    std::vector<int> t_plus;
    std::vector<int> t_minus;
    int codim_bound = 0;

    bool operator==(const ExceptionalWitness& o) const {
        return t_plus == o.t_plus && t_minus == o.t_minus;
    }
    bool operator<(const ExceptionalWitness& o) const;
    std::string to_string() const; // "{1,3,4}/{2}" (1-based)
};

ExceptionalWitness make_witness(std::vector<int> t_plus, std::vector<int> t_minus);

// The pair (w, G): a weight function together with a transitive subgroup of
// W_2g containing the conjugation element. Immutable; the matrix of the map
// into the group algebra is computed once and cached.
class WeightedPermRep {
public:
    WeightedPermRep(WeightFunction w, PermGroup G);

    int g() const { return w_.g(); }
    const WeightFunction& weight() const { return w_; }
    const PermGroup& group() const { return group_; }

    // |G| x 2g; entry (sigma, x) = w(sigma^-1(x)), rows in sorted element order.
    const RatMatrix& phi_matrix() const;

    // all 2g columns pairwise distinct
    bool is_geometrically_simple() const;

    // rank(phi) - 1, in 0..g
    int angle_rank() const;

    bool is_supersingular() const { return w_.is_supersingular(); }
    bool is_ordinary() const { return w_.is_ordinary(); }

    // Coarsest partition of {1..g} on which every flip pattern in
    // C = ker(G -> S_g) is constant; returns (parts, m).
    std::pair<std::vector<std::vector<int>>, int> level_set_partition() const;

    // All balanced signed subsets satisfying the per-element balance condition,
    // sorted by total size then lexicographically. Requires geometric
    // simplicity (precondition_error otherwise).
    std::vector<ExceptionalWitness> exceptional_witnesses() const;

    bool is_exceptional() const { return !exceptional_witnesses().empty(); }

private:
    WeightFunction w_;
    PermGroup group_;
    std::shared_ptr<const RatMatrix> phi_;
};

// JSON round-trip helpers live with the CLI; this serializes the mathematical
// content: {g, slopes, generators, order}.
std::string wpr_to_json(const WeightedPermRep& rho);

} // namespace weil
