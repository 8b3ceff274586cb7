#pragma once

#include <cstdint>
#include <functional>
#include <memory>
#include <string>
#include <vector>

#include "weil/group.hpp"
#include "weil/newton.hpp"
#include "weil/perm.hpp"

namespace weil {

// Enumeration works in Q = W_2g / <iota>: iota is central, so subgroups of
// W_2g containing iota correspond to subgroups of Q, halving the ambient
// order. Quotient elements are represented by the coset member with the
// smaller packed code.
class QuotientUniverse {
public:
    explicit QuotientUniverse(int g);

    int g() const { return g_; }
    uint32_t size() const { return static_cast<uint32_t>(reps_.size()); }
    uint32_t identity() const { return id_; }

    uint32_t mult(uint32_t a, uint32_t b) const;
    uint32_t inv(uint32_t a) const { return inv_[a]; }
    uint32_t conj(uint32_t t, uint32_t x) const { return mult(mult(t, x), inv_[t]); }

    const SignedPerm& rep(uint32_t i) const { return reps_[i]; }
    uint32_t index_of(const SignedPerm& p) const; // canonicalizes the coset

    uint32_t element_order(uint32_t i) const { return order_[i]; }
    bool has_prime_power_order(uint32_t i) const { return prime_power_[i]; }

    int pair_image(uint32_t e, int pair) const {
        return pair_act_[e * static_cast<uint32_t>(g_) + static_cast<uint32_t>(pair)];
    }

    const std::vector<uint32_t>& group_generators() const { return group_gens_; }

private:
    int g_;
    uint32_t id_ = 0;
    std::vector<SignedPerm> reps_;  // sorted by packed code
    std::vector<uint64_t> codes_;
    std::vector<uint32_t> inv_;
    std::vector<uint32_t> order_;
    std::vector<bool> prime_power_;
    std::vector<uint8_t> pair_act_;
    std::vector<uint32_t> group_gens_; // generators of Q itself
    // open-addressing code -> index
    std::vector<uint64_t> table_code_;
    std::vector<uint32_t> table_idx_;
    uint32_t lookup(uint64_t code) const;
};

struct SubgroupClass {
    std::vector<uint32_t> elems; // sorted quotient indices
    std::vector<uint32_t> gens;
    bool transitive = false; // of the pulled-back group on the 2g symbols
};

struct EnumerateOptions {
    std::string checkpoint_path;           // empty: no checkpointing
    std::function<void(size_t, size_t)> progress; // (classes done, queued)
    size_t checkpoint_every = 64;          // classes between checkpoint writes
};

// All subgroup classes of Q up to Q-conjugacy, in discovery (deterministic)
// order. With a checkpoint path, partially processed runs resume.
std::vector<SubgroupClass> enumerate_subgroup_classes(const QuotientUniverse& U,
                                                      const EnumerateOptions& opts = {});

// Cached per g; enumeration for one g is reused across weight functions.
struct GroupEnumeration {
    std::shared_ptr<QuotientUniverse> universe;
    std::shared_ptr<std::vector<SubgroupClass>> classes;
};
GroupEnumeration enumerate_for_dimension(int g, const EnumerateOptions& opts = {});

struct EnumeratedClass {
    PermGroup group;                       // pullback to W_2g, contains iota
    std::vector<SignedPerm> quotient_gens; // generators of G/iota (coset reps)
    std::string key;                       // canonical under Stab(w)
    std::string label;
};

// One representative per Stab(w)-conjugacy class of transitive subgroups of
// W_2g containing the conjugation element, sorted by (order, canonical key).
// Throws resource_limit_error for g above the limit.
std::vector<EnumeratedClass> enumerate_transitive_subgroups(
    const WeightFunction& w, int g_limit = 6, const EnumerateOptions& opts = {});

} // namespace weil
