#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "weil/errors.hpp"

namespace weil {

// The 2g symbols 1..g, gbar..1bar are encoded 0..2g-1 in that order, so the
// conjugate-pair partner of index x is 2g-1-x. Barred symbols print with a
// trailing '~' in cycle notation: "(1 2)(1~ 2~)".
inline int conjugate_symbol(int x, int g) { return 2 * g - 1 - x; }

// A pairing-preserving permutation of the 2g symbols: img[x] is the image of
// the symbol at index x.
struct SignedPerm {
    std::vector<uint8_t> img;

    int degree() const { return static_cast<int>(img.size()); }
    int g() const { return degree() / 2; }

    int operator()(int x) const { return img[static_cast<size_t>(x)]; }
    bool operator==(const SignedPerm& o) const { return img == o.img; }

    // Element order everywhere (sorting, canonical keys) is by packed code.
    bool operator<(const SignedPerm& o) const {
        if (img.size() <= 16 && o.img.size() <= 16) return packed() < o.packed();
        return img < o.img;
    }

    // Fits degree <= 16 in 4-bit slots; enumeration only uses degree <= 12.
    uint64_t packed() const;

    bool is_identity() const;
    bool preserves_pairing() const;
};

SignedPerm identity_perm(int g);

// iota = (1 1bar)...(g gbar); central in W_2g.
SignedPerm conjugation_element(int g);

SignedPerm compose(const SignedPerm& a, const SignedPerm& b); // x -> a(b(x))
SignedPerm inverse(const SignedPerm& a);

// "(1 2)(1~ 2~)" etc. Whitespace-separated symbols inside parentheses; each
// symbol is 1..g optionally suffixed with '~'. "()" and "e" mean identity.
SignedPerm parse_cycles(const std::string& text, int g);
std::string to_cycle_string(const SignedPerm& p);

// All 2^g g! elements of W_2g, sorted.
std::vector<SignedPerm> all_hyperoctahedral(int g);

} // namespace weil
