#pragma once

#include <string>
#include <vector>

#include "weil/weil_poly.hpp"

namespace weil {

// Isogeny-class labels "g.q.c1_c2_..._cg": each c encodes a_i in base 26 with
// digits a=0..z=25, most significant first, and a leading extra 'a' marking a
// negative value ("ac" = -2, "bw" = 48, "a" = 0).
Integer decode_base26(const std::string& token);
std::string encode_base26(const Integer& value);

struct IsogenyLabel {
    int g = 0;
    Integer q;
    std::vector<std::string> coded; // g tokens
    std::string to_string() const;
};

IsogenyLabel parse_label(const std::string& label);

// a_1..a_g decoded, the rest completed by the functional equation; p inferred
// from q.
WeilPolynomial decode_label(const std::string& label);

std::string encode_label(const WeilPolynomial& P);

} // namespace weil
