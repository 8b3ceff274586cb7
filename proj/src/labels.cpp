#include "weil/labels.hpp"

#include <sstream>

namespace weil {

Integer decode_base26(const std::string& token) {
    if (token.empty()) throw validation_error("empty coefficient token");
    for (char c : token)
        if (c < 'a' || c > 'z')
            throw validation_error("bad character in coefficient token: " + token);
    bool negative = token.size() > 1 && token[0] == 'a';
    std::string digits = negative ? token.substr(1) : token;
    Integer v = 0;
    for (char c : digits) v = v * 26 + (c - 'a');
    return negative ? Integer(-v) : v;
}

std::string encode_base26(const Integer& value) {
    Integer v = abs(value);
    std::string digits;
    if (v == 0) {
        digits = "a";
    } else {
        while (v > 0) {
            Integer q, r;
            mpz_fdiv_qr(q.get_mpz_t(), r.get_mpz_t(), v.get_mpz_t(), Integer(26).get_mpz_t());
            digits += static_cast<char>('a' + r.get_si());
            v = q;
        }
        std::reverse(digits.begin(), digits.end());
    }
    if (value < 0) return "a" + digits;
    return digits;
}

std::string IsogenyLabel::to_string() const {
    std::string out = std::to_string(g) + "." + q.get_str() + ".";
    for (size_t i = 0; i < coded.size(); ++i) {
        if (i) out += "_";
        out += coded[i];
    }
    return out;
}

IsogenyLabel parse_label(const std::string& label) {
    IsogenyLabel L;
    std::stringstream ss(label);
    std::string gpart, qpart, rest;
    if (!std::getline(ss, gpart, '.') || !std::getline(ss, qpart, '.') ||
        !std::getline(ss, rest))
        throw validation_error("malformed label (want g.q.c1_..._cg): " + label);
    try {
        L.g = std::stoi(gpart);
        L.q = Integer(qpart);
    } catch (...) {
        throw validation_error("malformed label (bad g or q): " + label);
    }
    std::stringstream cs(rest);
    std::string tok;
    while (std::getline(cs, tok, '_')) L.coded.push_back(tok);
    if (static_cast<int>(L.coded.size()) != L.g)
        throw validation_error("label has " + std::to_string(L.coded.size()) +
                               " coefficient tokens, expected g = " + std::to_string(L.g));
    return L;
}

WeilPolynomial decode_label(const std::string& label) {
    IsogenyLabel L = parse_label(label);
    std::vector<Integer> half;
    half.reserve(L.coded.size());
    for (const auto& tok : L.coded) half.push_back(decode_base26(tok));
    return parse_weil(half, L.q, /*half_list=*/true);
}

std::string encode_label(const WeilPolynomial& P) {
    IsogenyLabel L;
    L.g = P.g;
    L.q = P.q;
    for (int i = 1; i <= P.g; ++i)
        L.coded.push_back(encode_base26(P.coeffs[static_cast<size_t>(i)]));
    return L.to_string();
}

} // namespace weil
