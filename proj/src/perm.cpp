#include "weil/perm.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

namespace weil {

uint64_t SignedPerm::packed() const {
    // big-endian nibbles: numeric order on codes equals lexicographic order
    // on image arrays (same degree), so the identity is minimal
    uint64_t code = 0;
    for (size_t i = 0; i < img.size(); ++i)
        code |= static_cast<uint64_t>(img[i]) << (4 * (img.size() - 1 - i));
    return code;
}

bool SignedPerm::is_identity() const {
    for (size_t i = 0; i < img.size(); ++i)
        if (img[i] != i) return false;
    return true;
}

bool SignedPerm::preserves_pairing() const {
    const int gg = g();
    std::vector<bool> seen(img.size(), false);
    for (int x = 0; x < degree(); ++x) {
        int y = img[static_cast<size_t>(x)];
        if (y < 0 || y >= degree() || seen[static_cast<size_t>(y)]) return false;
        seen[static_cast<size_t>(y)] = true;
        if (img[static_cast<size_t>(conjugate_symbol(x, gg))] != conjugate_symbol(y, gg))
            return false;
    }
    return true;
}

SignedPerm identity_perm(int g) {
    SignedPerm p;
    p.img.resize(static_cast<size_t>(2 * g));
    std::iota(p.img.begin(), p.img.end(), 0);
    return p;
}

SignedPerm conjugation_element(int g) {
    if (g < 1) throw validation_error("conjugation_element needs g >= 1");
    SignedPerm p;
    p.img.resize(static_cast<size_t>(2 * g));
    for (int x = 0; x < 2 * g; ++x)
        p.img[static_cast<size_t>(x)] = static_cast<uint8_t>(conjugate_symbol(x, g));
    return p;
}

SignedPerm compose(const SignedPerm& a, const SignedPerm& b) {
    if (a.degree() != b.degree())
        throw validation_error("compose: degree mismatch");
    SignedPerm c;
    c.img.resize(a.img.size());
    for (size_t i = 0; i < a.img.size(); ++i) c.img[i] = a.img[b.img[i]];
    return c;
}

SignedPerm inverse(const SignedPerm& a) {
    SignedPerm c;
    c.img.resize(a.img.size());
    for (size_t i = 0; i < a.img.size(); ++i) c.img[a.img[i]] = static_cast<uint8_t>(i);
    return c;
}

SignedPerm parse_cycles(const std::string& text, int g) {
    SignedPerm p = identity_perm(g);
    const std::string& t = text;
    size_t i = 0;
    auto skip_ws = [&] {
        while (i < t.size() && isspace(static_cast<unsigned char>(t[i]))) ++i;
    };
    skip_ws();
    if (i < t.size() && (t.compare(i, 1, "e") == 0) && i + 1 == t.size()) return p;
    while (i < t.size()) {
        skip_ws();
        if (i >= t.size()) break;
        if (t[i] != '(') throw validation_error("cycle notation: expected '(' in " + text);
        ++i;
        std::vector<int> cyc;
        while (true) {
            skip_ws();
            if (i >= t.size()) throw validation_error("cycle notation: unclosed '(' in " + text);
            if (t[i] == ')') {
                ++i;
                break;
            }
            size_t start = i;
            while (i < t.size() && isdigit(static_cast<unsigned char>(t[i]))) ++i;
            if (start == i) throw validation_error("cycle notation: expected symbol in " + text);
            int n = std::stoi(t.substr(start, i - start));
            bool barred = false;
            if (i < t.size() && t[i] == '~') {
                barred = true;
                ++i;
            }
            if (n < 1 || n > g)
                throw validation_error("cycle notation: symbol out of range in " + text);
            cyc.push_back(barred ? conjugate_symbol(n - 1, g) : n - 1);
        }
        for (size_t k = 0; k < cyc.size(); ++k) {
            int from = cyc[k];
            int to = cyc[(k + 1) % cyc.size()];
            if (p.img[static_cast<size_t>(from)] != from && p.img[static_cast<size_t>(from)] != to)
                throw validation_error("cycle notation: symbol repeated across cycles in " + text);
            p.img[static_cast<size_t>(from)] = static_cast<uint8_t>(to);
        }
    }
    return p;
}

std::string to_cycle_string(const SignedPerm& p) {
    const int g = p.g();
    auto sym = [&](int x) {
        if (x < g) return std::to_string(x + 1);
        return std::to_string(2 * g - x) + "~";
    };
    std::string out;
    std::vector<bool> done(p.img.size(), false);
    for (int x = 0; x < p.degree(); ++x) {
        if (done[static_cast<size_t>(x)] || p(x) == x) continue;
        out += "(";
        int y = x;
        bool first = true;
        while (!done[static_cast<size_t>(y)]) {
            done[static_cast<size_t>(y)] = true;
            if (!first) out += " ";
            out += sym(y);
            first = false;
            y = p(y);
        }
        out += ")";
    }
    if (out.empty()) return "e";
    return out;
}

std::vector<SignedPerm> all_hyperoctahedral(int g) {
    std::vector<SignedPerm> out;
    std::vector<int> base(static_cast<size_t>(g));
    std::iota(base.begin(), base.end(), 0);
    do {
        for (int flips = 0; flips < (1 << g); ++flips) {
            SignedPerm p;
            p.img.resize(static_cast<size_t>(2 * g));
            for (int i = 0; i < g; ++i) {
                int t = base[static_cast<size_t>(i)];
                int image = (flips >> i & 1) ? conjugate_symbol(t, g) : t;
                p.img[static_cast<size_t>(i)] = static_cast<uint8_t>(image);
                p.img[static_cast<size_t>(conjugate_symbol(i, g))] =
                    static_cast<uint8_t>(conjugate_symbol(image, g));
            }
            out.push_back(std::move(p));
        }
    } while (std::next_permutation(base.begin(), base.end()));
    std::sort(out.begin(), out.end());
    return out;
}

} // namespace weil
