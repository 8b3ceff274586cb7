#include "weil/group.hpp"

#include <algorithm>
#include <cstdio>
#include <deque>
#include <set>

namespace weil {

PermGroup PermGroup::generate(int g, std::vector<SignedPerm> gens) {
    for (const auto& p : gens) {
        if (p.degree() != 2 * g)
            throw validation_error("generator degree mismatch (expected " +
                                   std::to_string(2 * g) + " symbols)");
        if (!p.preserves_pairing())
            throw validation_error("generator does not preserve the conjugate pairing: " +
                                   to_cycle_string(p));
    }
    std::set<SignedPerm> seen;
    seen.insert(identity_perm(g));
    std::deque<SignedPerm> queue(seen.begin(), seen.end());
    while (!queue.empty()) {
        SignedPerm e = queue.front();
        queue.pop_front();
        for (const auto& s : gens) {
            SignedPerm f = compose(e, s);
            if (seen.insert(f).second) queue.push_back(f);
        }
    }
    std::vector<SignedPerm> elems(seen.begin(), seen.end());
    return PermGroup(g, std::move(elems), std::move(gens));
}

PermGroup PermGroup::from_elements(int g, std::vector<SignedPerm> elems,
                                   std::vector<SignedPerm> gens) {
    std::sort(elems.begin(), elems.end());
    elems.erase(std::unique(elems.begin(), elems.end()), elems.end());
    return PermGroup(g, std::move(elems), std::move(gens));
}

bool PermGroup::contains(const SignedPerm& p) const {
    return std::binary_search(elements_.begin(), elements_.end(), p);
}

bool PermGroup::is_subgroup_of(const PermGroup& other) const {
    return std::includes(other.elements_.begin(), other.elements_.end(), elements_.begin(),
                         elements_.end());
}

std::vector<int> PermGroup::orbit(int x) const {
    std::vector<bool> in(static_cast<size_t>(2 * g_), false);
    std::vector<int> orb{x};
    in[static_cast<size_t>(x)] = true;
    for (size_t i = 0; i < orb.size(); ++i)
        for (const auto& p : elements_) {
            int y = p(orb[i]);
            if (!in[static_cast<size_t>(y)]) {
                in[static_cast<size_t>(y)] = true;
                orb.push_back(y);
            }
        }
    std::sort(orb.begin(), orb.end());
    return orb;
}

bool PermGroup::is_transitive() const {
    return orbit(0).size() == static_cast<size_t>(2 * g_);
}

bool PermGroup::contains_conjugation_element() const {
    return contains(conjugation_element(g_));
}

std::vector<std::vector<int>> PermGroup::symbol_orbits() const {
    std::vector<std::vector<int>> out;
    std::vector<bool> seen(static_cast<size_t>(2 * g_), false);
    for (int x = 0; x < 2 * g_; ++x) {
        if (seen[static_cast<size_t>(x)]) continue;
        auto orb = orbit(x);
        for (int y : orb) seen[static_cast<size_t>(y)] = true;
        out.push_back(std::move(orb));
    }
    return out;
}

PermGroup trivial_group(int g) {
    return PermGroup::from_elements(g, {identity_perm(g)});
}

PermGroup full_hyperoctahedral(int g) {
    auto elems = all_hyperoctahedral(g);
    std::vector<SignedPerm> gens;
    if (g >= 1) gens.push_back(parse_cycles("(1 1~)", g));
    if (g >= 2) {
        gens.push_back(parse_cycles("(1 2)(1~ 2~)", g));
        // g-cycle on pairs
        std::string cyc = "(";
        for (int i = 1; i <= g; ++i) cyc += std::to_string(i) + (i == g ? ")" : " ");
        std::string cycb = "(";
        for (int i = 1; i <= g; ++i) cycb += std::to_string(i) + (i == g ? "~)" : "~ ");
        gens.push_back(parse_cycles(cyc + cycb, g));
    }
    return PermGroup::from_elements(g, std::move(elems), std::move(gens));
}

PermGroup stabilizer_of_weight(const WeightFunction& w) {
    const int g = w.g();
    std::vector<SignedPerm> keep;
    for (auto& p : all_hyperoctahedral(g)) {
        bool ok = true;
        for (int x = 0; x < 2 * g && ok; ++x) ok = (w(p(x)) == w(x));
        if (ok) keep.push_back(p);
    }
    // greedy small generating set
    std::vector<SignedPerm> gens;
    PermGroup cur = trivial_group(g);
    for (const auto& p : keep) {
        if (cur.contains(p)) continue;
        gens.push_back(p);
        cur = PermGroup::generate(g, gens);
        if (cur.order() == keep.size()) break;
    }
    return PermGroup::from_elements(g, std::move(keep), std::move(gens));
}

PermGroup conjugate_group(const SignedPerm& t, const PermGroup& G) {
    SignedPerm ti = inverse(t);
    std::vector<SignedPerm> elems;
    elems.reserve(G.order());
    for (const auto& s : G.elements()) elems.push_back(compose(compose(t, s), ti));
    std::vector<SignedPerm> gens;
    for (const auto& s : G.generators()) gens.push_back(compose(compose(t, s), ti));
    return PermGroup::from_elements(G.g(), std::move(elems), std::move(gens));
}

PermGroup intersect(const PermGroup& A, const PermGroup& B) {
    std::vector<SignedPerm> elems;
    std::set_intersection(A.elements().begin(), A.elements().end(), B.elements().begin(),
                          B.elements().end(), std::back_inserter(elems));
    return PermGroup::from_elements(A.g(), std::move(elems));
}

std::vector<PermGroup> all_subgroups(const PermGroup& G) {
    const int g = G.g();
    const size_t n = G.order();
    const auto& elems = G.elements();

    // index-based join closure from the cyclic subgroups; the local
    // multiplication table keeps closures cheap
    auto index_of = [&](const SignedPerm& p) {
        return static_cast<uint16_t>(std::lower_bound(elems.begin(), elems.end(), p) -
                                     elems.begin());
    };
    std::vector<uint16_t> table(n * n);
    for (size_t i = 0; i < n; ++i)
        for (size_t j = 0; j < n; ++j) table[i * n + j] = index_of(compose(elems[i], elems[j]));
    const uint16_t id = index_of(identity_perm(g));

    std::set<std::vector<uint16_t>> subs;
    std::vector<std::vector<uint16_t>> cyclics;
    for (uint16_t x = 0; x < n; ++x) {
        std::vector<uint16_t> c{id};
        uint16_t e = x;
        while (e != id) {
            c.push_back(e);
            e = table[e * n + x];
        }
        std::sort(c.begin(), c.end());
        if (subs.insert(c).second) cyclics.push_back(c);
    }
    subs.insert({id});

    auto join = [&](const std::vector<uint16_t>& a, const std::vector<uint16_t>& b) {
        std::vector<bool> in(n, false);
        std::vector<uint16_t> out;
        auto add = [&](uint16_t v) {
            if (!in[v]) {
                in[v] = true;
                out.push_back(v);
            }
        };
        for (uint16_t v : a) add(v);
        for (uint16_t v : b) add(v);
        // both orders per pair: products with late additions are covered when
        // the outer index reaches them
        for (size_t i = 0; i < out.size(); ++i)
            for (size_t j = 0; j <= i; ++j) {
                add(table[out[i] * n + out[j]]);
                add(table[out[j] * n + out[i]]);
            }
        std::sort(out.begin(), out.end());
        return out;
    };

    std::deque<std::vector<uint16_t>> queue(subs.begin(), subs.end());
    while (!queue.empty()) {
        auto S = std::move(queue.front());
        queue.pop_front();
        for (const auto& C : cyclics) {
            if (std::includes(S.begin(), S.end(), C.begin(), C.end())) continue;
            auto J = join(S, C);
            if (subs.insert(J).second) queue.push_back(J);
        }
    }

    std::vector<PermGroup> out;
    out.reserve(subs.size());
    for (const auto& S : subs) {
        std::vector<SignedPerm> members;
        members.reserve(S.size());
        for (uint16_t v : S) members.push_back(elems[v]);
        out.push_back(PermGroup::from_elements(g, std::move(members)));
    }
    std::sort(out.begin(), out.end(), [](const PermGroup& a, const PermGroup& b) {
        if (a.order() != b.order()) return a.order() < b.order();
        return a.elements() < b.elements();
    });
    return out;
}

namespace {

std::string serialize_elements(const std::vector<SignedPerm>& sorted_elems) {
    std::string out;
    char buf[20];
    for (const auto& p : sorted_elems) {
        std::snprintf(buf, sizeof buf, "%016llx",
                      static_cast<unsigned long long>(p.packed()));
        out += buf;
    }
    return out;
}

} // namespace

std::string canonical_key(const PermGroup& G, const PermGroup& by) {
    // orbit of G under conjugation by `by`, tracking the lexicographic minimum
    std::set<std::vector<SignedPerm>> seen;
    std::deque<std::vector<SignedPerm>> queue;
    seen.insert(G.elements());
    queue.push_back(G.elements());
    std::vector<SignedPerm> best = G.elements();
    const auto& gens = by.generators().empty() ? by.elements() : by.generators();
    while (!queue.empty()) {
        auto S = queue.front();
        queue.pop_front();
        for (const auto& t : gens) {
            SignedPerm ti = inverse(t);
            std::vector<SignedPerm> T;
            T.reserve(S.size());
            for (const auto& s : S) T.push_back(compose(compose(t, s), ti));
            std::sort(T.begin(), T.end());
            if (seen.insert(T).second) {
                if (T < best) best = T;
                queue.push_back(T);
            }
        }
    }
    return serialize_elements(best);
}

std::string canonical_label(const PermGroup& G, const std::string& key) {
    // FNV-1a 64-bit over the key
    uint64_t h = 1469598103934665603ull;
    for (char c : key) {
        h ^= static_cast<unsigned char>(c);
        h *= 1099511628211ull;
    }
    char buf[64];
    std::snprintf(buf, sizeof buf, "W%d.o%zu.%016llx", 2 * G.g(), G.order(),
                  static_cast<unsigned long long>(h));
    return buf;
}

} // namespace weil
