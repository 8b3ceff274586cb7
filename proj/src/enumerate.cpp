#include "weil/enumerate.hpp"

#include <algorithm>
#include <cassert>
#include <deque>
#include <fstream>
#include <map>
#include <mutex>
#include <numeric>
#include <sstream>
#include <unordered_set>

#include "weil/errors.hpp"

namespace weil {

namespace {

uint64_t splitmix64(uint64_t x) {
    x += 0x9e3779b97f4a7c15ull;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ull;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebull;
    return x ^ (x >> 31);
}

struct Hash128 {
    uint64_t a = 0, b = 0;
    bool operator==(const Hash128& o) const { return a == o.a && b == o.b; }
};

struct Hash128Hasher {
    size_t operator()(const Hash128& h) const { return h.a ^ (h.b * 0x9e3779b97f4a7c15ull); }
};

// order-independent subset hash
Hash128 hash_subset(const std::vector<uint32_t>& elems) {
    Hash128 h;
    h.a = splitmix64(elems.size() * 0xabcdef1234567ull + 17);
    h.b = splitmix64(elems.size() + 0x123456789ull);
    for (uint32_t e : elems) {
        h.a += splitmix64(0x1000000007ull * e + 1);
        h.b ^= splitmix64(0x2000000011ull * e + 2);
    }
    return h;
}

struct Bits {
    std::vector<uint64_t> w;
    explicit Bits(size_t n) : w((n + 63) / 64, 0) {}
    bool test(uint32_t i) const { return (w[i >> 6] >> (i & 63)) & 1; }
    void set(uint32_t i) { w[i >> 6] |= 1ull << (i & 63); }
};

SignedPerm iota_partner(const SignedPerm& p, int g) {
    SignedPerm q;
    q.img.resize(p.img.size());
    for (size_t i = 0; i < p.img.size(); ++i)
        q.img[i] = static_cast<uint8_t>(conjugate_symbol(p.img[i], g));
    return q;
}

} // namespace

QuotientUniverse::QuotientUniverse(int g) : g_(g) {
    auto all = all_hyperoctahedral(g);
    std::vector<SignedPerm> reps;
    reps.reserve(all.size() / 2 + 1);
    for (auto& p : all) {
        SignedPerm partner = iota_partner(p, g);
        if (p.packed() <= partner.packed()) reps.push_back(p);
    }
    std::sort(reps.begin(), reps.end(),
              [](const SignedPerm& a, const SignedPerm& b) { return a.packed() < b.packed(); });
    reps_ = std::move(reps);
    codes_.resize(reps_.size());
    for (size_t i = 0; i < reps_.size(); ++i) codes_[i] = reps_[i].packed();

    // lookup table, power-of-two size with linear probing
    size_t cap = 1;
    while (cap < reps_.size() * 2) cap <<= 1;
    table_code_.assign(cap, ~0ull);
    table_idx_.assign(cap, 0);
    for (size_t i = 0; i < reps_.size(); ++i) {
        uint64_t c = codes_[i];
        size_t slot = splitmix64(c) & (cap - 1);
        while (table_code_[slot] != ~0ull) slot = (slot + 1) & (cap - 1);
        table_code_[slot] = c;
        table_idx_[slot] = static_cast<uint32_t>(i);
    }

    id_ = lookup(identity_perm(g).packed());

    inv_.resize(reps_.size());
    for (uint32_t i = 0; i < reps_.size(); ++i) inv_[i] = index_of(inverse(reps_[i]));

    order_.resize(reps_.size());
    prime_power_.resize(reps_.size());
    for (uint32_t i = 0; i < reps_.size(); ++i) {
        uint32_t e = i, n = 1;
        while (e != id_) {
            e = mult(e, i);
            ++n;
        }
        order_[i] = n;
        uint32_t m = n;
        if (m > 1) {
            uint32_t p = 2;
            while (m % p != 0) ++p;
            while (m % p == 0) m /= p;
        }
        prime_power_[i] = (n > 1 && order_[i] > 0 && m == 1);
    }

    pair_act_.resize(reps_.size() * static_cast<size_t>(g));
    for (uint32_t i = 0; i < reps_.size(); ++i)
        for (int pr = 0; pr < g; ++pr) {
            int y = reps_[i](pr);
            pair_act_[i * static_cast<uint32_t>(g) + static_cast<uint32_t>(pr)] =
                static_cast<uint8_t>(y < g ? y : conjugate_symbol(y, g));
        }

    PermGroup full = full_hyperoctahedral(g);
    for (const auto& p : full.generators()) group_gens_.push_back(index_of(p));
    std::sort(group_gens_.begin(), group_gens_.end());
    group_gens_.erase(std::unique(group_gens_.begin(), group_gens_.end()), group_gens_.end());
}

uint32_t QuotientUniverse::lookup(uint64_t code) const {
    size_t cap = table_code_.size();
    size_t slot = splitmix64(code) & (cap - 1);
    while (table_code_[slot] != code) {
        if (table_code_[slot] == ~0ull) throw error("quotient lookup miss");
        slot = (slot + 1) & (cap - 1);
    }
    return table_idx_[slot];
}

uint32_t QuotientUniverse::index_of(const SignedPerm& p) const {
    SignedPerm partner = iota_partner(p, g_);
    uint64_t c = std::min(p.packed(), partner.packed());
    return lookup(c);
}

uint32_t QuotientUniverse::mult(uint32_t a, uint32_t b) const {
    const SignedPerm& pa = reps_[a];
    const SignedPerm& pb = reps_[b];
    SignedPerm c;
    c.img.resize(pa.img.size());
    for (size_t i = 0; i < pa.img.size(); ++i) c.img[i] = pa.img[pb.img[i]];
    SignedPerm partner = iota_partner(c, g_);
    return lookup(std::min(c.packed(), partner.packed()));
}

namespace {

// incremental closure <H, x> by coset-of-H breadth-first search
std::vector<uint32_t> close_with(const QuotientUniverse& U, const std::vector<uint32_t>& helems,
                                 const std::vector<uint32_t>& hgens, uint32_t x, Bits& scratch) {
    std::fill(scratch.w.begin(), scratch.w.end(), 0);
    std::vector<uint32_t> elems = helems;
    for (uint32_t e : helems) scratch.set(e);
    std::vector<uint32_t> gens = hgens;
    gens.push_back(x);
    std::deque<uint32_t> reps{U.identity()};
    while (!reps.empty()) {
        uint32_t r = reps.front();
        reps.pop_front();
        for (uint32_t s : gens) {
            uint32_t t = U.mult(r, s);
            if (scratch.test(t)) continue;
            for (uint32_t h : helems) {
                uint32_t u = U.mult(h, t);
                if (!scratch.test(u)) {
                    scratch.set(u);
                    elems.push_back(u);
                }
            }
            reps.push_back(t);
        }
    }
    std::sort(elems.begin(), elems.end());
    return elems;
}

bool pullback_transitive(const QuotientUniverse& U, const std::vector<uint32_t>& gens) {
    const int g = U.g();
    if (g == 1) return true; // iota alone is transitive on {1, 1bar}
    std::vector<bool> in(static_cast<size_t>(g), false);
    std::vector<int> orb{0};
    in[0] = true;
    for (size_t i = 0; i < orb.size(); ++i)
        for (uint32_t s : gens) {
            int y = U.pair_image(s, orb[i]);
            if (!in[static_cast<size_t>(y)]) {
                in[static_cast<size_t>(y)] = true;
                orb.push_back(y);
            }
        }
    return orb.size() == static_cast<size_t>(g);
}

struct ClassRecord {
    std::vector<uint32_t> elems;
    std::vector<uint32_t> gens;
    bool processed = false;
};

void write_checkpoint(const std::string& path, int g, const std::vector<ClassRecord>& classes) {
    std::ofstream out(path + ".tmp", std::ios::trunc);
    out << "weil-lab-enum/1 " << g << "\n";
    for (const auto& c : classes) {
        out << (c.processed ? 1 : 0);
        for (uint32_t s : c.gens) out << " " << s;
        out << "\n";
    }
    out.close();
    std::rename((path + ".tmp").c_str(), path.c_str());
}

bool read_checkpoint(const std::string& path, int g, std::vector<ClassRecord>& classes) {
    std::ifstream in(path);
    if (!in) return false;
    std::string magic;
    int gg = 0;
    in >> magic >> gg;
    if (magic != "weil-lab-enum/1" || gg != g) return false;
    std::string line;
    std::getline(in, line);
    while (std::getline(in, line)) {
        if (line.empty()) continue;
        std::istringstream ss(line);
        ClassRecord rec;
        int processed = 0;
        ss >> processed;
        rec.processed = processed != 0;
        uint32_t v;
        while (ss >> v) rec.gens.push_back(v);
        classes.push_back(std::move(rec));
    }
    return !classes.empty();
}

} // namespace

std::vector<SubgroupClass> enumerate_subgroup_classes(const QuotientUniverse& U,
                                                      const EnumerateOptions& opts) {
    const uint32_t n = U.size();
    std::unordered_set<Hash128, Hash128Hasher> seen;
    seen.reserve(1 << 16);
    std::vector<ClassRecord> classes;

    // register a subgroup's whole conjugation orbit in `seen`
    auto register_orbit = [&](const std::vector<uint32_t>& elems) {
        std::unordered_set<Hash128, Hash128Hasher> local;
        std::deque<std::vector<uint32_t>> queue;
        Hash128 h0 = hash_subset(elems);
        local.insert(h0);
        seen.insert(h0);
        queue.push_back(elems);
        while (!queue.empty()) {
            auto cur = std::move(queue.front());
            queue.pop_front();
            for (uint32_t t : U.group_generators()) {
                std::vector<uint32_t> conj(cur.size());
                for (size_t i = 0; i < cur.size(); ++i) conj[i] = U.conj(t, cur[i]);
                std::sort(conj.begin(), conj.end());
                Hash128 h = hash_subset(conj);
                if (local.insert(h).second) {
                    seen.insert(h);
                    queue.push_back(conj);
                }
            }
        }
    };

    bool resumed = false;
    if (!opts.checkpoint_path.empty()) {
        std::vector<ClassRecord> loaded;
        if (read_checkpoint(opts.checkpoint_path, U.g(), loaded)) {
            // rebuild element lists and seen-hashes from generator lists
            Bits scratch(n);
            for (auto& rec : loaded) {
                std::vector<uint32_t> elems{U.identity()};
                std::vector<uint32_t> gens;
                for (uint32_t s : rec.gens) {
                    elems = close_with(U, elems, gens, s, scratch);
                    gens.push_back(s);
                }
                rec.elems = std::move(elems);
                register_orbit(rec.elems);
            }
            classes = std::move(loaded);
            resumed = true;
        }
    }
    if (!resumed) {
        ClassRecord triv;
        triv.elems = {U.identity()};
        classes.push_back(std::move(triv));
        register_orbit(classes[0].elems);
    }

    Bits scratch(n);
    size_t since_checkpoint = 0;
    for (size_t ci = 0; ci < classes.size(); ++ci) {
        if (classes[ci].processed) continue;
        // copy: classes vector may reallocate while we extend
        std::vector<uint32_t> helems = classes[ci].elems;
        std::vector<uint32_t> hgens = classes[ci].gens;
        const size_t hsize = helems.size();

        Bits covered(n);
        for (uint32_t e : helems) covered.set(e);
        const bool mark_full_double_coset = hsize <= 2048;

        for (uint32_t x = 0; x < n; ++x) {
            if (covered.test(x)) continue;
            // A subgroup is a maximal subgroup extended by one prime-power
            // element, so only those candidates are needed. Marking the double
            // coset is restricted to processed candidates: <H, y> = <H, x> for
            // every y in HxH.
            if (!U.has_prime_power_order(x)) continue;
            auto kelems = close_with(U, helems, hgens, x, scratch);
            Hash128 h = hash_subset(kelems);
            if (seen.find(h) == seen.end()) {
                ClassRecord rec;
                rec.elems = std::move(kelems);
                rec.gens = hgens;
                rec.gens.push_back(x);
                register_orbit(rec.elems);
                classes.push_back(std::move(rec));
            }
            if (mark_full_double_coset) {
                for (uint32_t h1 : helems) {
                    uint32_t y = U.mult(h1, x);
                    if (h1 != U.identity() && covered.test(y)) continue;
                    for (uint32_t h2 : helems) covered.set(U.mult(y, h2));
                }
            } else {
                for (uint32_t h2 : helems) covered.set(U.mult(x, h2));
            }
        }
        classes[ci].processed = true;

        if (opts.progress) opts.progress(ci + 1, classes.size());
        if (!opts.checkpoint_path.empty() && ++since_checkpoint >= opts.checkpoint_every) {
            since_checkpoint = 0;
            write_checkpoint(opts.checkpoint_path, U.g(), classes);
        }
    }
    if (!opts.checkpoint_path.empty()) write_checkpoint(opts.checkpoint_path, U.g(), classes);

    std::vector<SubgroupClass> out;
    out.reserve(classes.size());
    for (auto& rec : classes) {
        SubgroupClass sc;
        sc.elems = std::move(rec.elems);
        sc.gens = std::move(rec.gens);
        std::vector<uint32_t> gens_or_all = sc.gens.empty() ? sc.elems : sc.gens;
        sc.transitive = pullback_transitive(U, gens_or_all);
        out.push_back(std::move(sc));
    }
    return out;
}

GroupEnumeration enumerate_for_dimension(int g, const EnumerateOptions& opts) {
    static std::mutex mu;
    static std::map<int, GroupEnumeration> cache;
    {
        std::lock_guard<std::mutex> lk(mu);
        auto it = cache.find(g);
        if (it != cache.end()) return it->second;
    }
    GroupEnumeration e;
    e.universe = std::make_shared<QuotientUniverse>(g);
    e.classes = std::make_shared<std::vector<SubgroupClass>>(
        enumerate_subgroup_classes(*e.universe, opts));
    std::lock_guard<std::mutex> lk(mu);
    cache.emplace(g, e);
    return e;
}

namespace {

// pull a quotient subgroup back to W_2g (adjoining iota)
PermGroup pull_back(const QuotientUniverse& U, const std::vector<uint32_t>& elems,
                    const std::vector<uint32_t>& gens) {
    const int g = U.g();
    std::vector<SignedPerm> full;
    full.reserve(elems.size() * 2);
    for (uint32_t e : elems) {
        full.push_back(U.rep(e));
        full.push_back(iota_partner(U.rep(e), g));
    }
    std::vector<SignedPerm> wgens;
    for (uint32_t s : gens) wgens.push_back(U.rep(s));
    wgens.push_back(conjugation_element(g));
    return PermGroup::from_elements(g, std::move(full), std::move(wgens));
}

std::string serialize_packed(const std::vector<uint64_t>& codes) {
    std::string out;
    char buf[20];
    for (uint64_t c : codes) {
        std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(c));
        out += buf;
    }
    return out;
}

// sorted packed codes of the W-level pullback of a conjugated quotient group
std::vector<uint64_t> wlevel_codes(const QuotientUniverse& U, const std::vector<uint32_t>& elems,
                                   uint32_t t) {
    const int g = U.g();
    std::vector<uint64_t> codes;
    codes.reserve(elems.size() * 2);
    for (uint32_t e : elems) {
        uint32_t c = U.conj(t, e);
        const SignedPerm& p = U.rep(c);
        codes.push_back(p.packed());
        codes.push_back(iota_partner(p, g).packed());
    }
    std::sort(codes.begin(), codes.end());
    return codes;
}

struct DisjointSet {
    std::vector<int> parent;
    explicit DisjointSet(size_t n) : parent(n) { std::iota(parent.begin(), parent.end(), 0); }
    int find(int a) {
        while (parent[a] != a) a = parent[a] = parent[parent[a]];
        return a;
    }
    void unite(int a, int b) {
        a = find(a);
        b = find(b);
        if (a != b) parent[std::max(a, b)] = std::min(a, b);
    }
};

} // namespace

std::vector<EnumeratedClass> enumerate_transitive_subgroups(const WeightFunction& w, int g_limit,
                                                            const EnumerateOptions& opts) {
    const int g = w.g();
    if (g > g_limit)
        throw resource_limit_error("subgroup enumeration limited to g <= " +
                                   std::to_string(g_limit));
    GroupEnumeration enumr = enumerate_for_dimension(g, opts);
    const QuotientUniverse& U = *enumr.universe;
    const uint32_t n = U.size();

    // Stab(w) in the quotient
    PermGroup stab = stabilizer_of_weight(w);
    std::vector<uint32_t> stab_gens;
    for (const auto& p : stab.generators()) stab_gens.push_back(U.index_of(p));
    stab_gens.push_back(U.identity());
    std::sort(stab_gens.begin(), stab_gens.end());
    stab_gens.erase(std::unique(stab_gens.begin(), stab_gens.end()), stab_gens.end());

    std::vector<EnumeratedClass> out;
    std::vector<uint32_t> coset_id(n), coset_rep;
    for (const auto& cls : *enumr.classes) {
        if (!cls.transitive) continue;
        const std::vector<uint32_t>& gens_or_all = cls.gens.empty() ? cls.elems : cls.gens;

        // normalizer of the class representative in Q
        Bits in_g(n);
        for (uint32_t e : cls.elems) in_g.set(e);
        std::vector<uint32_t> normalizer;
        for (uint32_t t = 0; t < n; ++t) {
            bool ok = true;
            for (uint32_t s : gens_or_all)
                if (!in_g.test(U.conj(t, s))) {
                    ok = false;
                    break;
                }
            if (ok) normalizer.push_back(t);
        }

        // left cosets t N
        std::fill(coset_id.begin(), coset_id.end(), ~0u);
        coset_rep.clear();
        for (uint32_t t = 0; t < n; ++t) {
            if (coset_id[t] != ~0u) continue;
            uint32_t cid = static_cast<uint32_t>(coset_rep.size());
            coset_rep.push_back(t);
            for (uint32_t nu : normalizer) coset_id[U.mult(t, nu)] = cid;
        }

        // Stab(w)-orbits on cosets by left multiplication
        DisjointSet ds(coset_rep.size());
        for (uint32_t cid = 0; cid < coset_rep.size(); ++cid)
            for (uint32_t s : stab_gens)
                ds.unite(static_cast<int>(cid),
                         static_cast<int>(coset_id[U.mult(s, coset_rep[cid])]));

        std::map<int, std::vector<uint32_t>> components;
        for (uint32_t cid = 0; cid < coset_rep.size(); ++cid)
            components[ds.find(static_cast<int>(cid))].push_back(coset_rep[cid]);

        for (auto& [root, members] : components) {
            // canonical key: lexicographically least W-level element list across
            // the component's conjugates
            std::vector<uint64_t> best;
            uint32_t best_t = members.front();
            for (uint32_t t : members) {
                auto codes = wlevel_codes(U, cls.elems, t);
                if (best.empty() || codes < best) {
                    best = std::move(codes);
                    best_t = t;
                }
            }
            // representative subgroup: conjugate of the class rep realizing the key
            std::vector<uint32_t> conj_elems(cls.elems.size());
            for (size_t i = 0; i < cls.elems.size(); ++i)
                conj_elems[i] = U.conj(best_t, cls.elems[i]);
            std::sort(conj_elems.begin(), conj_elems.end());
            std::vector<uint32_t> conj_gens;
            for (uint32_t s : gens_or_all) conj_gens.push_back(U.conj(best_t, s));

            EnumeratedClass ec{pull_back(U, conj_elems, conj_gens), {},
                               serialize_packed(best), ""};
            for (uint32_t s : conj_gens) ec.quotient_gens.push_back(U.rep(s));
            ec.label = canonical_label(ec.group, ec.key);
            out.push_back(std::move(ec));
        }
    }

    std::sort(out.begin(), out.end(), [](const EnumeratedClass& a, const EnumeratedClass& b) {
        if (a.group.order() != b.group.order()) return a.group.order() < b.group.order();
        return a.key < b.key;
    });
    return out;
}

} // namespace weil
