#include "weil/admissible.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <set>

namespace weil {

bool is_prime(long p) {
    if (p < 2) return false;
    for (long d = 2; d * d <= p; ++d)
        if (p % d == 0) return false;
    return true;
}

namespace {

bool is_normal_in(const PermGroup& N, const PermGroup& D) {
    for (const auto& d : D.generators().empty() ? D.elements() : D.generators()) {
        SignedPerm di = inverse(d);
        for (const auto& n : N.elements())
            if (!N.contains(compose(compose(d, n), di))) return false;
    }
    return true;
}

// quotient D/N as index table: coset id per element of D, plus coset reps
struct Quotient {
    std::vector<SignedPerm> delems;
    std::vector<int> coset_of;   // aligned with delems
    std::vector<SignedPerm> rep; // one per coset, the minimal member
    int id_coset = 0;

    int coset_of_elem(const SignedPerm& x) const {
        auto it = std::lower_bound(delems.begin(), delems.end(), x);
        return coset_of[static_cast<size_t>(it - delems.begin())];
    }
    int mult(int a, int b) const { return coset_of_elem(compose(rep[a], rep[b])); }
    size_t size() const { return rep.size(); }
};

Quotient make_quotient(const PermGroup& D, const PermGroup& N) {
    Quotient q;
    q.delems = D.elements();
    q.coset_of.assign(q.delems.size(), -1);
    for (size_t i = 0; i < q.delems.size(); ++i) {
        if (q.coset_of[i] != -1) continue;
        int cid = static_cast<int>(q.rep.size());
        q.rep.push_back(q.delems[i]); // elements sorted, so first member is minimal
        for (const auto& n : N.elements()) {
            SignedPerm e = compose(q.delems[i], n);
            auto it = std::lower_bound(q.delems.begin(), q.delems.end(), e);
            q.coset_of[static_cast<size_t>(it - q.delems.begin())] = cid;
        }
    }
    q.id_coset = q.coset_of_elem(identity_perm(D.g()));
    return q;
}

int coset_order(const Quotient& q, int a) {
    int e = a, n = 1;
    while (e != q.id_coset) {
        e = q.mult(e, a);
        ++n;
    }
    return n;
}

bool quotient_cyclic(const Quotient& q) {
    for (size_t a = 0; a < q.size(); ++a)
        if (coset_order(q, static_cast<int>(a)) == static_cast<int>(q.size())) return true;
    return q.size() == 1;
}

bool is_p_power(size_t n, long p) {
    while (n % static_cast<size_t>(p) == 0) n /= static_cast<size_t>(p);
    return n == 1;
}

} // namespace

bool check_local_galois_conditions(const Filtration& f) {
    const bool generic = (f.p == kGenericPrime);
    if (!generic && !is_prime(f.p))
        throw validation_error("p must be prime (or 0 for the generic case)");

    if (!f.G1.is_subgroup_of(f.G0) || !f.G0.is_subgroup_of(f.D)) return false;
    if (!is_normal_in(f.G0, f.D)) return false;
    if (!is_normal_in(f.G1, f.D)) return false;

    // wild part is a p-group (trivial in the generic case)
    if (generic) {
        if (f.G1.order() != 1) return false;
    } else if (!is_p_power(f.G1.order(), f.p)) {
        return false;
    }

    // tame quotient cyclic of order prime to p
    Quotient g0q = make_quotient(f.G0, f.G1);
    if (!quotient_cyclic(g0q)) return false;
    if (!generic && g0q.size() % static_cast<size_t>(f.p) == 0) return false;

    // unramified quotient cyclic
    if (!quotient_cyclic(make_quotient(f.D, f.G0))) return false;

    // generators sigma, tau of D/G1 with <tau> = G0/G1 and
    // sigma tau sigma^-1 = tau^p
    Quotient dq = make_quotient(f.D, f.G1);
    const int nq = static_cast<int>(dq.size());
    std::set<int> g0_cosets;
    for (const auto& x : f.G0.elements()) g0_cosets.insert(dq.coset_of_elem(x));

    for (int t = 0; t < nq; ++t) {
        // <tau> must be exactly G0/G1
        std::set<int> gen{dq.id_coset};
        int e = t;
        while (gen.find(e) == gen.end()) {
            gen.insert(e);
            e = dq.mult(e, t);
        }
        if (gen != g0_cosets) continue;
        int ordt = coset_order(dq, t);
        for (int s = 0; s < nq; ++s) {
            int lhs = dq.mult(dq.mult(s, t), dq.coset_of_elem(inverse(dq.rep[s])));
            bool iv_ok = false;
            if (generic) {
                // some power tau^k with gcd(k, ord tau) = 1; conjugation always
                // lands in <tau> here because G0/G1 is normal cyclic, so only
                // membership matters
                iv_ok = (gen.find(lhs) != gen.end());
            } else {
                int k = (ordt == 0) ? 0 : static_cast<int>(f.p % ordt);
                int rhs = dq.id_coset;
                for (int i = 0; i < k; ++i) rhs = dq.mult(rhs, t);
                iv_ok = (lhs == rhs);
            }
            if (!iv_ok) continue;
            // <sigma, tau> = D/G1: closure over coset indices
            std::set<int> cl{dq.id_coset};
            std::vector<int> frontier{dq.id_coset};
            while (!frontier.empty()) {
                int x = frontier.back();
                frontier.pop_back();
                for (int y : {dq.mult(x, s), dq.mult(x, t)})
                    if (cl.insert(y).second) frontier.push_back(y);
            }
            if (static_cast<int>(cl.size()) == nq) return true;
        }
    }
    return false;
}

bool strong_orbit_condition(const WeightedPermRep& rho, const PermGroup& D) {
    const auto& w = rho.weight();
    PermGroup stab = stabilizer_of_weight(w);
    if (!D.is_subgroup_of(stab))
        throw precondition_error("D must lie inside the stabilizer of the weight function");
    for (const auto& orb : D.symbol_orbits()) {
        Rational sum(0);
        for (int x : orb) sum += w(x);
        if (!is_integral(sum)) return false;
    }
    return true;
}

namespace {

bool orbit_sums_integral(const WeightFunction& w, const PermGroup& D) {
    for (const auto& orb : D.symbol_orbits()) {
        Rational sum(0);
        for (int x : orb) sum += w(x);
        if (!is_integral(sum)) return false;
    }
    return true;
}

// subgroups of M up to M-conjugacy, ascending (order, elements)
std::vector<PermGroup> subgroup_classes_up_to_conjugacy(const PermGroup& M) {
    auto subs = all_subgroups(M);
    std::vector<PermGroup> reps;
    std::set<std::vector<SignedPerm>> seen;
    for (const auto& S : subs) {
        if (seen.count(S.elements())) continue;
        // orbit of S under conjugation by M
        std::set<std::vector<SignedPerm>> orbit;
        std::vector<std::vector<SignedPerm>> queue{S.elements()};
        orbit.insert(S.elements());
        while (!queue.empty()) {
            auto cur = queue.back();
            queue.pop_back();
            for (const auto& t :
                 M.generators().empty() ? M.elements() : M.generators()) {
                SignedPerm ti = inverse(t);
                std::vector<SignedPerm> conj;
                conj.reserve(cur.size());
                for (const auto& s : cur) conj.push_back(compose(compose(t, s), ti));
                std::sort(conj.begin(), conj.end());
                if (orbit.insert(conj).second) queue.push_back(conj);
            }
        }
        for (const auto& o : orbit) seen.insert(o);
        reps.push_back(S);
    }
    return reps;
}

} // namespace

AdmissibilityReport find_admissible_filtrations(const WeightedPermRep& rho, int p,
                                                bool strong_only) {
    if (p != kGenericPrime && !is_prime(p))
        throw validation_error("p must be prime (or 0 for the generic case)");
    AdmissibilityReport report;
    report.checked_p.push_back(p);

    PermGroup stab = stabilizer_of_weight(rho.weight());
    PermGroup M = intersect(rho.group(), stab);

    for (const auto& D : subgroup_classes_up_to_conjugacy(M)) {
        const bool strong_d = orbit_sums_integral(rho.weight(), D);
        auto dsubs = all_subgroups(D);
        std::vector<PermGroup> normals;
        for (const auto& N : dsubs)
            if (is_normal_in(N, D)) normals.push_back(N);
        for (const auto& G0 : normals) {
            for (const auto& G1 : normals) {
                if (!G1.is_subgroup_of(G0)) continue;
                Filtration f{D, G0, G1, p};
                if (!check_local_galois_conditions(f)) continue;
                report.weak = true;
                if (strong_d) report.strong = true;
                if (strong_only && !strong_d) continue;
                report.witnesses.push_back(std::move(f));
                report.witness_strong.push_back(strong_d);
            }
        }
    }
    return report;
}

bool strong_admissible_exists(const WeightedPermRep& rho, const std::vector<int>& p_sweep) {
    PermGroup stab = stabilizer_of_weight(rho.weight());
    PermGroup M = intersect(rho.group(), stab);
    for (const auto& D : subgroup_classes_up_to_conjugacy(M)) {
        if (!orbit_sums_integral(rho.weight(), D)) continue;
        auto dsubs = all_subgroups(D);
        std::vector<PermGroup> normals;
        for (const auto& N : dsubs)
            if (is_normal_in(N, D)) normals.push_back(N);
        for (const auto& G0 : normals)
            for (const auto& G1 : normals) {
                if (!G1.is_subgroup_of(G0)) continue;
                for (int p : p_sweep)
                    if (check_local_galois_conditions(Filtration{D, G0, G1, p})) return true;
            }
    }
    return false;
}

} // namespace weil
