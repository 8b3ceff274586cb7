#include "weil/wpr.hpp"

#include <algorithm>
#include <map>
#include <sstream>

namespace weil {

bool ExceptionalWitness::operator<(const ExceptionalWitness& o) const {
    size_t a = t_plus.size() + t_minus.size();
    size_t b = o.t_plus.size() + o.t_minus.size();
    if (a != b) return a < b;
    if (t_plus != o.t_plus) return t_plus < o.t_plus;
    return t_minus < o.t_minus;
}

std::string ExceptionalWitness::to_string() const {
    auto part = [](const std::vector<int>& v) {
        std::string s = "{";
        for (size_t i = 0; i < v.size(); ++i) {
            if (i) s += ",";
            s += std::to_string(v[i] + 1);
        }
        return s + "}";
    };
    return part(t_plus) + "/" + part(t_minus);
}

ExceptionalWitness make_witness(std::vector<int> t_plus, std::vector<int> t_minus) {
    std::sort(t_plus.begin(), t_plus.end());
    std::sort(t_minus.begin(), t_minus.end());
    ExceptionalWitness w{std::move(t_plus), std::move(t_minus), 0};
    size_t total = w.t_plus.size() + w.t_minus.size();
    if (total == 0 || total % 2 != 0)
        throw validation_error("witness parts must have even positive total size");
    for (int i : w.t_plus)
        if (std::binary_search(w.t_minus.begin(), w.t_minus.end(), i))
            throw validation_error("witness parts must be disjoint");
    w.codim_bound = static_cast<int>(total / 2);
    return w;
}

WeightedPermRep::WeightedPermRep(WeightFunction w, PermGroup G)
    : w_(std::move(w)), group_(std::move(G)) {
    if (w_.g() != group_.g())
        throw validation_error("weight function and group have different g");
    if (!group_.contains_conjugation_element())
        throw validation_error("group must contain the conjugation element (1 1~)...(g g~)");
    if (!group_.is_transitive())
        throw validation_error("group must be transitive on the 2g symbols");
    // built up front: every consumer queries it, and eager construction keeps
    // concurrent readers lock-free
    const int n = 2 * g();
    auto m = std::make_shared<RatMatrix>(group_.order(), static_cast<size_t>(n));
    for (size_t r = 0; r < group_.order(); ++r) {
        SignedPerm inv = inverse(group_.elements()[r]);
        for (int x = 0; x < n; ++x) m->at(r, static_cast<size_t>(x)) = w_(inv(x));
    }
    phi_ = std::move(m);
}

const RatMatrix& WeightedPermRep::phi_matrix() const { return *phi_; }

bool WeightedPermRep::is_geometrically_simple() const {
    const RatMatrix& m = phi_matrix();
    const int n = 2 * g();
    for (int a = 0; a < n; ++a)
        for (int b = a + 1; b < n; ++b) {
            bool equal = true;
            for (size_t r = 0; r < m.rows() && equal; ++r)
                equal = (m.at(r, static_cast<size_t>(a)) == m.at(r, static_cast<size_t>(b)));
            if (equal) return false;
        }
    return true;
}

int WeightedPermRep::angle_rank() const {
    // eliminate over the 2g-row transpose; |G| columns
    return static_cast<int>(rank(phi_matrix().transposed())) - 1;
}

std::pair<std::vector<std::vector<int>>, int> WeightedPermRep::level_set_partition() const {
    const int gg = g();
    // C = elements preserving every pair; view as flip patterns on {1..g}
    std::vector<std::vector<bool>> patterns;
    for (const auto& p : group_.elements()) {
        bool in_c = true;
        for (int i = 0; i < gg && in_c; ++i)
            in_c = (p(i) == i || p(i) == conjugate_symbol(i, gg));
        if (!in_c) continue;
        std::vector<bool> pat(static_cast<size_t>(gg));
        for (int i = 0; i < gg; ++i) pat[static_cast<size_t>(i)] = (p(i) != i);
        patterns.push_back(std::move(pat));
    }
    // signature of i = the column of values across C
    std::map<std::vector<bool>, std::vector<int>> parts_by_sig;
    for (int i = 0; i < gg; ++i) {
        std::vector<bool> sig;
        sig.reserve(patterns.size());
        for (const auto& pat : patterns) sig.push_back(pat[static_cast<size_t>(i)]);
        parts_by_sig[sig].push_back(i);
    }
    std::vector<std::vector<int>> parts;
    for (auto& [sig, part] : parts_by_sig) parts.push_back(part);
    std::sort(parts.begin(), parts.end());
    return {parts, static_cast<int>(parts.size())};
}

std::vector<ExceptionalWitness> WeightedPermRep::exceptional_witnesses() const {
    if (!is_geometrically_simple())
        throw precondition_error(
            "exceptionality is defined only for geometrically simple pairs");
    const int gg = g();
    const RatMatrix& m = phi_matrix();
    const size_t rows = m.rows();

    std::vector<ExceptionalWitness> out;
    std::vector<int> assign(static_cast<size_t>(gg), 0); // 0, +1, -1
    // iterate all 3^g sign assignments
    while (true) {
        int np = 0, nm = 0;
        for (int v : assign) {
            if (v == 1) ++np;
            if (v == -1) ++nm;
        }
        if ((np + nm) % 2 == 0 && np + nm > 0) {
            Rational target = make_rational(np - nm, 2);
            bool ok = true;
            for (size_t r = 0; r < rows && ok; ++r) {
                Rational sum(0);
                for (int i = 0; i < gg; ++i) {
                    if (assign[static_cast<size_t>(i)] == 1)
                        sum += m.at(r, static_cast<size_t>(i));
                    else if (assign[static_cast<size_t>(i)] == -1)
                        sum -= m.at(r, static_cast<size_t>(i));
                }
                ok = (sum == target);
            }
            if (ok) {
                std::vector<int> tp, tm;
                for (int i = 0; i < gg; ++i) {
                    if (assign[static_cast<size_t>(i)] == 1) tp.push_back(i);
                    if (assign[static_cast<size_t>(i)] == -1) tm.push_back(i);
                }
                out.push_back(make_witness(std::move(tp), std::move(tm)));
            }
        }
        // next assignment in base-3 (0 -> 1 -> -1)
        int pos = 0;
        while (pos < gg) {
            int& v = assign[static_cast<size_t>(pos)];
            if (v == 0) {
                v = 1;
                break;
            }
            if (v == 1) {
                v = -1;
                break;
            }
            v = 0;
            ++pos;
        }
        if (pos == gg) break;
    }
    std::sort(out.begin(), out.end());
    return out;
}

std::string wpr_to_json(const WeightedPermRep& rho) {
    std::ostringstream os;
    os << "{\"g\":" << rho.g() << ",\"slopes\":\""
       << rho.weight().newton_polygon().to_string() << "\",\"generators\":[";
    const auto& gens = rho.group().generators();
    for (size_t i = 0; i < gens.size(); ++i) {
        if (i) os << ",";
        os << "\"" << to_cycle_string(gens[i]) << "\"";
    }
    os << "],\"order\":" << rho.group().order() << "}";
    return os.str();
}

} // namespace weil
