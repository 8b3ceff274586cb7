#include "weil/classify.hpp"

#include <atomic>
#include <chrono>
#include <fstream>
#include <sstream>
#include <thread>

#include <json.hpp>

namespace weil {

ClassifyFilters preset_filters(const std::string& name) {
    ClassifyFilters f;
    if (name == "appendix") {
        // defaults
    } else if (name == "all") {
        f.geom_simple_only = false;
        f.require_strong_admissible = false;
        f.require_nonmax_angle_rank = false;
    } else if (name == "exceptional-only") {
        f.require_strong_admissible = false;
        f.require_nonmax_angle_rank = false;
        f.exceptional_only = true;
        f.compute_admissibility = false;
    } else {
        throw validation_error("unknown preset: " + name +
                               " (want appendix, all, or exceptional-only)");
    }
    return f;
}

namespace {

// per-p strong-admissibility flags, sharing the chain enumeration
std::vector<std::pair<int, bool>> strong_admissible_by_prime(const WeightedPermRep& rho,
                                                             const std::vector<int>& sweep) {
    std::vector<std::pair<int, bool>> out;
    for (int p : sweep) out.emplace_back(p, false);

    // integral weights: the trivial chain is strong at every p
    bool integral = true;
    for (const auto& v : rho.weight().values())
        if (!is_integral(v)) integral = false;
    if (integral) {
        for (auto& [p, s] : out) s = true;
        return out;
    }

    PermGroup stab = stabilizer_of_weight(rho.weight());
    PermGroup M = intersect(rho.group(), stab);
    size_t remaining = sweep.size();

    for (const auto& D : all_subgroups(M)) {
        if (remaining == 0) break;
        bool strong_d = true;
        for (const auto& orb : D.symbol_orbits()) {
            Rational s(0);
            for (int x : orb) s += rho.weight()(x);
            if (!is_integral(s)) {
                strong_d = false;
                break;
            }
        }
        if (!strong_d) continue;
        auto dsubs = all_subgroups(D);
        std::vector<PermGroup> normals;
        for (const auto& N : dsubs) {
            bool normal = true;
            for (const auto& d : D.generators().empty() ? D.elements() : D.generators()) {
                SignedPerm di = inverse(d);
                for (const auto& nrm : N.elements())
                    if (!N.contains(compose(compose(d, nrm), di))) {
                        normal = false;
                        break;
                    }
                if (!normal) break;
            }
            if (normal) normals.push_back(N);
        }
        for (const auto& G0 : normals)
            for (const auto& G1 : normals) {
                if (!G1.is_subgroup_of(G0)) continue;
                for (auto& [p, found] : out) {
                    if (found) continue;
                    if (check_local_galois_conditions(Filtration{D, G0, G1, p})) {
                        found = true;
                        --remaining;
                    }
                }
                if (remaining == 0) break;
            }
    }
    return out;
}

ClassificationEntry build_entry(const EnumeratedClass& cls, const WeightFunction& w,
                                const ClassifyFilters& f, bool* keep) {
    ClassificationEntry e;
    e.canonical_label = cls.label;
    e.canonical_key = cls.key;
    e.group = cls.group;
    e.quotient_gens = cls.quotient_gens;
    *keep = false;

    WeightedPermRep rho(w, cls.group);
    e.geometrically_simple = rho.is_geometrically_simple();
    if (f.geom_simple_only && !e.geometrically_simple) return e;

    e.angle_rank = rho.angle_rank();
    if (f.require_nonmax_angle_rank && e.angle_rank >= w.g()) return e;

    e.level_parts = rho.level_set_partition().second;

    if (f.compute_admissibility || f.require_strong_admissible) {
        e.admissible_primes = strong_admissible_by_prime(rho, f.p_sweep);
        bool any_strong = false;
        for (const auto& [p, s] : e.admissible_primes) any_strong |= s;
        if (f.require_strong_admissible && !any_strong) return e;
    }

    if (e.geometrically_simple) {
        e.witnesses = rho.exceptional_witnesses();
        e.exceptional = !e.witnesses.empty();
    }
    if (f.exceptional_only && !e.exceptional) return e;

    *keep = true;
    return e;
}

std::string prime_name(int p) {
    return p == kGenericPrime ? std::string("generic") : std::to_string(p);
}

} // namespace

ClassificationTable classify_newton(int g, const NewtonPolygon& np, const ClassifyFilters& f,
                                    const ClassifyOptions& opts,
                                    const std::string& preset_name) {
    if (g != np.g())
        throw validation_error("newton polygon has g = " + std::to_string(np.g()) +
                               ", expected " + std::to_string(g));
    if (g > opts.g_limit)
        throw resource_limit_error("classification limited to g <= " +
                                   std::to_string(opts.g_limit));
    if (g >= 6 && !opts.allow_g6)
        throw resource_limit_error(
            "dimension-6 classification is gated; pass the enable flag (and optionally a "
            "checkpoint path)");

    auto t0 = std::chrono::steady_clock::now();
    ClassificationTable table;
    table.g = g;
    table.newton = np.to_string();
    table.preset = preset_name;

    WeightFunction w = weight_from_newton(np);
    EnumerateOptions eopts;
    eopts.checkpoint_path = opts.checkpoint_path;
    eopts.progress = opts.enumeration_progress;
    auto classes = enumerate_transitive_subgroups(w, opts.g_limit, eopts);

    const int jobs = std::max(1, opts.jobs);
    std::vector<std::optional<ClassificationEntry>> slots(classes.size());
    std::atomic<size_t> next{0};
    auto worker = [&] {
        for (;;) {
            size_t i = next.fetch_add(1);
            if (i >= classes.size()) return;
            bool keep = false;
            ClassificationEntry e = build_entry(classes[i], w, f, &keep);
            if (keep) slots[i] = std::move(e);
        }
    };
    if (jobs == 1) {
        worker();
    } else {
        std::vector<std::thread> pool;
        for (int t = 0; t < jobs; ++t) pool.emplace_back(worker);
        for (auto& th : pool) th.join();
    }
    for (auto& s : slots)
        if (s) table.entries.push_back(std::move(*s));

    table.seconds =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    return table;
}

SweepResult sweep_dimension(int g, const ClassifyFilters& f, const ClassifyOptions& opts,
                            const std::string& preset_name) {
    SweepResult res;
    for (const auto& np : all_newton_polygons(g)) {
        ClassificationTable t = classify_newton(g, np, f, opts, preset_name);
        if (t.entries.empty()) res.empty_polygons.push_back(t.newton);
        res.tables.push_back(std::move(t));
    }
    return res;
}

AliasMap load_aliases(const std::string& path) {
    AliasMap out;
    std::ifstream in(path);
    if (!in) throw validation_error("cannot open alias file: " + path);
    nlohmann::json j;
    in >> j;
    for (const auto& e : j.at("entries")) {
        AliasEntry a;
        a.paper_label = e.value("label", "");
        a.example_label = e.value("example", "");
        out[{e.at("g").get<int>(), e.at("newton").get<std::string>(),
             e.at("canonical").get<std::string>()}] = a;
    }
    return out;
}

std::string table_to_json(const ClassificationTable& t, bool include_timing) {
    nlohmann::ordered_json j;
    j["schema"] = "weil-lab/1";
    j["g"] = t.g;
    j["newton"] = t.newton;
    j["preset"] = t.preset;
    j["entries"] = nlohmann::ordered_json::array();
    for (const auto& e : t.entries) {
        nlohmann::ordered_json je;
        je["label"] = e.canonical_label;
        je["order"] = e.group.order();
        nlohmann::ordered_json gens = nlohmann::ordered_json::array();
        for (const auto& p : e.quotient_gens) gens.push_back(to_cycle_string(p));
        je["generators_mod_conjugation"] = gens;
        je["angle_rank"] = e.angle_rank;
        je["level_parts"] = e.level_parts;
        je["geometrically_simple"] = e.geometrically_simple;
        je["exceptional"] = e.exceptional;
        nlohmann::ordered_json wits = nlohmann::ordered_json::array();
        for (const auto& w : e.witnesses) {
            nlohmann::ordered_json jw;
            jw["t_plus"] = nlohmann::ordered_json::array();
            for (int i : w.t_plus) jw["t_plus"].push_back(i + 1);
            jw["t_minus"] = nlohmann::ordered_json::array();
            for (int i : w.t_minus) jw["t_minus"].push_back(i + 1);
            jw["codim_bound"] = w.codim_bound;
            wits.push_back(jw);
        }
        je["witnesses"] = wits;
        nlohmann::ordered_json adm = nlohmann::ordered_json::array();
        for (const auto& [p, s] : e.admissible_primes) {
            nlohmann::ordered_json ja;
            ja["p"] = prime_name(p);
            ja["strong"] = s;
            adm.push_back(ja);
        }
        je["admissible_primes"] = adm;
        je["canonical_key"] = e.canonical_key;
        j["entries"].push_back(je);
    }
    if (include_timing) j["timing_seconds"] = t.seconds;
    return j.dump(2) + "\n";
}

std::string table_to_markdown(const ClassificationTable& t, const AliasMap* aliases) {
    std::ostringstream os;
    os << "### g = " << t.g << ", Newton polygon [" << t.newton << "]\n\n";
    if (t.entries.empty()) {
        os << "(no entries)\n";
        return os.str();
    }
    os << "| class | generators for G/i | delta | exceptional | example |\n";
    os << "|---|---|---|---|---|\n";
    for (const auto& e : t.entries) {
        std::string label = e.canonical_label;
        std::string example;
        if (aliases) {
            auto it = aliases->find({t.g, t.newton, e.canonical_label});
            if (it != aliases->end()) {
                if (!it->second.paper_label.empty()) label = it->second.paper_label;
                example = it->second.example_label;
            }
        }
        os << "| " << label << " | ";
        for (size_t i = 0; i < e.quotient_gens.size(); ++i) {
            if (i) os << ", ";
            os << to_cycle_string(e.quotient_gens[i]);
        }
        os << " | " << e.angle_rank << " | " << (e.exceptional ? "Yes" : "No") << " | "
           << example << " |\n";
    }
    return os.str();
}

} // namespace weil
