#pragma once

#include <functional>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "weil/admissible.hpp"
#include "weil/enumerate.hpp"
#include "weil/newton.hpp"
#include "weil/wpr.hpp"

namespace weil {

struct ClassifyFilters {
    bool geom_simple_only = true;
    bool require_strong_admissible = true;
    bool require_nonmax_angle_rank = true; // keep only delta < g
    bool exceptional_only = false;
    bool compute_admissibility = true; // fill admissible_primes per entry
    std::vector<int> p_sweep = {2, 3, 5, 7, kGenericPrime};
};

// "appendix": geometrically simple + strong admissibility for some p in the
// sweep + delta < g. "all": no filters. "exceptional-only": geometrically
// simple and exceptional.
ClassifyFilters preset_filters(const std::string& name);

struct ClassificationEntry {
    std::string canonical_label;
    std::string canonical_key;
    PermGroup group;
    std::vector<SignedPerm> quotient_gens; // generators of G/iota
    int angle_rank = 0;
    int level_parts = 0;
    bool geometrically_simple = false;
    bool exceptional = false;
    std::vector<ExceptionalWitness> witnesses;
    std::vector<std::pair<int, bool>> admissible_primes; // (p, strong exists)
};

struct ClassificationTable {
    int g = 0;
    std::string newton;   // csv slope list
    std::string preset;   // preset name or "custom"
    std::vector<ClassificationEntry> entries;
    double seconds = 0;   // timing; excluded from canonical JSON
};

struct ClassifyOptions {
    int jobs = 1;
    int g_limit = 6;
    bool allow_g6 = false;          // dimension-6 runs are gated
    std::string checkpoint_path;    // resumable enumeration state
    std::function<void(size_t, size_t)> enumeration_progress; // (done, queued)
};

// Thrown when a run is aborted over a limit; carries whatever finished.
struct partial_result_error : resource_limit_error {
    explicit partial_result_error(const std::string& what, ClassificationTable done)
        : resource_limit_error(what), partial(std::move(done)) {}
    ClassificationTable partial;
};

ClassificationTable classify_newton(int g, const NewtonPolygon& np, const ClassifyFilters& f,
                                    const ClassifyOptions& opts = {},
                                    const std::string& preset_name = "custom");

struct SweepResult {
    std::vector<ClassificationTable> tables;      // per polygon, polygon order
    std::vector<std::string> empty_polygons;      // polygons with empty tables
};
SweepResult sweep_dimension(int g, const ClassifyFilters& f, const ClassifyOptions& opts = {},
                            const std::string& preset_name = "custom");

// Alias data: (g, newton csv, canonical label) -> external names.
struct AliasEntry {
    std::string paper_label;
    std::string example_label;
};
using AliasMap = std::map<std::tuple<int, std::string, std::string>, AliasEntry>;
AliasMap load_aliases(const std::string& path);

std::string table_to_json(const ClassificationTable& t, bool include_timing = false);
std::string table_to_markdown(const ClassificationTable& t, const AliasMap* aliases = nullptr);

} // namespace weil
