// Builds data/aliases.json: external names for the tabulated classification
// rows, keyed by (g, newton polygon, canonical label). Each row below carries
// the published generators of G modulo the conjugation element; the tool
// pulls the group back, canonicalizes it against the enumeration, and refuses
// to emit anything that does not land exactly on an enumerated class.

#include <fstream>
#include <iostream>
#include <vector>

#include <json.hpp>

#include "weil/enumerate.hpp"

using namespace weil;

namespace {

struct Row {
    int g;
    const char* newton;
    const char* paper_label;
    const char* gen1;
    const char* gen2;
    const char* example; // may be empty
};

const std::vector<Row> rows = {
    // dimension 3
    {3, "0,0,1/2,1/2,1,1", "D6.6.t.a.2", "(1 2~ 3~)(2 3 1~)", "(1 2~)(2 1~)", "3.2.ac_b_a"},
    // dimension 4
    {4, "0,0,1/2,1/2,1/2,1/2,1,1", "8T9.8.t.a.5", "(1 2)(3 4)(1~ 2~)(3~ 4~)",
     "(1 3~ 4 2~)(2 1~ 3 4~)", "4.3.ae_k_ay_bw"},
    {4, "0,0,1/2,1/2,1/2,1/2,1,1", "8T13.8.t.a.2", "(1 4 2~ 1~ 4~ 2)(3 3~)",
     "(1 2)(3 4~)(4 3~)(1~ 2~)", "4.4.ab_af_a_bc"},
    {4, "0,0,1/2,1/2,1/2,1/2,1,1", "8T24.8.t.a.1", "(1 1~)(2 3~)(3 2~)(4 4~)",
     "(1 3~ 2~ 4~)(2 4 1~ 3)", "4.2.ac_b_c_ag"},
    {4, "0,0,0,0,1,1,1,1", "8T13.8.t.a.3", "(1 4~ 3~ 1~ 4 3)(2 2~)", "(1 2~ 4)(2 4~ 1~)",
     "4.2.ac_b_ac_f"},
    {4, "0,0,0,0,1,1,1,1", "8T24.8.t.a.4", "(2 3~)(3 2~)", "(1 3 4~ 1~ 3~ 4)(2 2~)",
     "4.2.ad_c_g_ap"},
    {4, "0,1/3,1/3,1/3,2/3,2/3,2/3,1", "8T13.8.t.a.2", "(1 2~)(2 1~)(3 4)(3~ 4~)",
     "(1 1~)(2 3~ 4 2~ 3 4~)", "4.3.ab_a_g_ag"},
    {4, "0,1/3,1/3,1/3,2/3,2/3,2/3,1", "8T24.8.t.a.1", "(1 2 4~ 1~ 2~ 4)(3 3~)",
     "(1 1~)(2 3~)(3 2~)(4 4~)", "4.2.ad_e_ag_k"},
    {4, "1/4,1/4,1/4,1/4,3/4,3/4,3/4,3/4", "8T13.8.t.a.3", "(1 4 3~)(3 1~ 4~)",
     "(1 1~)(2 4 3 2~ 4~ 3~)", "4.4.ae_k_ay_ca"},
    {4, "1/4,1/4,1/4,1/4,3/4,3/4,3/4,3/4", "8T24.8.t.a.4", "(2 3~ 4~)(3 4 2~)",
     "(1 2~ 4~ 3)(2 4 3~ 1~)", "4.2.ac_a_e_ag"},
    // dimension 5
    {5, "0,0,0,0,1/2,1/2,1,1,1,1", "D10.10.t.a.2", "(2 3)(4 5)(2~ 3~)(4~ 5~)",
     "(1 4)(3 5~)(5 3~)(1~ 4~)", ""},
    {5, "0,0,0,0,1/2,1/2,1,1,1,1", "10T5.10.t.a.5", "(1 3~ 2~ 4)(2 4~ 1~ 3)",
     "(1 1~)(2 3~)(3 2~)(4 5~)(5 4~)", ""},
    {5, "0,0,0,0,1/2,1/2,1,1,1,1", "10T5.10.t.a.32", "(1 5~ 3~ 4)(3 4~ 1~ 5)",
     "(1 4~)(2 3~)(3 2~)(4 1~)(5 5~)", ""},
    {5, "0,0,0,0,1/2,1/2,1,1,1,1", "10T11.10.t.a.4", "(1 2)(3 5)(1~ 2~)(3~ 5~)",
     "(1 5~ 4~)(4 1~ 5)", ""},
    {5, "0,0,0,0,1/2,1/2,1,1,1,1", "10T22.10.t.a.3", "(1 3~ 2)(3 2~ 1~)(4 5)(4~ 5~)",
     "(1 5~)(2 4~)(4 2~)(5 1~)", "5.2.ae_g_ae_b_a"},
    {5, "0,0,1/2,1/2,1/2,1/2,1/2,1/2,1,1", "D10.10.t.a.2", "(1 5)(2 4~)(4 2~)(1~ 5~)",
     "(1 4)(3 5~)(5 3~)(1~ 4~)", ""},
    {5, "0,0,1/2,1/2,1/2,1/2,1/2,1/2,1,1", "10T5.10.t.a.1",
     "(1 3 4~ 5)(2 2~)(4 5~ 1~ 3~)", "(1 4~ 3~ 2~ 5~)(2 5 1~ 4 3)", ""},
    {5, "0,0,1/2,1/2,1/2,1/2,1/2,1/2,1,1", "10T11.10.t.a.2",
     "(1 5~ 2~ 3~ 4~)(2 3 4 1~ 5)", "(1 4~ 3~ 5~ 2~)(2 1~ 4 3 5)", ""},
    {5, "0,0,1/2,1/2,1/2,1/2,1/2,1/2,1,1", "10T22.10.t.a.2",
     "(1 3 4)(2 5~)(5 2~)(1~ 3~ 4~)", "(1 5 2~ 4 3)(2 4~ 3~ 1~ 5~)", "5.2.ac_b_a_a_a"},
    {5, "1/4,1/4,1/4,1/4,1/2,1/2,3/4,3/4,3/4,3/4", "10T5.10.t.a.32",
     "(1 5~ 3~ 4)(3 4~ 1~ 5)", "(1 2 4 3)(5 5~)(1~ 2~ 4~ 3~)", ""},
    {5, "1/4,1/4,1/4,1/4,1/2,1/2,3/4,3/4,3/4,3/4", "10T11.10.t.a.4",
     "(1 4~ 5~ 2 3~)(3 1~ 4 5 2~)", "(1 1~)(2 4)(3 5~)(5 3~)(2~ 4~)", ""},
    {5, "1/4,1/4,1/4,1/4,1/2,1/2,3/4,3/4,3/4,3/4", "10T22.10.t.a.3",
     "(1 2 5~)(5 1~ 2~)", "(1 3~ 5~)(2 4~)(3 5 1~)(4 2~)", "5.2.a_ac_ae_c_m"},
};

} // namespace

int main(int argc, char** argv) {
    std::string out_path = argc > 1 ? argv[1] : "data/aliases.json";
    nlohmann::ordered_json j;
    j["schema"] = "weil-lab/1";
    j["entries"] = nlohmann::ordered_json::array();

    int bad = 0;
    for (const auto& row : rows) {
        NewtonPolygon np = NewtonPolygon::from_string(row.newton);
        WeightFunction w = weight_from_newton(np);
        PermGroup G = PermGroup::generate(
            row.g, {parse_cycles(row.gen1, row.g), parse_cycles(row.gen2, row.g),
                    conjugation_element(row.g)});
        std::string key = canonical_key(G, stabilizer_of_weight(w));

        std::string label;
        for (const auto& cls : enumerate_transitive_subgroups(w))
            if (cls.key == key) label = cls.label;
        if (label.empty()) {
            std::cerr << "no enumerated class matches " << row.paper_label << " at g=" << row.g
                      << " [" << row.newton << "]\n";
            ++bad;
            continue;
        }
        nlohmann::ordered_json e;
        e["g"] = row.g;
        e["newton"] = row.newton;
        e["canonical"] = label;
        e["label"] = row.paper_label;
        e["example"] = row.example;
        j["entries"].push_back(e);
    }
    if (bad) return 1;

    std::ofstream out(out_path);
    out << j.dump(2) << "\n";
    std::cout << "wrote " << j["entries"].size() << " alias entries to " << out_path << "\n";
    return 0;
}
