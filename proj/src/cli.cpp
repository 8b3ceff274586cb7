#include "weil/cli.hpp"

#include <fstream>
#include <iostream>
#include <map>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "weil/analyzer.hpp"
#include "weil/classify.hpp"
#include "weil/honda_tate.hpp"
#include "weil/labels.hpp"

namespace weil {

namespace {

std::vector<int> parse_p_sweep(const std::string& csv) {
    std::vector<int> out;
    std::stringstream ss(csv);
    std::string tok;
    while (std::getline(ss, tok, ',')) {
        if (tok == "generic") {
            out.push_back(kGenericPrime);
        } else {
            int p = std::stoi(tok);
            if (!is_prime(p)) throw validation_error("p-sweep entry is not prime: " + tok);
            out.push_back(p);
        }
    }
    if (out.empty()) throw validation_error("empty p-sweep");
    return out;
}

std::vector<SignedPerm> parse_generator_list(const std::string& csv, int g) {
    std::vector<SignedPerm> out;
    std::stringstream ss(csv);
    std::string tok;
    while (std::getline(ss, tok, ',')) out.push_back(parse_cycles(tok, g));
    return out;
}

std::vector<Integer> parse_int_csv(const std::string& csv) {
    std::vector<Integer> out;
    std::stringstream ss(csv);
    std::string tok;
    while (std::getline(ss, tok, ',')) {
        std::string t;
        for (char c : tok)
            if (!isspace(static_cast<unsigned char>(c))) t += c;
        out.emplace_back(t);
    }
    return out;
}

std::map<std::string, std::string> read_config(const std::string& path) {
    std::map<std::string, std::string> kv;
    std::ifstream in(path);
    if (!in) throw validation_error("cannot open config file: " + path);
    std::string line;
    while (std::getline(in, line)) {
        auto hash = line.find('#');
        if (hash != std::string::npos) line = line.substr(0, hash);
        auto eq = line.find('=');
        if (eq == std::string::npos) continue;
        auto trim = [](std::string s) {
            size_t a = s.find_first_not_of(" \t\r");
            size_t b = s.find_last_not_of(" \t\r");
            return a == std::string::npos ? std::string() : s.substr(a, b - a + 1);
        };
        std::string key = trim(line.substr(0, eq));
        std::string val = trim(line.substr(eq + 1));
        if (!key.empty()) kv[key] = val;
    }
    return kv;
}

std::string sanitize_newton(const std::string& csv) {
    std::string out;
    for (char c : csv) {
        if (c == ',') out += '_';
        else if (c == '/') out += 'd';
        else out += c;
    }
    return out;
}

std::string filtration_json(const Filtration& f, bool strong) {
    nlohmann::ordered_json j;
    auto gens_of = [](const PermGroup& G) {
        nlohmann::ordered_json a = nlohmann::ordered_json::array();
        const auto& gs = G.generators().empty() ? G.elements() : G.generators();
        for (const auto& p : gs) a.push_back(to_cycle_string(p));
        return a;
    };
    j["D"] = gens_of(f.D);
    j["D_order"] = f.D.order();
    j["G0"] = gens_of(f.G0);
    j["G0_order"] = f.G0.order();
    j["G1"] = gens_of(f.G1);
    j["G1_order"] = f.G1.order();
    j["p"] = f.p == kGenericPrime ? nlohmann::ordered_json("generic")
                                  : nlohmann::ordered_json(f.p);
    j["strong"] = strong;
    return j.dump();
}

} // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"weil-lab: exceptional Tate classes, angle ranks, and classification "
                 "tables for abelian varieties over finite fields"};
    app.require_subcommand(1);

    bool json_errors = false;
    std::string config_path;
    app.add_flag("--json-errors", json_errors, "machine-readable errors on stderr");
    app.add_option("--config", config_path, "key=value config file");

    // ---- classify/sweep shared options
    struct TableArgs {
        int g = 0;
        std::string newton;
        std::string preset = "appendix";
        std::string p_sweep;
        int jobs = 1;
        bool as_json = false, as_markdown = false, timing = false;
        bool enable_g6 = false;
        std::string checkpoint, aliases;
    };
    TableArgs ct, st;

    auto add_table_opts = [&](CLI::App* sub, TableArgs& a, bool with_newton) {
        sub->add_option("--g", a.g, "dimension")->required();
        if (with_newton)
            sub->add_option("--newton", a.newton, "comma-separated slopes, e.g. 0,0,1/2,1/2,1,1")
                ->required();
        sub->add_option("--preset", a.preset, "appendix | all | exceptional-only");
        sub->add_option("--p-sweep", a.p_sweep, "primes plus optional 'generic', e.g. 2,3,5,7,generic");
        sub->add_option("--jobs", a.jobs, "worker threads");
        sub->add_flag("--json", a.as_json, "JSON to stdout (default)");
        sub->add_flag("--markdown", a.as_markdown, "markdown to stdout");
        sub->add_flag("--timing", a.timing, "include timing in JSON output");
        sub->add_flag("--enable-g6", a.enable_g6, "allow the gated dimension-6 run");
        sub->add_option("--checkpoint", a.checkpoint, "resumable enumeration state file");
        sub->add_option("--aliases", a.aliases, "alias file for external labels");
    };

    CLI::App* classify_cmd = app.add_subcommand("classify", "classify one Newton polygon");
    add_table_opts(classify_cmd, ct, true);
    CLI::App* sweep_cmd = app.add_subcommand("sweep", "classify every Newton polygon of a dimension");
    add_table_opts(sweep_cmd, st, false);

    // ---- analyze
    struct AnalyzeArgs {
        std::string label, coeffs, batch;
        long p = 0;
        std::string q;
        long precision = 192;
        long max_unity = 0;
    } an;
    CLI::App* analyze_cmd = app.add_subcommand("analyze", "numerical relation analysis of a Frobenius polynomial");
    analyze_cmd->add_option("--label", an.label, "isogeny label g.q.c1_..._cg");
    analyze_cmd->add_option("--coeffs", an.coeffs, "full coefficient list, descending, monic");
    analyze_cmd->add_option("--p", an.p, "characteristic");
    analyze_cmd->add_option("--q", an.q, "prime power");
    CLI::Option* precision_opt =
        analyze_cmd->add_option("--precision", an.precision, "working precision bits (default 192)");
    analyze_cmd->add_option("--max-unity-order", an.max_unity, "root-of-unity order bound");
    analyze_cmd->add_option("--batch", an.batch, "JSON-lines file: {label} or {coefficients, q}");

    // ---- admissible
    struct AdmArgs {
        int g = 0;
        std::string newton, group;
        int p = 0;
        bool strong = false;
        std::string pstr;
    } ad;
    CLI::App* adm_cmd = app.add_subcommand("admissible", "search decomposition filtrations");
    adm_cmd->add_option("--g", ad.g, "dimension")->required();
    adm_cmd->add_option("--newton", ad.newton, "slopes")->required();
    adm_cmd->add_option("--group", ad.group, "comma-separated generators in cycle notation "
                                             "(conjugation element adjoined automatically)")
        ->required();
    adm_cmd->add_option("--p", ad.pstr, "prime, or 'generic'")->required();
    adm_cmd->add_flag("--strong", ad.strong, "report only strong witnesses");

    // ---- dimension
    struct DimArgs {
        int g = 0;
        std::string newton, group, decomp, sign;
    } dm;
    CLI::App* dim_cmd = app.add_subcommand("dimension", "Honda-Tate dimension data");
    dim_cmd->add_option("--g", dm.g, "dimension")->required();
    dim_cmd->add_option("--newton", dm.newton, "slopes")->required();
    dim_cmd->add_option("--group", dm.group, "generators of G")->required();
    dim_cmd->add_option("--decomp", dm.decomp, "generators of D")->required();
    dim_cmd->add_option("--trailing-sign", dm.sign, "+ or - (sign of the trailing coefficient)")
        ->required();

    // ---- decode-label
    std::string label_arg;
    CLI::App* dec_cmd = app.add_subcommand("decode-label", "decode an isogeny label");
    dec_cmd->add_option("label", label_arg, "g.q.c1_..._cg")->required();

    // ---- emit-tables
    struct EmitArgs {
        int g = 0;
        std::string out_dir, aliases;
        int jobs = 1;
        bool enable_g6 = false;
    } em;
    CLI::App* emit_cmd = app.add_subcommand("emit-tables", "regenerate classification tables as markdown");
    emit_cmd->add_option("--g", em.g, "dimension")->required();
    emit_cmd->add_option("--out", em.out_dir, "output directory")->required();
    emit_cmd->add_option("--aliases", em.aliases, "alias file");
    emit_cmd->add_option("--jobs", em.jobs, "worker threads");
    emit_cmd->add_flag("--enable-g6", em.enable_g6, "allow the gated dimension-6 run");

    std::vector<char*> argv;
    std::vector<std::string> storage = args;
    storage.insert(storage.begin(), "weil-lab");
    for (auto& s : storage) argv.push_back(s.data());

    try {
        app.parse(static_cast<int>(argv.size()), argv.data());
    } catch (const CLI::CallForHelp& e) {
        out << app.help();
        return 0;
    } catch (const CLI::ParseError& e) {
        if (json_errors)
            err << "{\"error\":\"usage\",\"message\":" << nlohmann::json(e.what()).dump()
                << "}\n";
        else
            err << "error: " << e.what() << "\n";
        return 1;
    }

    std::map<std::string, std::string> config;
    try {
        if (!config_path.empty()) config = read_config(config_path);

        auto run_table = [&](TableArgs& a, bool is_sweep) {
            if (a.p_sweep.empty() && config.count("p_sweep")) a.p_sweep = config["p_sweep"];
            if (a.aliases.empty() && config.count("aliases")) a.aliases = config["aliases"];
            if (config.count("jobs") && a.jobs == 1) a.jobs = std::stoi(config["jobs"]);
            ClassifyFilters f = preset_filters(a.preset);
            if (!a.p_sweep.empty()) f.p_sweep = parse_p_sweep(a.p_sweep);
            ClassifyOptions o;
            o.jobs = a.jobs;
            o.allow_g6 = a.enable_g6;
            o.checkpoint_path = a.checkpoint;
            if (a.enable_g6)
                o.enumeration_progress = [&err](size_t done, size_t queued) {
                    if (done % 256 == 0)
                        err << "enumeration: " << done << "/" << queued << " classes\n";
                };
            AliasMap aliases;
            const AliasMap* aliases_ptr = nullptr;
            if (!a.aliases.empty()) {
                aliases = load_aliases(a.aliases);
                aliases_ptr = &aliases;
            }
            if (is_sweep) {
                SweepResult res = sweep_dimension(a.g, f, o, a.preset);
                if (a.as_markdown) {
                    for (const auto& t : res.tables) out << table_to_markdown(t, aliases_ptr) << "\n";
                } else {
                    nlohmann::ordered_json j;
                    j["schema"] = "weil-lab/1";
                    j["g"] = a.g;
                    j["preset"] = a.preset;
                    j["tables"] = nlohmann::ordered_json::array();
                    double total = 0;
                    for (const auto& t : res.tables) {
                        j["tables"].push_back(
                            nlohmann::ordered_json::parse(table_to_json(t, false)));
                        total += t.seconds;
                    }
                    j["empty_polygons"] = res.empty_polygons;
                    if (a.timing) j["timing_seconds"] = total;
                    out << j.dump(2) << "\n";
                    err << "sweep g=" << a.g << " finished in " << total << "s\n";
                }
            } else {
                NewtonPolygon np = NewtonPolygon::from_string(a.newton);
                ClassificationTable t = classify_newton(a.g, np, f, o, a.preset);
                if (a.as_markdown)
                    out << table_to_markdown(t, aliases_ptr);
                else
                    out << table_to_json(t, a.timing);
                err << "classify g=" << a.g << " [" << t.newton << "] -> " << t.entries.size()
                    << " entries in " << t.seconds << "s\n";
            }
        };

        if (*classify_cmd) {
            run_table(ct, false);
        } else if (*sweep_cmd) {
            run_table(st, true);
        } else if (*analyze_cmd) {
            AnalyzerOptions aopts;
            if (config.count("precision") && precision_opt->count() == 0)
                an.precision = std::stol(config["precision"]);
            aopts.precision_bits = an.precision;
            aopts.max_unity_order = an.max_unity;
            auto analyze_one = [&](const WeilPolynomial& P) {
                AnalyzerReport rep = analyze(P, aopts);
                out << rep.to_json(P) << "\n";
            };
            if (!an.batch.empty()) {
                std::ifstream in(an.batch);
                if (!in) throw validation_error("cannot open batch file: " + an.batch);
                std::string line;
                while (std::getline(in, line)) {
                    if (line.empty()) continue;
                    auto j = nlohmann::json::parse(line);
                    if (j.contains("label")) {
                        analyze_one(decode_label(j["label"].get<std::string>()));
                    } else {
                        std::vector<Integer> cs;
                        for (const auto& c : j.at("coefficients")) {
                            if (c.is_string())
                                cs.emplace_back(c.get<std::string>());
                            else
                                cs.emplace_back(static_cast<long>(c.get<long long>()));
                        }
                        const auto& jq = j.at("q");
                        Integer q = jq.is_string()
                                        ? Integer(jq.get<std::string>())
                                        : Integer(static_cast<long>(jq.get<long long>()));
                        analyze_one(parse_weil(cs, q));
                    }
                }
            } else if (!an.label.empty()) {
                analyze_one(decode_label(an.label));
            } else if (!an.coeffs.empty()) {
                if (an.q.empty()) throw validation_error("--coeffs requires --q");
                WeilPolynomial P = parse_weil(parse_int_csv(an.coeffs), Integer(an.q));
                if (an.p != 0 && an.p != P.p)
                    throw validation_error("--p disagrees with the prime part of q");
                analyze_one(P);
            } else {
                throw validation_error("analyze needs --label, --coeffs, or --batch");
            }
        } else if (*adm_cmd) {
            NewtonPolygon np = NewtonPolygon::from_string(ad.newton);
            if (np.g() != ad.g) throw validation_error("newton polygon does not match --g");
            WeightFunction w = weight_from_newton(np);
            auto gens = parse_generator_list(ad.group, ad.g);
            gens.push_back(conjugation_element(ad.g));
            PermGroup G = PermGroup::generate(ad.g, gens);
            WeightedPermRep rho(w, G);
            int p = ad.pstr == "generic" ? kGenericPrime : std::stoi(ad.pstr);
            AdmissibilityReport rep = find_admissible_filtrations(rho, p, ad.strong);
            nlohmann::ordered_json j;
            j["schema"] = "weil-lab/1";
            j["weak"] = rep.weak;
            j["strong"] = rep.strong;
            j["witnesses"] = nlohmann::ordered_json::array();
            for (size_t i = 0; i < rep.witnesses.size(); ++i)
                j["witnesses"].push_back(nlohmann::ordered_json::parse(
                    filtration_json(rep.witnesses[i], rep.witness_strong[i])));
            out << j.dump(2) << "\n";
        } else if (*dim_cmd) {
            NewtonPolygon np = NewtonPolygon::from_string(dm.newton);
            if (np.g() != dm.g) throw validation_error("newton polygon does not match --g");
            WeightFunction w = weight_from_newton(np);
            auto gens = parse_generator_list(dm.group, dm.g);
            gens.push_back(conjugation_element(dm.g));
            PermGroup G = PermGroup::generate(dm.g, gens);
            PermGroup D = PermGroup::generate(dm.g, parse_generator_list(dm.decomp, dm.g));
            WeightedPermRep rho(w, G);
            TrailingSign sign;
            if (dm.sign == "+" || dm.sign == "pos")
                sign = TrailingSign::positive;
            else if (dm.sign == "-" || dm.sign == "neg")
                sign = TrailingSign::negative;
            else
                throw validation_error("--trailing-sign must be + or -");
            HondaTateResult res = honda_tate_dimension(rho, D, sign);
            ExponentVector ev = ideal_exponents(rho, D);
            nlohmann::ordered_json j;
            j["schema"] = "weil-lab/1";
            j["dimension"] = res.dimension.get_str();
            j["dimension_g_attainable"] = res.dimension_g_attainable;
            j["epsilon"] = epsilon_pi(sign);
            j["k"] = k_pi(rho, D).get_str();
            j["exponents"] = nlohmann::ordered_json::parse(ev.to_json());
            out << j.dump(2) << "\n";
        } else if (*dec_cmd) {
            WeilPolynomial P = decode_label(label_arg);
            nlohmann::ordered_json j;
            j["schema"] = "weil-lab/1";
            j["label"] = label_arg;
            j["g"] = P.g;
            j["q"] = P.q.get_str();
            j["p"] = P.p;
            j["coefficients"] = nlohmann::ordered_json::array();
            for (const auto& c : P.coeffs) j["coefficients"].push_back(c.get_str());
            j["polynomial"] = P.to_string();
            out << j.dump(2) << "\n";
        } else if (*emit_cmd) {
            AliasMap aliases;
            const AliasMap* aliases_ptr = nullptr;
            if (em.aliases.empty() && config.count("aliases")) em.aliases = config["aliases"];
            if (!em.aliases.empty()) {
                aliases = load_aliases(em.aliases);
                aliases_ptr = &aliases;
            }
            ClassifyFilters f = preset_filters("appendix");
            ClassifyOptions o;
            o.jobs = em.jobs;
            o.allow_g6 = em.enable_g6;
            SweepResult res = sweep_dimension(em.g, f, o, "appendix");
            std::string index = "# Classification tables, g = " + std::to_string(em.g) + "\n\n";
            for (const auto& t : res.tables) {
                if (t.entries.empty()) continue;
                std::string fname =
                    "g" + std::to_string(em.g) + "-np-" + sanitize_newton(t.newton) + ".md";
                std::ofstream fo(em.out_dir + "/" + fname);
                if (!fo) throw validation_error("cannot write to " + em.out_dir + "/" + fname);
                fo << table_to_markdown(t, aliases_ptr);
                index += "- [" + t.newton + "](" + fname + ")\n";
            }
            std::ofstream fo(em.out_dir + "/index.md");
            if (!fo) throw validation_error("cannot write to " + em.out_dir + "/index.md");
            fo << index;
            out << "wrote tables for g = " << em.g << " to " << em.out_dir << "\n";
        }
    } catch (const partial_result_error& e) {
        if (json_errors)
            err << "{\"error\":\"resource-limit\",\"message\":"
                << nlohmann::json(e.what()).dump() << "}\n";
        else
            err << "resource limit: " << e.what() << "\n";
        return 2;
    } catch (const resource_limit_error& e) {
        if (json_errors)
            err << "{\"error\":\"resource-limit\",\"message\":"
                << nlohmann::json(e.what()).dump() << "}\n";
        else
            err << "resource limit: " << e.what() << "\n";
        return 2;
    } catch (const error& e) {
        if (json_errors)
            err << "{\"error\":\"validation\",\"message\":" << nlohmann::json(e.what()).dump()
                << "}\n";
        else
            err << "error: " << e.what() << "\n";
        return 1;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << "\n";
        return 1;
    }
    return 0;
}

} // namespace weil
