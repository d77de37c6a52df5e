// Command-line front end: graph/ideal inspection, statement verification,
// and family sweeps. Machine-readable JSON goes to stdout, human summaries
// to stderr.

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "symcover/symcover.hpp"

namespace sc = symcover;

namespace {

long long budget_from_env(long long fallback) {
    if (const char* s = std::getenv("SYMCOVER_BUDGET")) {
        try {
            return std::stoll(s);
        } catch (...) {
            throw sc::input_error("SYMCOVER_BUDGET must be an integer");
        }
    }
    return fallback;
}

sc::FieldSpec parse_field(const std::string& s) {
    std::string t = s;
    if (!t.empty() && t[0] == 'p') t = t.substr(1);
    try {
        return sc::FieldSpec(std::stoi(t));
    } catch (const sc::input_error&) {
        throw;
    } catch (...) {
        throw sc::input_error("bad field: " + s);
    }
}

std::vector<sc::StatementId> parse_statements(const std::string& s) {
    std::vector<sc::StatementId> out;
    if (s == "all") {
        for (const auto& [id, name] : sc::statement_table()) out.push_back(id);
        return out;
    }
    std::stringstream ss(s);
    std::string tok;
    while (std::getline(ss, tok, ',')) out.push_back(sc::statement_from_name(tok));
    return out;
}

void emit(const sc::json& j, const std::string& out_path) {
    std::string text = j.dump(2) + "\n";
    if (out_path.empty()) {
        std::cout << text;
    } else {
        std::ofstream f(out_path, std::ios::binary);
        if (!f) throw sc::input_error("cannot write " + out_path);
        f << text;
    }
}

int report_exit_code(const std::vector<sc::VerificationReport>& reports) {
    bool violated = false, exhausted = false;
    for (const auto& r : reports) {
        violated |= r.status == sc::VerifyStatus::violated;
        exhausted |= r.status == sc::VerifyStatus::resource_exhausted;
    }
    return violated ? 1 : (exhausted ? 3 : 0);
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact toolkit for cover ideals, their symbolic powers, and graded Betti data"};
    app.require_subcommand(1);

    std::string file, out_path, field_str = "0", statements_str = "all", family_str = "all-graphs";
    int k = 1, max_vertices = 5, kmax = 2;

    auto* graph_cmd = app.add_subcommand("graph", "graph inspection and construction");
    graph_cmd->require_subcommand(1);
    auto* graph_info = graph_cmd->add_subcommand("info", "print invariants of a graph");
    graph_info->add_option("file", file)->required();
    auto* graph_gk = graph_cmd->add_subcommand("gk", "build the level product G_k");
    graph_gk->add_option("file", file)->required();
    graph_gk->add_option("--k", k)->required();
    graph_gk->add_option("--out", out_path);

    auto* ideal_cmd = app.add_subcommand("ideal", "ideal constructions");
    ideal_cmd->require_subcommand(1);
    auto* ideal_cover = ideal_cmd->add_subcommand("cover", "cover ideal of a graph");
    ideal_cover->add_option("graphfile", file)->required();
    auto* ideal_sym = ideal_cmd->add_subcommand("symbolic-power",
                                                "symbolic power of the cover ideal of a graph");
    ideal_sym->add_option("graphfile", file)->required();
    ideal_sym->add_option("--k", k)->required();
    auto* ideal_pol = ideal_cmd->add_subcommand("polarize", "squarefree lift of an ideal");
    ideal_pol->add_option("idealfile", file)->required();
    auto* ideal_betti = ideal_cmd->add_subcommand("betti", "graded Betti table of an ideal");
    ideal_betti->add_option("idealfile", file)->required();
    ideal_betti->add_option("--field", field_str);

    std::string statement_str;
    auto* verify_cmd = app.add_subcommand("verify", "check one statement on one instance");
    verify_cmd->add_option("statement", statement_str)->required();
    verify_cmd->add_option("file", file)->required();
    verify_cmd->add_option("--k", k);
    verify_cmd->add_option("--field", field_str);

    auto* sweep_cmd = app.add_subcommand("sweep", "verify statements over a graph family");
    sweep_cmd->add_option("--family", family_str);
    sweep_cmd->add_option("--max-vertices", max_vertices);
    sweep_cmd->add_option("--kmax", kmax);
    sweep_cmd->add_option("--statements", statements_str);
    sweep_cmd->add_option("--field", field_str);
    sweep_cmd->add_option("--out", out_path);

    CLI11_PARSE(app, argc, argv);

    try {
        if (graph_info->parsed()) {
            sc::Graph g = sc::parse_graph_file(file);
            sc::json j = sc::graph_json(g);
            j["connected"] = sc::is_connected(g);
            auto sides = sc::is_bipartite(g);
            j["bipartite"] = sides.has_value();
            j["unmixed"] = sc::is_unmixed(g);
            j["very_well_covered"] = sc::is_very_well_covered(g);
            j["cover_number"] = sc::cover_number(g);
            j["induced_matching_number"] = sc::induced_matching_number(g);
            emit(j, "");
            return 0;
        }
        if (graph_gk->parsed()) {
            sc::Graph g = sc::parse_graph_file(file);
            std::string text = sc::serialize_graph(sc::build_gk(g, k));
            if (out_path.empty()) {
                std::cout << text;
            } else {
                std::ofstream f(out_path, std::ios::binary);
                if (!f) throw sc::input_error("cannot write " + out_path);
                f << text;
            }
            return 0;
        }
        if (ideal_cover->parsed()) {
            std::cout << sc::serialize_ideal(sc::cover_ideal(sc::parse_graph_file(file)));
            return 0;
        }
        if (ideal_sym->parsed()) {
            sc::Graph g = sc::parse_graph_file(file);
            std::cout << sc::serialize_ideal(sc::symbolic_power(sc::cover_ideal(g), k));
            return 0;
        }
        if (ideal_pol->parsed()) {
            std::cout << sc::serialize_ideal(sc::polarize(sc::parse_ideal_file(file)).first);
            return 0;
        }
        if (ideal_betti->parsed()) {
            sc::MonomialIdeal ideal = sc::parse_ideal_file(file);
            sc::BettiTable t = sc::betti_table(ideal, parse_field(field_str));
            emit(sc::betti_json(t), "");
            return 0;
        }
        if (verify_cmd->parsed()) {
            sc::StatementId id = sc::statement_from_name(statement_str);
            sc::FieldSpec field = parse_field(field_str);
            sc::VerifyCaps caps;
            caps.search_budget = budget_from_env(caps.search_budget);
            std::vector<sc::VerificationReport> reports;
            if (id == sc::StatementId::LINQ_POL) {
                reports = sc::verify_linq_pol(sc::parse_ideal_file(file), caps);
            } else {
                sc::Graph g = sc::parse_graph_file(file);
                switch (id) {
                    case sc::StatementId::SYMPOL:
                        reports = sc::verify_sympol(g, k, caps);
                        break;
                    case sc::StatementId::GK_VWC:
                    case sc::StatementId::GK_CM:
                        reports = sc::verify_gk_structure(g, k, field, caps);
                        break;
                    case sc::StatementId::MAIN_LINRES:
                    case sc::StatementId::MAIN_LINQUOT:
                        reports = sc::verify_main(g, k, field, caps);
                        break;
                    case sc::StatementId::LINBI_FWD:
                    case sc::StatementId::LINBI_BWD:
                        reports = sc::verify_linbi(g, k, field, caps);
                        break;
                    case sc::StatementId::DEPTH_MONO:
                        reports = sc::verify_depth_monotone(g, std::max(k, 2), field, caps);
                        break;
                    case sc::StatementId::REG_LOWER:
                    case sc::StatementId::REG_UPPER:
                        reports = sc::verify_reg_bound(g, k, field, caps);
                        break;
                    default:
                        reports = sc::verify_duality_suite(g, field, caps);
                        break;
                }
            }
            std::erase_if(reports, [&](const sc::VerificationReport& r) {
                bool par = (id == sc::StatementId::GK_VWC || id == sc::StatementId::GK_CM ||
                            id == sc::StatementId::MAIN_LINRES ||
                            id == sc::StatementId::MAIN_LINQUOT ||
                            id == sc::StatementId::LINBI_FWD || id == sc::StatementId::LINBI_BWD ||
                            id == sc::StatementId::REG_LOWER || id == sc::StatementId::REG_UPPER);
                return par ? false : r.statement != id;
            });
            sc::json j = sc::json::array();
            for (const auto& r : reports) j.push_back(r.to_json());
            emit(j, "");
            return report_exit_code(reports);
        }
        if (sweep_cmd->parsed()) {
            sc::SweepConfig config;
            config.family = sc::family_from_name(family_str);
            config.max_vertices = max_vertices;
            config.kmax = kmax;
            config.field = parse_field(field_str);
            config.statements = parse_statements(statements_str);
            config.caps.search_budget = budget_from_env(config.caps.search_budget);
            sc::SweepResult result = sc::run_sweep(config);
            emit(result.report, out_path);
            if (result.report.contains("summary")) {
                const auto& s = result.report["summary"];
                std::cerr << "sweep: " << s["verified"] << " verified, " << s["violated"]
                          << " violated, " << s["inapplicable"] << " inapplicable, "
                          << s["resource_exhausted"] << " resource-exhausted\n";
            } else {
                std::cerr << "sweep: " << result.report["error"] << "\n";
            }
            return result.exit_code;
        }
    } catch (const sc::input_error& e) {
        std::cerr << "input error: " << e.what() << "\n";
        return 2;
    } catch (const sc::resource_error& e) {
        std::cerr << "resource error: " << e.what() << "\n";
        return 3;
    }
    return 0;
}
