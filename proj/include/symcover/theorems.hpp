#pragma once

#include <string>
#include <vector>

#include "json.hpp"
#include "symcover/betti.hpp"
#include "symcover/graph.hpp"
#include "symcover/monomial.hpp"
#include "symcover/simplicial.hpp"
#include "symcover/vwc_labeling.hpp"

namespace symcover {

using json = nlohmann::json;

enum class StatementId {
    SYMPOL,
    GK_VWC,
    GK_CM,
    MAIN_LINRES,
    MAIN_LINQUOT,
    LINBI_FWD,
    LINBI_BWD,
    DEPTH_MONO,
    REG_UPPER,
    REG_LOWER,
    LINQ_POL,
    TERAI_DUAL,
    EAGON_REINER,
    RESTRICT_LEMMA,
    COLON_POWER,
};

inline const std::vector<std::pair<StatementId, const char*>>& statement_table() {
    static const std::vector<std::pair<StatementId, const char*>> table = {
        {StatementId::SYMPOL, "SYMPOL"},
        {StatementId::GK_VWC, "GK_VWC"},
        {StatementId::GK_CM, "GK_CM"},
        {StatementId::MAIN_LINRES, "MAIN_LINRES"},
        {StatementId::MAIN_LINQUOT, "MAIN_LINQUOT"},
        {StatementId::LINBI_FWD, "LINBI_FWD"},
        {StatementId::LINBI_BWD, "LINBI_BWD"},
        {StatementId::DEPTH_MONO, "DEPTH_MONO"},
        {StatementId::REG_UPPER, "REG_UPPER"},
        {StatementId::REG_LOWER, "REG_LOWER"},
        {StatementId::LINQ_POL, "LINQ_POL"},
        {StatementId::TERAI_DUAL, "TERAI_DUAL"},
        {StatementId::EAGON_REINER, "EAGON_REINER"},
        {StatementId::RESTRICT_LEMMA, "RESTRICT_LEMMA"},
        {StatementId::COLON_POWER, "COLON_POWER"},
    };
    return table;
}

inline std::string statement_name(StatementId id) {
    for (const auto& [s, name] : statement_table())
        if (s == id) return name;
    throw input_error("unknown statement id");
}

inline StatementId statement_from_name(const std::string& name) {
    for (const auto& [s, n] : statement_table())
        if (name == n) return s;
    throw input_error("unknown statement id: " + name);
}

enum class VerifyStatus { verified, violated, inapplicable, resource_exhausted };

inline std::string status_name(VerifyStatus s) {
    switch (s) {
        case VerifyStatus::verified: return "verified";
        case VerifyStatus::violated: return "violated";
        case VerifyStatus::inapplicable: return "inapplicable";
        case VerifyStatus::resource_exhausted: return "resource-exhausted";
    }
    return "?";
}

struct VerifyCaps {
    long long search_budget = 10'000'000;
    HochsterOptions hochster;
};

/// Outcome of checking one statement on one instance. Violations carry a
/// witness sufficient to re-check by hand; inapplicable names the failing
/// hypothesis.
struct VerificationReport {
    StatementId statement;
    json instance;
    VerifyStatus status = VerifyStatus::verified;
    json witness;

    json to_json() const {
        return json{{"statement", statement_name(statement)},
                    {"instance", instance},
                    {"status", status_name(status)},
                    {"witness", witness}};
    }
};

inline json graph_json(const Graph& g) {
    json vs = json::array(), es = json::array();
    for (const auto& v : g.vertices()) vs.push_back(to_string(v));
    for (const auto& [u, v] : g.edges()) es.push_back(json::array({to_string(u), to_string(v)}));
    return json{{"vertices", vs}, {"edges", es}};
}

inline json ideal_json(const MonomialIdeal& ideal) {
    json gens = json::array();
    for (const auto& g : ideal.generators()) gens.push_back(g.str());
    json amb = json::array();
    for (const auto& v : ideal.ambient()) amb.push_back("x" + to_string(v));
    return json{{"ambient", amb}, {"generators", gens}};
}

inline json generators_json(const MonomialIdeal& ideal) {
    json gens = json::array();
    for (const auto& g : ideal.generators()) gens.push_back(g.str());
    return gens;
}

inline json betti_json(const BettiTable& t) {
    json entries = json::array();
    for (const auto& [ij, r] : t.entries)
        entries.push_back(json::array({ij.first, ij.second, r}));
    return json{{"subject", t.subject == BettiTable::Subject::ideal ? "ideal" : "quotient"},
                {"field", t.field.str()},
                {"entries", entries}};
}

namespace detail {

inline json graph_instance(const Graph& g, int k, const FieldSpec& field) {
    return json{{"graph", graph_json(g)}, {"k", k}, {"field", field.str()}};
}

inline VerificationReport make_report(StatementId id, json instance, VerifyStatus status,
                                      json witness) {
    return VerificationReport{id, std::move(instance), status, std::move(witness)};
}

inline VerificationReport inapplicable(StatementId id, json instance, const std::string& why) {
    return make_report(id, std::move(instance), VerifyStatus::inapplicable,
                       json{{"failed_hypothesis", why}});
}

}  // namespace detail

/// The polarization of the k-th symbolic power of the cover ideal must equal
/// the cover ideal of the level product, generator set by generator set.
inline std::vector<VerificationReport> verify_sympol(const Graph& g, int k,
                                                     const VerifyCaps& caps = {}) {
    if (k < 1) throw input_error("verify_sympol: k must be >= 1");
    json instance = detail::graph_instance(g, k, FieldSpec(0));
    if (g.edges().empty())
        return {detail::inapplicable(StatementId::SYMPOL, instance, "graph has no edge")};
    (void)caps;
    try {
        MonomialIdeal lhs = polarize(symbolic_power(cover_ideal(g), k)).first;
        MonomialIdeal rhs = cover_ideal(build_gk(g, k));
        bool equal = MonomialIdeal::same_generators(lhs, rhs);
        json witness{{"polarized_symbolic_power", generators_json(lhs)},
                     {"gk_cover_ideal", generators_json(rhs)}};
        return {detail::make_report(StatementId::SYMPOL, instance,
                                    equal ? VerifyStatus::verified : VerifyStatus::violated,
                                    witness)};
    } catch (const resource_error& e) {
        return {detail::make_report(StatementId::SYMPOL, instance,
                                    VerifyStatus::resource_exhausted, json{{"error", e.what()}})};
    }
}

/// The level product of a very well-covered graph stays very well-covered;
/// for a Cohen-Macaulay one it stays Cohen-Macaulay.
inline std::vector<VerificationReport> verify_gk_structure(const Graph& g, int k,
                                                           const FieldSpec& field = FieldSpec(0),
                                                           const VerifyCaps& caps = {}) {
    if (k < 1) throw input_error("verify_gk_structure: k must be >= 1");
    if (g.has_isolated_vertex())
        throw input_error("verify_gk_structure: isolated vertex present");
    json instance = detail::graph_instance(g, k, field);
    std::vector<VerificationReport> out;
    try {
        if (!is_very_well_covered(g)) {
            json witness{{"failed_hypothesis", "very well-covered"}};
            // side note: unmixedness is not preserved in general
            witness["g_is_unmixed"] = is_unmixed(g);
            witness["gk_is_unmixed"] = is_unmixed(build_gk(g, k));
            out.push_back(detail::make_report(StatementId::GK_VWC, instance,
                                              VerifyStatus::inapplicable, witness));
            out.push_back(detail::inapplicable(StatementId::GK_CM, instance,
                                               "very well-covered"));
            return out;
        }
        Graph gk = build_gk(g, k);
        bool gk_vwc = is_very_well_covered(gk);
        out.push_back(detail::make_report(
            StatementId::GK_VWC, instance,
            gk_vwc ? VerifyStatus::verified : VerifyStatus::violated,
            json{{"gk_vertices", gk.vertex_count()}, {"gk_very_well_covered", gk_vwc}}));

        if (!is_cohen_macaulay(independence_complex(g), field, caps.hochster)) {
            out.push_back(detail::inapplicable(StatementId::GK_CM, instance, "Cohen-Macaulay"));
            return out;
        }
        bool gk_cm = is_cohen_macaulay(independence_complex(gk), field, caps.hochster);
        out.push_back(detail::make_report(StatementId::GK_CM, instance,
                                          gk_cm ? VerifyStatus::verified : VerifyStatus::violated,
                                          json{{"gk_cohen_macaulay", gk_cm}}));
    } catch (const resource_error& e) {
        out.push_back(detail::make_report(StatementId::GK_CM, instance,
                                          VerifyStatus::resource_exhausted,
                                          json{{"error", e.what()}}));
    }
    return out;
}

/// For a very well-covered graph whose cover ideal has linear resolution,
/// every symbolic power keeps a linear resolution and has linear quotients.
inline std::vector<VerificationReport> verify_main(const Graph& g, int k,
                                                   const FieldSpec& field = FieldSpec(0),
                                                   const VerifyCaps& caps = {}) {
    if (k < 1) throw input_error("verify_main: k must be >= 1");
    json instance = detail::graph_instance(g, k, field);
    std::vector<VerificationReport> out;
    auto bail = [&](const std::string& why) {
        out.push_back(detail::inapplicable(StatementId::MAIN_LINRES, instance, why));
        out.push_back(detail::inapplicable(StatementId::MAIN_LINQUOT, instance, why));
        return out;
    };
    if (g.edges().empty()) return bail("graph has no edge");
    if (!is_very_well_covered(g)) return bail("very well-covered");
    try {
        MonomialIdeal cover = cover_ideal(g);
        if (!has_linear_resolution(cover, field, caps.hochster))
            return bail("cover ideal has linear resolution");
        MonomialIdeal sym = symbolic_power(cover, k);
        bool linres = has_linear_resolution(sym, field, caps.hochster);
        out.push_back(detail::make_report(
            StatementId::MAIN_LINRES, instance,
            linres ? VerifyStatus::verified : VerifyStatus::violated,
            json{{"symbolic_power_linear_resolution", linres},
                 {"generator_count", sym.generators().size()}}));

        LinearQuotientsResult lq = has_linear_quotients(sym, caps.search_budget);
        if (lq.status == SearchStatus::budget_exhausted) {
            out.push_back(detail::make_report(StatementId::MAIN_LINQUOT, instance,
                                              VerifyStatus::resource_exhausted,
                                              json{{"nodes", lq.nodes}}));
        } else {
            bool ok = lq.status == SearchStatus::yes &&
                      validate_linear_quotient_order(sym, lq.order);
            json witness;
            if (lq.status == SearchStatus::yes) {
                json order = json::array();
                for (const auto& m : lq.order) order.push_back(m.str());
                witness["linear_quotient_order"] = order;
                witness["order_revalidated"] = ok;
            } else {
                witness["linear_quotients"] = false;
            }
            out.push_back(detail::make_report(StatementId::MAIN_LINQUOT, instance,
                                              ok ? VerifyStatus::verified : VerifyStatus::violated,
                                              witness));
        }
    } catch (const resource_error& e) {
        out.push_back(detail::make_report(StatementId::MAIN_LINRES, instance,
                                          VerifyStatus::resource_exhausted,
                                          json{{"error", e.what()}}));
    }
    return out;
}

/// For bipartite graphs, the cover ideal has linear resolution exactly when
/// its k-th (ordinary = symbolic) power does; both implication directions
/// are checked separately.
inline std::vector<VerificationReport> verify_linbi(const Graph& g, int k,
                                                    const FieldSpec& field = FieldSpec(0),
                                                    const VerifyCaps& caps = {}) {
    if (k < 1) throw input_error("verify_linbi: k must be >= 1");
    json instance = detail::graph_instance(g, k, field);
    std::vector<VerificationReport> out;
    auto bail = [&](const std::string& why) {
        out.push_back(detail::inapplicable(StatementId::LINBI_FWD, instance, why));
        out.push_back(detail::inapplicable(StatementId::LINBI_BWD, instance, why));
        return out;
    };
    if (!is_bipartite(g)) return bail("bipartite");
    if (g.edges().empty()) return bail("graph has no edge");
    try {
        MonomialIdeal cover = cover_ideal(g);
        MonomialIdeal pw = power(cover, k);
        // the symbolic and ordinary powers must coincide for bipartite graphs
        bool coincide = symbolic_power(cover, k) == pw;
        bool a = has_linear_resolution(cover, field, caps.hochster);
        bool b = has_linear_resolution(pw, field, caps.hochster);
        json witness{{"cover_linear", a},
                     {"power_linear", b},
                     {"symbolic_equals_ordinary", coincide}};
        bool fwd = (!a || b) && coincide;
        bool bwd = (!b || a) && coincide;
        out.push_back(detail::make_report(StatementId::LINBI_FWD, instance,
                                          fwd ? VerifyStatus::verified : VerifyStatus::violated,
                                          witness));
        out.push_back(detail::make_report(StatementId::LINBI_BWD, instance,
                                          bwd ? VerifyStatus::verified : VerifyStatus::violated,
                                          witness));
    } catch (const resource_error& e) {
        out.push_back(detail::make_report(StatementId::LINBI_FWD, instance,
                                          VerifyStatus::resource_exhausted,
                                          json{{"error", e.what()}}));
    }
    return out;
}

/// Depths of the quotients by successive symbolic powers of the cover ideal
/// of a very well-covered graph form a non-increasing sequence.
inline std::vector<VerificationReport> verify_depth_monotone(const Graph& g, int kmax,
                                                             const FieldSpec& field = FieldSpec(0),
                                                             const VerifyCaps& caps = {}) {
    if (kmax < 2) throw input_error("verify_depth_monotone: kmax must be >= 2");
    json instance = detail::graph_instance(g, kmax, field);
    if (!is_very_well_covered(g))
        return {detail::inapplicable(StatementId::DEPTH_MONO, instance, "very well-covered")};
    try {
        MonomialIdeal cover = cover_ideal(g);
        std::vector<int> depths;
        for (int k = 1; k <= kmax; ++k) {
            BettiTable t = betti_table(symbolic_power(cover, k), field, caps.hochster);
            depths.push_back(depth_of_quotient(quotient_table(t)));
        }
        bool mono = true;
        for (std::size_t i = 1; i < depths.size(); ++i)
            if (depths[i] > depths[i - 1]) mono = false;
        return {detail::make_report(StatementId::DEPTH_MONO, instance,
                                    mono ? VerifyStatus::verified : VerifyStatus::violated,
                                    json{{"depth_sequence", depths}})};
    } catch (const resource_error& e) {
        return {detail::make_report(StatementId::DEPTH_MONO, instance,
                                    VerifyStatus::resource_exhausted,
                                    json{{"error", e.what()}})};
    }
}

/// Window for the regularity of quotients by powers of a bipartite cover
/// ideal: k deg(J) - 1 from below, k deg(J) + reg(S/J) - 1 from above.
inline std::vector<VerificationReport> verify_reg_bound(const Graph& g, int kmax,
                                                        const FieldSpec& field = FieldSpec(0),
                                                        const VerifyCaps& caps = {}) {
    if (kmax < 1) throw input_error("verify_reg_bound: kmax must be >= 1");
    json instance = detail::graph_instance(g, kmax, field);
    std::vector<VerificationReport> out;
    auto bail = [&](const std::string& why) {
        out.push_back(detail::inapplicable(StatementId::REG_LOWER, instance, why));
        out.push_back(detail::inapplicable(StatementId::REG_UPPER, instance, why));
        return out;
    };
    if (!is_bipartite(g)) return bail("bipartite");
    if (g.edges().empty()) return bail("graph has no edge");
    try {
        MonomialIdeal cover = cover_ideal(g);
        int d = deg_max(cover);
        int reg1 = regularity(quotient_table(betti_table(cover, field, caps.hochster)));
        bool lower_ok = true, upper_ok = true;
        json values = json::array();
        for (int k = 1; k <= kmax; ++k) {
            int regk = regularity(
                quotient_table(betti_table(power(cover, k), field, caps.hochster)));
            int lo = k * d - 1;
            int hi = k * d + reg1 - 1;
            values.push_back(json{{"k", k}, {"reg", regk}, {"lower", lo}, {"upper", hi}});
            if (regk < lo) lower_ok = false;
            if (regk > hi) upper_ok = false;
        }
        json witness{{"deg_cover", d}, {"reg_quotient", reg1}, {"per_k", values}};
        out.push_back(detail::make_report(StatementId::REG_LOWER, instance,
                                          lower_ok ? VerifyStatus::verified
                                                   : VerifyStatus::violated,
                                          witness));
        out.push_back(detail::make_report(StatementId::REG_UPPER, instance,
                                          upper_ok ? VerifyStatus::verified
                                                   : VerifyStatus::violated,
                                          witness));
    } catch (const resource_error& e) {
        out.push_back(detail::make_report(StatementId::REG_UPPER, instance,
                                          VerifyStatus::resource_exhausted,
                                          json{{"error", e.what()}}));
    }
    return out;
}

/// Linear quotients survive polarization in both directions.
inline std::vector<VerificationReport> verify_linq_pol(const MonomialIdeal& ideal,
                                                       const VerifyCaps& caps = {}) {
    if (ideal.is_zero() || ideal.is_unit())
        throw input_error("verify_linq_pol: ideal must be proper and nonzero");
    json instance{{"ideal", ideal_json(ideal)}, {"k", 1}, {"field", "0"}};
    LinearQuotientsResult a = has_linear_quotients(ideal, caps.search_budget);
    LinearQuotientsResult b = has_linear_quotients(polarize(ideal).first, caps.search_budget);
    if (a.status == SearchStatus::budget_exhausted || b.status == SearchStatus::budget_exhausted)
        return {detail::make_report(StatementId::LINQ_POL, instance,
                                    VerifyStatus::resource_exhausted,
                                    json{{"nodes", a.nodes + b.nodes}})};
    bool agree = a.status == b.status;
    json witness{{"ideal_linear_quotients", a.status == SearchStatus::yes},
                 {"polarization_linear_quotients", b.status == SearchStatus::yes}};
    if (a.status == SearchStatus::yes) {
        json order = json::array();
        for (const auto& m : a.order) order.push_back(m.str());
        witness["ideal_order"] = order;
    }
    if (b.status == SearchStatus::yes) {
        json order = json::array();
        for (const auto& m : b.order) order.push_back(m.str());
        witness["polarization_order"] = order;
    }
    return {detail::make_report(StatementId::LINQ_POL, instance,
                                agree ? VerifyStatus::verified : VerifyStatus::violated, witness)};
}

/// Duality cross-checks on one graph: the Eagon-Reiner equivalence, the
/// Terai projective-dimension/regularity identity, the cover-ideal
/// restriction identity at every vertex, and the bipartite colon-to-power
/// step at k = 2.
inline std::vector<VerificationReport> verify_duality_suite(const Graph& g,
                                                            const FieldSpec& field = FieldSpec(0),
                                                            const VerifyCaps& caps = {}) {
    std::vector<VerificationReport> out;
    json instance = detail::graph_instance(g, 1, field);
    if (g.edges().empty()) {
        for (StatementId id : {StatementId::EAGON_REINER, StatementId::TERAI_DUAL,
                               StatementId::RESTRICT_LEMMA, StatementId::COLON_POWER})
            out.push_back(detail::inapplicable(id, instance, "graph has no edge"));
        return out;
    }
    try {
        MonomialIdeal edge = edge_ideal(g);
        MonomialIdeal cover = cover_ideal(g);

        bool cm = is_cohen_macaulay(independence_complex(g), field, caps.hochster);
        bool lin = has_linear_resolution(cover, field, caps.hochster);
        out.push_back(detail::make_report(
            StatementId::EAGON_REINER, instance,
            cm == lin ? VerifyStatus::verified : VerifyStatus::violated,
            json{{"cohen_macaulay", cm}, {"cover_linear_resolution", lin}}));

        int pd = projective_dimension(quotient_table(betti_table(cover, field, caps.hochster)));
        int reg = regularity(quotient_table(betti_table(edge, field, caps.hochster)));
        out.push_back(detail::make_report(
            StatementId::TERAI_DUAL, instance,
            pd == reg + 1 ? VerifyStatus::verified : VerifyStatus::violated,
            json{{"pd_cover_quotient", pd}, {"reg_edge_quotient", reg}}));

        bool restrict_ok = true;
        json restrict_witness = json::array();
        for (const auto& v : g.vertices()) {
            MonomialIdeal got = restrict(cover, v);
            std::vector<Monomial::Entry> es;
            for (const auto& y : g.neighbors(v)) es.push_back({y, 1});
            Monomial neighbor_product = Monomial(es);
            Graph rest = delete_vertices(g, closed_neighborhood(g, {v}));
            MonomialIdeal rest_cover = cover_ideal(rest);
            std::vector<Monomial> gens;
            for (const auto& c : rest_cover.generators()) gens.push_back(neighbor_product * c);
            MonomialIdeal expected = minimalize(gens, got.ambient());
            bool same = got == expected;
            if (!same) restrict_ok = false;
            restrict_witness.push_back(json{{"vertex", to_string(v)}, {"match", same}});
        }
        out.push_back(detail::make_report(StatementId::RESTRICT_LEMMA, instance,
                                          restrict_ok ? VerifyStatus::verified
                                                      : VerifyStatus::violated,
                                          json{{"per_vertex", restrict_witness}}));

        auto sides = is_bipartite(g);
        if (!sides) {
            out.push_back(detail::inapplicable(StatementId::COLON_POWER, instance, "bipartite"));
        } else {
            json inst2 = detail::graph_instance(g, 2, field);
            std::vector<Monomial::Entry> es;
            for (const auto& u : sides->first) es.push_back({u, 1});
            MonomialIdeal quot = colon(power(cover, 2), Monomial(es));
            bool same = quot == cover;
            out.push_back(detail::make_report(StatementId::COLON_POWER, inst2,
                                              same ? VerifyStatus::verified
                                                   : VerifyStatus::violated,
                                              json{{"colon_equals_cover", same}}));
        }
    } catch (const resource_error& e) {
        out.push_back(detail::make_report(StatementId::EAGON_REINER, instance,
                                          VerifyStatus::resource_exhausted,
                                          json{{"error", e.what()}}));
    }
    return out;
}

}  // namespace symcover
