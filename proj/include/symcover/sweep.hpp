#pragma once

#include <algorithm>
#include <string>
#include <vector>

#include "symcover/enumerate.hpp"
#include "symcover/theorems.hpp"

namespace symcover {

struct SweepResult {
    json report;
    int exit_code = 0;
};

namespace detail {

inline bool wants(const SweepConfig& config, StatementId id) {
    return std::find(config.statements.begin(), config.statements.end(), id) !=
           config.statements.end();
}

inline bool wants_any(const SweepConfig& config, std::initializer_list<StatementId> ids) {
    for (StatementId id : ids)
        if (wants(config, id)) return true;
    return false;
}

/// Runs the verifiers owning the requested statements on one family member.
/// Precondition failures surface as inapplicable reports; an internal
/// consistency failure becomes a violated report.
inline void run_instance(const SweepConfig& config, const Graph& g,
                         std::vector<VerificationReport>& out) {
    auto guarded = [&](StatementId id, int k, auto&& fn) {
        try {
            auto reports = fn();
            out.insert(out.end(), reports.begin(), reports.end());
        } catch (const input_error& e) {
            out.push_back(VerificationReport{id, graph_instance(g, k, config.field),
                                             VerifyStatus::inapplicable,
                                             json{{"failed_hypothesis", e.what()}}});
        } catch (const internal_error& e) {
            out.push_back(VerificationReport{id, graph_instance(g, k, config.field),
                                             VerifyStatus::violated,
                                             json{{"internal_error", e.what()}}});
        }
    };

    for (int k = 1; k <= config.kmax; ++k) {
        if (wants(config, StatementId::SYMPOL))
            guarded(StatementId::SYMPOL, k, [&] { return verify_sympol(g, k, config.caps); });
        if (wants_any(config, {StatementId::GK_VWC, StatementId::GK_CM}))
            guarded(StatementId::GK_VWC, k,
                    [&] { return verify_gk_structure(g, k, config.field, config.caps); });
        if (wants_any(config, {StatementId::MAIN_LINRES, StatementId::MAIN_LINQUOT}))
            guarded(StatementId::MAIN_LINRES, k,
                    [&] { return verify_main(g, k, config.field, config.caps); });
        if (wants_any(config, {StatementId::LINBI_FWD, StatementId::LINBI_BWD}))
            guarded(StatementId::LINBI_FWD, k,
                    [&] { return verify_linbi(g, k, config.field, config.caps); });
        if (wants(config, StatementId::LINQ_POL)) {
            guarded(StatementId::LINQ_POL, k, [&]() -> std::vector<VerificationReport> {
                if (g.edges().empty())
                    return {VerificationReport{StatementId::LINQ_POL,
                                               graph_instance(g, k, config.field),
                                               VerifyStatus::inapplicable,
                                               json{{"failed_hypothesis", "graph has no edge"}}}};
                return verify_linq_pol(symbolic_power(cover_ideal(g), k), config.caps);
            });
        }
    }
    if (wants(config, StatementId::DEPTH_MONO))
        guarded(StatementId::DEPTH_MONO, config.kmax,
                [&] { return verify_depth_monotone(g, config.kmax, config.field, config.caps); });
    if (wants_any(config, {StatementId::REG_LOWER, StatementId::REG_UPPER}))
        guarded(StatementId::REG_LOWER, config.kmax,
                [&] { return verify_reg_bound(g, config.kmax, config.field, config.caps); });
    if (wants_any(config, {StatementId::EAGON_REINER, StatementId::TERAI_DUAL,
                           StatementId::RESTRICT_LEMMA, StatementId::COLON_POWER}))
        guarded(StatementId::EAGON_REINER, 1,
                [&] { return verify_duality_suite(g, config.field, config.caps); });
}

}  // namespace detail

inline json sweep_config_json(const SweepConfig& config) {
    json statements = json::array();
    for (StatementId id : config.statements) statements.push_back(statement_name(id));
    return json{{"family", family_name(config.family)},
                {"max_vertices", config.max_vertices},
                {"kmax", config.kmax},
                {"field", config.field.str()},
                {"statements", statements},
                {"caps",
                 {{"search_budget", config.caps.search_budget},
                  {"hochster_ambient_cap", config.caps.hochster.ambient_cap}}}};
}

/// Runs every requested verifier over the configured family. Exit code 0 on
/// success, 1 on a violation or internal inconsistency, 2 on an input error,
/// 3 when some instance exhausted its resources (partial results included).
inline SweepResult run_sweep(const SweepConfig& config) {
    SweepResult result;
    std::vector<Graph> members;
    try {
        validate_sweep_config(config);
        if (detail::wants(config, StatementId::DEPTH_MONO) && config.kmax < 2)
            throw input_error("sweep: DEPTH_MONO needs kmax >= 2");
        members = enumerate_family(config);
    } catch (const input_error& e) {
        result.report = json{{"error", e.what()}};
        result.exit_code = 2;
        return result;
    }

    std::vector<VerificationReport> reports;
    for (const Graph& g : members) detail::run_instance(config, g, reports);

    // drop reports for statements that were not requested
    std::erase_if(reports, [&](const VerificationReport& r) {
        return !detail::wants(config, r.statement);
    });

    std::sort(reports.begin(), reports.end(),
              [](const VerificationReport& a, const VerificationReport& b) {
                  std::string ka = a.instance.dump(), kb = b.instance.dump();
                  if (ka != kb) return ka < kb;
                  return statement_name(a.statement) < statement_name(b.statement);
              });

    long long verified = 0, violated = 0, inapplicable = 0, exhausted = 0;
    json list = json::array();
    for (const auto& r : reports) {
        list.push_back(r.to_json());
        switch (r.status) {
            case VerifyStatus::verified: ++verified; break;
            case VerifyStatus::violated: ++violated; break;
            case VerifyStatus::inapplicable: ++inapplicable; break;
            case VerifyStatus::resource_exhausted: ++exhausted; break;
        }
    }
    result.report = json{{"config", sweep_config_json(config)},
                         {"family_size", members.size()},
                         {"reports", list},
                         {"summary",
                          {{"verified", verified},
                           {"violated", violated},
                           {"inapplicable", inapplicable},
                           {"resource_exhausted", exhausted}}}};
    result.exit_code = violated ? 1 : (exhausted ? 3 : 0);
    return result;
}

}  // namespace symcover
