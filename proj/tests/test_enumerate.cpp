#include <catch_amalgamated.hpp>

#include <algorithm>
#include <set>
#include <string>
#include <vector>

#include "symcover/canonical.hpp"
#include "symcover/enumerate.hpp"
#include "symcover/sweep.hpp"
#include "test_support.hpp"

using namespace symcover;

namespace {

// brute-force isomorphism test by permutation search, independent of
// canonical_form
bool brute_isomorphic(const Graph& a, const Graph& b) {
    int n = a.vertex_count();
    if (n != b.vertex_count() || a.edges().size() != b.edges().size()) return false;
    std::vector<int> perm(n);
    for (int i = 0; i < n; ++i) perm[i] = i;
    do {
        bool ok = true;
        for (int i = 0; i < n && ok; ++i)
            for (int j = i + 1; j < n && ok; ++j) {
                bool ea = (a.adjacency_mask(i) >> j) & 1u;
                bool eb = (b.adjacency_mask(perm[i]) >> perm[j]) & 1u;
                if (ea != eb) ok = false;
            }
        if (ok) return true;
    } while (std::next_permutation(perm.begin(), perm.end()));
    return false;
}

long long brute_connected_count(int n) {
    std::vector<Graph> reps;
    int bits = n * (n - 1) / 2;
    for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << bits); ++mask) {
        Graph g = testsupport::labeled_graph(n, mask);
        if (!is_connected(g)) continue;
        bool fresh = true;
        for (const auto& r : reps)
            if (brute_isomorphic(g, r)) {
                fresh = false;
                break;
            }
        if (fresh) reps.push_back(g);
    }
    return static_cast<long long>(reps.size());
}

std::set<std::string> canonical_set(const std::vector<Graph>& graphs) {
    std::set<std::string> out;
    for (const auto& g : graphs) out.insert(canonical_form(g));
    return out;
}

SweepConfig config_for(Family family, int max_vertices) {
    SweepConfig c;
    c.family = family;
    c.max_vertices = max_vertices;
    c.kmax = 1;
    c.statements = {StatementId::SYMPOL};
    return c;
}

}  // namespace

TEST_CASE("connected graph counts match brute force") {
    CHECK(connected_graphs(1).size() == 1);
    CHECK(connected_graphs(2).size() == 1);
    for (int n = 3; n <= 5; ++n)
        CHECK(static_cast<long long>(connected_graphs(n).size()) == brute_connected_count(n));
}

TEST_CASE("known connected graph counts") {
    CHECK(connected_graphs(3).size() == 2);
    CHECK(connected_graphs(4).size() == 6);
    CHECK(connected_graphs(5).size() == 21);
    CHECK(connected_graphs(6).size() == 112);
}

TEST_CASE("family members are pairwise non-isomorphic and deterministic") {
    auto a = enumerate_family(config_for(Family::bipartite, 5));
    auto b = enumerate_family(config_for(Family::bipartite, 5));
    REQUIRE(a.size() == b.size());
    for (std::size_t i = 0; i < a.size(); ++i) CHECK(a[i] == b[i]);
    CHECK(canonical_set(a).size() == a.size());
}

TEST_CASE("bipartite family on up to 4 vertices") {
    auto family = enumerate_family(config_for(Family::bipartite, 4));
    std::set<std::string> expect = {
        canonical_form(Graph::from_edges(1, {})),  // the single vertex is bipartite
        canonical_form(Graph::path(2)),
        canonical_form(Graph::path(3)),
        canonical_form(Graph::path(4)),
        canonical_form(Graph::from_edges(4, {{1, 2}, {1, 3}, {1, 4}})),
        canonical_form(Graph::cycle(4)),
    };
    CHECK(canonical_set(family) == expect);
    CHECK(family.size() == 6);
}

TEST_CASE("very well-covered family on up to 4 vertices") {
    auto family = enumerate_family(config_for(Family::very_well_covered, 4));
    std::set<std::string> expect = {canonical_form(Graph::path(2)), canonical_form(Graph::path(4)),
                                    canonical_form(Graph::cycle(4))};
    CHECK(canonical_set(family) == expect);
}

TEST_CASE("whiskered family on up to 6 vertices") {
    auto family = enumerate_family(config_for(Family::whiskered, 6));
    std::set<std::string> expect = {canonical_form(whisker(Graph::path(2))),
                                    canonical_form(whisker(Graph::path(3))),
                                    canonical_form(whisker(Graph::complete(3)))};
    CHECK(canonical_set(family) == expect);
}

TEST_CASE("cm very well-covered family on up to 4 vertices") {
    auto family = enumerate_family(config_for(Family::cm_very_well_covered, 4));
    std::set<std::string> expect = {canonical_form(Graph::path(2)),
                                    canonical_form(Graph::path(4))};
    CHECK(canonical_set(family) == expect);
}

TEST_CASE("config validation") {
    auto bad_kmax = config_for(Family::bipartite, 4);
    bad_kmax.kmax = 0;
    CHECK_THROWS_AS(validate_sweep_config(bad_kmax), input_error);
    CHECK_THROWS_AS(enumerate_family(config_for(Family::all_graphs, 9)), input_error);
    CHECK_NOTHROW(validate_sweep_config(config_for(Family::whiskered, 12)));
    auto none = config_for(Family::bipartite, 4);
    none.statements.clear();
    CHECK_THROWS_AS(validate_sweep_config(none), input_error);
}

TEST_CASE("sweep runs and reports") {
    SweepConfig config;
    config.family = Family::bipartite;
    config.max_vertices = 4;
    config.kmax = 2;
    config.statements = {StatementId::LINBI_FWD, StatementId::LINBI_BWD, StatementId::REG_UPPER};
    SweepResult result = run_sweep(config);
    CHECK(result.exit_code == 0);
    CHECK(result.report["summary"]["violated"] == json(0));
    CHECK(result.report["family_size"] == json(6));
    // determinism
    SweepResult again = run_sweep(config);
    CHECK(result.report.dump() == again.report.dump());
}

TEST_CASE("sweep exit code on invalid config") {
    SweepConfig config;
    config.family = Family::bipartite;
    config.max_vertices = 4;
    config.kmax = 0;
    config.statements = {StatementId::SYMPOL};
    SweepResult result = run_sweep(config);
    CHECK(result.exit_code == 2);
}

TEST_CASE("sympol sweep over small graphs") {
    SweepConfig config;
    config.family = Family::all_graphs;
    config.max_vertices = 4;
    config.kmax = 2;
    config.statements = {StatementId::SYMPOL};
    SweepResult result = run_sweep(config);
    CHECK(result.exit_code == 0);
    CHECK(result.report["summary"]["violated"] == json(0));
}
