#include <catch_amalgamated.hpp>

#include <vector>

#include "symcover/betti.hpp"
#include "symcover/graph.hpp"
#include "symcover/monomial.hpp"
#include "symcover/simplicial.hpp"

using namespace symcover;

namespace {

VertexId x(int base, int level = 1) { return VertexId{base, level}; }

Monomial mono(std::vector<std::pair<int, int>> base_exp) {
    std::vector<Monomial::Entry> es;
    for (auto [b, e] : base_exp) es.push_back({x(b), e});
    return Monomial(es);
}

std::vector<VertexId> vars(int n) {
    std::vector<VertexId> out;
    for (int i = 1; i <= n; ++i) out.push_back(x(i));
    return out;
}

using Entries = std::map<std::pair<int, int>, long long>;

}  // namespace

TEST_CASE("betti table of a squarefree regular sequence") {
    auto koszul = minimalize({mono({{1, 1}, {3, 1}}), mono({{2, 1}, {4, 1}})}, vars(4));
    auto t = betti_table_squarefree(koszul, FieldSpec(0));
    CHECK(t.entries == Entries{{{0, 2}, 2}, {{1, 4}, 1}});
}

TEST_CASE("betti table of a principal ideal") {
    auto t = betti_table_squarefree(minimalize({mono({{1, 1}})}, vars(1)), FieldSpec(0));
    CHECK(t.entries == Entries{{{0, 1}, 1}});
    auto cube = betti_table(minimalize({mono({{1, 3}})}, vars(1)), FieldSpec(0));
    CHECK(cube.entries == Entries{{{0, 3}, 1}});
}

TEST_CASE("betti table of the path cover ideal is linear") {
    // mapping-cone count: three generators, colons of one variable each
    auto t = betti_table_squarefree(cover_ideal(Graph::path(4)), FieldSpec(0));
    CHECK(t.entries == Entries{{{0, 2}, 3}, {{1, 3}, 2}});
}

TEST_CASE("polarization preserves the betti table") {
    auto m2 = minimalize({mono({{1, 2}}), mono({{1, 1}, {2, 1}}), mono({{2, 2}})}, vars(2));
    auto t = betti_table(m2, FieldSpec(0));
    CHECK(t.entries == Entries{{{0, 2}, 3}, {{1, 3}, 2}});
    CHECK(t.ambient_size == 2);

    auto sf = cover_ideal(Graph::cycle(4));
    CHECK(betti_table(sf, FieldSpec(0)).entries ==
          betti_table_squarefree(sf, FieldSpec(0)).entries);
}

TEST_CASE("regularity, projective dimension, depth") {
    auto koszul = minimalize({mono({{1, 1}, {3, 1}}), mono({{2, 1}, {4, 1}})}, vars(4));
    auto q = quotient_table(betti_table(koszul, FieldSpec(0)));
    CHECK(regularity(q) == 2);
    CHECK(projective_dimension(q) == 2);
    CHECK(depth_of_quotient(q) == 2);

    auto jp4 = quotient_table(betti_table(cover_ideal(Graph::path(4)), FieldSpec(0)));
    CHECK(regularity(jp4) == 1);

    auto principal = quotient_table(betti_table(minimalize({mono({{1, 1}})}, vars(1)),
                                                FieldSpec(0)));
    CHECK(regularity(principal) == 0);
    CHECK(projective_dimension(principal) == 1);
    CHECK(depth_of_quotient(principal) == 0);

    CHECK_THROWS_AS(regularity(BettiTable{}), input_error);
}

TEST_CASE("quotient table shift consistency") {
    auto ideal_t = betti_table(cover_ideal(Graph::cycle(4)), FieldSpec(0));
    auto quot = quotient_table(ideal_t);
    CHECK(quot.rank(0, 0) == 1);
    for (const auto& [ij, r] : ideal_t.entries) CHECK(quot.rank(ij.first + 1, ij.second) == r);
    CHECK(quot.entries.size() == ideal_t.entries.size() + 1);
}

TEST_CASE("zero and unit ideals") {
    auto z = betti_table(MonomialIdeal::zero(vars(3)), FieldSpec(0));
    CHECK(z.entries.empty());
    auto q = quotient_table(z);
    CHECK(regularity(q) == 0);
    CHECK(depth_of_quotient(q) == 3);
    CHECK_THROWS_AS(betti_table(MonomialIdeal::unit(vars(2)), FieldSpec(0)), input_error);
}

TEST_CASE("linear resolution") {
    CHECK_FALSE(has_linear_resolution(cover_ideal(Graph::cycle(4)), FieldSpec(0)));
    CHECK(has_linear_resolution(cover_ideal(Graph::complete(3)), FieldSpec(0)));
    // mixed generator degrees short-circuit
    CHECK_FALSE(has_linear_resolution(cover_ideal(Graph::path(3)), FieldSpec(0)));
}

TEST_CASE("cohen-macaulayness") {
    CHECK_FALSE(is_cohen_macaulay(independence_complex(Graph::cycle(4)), FieldSpec(0)));
    CHECK(is_cohen_macaulay(independence_complex(Graph::path(4)), FieldSpec(0)));
    CHECK(is_cohen_macaulay(SimplicialComplex::simplex(vars(3)), FieldSpec(0)));
    CHECK(is_cohen_macaulay(independence_complex(Graph::complete(3)), FieldSpec(0)));
    CHECK_THROWS_AS(is_cohen_macaulay(SimplicialComplex::void_complex(vars(1)), FieldSpec(0)),
                    input_error);
}

TEST_CASE("terai duality on small graphs") {
    for (const Graph& g : {Graph::path(2), Graph::path(4), Graph::cycle(4), Graph::cycle(5),
                           Graph::complete(4)}) {
        auto cover_q = quotient_table(betti_table(cover_ideal(g), FieldSpec(0)));
        auto edge_q = quotient_table(betti_table(edge_ideal(g), FieldSpec(0)));
        CHECK(projective_dimension(cover_q) == regularity(edge_q) + 1);
    }
}

TEST_CASE("squarefree duality of regularity and projective dimension") {
    for (const Graph& g : {Graph::path(3), Graph::path(4), Graph::cycle(5)}) {
        auto ideal = edge_ideal(g);
        auto quot = quotient_table(betti_table(ideal, FieldSpec(0)));
        auto dual = betti_table(alexander_dual(ideal), FieldSpec(0));
        CHECK(projective_dimension(quot) == regularity(dual));
    }
}

TEST_CASE("characteristic-free instances agree across fields") {
    for (const Graph& g : {Graph::path(4), Graph::path(5), Graph::cycle(5), Graph::complete(4)}) {
        for (const auto& ideal : {edge_ideal(g), cover_ideal(g)}) {
            auto t0 = betti_table(ideal, FieldSpec(0));
            auto t2 = betti_table(ideal, FieldSpec(2));
            CHECK(t0.entries == t2.entries);
        }
    }
}

TEST_CASE("restriction and colon regularity monotonicity") {
    auto reg_of = [](const MonomialIdeal& ideal) {
        return regularity(betti_table(ideal, FieldSpec(0)));
    };
    for (const Graph& g : {Graph::path(4), Graph::cycle(5)}) {
        auto j = cover_ideal(g);
        for (const auto& vtx : g.vertices()) {
            auto r = restrict(j, vtx);
            if (r.is_zero() || r.is_unit()) continue;
            CHECK(reg_of(r) <= reg_of(j));
        }
        auto c = colon(j, mono({{1, 1}}));
        if (!c.is_unit()) {
            auto jq = quotient_table(betti_table(j, FieldSpec(0)));
            auto cq = quotient_table(betti_table(c, FieldSpec(0)));
            CHECK(regularity(cq) <= regularity(jq));
        }
    }
}

TEST_CASE("hochster ambient cap") {
    HochsterOptions small;
    small.ambient_cap = 3;
    CHECK_THROWS_AS(betti_table(cover_ideal(Graph::cycle(4)), FieldSpec(0), small),
                    resource_error);
}
