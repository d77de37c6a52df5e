#include <catch_amalgamated.hpp>

#include <cstdint>
#include <vector>

#include "symcover/graph.hpp"
#include "symcover/homology.hpp"
#include "symcover/simplicial.hpp"
#include "test_support.hpp"

using namespace symcover;

namespace {

VertexId v(int base) { return VertexId{base, 1}; }

std::vector<VertexId> vs(int n) {
    std::vector<VertexId> out;
    for (int i = 1; i <= n; ++i) out.push_back(v(i));
    return out;
}

SimplicialComplex complex_of(int n, std::vector<std::vector<int>> facets) {
    std::vector<std::vector<VertexId>> fs;
    for (const auto& f : facets) {
        std::vector<VertexId> s;
        for (int i : f) s.push_back(v(i));
        fs.push_back(s);
    }
    return SimplicialComplex(vs(n), fs);
}

// minimal 6-vertex triangulation of the real projective plane
SimplicialComplex rp2() {
    return complex_of(6, {{1, 2, 4}, {1, 2, 6}, {1, 3, 4}, {1, 3, 5}, {1, 5, 6},
                          {2, 3, 5}, {2, 3, 6}, {2, 4, 5}, {3, 4, 6}, {4, 5, 6}});
}

}  // namespace

TEST_CASE("reduced homology of pinned complexes") {
    // two disjoint points
    auto pts = complex_of(2, {{1}, {2}});
    CHECK(reduced_homology_ranks(pts, FieldSpec(0)) == std::vector<long long>{0, 1});

    // hollow triangle
    auto circle = complex_of(3, {{1, 2}, {1, 3}, {2, 3}});
    CHECK(reduced_homology_ranks(circle, FieldSpec(0)) == std::vector<long long>{0, 0, 1});

    // solid simplex is acyclic
    auto solid = SimplicialComplex::simplex(vs(4));
    for (long long r : reduced_homology_ranks(solid, FieldSpec(0))) CHECK(r == 0);

    // sphere: boundary of the 3-simplex
    auto sphere = complex_of(4, {{1, 2, 3}, {1, 2, 4}, {1, 3, 4}, {2, 3, 4}});
    CHECK(reduced_homology_ranks(sphere, FieldSpec(0)) == std::vector<long long>{0, 0, 0, 1});

    // the empty facet alone carries homology in dimension -1
    CHECK(reduced_homology_ranks(SimplicialComplex::irrelevant(vs(1)), FieldSpec(0)) ==
          std::vector<long long>{1});
    CHECK(reduced_homology_ranks(SimplicialComplex::void_complex(vs(1)), FieldSpec(0)).empty());
}

TEST_CASE("projective plane homology depends on the characteristic") {
    auto complex = rp2();
    CHECK(reduced_homology_ranks(complex, FieldSpec(0)) ==
          std::vector<long long>{0, 0, 0, 0});
    CHECK(reduced_homology_ranks(complex, FieldSpec(2)) ==
          std::vector<long long>{0, 0, 1, 1});
    CHECK(reduced_homology_ranks(complex, FieldSpec(3)) ==
          std::vector<long long>{0, 0, 0, 0});

    // Smith normal form oracle agrees
    CHECK(testsupport::snf_homology(complex, 0) == std::vector<long long>{0, 0, 0, 0});
    CHECK(testsupport::snf_homology(complex, 2) == std::vector<long long>{0, 0, 1, 1});
}

TEST_CASE("column reduction matches the Smith normal form oracle") {
    // independence complexes of all labeled graphs on 4 vertices, both fields
    for (std::uint64_t mask = 0; mask < 64; ++mask) {
        Graph g = testsupport::labeled_graph(4, mask);
        auto complex = independence_complex(g);
        for (int ch : {0, 2, 3}) {
            CHECK(reduced_homology_ranks(complex, FieldSpec(ch)) ==
                  testsupport::snf_homology(complex, ch));
        }
    }
}

TEST_CASE("support complex homology agrees with the facet route") {
    // the complex on {1..4} with non-faces {1,2} and {3,4}: two hollow "edges"
    // joined, i.e. the independence complex of two disjoint edges
    Graph g = Graph::from_edges(4, {{1, 2}, {3, 4}});
    auto complex = independence_complex(g);
    detail::SupportComplex sc;
    sc.world = 0b1111;
    sc.supports = {0b0011, 0b1100};
    auto direct = detail::support_complex_homology(sc, FieldSpec(0), 1 << 20);
    auto expect = reduced_homology_ranks(complex, FieldSpec(0));
    while (direct.size() < expect.size()) direct.push_back(0);
    while (expect.size() < direct.size()) expect.push_back(0);
    CHECK(direct == expect);
}

TEST_CASE("field characteristic validation") {
    CHECK_NOTHROW(FieldSpec(0));
    CHECK_NOTHROW(FieldSpec(2));
    CHECK_NOTHROW(FieldSpec(32003));
    CHECK_THROWS_AS(FieldSpec(1), input_error);
    CHECK_THROWS_AS(FieldSpec(4), input_error);
    CHECK_THROWS_AS(FieldSpec(-2), input_error);
    CHECK(FieldSpec(0).str() == "0");
    CHECK(FieldSpec(2).str() == "p2");
}
