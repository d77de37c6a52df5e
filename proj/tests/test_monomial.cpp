#include <catch_amalgamated.hpp>

#include <algorithm>
#include <vector>

#include "symcover/graph.hpp"
#include "symcover/monomial.hpp"
#include "test_support.hpp"

using testsupport::brute_symbolic;
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

}  // namespace

TEST_CASE("monomial arithmetic") {
    Monomial a = mono({{1, 2}, {2, 1}});
    CHECK(a.degree() == 3);
    CHECK(a.str() == "x1^2*x2");
    CHECK((a * mono({{2, 1}, {3, 1}})).str() == "x1^2*x2^2*x3");
    CHECK(Monomial::gcd(a, mono({{1, 1}, {3, 2}})) == mono({{1, 1}}));
    CHECK(Monomial::lcm(mono({{1, 1}}), mono({{2, 1}})) == mono({{1, 1}, {2, 1}}));
    CHECK(mono({{1, 1}}).divides(a));
    CHECK_FALSE(mono({{3, 1}}).divides(a));
    CHECK(a.quotient_by(mono({{1, 1}, {2, 5}})) == mono({{1, 1}}));
    CHECK(Monomial::unit().is_unit());
}

TEST_CASE("minimalize") {
    auto i1 = minimalize({mono({{1, 1}}), mono({{1, 1}, {2, 1}})}, vars(2));
    CHECK(i1.generators() == std::vector<Monomial>{mono({{1, 1}})});
    auto i2 = minimalize({mono({{1, 1}, {3, 1}}), mono({{2, 1}, {4, 1}})}, vars(4));
    CHECK(i2.generators().size() == 2);
    auto i3 = minimalize({}, vars(2));
    CHECK(i3.is_zero());
}

TEST_CASE("edge and cover ideals") {
    CHECK(edge_ideal(Graph::complete(3)).generators() ==
          std::vector<Monomial>{mono({{1, 1}, {2, 1}}), mono({{1, 1}, {3, 1}}),
                                mono({{2, 1}, {3, 1}})});
    CHECK(edge_ideal(Graph::from_edges(3, {})).is_zero());
    CHECK(edge_ideal(Graph::cycle(4)).generators().size() == 4);

    CHECK(cover_ideal(Graph::cycle(4)).generators() ==
          std::vector<Monomial>{mono({{1, 1}, {3, 1}}), mono({{2, 1}, {4, 1}})});
    CHECK(cover_ideal(Graph::complete(3)).generators().size() == 3);
    CHECK(cover_ideal(Graph::from_edges(3, {})).is_unit());
}

TEST_CASE("cover ideal is the alexander dual of the edge ideal") {
    for (const Graph& g : {Graph::path(2), Graph::path(4), Graph::cycle(4), Graph::cycle(5),
                           Graph::complete(4), whisker(Graph::complete(3))}) {
        CHECK(cover_ideal(g) == alexander_dual(edge_ideal(g)));
    }
}

TEST_CASE("intersection") {
    auto a = minimalize({mono({{1, 1}})}, vars(2));
    auto b = minimalize({mono({{2, 1}})}, vars(2));
    CHECK(intersect(a, b).generators() == std::vector<Monomial>{mono({{1, 1}, {2, 1}})});

    auto c = minimalize({mono({{1, 1}}), mono({{2, 1}})}, vars(4));
    auto d = minimalize({mono({{3, 1}}), mono({{4, 1}})}, vars(4));
    CHECK(intersect(c, d).generators().size() == 4);

    auto i = cover_ideal(Graph::path(4));
    CHECK(intersect(i, MonomialIdeal::unit(i.ambient())) == i);
    CHECK_THROWS_AS(intersect(a, c), input_error);
}

TEST_CASE("powers") {
    auto m = minimalize({mono({{1, 1}}), mono({{2, 1}})}, vars(2));
    CHECK(power(m, 2).generators() ==
          std::vector<Monomial>{mono({{1, 2}}), mono({{1, 1}, {2, 1}}), mono({{2, 2}})});
    CHECK(power(m, 1) == m);
    auto j = cover_ideal(Graph::cycle(4));
    CHECK(power(j, 2).generators() ==
          std::vector<Monomial>{mono({{1, 2}, {3, 2}}), mono({{1, 1}, {2, 1}, {3, 1}, {4, 1}}),
                                mono({{2, 2}, {4, 2}})});
}

TEST_CASE("minimal primes") {
    auto k3 = edge_ideal(Graph::complete(3));
    CHECK(minimal_primes(k3) ==
          std::vector<std::vector<VertexId>>{{x(1), x(2)}, {x(1), x(3)}, {x(2), x(3)}});
    auto i = minimalize({mono({{1, 1}, {3, 1}}), mono({{2, 1}, {4, 1}})}, vars(4));
    CHECK(minimal_primes(i) ==
          std::vector<std::vector<VertexId>>{
              {x(1), x(2)}, {x(1), x(4)}, {x(2), x(3)}, {x(3), x(4)}});
    CHECK(minimal_primes(minimalize({mono({{1, 1}})}, vars(1))) ==
          std::vector<std::vector<VertexId>>{{x(1)}});
    CHECK_THROWS_AS(minimal_primes(minimalize({mono({{1, 2}})}, vars(1))), input_error);
    CHECK_THROWS_AS(minimal_primes(MonomialIdeal::zero(vars(1))), input_error);
    CHECK_THROWS_AS(minimal_primes(MonomialIdeal::unit(vars(1))), input_error);
}

TEST_CASE("cover ideal primes are the edges") {
    for (const Graph& g : {Graph::path(4), Graph::cycle(5), Graph::complete(4)}) {
        auto primes = minimal_primes(cover_ideal(g));
        std::vector<std::vector<VertexId>> edges;
        for (const auto& [u, w] : g.edges()) edges.push_back({u, w});
        std::sort(edges.begin(), edges.end(), shortlex_less);
        CHECK(primes == edges);
    }
}

TEST_CASE("symbolic powers") {
    auto jk3 = cover_ideal(Graph::complete(3));
    CHECK(symbolic_power(jk3, 1) == jk3);
    CHECK(symbolic_power(jk3, 2).generators() ==
          std::vector<Monomial>{mono({{1, 1}, {2, 1}, {3, 1}}), mono({{1, 2}, {2, 2}}),
                                mono({{1, 2}, {3, 2}}), mono({{2, 2}, {3, 2}})});

    // brute-force membership oracle, every monomial of degree <= 4
    CHECK(symbolic_power(jk3, 2).generators() == brute_symbolic(jk3, 2, 4));

    // bipartite: ordinary and symbolic powers coincide
    auto jc4 = cover_ideal(Graph::cycle(4));
    CHECK(symbolic_power(jc4, 2) == power(jc4, 2));
    for (const Graph& g : {Graph::path(4), Graph::path(5), Graph::cycle(6)})
        for (int k = 2; k <= 3; ++k) CHECK(symbolic_power(cover_ideal(g), k) ==
                                           power(cover_ideal(g), k));
}

TEST_CASE("symbolic power contains ordinary power generator-wise") {
    for (const Graph& g : {Graph::complete(3), Graph::cycle(5), whisker(Graph::complete(3))}) {
        auto j = cover_ideal(g);
        for (int k = 2; k <= 3; ++k) {
            auto sym = symbolic_power(j, k);
            MonomialIdeal ordinary = power(j, k);
            for (const auto& gen : ordinary.generators()) CHECK(sym.contains(gen));
        }
    }
}

TEST_CASE("colon") {
    auto i = minimalize({mono({{1, 1}, {2, 1}})}, vars(2));
    CHECK(colon(i, mono({{1, 1}})).generators() == std::vector<Monomial>{mono({{2, 1}})});
    CHECK(colon(i, Monomial::unit()) == i);
    auto sq = minimalize({mono({{1, 2}}), mono({{1, 1}, {2, 1}}), mono({{2, 2}})}, vars(2));
    CHECK(colon(sq, mono({{1, 1}})).generators() ==
          std::vector<Monomial>{mono({{1, 1}}), mono({{2, 1}})});
}

TEST_CASE("colon of a power by one bipartition side peels one factor") {
    for (const Graph& g : {Graph::path(4), Graph::cycle(4), Graph::cycle(6), Graph::path(5)}) {
        auto sides = is_bipartite(g);
        REQUIRE(sides.has_value());
        std::vector<Monomial::Entry> es;
        for (const auto& u : sides->first) es.push_back({u, 1});
        Monomial side(es);
        auto j = cover_ideal(g);
        for (int k = 2; k <= 3; ++k) CHECK(colon(power(j, k), side) == power(j, k - 1));
    }
}

TEST_CASE("restriction") {
    auto i = minimalize({mono({{1, 1}}), mono({{2, 1}})}, vars(2));
    auto r = restrict(i, x(1));
    CHECK(r.ambient() == std::vector<VertexId>{x(2)});
    CHECK(r.generators() == std::vector<Monomial>{mono({{2, 1}})});

    auto jp4 = cover_ideal(Graph::path(4));
    CHECK(restrict(jp4, x(1)).generators() ==
          std::vector<Monomial>{mono({{2, 1}, {3, 1}}), mono({{2, 1}, {4, 1}})});

    CHECK(restrict(MonomialIdeal::unit(vars(2)), x(1)).is_unit());
    CHECK_THROWS_AS(restrict(i, x(9)), input_error);
}

TEST_CASE("restriction of a cover ideal factors through the neighborhood") {
    for (const Graph& g :
         {Graph::path(4), Graph::cycle(5), Graph::complete(4), whisker(Graph::path(3))}) {
        auto j = cover_ideal(g);
        for (const auto& vtx : g.vertices()) {
            auto got = restrict(j, vtx);
            std::vector<Monomial::Entry> es;
            for (const auto& y : g.neighbors(vtx)) es.push_back({y, 1});
            Monomial nb(es);
            Graph rest = delete_vertices(g, closed_neighborhood(g, {vtx}));
            MonomialIdeal rest_cover = cover_ideal(rest);
            std::vector<Monomial> gens;
            for (const auto& c : rest_cover.generators()) gens.push_back(nb * c);
            CHECK(got == minimalize(gens, got.ambient()));
        }
    }
}

TEST_CASE("alexander dual") {
    CHECK(alexander_dual(edge_ideal(Graph::cycle(4))) == cover_ideal(Graph::cycle(4)));
    auto ip4 = edge_ideal(Graph::path(4));
    CHECK(alexander_dual(alexander_dual(ip4)) == ip4);
    auto principal = minimalize({mono({{1, 1}})}, vars(1));
    CHECK(alexander_dual(principal) == principal);
}

TEST_CASE("polarization") {
    auto sq = minimalize({mono({{1, 2}})}, vars(1));
    auto [pol, blocks] = polarize(sq);
    CHECK(pol.generators() == std::vector<Monomial>{Monomial({{x(1, 1), 1}, {x(1, 2), 1}})});
    CHECK(blocks.at(x(1)) == std::vector<VertexId>{x(1, 1), x(1, 2)});

    auto m2 = minimalize({mono({{1, 2}}), mono({{1, 1}, {2, 1}}), mono({{2, 2}})}, vars(2));
    auto pol2 = polarize(m2).first;
    CHECK(pol2.generators() ==
          std::vector<Monomial>{Monomial({{x(1, 1), 1}, {x(1, 2), 1}}),
                                Monomial({{x(1, 1), 1}, {x(2, 1), 1}}),
                                Monomial({{x(2, 1), 1}, {x(2, 2), 1}})});
    CHECK(pol2.is_squarefree());
    CHECK(pol2.generators().size() == m2.generators().size());

    auto sf = cover_ideal(Graph::path(4));
    CHECK(MonomialIdeal::same_generators(polarize(sf).first, sf));

    CHECK_THROWS_AS(polarize(pol2), input_error);
}

TEST_CASE("polarization commutes with intersection") {
    auto a = minimalize({mono({{1, 2}}), mono({{2, 1}, {3, 1}})}, vars(3));
    auto b = minimalize({mono({{1, 1}, {2, 2}}), mono({{3, 2}})}, vars(3));
    auto lhs = polarize(intersect(a, b)).first;
    // align the level blocks over one common ambient before intersecting
    auto pa = polarize(a).first, pb = polarize(b).first;
    std::vector<VertexId> amb;
    std::set_union(pa.ambient().begin(), pa.ambient().end(), pb.ambient().begin(),
                   pb.ambient().end(), std::back_inserter(amb));
    auto rhs = intersect(MonomialIdeal(amb, pa.generators()), MonomialIdeal(amb, pb.generators()));
    CHECK(MonomialIdeal::same_generators(lhs, rhs));
}

TEST_CASE("linear quotients") {
    auto jk3 = cover_ideal(Graph::complete(3));
    auto r = has_linear_quotients(jk3);
    REQUIRE(r.status == SearchStatus::yes);
    CHECK(r.order == std::vector<Monomial>{mono({{1, 1}, {2, 1}}), mono({{1, 1}, {3, 1}}),
                                           mono({{2, 1}, {3, 1}})});
    CHECK(validate_linear_quotient_order(jk3, r.order));

    auto jc4 = cover_ideal(Graph::cycle(4));
    CHECK(has_linear_quotients(jc4).status == SearchStatus::no);

    auto principal = minimalize({mono({{1, 1}, {2, 1}})}, vars(2));
    CHECK(has_linear_quotients(principal).status == SearchStatus::yes);

    CHECK(has_linear_quotients(jk3, 1).status == SearchStatus::budget_exhausted);
}

TEST_CASE("linear quotients agree with polarization") {
    std::vector<MonomialIdeal> samples = {
        minimalize({mono({{1, 2}}), mono({{1, 1}, {2, 1}}), mono({{2, 2}})}, vars(2)),
        minimalize({mono({{1, 1}, {3, 1}}), mono({{2, 1}, {4, 1}})}, vars(4)),
        minimalize({mono({{1, 3}})}, vars(1)),
        power(cover_ideal(Graph::complete(3)), 2),
        symbolic_power(cover_ideal(Graph::complete(3)), 2),
    };
    for (const auto& ideal : samples) {
        auto a = has_linear_quotients(ideal);
        auto b = has_linear_quotients(polarize(ideal).first);
        REQUIRE(a.status != SearchStatus::budget_exhausted);
        CHECK(a.status == b.status);
    }
}

TEST_CASE("deg_max") {
    CHECK(deg_max(cover_ideal(Graph::path(3))) == 2);
    CHECK(deg_max(cover_ideal(Graph::cycle(4))) == 2);
    CHECK(deg_max(MonomialIdeal::unit(vars(1))) == 0);
    CHECK_THROWS_AS(deg_max(MonomialIdeal::zero(vars(1))), input_error);
}

TEST_CASE("every operation returns minimal generator sets") {
    auto recheck = [](const MonomialIdeal& ideal) {
        return ideal == minimalize(ideal.generators(), ideal.ambient());
    };
    auto j = cover_ideal(Graph::cycle(5));
    CHECK(recheck(j));
    CHECK(recheck(power(j, 3)));
    CHECK(recheck(symbolic_power(j, 3)));
    CHECK(recheck(colon(power(j, 2), mono({{1, 1}, {2, 1}}))));
    CHECK(recheck(restrict(j, x(3))));
    CHECK(recheck(alexander_dual(j)));
    CHECK(recheck(polarize(symbolic_power(j, 2)).first));
}
