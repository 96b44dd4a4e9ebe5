#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "ikcert/canonical.hpp"
#include "ikcert/catalog.hpp"
#include "oracles.hpp"

using namespace ikcert;

TEST_CASE("canonical form basics")
{
    Graph k4 = Graph::complete(4);
    Graph shuffled = Graph::from_edges({{9, 2}, {9, 40}, {9, 7}, {2, 40}, {2, 7}, {40, 7}});
    CHECK(canonical_form(k4) == canonical_form(shuffled));
    CHECK(canonical_form(k4).key() == canonical_form(shuffled).key());

    Graph path = Graph::from_edges({{1, 2}, {2, 3}});
    CHECK_FALSE(canonical_form(path) == canonical_form(Graph::complete(3)));
    CHECK(validate_canonical_form(path, canonical_form(path)));
}

TEST_CASE("canonical form of an empty graph")
{
    const auto f = canonical_form(Graph{});
    CHECK(f.order == 0);
    CHECK(f.edges.empty());
}

TEST_CASE("canonical form invariant under 1200 random relabellings of catalog graphs")
{
    std::mt19937 rng(2024);
    const auto& cat = Catalog::standard();
    int runs = 0;
    for (const auto& name : cat.names()) {
        const Graph& g = cat.get(name).graph;
        const auto base = canonical_form(g);
        REQUIRE(validate_canonical_form(g, base));
        for (int i = 0; i < 60; ++i) {
            const auto [h, map] = oracle::random_relabel(rng, g);
            const auto f = canonical_form(h);
            REQUIRE(f == base);
            REQUIRE(validate_canonical_form(h, f));
            ++runs;
        }
    }
    CHECK(runs >= 1000);
}

TEST_CASE("isomorphism agrees with brute force up to 7 vertices")
{
    std::mt19937 rng(7);
    int positives = 0;
    int negatives = 0;
    for (int i = 0; i < 400; ++i) {
        const int n = 3 + i % 5;
        const Graph a = oracle::random_graph(rng, n, 0.5);
        Graph b;
        if (i % 2 == 0) {
            b = oracle::random_relabel(rng, a).first;
        } else {
            // same order and size, edges placed at random
            b = Graph::edgeless(n);
            std::vector<Edge> all;
            for (int u = 1; u <= n; ++u) {
                for (int v = u + 1; v <= n; ++v) {
                    all.push_back({u, v});
                }
            }
            std::shuffle(all.begin(), all.end(), rng);
            for (int k = 0; k < a.size(); ++k) {
                b.add_edge(all[k].u, all[k].v);
            }
        }
        const bool expected = oracle::isomorphic(a, b);
        const auto got = is_isomorphic(a, b);
        REQUIRE(got.isomorphic == expected);
        if (got.isomorphic) {
            REQUIRE(got.witness);
            REQUIRE(validate_isomorphism(a, b, *got.witness));
            ++positives;
        } else {
            ++negatives;
        }
    }
    CHECK(positives > 100);
    CHECK(negatives > 50);
}

TEST_CASE("isomorphism examples")
{
    const Graph k33 = Graph::complete_multipartite({3, 3});
    std::mt19937 rng(3);
    CHECK(is_isomorphic(k33, oracle::random_relabel(rng, k33).first).isomorphic);
    CHECK_FALSE(is_isomorphic(Graph::complete(4), Graph::cycle(4)).isomorphic);

    const auto& cat = Catalog::standard();
    const Graph s = clique_sum(cat.get("H").graph, cat.get("K").graph, mask_of({3, 4, 5, 6}));
    const auto iso = is_isomorphic(s, cat.get("M").graph);
    CHECK(iso.isomorphic);
    CHECK(validate_isomorphism(s, cat.get("M").graph, *iso.witness));
}

TEST_CASE("validate_isomorphism rejects bad maps")
{
    const Graph p = Graph::from_edges({{1, 2}, {2, 3}});
    CHECK(validate_isomorphism(p, p, {{1, 3}, {2, 2}, {3, 1}}));
    CHECK_FALSE(validate_isomorphism(p, p, {{1, 2}, {2, 1}, {3, 3}}));
    CHECK_FALSE(validate_isomorphism(p, p, {{1, 1}, {2, 2}}));
    CHECK_FALSE(validate_isomorphism(p, p, {{1, 1}, {2, 1}, {3, 3}}));
}

TEST_CASE("coloured canonical forms respect colours")
{
    const Graph p = Graph::from_edges({{1, 2}, {2, 3}});
    CHECK(canonical_form(p, {{1, 1}}) == canonical_form(p, {{3, 1}}));
    CHECK_FALSE(canonical_form(p, {{1, 1}}) == canonical_form(p, {{2, 1}}));
}

namespace {

std::vector<std::vector<int>> brute_vertex_orbits(const Graph& g)
{
    const auto autos = oracle::automorphisms(g);
    std::vector<std::vector<int>> out;
    std::set<int> done;
    for (int v : g.vertices()) {
        if (done.count(v)) {
            continue;
        }
        std::set<int> orb;
        for (const auto& a : autos) {
            orb.insert(a.at(v));
        }
        done.insert(orb.begin(), orb.end());
        out.emplace_back(orb.begin(), orb.end());
    }
    return out;
}

std::size_t brute_edge_orbit_count(const Graph& g)
{
    const auto autos = oracle::automorphisms(g);
    std::set<Edge> done;
    std::size_t count = 0;
    for (const Edge& e : g.edges()) {
        if (done.count(e)) {
            continue;
        }
        ++count;
        for (const auto& a : autos) {
            done.insert(Edge{a.at(e.u), a.at(e.v)});
        }
    }
    return count;
}

} // namespace

TEST_CASE("orbits agree with brute-force automorphism enumeration")
{
    std::mt19937 rng(99);
    for (int i = 0; i < 120; ++i) {
        const Graph g = oracle::random_graph(rng, 3 + i % 5, i % 3 == 0 ? 0.7 : 0.4);
        const auto o = orbits(g);
        REQUIRE(o.vertex_orbits == brute_vertex_orbits(g));
        REQUIRE(o.edge_orbits.size() == brute_edge_orbit_count(g));
    }
}

TEST_CASE("orbit properties")
{
    std::mt19937 rng(17);
    const auto& cat = Catalog::standard();
    for (const auto& name : cat.names()) {
        const Graph& g = cat.get(name).graph;
        const auto o = orbits(g);
        std::set<int> seen;
        for (const auto& orb : o.vertex_orbits) {
            for (int v : orb) {
                REQUIRE(seen.insert(v).second);
            }
        }
        CHECK(seen.size() == static_cast<std::size_t>(g.order()));
        std::size_t edges = 0;
        for (const auto& orb : o.edge_orbits) {
            edges += orb.size();
        }
        CHECK(edges == static_cast<std::size_t>(g.size()));
        for (const auto& gen : o.generators) {
            REQUIRE(validate_isomorphism(g, g, gen));
            for (const auto& orb : o.vertex_orbits) {
                for (int v : orb) {
                    REQUIRE(std::find(orb.begin(), orb.end(), gen.at(v)) != orb.end());
                }
            }
            for (const auto& orb : o.edge_orbits) {
                for (const Edge& e : orb) {
                    REQUIRE(std::find(orb.begin(), orb.end(), Edge{gen.at(e.u), gen.at(e.v)}) != orb.end());
                }
            }
        }
        auto singletons = [](const OrbitPartition& p) {
            return std::count_if(p.vertex_orbits.begin(), p.vertex_orbits.end(),
                                 [](const auto& orb) { return orb.size() == 1; });
        };
        CHECK(singletons(orbits(oracle::random_relabel(rng, g).first)) == singletons(o));
    }
}

TEST_CASE("orbits of G10_26 and complete graphs")
{
    const auto o = orbits(Catalog::standard().get("G10_26").graph);
    CHECK(o.vertex_orbits == std::vector<std::vector<int>>{{1, 8}, {2, 3}, {4}, {5, 6}, {7, 10}, {9}});
    CHECK(o.edge_orbits.size() == 11);
    for (int n = 1; n <= 8; ++n) {
        CHECK(orbits(Graph::complete(n)).vertex_orbits.size() == 1);
    }
}
