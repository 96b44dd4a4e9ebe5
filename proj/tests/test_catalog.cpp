#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "ikcert/canonical.hpp"
#include "ikcert/catalog.hpp"
#include "ikcert/planarity.hpp"
#include "oracles.hpp"

using namespace ikcert;

TEST_CASE("catalog names and shapes")
{
    const auto& cat = Catalog::standard();
    CHECK(cat.problems().empty());
    const auto names = cat.names();
    CHECK(names.size() == 21);
    const std::map<std::string, std::pair<int, int>> shapes = {
        {"G11_35", {11, 35}}, {"G10_30", {10, 30}}, {"G10_26", {10, 26}}, {"M", {11, 34}},
        {"G9_28", {9, 28}},   {"K5", {5, 10}},      {"K6", {6, 15}},      {"K7", {7, 21}},
        {"K331", {7, 15}},    {"K3311", {8, 22}},   {"Hprime", {7, 15}},  {"Kprime", {6, 12}},
    };
    for (const auto& [name, shape] : shapes) {
        CAPTURE(name);
        REQUIRE(cat.has(name));
        CHECK(cat.get(name).graph.order() == shape.first);
        CHECK(cat.get(name).graph.size() == shape.second);
    }
    CHECK(cat.get("G11_35").provenance == Provenance::appendix);
    CHECK(cat.get("H").provenance == Provenance::split);
    CHECK_FALSE(cat.has("nope"));
    CHECK_THROWS_AS((void)cat.get("nope"), CatalogError);
}

TEST_CASE("checksums are label sensitive")
{
    const Graph p = Graph::from_edges({{1, 2}, {2, 3}});
    const Graph q = Graph::from_edges({{1, 3}, {3, 2}});
    CHECK(checksum(p) != checksum(q));
    CHECK(checksum(p) == checksum(Graph::from_edges({{2, 3}, {1, 2}})));
}

TEST_CASE("M splits into H and K over the K4 {3,4,5,6}")
{
    const auto& cat = Catalog::standard();
    const Graph& m = cat.get("M").graph;
    const VertexMask s = mask_of({3, 4, 5, 6});
    REQUIRE(m.is_clique(s));
    CHECK(delete_vertices(m, s).components().size() == 2);

    const auto [h, k] = split_clique_sum(m, s);
    CHECK(h == cat.get("H").graph);
    CHECK(k == cat.get("K").graph);
    CHECK((h.vertex_mask() & k.vertex_mask()) == s);
    CHECK(clique_sum(h, k, s) == m);
    CHECK(h.size() + k.size() - 6 == m.size());
}

TEST_CASE("clique sum round trip on random pairs")
{
    std::mt19937 rng(21);
    for (int i = 0; i < 50; ++i) {
        // two random connected sides glued along {1,2,3}
        Graph a = oracle::random_graph(rng, 6, 0.6);
        Graph b = oracle::random_graph(rng, 5, 0.6);
        std::vector<int> map(65, 0);
        for (int v = 1; v <= 3; ++v) {
            map[v] = v;
        }
        for (int v = 4; v <= 5; ++v) {
            map[v] = v + 3;
        }
        b = relabel(b, map);
        for (int u = 1; u <= 3; ++u) {
            for (int v = u + 1; v <= 3; ++v) {
                a.add_edge(u, v);
                b.add_edge(u, v);
            }
        }
        const VertexMask s = mask_of({1, 2, 3});
        if (!delete_vertices(a, s).is_connected() || !delete_vertices(b, s).is_connected()) {
            continue;
        }
        const Graph sum = clique_sum(a, b, s);
        const auto [x, y] = split_clique_sum(sum, s);
        REQUIRE(x == a);
        REQUIRE(y == b);
    }
}

TEST_CASE("clique sum and split preconditions")
{
    const Graph k4 = Graph::complete(4);
    CHECK_THROWS_AS(clique_sum(k4, Graph::cycle(4), mask_of({1, 2, 3})), GraphError);
    // not a separator
    CHECK_THROWS_AS(split_clique_sum(Graph::complete(6), mask_of({1, 2, 3, 4})), GraphError);
    // not a clique
    CHECK_THROWS_AS(split_clique_sum(Graph::cycle(6), mask_of({1, 4})), GraphError);
}

TEST_CASE("nIL clique-sum hypotheses")
{
    const auto& cat = Catalog::standard();
    const VertexMask s = mask_of({3, 4, 5, 6});
    CHECK(check_nil_clique_sum_hypotheses(cat.get("H").graph, cat.get("K").graph, s));

    // K6 is not nIL
    std::vector<int> shift(65, 0);
    for (int v = 1; v <= 4; ++v) {
        shift[v] = v;
    }
    shift[5] = 7;
    shift[6] = 8;
    const Graph k6b = relabel(Graph::complete(6), shift);
    CHECK_FALSE(check_nil_clique_sum_hypotheses(Graph::complete(6), k6b, mask_of({1, 2, 3, 4})));
    // a side that vanishes once the K4 is removed
    CHECK_FALSE(check_nil_clique_sum_hypotheses(Graph::complete(4), Graph::complete(4), mask_of({1, 2, 3, 4})));
}

TEST_CASE("cone")
{
    CHECK(cone(Graph::edgeless(1)) == Graph::complete(2));
    CHECK(oracle::isomorphic(cone(Graph::complete_multipartite({3, 3, 1})), Graph::complete_multipartite({3, 3, 1, 1})));
    CHECK(cone(Graph::complete(5)) == Graph::complete(6));
    CHECK_THROWS_AS(cone(Graph::complete(64)), GraphError);
}

TEST_CASE("G9_28 and its order-8 subgraphs")
{
    const Graph& g = Catalog::standard().get("G9_28").graph;
    CHECK_FALSE(g.has_edge(8, 9));
    CHECK(g.degree(8) == 7);
    CHECK(g.degree(9) == 7);
    std::map<std::string, std::vector<int>> classes;
    for (int v : g.vertices()) {
        classes[canonical_form(delete_vertices(g, bit_of(v))).key()].push_back(v);
    }
    CHECK(classes.size() == 2);
    const auto a = delete_vertices(g, bit_of(9));
    const auto b = delete_vertices(g, bit_of(7));
    CHECK_FALSE(oracle::isomorphic(a, b));
    CHECK(contract_edge(contract_edge(a, {4, 7}), {2, 6}).size() == 15);
    CHECK(contract_edge(contract_edge(b, {4, 9}), {2, 6}).size() == 15);
}

TEST_CASE("G10_26 is a minor of G11_35")
{
    const auto& cat = Catalog::standard();
    Graph g = contract_edge(cat.get("G11_35").graph, {2, 11});
    for (Edge e : {Edge{2, 3}, Edge{2, 5}, Edge{2, 6}, Edge{3, 5}, Edge{3, 6}, Edge{4, 10}, Edge{5, 6}}) {
        g = delete_edge(g, e);
    }
    CHECK(oracle::isomorphic(g, cat.get("G10_26").graph));
}

TEST_CASE("a damaged appendix is reported, not thrown")
{
    AppendixData d = AppendixData::published();
    d.g11_35 += "\n1 6\n";
    const Catalog bad(d);
    CHECK_FALSE(bad.problems().empty());
    CHECK(bad.has("G11_35"));
    CHECK(bad.get("G11_35").graph.size() == 36);

    AppendixData broken = AppendixData::published();
    broken.g10_30 = "1 x\n";
    const Catalog worse(broken);
    CHECK_FALSE(worse.has("G10_30"));
    CHECK_THROWS_AS((void)worse.get("G10_30"), CatalogError);
    CHECK(worse.has("G11_35"));

    AppendixData gone = AppendixData::published();
    gone.g11_35 = "1 2\n";
    const Catalog none(gone);
    CHECK_FALSE(none.has("M"));
    CHECK_FALSE(none.has("H"));
    CHECK(none.has("K7"));
}
