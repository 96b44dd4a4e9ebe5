#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "ikcert/canonical.hpp"
#include "ikcert/catalog.hpp"
#include "ikcert/minor.hpp"
#include "ikcert/moves.hpp"
#include "oracles.hpp"

using namespace ikcert;

namespace {

std::vector<Graph> small_patterns()
{
    return {
        Graph::complete(2),
        Graph::complete(3),
        Graph::complete(4),
        Graph::cycle(4),
        Graph::cycle(5),
        Graph::complete_multipartite({1, 3}),
        Graph::complete_multipartite({2, 3}),
        Graph::from_edges({{1, 2}, {2, 3}, {3, 4}}),
        Graph::from_edges({{1, 2}, {3, 4}}),
        delete_edge(Graph::complete(4), {1, 2}),
        Graph::complete(5),
    };
}

} // namespace

TEST_CASE("minor search agrees with brute force on 200 random hosts")
{
    std::mt19937 rng(31337);
    const auto patterns = small_patterns();
    std::uniform_int_distribution<int> order(3, 7);
    std::uniform_real_distribution<double> density(0.2, 0.9);
    int yes = 0;
    int no = 0;
    for (int i = 0; i < 200; ++i) {
        const Graph host = oracle::random_graph(rng, order(rng), density(rng));
        for (std::size_t j = 0; j < 3; ++j) {
            Graph pattern = patterns[(i * 3 + j) % patterns.size()];
            if (i % 7 == 0 && j == 0) {
                pattern = oracle::random_graph(rng, 4, 0.6);
            }
            if (pattern.order() > 6) {
                continue;
            }
            const bool expected = oracle::has_minor(host, pattern);
            const auto got = has_minor(host, pattern);
            REQUIRE(got.has_value() == expected);
            if (got) {
                REQUIRE(validate_minor_embedding(host, pattern, *got));
                ++yes;
            } else {
                ++no;
            }
        }
    }
    CHECK(yes > 100);
    CHECK(no > 100);
}

TEST_CASE("minor examples")
{
    const auto& cat = Catalog::standard();
    CHECK_FALSE(has_minor(Graph::complete(5), Graph::complete(6)));
    CHECK_FALSE(has_minor(cat.get("M").graph, Graph::complete(6)));

    const Graph g9 = delete_vertices(cat.get("G9_28").graph, bit_of(9));
    const auto emb = has_minor(g9, Graph::complete(6));
    REQUIRE(emb);
    CHECK(validate_minor_embedding(g9, Graph::complete(6), *emb));
    std::size_t merged = 0;
    for (const auto& [p, set] : emb->branch_sets) {
        merged += set.size() - 1;
    }
    CHECK(merged == 2); // 8 host vertices onto 6: two contractions

    CHECK(has_minor(Graph{}, Graph{}));
    CHECK(has_minor(Graph::complete(3), Graph::edgeless(2)));
}

TEST_CASE("validate_minor_embedding catches each kind of defect")
{
    const Graph host = Graph::cycle(5);
    const Graph k3 = Graph::complete(3);
    CHECK(validate_minor_embedding(host, k3, {{{1, {1, 2}}, {2, {3, 4}}, {3, {5}}}}));
    CHECK_FALSE(validate_minor_embedding(host, k3, {{{1, {1, 2}}, {2, {2, 3}}, {3, {5}}}})); // overlap
    CHECK_FALSE(validate_minor_embedding(host, k3, {{{1, {1, 3}}, {2, {2, 4}}, {3, {5}}}})); // disconnected
    CHECK_FALSE(validate_minor_embedding(host, k3, {{{1, {1}}, {2, {3}}, {3, {5}}}}));       // missing edge
    CHECK_FALSE(validate_minor_embedding(host, k3, {{{1, {1, 2}}, {2, {3, 4}}}}));           // missing vertex
    CHECK_FALSE(validate_minor_embedding(host, k3, {{{1, {1, 2}}, {2, {3, 4}}, {3, {}}}}));  // empty
    CHECK_FALSE(validate_minor_embedding(host, k3, {{{1, {1, 2}}, {2, {3, 4}}, {3, {9}}}})); // foreign vertex
}

TEST_CASE("the Petersen family is generated correctly")
{
    const auto& fam = petersen_family();
    REQUIRE(fam.size() == 7);
    std::vector<std::string> names;
    for (const auto& p : fam) {
        names.push_back(p.name);
        CHECK(p.graph.size() == 15);
    }
    std::sort(names.begin(), names.end());
    CHECK(names == std::vector<std::string>{"G7", "G8", "G9", "K3,3,1", "K4,4-e", "K6", "Petersen"});

    auto find = [&](const std::string& n) {
        return std::find_if(fam.begin(), fam.end(), [&](const FamilyPattern& p) { return p.name == n; })->graph;
    };
    CHECK(is_isomorphic(find("K6"), Graph::complete(6)).isomorphic);
    CHECK(is_isomorphic(find("K3,3,1"), Graph::complete_multipartite({3, 3, 1})).isomorphic);
    CHECK(is_isomorphic(find("K4,4-e"), oracle::k44_minus_edge()).isomorphic);
    CHECK(is_isomorphic(find("Petersen"), oracle::petersen()).isomorphic);
    CHECK(find("G7").order() == 7);
    CHECK(find("G8").order() == 8);
    CHECK(find("G9").order() == 9);
}

TEST_CASE("family members are pairwise minor-incomparable")
{
    const auto& fam = petersen_family();
    for (const auto& a : fam) {
        for (const auto& b : fam) {
            if (&a != &b && a.graph.order() <= b.graph.order()) {
                CHECK_FALSE(has_minor(b.graph, a.graph));
            }
        }
    }
}

TEST_CASE("nIL certificates")
{
    const auto& cat = Catalog::standard();
    const auto m = certify_nil(cat.get("M").graph);
    CHECK(m.nil());
    CHECK(validate_nil_certificate(cat.get("M").graph, m));

    const auto g = certify_nil(cat.get("G11_35").graph);
    CHECK_FALSE(g.nil());
    CHECK(validate_nil_certificate(cat.get("G11_35").graph, g));

    CHECK(certify_nil(Graph::complete(5)).nil());
    CHECK_FALSE(certify_nil(Graph::complete(6)).nil());

    auto tampered = g;
    tampered.verdicts.pop_back();
    CHECK_FALSE(validate_nil_certificate(cat.get("G11_35").graph, tampered));
}

TEST_CASE("verdicts are deterministic")
{
    const Graph& g = Catalog::standard().get("G10_26").graph;
    const auto a = certify_nil(g);
    const auto b = certify_nil(g);
    REQUIRE(a.verdicts.size() == b.verdicts.size());
    for (std::size_t i = 0; i < a.verdicts.size(); ++i) {
        CHECK(a.verdicts[i].pattern == b.verdicts[i].pattern);
        CHECK(a.verdicts[i].embedding == b.verdicts[i].embedding);
    }
}

TEST_CASE("budget exhaustion is an error, not a verdict")
{
    const Graph& m = Catalog::standard().get("M").graph;
    SearchOptions tiny;
    tiny.node_budget = 5;
    CHECK_THROWS_AS(has_minor(m, Graph::complete(6), tiny), SearchBudgetExceeded);
    CHECK_THROWS_AS(certify_nil(m, tiny), SearchBudgetExceeded);
}
