#include "ikcert/catalog.hpp"

#include "ikcert/canonical.hpp"
#include "ikcert/graph_io.hpp"
#include "ikcert/moves.hpp"

#include <algorithm>
#include <cstdio>

namespace ikcert {

namespace {

constexpr const char* kG11_35 = R"(# G11,35
1 2
1 3
1 4
1 5
1 8
1 9
2 3
2 4
2 8
3 4
3 5
3 6
3 7
3 8
3 10
3 11
4 5
4 6
4 8
4 9
4 10
5 6
5 7
5 9
5 10
5 11
6 7
6 8
6 9
6 10
6 11
7 11
8 9
10 11
2 11
)";

constexpr const char* kG10_30 = R"(# G10,30
1 5
1 7
1 8
1 9
1 10
2 3
2 4
2 5
2 6
2 7
2 10
3 4
3 6
3 8
3 9
3 10
4 6
4 8
4 9
5 6
5 7
5 8
5 10
6 7
6 8
6 9
7 9
7 10
8 10
9 10
)";

constexpr const char* kG10_26 = R"(# G10,26
1 2
1 3
1 4
1 5
1 8
1 9
2 4
2 7
2 8
2 10
3 4
3 7
3 8
3 10
4 5
4 6
4 8
4 9
5 7
5 9
5 10
6 7
6 8
6 9
6 10
8 9
)";

// Frozen label-sensitive checksums of every catalog entry.
const std::map<std::string, std::uint64_t>& expected_checksums()
{
    static const std::map<std::string, std::uint64_t> sums = {
#include "catalog_checksums.inc"
    };
    return sums;
}

struct AppendixSpec {
    const char* name;
    int order;
    int size;
};

constexpr AppendixSpec kAppendix[] = {{"G11_35", 11, 35}, {"G10_30", 10, 30}, {"G10_26", 10, 26}};

} // namespace

std::string to_string(Provenance p)
{
    switch (p) {
    case Provenance::appendix:
        return "appendix";
    case Provenance::construction:
        return "construction";
    case Provenance::split:
        return "split";
    }
    return "?";
}

AppendixData AppendixData::published()
{
    return {kG11_35, kG10_30, kG10_26};
}

std::uint64_t checksum(const Graph& g)
{
    std::uint64_t h = 1469598103934665603ULL;
    for (unsigned char c : write_edge_list(g)) {
        h ^= c;
        h *= 1099511628211ULL;
    }
    return h;
}

void Catalog::put(std::string name, Graph g, Provenance p)
{
    const auto& sums = expected_checksums();
    if (auto it = sums.find(name); it != sums.end() && it->second != checksum(g)) {
        problems_.push_back("checksum mismatch for " + name);
    }
    graphs_.push_back({std::move(name), std::move(g), p});
}

Catalog::Catalog(const AppendixData& data)
{
    auto attempt = [this](const std::string& name, auto&& build, Provenance p) {
        try {
            put(name, build(), p);
        } catch (const std::exception& ex) {
            unavailable_[name] = ex.what();
            problems_.push_back(name + ": " + ex.what());
        }
    };

    const std::string* texts[] = {&data.g11_35, &data.g10_30, &data.g10_26};
    for (std::size_t i = 0; i < 3; ++i) {
        const auto& spec = kAppendix[i];
        attempt(
            spec.name,
            [&] {
                auto parsed = parse_edge_list(*texts[i]);
                if (parsed.graph.order() != spec.order || parsed.graph.size() != spec.size) {
                    problems_.push_back(std::string(spec.name) + " has (" + std::to_string(parsed.graph.order()) + ", " +
                                        std::to_string(parsed.graph.size()) + "), published (" +
                                        std::to_string(spec.order) + ", " + std::to_string(spec.size) + ")");
                }
                return parsed.graph;
            },
            Provenance::appendix);
    }

    attempt("M", [&] { return delete_edge(get("G11_35").graph, Edge{2, 11}); }, Provenance::construction);
    attempt("H", [&] { return split_clique_sum(get("M").graph, mask_of({3, 4, 5, 6})).first; }, Provenance::split);
    attempt("K", [&] { return split_clique_sum(get("M").graph, mask_of({3, 4, 5, 6})).second; }, Provenance::split);
    attempt("Hprime", [&] { return delete_vertices(get("H").graph, bit_of(4)); }, Provenance::split);
    attempt("Kprime", [&] { return delete_vertices(get("K").graph, bit_of(5)); }, Provenance::split);
    attempt(
        "G9_28",
        [] {
            Graph g = cone(cone(complement(Graph::cycle(7))));
            g.remove_edge(8, 9);
            return g;
        },
        Provenance::construction);
    attempt("K5", [] { return Graph::complete(5); }, Provenance::construction);
    attempt("K6", [] { return Graph::complete(6); }, Provenance::construction);
    attempt("K7", [] { return Graph::complete(7); }, Provenance::construction);
    attempt("K331", [] { return Graph::complete_multipartite({3, 3, 1}); }, Provenance::construction);
    attempt("K3311", [] { return Graph::complete_multipartite({3, 3, 1, 1}); }, Provenance::construction);
    const auto& family = petersen_family();
    for (std::size_t i = 0; i < family.size(); ++i) {
        attempt("PETERSEN_" + std::to_string(i + 1), [&] { return family[i].graph; }, Provenance::construction);
    }
}

const Catalog& Catalog::standard()
{
    static const Catalog catalog(AppendixData::published());
    return catalog;
}

const NamedGraph& Catalog::get(std::string_view name) const
{
    for (const auto& g : graphs_) {
        if (g.name == name) {
            return g;
        }
    }
    if (auto it = unavailable_.find(std::string(name)); it != unavailable_.end()) {
        throw CatalogError("catalog graph " + std::string(name) + " unavailable: " + it->second);
    }
    throw CatalogError("unknown catalog graph '" + std::string(name) + "'");
}

bool Catalog::has(std::string_view name) const
{
    return std::any_of(graphs_.begin(), graphs_.end(), [&](const NamedGraph& g) { return g.name == name; });
}

std::vector<std::string> Catalog::names() const
{
    std::vector<std::string> out;
    for (const auto& g : graphs_) {
        out.push_back(g.name);
    }
    return out;
}

Graph clique_sum(const Graph& g1, const Graph& g2, VertexMask shared)
{
    if ((g1.vertex_mask() & g2.vertex_mask()) != shared) {
        throw GraphError("clique_sum: summands share vertices outside the clique, or miss some of it");
    }
    if (!g1.is_clique(shared) || !g2.is_clique(shared)) {
        throw GraphError("clique_sum: shared vertices do not induce a clique in both summands");
    }
    Graph out = g1;
    for (int v : g2.vertices()) {
        out.add_vertex(v);
    }
    for (const Edge& e : g2.edges()) {
        out.add_edge(e.u, e.v);
    }
    return out;
}

std::pair<Graph, Graph> split_clique_sum(const Graph& g, VertexMask shared)
{
    if (!g.is_clique(shared)) {
        throw GraphError("split_clique_sum: separator is not a clique");
    }
    const auto comps = delete_vertices(g, shared).components();
    if (comps.size() != 2) {
        throw GraphError("split_clique_sum: removing the clique leaves " + std::to_string(comps.size()) +
                         " components, expected 2");
    }
    return {induced_subgraph(g, comps[0] | shared), induced_subgraph(g, comps[1] | shared)};
}

Graph cone(const Graph& g)
{
    const int apex = g.least_unused_label();
    if (apex > Graph::kMaxLabel) {
        throw GraphError("cone: would exceed " + std::to_string(Graph::kMaxLabel) + " vertices");
    }
    Graph out = g;
    out.add_vertex(apex);
    for (int v : g.vertices()) {
        out.add_edge(apex, v);
    }
    return out;
}

bool check_nil_clique_sum_hypotheses(const Graph& g1, const Graph& g2, VertexMask shared, const SearchOptions& opts)
{
    clique_sum(g1, g2, shared); // precondition errors surface here
    if (std::popcount(shared) != 4) {
        return false;
    }
    const Graph r1 = delete_vertices(g1, shared);
    const Graph r2 = delete_vertices(g2, shared);
    if (r1.order() == 0 || r2.order() == 0 || !r1.is_connected() || !r2.is_connected()) {
        return false;
    }
    return certify_nil(g1, opts).nil() && certify_nil(g2, opts).nil();
}

} // namespace ikcert
