#pragma once

#include "ikcert/graph.hpp"

#include <map>
#include <optional>
#include <string>
#include <vector>

namespace ikcert {

/// Canonical labelling of a graph: the edge list obtained by renaming the
/// vertices to 1..n through `relabeling`. Isomorphic graphs (respecting any
/// initial colouring) get identical `edges`.
struct CanonicalForm {
    int order = 0;
    /// Sizes of the initial colour classes in canonical order; empty when uncoloured.
    std::vector<int> color_sizes;
    std::vector<Edge> edges;
    /// input label -> canonical label
    std::map<int, int> relabeling;

    /// Compact identity key (graph6 of the canonical graph, prefixed by colour sizes if any).
    [[nodiscard]] std::string key() const;
    [[nodiscard]] Graph graph() const;

    /// Equality of the canonical graphs; the relabeling is a certificate, not identity.
    friend bool operator==(const CanonicalForm& a, const CanonicalForm& b)
    {
        return a.order == b.order && a.color_sizes == b.color_sizes && a.edges == b.edges;
    }
};

/// Vertex colouring used to restrict isomorphisms; colour values are ordered
/// and must be preserved. Vertices absent from the map share colour 0.
using Coloring = std::map<int, int>;

CanonicalForm canonical_form(const Graph& g, const Coloring& colors = {});

/// Checks that applying the certificate to g reproduces the canonical edges.
bool validate_canonical_form(const Graph& g, const CanonicalForm& form);

/// Vertex bijection as a map from source label to target label.
using VertexMap = std::map<int, int>;

struct IsomorphismResult {
    bool isomorphic = false;
    std::optional<VertexMap> witness;
};

IsomorphismResult is_isomorphic(const Graph& g1, const Graph& g2);

/// True iff `map` is a bijection V(g1) -> V(g2) carrying edges onto edges.
bool validate_isomorphism(const Graph& g1, const Graph& g2, const VertexMap& map);

struct OrbitPartition {
    /// Each orbit sorted; orbits ordered by least member.
    std::vector<std::vector<int>> vertex_orbits;
    std::vector<std::vector<Edge>> edge_orbits;
    /// Automorphisms discovered while computing the orbits (all validated).
    std::vector<VertexMap> generators;
};

/// Exact vertex and edge orbits under the full automorphism group.
OrbitPartition orbits(const Graph& g);

} // namespace ikcert
