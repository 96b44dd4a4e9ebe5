#pragma once

#include "ikcert/graph.hpp"
#include "ikcert/minor.hpp"

#include <cstdint>
#include <map>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace ikcert {

class CatalogError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

enum class Provenance {
    appendix,     // published edge list
    construction, // built by a defining procedure
    split,        // derived by splitting a clique sum
};

std::string to_string(Provenance p);

struct NamedGraph {
    std::string name;
    Graph graph;
    Provenance provenance = Provenance::construction;
};

/// The three published edge lists, as edge-list text.
struct AppendixData {
    std::string g11_35;
    std::string g10_30;
    std::string g10_26;

    static AppendixData published();
};

/// FNV-1a over the edge-list serialization; sensitive to labels.
std::uint64_t checksum(const Graph& g);

/// Named graphs rebuilt from the appendix data at construction. Derivations
/// that fail, and checksum mismatches, are recorded rather than thrown so a
/// damaged catalog can still be reported on.
class Catalog {
public:
    explicit Catalog(const AppendixData& data);

    static const Catalog& standard();

    /// Throws CatalogError for unknown or unavailable names.
    [[nodiscard]] const NamedGraph& get(std::string_view name) const;
    [[nodiscard]] bool has(std::string_view name) const;
    /// Every known name, in catalog order.
    [[nodiscard]] std::vector<std::string> names() const;
    [[nodiscard]] const std::vector<std::string>& problems() const { return problems_; }

private:
    void put(std::string name, Graph g, Provenance p);

    std::vector<NamedGraph> graphs_;
    std::map<std::string, std::string> unavailable_;
    std::vector<std::string> problems_;
};

/// Union of two graphs glued along `shared`, which must be exactly their
/// common vertex set and a clique in both.
Graph clique_sum(const Graph& g1, const Graph& g2, VertexMask shared);

/// Splits g along a clique separator whose removal leaves exactly two
/// components. The side containing the smaller least vertex comes first.
std::pair<Graph, Graph> split_clique_sum(const Graph& g, VertexMask shared);

/// Adds a vertex (least unused label) adjacent to every vertex.
Graph cone(const Graph& g);

/// The gluing hypotheses for a nIL clique sum over K4: the shared set is a
/// K4 in both summands, both summands are nIL and stay connected once the
/// shared vertices are removed.
bool check_nil_clique_sum_hypotheses(const Graph& g1, const Graph& g2, VertexMask shared,
                                     const SearchOptions& opts = {});

} // namespace ikcert
