#pragma once

#include <array>
#include <bit>
#include <compare>
#include <cstdint>
#include <initializer_list>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

namespace ikcert {

/// Thrown for malformed graph input or an operation whose precondition fails.
class GraphError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

using VertexMask = std::uint64_t;

/// Undirected edge with normalized endpoints (u < v).
struct Edge {
    int u = 0;
    int v = 0;

    Edge() = default;
    Edge(int a, int b) : u(a < b ? a : b), v(a < b ? b : a) {}

    friend auto operator<=>(const Edge&, const Edge&) = default;
};

std::string to_string(const Edge& e);

/// Simple undirected graph on positive integer labels 1..64.
///
/// Vertex sets and neighborhoods are stored as 64-bit masks where bit
/// (label - 1) stands for the vertex with that label. Labels survive every
/// operation; nothing renumbers vertices implicitly.
class Graph {
public:
    static constexpr int kMaxLabel = 64;

    Graph() = default;

    static Graph from_edges(std::span<const Edge> edges, std::span<const int> extra_vertices = {});
    static Graph from_edges(std::initializer_list<Edge> edges);
    /// Vertices 1..n and no edges.
    static Graph edgeless(int n);
    static Graph complete(int n);
    static Graph cycle(int n);
    /// Complete multipartite graph; parts are labelled consecutively from 1.
    static Graph complete_multipartite(std::initializer_list<int> part_sizes);

    void add_vertex(int v);
    /// Adds u-v, creating missing endpoints. Returns false if the edge existed.
    bool add_edge(int u, int v);
    bool remove_edge(int u, int v);
    void remove_vertex(int v);

    [[nodiscard]] bool has_vertex(int v) const noexcept {
        return v >= 1 && v <= kMaxLabel && ((vertices_ >> (v - 1)) & 1U);
    }
    [[nodiscard]] bool has_edge(int u, int v) const noexcept {
        return has_vertex(u) && has_vertex(v) && ((adj_[u - 1] >> (v - 1)) & 1U);
    }

    [[nodiscard]] int order() const noexcept { return std::popcount(vertices_); }
    [[nodiscard]] int size() const noexcept;
    [[nodiscard]] int degree(int v) const;

    [[nodiscard]] VertexMask vertex_mask() const noexcept { return vertices_; }
    [[nodiscard]] VertexMask neighbor_mask(int v) const;

    /// Sorted vertex labels.
    [[nodiscard]] std::vector<int> vertices() const;
    [[nodiscard]] std::vector<int> neighbors(int v) const;
    /// Sorted edges, each with u < v.
    [[nodiscard]] std::vector<Edge> edges() const;

    [[nodiscard]] int max_label() const noexcept;
    /// Smallest positive label not in use; 65 when all are taken.
    [[nodiscard]] int least_unused_label() const noexcept;

    [[nodiscard]] bool is_connected() const;
    /// Connected components as vertex masks, ordered by least member.
    [[nodiscard]] std::vector<VertexMask> components() const;
    [[nodiscard]] bool is_clique(VertexMask set) const;

    friend bool operator==(const Graph& a, const Graph& b) noexcept {
        return a.vertices_ == b.vertices_ && a.adj_ == b.adj_;
    }

private:
    static void check_label(int v);

    VertexMask vertices_ = 0;
    std::array<VertexMask, kMaxLabel> adj_{};
};

VertexMask mask_of(std::span<const int> labels);
VertexMask mask_of(std::initializer_list<int> labels);
std::vector<int> labels_of(VertexMask mask);

inline int lowest_label(VertexMask m) { return std::countr_zero(m) + 1; }
inline VertexMask bit_of(int label) { return VertexMask{1} << (label - 1); }

// Minor operations. All preserve the labels of untouched vertices.

Graph delete_edge(const Graph& g, Edge e);
/// Merges the endpoints into the smaller label; parallel edges collapse.
Graph contract_edge(const Graph& g, Edge e);
Graph delete_vertices(const Graph& g, VertexMask set);
Graph induced_subgraph(const Graph& g, VertexMask set);
Graph induced_subgraph(const Graph& g, std::span<const int> set);
Graph add_edge(const Graph& g, Edge e);

/// Applies a label map (old label -> new label, indexed by old label).
Graph relabel(const Graph& g, std::span<const int> map);

/// Complement on the same vertex set.
Graph complement(const Graph& g);

} // namespace ikcert
