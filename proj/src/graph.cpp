#include "ikcert/graph.hpp"

#include <algorithm>

namespace ikcert {

std::string to_string(const Edge& e)
{
    return "(" + std::to_string(e.u) + "," + std::to_string(e.v) + ")";
}

void Graph::check_label(int v)
{
    if (v < 1 || v > kMaxLabel) {
        throw GraphError("vertex label " + std::to_string(v) + " outside 1.." + std::to_string(kMaxLabel));
    }
}

Graph Graph::from_edges(std::span<const Edge> edges, std::span<const int> extra_vertices)
{
    Graph g;
    for (int v : extra_vertices) {
        g.add_vertex(v);
    }
    for (const Edge& e : edges) {
        g.add_edge(e.u, e.v);
    }
    return g;
}

Graph Graph::from_edges(std::initializer_list<Edge> edges)
{
    return from_edges(std::span<const Edge>(edges.begin(), edges.size()));
}

Graph Graph::edgeless(int n)
{
    Graph g;
    for (int v = 1; v <= n; ++v) {
        g.add_vertex(v);
    }
    return g;
}

Graph Graph::complete(int n)
{
    Graph g = edgeless(n);
    for (int u = 1; u <= n; ++u) {
        for (int v = u + 1; v <= n; ++v) {
            g.add_edge(u, v);
        }
    }
    return g;
}

Graph Graph::cycle(int n)
{
    if (n < 3) {
        throw GraphError("cycle needs at least 3 vertices");
    }
    Graph g = edgeless(n);
    for (int v = 1; v <= n; ++v) {
        g.add_edge(v, v % n + 1);
    }
    return g;
}

Graph Graph::complete_multipartite(std::initializer_list<int> part_sizes)
{
    Graph g;
    std::vector<std::pair<int, int>> parts;
    int next = 1;
    for (int s : part_sizes) {
        parts.emplace_back(next, next + s);
        for (int v = next; v < next + s; ++v) {
            g.add_vertex(v);
        }
        next += s;
    }
    for (std::size_t i = 0; i < parts.size(); ++i) {
        for (std::size_t j = i + 1; j < parts.size(); ++j) {
            for (int u = parts[i].first; u < parts[i].second; ++u) {
                for (int v = parts[j].first; v < parts[j].second; ++v) {
                    g.add_edge(u, v);
                }
            }
        }
    }
    return g;
}

void Graph::add_vertex(int v)
{
    check_label(v);
    vertices_ |= bit_of(v);
}

bool Graph::add_edge(int u, int v)
{
    check_label(u);
    check_label(v);
    if (u == v) {
        throw GraphError("self-loop at vertex " + std::to_string(u));
    }
    add_vertex(u);
    add_vertex(v);
    if (has_edge(u, v)) {
        return false;
    }
    adj_[u - 1] |= bit_of(v);
    adj_[v - 1] |= bit_of(u);
    return true;
}

bool Graph::remove_edge(int u, int v)
{
    if (!has_edge(u, v)) {
        return false;
    }
    adj_[u - 1] &= ~bit_of(v);
    adj_[v - 1] &= ~bit_of(u);
    return true;
}

void Graph::remove_vertex(int v)
{
    if (!has_vertex(v)) {
        throw GraphError("no vertex " + std::to_string(v));
    }
    for (VertexMask m = adj_[v - 1]; m != 0; m &= m - 1) {
        adj_[std::countr_zero(m)] &= ~bit_of(v);
    }
    adj_[v - 1] = 0;
    vertices_ &= ~bit_of(v);
}

int Graph::size() const noexcept
{
    int twice = 0;
    for (VertexMask m = vertices_; m != 0; m &= m - 1) {
        twice += std::popcount(adj_[std::countr_zero(m)]);
    }
    return twice / 2;
}

int Graph::degree(int v) const
{
    return std::popcount(neighbor_mask(v));
}

VertexMask Graph::neighbor_mask(int v) const
{
    if (!has_vertex(v)) {
        throw GraphError("no vertex " + std::to_string(v));
    }
    return adj_[v - 1];
}

std::vector<int> Graph::vertices() const
{
    return labels_of(vertices_);
}

std::vector<int> Graph::neighbors(int v) const
{
    return labels_of(neighbor_mask(v));
}

std::vector<Edge> Graph::edges() const
{
    std::vector<Edge> out;
    for (VertexMask m = vertices_; m != 0; m &= m - 1) {
        const int u = std::countr_zero(m) + 1;
        // only higher neighbors, so each edge appears once in sorted order
        VertexMask higher = adj_[u - 1] & ~((bit_of(u) << 1) - 1);
        for (; higher != 0; higher &= higher - 1) {
            out.emplace_back(u, std::countr_zero(higher) + 1);
        }
    }
    return out;
}

int Graph::max_label() const noexcept
{
    return vertices_ == 0 ? 0 : kMaxLabel - std::countl_zero(vertices_);
}

int Graph::least_unused_label() const noexcept
{
    return std::countr_one(vertices_) + 1;
}

std::vector<VertexMask> Graph::components() const
{
    std::vector<VertexMask> out;
    VertexMask left = vertices_;
    while (left != 0) {
        VertexMask comp = left & (~left + 1);
        VertexMask frontier = comp;
        while (frontier != 0) {
            VertexMask next = 0;
            for (VertexMask m = frontier; m != 0; m &= m - 1) {
                next |= adj_[std::countr_zero(m)];
            }
            frontier = next & ~comp;
            comp |= next;
        }
        out.push_back(comp);
        left &= ~comp;
    }
    return out;
}

bool Graph::is_connected() const
{
    return components().size() <= 1;
}

bool Graph::is_clique(VertexMask set) const
{
    if ((set & ~vertices_) != 0) {
        return false;
    }
    for (VertexMask m = set; m != 0; m &= m - 1) {
        const int i = std::countr_zero(m);
        const VertexMask closed = adj_[i] | (VertexMask{1} << i);
        if ((closed & set) != set) {
            return false;
        }
    }
    return true;
}

VertexMask mask_of(std::span<const int> labels)
{
    VertexMask m = 0;
    for (int v : labels) {
        if (v < 1 || v > Graph::kMaxLabel) {
            throw GraphError("vertex label " + std::to_string(v) + " out of range");
        }
        m |= bit_of(v);
    }
    return m;
}

VertexMask mask_of(std::initializer_list<int> labels)
{
    return mask_of(std::span<const int>(labels.begin(), labels.size()));
}

std::vector<int> labels_of(VertexMask mask)
{
    std::vector<int> out;
    out.reserve(std::popcount(mask));
    for (; mask != 0; mask &= mask - 1) {
        out.push_back(std::countr_zero(mask) + 1);
    }
    return out;
}

Graph delete_edge(const Graph& g, Edge e)
{
    if (!g.has_edge(e.u, e.v)) {
        throw GraphError("edge " + to_string(e) + " not in graph");
    }
    Graph out = g;
    out.remove_edge(e.u, e.v);
    return out;
}

Graph contract_edge(const Graph& g, Edge e)
{
    if (!g.has_edge(e.u, e.v)) {
        throw GraphError("edge " + to_string(e) + " not in graph");
    }
    const int keep = e.u;
    const int gone = e.v;
    Graph out = g;
    for (int w : g.neighbors(gone)) {
        if (w != keep) {
            out.add_edge(keep, w);
        }
    }
    out.remove_vertex(gone);
    return out;
}

Graph delete_vertices(const Graph& g, VertexMask set)
{
    Graph out = g;
    for (VertexMask m = set & g.vertex_mask(); m != 0; m &= m - 1) {
        out.remove_vertex(std::countr_zero(m) + 1);
    }
    return out;
}

Graph induced_subgraph(const Graph& g, VertexMask set)
{
    if ((set & ~g.vertex_mask()) != 0) {
        throw GraphError("induced_subgraph: vertex set not contained in graph");
    }
    return delete_vertices(g, g.vertex_mask() & ~set);
}

Graph induced_subgraph(const Graph& g, std::span<const int> set)
{
    return induced_subgraph(g, mask_of(set));
}

Graph add_edge(const Graph& g, Edge e)
{
    Graph out = g;
    out.add_edge(e.u, e.v);
    return out;
}

Graph relabel(const Graph& g, std::span<const int> map)
{
    Graph out;
    for (int v : g.vertices()) {
        if (static_cast<std::size_t>(v) >= map.size()) {
            throw GraphError("relabel: map does not cover vertex " + std::to_string(v));
        }
        out.add_vertex(map[v]);
    }
    if (out.order() != g.order()) {
        throw GraphError("relabel: map is not injective");
    }
    for (const Edge& e : g.edges()) {
        out.add_edge(map[e.u], map[e.v]);
    }
    return out;
}

Graph complement(const Graph& g)
{
    Graph out;
    const auto vs = g.vertices();
    for (int v : vs) {
        out.add_vertex(v);
    }
    for (std::size_t i = 0; i < vs.size(); ++i) {
        for (std::size_t j = i + 1; j < vs.size(); ++j) {
            if (!g.has_edge(vs[i], vs[j])) {
                out.add_edge(vs[i], vs[j]);
            }
        }
    }
    return out;
}

} // namespace ikcert
