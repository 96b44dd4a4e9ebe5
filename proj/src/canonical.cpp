#include "ikcert/canonical.hpp"

#include "ikcert/graph_io.hpp"

#include <algorithm>
#include <numeric>

namespace ikcert {

namespace {

// Dense view: vertex i stands for the i-th smallest label.
struct Dense {
    std::vector<int> labels;
    std::vector<VertexMask> adj;
};

Dense densify(const Graph& g)
{
    Dense d;
    d.labels = g.vertices();
    std::vector<int> index(Graph::kMaxLabel + 1, -1);
    for (std::size_t i = 0; i < d.labels.size(); ++i) {
        index[d.labels[i]] = static_cast<int>(i);
    }
    d.adj.resize(d.labels.size());
    for (std::size_t i = 0; i < d.labels.size(); ++i) {
        for (int w : g.neighbors(d.labels[i])) {
            d.adj[i] |= VertexMask{1} << index[w];
        }
    }
    return d;
}

int rank_colors(std::vector<int>& color)
{
    std::vector<int> distinct = color;
    std::sort(distinct.begin(), distinct.end());
    distinct.erase(std::unique(distinct.begin(), distinct.end()), distinct.end());
    for (int& c : color) {
        c = static_cast<int>(std::lower_bound(distinct.begin(), distinct.end(), c) - distinct.begin());
    }
    return static_cast<int>(distinct.size());
}

// Colour refinement to the coarsest equitable partition finer than `color`.
// New colours are ranks of (old colour, neighbour colour counts), which keeps
// the procedure independent of the input labelling.
void refine(const std::vector<VertexMask>& adj, std::vector<int>& color)
{
    const int n = static_cast<int>(color.size());
    int k = rank_colors(color);
    std::vector<int> sig;
    std::vector<int> order(n);
    while (k < n) {
        const int width = k + 1;
        sig.assign(static_cast<std::size_t>(n) * width, 0);
        for (int v = 0; v < n; ++v) {
            int* row = &sig[static_cast<std::size_t>(v) * width];
            row[0] = color[v];
            for (VertexMask m = adj[v]; m != 0; m &= m - 1) {
                ++row[1 + color[std::countr_zero(m)]];
            }
        }
        std::iota(order.begin(), order.end(), 0);
        auto less = [&](int a, int b) {
            return std::lexicographical_compare(sig.begin() + a * width, sig.begin() + (a + 1) * width,
                                                sig.begin() + b * width, sig.begin() + (b + 1) * width);
        };
        std::sort(order.begin(), order.end(), less);
        int next = 0;
        for (int i = 0; i < n; ++i) {
            if (i > 0 && less(order[i - 1], order[i])) {
                ++next;
            }
            color[order[i]] = next;
        }
        const int new_k = next + 1;
        if (new_k == k) {
            break;
        }
        k = new_k;
    }
}

std::vector<int> individualize(const std::vector<int>& color, int v)
{
    std::vector<int> out(color.size());
    for (std::size_t u = 0; u < color.size(); ++u) {
        out[u] = 2 * color[u] + (static_cast<int>(u) == v ? 0 : 1);
    }
    return out;
}

struct Leaf {
    std::vector<int> position; // vertex -> position
    std::vector<VertexMask> code;
};

class CanonicalSearch {
public:
    explicit CanonicalSearch(const std::vector<VertexMask>& adj) : adj_(adj), n_(static_cast<int>(adj.size())) {}

    void run(std::vector<int> color)
    {
        refine(adj_, color);
        std::vector<int> prefix;
        descend(color, prefix);
    }

    const Leaf& best() const { return best_; }
    const std::vector<std::vector<int>>& automorphisms() const { return automorphisms_; }

private:
    void descend(const std::vector<int>& color, std::vector<int>& prefix)
    {
        std::vector<int> count(n_, 0);
        for (int c : color) {
            ++count[c];
        }
        int target = -1;
        for (int c = 0; c < n_; ++c) {
            if (count[c] > 1) {
                target = c;
                break;
            }
        }
        if (target < 0) {
            leaf(color);
            return;
        }
        std::vector<int> tried;
        for (int w = 0; w < n_; ++w) {
            if (color[w] != target) {
                continue;
            }
            if (!tried.empty() && same_orbit_as_tried(w, tried, prefix)) {
                continue;
            }
            tried.push_back(w);
            auto child = individualize(color, w);
            refine(adj_, child);
            prefix.push_back(w);
            descend(child, prefix);
            prefix.pop_back();
        }
    }

    bool same_orbit_as_tried(int w, const std::vector<int>& tried, const std::vector<int>& prefix) const
    {
        std::vector<int> parent(n_);
        std::iota(parent.begin(), parent.end(), 0);
        auto find = [&](int x) {
            while (parent[x] != x) {
                parent[x] = parent[parent[x]];
                x = parent[x];
            }
            return x;
        };
        bool any = false;
        for (const auto& gamma : automorphisms_) {
            bool fixes = true;
            for (int p : prefix) {
                if (gamma[p] != p) {
                    fixes = false;
                    break;
                }
            }
            if (!fixes) {
                continue;
            }
            any = true;
            for (int x = 0; x < n_; ++x) {
                parent[find(x)] = find(gamma[x]);
            }
        }
        if (!any) {
            return false;
        }
        const int root = find(w);
        return std::any_of(tried.begin(), tried.end(), [&](int t) { return find(t) == root; });
    }

    void leaf(const std::vector<int>& color)
    {
        Leaf lf;
        lf.position = color;
        lf.code.assign(n_, 0);
        for (int v = 0; v < n_; ++v) {
            VertexMask row = 0;
            for (VertexMask m = adj_[v]; m != 0; m &= m - 1) {
                row |= VertexMask{1} << color[std::countr_zero(m)];
            }
            lf.code[color[v]] = row;
        }
        if (!have_leaf_) {
            first_ = lf;
            best_ = std::move(lf);
            have_leaf_ = true;
            return;
        }
        if (lf.code == first_.code) {
            record_automorphism(lf, first_);
        } else if (lf.code == best_.code) {
            record_automorphism(lf, best_);
        } else if (lf.code < best_.code) {
            best_ = std::move(lf);
        }
    }

    void record_automorphism(const Leaf& a, const Leaf& b)
    {
        std::vector<int> at(n_);
        for (int v = 0; v < n_; ++v) {
            at[b.position[v]] = v;
        }
        std::vector<int> gamma(n_);
        for (int v = 0; v < n_; ++v) {
            gamma[v] = at[a.position[v]];
        }
        automorphisms_.push_back(std::move(gamma));
    }

    const std::vector<VertexMask>& adj_;
    int n_;
    bool have_leaf_ = false;
    Leaf first_;
    Leaf best_;
    std::vector<std::vector<int>> automorphisms_;
};

} // namespace

std::string CanonicalForm::key() const
{
    std::string k = write_graph6(graph());
    if (!color_sizes.empty()) {
        k += "|";
        for (std::size_t i = 0; i < color_sizes.size(); ++i) {
            k += (i ? "," : "") + std::to_string(color_sizes[i]);
        }
    }
    return k;
}

Graph CanonicalForm::graph() const
{
    return Graph::from_edges(edges, [this] {
        std::vector<int> vs(order);
        std::iota(vs.begin(), vs.end(), 1);
        return vs;
    }());
}

CanonicalForm canonical_form(const Graph& g, const Coloring& colors)
{
    const Dense d = densify(g);
    const int n = static_cast<int>(d.labels.size());

    CanonicalForm out;
    out.order = n;
    if (n == 0) {
        return out;
    }

    std::vector<int> color(n, 0);
    if (!colors.empty()) {
        for (int i = 0; i < n; ++i) {
            auto it = colors.find(d.labels[i]);
            color[i] = it == colors.end() ? 0 : it->second;
        }
        const int k = rank_colors(color);
        out.color_sizes.assign(k, 0);
        for (int c : color) {
            ++out.color_sizes[c];
        }
    }

    CanonicalSearch search(d.adj);
    search.run(color);
    const Leaf& best = search.best();

    for (int i = 0; i < n; ++i) {
        out.relabeling[d.labels[i]] = best.position[i] + 1;
    }
    for (const Edge& e : g.edges()) {
        out.edges.emplace_back(out.relabeling[e.u], out.relabeling[e.v]);
    }
    std::sort(out.edges.begin(), out.edges.end());
    return out;
}

bool validate_canonical_form(const Graph& g, const CanonicalForm& form)
{
    if (form.order != g.order() || static_cast<int>(form.relabeling.size()) != g.order()) {
        return false;
    }
    std::vector<int> map(Graph::kMaxLabel + 1, 0);
    std::vector<bool> used(form.order + 1, false);
    for (const auto& [from, to] : form.relabeling) {
        if (!g.has_vertex(from) || to < 1 || to > form.order || used[to]) {
            return false;
        }
        used[to] = true;
        map[from] = to;
    }
    return relabel(g, map).edges() == form.edges;
}

IsomorphismResult is_isomorphic(const Graph& g1, const Graph& g2)
{
    IsomorphismResult out;
    if (g1.order() != g2.order() || g1.size() != g2.size()) {
        return out;
    }
    const auto c1 = canonical_form(g1);
    const auto c2 = canonical_form(g2);
    if (!(c1 == c2)) {
        return out;
    }
    std::map<int, int> inverse2;
    for (const auto& [label, canon] : c2.relabeling) {
        inverse2[canon] = label;
    }
    VertexMap witness;
    for (const auto& [label, canon] : c1.relabeling) {
        witness[label] = inverse2.at(canon);
    }
    out.isomorphic = true;
    out.witness = std::move(witness);
    return out;
}

bool validate_isomorphism(const Graph& g1, const Graph& g2, const VertexMap& map)
{
    if (g1.order() != g2.order() || g1.size() != g2.size() || static_cast<int>(map.size()) != g1.order()) {
        return false;
    }
    VertexMask image = 0;
    for (const auto& [from, to] : map) {
        if (!g1.has_vertex(from) || !g2.has_vertex(to) || (image & bit_of(to))) {
            return false;
        }
        image |= bit_of(to);
    }
    for (const Edge& e : g1.edges()) {
        if (!g2.has_edge(map.at(e.u), map.at(e.v))) {
            return false;
        }
    }
    return true;
}

namespace {

// Automorphism sending the vertices coloured -1 in `from` to those in `to`,
// built from two canonical labellings of the same graph.
VertexMap compose(const CanonicalForm& from, const CanonicalForm& to)
{
    std::map<int, int> inverse;
    for (const auto& [label, canon] : to.relabeling) {
        inverse[canon] = label;
    }
    VertexMap out;
    for (const auto& [label, canon] : from.relabeling) {
        out[label] = inverse.at(canon);
    }
    return out;
}

} // namespace

OrbitPartition orbits(const Graph& g)
{
    OrbitPartition out;

    std::map<std::string, std::size_t> vertex_class;
    std::vector<CanonicalForm> vertex_rep;
    for (int v : g.vertices()) {
        auto form = canonical_form(g, Coloring{{v, -1}});
        auto [it, inserted] = vertex_class.emplace(form.key(), out.vertex_orbits.size());
        if (inserted) {
            out.vertex_orbits.push_back({v});
            vertex_rep.push_back(std::move(form));
        } else {
            out.vertex_orbits[it->second].push_back(v);
            out.generators.push_back(compose(vertex_rep[it->second], form));
        }
    }

    std::map<std::string, std::size_t> edge_class;
    std::vector<CanonicalForm> edge_rep;
    for (const Edge& e : g.edges()) {
        auto form = canonical_form(g, Coloring{{e.u, -1}, {e.v, -1}});
        auto [it, inserted] = edge_class.emplace(form.key(), out.edge_orbits.size());
        if (inserted) {
            out.edge_orbits.push_back({e});
            edge_rep.push_back(std::move(form));
        } else {
            out.edge_orbits[it->second].push_back(e);
            out.generators.push_back(compose(edge_rep[it->second], form));
        }
    }

    for (const auto& gamma : out.generators) {
        if (!validate_isomorphism(g, g, gamma)) {
            throw std::logic_error("orbits: derived map is not an automorphism");
        }
    }
    return out;
}

} // namespace ikcert
