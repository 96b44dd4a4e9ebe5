#include "ikcert/moves.hpp"

#include <algorithm>
#include <deque>
#include <unordered_map>

namespace ikcert {

Graph delta_y(const Graph& g, std::array<int, 3> t)
{
    const auto [a, b, c] = t;
    if (a == b || b == c || a == c || !g.has_edge(a, b) || !g.has_edge(b, c) || !g.has_edge(a, c)) {
        throw GraphError("delta_y: vertices " + std::to_string(a) + "," + std::to_string(b) + "," + std::to_string(c) +
                         " do not form a triangle");
    }
    const int x = g.least_unused_label();
    if (x > Graph::kMaxLabel) {
        throw GraphError("delta_y: no free vertex label");
    }
    Graph out = g;
    out.remove_edge(a, b);
    out.remove_edge(b, c);
    out.remove_edge(a, c);
    out.add_edge(x, a);
    out.add_edge(x, b);
    out.add_edge(x, c);
    return out;
}

Graph y_delta(const Graph& g, int center)
{
    if (!g.has_vertex(center) || g.degree(center) != 3) {
        throw GraphError("y_delta: vertex " + std::to_string(center) + " does not have degree 3");
    }
    const auto nb = g.neighbors(center);
    Graph out = g;
    out.remove_vertex(center);
    out.add_edge(nb[0], nb[1]);
    out.add_edge(nb[1], nb[2]);
    out.add_edge(nb[0], nb[2]);
    return out;
}

int y_delta_collapses(const Graph& g, int center)
{
    if (!g.has_vertex(center) || g.degree(center) != 3) {
        throw GraphError("y_delta: vertex " + std::to_string(center) + " does not have degree 3");
    }
    const auto nb = g.neighbors(center);
    return static_cast<int>(g.has_edge(nb[0], nb[1])) + static_cast<int>(g.has_edge(nb[1], nb[2])) +
           static_cast<int>(g.has_edge(nb[0], nb[2]));
}

std::vector<std::array<int, 3>> triangles(const Graph& g)
{
    std::vector<std::array<int, 3>> out;
    for (const Edge& e : g.edges()) {
        // third corner above e.v keeps each triangle once, in sorted order
        VertexMask common = g.neighbor_mask(e.u) & g.neighbor_mask(e.v) & ~((bit_of(e.v) << 1) - 1);
        for (; common != 0; common &= common - 1) {
            out.push_back({e.u, e.v, lowest_label(common)});
        }
    }
    return out;
}

std::vector<int> degree_three_vertices(const Graph& g)
{
    std::vector<int> out;
    for (int v : g.vertices()) {
        if (g.degree(v) == 3) {
            out.push_back(v);
        }
    }
    return out;
}

std::string Move::describe() const
{
    if (kind == Kind::delta_y) {
        return "DY(" + std::to_string(at[0]) + "," + std::to_string(at[1]) + "," + std::to_string(at[2]) + ")";
    }
    return "YD(" + std::to_string(at[0]) + ")";
}

Graph apply(const Graph& g, const Move& move)
{
    return move.kind == Move::Kind::delta_y ? delta_y(g, move.at) : y_delta(g, move.at[0]);
}

Graph replay(const Graph& seed, const std::vector<Move>& trace)
{
    Graph g = seed;
    for (const Move& m : trace) {
        g = apply(g, m);
    }
    return g;
}

bool FamilyClosure::contains(const Graph& g) const
{
    const auto form = canonical_form(g);
    return std::any_of(members.begin(), members.end(), [&](const FamilyMember& m) { return m.form == form; });
}

FamilyClosure family_closure(const Graph& seed, const FamilyLimits& limits, const ProgressFn& progress)
{
    if (limits.max_members == 0 || limits.max_order <= 0) {
        throw std::invalid_argument("family_closure: limits must be positive");
    }
    if (seed.order() > limits.max_order) {
        throw FamilyLimitExceeded("seed exceeds max order", 0, 1);
    }

    FamilyClosure out;
    std::vector<FamilyMember> members;
    std::unordered_map<std::string, std::size_t> index;
    std::deque<std::size_t> frontier;

    auto consider = [&](const FamilyMember& parent, const Move& move) {
        Graph next = apply(parent.graph, move);
        auto form = canonical_form(next);
        auto key = form.key();
        if (index.count(key) != 0) {
            return;
        }
        if (next.order() > limits.max_order) {
            throw FamilyLimitExceeded("member of order " + std::to_string(next.order()) + " exceeds max order",
                                      members.size(), frontier.size());
        }
        if (members.size() >= limits.max_members) {
            throw FamilyLimitExceeded("more than " + std::to_string(limits.max_members) + " members", members.size(),
                                      frontier.size());
        }
        FamilyMember m{std::move(form), std::move(next), parent.trace};
        m.trace.push_back(move);
        index.emplace(std::move(key), members.size());
        frontier.push_back(members.size());
        members.push_back(std::move(m));
    };

    {
        auto form = canonical_form(seed);
        index.emplace(form.key(), 0);
        members.push_back({std::move(form), seed, {}});
        frontier.push_back(0);
    }

    while (!frontier.empty()) {
        const std::size_t at = frontier.front();
        frontier.pop_front();
        // copy: `members` may reallocate while this one is expanded
        const FamilyMember parent = members[at];
        for (const auto& t : triangles(parent.graph)) {
            consider(parent, Move{Move::Kind::delta_y, t});
        }
        for (int v : degree_three_vertices(parent.graph)) {
            if (y_delta_collapses(parent.graph, v) > 0) {
                if (limits.convention == YDeltaConvention::forbid_parallel) {
                    ++out.skipped_moves;
                    continue;
                }
                ++out.collapse_events;
            }
            consider(parent, Move{Move::Kind::y_delta, {v, 0, 0}});
        }
        if (progress) {
            progress(members.size(), frontier.size());
        }
    }

    std::sort(members.begin(), members.end(),
              [](const FamilyMember& a, const FamilyMember& b) { return a.form.key() < b.form.key(); });
    for (const auto& m : members) {
        ++out.stats[{m.graph.order(), m.graph.size()}];
    }
    out.members = std::move(members);
    return out;
}

} // namespace ikcert
