#pragma once

#include "ikcert/canonical.hpp"
#include "ikcert/graph.hpp"

#include <array>
#include <cstddef>
#include <functional>
#include <map>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace ikcert {

/// Replaces the triangle on the three vertices by a new vertex (the least
/// unused label) joined to each of them. Edge count is preserved.
Graph delta_y(const Graph& g, std::array<int, 3> triangle);

/// Removes a degree-3 vertex and joins its neighbours pairwise. Neighbour
/// pairs that are already adjacent collapse into a single edge.
Graph y_delta(const Graph& g, int center);

/// Number of edges lost to collapse when applying y_delta at `center`.
int y_delta_collapses(const Graph& g, int center);

/// Triangles (sorted triples) and degree-3 vertices, the legal move sites.
std::vector<std::array<int, 3>> triangles(const Graph& g);
std::vector<int> degree_three_vertices(const Graph& g);

struct Move {
    enum class Kind { delta_y, y_delta };
    Kind kind = Kind::delta_y;
    /// Triangle corners for delta_y; only [0] (the centre) for y_delta.
    std::array<int, 3> at{};

    [[nodiscard]] std::string describe() const;
};

Graph apply(const Graph& g, const Move& move);

enum class YDeltaConvention {
    /// Y-Delta always applies at degree-3 vertices; parallel edges collapse.
    collapse,
    /// Y-Delta is skipped when it would create a parallel edge.
    forbid_parallel,
};

struct FamilyLimits {
    std::size_t max_members = 100000;
    int max_order = Graph::kMaxLabel;
    YDeltaConvention convention = YDeltaConvention::collapse;
};

/// The closure ran past a limit; nothing is silently truncated.
class FamilyLimitExceeded : public std::runtime_error {
public:
    FamilyLimitExceeded(const std::string& what, std::size_t members, std::size_t frontier)
        : std::runtime_error(what + " (members " + std::to_string(members) + ", frontier " + std::to_string(frontier) + ")"),
          members_(members),
          frontier_(frontier)
    {
    }
    [[nodiscard]] std::size_t members() const noexcept { return members_; }
    [[nodiscard]] std::size_t frontier() const noexcept { return frontier_; }

private:
    std::size_t members_;
    std::size_t frontier_;
};

struct FamilyMember {
    CanonicalForm form;
    /// The graph produced by replaying `trace` from the seed.
    Graph graph;
    std::vector<Move> trace;
};

struct FamilyClosure {
    /// Sorted by canonical key.
    std::vector<FamilyMember> members;
    /// (order, size) -> member count
    std::map<std::pair<int, int>, int> stats;
    /// Y-Delta moves (on any member) that collapsed parallel edges.
    std::size_t collapse_events = 0;
    /// Moves skipped under YDeltaConvention::forbid_parallel.
    std::size_t skipped_moves = 0;

    [[nodiscard]] bool contains(const Graph& g) const;
};

using ProgressFn = std::function<void(std::size_t members, std::size_t frontier)>;

/// Breadth-first closure of {seed} under Delta-Y and Y-Delta moves, deduplicated
/// by canonical form.
FamilyClosure family_closure(const Graph& seed, const FamilyLimits& limits = {}, const ProgressFn& progress = {});

/// Replays a member's trace from the seed.
Graph replay(const Graph& seed, const std::vector<Move>& trace);

} // namespace ikcert
