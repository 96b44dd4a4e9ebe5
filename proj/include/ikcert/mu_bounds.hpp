#pragma once

#include "ikcert/graph.hpp"
#include "ikcert/minor.hpp"
#include "ikcert/moves.hpp"
#include "ikcert/planarity.hpp"

#include <limits>
#include <memory>
#include <optional>
#include <string>
#include <vector>

namespace ikcert {

class MuSoundnessError : public std::logic_error {
public:
    using std::logic_error::logic_error;
};

struct MuBounds;

/// One justified bound. `lo`/`hi` is the interval this step alone asserts.
/// Which certificate fields are set depends on the rule:
///   BASE  none (convention)
///   R1    planarity
///   R2    nil (upper) or pattern + embedding (lower)
///   R3    apex
///   R4    pattern + embedding (a complete graph)
///   R5    vertex (dominating) + sub (bounds of g - vertex)
///   R6    edge + contracted + nil (of the simple minor)
///   R7    vertex (the Y centre) + sub (bounds of y_delta(g, vertex))
///   MONO  context + context_graph + embedding (pattern is the smaller graph)
struct MuStep {
    std::string rule;
    int lo = 0;
    int hi = 0;
    std::string summary;

    std::optional<PlanarityVerdict> planarity;
    std::optional<ApexCertificate> apex;
    std::optional<Graph> pattern;
    std::optional<MinorEmbedding> embedding;
    std::optional<NilCertificate> nil;
    std::optional<Edge> edge;
    bool contracted = false;
    int vertex = 0;
    std::shared_ptr<const MuBounds> sub;
    std::string context;
    std::optional<Graph> context_graph;
};

struct MuBounds {
    static constexpr int kUnbounded = std::numeric_limits<int>::max();

    int lo = 0;
    int hi = kUnbounded;
    std::vector<MuStep> trace;

    [[nodiscard]] bool exact() const { return lo == hi; }
    [[nodiscard]] std::string interval() const;
};

/// A graph with already established bounds, used for minor monotonicity:
/// g <= context gives hi(g) <= hi(context); context <= g gives lo(g) >= lo(context).
struct MuContext {
    std::string name;
    Graph graph;
    MuBounds bounds;
};

struct MuOptions {
    SearchOptions search;
    std::vector<MuContext> contexts;
    /// How many nested levels of the Delta-Y transfer rule to try.
    int delta_y_depth = 1;
};

/// Bounds from rules R1-R7 plus monotonicity against the given contexts.
/// Throws MuSoundnessError if the rules ever produce lo > hi.
MuBounds mu_bounds(const Graph& g, const MuOptions& opts = {});

/// Bounds for delta_y(pre, triangle) carried over from `pre` (requires pre.lo >= 4).
MuBounds transfer_delta_y(const Graph& pre, const MuBounds& pre_bounds, std::array<int, 3> triangle);

/// Re-checks every step's certificate and that lo/hi are the intersection of
/// the steps. Negative minor verdicts are re-established by rerunning the
/// exhaustive search.
bool revalidate_mu_bounds(const Graph& g, const MuBounds& bounds, const SearchOptions& opts = {});

/// Multi-line rendering of the trace, nested steps indented.
std::string describe(const MuBounds& bounds, int indent = 0);

} // namespace ikcert
