#pragma once

#include "ikcert/graph.hpp"

#include <cstdint>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace ikcert {

/// Branch-set certificate for `pattern` being a minor of `host`:
/// pattern vertex -> sorted host vertices.
struct MinorEmbedding {
    std::map<int, std::vector<int>> branch_sets;

    friend bool operator==(const MinorEmbedding&, const MinorEmbedding&) = default;
};

std::string to_string(const MinorEmbedding& emb);

/// A search exhausted its node budget. Never to be read as "no minor".
class SearchBudgetExceeded : public std::runtime_error {
public:
    explicit SearchBudgetExceeded(std::uint64_t nodes)
        : std::runtime_error("search budget of " + std::to_string(nodes) + " nodes exhausted"), nodes_(nodes)
    {
    }
    [[nodiscard]] std::uint64_t nodes() const noexcept { return nodes_; }

private:
    std::uint64_t nodes_;
};

struct SearchOptions {
    /// 0 means unlimited.
    std::uint64_t node_budget = 0;
};

struct MinorSearchStats {
    std::uint64_t nodes = 0;
};

/// Exhaustive branch-set search. Returns a validating embedding iff pattern
/// is a minor of host, so an empty result proves minor-freeness.
std::optional<MinorEmbedding> has_minor(const Graph& host, const Graph& pattern, const SearchOptions& opts = {},
                                        MinorSearchStats* stats = nullptr);

/// Independent checker: branch sets disjoint, nonempty, connected in host,
/// and every pattern edge joins the corresponding branch sets.
bool validate_minor_embedding(const Graph& host, const Graph& pattern, const MinorEmbedding& emb);

/// A member of the Petersen family with its conventional name.
struct FamilyPattern {
    std::string name;
    Graph graph;
};

/// The seven Petersen-family graphs: the closure of K6 under Delta-Y and
/// Y-Delta moves, sorted by (order, canonical key). Computed once and cached.
const std::vector<FamilyPattern>& petersen_family();

/// Verdict for one Petersen-family pattern.
struct ObstructionVerdict {
    std::string pattern;
    std::optional<MinorEmbedding> embedding; // empty: no minor
};

struct NilCertificate {
    std::vector<ObstructionVerdict> verdicts;

    /// Linklessly embeddable iff no family member is a minor.
    [[nodiscard]] bool nil() const;
};

/// Runs all seven obstruction searches (concurrently).
NilCertificate certify_nil(const Graph& g, const SearchOptions& opts = {});

/// First Petersen-family minor found, searching patterns in family order.
std::optional<ObstructionVerdict> find_petersen_minor(const Graph& g, const SearchOptions& opts = {});

/// Re-checks every positive verdict's embedding and that the verdict list
/// names the seven family members.
bool validate_nil_certificate(const Graph& g, const NilCertificate& cert);

} // namespace ikcert
