#pragma once

#include "ikcert/graph.hpp"
#include "ikcert/minor.hpp"

#include <map>
#include <optional>
#include <string>
#include <vector>

namespace ikcert {

/// Combinatorial embedding: for each vertex, its neighbours in cyclic order.
using RotationSystem = std::map<int, std::vector<int>>;

struct KuratowskiWitness {
    enum class Kind { k5, k33 };
    Kind kind = Kind::k5;
    /// Branch sets of K5 (vertices 1..5) or K3,3 (sides {1,2,3} and {4,5,6}).
    MinorEmbedding embedding;
};

Graph kuratowski_pattern(KuratowskiWitness::Kind kind);

struct PlanarityVerdict {
    bool planar = false;
    std::optional<RotationSystem> embedding;     // when planar
    std::optional<KuratowskiWitness> obstruction; // when not
};

/// Exact test; the witness validates either way.
PlanarityVerdict is_planar(const Graph& g);

/// Faces traced in the rotation system; each face is a cyclic vertex walk.
std::vector<std::vector<int>> trace_faces(const RotationSystem& rotation);

/// Rotation system matches g and satisfies v - e + f = 2 on every component.
bool validate_planar_embedding(const Graph& g, const RotationSystem& rotation);
bool validate_planarity_verdict(const Graph& g, const PlanarityVerdict& verdict);

/// True iff planar with exactly 3|V| - 6 edges. Throws GraphError for
/// fewer than three vertices or a disconnected graph.
bool is_maximal_planar(const Graph& g);

struct ApexCertificate {
    std::vector<int> removed;
    PlanarityVerdict residual;
};

struct ApexSearchStats {
    std::size_t subsets_tested = 0;
    std::size_t planarity_tests = 0;
};

/// Least certificate of size at most k: smaller sets first, then the
/// lexicographically least sorted vertex list.
std::optional<ApexCertificate> apex_at_most(const Graph& g, int k, ApexSearchStats* stats = nullptr);

bool validate_apex_certificate(const Graph& g, const ApexCertificate& cert);

} // namespace ikcert
