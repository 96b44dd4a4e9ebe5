#include "ikcert/planarity.hpp"

#include <boost/graph/adjacency_list.hpp>
#include <boost/graph/boyer_myrvold_planar_test.hpp>

#include <algorithm>
#include <iterator>
#include <set>

namespace ikcert {

namespace {

using BoostGraph = boost::adjacency_list<boost::vecS, boost::vecS, boost::undirectedS, boost::no_property,
                                         boost::property<boost::edge_index_t, int>>;
using BoostEdge = boost::graph_traits<BoostGraph>::edge_descriptor;

std::optional<KuratowskiWitness> search_kuratowski_minor(const Graph& g)
{
    for (auto kind : {KuratowskiWitness::Kind::k5, KuratowskiWitness::Kind::k33}) {
        if (auto emb = has_minor(g, kuratowski_pattern(kind))) {
            return KuratowskiWitness{kind, std::move(*emb)};
        }
    }
    return std::nullopt;
}

// Contracts the subdivision paths of a Kuratowski subgraph into branch sets.
std::optional<KuratowskiWitness> witness_from_subdivision(const Graph& g, const Graph& sub)
{
    VertexMask branch = 0;
    for (int v : sub.vertices()) {
        if (sub.degree(v) >= 3) {
            branch |= bit_of(v);
        }
    }
    const int branch_count = std::popcount(branch);
    if (branch_count != 5 && branch_count != 6) {
        return std::nullopt;
    }

    std::map<int, std::vector<int>> sets;
    Graph reduced;
    for (int b : labels_of(branch)) {
        sets[b] = {b};
        reduced.add_vertex(b);
    }
    for (int b : labels_of(branch)) {
        for (int first : sub.neighbors(b)) {
            std::vector<int> inner;
            int prev = b;
            int cur = first;
            while (!(branch & bit_of(cur))) {
                if (sub.degree(cur) != 2) {
                    return std::nullopt;
                }
                inner.push_back(cur);
                const auto nb = sub.neighbors(cur);
                const int next = nb[0] == prev ? nb[1] : nb[0];
                prev = cur;
                cur = next;
            }
            if (b < cur) {
                sets[b].insert(sets[b].end(), inner.begin(), inner.end());
                reduced.add_edge(b, cur);
            }
        }
    }

    KuratowskiWitness w;
    std::map<int, int> to_pattern;
    const auto bs = labels_of(branch);
    if (branch_count == 5) {
        w.kind = KuratowskiWitness::Kind::k5;
        for (std::size_t i = 0; i < bs.size(); ++i) {
            to_pattern[bs[i]] = static_cast<int>(i) + 1;
        }
    } else {
        w.kind = KuratowskiWitness::Kind::k33;
        const VertexMask other = reduced.neighbor_mask(bs[0]);
        int left = 1;
        int right = 4;
        for (int b : bs) {
            to_pattern[b] = (other & bit_of(b)) ? right++ : left++;
        }
        if (left != 4 || right != 7) {
            return std::nullopt;
        }
    }
    for (auto& [b, members] : sets) {
        std::sort(members.begin(), members.end());
        w.embedding.branch_sets[to_pattern[b]] = members;
    }
    if (!validate_minor_embedding(g, kuratowski_pattern(w.kind), w.embedding)) {
        return std::nullopt;
    }
    return w;
}

} // namespace

Graph kuratowski_pattern(KuratowskiWitness::Kind kind)
{
    return kind == KuratowskiWitness::Kind::k5 ? Graph::complete(5) : Graph::complete_multipartite({3, 3});
}

PlanarityVerdict is_planar(const Graph& g)
{
    PlanarityVerdict verdict;
    const auto labels = g.vertices();
    const int n = static_cast<int>(labels.size());
    std::vector<int> index(Graph::kMaxLabel + 1, -1);
    for (int i = 0; i < n; ++i) {
        index[labels[i]] = i;
    }

    BoostGraph bg(n);
    for (const Edge& e : g.edges()) {
        boost::add_edge(index[e.u], index[e.v], bg);
    }
    auto edge_ids = boost::get(boost::edge_index, bg);
    int next_id = 0;
    for (auto [it, end] = boost::edges(bg); it != end; ++it) {
        boost::put(edge_ids, *it, next_id++);
    }

    std::vector<std::vector<BoostEdge>> rotation(n);
    std::vector<BoostEdge> kuratowski;
    verdict.planar = n == 0 || boost::boyer_myrvold_planarity_test(
                                   boost::boyer_myrvold_params::graph = bg,
                                   boost::boyer_myrvold_params::embedding = rotation.data(),
                                   boost::boyer_myrvold_params::kuratowski_subgraph = std::back_inserter(kuratowski));

    if (verdict.planar) {
        RotationSystem rot;
        for (int i = 0; i < n; ++i) {
            auto& out = rot[labels[i]];
            for (const BoostEdge& e : rotation[i]) {
                const int s = static_cast<int>(boost::source(e, bg));
                const int t = static_cast<int>(boost::target(e, bg));
                out.push_back(labels[s == i ? t : s]);
            }
        }
        verdict.embedding = std::move(rot);
    } else {
        Graph sub;
        for (const BoostEdge& e : kuratowski) {
            sub.add_edge(labels[boost::source(e, bg)], labels[boost::target(e, bg)]);
        }
        verdict.obstruction = witness_from_subdivision(g, sub);
        if (!verdict.obstruction) {
            verdict.obstruction = search_kuratowski_minor(g);
        }
    }
    if (!validate_planarity_verdict(g, verdict)) {
        throw std::logic_error("is_planar: witness failed validation");
    }
    return verdict;
}

std::vector<std::vector<int>> trace_faces(const RotationSystem& rotation)
{
    std::set<std::pair<int, int>> seen;
    std::vector<std::vector<int>> faces;
    for (const auto& [u, around] : rotation) {
        for (int v : around) {
            if (seen.count({u, v}) != 0) {
                continue;
            }
            std::vector<int> face;
            int a = u;
            int b = v;
            while (seen.insert({a, b}).second) {
                face.push_back(a);
                const auto& rb = rotation.at(b);
                const auto pos = std::find(rb.begin(), rb.end(), a) - rb.begin();
                const int c = rb[(pos + 1) % rb.size()];
                a = b;
                b = c;
            }
            faces.push_back(std::move(face));
        }
    }
    return faces;
}

bool validate_planar_embedding(const Graph& g, const RotationSystem& rotation)
{
    if (static_cast<int>(rotation.size()) != g.order()) {
        return false;
    }
    for (const auto& [v, around] : rotation) {
        if (!g.has_vertex(v)) {
            return false;
        }
        std::vector<int> sorted = around;
        std::sort(sorted.begin(), sorted.end());
        if (sorted != g.neighbors(v)) {
            return false;
        }
    }
    const auto faces = trace_faces(rotation);
    for (VertexMask comp : g.components()) {
        const Graph c = induced_subgraph(g, comp);
        int f = 0;
        for (const auto& face : faces) {
            f += (comp & bit_of(face.front())) ? 1 : 0;
        }
        if (c.size() == 0) {
            f = 1;
        }
        if (c.order() - c.size() + f != 2) {
            return false;
        }
    }
    return true;
}

bool validate_planarity_verdict(const Graph& g, const PlanarityVerdict& verdict)
{
    if (verdict.planar) {
        return verdict.embedding && validate_planar_embedding(g, *verdict.embedding);
    }
    return verdict.obstruction &&
           validate_minor_embedding(g, kuratowski_pattern(verdict.obstruction->kind), verdict.obstruction->embedding);
}

bool is_maximal_planar(const Graph& g)
{
    if (g.order() < 3) {
        throw GraphError("is_maximal_planar: needs at least 3 vertices");
    }
    if (!g.is_connected()) {
        throw GraphError("is_maximal_planar: graph is disconnected");
    }
    return g.size() == 3 * g.order() - 6 && is_planar(g).planar;
}

namespace {

bool euler_excludes(const Graph& g)
{
    return g.order() >= 3 && g.size() > 3 * g.order() - 6;
}

} // namespace

std::optional<ApexCertificate> apex_at_most(const Graph& g, int k, ApexSearchStats* stats)
{
    if (k < 0) {
        throw GraphError("apex_at_most: k must be non-negative");
    }
    const auto vs = g.vertices();
    const int n = static_cast<int>(vs.size());
    k = std::min(k, n);
    ApexSearchStats local;
    std::optional<ApexCertificate> found;

    for (int size = 0; size <= k && !found; ++size) {
        // lexicographic enumeration of index combinations
        std::vector<int> pick(size);
        for (int i = 0; i < size; ++i) {
            pick[i] = i;
        }
        while (true) {
            VertexMask removed = 0;
            for (int i : pick) {
                removed |= bit_of(vs[i]);
            }
            ++local.subsets_tested;
            const Graph rest = delete_vertices(g, removed);
            if (!euler_excludes(rest)) {
                ++local.planarity_tests;
                auto verdict = is_planar(rest);
                if (verdict.planar) {
                    found = ApexCertificate{labels_of(removed), std::move(verdict)};
                    break;
                }
            }
            int i = size - 1;
            while (i >= 0 && pick[i] == n - size + i) {
                --i;
            }
            if (i < 0) {
                break;
            }
            ++pick[i];
            for (int j = i + 1; j < size; ++j) {
                pick[j] = pick[j - 1] + 1;
            }
        }
    }
    if (stats != nullptr) {
        *stats = local;
    }
    return found;
}

bool validate_apex_certificate(const Graph& g, const ApexCertificate& cert)
{
    for (int v : cert.removed) {
        if (!g.has_vertex(v)) {
            return false;
        }
    }
    const Graph rest = delete_vertices(g, mask_of(cert.removed));
    return cert.residual.planar && validate_planar_embedding(rest, *cert.residual.embedding) && is_planar(rest).planar;
}

} // namespace ikcert
