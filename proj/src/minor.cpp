#include "ikcert/minor.hpp"

#include "ikcert/canonical.hpp"
#include "ikcert/moves.hpp"

#include <algorithm>
#include <future>
#include <numeric>
#include <sstream>

namespace ikcert {

std::string to_string(const MinorEmbedding& emb)
{
    std::ostringstream os;
    bool first = true;
    for (const auto& [p, set] : emb.branch_sets) {
        os << (first ? "" : " ") << p << ":{";
        for (std::size_t i = 0; i < set.size(); ++i) {
            os << (i ? "," : "") << set[i];
        }
        os << '}';
        first = false;
    }
    return os.str();
}

namespace {

VertexMask neighborhood(const std::vector<VertexMask>& adj, VertexMask set)
{
    VertexMask out = 0;
    for (; set != 0; set &= set - 1) {
        out |= adj[std::countr_zero(set)];
    }
    return out;
}

std::vector<VertexMask> dense_adjacency(const Graph& g, const std::vector<int>& labels)
{
    std::vector<int> index(Graph::kMaxLabel + 1, -1);
    for (std::size_t i = 0; i < labels.size(); ++i) {
        index[labels[i]] = static_cast<int>(i);
    }
    std::vector<VertexMask> adj(labels.size(), 0);
    for (std::size_t i = 0; i < labels.size(); ++i) {
        for (int w : g.neighbors(labels[i])) {
            adj[i] |= VertexMask{1} << index[w];
        }
    }
    return adj;
}

// Host vertices are decided one at a time in a fixed breadth-first order;
// each is either deleted or put into the branch set of one pattern vertex.
// Pruning only discards states that cannot be completed into a valid model,
// so exhausting the tree proves that no model exists.
class BranchSetSearch {
public:
    BranchSetSearch(const Graph& host, const Graph& pattern, const SearchOptions& opts)
        : host_labels_(host.vertices()),
          pattern_labels_(pattern.vertices()),
          hadj_(dense_adjacency(host, host_labels_)),
          padj_(dense_adjacency(pattern, pattern_labels_)),
          n_(static_cast<int>(host_labels_.size())),
          p_(static_cast<int>(pattern_labels_.size())),
          opts_(opts)
    {
        for (int a = 0; a < p_; ++a) {
            for (VertexMask m = padj_[a] & ~((VertexMask{2} << a) - 1); m != 0; m &= m - 1) {
                pattern_edges_.emplace_back(a, std::countr_zero(m));
            }
        }
        build_order();
        build_symmetry(pattern);
        sets_.assign(p_, 0);
    }

    std::optional<MinorEmbedding> run()
    {
        undecided_ = n_ == 64 ? ~VertexMask{0} : (VertexMask{1} << n_) - 1;
        if (!dfs(0)) {
            return std::nullopt;
        }
        MinorEmbedding emb;
        for (int a = 0; a < p_; ++a) {
            auto& out = emb.branch_sets[pattern_labels_[a]];
            for (VertexMask m = sets_[a]; m != 0; m &= m - 1) {
                out.push_back(host_labels_[std::countr_zero(m)]);
            }
            std::sort(out.begin(), out.end());
        }
        return emb;
    }

    std::uint64_t nodes() const { return nodes_; }

private:
    void build_order()
    {
        std::vector<int> deg(n_);
        for (int i = 0; i < n_; ++i) {
            deg[i] = std::popcount(hadj_[i]);
        }
        VertexMask seen = 0;
        order_.reserve(n_);
        while (static_cast<int>(order_.size()) < n_) {
            int start = -1;
            for (int i = 0; i < n_; ++i) {
                if (!((seen >> i) & 1U) && (start < 0 || deg[i] > deg[start])) {
                    start = i;
                }
            }
            seen |= VertexMask{1} << start;
            std::size_t head = order_.size();
            order_.push_back(start);
            while (head < order_.size()) {
                const int v = order_[head++];
                std::vector<int> next;
                for (VertexMask m = hadj_[v] & ~seen; m != 0; m &= m - 1) {
                    next.push_back(std::countr_zero(m));
                }
                std::stable_sort(next.begin(), next.end(), [&](int a, int b) { return deg[a] > deg[b]; });
                for (int w : next) {
                    seen |= VertexMask{1} << w;
                    order_.push_back(w);
                }
            }
        }
    }

    // Twins (equal open or closed neighbourhoods) are interchangeable, so
    // within a twin class branch sets are opened in index order. The first
    // host vertex kept may also be restricted to the least pattern vertex
    // of each automorphism orbit; that representative is also the least
    // member of its twin class, so both restrictions hold simultaneously.
    void build_symmetry(const Graph& pattern)
    {
        twin_prev_.assign(p_, -1);
        for (int a = 0; a < p_; ++a) {
            for (int b = a - 1; b >= 0; --b) {
                const bool false_twin = padj_[a] == padj_[b];
                const bool true_twin = (padj_[a] | (VertexMask{1} << a)) == (padj_[b] | (VertexMask{1} << b));
                if (false_twin || true_twin) {
                    twin_prev_[a] = b;
                    break;
                }
            }
        }
        first_allowed_ = 0;
        if (p_ > 0) {
            std::vector<int> index(Graph::kMaxLabel + 1, -1);
            for (int a = 0; a < p_; ++a) {
                index[pattern_labels_[a]] = a;
            }
            for (const auto& orbit : orbits(pattern).vertex_orbits) {
                first_allowed_ |= VertexMask{1} << index[orbit.front()];
            }
        }
    }

    bool dfs(int depth)
    {
        ++nodes_;
        if (opts_.node_budget != 0 && nodes_ > opts_.node_budget) {
            throw SearchBudgetExceeded(opts_.node_budget);
        }
        if (depth == n_) {
            return true; // feasible() with nothing undecided means a valid model
        }
        const int v = order_[depth];
        const VertexMask vbit = VertexMask{1} << v;
        undecided_ &= ~vbit;

        const bool started = std::any_of(sets_.begin(), sets_.end(), [](VertexMask s) { return s != 0; });

        // open a new branch set
        for (int a = 0; a < p_; ++a) {
            if (sets_[a] != 0) {
                continue;
            }
            if (!started && !((first_allowed_ >> a) & 1U)) {
                continue;
            }
            if (twin_prev_[a] >= 0 && sets_[twin_prev_[a]] == 0) {
                continue;
            }
            if (try_assign(depth, a, vbit)) {
                return true;
            }
        }
        // grow an existing set, adjacent ones first
        for (int pass = 0; pass < 2; ++pass) {
            for (int a = 0; a < p_; ++a) {
                if (sets_[a] == 0) {
                    continue;
                }
                const bool adjacent = (hadj_[v] & sets_[a]) != 0;
                if (adjacent != (pass == 0)) {
                    continue;
                }
                if (try_assign(depth, a, vbit)) {
                    return true;
                }
            }
        }
        // delete
        if (feasible() && dfs(depth + 1)) {
            return true;
        }
        undecided_ |= vbit;
        return false;
    }

    bool try_assign(int depth, int a, VertexMask vbit)
    {
        sets_[a] |= vbit;
        if (feasible() && dfs(depth + 1)) {
            return true;
        }
        sets_[a] &= ~vbit;
        return false;
    }

    // Region a branch set could still occupy: its vertices plus undecided
    // vertices within `capacity` steps. Returns 0 when the set can no longer
    // become connected.
    VertexMask reach(VertexMask set, int capacity) const
    {
        VertexMask r = set & (~set + 1);
        for (int layer = 0;; ++layer) {
            for (VertexMask nb = neighborhood(hadj_, r) & set & ~r; nb != 0; nb = neighborhood(hadj_, r) & set & ~r) {
                r |= nb;
            }
            if (layer == capacity) {
                break;
            }
            const VertexMask grow = neighborhood(hadj_, r) & undecided_ & ~r;
            if (grow == 0) {
                break;
            }
            r |= grow;
        }
        return (set & ~r) == 0 ? r : 0;
    }

    bool feasible()
    {
        int empty = 0;
        for (int a = 0; a < p_; ++a) {
            empty += sets_[a] == 0 ? 1 : 0;
        }
        const int free_vertices = std::popcount(undecided_);
        if (empty > free_vertices) {
            return false;
        }
        const int capacity = free_vertices - empty;

        for (int a = 0; a < p_; ++a) {
            if (sets_[a] == 0) {
                region_[a] = undecided_;
                continue;
            }
            region_[a] = reach(sets_[a], capacity);
            if (region_[a] == 0) {
                return false;
            }
        }
        for (const auto& [a, b] : pattern_edges_) {
            if (sets_[a] != 0 && sets_[b] != 0 && (neighborhood(hadj_, sets_[a]) & sets_[b]) != 0) {
                continue;
            }
            if ((neighborhood(hadj_, region_[a]) & region_[b]) == 0) {
                return false;
            }
        }
        return true;
    }

    std::vector<int> host_labels_;
    std::vector<int> pattern_labels_;
    std::vector<VertexMask> hadj_;
    std::vector<VertexMask> padj_;
    int n_;
    int p_;
    SearchOptions opts_;
    std::vector<std::pair<int, int>> pattern_edges_;
    std::vector<int> order_;
    std::vector<int> twin_prev_;
    VertexMask first_allowed_ = 0;
    std::vector<VertexMask> sets_;
    std::array<VertexMask, Graph::kMaxLabel> region_{};
    VertexMask undecided_ = 0;
    std::uint64_t nodes_ = 0;
};

} // namespace

std::optional<MinorEmbedding> has_minor(const Graph& host, const Graph& pattern, const SearchOptions& opts,
                                        MinorSearchStats* stats)
{
    if (pattern.order() > host.order() || pattern.size() > host.size()) {
        return std::nullopt;
    }
    BranchSetSearch search(host, pattern, opts);
    auto result = search.run();
    if (stats != nullptr) {
        stats->nodes = search.nodes();
    }
    if (result && !validate_minor_embedding(host, pattern, *result)) {
        throw std::logic_error("has_minor produced an invalid embedding");
    }
    return result;
}

bool validate_minor_embedding(const Graph& host, const Graph& pattern, const MinorEmbedding& emb)
{
    if (static_cast<int>(emb.branch_sets.size()) != pattern.order()) {
        return false;
    }
    std::map<int, VertexMask> sets;
    VertexMask used = 0;
    for (const auto& [p, members] : emb.branch_sets) {
        if (!pattern.has_vertex(p) || members.empty()) {
            return false;
        }
        VertexMask s = 0;
        for (int h : members) {
            if (!host.has_vertex(h) || (used & bit_of(h)) || (s & bit_of(h))) {
                return false;
            }
            s |= bit_of(h);
        }
        used |= s;
        if (!induced_subgraph(host, s).is_connected()) {
            return false;
        }
        sets[p] = s;
    }
    for (const Edge& e : pattern.edges()) {
        bool joined = false;
        for (int x : labels_of(sets.at(e.u))) {
            if (host.neighbor_mask(x) & sets.at(e.v)) {
                joined = true;
                break;
            }
        }
        if (!joined) {
            return false;
        }
    }
    return true;
}

namespace {

std::string family_member_name(const Graph& g)
{
    switch (g.order()) {
    case 6:
        return "K6";
    case 7:
        return is_isomorphic(g, Graph::complete_multipartite({3, 3, 1})).isomorphic ? "K3,3,1" : "G7";
    case 8: {
        const Graph k44e = delete_edge(Graph::complete_multipartite({4, 4}), Edge{1, 5});
        return is_isomorphic(g, k44e).isomorphic ? "K4,4-e" : "G8";
    }
    case 9:
        return "G9";
    case 10:
        return "Petersen";
    default:
        return "?" + std::to_string(g.order());
    }
}

} // namespace

const std::vector<FamilyPattern>& petersen_family()
{
    static const std::vector<FamilyPattern> family = [] {
        FamilyLimits limits;
        limits.max_members = 64;
        limits.max_order = 16;
        const FamilyClosure closure = family_closure(Graph::complete(6), limits);
        std::vector<FamilyPattern> out;
        for (const auto& member : closure.members) {
            out.push_back({family_member_name(member.graph), member.graph});
        }
        std::stable_sort(out.begin(), out.end(),
                         [](const FamilyPattern& a, const FamilyPattern& b) { return a.graph.order() < b.graph.order(); });
        return out;
    }();
    return family;
}

bool NilCertificate::nil() const
{
    return std::none_of(verdicts.begin(), verdicts.end(), [](const ObstructionVerdict& v) { return v.embedding.has_value(); });
}

NilCertificate certify_nil(const Graph& g, const SearchOptions& opts)
{
    const auto& family = petersen_family();
    std::vector<std::future<std::optional<MinorEmbedding>>> jobs;
    jobs.reserve(family.size());
    for (const auto& member : family) {
        jobs.push_back(std::async(std::launch::async, [&g, &member, &opts] { return has_minor(g, member.graph, opts); }));
    }
    NilCertificate cert;
    for (std::size_t i = 0; i < family.size(); ++i) {
        cert.verdicts.push_back({family[i].name, jobs[i].get()});
    }
    return cert;
}

std::optional<ObstructionVerdict> find_petersen_minor(const Graph& g, const SearchOptions& opts)
{
    for (const auto& member : petersen_family()) {
        if (auto emb = has_minor(g, member.graph, opts)) {
            return ObstructionVerdict{member.name, std::move(emb)};
        }
    }
    return std::nullopt;
}

bool validate_nil_certificate(const Graph& g, const NilCertificate& cert)
{
    const auto& family = petersen_family();
    if (cert.verdicts.size() != family.size()) {
        return false;
    }
    for (std::size_t i = 0; i < family.size(); ++i) {
        const auto& verdict = cert.verdicts[i];
        if (verdict.pattern != family[i].name) {
            return false;
        }
        if (verdict.embedding && !validate_minor_embedding(g, family[i].graph, *verdict.embedding)) {
            return false;
        }
    }
    return true;
}

} // namespace ikcert
