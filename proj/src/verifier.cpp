#include "ikcert/verifier.hpp"

#include "ikcert/canonical.hpp"
#include "ikcert/moves.hpp"
#include "ikcert/mu_bounds.hpp"
#include "ikcert/planarity.hpp"

#include <json.hpp>

#include <algorithm>
#include <chrono>
#include <iomanip>
#include <set>
#include <sstream>

namespace ikcert {

namespace {

struct Outcome {
    bool ok = false;
    std::string summary;
};

struct Claim {
    std::string id;
    std::string anchor;
    std::function<Outcome()> run;
};

std::string set_text(const std::vector<int>& vs)
{
    std::string out = "{";
    for (std::size_t i = 0; i < vs.size(); ++i) {
        out += (i ? "," : "") + std::to_string(vs[i]);
    }
    return out + "}";
}

std::string shape(const Graph& g)
{
    return "(" + std::to_string(g.order()) + "," + std::to_string(g.size()) + ")";
}

std::string edge_id(Edge e)
{
    return std::to_string(e.u) + "-" + std::to_string(e.v);
}

Graph petersen_graph()
{
    Graph g;
    for (int i = 0; i < 5; ++i) {
        g.add_edge(1 + i, 1 + (i + 1) % 5);
        g.add_edge(6 + i, 6 + (i + 2) % 5);
        g.add_edge(1 + i, 6 + i);
    }
    return g;
}

Graph k44_minus_edge()
{
    Graph g = Graph::complete_multipartite({4, 4});
    g.remove_edge(1, 5);
    return g;
}

const Graph& family_member(const std::string& name)
{
    for (const auto& p : petersen_family()) {
        if (p.name == name) {
            return p.graph;
        }
    }
    throw std::logic_error("no family member named " + name);
}

// One row of the 2-apex table: an edge representative, the pair whose
// removal planarizes the deletion (absent for the exceptional row) and the
// pair for the contraction.
struct TableRow {
    Edge edge;
    std::optional<std::array<int, 2>> deletion;
    std::array<int, 2> contraction;
};

const std::vector<TableRow>& table_rows()
{
    static const std::vector<TableRow> rows = {
        {{1, 2}, {{4, 7}}, {1, 3}}, {{1, 4}, {{2, 6}}, {1, 7}}, {{1, 5}, {{2, 3}}, {1, 2}},
        {{1, 8}, {{2, 3}}, {1, 4}}, {{1, 9}, {{2, 5}}, {2, 3}}, {{2, 4}, {{5, 6}}, {2, 3}},
        {{2, 7}, {{3, 4}}, {2, 4}}, {{4, 5}, std::nullopt, {2, 4}}, {{4, 9}, {{2, 3}}, {4, 7}},
        {{5, 7}, {{2, 4}}, {2, 4}}, {{5, 9}, {{2, 6}}, {2, 5}},
    };
    return rows;
}

class Suite {
public:
    Suite(const Catalog& catalog, const SearchOptions& search) : cat_(catalog), search_(search) {}

    std::vector<std::pair<std::string, std::vector<Claim>>> groups()
    {
        return {
            {"catalog", catalog_claims()},   {"structure", structure_claims()},
            {"nil", nil_claims()},           {"il", il_claims()},
            {"derivation", derivation_claims()}, {"table1", table_claims()},
            {"orbits", orbit_claims()},      {"mu", mu_claims()},
            {"prop", prop_claims()},         {"family", family_claims()},
        };
    }

private:
    const Graph& get(const std::string& name) const { return cat_.get(name).graph; }

    Outcome nil_outcome(const Graph& g, bool expect_nil) const
    {
        auto cert = certify_nil(g, search_);
        Outcome out;
        out.ok = cert.nil() == expect_nil && validate_nil_certificate(g, cert);
        if (cert.nil()) {
            out.summary = shape(g) + " nIL: no minor in any of the 7 family members";
        } else {
            std::string found;
            for (const auto& v : cert.verdicts) {
                if (v.embedding) {
                    found += (found.empty() ? "" : ", ") + v.pattern;
                }
            }
            out.summary = shape(g) + " not nIL: minors " + found;
        }
        return out;
    }

    Outcome planar_after_removal(const Graph& g, std::array<int, 2> removed) const
    {
        for (int v : removed) {
            if (!g.has_vertex(v)) {
                return {false, "vertex " + std::to_string(v) + " absent"};
            }
        }
        const Graph rest = delete_vertices(g, bit_of(removed[0]) | bit_of(removed[1]));
        ApexCertificate cert{{removed[0], removed[1]}, is_planar(rest)};
        const bool ok = cert.residual.planar && validate_apex_certificate(g, cert);
        return {ok, "removing " + set_text(cert.removed) + " leaves " + shape(rest) +
                        (cert.residual.planar ? " planar" : " non-planar")};
    }

    const MuBounds& mu_of(const std::string& name, const MuOptions& opts = {})
    {
        auto it = mu_cache_.find(name);
        if (it == mu_cache_.end()) {
            it = mu_cache_.emplace(name, mu_bounds(get(name), opts)).first;
        }
        return it->second;
    }

    MuOptions with_search() const
    {
        MuOptions o;
        o.search = search_;
        return o;
    }

    std::vector<Claim> catalog_claims()
    {
        std::vector<Claim> out;
        for (auto [name, n, m] : {std::tuple{"G11_35", 11, 35}, {"G10_30", 10, 30}, {"G10_26", 10, 26}}) {
            const std::string nm = name;
            out.push_back({"catalog." + nm + ".order-size", "appendix edge list of " + nm, [this, nm, n, m] {
                               const Graph& g = get(nm);
                               return Outcome{g.order() == n && g.size() == m,
                                              shape(g) + ", expected (" + std::to_string(n) + "," +
                                                  std::to_string(m) + ")"};
                           }});
        }
        out.push_back({"catalog.integrity", "catalog checksums and derivations", [this] {
                           std::string s;
                           for (const auto& p : cat_.problems()) {
                               s += (s.empty() ? "" : "; ") + p;
                           }
                           return Outcome{cat_.problems().empty(),
                                          s.empty() ? std::to_string(cat_.names().size()) + " graphs rebuilt, checksums match"
                                                    : s};
                       }});
        out.push_back({"catalog.G11_35.M-plus-2-11", "G11_35 is M plus the edge (2,11)", [this] {
                           const Graph& g = get("G11_35");
                           const Graph& m = get("M");
                           const bool ok = g.has_edge(2, 11) && !m.has_edge(2, 11) && add_edge(m, Edge{2, 11}) == g;
                           return Outcome{ok, "M " + shape(m) + " + (2,11) = G11_35 " + shape(g)};
                       }});
        out.push_back({"catalog.G9_28.double-cone", "G9_28 as two nonadjacent cones over the complement of C7", [this] {
                           const Graph& g = get("G9_28");
                           const Graph rim = induced_subgraph(g, mask_of({1, 2, 3, 4, 5, 6, 7}));
                           bool ok = g.order() == 9 && g.size() == 28 && !g.has_edge(8, 9) &&
                                     rim == complement(Graph::cycle(7));
                           for (int apex : {8, 9}) {
                               ok = ok && g.neighbor_mask(apex) == rim.vertex_mask();
                           }
                           return Outcome{ok, shape(g) + ", rim {1..7} = complement of C7, cones 8 and 9 nonadjacent"};
                       }});
        out.push_back({"catalog.K3311.cone", "K3,3,1,1 is the cone over K3,3,1", [this] {
                           const auto iso = is_isomorphic(cone(get("K331")), get("K3311"));
                           return Outcome{iso.isomorphic &&
                                              validate_isomorphism(cone(get("K331")), get("K3311"), *iso.witness),
                                          "cone(K3,3,1) " + std::string(iso.isomorphic ? "~" : "!~") + " K3,3,1,1"};
                       }});
        return out;
    }

    std::vector<Claim> structure_claims()
    {
        std::vector<Claim> out;
        out.push_back({"structure.M.K4-separator", "the K4 induced by {3,4,5,6} in M", [this] {
                           const Graph k = induced_subgraph(get("M"), mask_of({3, 4, 5, 6}));
                           const bool ok = k.order() == 4 && get("M").is_clique(mask_of({3, 4, 5, 6}));
                           return Outcome{ok, "induced " + shape(k) + (ok ? ", complete" : ", not complete")};
                       }});
        out.push_back({"structure.M.split", "M splits over {3,4,5,6} into H and K", [this] {
                           const auto comps = delete_vertices(get("M"), mask_of({3, 4, 5, 6})).components();
                           const auto h = get("H").vertices();
                           const auto k = get("K").vertices();
                           const bool ok = comps.size() == 2 && h == std::vector<int>{1, 2, 3, 4, 5, 6, 8, 9} &&
                                           k == std::vector<int>{3, 4, 5, 6, 7, 10, 11};
                           return Outcome{ok, std::to_string(comps.size()) + " components; H on " + set_text(h) +
                                                  ", K on " + set_text(k)};
                       }});
        for (auto [name, base, v, n, m] : {std::tuple{"Hprime", "H", 4, 7, 15}, {"Kprime", "K", 5, 6, 12}}) {
            const std::string nm = name;
            const std::string bs = base;
            out.push_back({"structure." + nm + ".maximal-planar",
                           bs + " minus vertex " + std::to_string(v) + " is maximal planar", [this, nm, n, m] {
                               const Graph& g = get(nm);
                               const bool ok = g.order() == n && g.size() == m && is_maximal_planar(g);
                               return Outcome{ok, shape(g) + (ok ? " maximal planar" : " not maximal planar")};
                           }});
            out.push_back({"structure." + bs + ".apex", bs + " is apex", [this, bs, v] {
                               const Graph& g = get(bs);
                               auto least = apex_at_most(g, 1);
                               ApexCertificate stated{{v}, is_planar(delete_vertices(g, bit_of(v)))};
                               const bool ok = least && least->removed.size() == 1 && validate_apex_certificate(g, *least) &&
                                               stated.residual.planar && validate_apex_certificate(g, stated);
                               return Outcome{ok, "least certificate " + (least ? set_text(least->removed) : "none") +
                                                      ", stated {" + std::to_string(v) + "} validates"};
                           }});
        }
        out.push_back({"structure.clique-sum.HK", "M is the clique sum of H and K over K4", [this] {
                           const Graph s = clique_sum(get("H"), get("K"), mask_of({3, 4, 5, 6}));
                           const auto iso = is_isomorphic(s, get("M"));
                           return Outcome{s == get("M") && iso.isomorphic,
                                          "H + K over {3,4,5,6} = " + shape(s) + (s == get("M") ? ", equal to M" : "")};
                       }});
        out.push_back({"structure.nil-hypotheses.HK", "clique-sum hypotheses for H and K", [this] {
                           const bool ok = check_nil_clique_sum_hypotheses(get("H"), get("K"), mask_of({3, 4, 5, 6}), search_);
                           return Outcome{ok, "K4 shared, both summands nIL, both stay connected without {3,4,5,6}"};
                       }});
        out.push_back({"structure.nil-hypotheses.K5H", "G10_30/(2,6) + (8,9) as a clique sum of K5 and a copy of H",
                       [this] {
                           const Graph c = contract_edge(get("G10_30"), Edge{2, 6});
                           const Graph x = add_edge(c, Edge{8, 9});
                           const VertexMask shared = mask_of({2, 3, 8, 9});
                           auto [a, b] = split_clique_sum(x, shared);
                           const bool a_is_h = is_isomorphic(a, get("H")).isomorphic;
                           const Graph& h_side = a_is_h ? a : b;
                           const Graph& k5_side = a_is_h ? b : a;
                           const bool ok = !c.has_edge(8, 9) && is_isomorphic(h_side, get("H")).isomorphic &&
                                           is_isomorphic(k5_side, Graph::complete(5)).isomorphic &&
                                           clique_sum(h_side, k5_side, shared) == x &&
                                           check_nil_clique_sum_hypotheses(h_side, k5_side, shared, search_);
                           return Outcome{ok, "sides " + shape(h_side) + " ~ H and " + shape(k5_side) +
                                                  " ~ K5 over {2,3,8,9}; hypotheses hold"};
                       }});
        return out;
    }

    std::vector<Claim> nil_claims()
    {
        std::vector<Claim> out;
        out.push_back({"nil.M", "M is nIL", [this] { return nil_outcome(get("M"), true); }});
        out.push_back({"nil.G11_35-del-2-11", "G11_35 has a nIL edge deletion minor",
                       [this] { return nil_outcome(delete_edge(get("G11_35"), Edge{2, 11}), true); }});
        out.push_back({"nil.G11_35-con-2-3", "G11_35/(2,3) is a minor of M, hence nIL", [this] {
                           const Graph c = contract_edge(get("G11_35"), Edge{2, 3});
                           Outcome o = nil_outcome(c, true);
                           auto emb = has_minor(get("M"), c, search_);
                           o.ok = o.ok && emb && validate_minor_embedding(get("M"), c, *emb);
                           o.summary += emb ? "; minor of M via " + to_string(*emb) : "; not a minor of M";
                           return o;
                       }});
        out.push_back({"nil.G10_30-con-2-6", "G10_30/(2,6) is nIL",
                       [this] { return nil_outcome(contract_edge(get("G10_30"), Edge{2, 6}), true); }});
        out.push_back({"nil.non-triangular-contraction", "Delta-Y on (2,3,11) then contracting (x,3)", [this] {
                           const Graph& g = get("G11_35");
                           const bool triangular = (g.neighbor_mask(2) & g.neighbor_mask(3)) != 0;
                           const Graph gp = delta_y(g, {2, 3, 11});
                           const int x = g.least_unused_label();
                           const bool non_tri = gp.has_edge(x, 3) && (gp.neighbor_mask(x) & gp.neighbor_mask(3)) == 0;
                           const Graph c = contract_edge(gp, Edge{x, 3});
                           const Graph target = delete_edge(g, Edge{2, 11});
                           const auto iso = is_isomorphic(c, target);
                           Outcome o = nil_outcome(c, true);
                           o.ok = o.ok && triangular && non_tri && iso.isomorphic &&
                                  validate_isomorphism(c, target, *iso.witness);
                           o.summary = "x = " + std::to_string(x) + ", (x,3) non-triangular, G'/(x,3) ~ G11_35-(2,11); " +
                                       o.summary;
                           return o;
                       }});
        return out;
    }

    std::vector<Claim> il_claims()
    {
        std::vector<Claim> out;
        for (const char* name : {"G11_35", "G10_30", "G10_26"}) {
            const std::string nm = name;
            out.push_back({"il." + nm + ".petersen-minor", nm + " is not nIL", [this, nm] {
                               auto found = find_petersen_minor(get(nm), search_);
                               const bool ok = found && validate_minor_embedding(get(nm), family_member(found->pattern),
                                                                                 *found->embedding);
                               return Outcome{ok, found ? found->pattern + " minor " + to_string(*found->embedding)
                                                        : "no family minor"};
                           }});
        }
        for (auto [id, pattern] : {std::pair{"K331", "K3,3,1"}, {"K44e", "K4,4-e"}, {"G7", "G7"}}) {
            const std::string pat = pattern;
            out.push_back({"il.G10_26." + std::string(id), "G10_26 has a " + pat + " minor", [this, pat] {
                               const Graph& g = get("G10_26");
                               auto emb = has_minor(g, family_member(pat), search_);
                               const bool ok = emb && validate_minor_embedding(g, family_member(pat), *emb);
                               return Outcome{ok, emb ? pat + " via " + to_string(*emb) : "no " + pat + " minor"};
                           }});
        }
        return out;
    }

    std::vector<Claim> derivation_claims()
    {
        return {{"derivation.G10_26", "G10_26 from G11_35 by contracting (2,11) and deleting seven edges", [this] {
                     Graph g = contract_edge(get("G11_35"), Edge{2, 11});
                     for (Edge e : {Edge{2, 3}, Edge{2, 5}, Edge{2, 6}, Edge{3, 5}, Edge{3, 6}, Edge{4, 10}, Edge{5, 6}}) {
                         g = delete_edge(g, e);
                     }
                     const auto a = canonical_form(g);
                     const auto b = canonical_form(get("G10_26"));
                     const auto iso = is_isomorphic(g, get("G10_26"));
                     const bool ok = a == b && iso.isomorphic && validate_isomorphism(g, get("G10_26"), *iso.witness);
                     return Outcome{ok, "result " + shape(g) + ", canonical key " + a.key() +
                                            (a == b ? " matches" : " differs from " + b.key())};
                 }}};
    }

    std::vector<Claim> table_claims()
    {
        std::vector<Claim> out;
        for (const TableRow& row : table_rows()) {
            const std::string eid = edge_id(row.edge);
            const std::string label = "2-apex table, edge " + to_string(row.edge);
            if (row.deletion) {
                out.push_back({"table1.del." + eid, label + ", deletion", [this, row] {
                                   Outcome o = planar_after_removal(delete_edge(get("G10_26"), row.edge), *row.deletion);
                                   o.summary = "G10_26-" + to_string(row.edge) + ": " + o.summary;
                                   return o;
                               }});
            } else {
                out.push_back({"table1.del." + eid, label + ", deletion (the exception and its repair)", [this, row] {
                                   const Graph g = delete_edge(get("G10_26"), row.edge);
                                   ApexSearchStats stats;
                                   auto cert = apex_at_most(g, 2, &stats);
                                   const std::size_t expected = 1 + 10 + 45;
                                   const Graph gy = delta_y(g, {1, 5, 9});
                                   const int x = g.least_unused_label();
                                   Outcome repair = planar_after_removal(gy, {2, x});
                                   const bool ok = !cert && stats.subsets_tested == expected && x == 11 && repair.ok;
                                   return Outcome{ok, std::string(cert ? "2-apex via " + set_text(cert->removed)
                                                                       : "not 2-apex") +
                                                          " after " + std::to_string(stats.subsets_tested) + " of " +
                                                          std::to_string(expected) + " subsets; Delta-Y on (1,5,9) adds " +
                                                          std::to_string(x) + ", " + repair.summary};
                               }});
            }
            out.push_back({"table1.con." + eid, label + ", contraction", [this, row] {
                               Outcome o = planar_after_removal(contract_edge(get("G10_26"), row.edge), row.contraction);
                               o.summary = "G10_26/" + to_string(row.edge) + ": " + o.summary;
                               return o;
                           }});
        }
        return out;
    }

    std::vector<Claim> orbit_claims()
    {
        std::vector<Claim> out;
        out.push_back({"orbits.G10_26.vertex", "the six vertex classes of G10_26", [this] {
                           const auto o = orbits(get("G10_26"));
                           const std::vector<std::vector<int>> expected = {{1, 8}, {2, 3}, {4}, {5, 6}, {7, 10}, {9}};
                           std::string s;
                           for (const auto& orb : o.vertex_orbits) {
                               s += set_text(orb);
                           }
                           return Outcome{o.vertex_orbits == expected, s};
                       }});
        out.push_back({"orbits.G10_26.edge-count", "the eleven edge types of G10_26", [this] {
                           const auto o = orbits(get("G10_26"));
                           return Outcome{o.edge_orbits.size() == 11,
                                          std::to_string(o.edge_orbits.size()) + " edge orbits from " +
                                              std::to_string(o.generators.size()) + " generators"};
                       }});
        out.push_back({"orbits.G10_26.table-representatives", "the table's edges represent every edge type", [this] {
                           const auto o = orbits(get("G10_26"));
                           std::set<std::size_t> hit;
                           for (const TableRow& row : table_rows()) {
                               for (std::size_t i = 0; i < o.edge_orbits.size(); ++i) {
                                   const auto& orb = o.edge_orbits[i];
                                   if (std::find(orb.begin(), orb.end(), row.edge) != orb.end()) {
                                       hit.insert(i);
                                   }
                               }
                           }
                           return Outcome{hit.size() == o.edge_orbits.size() && hit.size() == table_rows().size(),
                                          std::to_string(table_rows().size()) + " representatives cover " +
                                              std::to_string(hit.size()) + " of " +
                                              std::to_string(o.edge_orbits.size()) + " edge orbits"};
                       }});
        return out;
    }

    Outcome interval_outcome(const Graph& g, const MuBounds& b, int lo, int hi, const std::vector<std::string>& rules)
    {
        bool ok = b.lo == lo && b.hi == hi;
        std::string used;
        for (const auto& s : b.trace) {
            used += (used.empty() ? "" : " ") + s.rule;
        }
        for (const auto& r : rules) {
            ok = ok && std::any_of(b.trace.begin(), b.trace.end(), [&](const MuStep& s) { return s.rule == r; });
        }
        const bool valid = revalidate_mu_bounds(g, b, search_);
        return {ok && valid, b.interval() + " via " + used + (valid ? ", revalidated" : ", REVALIDATION FAILED")};
    }

    std::vector<Claim> mu_claims()
    {
        std::vector<Claim> out;
        struct Case {
            const char* name;
            int value;
            std::vector<std::string> rules;
        };
        const std::vector<Case> cases = {
            {"K4", 3, {"R1"}},       {"K7", 6, {}},          {"K3311", 6, {"R5"}},
            {"G11_35", 5, {"R2", "R6"}}, {"G10_30", 5, {"R2", "R6"}},
        };
        for (const auto& c : cases) {
            const std::string nm = c.name;
            out.push_back({"mu." + nm, "mu of " + nm, [this, nm, c] {
                               if (nm == "K4") {
                                   const Graph k4 = Graph::complete(4);
                                   return interval_outcome(k4, mu_bounds(k4, with_search()), 3, 3, c.rules);
                               }
                               return interval_outcome(get(nm), mu_of(nm, with_search()), c.value, c.value, c.rules);
                           }});
        }
        out.push_back({"mu.K3311.3-apex", "K3,3,1,1 is 3-apex", [this] {
                           const Graph& g = get("K3311");
                           auto two = apex_at_most(g, 2);
                           auto three = apex_at_most(g, 3);
                           const bool ok = !two && three && three->removed.size() == 3 && validate_apex_certificate(g, *three);
                           return Outcome{ok, three ? "apex set " + set_text(three->removed) + ", none of size 2"
                                                    : "not 3-apex"};
                       }});
        out.push_back({"mu.G10_26", "mu of G10_26, upper bound through G11_35", [this] {
                           MuOptions opts = with_search();
                           opts.contexts.push_back({"G11_35", get("G11_35"), mu_of("G11_35", with_search())});
                           return interval_outcome(get("G10_26"), mu_bounds(get("G10_26"), opts), 5, 5, {"R2", "MONO"});
                       }});
        out.push_back({"mu.monotone", "lower bound of a minor never exceeds the upper bound of its host", [this] {
                           const auto& host = mu_of("G11_35", with_search());
                           const auto& minor = mu_of("G10_26", with_search());
                           auto emb = has_minor(get("G11_35"), get("G10_26"), search_);
                           const bool ok = emb && validate_minor_embedding(get("G11_35"), get("G10_26"), *emb) &&
                                           minor.lo <= host.hi;
                           return Outcome{ok, "G10_26 <=m G11_35, lo " + std::to_string(minor.lo) + " <= hi " +
                                                  std::to_string(host.hi)};
                       }});
        out.push_back({"mu.delta-y-transfer", "bounds carried across Delta-Y on (1,5,9) in G10_26-(4,5)", [this] {
                           const Graph pre = delete_edge(get("G10_26"), Edge{4, 5});
                           const Graph post = delta_y(pre, {1, 5, 9});
                           const MuBounds pb = mu_bounds(pre, with_search());
                           const MuBounds direct = mu_bounds(post, with_search());
                           const MuBounds moved = transfer_delta_y(pre, pb, {1, 5, 9});
                           const bool ok = std::max(direct.lo, moved.lo) <= std::min(direct.hi, moved.hi) &&
                                           revalidate_mu_bounds(post, moved, search_) &&
                                           revalidate_mu_bounds(post, direct, search_);
                           return Outcome{ok, "direct " + direct.interval() + ", transferred " + moved.interval()};
                       }});
        return out;
    }

    std::vector<Claim> prop_claims()
    {
        std::vector<Claim> out;
        out.push_back({"prop.G9_28.deletion-classes", "two classes of order-8 induced subgraphs of G9_28", [this] {
                           const Graph& g = get("G9_28");
                           std::map<std::string, std::vector<int>> classes;
                           for (int v : g.vertices()) {
                               classes[canonical_form(delete_vertices(g, bit_of(v))).key()].push_back(v);
                           }
                           std::string s;
                           for (const auto& [key, vs] : classes) {
                               s += set_text(vs);
                           }
                           const bool split = classes.size() == 2 &&
                                              canonical_form(delete_vertices(g, bit_of(9))).key() !=
                                                  canonical_form(delete_vertices(g, bit_of(7))).key();
                           return Outcome{split, std::to_string(classes.size()) + " classes by deleted vertex " + s};
                       }});
        out.push_back({"prop.G9_28.K6-minors", "both order-8 subgraphs of G9_28 have K6 minors", [this] {
                           const Graph& g = get("G9_28");
                           bool ok = true;
                           std::string s;
                           for (int v : {9, 7}) {
                               const Graph sub = delete_vertices(g, bit_of(v));
                               auto emb = has_minor(sub, Graph::complete(6), search_);
                               ok = ok && emb && validate_minor_embedding(sub, Graph::complete(6), *emb) &&
                                    !certify_nil(sub, search_).nil();
                               s += (s.empty() ? "" : "; ") + std::string("G9_28-") + std::to_string(v) + ": " +
                                    (emb ? to_string(*emb) : "none");
                           }
                           return Outcome{ok, s};
                       }});
        out.push_back({"prop.G9_28.labelled-contractions", "the two explicit K6 contractions, in this catalog's labelling",
                       [this] {
                           const Graph& g = get("G9_28");
                           const Graph a = contract_edge(contract_edge(delete_vertices(g, bit_of(9)), Edge{4, 7}), Edge{2, 6});
                           const Graph b = contract_edge(contract_edge(delete_vertices(g, bit_of(7)), Edge{4, 9}), Edge{2, 6});
                           const bool ok = a.order() == 6 && a.size() == 15 && b.order() == 6 && b.size() == 15;
                           return Outcome{ok, "(G9_28-9)/(4,7)/(2,6) " + shape(a) + ", (G9_28-7)/(4,9)/(2,6) " + shape(b)};
                       }});
        return out;
    }

    std::vector<Claim> family_claims()
    {
        std::vector<Claim> out;
        out.push_back({"family.K6", "the Petersen family is the family of K6", [] {
                           const auto fam = family_closure(Graph::complete(6));
                           bool ok = fam.members.size() == 7 && fam.collapse_events == 0;
                           for (const auto& m : fam.members) {
                               ok = ok && m.graph.size() == 15;
                           }
                           for (const Graph& want : {Graph::complete(6), Graph::complete_multipartite({3, 3, 1}),
                                                     k44_minus_edge(), petersen_graph()}) {
                               ok = ok && fam.contains(want);
                           }
                           return Outcome{ok, std::to_string(fam.members.size()) +
                                                  " members, all with 15 edges, containing K6, K3,3,1, K4,4-e, Petersen"};
                       }});
        out.push_back({"family.G10_26", "the family of G10_26 has more than 600 members", [this] {
                           const auto fam = family_closure(get("G10_26"));
                           FamilyLimits strict;
                           strict.convention = YDeltaConvention::forbid_parallel;
                           const auto strict_fam = family_closure(get("G10_26"), strict);
                           const bool ok = fam.members.size() > 600 && strict_fam.members.size() > 600;
                           return Outcome{ok, std::to_string(fam.members.size()) + " members (" +
                                                  std::to_string(fam.collapse_events) +
                                                  " collapsing moves); " + std::to_string(strict_fam.members.size()) +
                                                  " when collapsing moves are skipped"};
                       }});
        return out;
    }

    const Catalog& cat_;
    SearchOptions search_;
    std::map<std::string, MuBounds> mu_cache_;
};

bool selected(const std::string& group, const std::string& id, const std::vector<std::string>& only)
{
    if (only.empty()) {
        return true;
    }
    return std::any_of(only.begin(), only.end(), [&](const std::string& f) {
        return f == group || f == id || (!f.empty() && f.back() == '.' && id.rfind(f, 0) == 0);
    });
}

std::string format_seconds(double s)
{
    std::ostringstream out;
    out << std::fixed << std::setprecision(3) << s;
    return out.str();
}

} // namespace

std::string to_string(ClaimVerdict v)
{
    switch (v) {
    case ClaimVerdict::pass:
        return "PASS";
    case ClaimVerdict::fail:
        return "FAIL";
    case ClaimVerdict::error:
        return "ERROR";
    }
    return "?";
}

bool ClaimReport::passed() const
{
    return std::all_of(claims.begin(), claims.end(), [](const ClaimResult& c) { return c.verdict == ClaimVerdict::pass; });
}

std::size_t ClaimReport::count(ClaimVerdict v) const
{
    return static_cast<std::size_t>(
        std::count_if(claims.begin(), claims.end(), [v](const ClaimResult& c) { return c.verdict == v; }));
}

const std::vector<std::string>& claim_groups()
{
    static const std::vector<std::string> groups = {"catalog", "structure", "nil",  "il",   "derivation",
                                                    "table1",  "orbits",    "mu",   "prop", "family"};
    return groups;
}

std::vector<std::string> claim_ids()
{
    Suite suite(Catalog::standard(), {});
    std::vector<std::string> ids;
    for (auto& [group, claims] : suite.groups()) {
        for (const auto& c : claims) {
            ids.push_back(c.id);
        }
    }
    std::sort(ids.begin(), ids.end());
    return ids;
}

ClaimReport verify_paper(const Catalog& catalog, const VerifyOptions& opts)
{
    Suite suite(catalog, opts.search);
    ClaimReport report;
    for (auto& [group, claims] : suite.groups()) {
        for (auto& claim : claims) {
            if (!selected(group, claim.id, opts.only)) {
                continue;
            }
            if (opts.progress) {
                opts.progress(claim.id);
            }
            ClaimResult r{claim.id, claim.anchor, ClaimVerdict::fail, "", 0.0};
            const auto start = std::chrono::steady_clock::now();
            try {
                Outcome o = claim.run();
                r.verdict = o.ok ? ClaimVerdict::pass : ClaimVerdict::fail;
                r.summary = std::move(o.summary);
            } catch (const SearchBudgetExceeded& ex) {
                r.verdict = ClaimVerdict::error;
                r.summary = ex.what();
            } catch (const std::exception& ex) {
                r.summary = std::string("exception: ") + ex.what();
            }
            r.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
            report.claims.push_back(std::move(r));
        }
    }
    std::sort(report.claims.begin(), report.claims.end(),
              [](const ClaimResult& a, const ClaimResult& b) { return a.id < b.id; });
    return report;
}

std::string render_text(const ClaimReport& report, bool timing)
{
    std::ostringstream out;
    for (const auto& c : report.claims) {
        out << std::left << std::setw(6) << to_string(c.verdict) << c.id << "  [" << c.anchor << "]  " << c.summary
            << "\n";
    }
    out << "\n"
        << report.claims.size() << " claims: " << report.count(ClaimVerdict::pass) << " pass, "
        << report.count(ClaimVerdict::fail) << " fail, " << report.count(ClaimVerdict::error) << " error\n";
    out << "overall: " << (report.passed() ? "PASS" : "FAIL") << "\n";
    if (timing) {
        out << "\ntiming (s):\n";
        double total = 0.0;
        for (const auto& c : report.claims) {
            out << "  " << std::left << std::setw(48) << c.id << format_seconds(c.seconds) << "\n";
            total += c.seconds;
        }
        out << "  " << std::left << std::setw(48) << "total" << format_seconds(total) << "\n";
    }
    return out.str();
}

std::string render_json(const ClaimReport& report, bool timing)
{
    nlohmann::ordered_json j;
    j["overall"] = report.passed() ? "pass" : "fail";
    j["counts"] = {{"pass", report.count(ClaimVerdict::pass)},
                   {"fail", report.count(ClaimVerdict::fail)},
                   {"error", report.count(ClaimVerdict::error)}};
    j["claims"] = nlohmann::ordered_json::array();
    for (const auto& c : report.claims) {
        nlohmann::ordered_json e;
        e["id"] = c.id;
        e["anchor"] = c.anchor;
        e["verdict"] = to_string(c.verdict);
        e["summary"] = c.summary;
        if (timing) {
            e["seconds"] = c.seconds;
        }
        j["claims"].push_back(std::move(e));
    }
    return j.dump(2) + "\n";
}

int exit_status(const ClaimReport& report)
{
    if (report.count(ClaimVerdict::error) > 0) {
        return 3;
    }
    return report.passed() ? 0 : 1;
}

} // namespace ikcert
