// One PASS/FAIL line per acceptance criterion, each with its runtime limit.
#include "ikcert/canonical.hpp"
#include "ikcert/catalog.hpp"
#include "ikcert/graph_io.hpp"
#include "ikcert/minor.hpp"
#include "ikcert/moves.hpp"
#include "ikcert/mu_bounds.hpp"
#include "ikcert/planarity.hpp"
#include "ikcert/verifier.hpp"
#include "oracles.hpp"

#include <chrono>
#include <cstdio>
#include <functional>
#include <string>

using namespace ikcert;

namespace {

struct Criterion {
    int number;
    const char* title;
    double limit_seconds;
    std::function<bool(std::string&)> check;
};

const Graph& named(const char* n)
{
    return Catalog::standard().get(n).graph;
}

bool verifier_group(const std::string& group, std::string& note)
{
    VerifyOptions opts;
    opts.only = {group};
    const auto report = verify_paper(Catalog::standard(), opts);
    note += group + " claims " + std::to_string(report.count(ClaimVerdict::pass)) + "/" +
            std::to_string(report.claims.size());
    for (const auto& c : report.claims) {
        if (c.verdict != ClaimVerdict::pass) {
            note += " [" + c.id + ": " + to_string(c.verdict) + "]";
        }
    }
    return !report.claims.empty() && report.passed();
}

bool shape(const Graph& g, int n, int m)
{
    return g.order() == n && g.size() == m;
}

bool has_valid_minor(const Graph& host, const Graph& pattern)
{
    const auto emb = has_minor(host, pattern);
    return emb && validate_minor_embedding(host, pattern, *emb);
}

const Graph& family_member(const std::string& name)
{
    for (const auto& p : petersen_family()) {
        if (p.name == name) {
            return p.graph;
        }
    }
    throw std::runtime_error("no family member " + name);
}

bool c1(std::string& note)
{
    const auto p = AppendixData::published();
    const bool ok = shape(parse_edge_list(p.g11_35).graph, 11, 35) && shape(parse_edge_list(p.g10_30).graph, 10, 30) &&
                    shape(parse_edge_list(p.g10_26).graph, 10, 26) && Catalog::standard().problems().empty();
    note = "appendix shapes (11,35) (10,30) (10,26)";
    return ok;
}

bool c2(std::string& note)
{
    const Graph& m = named("M");
    const VertexMask s = mask_of({3, 4, 5, 6});
    const auto [h, k] = split_clique_sum(m, s);
    const Graph hp = delete_vertices(h, bit_of(4));
    const Graph kp = delete_vertices(k, bit_of(5));
    const auto iso = is_isomorphic(clique_sum(h, k, s), m);
    note = "H-4 " + std::to_string(hp.order()) + "/" + std::to_string(hp.size()) + ", K-5 " +
           std::to_string(kp.order()) + "/" + std::to_string(kp.size());
    return m.is_clique(s) && delete_vertices(m, s).components().size() == 2 && shape(hp, 7, 15) &&
           is_maximal_planar(hp) && shape(kp, 6, 12) && is_maximal_planar(kp) && iso.isomorphic &&
           validate_isomorphism(clique_sum(h, k, s), m, *iso.witness);
}

bool c3(std::string& note)
{
    const Graph& g = named("G11_35");
    const Graph del = delete_edge(g, {2, 11});
    bool ok = true;
    for (const Graph& x : {named("M"), contract_edge(g, {2, 3}), del, contract_edge(named("G10_30"), {2, 6})}) {
        const auto cert = certify_nil(x);
        ok = ok && cert.nil() && validate_nil_certificate(x, cert);
    }
    const Graph y = delta_y(g, {2, 3, 11});
    const int xv = g.least_unused_label();
    const Graph back = contract_edge(y, {3, xv});
    ok = ok && is_isomorphic(back, del).isomorphic;
    note = "four nIL verdicts; Delta-Y(2,3,11)/(" + std::to_string(xv) + ",3) vs G11_35-(2,11)";
    return ok;
}

bool c4(std::string& note)
{
    bool ok = true;
    for (const char* n : {"G11_35", "G10_30", "G10_26"}) {
        const auto cert = certify_nil(named(n));
        ok = ok && !cert.nil() && validate_nil_certificate(named(n), cert);
    }
    const Graph& g = named("G10_26");
    ok = ok && has_valid_minor(g, Graph::complete_multipartite({3, 3, 1})) && has_valid_minor(g, oracle::k44_minus_edge()) &&
         has_valid_minor(g, family_member("G7"));
    note = "Petersen-family minors with validated embeddings";
    return ok;
}

bool c5(std::string& note)
{
    Graph g = contract_edge(named("G11_35"), {2, 11});
    for (Edge e : {Edge{2, 3}, Edge{2, 5}, Edge{2, 6}, Edge{3, 5}, Edge{3, 6}, Edge{4, 10}, Edge{5, 6}}) {
        g = delete_edge(g, e);
    }
    note = "canonical key " + canonical_form(g).key();
    return canonical_form(g) == canonical_form(named("G10_26"));
}

bool c6(std::string& note)
{
    const Graph d45 = delete_edge(named("G10_26"), {4, 5});
    ApexSearchStats stats;
    const bool not_two_apex = !apex_at_most(d45, 2, &stats) && stats.subsets_tested == 56;
    const Graph rep = delete_vertices(delta_y(d45, {1, 5, 9}), mask_of({2, 11}));
    const auto pv = is_planar(rep);
    const bool repaired = pv.planar && validate_planarity_verdict(rep, pv);
    const bool table = verifier_group("table1", note);
    note += ", (4,5) subsets " + std::to_string(stats.subsets_tested);
    return not_two_apex && repaired && table;
}

bool c7(std::string& note)
{
    const auto o = orbits(named("G10_26"));
    note = std::to_string(o.vertex_orbits.size()) + " vertex orbits, " + std::to_string(o.edge_orbits.size()) +
           " edge orbits";
    return o.vertex_orbits == std::vector<std::vector<int>>{{1, 8}, {2, 3}, {4}, {5, 6}, {7, 10}, {9}} &&
           o.edge_orbits.size() == 11;
}

bool c8(std::string& note)
{
    auto exact = [](const MuBounds& b, int v) { return b.lo == v && b.hi == v; };
    auto uses = [](const MuBounds& b, const char* r) {
        return std::any_of(b.trace.begin(), b.trace.end(), [&](const MuStep& s) { return s.rule == r; });
    };
    const auto k7 = mu_bounds(named("K7"));
    const auto k3311 = mu_bounds(named("K3311"));
    const auto g11 = mu_bounds(named("G11_35"));
    const auto g10 = mu_bounds(named("G10_30"));
    MuOptions opts;
    opts.contexts.push_back({"G11_35", named("G11_35"), g11});
    const auto g26 = mu_bounds(named("G10_26"), opts);
    note = "K7 " + k7.interval() + " K3311 " + k3311.interval() + " G11_35 " + g11.interval() + " G10_30 " +
           g10.interval() + " G10_26 " + g26.interval();
    return exact(k7, 6) && exact(k3311, 6) && exact(g11, 5) && uses(g11, "R2") && uses(g11, "R6") && exact(g10, 5) &&
           uses(g10, "R2") && uses(g10, "R6") && exact(g26, 5) && uses(g26, "R2") && uses(g26, "MONO") &&
           g26.hi <= g11.hi && revalidate_mu_bounds(named("G10_26"), g26);
}

bool c9(std::string& note)
{
    const Graph& g = named("G9_28");
    std::map<std::string, int> classes;
    for (int v : g.vertices()) {
        classes[canonical_form(delete_vertices(g, bit_of(v))).key()] = v;
    }
    bool ok = classes.size() == 2;
    for (const auto& [key, v] : classes) {
        const Graph sub = delete_vertices(g, bit_of(v));
        ok = ok && has_valid_minor(sub, Graph::complete(6)) && !certify_nil(sub).nil();
    }
    note = std::to_string(classes.size()) + " classes, each with a K6 minor";
    return ok;
}

bool c10(std::string& note)
{
    const auto k6 = family_closure(Graph::complete(6));
    bool ok = k6.members.size() == 7 && k6.contains(Graph::complete(6)) &&
              k6.contains(Graph::complete_multipartite({3, 3, 1})) && k6.contains(oracle::k44_minus_edge()) &&
              k6.contains(oracle::petersen());
    for (const auto& m : k6.members) {
        ok = ok && m.graph.size() == 15;
    }
    const auto big = family_closure(named("G10_26"));
    FamilyLimits strict;
    strict.convention = YDeltaConvention::forbid_parallel;
    const auto simple = family_closure(named("G10_26"), strict);
    note = "K6 family " + std::to_string(k6.members.size()) + ", G10_26 family " + std::to_string(big.members.size()) +
           " (" + std::to_string(simple.members.size()) + " without parallel-edge collapse)";
    return ok && big.members.size() > 600;
}

bool c11(std::string& note)
{
    std::mt19937 rng(20240611);
    int disagreements = 0;

    int relabels = 0;
    const auto& cat = Catalog::standard();
    for (const auto& name : cat.names()) {
        const Graph& g = cat.get(name).graph;
        const auto base = canonical_form(g);
        for (int i = 0; i < 50; ++i) {
            disagreements += canonical_form(oracle::random_relabel(rng, g).first) == base ? 0 : 1;
            ++relabels;
        }
    }

    int minor_cases = 0;
    std::uniform_int_distribution<int> small(3, 7);
    for (int i = 0; i < 200; ++i) {
        const Graph host = oracle::random_graph(rng, small(rng), 0.5);
        const Graph pattern = oracle::random_graph(rng, 2 + i % 4, 0.6);
        const auto got = has_minor(host, pattern);
        disagreements += got.has_value() == oracle::has_minor(host, pattern) ? 0 : 1;
        if (got && !validate_minor_embedding(host, pattern, *got)) {
            ++disagreements;
        }
        ++minor_cases;
    }

    int planar_cases = 0;
    const Graph k5 = Graph::complete(5);
    const Graph k33 = Graph::complete_multipartite({3, 3});
    std::uniform_int_distribution<int> mid(5, 9);
    for (int i = 0; i < 200; ++i) {
        const Graph g = oracle::random_graph(rng, mid(rng), 0.45);
        const auto v = is_planar(g);
        const bool kuratowski = has_minor(g, k5) || has_minor(g, k33);
        disagreements += (v.planar == !kuratowski && validate_planarity_verdict(g, v)) ? 0 : 1;
        ++planar_cases;
    }

    int apex_certs = 0;
    for (int i = 0; i < 100; ++i) {
        const Graph g = oracle::random_graph(rng, 6 + i % 4, 0.7);
        if (const auto c = apex_at_most(g, 2)) {
            disagreements += validate_apex_certificate(g, *c) ? 0 : 1;
            ++apex_certs;
        }
    }
    const Graph& g26 = named("G10_26");
    for (const Edge& e : g26.edges()) {
        for (const Graph& x : {delete_edge(g26, e), contract_edge(g26, e)}) {
            if (const auto c = apex_at_most(x, 2)) {
                disagreements += validate_apex_certificate(x, *c) ? 0 : 1;
                ++apex_certs;
            }
        }
    }

    note = std::to_string(relabels) + " relabellings, " + std::to_string(minor_cases) + " minor cases, " +
           std::to_string(planar_cases) + " planarity cases, " + std::to_string(apex_certs) +
           " apex certificates, " + std::to_string(disagreements) + " disagreements";
    return relabels >= 1000 && disagreements == 0;
}

} // namespace

int main()
{
    const std::vector<Criterion> criteria = {
        {1, "catalog integrity", 1, c1},
        {2, "clique-sum structure of M", 1, c2},
        {3, "nIL certifications", 120, c3},
        {4, "IL lower bounds", 300, c4},
        {5, "G10_26 derivation", 1, c5},
        {6, "2-apex table", 60, c6},
        {7, "G10_26 orbits", 10, c7},
        {8, "mu intervals", 300, c8},
        {9, "G9_28 order-8 subgraphs", 30, c9},
        {10, "family closures", 1800, c10},
        {11, "property suites", 600, c11},
    };
    int failures = 0;
    for (const auto& c : criteria) {
        const auto start = std::chrono::steady_clock::now();
        std::string note;
        bool ok = false;
        try {
            ok = c.check(note);
        } catch (const std::exception& ex) {
            note = std::string("exception: ") + ex.what();
        }
        const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        const bool in_time = secs < c.limit_seconds;
        if (!in_time) {
            note += " (over time)";
        }
        const bool pass = ok && in_time;
        failures += pass ? 0 : 1;
        std::printf("%s %2d %-28s %8.3fs / %.0fs  %s\n", pass ? "PASS" : "FAIL", c.number, c.title, secs,
                    c.limit_seconds, note.c_str());
        std::fflush(stdout);
    }
    return failures == 0 ? 0 : 1;
}
