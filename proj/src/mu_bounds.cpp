#include "ikcert/mu_bounds.hpp"

#include "ikcert/canonical.hpp"

#include <algorithm>
#include <sstream>

namespace ikcert {

namespace {

constexpr int kInf = MuBounds::kUnbounded;

int plus_one(int v)
{
    return v == kInf ? kInf : v + 1;
}

std::string bound_text(int v)
{
    return v == kInf ? "inf" : std::to_string(v);
}

std::string list_text(const std::vector<int>& vs)
{
    std::string out = "{";
    for (std::size_t i = 0; i < vs.size(); ++i) {
        out += (i ? "," : "") + std::to_string(vs[i]);
    }
    return out + "}";
}

void record(MuBounds& b, MuStep step)
{
    b.lo = std::max(b.lo, step.lo);
    b.hi = std::min(b.hi, step.hi);
    b.trace.push_back(std::move(step));
    if (b.lo > b.hi) {
        throw MuSoundnessError("mu bounds crossed: " + b.interval() + " after rule " + b.trace.back().rule);
    }
}

std::optional<int> dominating_vertex(const Graph& g)
{
    for (int v : g.vertices()) {
        if (g.degree(v) == g.order() - 1) {
            return v;
        }
    }
    return std::nullopt;
}

bool independent_neighbours(const Graph& g, int v)
{
    const auto nb = g.neighbors(v);
    return !g.has_edge(nb[0], nb[1]) && !g.has_edge(nb[0], nb[2]) && !g.has_edge(nb[1], nb[2]);
}

Graph simple_minor(const Graph& g, Edge e, bool contracted)
{
    return contracted ? contract_edge(g, e) : delete_edge(g, e);
}

std::string edge_op_text(Edge e, bool contracted)
{
    return std::string(contracted ? "/" : "-") + to_string(e);
}

} // namespace

std::string MuBounds::interval() const
{
    return "[" + bound_text(lo) + "," + bound_text(hi) + "]";
}

MuBounds mu_bounds(const Graph& g, const MuOptions& opts)
{
    if (g.order() == 0) {
        throw GraphError("mu_bounds: graph has no vertices");
    }
    MuBounds b;

    if (g.size() == 0) {
        MuStep s;
        s.rule = "BASE";
        s.lo = s.hi = g.order() == 1 ? 0 : 1;
        s.summary = "edgeless graph, convention mu(K1)=0 and mu=1 with two or more vertices";
        record(b, std::move(s));
        return b;
    }

    // R5: peel a dominating vertex
    if (auto v = dominating_vertex(g)) {
        Graph rest = delete_vertices(g, bit_of(*v));
        if (rest.size() > 0) {
            auto sub = std::make_shared<MuBounds>(mu_bounds(rest, opts));
            MuStep s;
            s.rule = "R5";
            s.lo = plus_one(sub->lo);
            s.hi = plus_one(sub->hi);
            s.vertex = *v;
            s.summary = "vertex " + std::to_string(*v) + " dominates; bounds of g-" + std::to_string(*v) + " " +
                        sub->interval() + " plus one";
            s.sub = std::move(sub);
            record(b, std::move(s));
        }
    }

    // R1
    {
        auto verdict = is_planar(g);
        MuStep s;
        s.rule = "R1";
        if (verdict.planar) {
            s.lo = 0;
            s.hi = 3;
            s.summary = "planar (rotation system, Euler check)";
        } else {
            s.lo = 4;
            s.hi = kInf;
            s.summary = std::string("non-planar, ") +
                        (verdict.obstruction->kind == KuratowskiWitness::Kind::k5 ? "K5" : "K3,3") + " minor " +
                        to_string(verdict.obstruction->embedding);
        }
        s.planarity = std::move(verdict);
        record(b, std::move(s));
    }

    // R2
    if (b.hi > 4 && b.lo < 5) {
        auto cert = certify_nil(g, opts.search);
        MuStep s;
        s.rule = "R2";
        if (cert.nil()) {
            s.lo = 0;
            s.hi = 4;
            s.summary = "no Petersen-family minor (7 exhaustive searches)";
            s.nil = std::move(cert);
        } else {
            s.lo = 5;
            s.hi = kInf;
            for (auto& v : cert.verdicts) {
                if (v.embedding) {
                    for (const auto& p : petersen_family()) {
                        if (p.name == v.pattern) {
                            s.pattern = p.graph;
                        }
                    }
                    s.summary = v.pattern + " minor " + to_string(*v.embedding);
                    s.embedding = std::move(v.embedding);
                    break;
                }
            }
        }
        record(b, std::move(s));
    }

    // R3: least apex number that still helps
    if (b.hi > 3) {
        const int kmax = b.hi == kInf ? g.order() : std::min(g.order(), b.hi - 4);
        if (kmax >= 0) {
            if (auto cert = apex_at_most(g, kmax)) {
                MuStep s;
                s.rule = "R3";
                const int k = static_cast<int>(cert->removed.size());
                s.lo = 0;
                s.hi = k + 3;
                s.summary = std::to_string(k) + "-apex, removing " + list_text(cert->removed) + " leaves a planar graph";
                s.apex = std::move(cert);
                record(b, std::move(s));
            }
        }
    }

    // R6: a nIL simple minor
    if (b.lo >= 5 && b.hi > 5) {
        const auto edges = g.edges();
        bool done = false;
        for (bool contracted : {false, true}) {
            for (std::size_t i = 0; i < edges.size() && !done; ++i) {
                const Graph m = simple_minor(g, edges[i], contracted);
                auto cert = certify_nil(m, opts.search);
                if (cert.nil()) {
                    MuStep s;
                    s.rule = "R6";
                    s.lo = 0;
                    s.hi = 5;
                    s.edge = edges[i];
                    s.contracted = contracted;
                    s.summary = "simple minor g" + edge_op_text(edges[i], contracted) + " is nIL";
                    s.nil = std::move(cert);
                    record(b, std::move(s));
                    done = true;
                }
            }
            if (done) {
                break;
            }
        }
    }

    // MONO
    for (const auto& ctx : opts.contexts) {
        if (ctx.bounds.hi < b.hi) {
            if (auto emb = has_minor(ctx.graph, g, opts.search)) {
                MuStep s;
                s.rule = "MONO";
                s.lo = 0;
                s.hi = ctx.bounds.hi;
                s.summary = "minor of " + ctx.name + " " + ctx.bounds.interval() + " via " + to_string(*emb);
                s.embedding = std::move(emb);
                s.pattern = g;
                s.context = ctx.name;
                s.context_graph = ctx.graph;
                s.sub = std::make_shared<MuBounds>(ctx.bounds);
                record(b, std::move(s));
            }
        }
        if (ctx.bounds.lo > b.lo) {
            if (auto emb = has_minor(g, ctx.graph, opts.search)) {
                MuStep s;
                s.rule = "MONO";
                s.lo = ctx.bounds.lo;
                s.hi = kInf;
                s.summary = "has " + ctx.name + " " + ctx.bounds.interval() + " as a minor via " + to_string(*emb);
                s.embedding = std::move(emb);
                s.pattern = ctx.graph;
                s.context = ctx.name;
                s.context_graph = ctx.graph;
                s.sub = std::make_shared<MuBounds>(ctx.bounds);
                record(b, std::move(s));
            }
        }
    }

    // R4: largest complete minor that can still raise lo
    {
        std::optional<MuStep> best;
        for (int n = std::max(2, b.lo + 2); n <= g.order() && n - 1 <= b.hi && n * (n - 1) / 2 <= g.size(); ++n) {
            const Graph kn = Graph::complete(n);
            auto emb = has_minor(g, kn, opts.search);
            if (!emb) {
                break;
            }
            MuStep s;
            s.rule = "R4";
            s.lo = n - 1;
            s.hi = kInf;
            s.summary = "K" + std::to_string(n) + " minor " + to_string(*emb);
            s.pattern = kn;
            s.embedding = std::move(emb);
            best = std::move(s);
        }
        if (best) {
            record(b, std::move(*best));
        }
    }

    // R7: g arises from a Delta-Y move on y_delta(g, v)
    if (b.lo < b.hi && opts.delta_y_depth > 0) {
        MuOptions inner = opts;
        inner.delta_y_depth = opts.delta_y_depth - 1;
        for (int v : degree_three_vertices(g)) {
            if (b.lo == b.hi) {
                break;
            }
            if (!independent_neighbours(g, v)) {
                continue;
            }
            const Graph pre = y_delta(g, v);
            auto sub = std::make_shared<MuBounds>(mu_bounds(pre, inner));
            if (sub->lo < 4 || (sub->lo <= b.lo && sub->hi >= b.hi)) {
                continue;
            }
            MuStep s;
            s.rule = "R7";
            s.lo = sub->lo;
            s.hi = sub->hi;
            s.vertex = v;
            s.summary = "Delta-Y image of y_delta(g," + std::to_string(v) + ") with bounds " + sub->interval();
            s.sub = std::move(sub);
            record(b, std::move(s));
        }
    }

    return b;
}

MuBounds transfer_delta_y(const Graph& pre, const MuBounds& pre_bounds, std::array<int, 3> triangle)
{
    if (pre_bounds.lo < 4) {
        throw GraphError("transfer_delta_y: needs lower bound at least 4, have " + pre_bounds.interval());
    }
    delta_y(pre, triangle); // validates the triangle
    const int centre = pre.least_unused_label();
    MuBounds b;
    MuStep s;
    s.rule = "R7";
    s.lo = pre_bounds.lo;
    s.hi = pre_bounds.hi;
    s.vertex = centre;
    s.summary = "Delta-Y image of y_delta(g," + std::to_string(centre) + ") with bounds " + pre_bounds.interval();
    s.sub = std::make_shared<MuBounds>(pre_bounds);
    record(b, std::move(s));
    return b;
}

bool revalidate_mu_bounds(const Graph& g, const MuBounds& bounds, const SearchOptions& opts)
{
    int lo = 0;
    int hi = kInf;
    for (const MuStep& s : bounds.trace) {
        lo = std::max(lo, s.lo);
        hi = std::min(hi, s.hi);
        bool ok = false;
        if (s.rule == "BASE") {
            ok = g.size() == 0 && s.lo == s.hi && s.lo == (g.order() == 1 ? 0 : 1);
        } else if (s.rule == "R1") {
            ok = s.planarity && validate_planarity_verdict(g, *s.planarity) &&
                 (s.planarity->planar ? s.hi == 3 && s.lo == 0 : s.lo == 4 && s.hi == kInf);
        } else if (s.rule == "R2") {
            if (s.nil) {
                ok = s.hi == 4 && s.lo == 0 && s.nil->nil() && validate_nil_certificate(g, *s.nil) &&
                     certify_nil(g, opts).nil();
            } else {
                const auto& fam = petersen_family();
                ok = s.lo == 5 && s.hi == kInf && s.pattern && s.embedding &&
                     std::any_of(fam.begin(), fam.end(),
                                 [&](const FamilyPattern& p) { return is_isomorphic(p.graph, *s.pattern).isomorphic; }) &&
                     validate_minor_embedding(g, *s.pattern, *s.embedding);
            }
        } else if (s.rule == "R3") {
            ok = s.apex && validate_apex_certificate(g, *s.apex) && s.lo == 0 &&
                 s.hi == static_cast<int>(s.apex->removed.size()) + 3;
        } else if (s.rule == "R4") {
            ok = s.pattern && s.embedding && s.pattern->size() == s.pattern->order() * (s.pattern->order() - 1) / 2 &&
                 s.lo == s.pattern->order() - 1 && s.hi == kInf && validate_minor_embedding(g, *s.pattern, *s.embedding);
        } else if (s.rule == "R5") {
            ok = s.sub && g.has_vertex(s.vertex) && g.degree(s.vertex) == g.order() - 1 && s.lo == plus_one(s.sub->lo) &&
                 s.hi == plus_one(s.sub->hi) && revalidate_mu_bounds(delete_vertices(g, bit_of(s.vertex)), *s.sub, opts);
        } else if (s.rule == "R6") {
            if (s.edge && s.nil && g.has_edge(s.edge->u, s.edge->v) && s.hi == 5 && s.lo == 0) {
                const Graph m = simple_minor(g, *s.edge, s.contracted);
                ok = s.nil->nil() && validate_nil_certificate(m, *s.nil) && certify_nil(m, opts).nil();
            }
        } else if (s.rule == "R7") {
            if (s.sub && g.has_vertex(s.vertex) && g.degree(s.vertex) == 3 && independent_neighbours(g, s.vertex) &&
                s.sub->lo >= 4 && s.lo == s.sub->lo && s.hi == s.sub->hi) {
                const Graph pre = y_delta(g, s.vertex);
                const auto nb = g.neighbors(s.vertex);
                ok = is_isomorphic(delta_y(pre, {nb[0], nb[1], nb[2]}), g).isomorphic &&
                     revalidate_mu_bounds(pre, *s.sub, opts);
            }
        } else if (s.rule == "MONO") {
            if (s.sub && s.context_graph && s.pattern && s.embedding && revalidate_mu_bounds(*s.context_graph, *s.sub, opts)) {
                if (s.lo == 0) {
                    ok = s.hi == s.sub->hi && *s.pattern == g && validate_minor_embedding(*s.context_graph, g, *s.embedding);
                } else {
                    ok = s.hi == kInf && s.lo == s.sub->lo && validate_minor_embedding(g, *s.context_graph, *s.embedding);
                }
            }
        }
        if (!ok) {
            return false;
        }
    }
    return lo == bounds.lo && hi == bounds.hi && lo <= hi;
}

std::string describe(const MuBounds& bounds, int indent)
{
    std::ostringstream out;
    const std::string pad(static_cast<std::size_t>(indent), ' ');
    for (const MuStep& s : bounds.trace) {
        out << pad << s.rule << " " << "[" << bound_text(s.lo) << "," << bound_text(s.hi) << "] " << s.summary << "\n";
        if (s.sub && s.rule != "MONO") {
            out << describe(*s.sub, indent + 4);
        }
    }
    return out.str();
}

} // namespace ikcert
