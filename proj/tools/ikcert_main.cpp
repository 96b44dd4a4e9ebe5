#include "ikcert/canonical.hpp"
#include "ikcert/catalog.hpp"
#include "ikcert/graph_io.hpp"
#include "ikcert/minor.hpp"
#include "ikcert/moves.hpp"
#include "ikcert/mu_bounds.hpp"
#include "ikcert/planarity.hpp"
#include "ikcert/verifier.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <sstream>

using namespace ikcert;

namespace {

constexpr int kUsage = 2;
constexpr int kBudget = 3;

struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

std::string read_file(const std::string& path)
{
    std::ifstream in(path, std::ios::binary);
    if (!in) {
        throw UsageError("cannot read " + path);
    }
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

Graph parse_any(const std::string& text)
{
    if (looks_like_graph6(text)) {
        return parse_graph6(text);
    }
    auto parsed = parse_edge_list(text);
    if (parsed.duplicate_edges > 0) {
        std::cerr << "warning: " << parsed.duplicate_edges << " duplicate edge(s) collapsed\n";
    }
    return parsed.graph;
}

const Catalog& catalog()
{
    return Catalog::standard();
}

Graph resolve(const std::string& ref)
{
    auto strip = [&](std::string_view prefix) -> std::optional<std::string> {
        if (ref.rfind(prefix, 0) == 0) {
            return ref.substr(prefix.size());
        }
        return std::nullopt;
    };
    if (auto name = strip("@catalog:")) {
        return catalog().get(*name).graph;
    }
    if (auto path = strip("@file:")) {
        return parse_any(read_file(*path));
    }
    if (auto g6 = strip("@g6:")) {
        return parse_graph6(*g6);
    }
    throw UsageError("graph reference must be @catalog:NAME, @file:PATH or @g6:STRING, got '" + ref + "'");
}

// Pattern names may also be bare family or catalog names.
Graph resolve_pattern(const std::string& ref)
{
    if (!ref.empty() && ref[0] == '@') {
        return resolve(ref);
    }
    for (const auto& p : petersen_family()) {
        if (p.name == ref) {
            return p.graph;
        }
    }
    if (ref == "K5" || ref == "K3,3") {
        return kuratowski_pattern(ref == "K5" ? KuratowskiWitness::Kind::k5 : KuratowskiWitness::Kind::k33);
    }
    if (catalog().has(ref)) {
        return catalog().get(ref).graph;
    }
    throw UsageError("unknown pattern '" + ref + "'");
}

std::string set_text(const std::vector<int>& vs)
{
    std::string out = "{";
    for (std::size_t i = 0; i < vs.size(); ++i) {
        out += (i ? "," : "") + std::to_string(vs[i]);
    }
    return out + "}";
}

void print_rotation(const RotationSystem& rot)
{
    for (const auto& [v, around] : rot) {
        std::cout << "  " << v << ":";
        for (int u : around) {
            std::cout << " " << u;
        }
        std::cout << "\n";
    }
}

int cmd_planar(const std::string& ref)
{
    const Graph g = resolve(ref);
    const auto v = is_planar(g);
    if (v.planar) {
        std::cout << "planar\nrotation system:\n";
        print_rotation(*v.embedding);
    } else {
        std::cout << "non-planar\n"
                  << (v.obstruction->kind == KuratowskiWitness::Kind::k5 ? "K5" : "K3,3")
                  << " minor: " << to_string(v.obstruction->embedding) << "\n";
    }
    return 0;
}

int cmd_apex(const std::string& ref, int k)
{
    const Graph g = resolve(ref);
    ApexSearchStats stats;
    const auto cert = apex_at_most(g, k, &stats);
    if (cert) {
        std::cout << cert->removed.size() << "-apex: removing " << set_text(cert->removed) << " leaves a planar graph\n";
    } else {
        std::cout << "not " << k << "-apex\n";
    }
    std::cout << "subsets tested: " << stats.subsets_tested << ", planarity tests: " << stats.planarity_tests << "\n";
    return 0;
}

int cmd_minor(const std::string& ref, const std::string& pattern, const SearchOptions& opts)
{
    const Graph g = resolve(ref);
    const Graph p = resolve_pattern(pattern);
    MinorSearchStats stats;
    const auto emb = has_minor(g, p, opts, &stats);
    if (emb) {
        std::cout << "minor\n" << to_string(*emb) << "\n";
    } else {
        std::cout << "no minor\n";
    }
    std::cout << "search nodes: " << stats.nodes << "\n";
    return 0;
}

int cmd_nil(const std::string& ref, const SearchOptions& opts)
{
    const Graph g = resolve(ref);
    const auto cert = certify_nil(g, opts);
    std::cout << (cert.nil() ? "nIL" : "not nIL") << "\n";
    for (const auto& v : cert.verdicts) {
        std::cout << "  " << v.pattern << ": " << (v.embedding ? to_string(*v.embedding) : "no minor") << "\n";
    }
    return 0;
}

int cmd_family(const std::string& ref, const FamilyLimits& limits, const std::string& emit)
{
    const Graph g = resolve(ref);
    const auto fam = family_closure(g, limits, [](std::size_t members, std::size_t frontier) {
        if (members % 1000 == 0) {
            std::cerr << "family: " << members << " members, frontier " << frontier << "\n";
        }
    });
    std::cout << "members: " << fam.members.size() << "\n";
    std::cout << "convention: " << (limits.convention == YDeltaConvention::collapse ? "collapse" : "forbid-collapse")
              << ", collapsing moves: " << fam.collapse_events << ", skipped moves: " << fam.skipped_moves << "\n";
    std::cout << "by (order,size):\n";
    for (const auto& [key, count] : fam.stats) {
        std::cout << "  (" << key.first << "," << key.second << "): " << count << "\n";
    }
    if (!emit.empty()) {
        std::ofstream out(emit);
        if (!out) {
            throw UsageError("cannot write " + emit);
        }
        for (const auto& m : fam.members) {
            out << m.form.key() << "\n";
        }
    }
    return 0;
}

int cmd_mu(const std::string& ref, const SearchOptions& opts)
{
    const Graph g = resolve(ref);
    MuOptions mo;
    mo.search = opts;
    const auto b = mu_bounds(g, mo);
    std::cout << "mu in " << b.interval() << "\n" << describe(b, 2);
    return 0;
}

int cmd_catalog_list()
{
    for (const auto& name : catalog().names()) {
        const auto& ng = catalog().get(name);
        std::cout << name << "\t(" << ng.graph.order() << "," << ng.graph.size() << ")\t" << to_string(ng.provenance)
                  << "\n";
    }
    return 0;
}

int cmd_catalog_show(const std::string& name, const std::string& format)
{
    const Graph& g = catalog().get(name).graph;
    if (format == "graph6") {
        std::cout << write_graph6(g) << "\n";
    } else {
        std::cout << write_edge_list(g);
    }
    return 0;
}

AppendixData apply_overrides(const std::vector<std::string>& overrides)
{
    AppendixData data = AppendixData::published();
    for (const auto& o : overrides) {
        const auto eq = o.find('=');
        if (eq == std::string::npos) {
            throw UsageError("override must be NAME=@file:PATH, got '" + o + "'");
        }
        const std::string name = o.substr(0, eq);
        const std::string ref = o.substr(eq + 1);
        if (ref.rfind("@file:", 0) != 0) {
            throw UsageError("override source must be @file:PATH");
        }
        const std::string text = read_file(ref.substr(6));
        if (name == "G11_35") {
            data.g11_35 = text;
        } else if (name == "G10_30") {
            data.g10_30 = text;
        } else if (name == "G10_26") {
            data.g10_26 = text;
        } else {
            throw UsageError("only G11_35, G10_30 and G10_26 can be overridden");
        }
    }
    return data;
}

int cmd_verify(const std::vector<std::string>& only, bool json, bool timing, const std::vector<std::string>& overrides,
               const SearchOptions& opts)
{
    std::optional<Catalog> custom;
    if (!overrides.empty()) {
        custom.emplace(apply_overrides(overrides));
    }
    const Catalog& cat = custom ? *custom : Catalog::standard();

    VerifyOptions vo;
    vo.search = opts;
    for (const auto& f : only) {
        std::stringstream ss(f);
        std::string part;
        while (std::getline(ss, part, ',')) {
            if (!part.empty()) {
                vo.only.push_back(part);
            }
        }
    }
    if (!vo.only.empty()) {
        const auto ids = claim_ids();
        const auto& groups = claim_groups();
        for (const auto& f : vo.only) {
            const bool known = std::find(groups.begin(), groups.end(), f) != groups.end() ||
                               std::any_of(ids.begin(), ids.end(), [&](const std::string& id) {
                                   return id == f || (f.back() == '.' && id.rfind(f, 0) == 0);
                               });
            if (!known) {
                throw UsageError("--only: no claim or group matches '" + f + "'");
            }
        }
    }
    vo.progress = [](const std::string& id) { std::cerr << "verify: " << id << "\n"; };
    const auto report = verify_paper(cat, vo);
    std::cout << (json ? render_json(report, timing) : render_text(report, timing));
    return exit_status(report);
}

} // namespace

int main(int argc, char** argv)
{
    CLI::App app{"Certificates for planarity, apex, minor, linkless-embedding and mu-bound claims", "ikcert"};
    app.require_subcommand(1);
    app.fallthrough();
    std::uint64_t budget = 0;
    app.add_option("--node-budget", budget, "Abort minor searches after this many nodes (0 = unlimited)");

    std::function<int()> action;

    auto* check = app.add_subcommand("check", "Certify a single property");
    check->require_subcommand(1);
    check->fallthrough();
    std::string ref;
    auto* planar = check->add_subcommand("planar", "Planarity with witness");
    planar->add_option("graph", ref, "Graph reference")->required();
    planar->callback([&] { action = [&] { return cmd_planar(ref); }; });

    int k = 0;
    auto* apex = check->add_subcommand("apex", "Least apex set of size at most k");
    apex->add_option("--k", k, "Maximum number of removed vertices")->required()->check(CLI::NonNegativeNumber);
    apex->add_option("graph", ref, "Graph reference")->required();
    apex->callback([&] { action = [&] { return cmd_apex(ref, k); }; });

    std::string pattern;
    auto* minor = check->add_subcommand("minor", "Minor containment with branch sets");
    minor->add_option("--pattern", pattern, "Family/catalog name or graph reference")->required();
    minor->add_option("graph", ref, "Host graph reference")->required();
    minor->callback([&] { action = [&] { return cmd_minor(ref, pattern, SearchOptions{budget}); }; });

    auto* nil = check->add_subcommand("nil", "Petersen-family minor test");
    nil->add_option("graph", ref, "Graph reference")->required();
    nil->callback([&] { action = [&] { return cmd_nil(ref, SearchOptions{budget}); }; });

    FamilyLimits limits;
    std::string emit;
    bool forbid = false;
    auto* family = app.add_subcommand("family", "Closure under Delta-Y and Y-Delta moves");
    family->add_option("graph", ref, "Seed graph reference")->required();
    family->add_option("--max-members", limits.max_members, "Error out beyond this many members");
    family->add_option("--max-order", limits.max_order, "Error out on members larger than this");
    family->add_option("--emit", emit, "Write members as canonical graph6, sorted");
    family->add_flag("--forbid-collapse", forbid, "Skip Y-Delta moves that would create parallel edges");
    family->callback([&] {
        if (forbid) {
            limits.convention = YDeltaConvention::forbid_parallel;
        }
        action = [&] { return cmd_family(ref, limits, emit); };
    });

    auto* mu = app.add_subcommand("mu", "Bounds on the Colin de Verdiere invariant");
    mu->add_option("graph", ref, "Graph reference")->required();
    mu->callback([&] { action = [&] { return cmd_mu(ref, SearchOptions{budget}); }; });

    auto* cat = app.add_subcommand("catalog", "Named graphs");
    cat->require_subcommand(1);
    auto* list = cat->add_subcommand("list", "List names");
    list->callback([&] { action = [] { return cmd_catalog_list(); }; });
    std::string name;
    std::string format = "edgelist";
    auto* show = cat->add_subcommand("show", "Print one graph");
    show->add_option("name", name, "Catalog name")->required();
    show->add_option("--format", format, "edgelist or graph6")->check(CLI::IsMember({"edgelist", "graph6"}));
    show->callback([&] { action = [&] { return cmd_catalog_show(name, format); }; });

    std::vector<std::string> only;
    std::vector<std::string> overrides;
    bool json = false;
    bool no_timing = false;
    auto* verify = app.add_subcommand("verify-paper", "Replay every claim against the catalog");
    verify->add_option("--only", only, "Groups, claim ids, or id prefixes ending in '.'");
    verify->add_flag("--json", json, "Emit JSON instead of text");
    verify->add_flag("--no-timing", no_timing, "Omit timings (byte-stable output)");
    verify->add_option("--override", overrides, "Replace an appendix list: NAME=@file:PATH");
    verify->callback([&] { action = [&] { return cmd_verify(only, json, !no_timing, overrides, SearchOptions{budget}); }; });

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kUsage;
    }

    try {
        return action();
    } catch (const SearchBudgetExceeded& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kBudget;
    } catch (const UsageError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kUsage;
    } catch (const GraphError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kUsage;
    } catch (const CatalogError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kUsage;
    } catch (const FamilyLimitExceeded& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kBudget;
    } catch (const std::exception& e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return 1;
    }
}
