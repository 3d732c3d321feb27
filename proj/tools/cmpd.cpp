// Command-line front end: parses .cmp files, dispatches to the library and
// prints one JSON report per invocation. Exit codes: 0 definite answers,
// 2 Unknown/Timeout results, 1 errors.

#include <fstream>
#include <iostream>

#include <CLI11.hpp>
#include <json.hpp>

#include "cmpd/category_table.hpp"
#include "cmpd/cw.hpp"
#include "cmpd/deficiency.hpp"
#include "cmpd/fixtures.hpp"
#include "cmpd/format.hpp"
#include "cmpd/presentation.hpp"
#include "cmpd/randomgen.hpp"

using json = nlohmann::ordered_json;
using namespace cmpd;

namespace {

struct Limits {
    KbLimits kb;
    TcLimits tc;
    FairLimits fair;
};

Limits parse_limits(const std::string& spec) {
    Limits l;
    if (spec.empty())
        return l;
    std::string cur;
    auto apply = [&](const std::string& kv) {
        auto eq = kv.find('=');
        if (eq == std::string::npos)
            fail(Errc::ParseError, "--limits expects key=value pairs");
        std::string key = kv.substr(0, eq);
        long long value = std::stoll(kv.substr(eq + 1));
        if (key == "tc")
            l.tc.max_cosets = static_cast<int>(value);
        else if (key == "kb-rules")
            l.kb.max_rules = static_cast<int>(value);
        else if (key == "kb-steps")
            l.kb.max_steps = value;
        else if (key == "fair")
            l.fair.max_nontree_arrows = static_cast<int>(value);
        else
            fail(Errc::ParseError, "unknown limit '" + key + "'");
    };
    for (char ch : spec) {
        if (ch == ',') {
            apply(cur);
            cur.clear();
        } else {
            cur += ch;
        }
    }
    if (!cur.empty())
        apply(cur);
    return l;
}

int exit_code = 0;

void mark_unknown() {
    if (exit_code == 0)
        exit_code = 2;
}

Graph graph_of(const CmpDocument& doc) {
    switch (doc.kind) {
    case DocKind::Graph:
        return doc.graph;
    case DocKind::ReflexiveGraph:
        return strip_reflexive(doc.rgraph);
    case DocKind::Computad:
        return doc.computad.base;
    case DocKind::GroupoidalComputad:
        return doc.gcomputad.base;
    case DocKind::Computad3:
        return strip_reflexive(doc.computad3.base.base);
    default:
        fail(Errc::ParseError, "this command needs a graph-like file");
    }
}

Computad2 as_computad(const CmpDocument& doc) {
    switch (doc.kind) {
    case DocKind::Graph:
        return i2(doc.graph);
    case DocKind::ReflexiveGraph:
        return i2(strip_reflexive(doc.rgraph));
    case DocKind::Computad:
        return doc.computad;
    case DocKind::Computad3:
        return strip_computad(doc.computad3.base);
    case DocKind::PresentationMonoid: {
        std::vector<std::pair<std::vector<std::string>, std::vector<std::string>>> rels;
        for (const auto& [l, r] : doc.presentation.relations) {
            std::vector<std::string> lw, rw;
            for (const auto& [tok, sign] : l)
                lw.push_back(tok);
            for (const auto& [tok, sign] : r)
                rw.push_back(tok);
            rels.emplace_back(lw, rw);
        }
        return suspend_monoid_presentation(doc.presentation.generators, rels);
    }
    default:
        fail(Errc::ParseError, "this command needs a plain computad (or graph/monoid presentation)");
    }
}

GroupoidalComputad2 as_groupoidal(const CmpDocument& doc) {
    switch (doc.kind) {
    case DocKind::GroupoidalComputad:
        return doc.gcomputad;
    case DocKind::PresentationGroup:
        return suspend_group_presentation(doc.presentation.generators, doc.presentation.relations);
    case DocKind::Graph:
        return i2_groupoidal(doc.graph);
    case DocKind::ReflexiveGraph:
        return i2_groupoidal(strip_reflexive(doc.rgraph));
    case DocKind::Computad:
    case DocKind::Computad3:
        return groupoidalize(as_computad(doc));
    default:
        fail(Errc::ParseError, "this command needs a groupoidal computad");
    }
}

ReflexiveComputad2 as_reflexive(const CmpDocument& doc) {
    switch (doc.kind) {
    case DocKind::Computad3:
        return doc.computad3.base;
    case DocKind::Computad:
        return free_reflexive_computad(doc.computad);
    default:
        fail(Errc::ParseError, "this command needs a computad over a reflexive graph");
    }
}

json names_of(const Graph& g, const Subgraph& sub) {
    json arr = json::array();
    for (int a : sub.arrow_list())
        arr.push_back(g.arrows[a].name);
    return arr;
}

json report_graph(const CmpDocument& doc, const Limits& limits) {
    Graph g = graph_of(doc);
    json rep;
    rep["schema"] = 1;
    rep["command"] = "analyze-graph";
    rep["validate"] = validate_graph(g).problems;
    rep["objects"] = g.num_objects();
    rep["arrows"] = g.num_arrows();
    rep["chi1"] = euler_char_1(g);
    rep["components"] = connected_components(g).size();
    rep["connected"] = is_connected(g);
    rep["acyclic"] = is_acyclic(g);
    rep["is_forest"] = is_forest(g);
    rep["is_tree"] = is_tree(g);
    rep["is_weak_forest"] = is_weak_forest(g);
    if (is_connected(g))
        rep["maximal_tree"] = names_of(g, maximal_tree(g));
    try {
        FairResult fr = is_fair(g, limits.fair);
        rep["fair"] = fr.fair;
        if (fr.witness) {
            rep["fair_witness"] = names_of(g, *fr.witness);
            try {
                MonotoneClass mc = classify_monotone(g, *fr.witness);
                rep["monotone"] = mc.kind == MonotoneKind::StrictlyIncreasing ? "strictly-increasing"
                                  : mc.kind == MonotoneKind::Monotone        ? "monotone"
                                                                             : "not-monotone";
                rep["nonincreasing"] = mc.nonincreasing;
            } catch (const Error&) {
            }
        }
    } catch (const Error& e) {
        if (e.code() != Errc::SizeLimitExceeded)
            throw;
        rep["fair"] = "size-limit-exceeded";
        mark_unknown();
    }
    return rep;
}

json report_free_info(const CmpDocument& doc, std::string from, std::string to, int max_len) {
    json rep;
    rep["schema"] = 1;
    rep["command"] = "free-info";
    if (doc.kind == DocKind::Table) {
        auto res = recognize_free_category(doc.table);
        rep["free"] = res.free;
        if (res.free) {
            json gens = json::array();
            for (const auto& a : res.generating.arrows)
                gens.push_back(a.name + " : " + res.generating.objects[a.dom] + " -> " +
                               res.generating.objects[a.cod]);
            rep["generating_arrows"] = gens;
        } else {
            rep["reason"] = res.reason;
        }
        return rep;
    }
    Graph g = graph_of(doc);
    rep["acyclic"] = is_acyclic(g);
    auto cls = classify_total_order(g, doc.pattern);
    switch (cls.cls) {
    case TotalOrderClass::FinOrdinal:
        rep["total_order"] = "ordinal " + std::to_string(cls.n);
        break;
    case TotalOrderClass::NatOrder:
        rep["total_order"] = "nat";
        break;
    case TotalOrderClass::OpNatOrder:
        rep["total_order"] = "nat-op";
        break;
    case TotalOrderClass::IntOrder:
        rep["total_order"] = "int";
        break;
    case TotalOrderClass::NotTotalOrder:
        rep["total_order"] = "no";
        break;
    }
    if (!from.empty() && !to.empty()) {
        int x = g.object_index(from);
        int z = g.object_index(to);
        if (x < 0 || z < 0)
            fail(Errc::ObjectNotFound, "unknown object in --from/--to");
        auto hom = hom_count_free(g, x, z);
        rep["hom_count"] = hom.infinite ? json("infinite") : json(hom.count);
        auto e = enumerate_paths(g, x, z, max_len);
        json paths = json::array();
        for (const auto& p : e.paths)
            paths.push_back(path_to_string(g, p));
        rep["paths"] = paths;
        rep["all"] = e.all;
    }
    return rep;
}

json hom_matrix(const FinQuotient& q) {
    json m = json::array();
    for (const auto& row : q.hom_sizes)
        m.push_back(row);
    return m;
}

json report_present(const CmpDocument& doc, const Limits& limits, const std::string& fct_out) {
    Computad2 c = as_computad(doc);
    json rep;
    rep["schema"] = 1;
    rep["command"] = "present";
    rep["objects"] = c.base.objects;

    auto kb = knuth_bendix(c, limits.kb);
    json rules = json::array();
    for (const auto& r : kb.system.rules)
        rules.push_back(rule_to_string(c.base, r));
    rep["rules"] = rules;

    std::optional<FinQuotient> quotient;
    if (is_acyclic(c.base)) {
        quotient = present_category_finite(c);
        rep["status"] = "exact";
    } else if (!kb.complete) {
        rep["status"] = "timeout";
        mark_unknown();
    } else {
        bool finite = true;
        for (int x = 0; x < c.base.num_objects() && finite; ++x)
            for (int z = 0; z < c.base.num_objects() && finite; ++z)
                finite = irreducible_finite(c.base, kb.system, x, z);
        if (finite) {
            quotient = quotient_from_complete_system(c.base, kb.system);
            rep["status"] = "complete";
        } else {
            rep["status"] = "infinite-hom";
        }
    }
    if (quotient) {
        rep["hom_sizes"] = hom_matrix(*quotient);
        rep["total"] = quotient->total_morphisms();
        rep["cancellation"] = satisfies_cancellation_finite(*quotient);
        if (!fct_out.empty()) {
            CmpDocument out;
            out.kind = DocKind::Table;
            out.table = to_table(*quotient);
            std::ofstream f(fct_out);
            f << print_cmp(out);
        }
    }
    return rep;
}

json report_pi1(const CmpDocument& doc, const Limits& limits, const std::string& base_obj) {
    GroupoidalComputad2 c = as_groupoidal(doc);
    int obj = 0;
    if (!base_obj.empty()) {
        obj = c.base.object_index(base_obj);
        if (obj < 0)
            fail(Errc::ObjectNotFound, "unknown object '" + base_obj + "'");
    }
    auto pres = pi1_presentation(c, obj);
    json rep;
    rep["schema"] = 1;
    rep["command"] = "pi1";
    rep["generators"] = pres.generators;
    json rels = json::array();
    for (const auto& r : pres.relators)
        rels.push_back(word_to_string(pres, r));
    rep["relators"] = rels;
    auto ab = abelianization_invariants(pres);
    json divisors = json::array();
    for (const auto& d : ab.divisors)
        divisors.push_back(d.str());
    rep["abelianization"] = {{"divisors", divisors}, {"free_rank", ab.free_rank}};
    auto triv = is_trivial_group(pres, limits.tc);
    rep["trivial"] = triv.verdict == Triviality::Yes ? "yes" : triv.verdict == Triviality::No ? "no" : "unknown";
    rep["trivial_witness"] = triv.witness;
    if (triv.verdict == Triviality::Unknown)
        mark_unknown();
    return rep;
}

json report_thin(const CmpDocument& doc, const Limits& limits) {
    json rep;
    rep["schema"] = 1;
    rep["command"] = "thin";
    ThinnessResult res;
    if (doc.kind == DocKind::GroupoidalComputad || doc.kind == DocKind::PresentationGroup) {
        res = is_thin_groupoid(as_groupoidal(doc), limits.tc);
        rep["mode"] = "groupoid";
    } else {
        res = is_thin_category(as_computad(doc), limits.kb, limits.tc);
        rep["mode"] = "category";
    }
    rep["verdict"] = res.verdict == Thinness::Yes ? "yes" : res.verdict == Thinness::No ? "no" : "unknown";
    rep["detail"] = res.detail;
    if (res.verdict == Thinness::Unknown)
        mark_unknown();
    return rep;
}

json report_cw(const CmpDocument& doc, const Limits& limits) {
    CWComplex cw;
    switch (doc.kind) {
    case DocKind::Graph:
        cw = f_top1(doc.graph);
        break;
    case DocKind::ReflexiveGraph:
        cw = f_top1(strip_reflexive(doc.rgraph));
        break;
    case DocKind::Computad:
    case DocKind::PresentationMonoid:
        cw = f_top2(as_computad(doc));
        break;
    case DocKind::GroupoidalComputad:
    case DocKind::PresentationGroup:
        cw = f_top2(as_groupoidal(doc));
        break;
    case DocKind::Computad3:
        cw = f_top3(doc.computad3);
        break;
    default:
        fail(Errc::ParseError, "cw needs a graph, computad or presentation file");
    }
    json rep;
    rep["schema"] = 1;
    rep["command"] = "cw";
    rep["cells"] = {cw.cells0.size(), cw.cells1.size(), cw.cells2.size(), cw.cells3.size()};
    rep["chi"] = euler_char(cw);
    auto betti = betti_numbers(cw);
    rep["betti"] = {betti[0], betti[1], betti[2], betti[3]};

    bool any_no = false, any_unknown = false;
    for (auto& [root, pres] : pi1_from_cw(cw)) {
        auto triv = is_trivial_group(pres, limits.tc);
        if (triv.verdict == Triviality::No)
            any_no = true;
        if (triv.verdict == Triviality::Unknown)
            any_unknown = true;
    }
    rep["pi1_status"] = any_no ? "nontrivial" : any_unknown ? "unknown" : "trivial";
    auto pi2 = pi2_rank_if_simply_connected(cw, limits.tc);
    if (pi2.kind == Pi2Result::Rank)
        rep["pi2_rank"] = pi2.rank;
    else if (pi2.kind == Pi2Result::NotSimplyConnected)
        rep["pi2_rank"] = "not-simply-connected";
    else {
        rep["pi2_rank"] = "unknown";
        mark_unknown();
    }
    return rep;
}

json report_deficiency(const CmpDocument& doc) {
    json rep;
    rep["schema"] = 1;
    rep["command"] = "deficiency";
    if (doc.kind == DocKind::Computad || doc.kind == DocKind::PresentationMonoid) {
        Computad2 c = as_computad(doc);
        rep["mode"] = "category";
        rep["chi_ftop2"] = euler_char(f_top2(c));
        rep["deficiency"] = deficiency_of_category_presentation(c);
        return rep;
    }
    GroupoidalComputad2 c = as_groupoidal(doc);
    auto r = deficiency_of_presentation(c);
    rep["mode"] = "groupoid";
    rep["chi1"] = r.chi1;
    rep["cells2"] = r.cells2;
    rep["deficiency"] = r.deficiency;
    rep["bound_ok"] = r.bound_ok;
    rep["not_thin_bound"] =
        check_not_thin_bound(c) == BoundCheck::ViolatesBound ? "violates-bound" : "inconclusive";
    rep["construction"] = nullptr;
    return rep;
}

std::string computad_to_cmp(const Computad2& c) {
    CmpDocument doc;
    doc.kind = DocKind::Computad;
    doc.computad = c;
    return print_cmp(doc);
}

std::string computad_to_cmp(const GroupoidalComputad2& c) {
    CmpDocument doc;
    doc.kind = DocKind::GroupoidalComputad;
    doc.gcomputad = c;
    return print_cmp(doc);
}

json report_synth(const CmpDocument& doc, const std::string& mode, const Limits& limits,
                  const std::string& tree_arg, const std::string& out_path) {
    Graph g = graph_of(doc);
    json rep;
    rep["schema"] = 1;
    rep["command"] = "synth";
    long long chi1 = euler_char_1(g);
    rep["chi1"] = chi1;

    auto tree_from_arg = [&]() {
        if (tree_arg.empty())
            return maximal_tree(g);
        Subgraph t = Subgraph::empty(g);
        std::string cur;
        auto add = [&](const std::string& name) {
            if (name.empty())
                return;
            int a = g.arrow_index(name);
            if (a < 0)
                fail(Errc::UnresolvedReference, "unknown arrow '" + name + "'");
            t.add_arrow(a);
        };
        for (char ch : tree_arg)
            if (ch == ',') {
                add(cur);
                cur.clear();
            } else
                cur += ch;
        add(cur);
        for (int o = 0; o < g.num_objects(); ++o)
            t.add_object(o);
        return t;
    };

    std::string cmp_text;
    if (mode == "efficient") {
        auto c = synth_efficient_groupoid(g);
        rep["construction"] = "1groupoid";
        rep["cells2"] = c.cells.size();
        auto r = deficiency_of_presentation(c);
        rep["deficiency"] = r.deficiency;
        rep["bound_ok"] = r.bound_ok;
        auto thin = is_thin_groupoid(c, limits.tc);
        rep["thin"] = thin.verdict == Thinness::Yes ? "yes" : thin.verdict == Thinness::No ? "no" : "unknown";
        cmp_text = computad_to_cmp(c);
    } else if (mode == "category") {
        auto lifted = lift_to_category_presentation(g);
        rep["construction"] = "1category";
        if (std::holds_alternative<NotFair>(lifted)) {
            rep["fair"] = false;
        } else {
            const Computad2& c = std::get<Computad2>(lifted);
            rep["fair"] = true;
            rep["cells2"] = c.cells.size();
            rep["deficiency"] = deficiency_of_category_presentation(c);
            cmp_text = computad_to_cmp(c);
        }
    } else if (mode == "strict" || mode == "monotone") {
        Subgraph tree = tree_from_arg();
        Computad2 c = mode == "strict" ? synth_strictly_increasing(g, tree) : synth_monotone(g, tree);
        rep["construction"] = mode == "strict" ? "best" : "monotone";
        rep["cells2"] = c.cells.size();
        rep["deficiency"] = deficiency_of_category_presentation(c);
        auto thin = is_thin_category(c, limits.kb, limits.tc);
        rep["thin"] = thin.verdict == Thinness::Yes ? "yes" : thin.verdict == Thinness::No ? "no" : "unknown";
        cmp_text = computad_to_cmp(c);
    } else {
        fail(Errc::ParseError, "synth mode must be efficient, category, strict or monotone");
    }
    if (!cmp_text.empty()) {
        rep["computad"] = cmp_text;
        if (!out_path.empty()) {
            std::ofstream f(out_path);
            f << cmp_text;
        }
    }
    return rep;
}

json report_fcs(const CmpDocument& doc, const std::string& cells_arg) {
    ReflexiveComputad2 ambient = as_reflexive(doc);
    FcsCandidate candidate;
    candidate.cell_in.assign(ambient.cells.size(), cells_arg.empty() ? 1 : 0);
    if (!cells_arg.empty()) {
        std::string cur;
        auto add = [&](const std::string& name) {
            if (name.empty())
                return;
            int i = ambient.cell_index(name);
            if (i < 0)
                fail(Errc::UnresolvedReference, "unknown cell '" + name + "'");
            candidate.cell_in[i] = 1;
        };
        for (char ch : cells_arg)
            if (ch == ',') {
                add(cur);
                cur.clear();
            } else
                cur += ch;
        add(cur);
    }
    auto res = is_fcs(candidate, ambient);
    json rep;
    rep["schema"] = 1;
    rep["command"] = "fcs";
    rep["verdict"] = res.verdict == FcsVerdict::Yes ? "yes" : res.verdict == FcsVerdict::No ? "no" : "unknown";
    rep["detail"] = res.detail;
    if (res.verdict == FcsVerdict::Unknown)
        mark_unknown();
    return rep;
}

json report_thin2(const CmpDocument& doc) {
    if (doc.kind != DocKind::Computad3)
        fail(Errc::ParseError, "thin2 needs a computad3 file");
    auto res = locally_thin_criteria(doc.computad3);
    json rep;
    rep["schema"] = 1;
    rep["command"] = "thin2";
    rep["verdict"] = res.verdict == LocalThinness::NotThin     ? "not-thin"
                     : res.verdict == LocalThinness::ThinByFcs ? "thin-by-fcs"
                                                               : "unknown";
    rep["detail"] = res.detail;
    if (res.verdict == LocalThinness::Unknown)
        mark_unknown();
    return rep;
}

std::vector<std::pair<std::string, CmpDocument>> fixture_documents() {
    const Fixtures& f = fixtures();
    std::vector<std::pair<std::string, CmpDocument>> out;
    auto add_graph = [&](const std::string& name, const Graph& g) {
        CmpDocument d;
        d.kind = DocKind::Graph;
        d.graph = g;
        out.emplace_back(name, std::move(d));
    };
    auto add_computad = [&](const std::string& name, const Computad2& c) {
        CmpDocument d;
        d.kind = DocKind::Computad;
        d.computad = c;
        out.emplace_back(name, std::move(d));
    };
    auto add_computad3 = [&](const std::string& name, const Computad3& c) {
        CmpDocument d;
        d.kind = DocKind::Computad3;
        d.computad3 = c;
        out.emplace_back(name, std::move(d));
    };
    add_graph("circle", f.circle);
    add_graph("ghat", f.ghat);
    add_graph("weaktree", f.weak_tree);
    add_graph("sigmademo", f.sigma_demo);
    add_computad("delta2dot", f.delta2dot);
    add_computad("deltadot4", f.delta_dot_truncated);
    add_computad("toruscat", f.torus_category);
    {
        CmpDocument d;
        d.kind = DocKind::GroupoidalComputad;
        d.gcomputad = f.torus;
        out.emplace_back("torus", std::move(d));
    }
    {
        CmpDocument d;
        d.kind = DocKind::Computad3;
        Computad3 bare;
        bare.base = f.ddot_str;
        d.computad3 = bare;
        out.emplace_back("ddotstr", std::move(d));
    }
    {
        CmpDocument d;
        d.kind = DocKind::Computad3;
        Computad3 bare;
        bare.base = f.d_str;
        d.computad3 = bare;
        out.emplace_back("dstr", std::move(d));
    }
    {
        CmpDocument d;
        d.kind = DocKind::Computad3;
        Computad3 bare;
        bare.base = f.x_counterexample;
        d.computad3 = bare;
        out.emplace_back("xcounter", std::move(d));
    }
    add_computad3("hdelta2", f.h_delta2);
    add_computad3("hdeltadot", f.h_delta_dot);
    return out;
}

json run_fixtures(const std::string& write_dir, unsigned seed) {
    json rep;
    rep["schema"] = 1;
    rep["command"] = "fixtures";
    json items = json::array();
    bool all_ok = true;

    for (auto& [name, doc] : fixture_documents()) {
        json item;
        item["name"] = name;
        std::vector<std::string> problems;
        switch (doc.kind) {
        case DocKind::Graph:
            problems = validate_graph(doc.graph).problems;
            break;
        case DocKind::Computad:
            problems = validate_computad(doc.computad).problems;
            break;
        case DocKind::GroupoidalComputad:
            problems = validate_computad(doc.gcomputad).problems;
            break;
        case DocKind::Computad3:
            problems = validate_computad3(doc.computad3).problems;
            break;
        default:
            break;
        }
        // canonical round trip
        bool roundtrip = print_cmp(parse_cmp(print_cmp(doc))) == print_cmp(doc);
        if (!roundtrip)
            problems.push_back("parse/print round trip failed");
        item["ok"] = problems.empty();
        item["problems"] = problems;
        all_ok = all_ok && problems.empty();
        if (!write_dir.empty()) {
            std::ofstream f(write_dir + "/" + name + ".cmp");
            f << print_cmp(doc);
            item["written"] = write_dir + "/" + name + ".cmp";
        }
        items.push_back(std::move(item));
    }

    // seeded property smoke: chi additivity and tree => weak forest
    std::mt19937 rng(seed);
    bool props_ok = true;
    for (int i = 0; i < 25; ++i) {
        Computad2 c = random_computad(rng, 2 + static_cast<int>(rng() % 6), static_cast<int>(rng() % 5),
                                      static_cast<int>(rng() % 4));
        props_ok = props_ok &&
                   euler_char(f_top2(c)) == euler_char_1(c.base) + static_cast<long long>(c.cells.size());
        Graph t = maximal_tree(c.base).materialize();
        props_ok = props_ok && (!is_tree(t) || is_weak_forest(t));
    }
    rep["seeded_properties"] = props_ok;
    rep["fixtures"] = items;
    rep["ok"] = all_ok && props_ok;
    if (!(all_ok && props_ok))
        exit_code = 1;
    return rep;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"computads, presentations and their CW models"};
    app.require_subcommand(1);

    std::string limits_arg;
    unsigned seed = 1;
    app.add_option("--limits", limits_arg, "caps, e.g. tc=50000,kb-rules=10000,kb-steps=1000000");
    app.add_option("--seed", seed, "seed for randomized property runs");

    std::string file, from, to, base_obj, fct_out, mode, tree_arg, out_path, cells_arg, write_dir;
    int max_len = 6;

    auto* cmd_graph = app.add_subcommand("analyze-graph", "validate and classify a graph");
    cmd_graph->add_option("file", file)->required();

    auto* cmd_free = app.add_subcommand("free-info", "free category info / table recognition");
    cmd_free->add_option("file", file)->required();
    cmd_free->add_option("--from", from);
    cmd_free->add_option("--to", to);
    cmd_free->add_option("--max-len", max_len);

    auto* cmd_present = app.add_subcommand("present", "category presented by a computad");
    cmd_present->add_option("file", file)->required();
    cmd_present->add_option("--fct", fct_out, "write the quotient table to this file");

    auto* cmd_pi1 = app.add_subcommand("pi1", "fundamental group presentation");
    cmd_pi1->add_option("file", file)->required();
    cmd_pi1->add_option("--base", base_obj);

    auto* cmd_thin = app.add_subcommand("thin", "thinness of the presented category/groupoid");
    cmd_thin->add_option("file", file)->required();

    auto* cmd_cw = app.add_subcommand("cw", "CW complex report");
    cmd_cw->add_option("file", file)->required();

    auto* cmd_def = app.add_subcommand("deficiency", "deficiency report");
    cmd_def->add_option("file", file)->required();

    auto* cmd_synth = app.add_subcommand("synth", "presentation synthesizers");
    cmd_synth->add_option("mode", mode, "efficient|category|strict|monotone")->required();
    cmd_synth->add_option("file", file)->required();
    cmd_synth->add_option("--tree", tree_arg, "comma-separated tree arrows");
    cmd_synth->add_option("--out", out_path, "write the synthesized computad here");

    auto* cmd_fcs = app.add_subcommand("fcs", "full contractible subcomputad check");
    cmd_fcs->add_option("file", file)->required();
    cmd_fcs->add_option("--cells", cells_arg, "comma-separated candidate cells (default: all)");

    auto* cmd_thin2 = app.add_subcommand("thin2", "local thinness of a 3-computad presentation");
    cmd_thin2->add_option("file", file)->required();

    auto* cmd_fixtures = app.add_subcommand("fixtures", "validate the named corpus");
    cmd_fixtures->add_option("--write", write_dir, "emit the corpus as .cmp files");

    CLI11_PARSE(app, argc, argv);

    try {
        Limits limits = parse_limits(limits_arg);
        json rep;
        if (cmd_fixtures->parsed()) {
            rep = run_fixtures(write_dir, seed);
        } else {
            CmpDocument doc;
            if (!file.empty())
                doc = parse_cmp_file(file);
            if (cmd_graph->parsed())
                rep = report_graph(doc, limits);
            else if (cmd_free->parsed())
                rep = report_free_info(doc, from, to, max_len);
            else if (cmd_present->parsed())
                rep = report_present(doc, limits, fct_out);
            else if (cmd_pi1->parsed())
                rep = report_pi1(doc, limits, base_obj);
            else if (cmd_thin->parsed())
                rep = report_thin(doc, limits);
            else if (cmd_cw->parsed())
                rep = report_cw(doc, limits);
            else if (cmd_def->parsed())
                rep = report_deficiency(doc);
            else if (cmd_synth->parsed())
                rep = report_synth(doc, mode, limits, tree_arg, out_path);
            else if (cmd_fcs->parsed())
                rep = report_fcs(doc, cells_arg);
            else if (cmd_thin2->parsed())
                rep = report_thin2(doc);
        }
        std::cout << rep.dump(2) << "\n";
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return exit_code;
}
