#include "cmpd/deficiency.hpp"

#include <algorithm>

namespace cmpd {

namespace {

void require_connected(const Graph& g, const char* who) {
    if (!is_connected(g))
        fail(Errc::NotConnected, std::string(who) + " requires a connected graph");
}

} // namespace

DeficiencyReport deficiency_of_presentation(const GroupoidalComputad2& c) {
    require_connected(c.base, "deficiency_of_presentation");
    DeficiencyReport r;
    r.chi1 = euler_char_1(c.base);
    r.cells2 = static_cast<long long>(c.cells.size());
    r.deficiency = 1 - r.cells2 - r.chi1;
    r.bound_ok = r.chi1 + r.cells2 - 1 >= 0;
    return r;
}

BoundCheck check_not_thin_bound(const GroupoidalComputad2& c) {
    require_connected(c.base, "check_not_thin_bound");
    long long chi2 = euler_char_1(c.base) + static_cast<long long>(c.cells.size());
    return chi2 < 1 ? BoundCheck::ViolatesBound : BoundCheck::Inconclusive;
}

GroupoidalComputad2 synth_efficient_groupoid(const Graph& g) {
    require_connected(g, "synth_efficient_groupoid");
    Subgraph tree = maximal_tree(g);
    GroupoidalComputad2 c;
    c.base = g;
    for (int a = 0; a < g.num_arrows(); ++a) {
        if (tree.has_arrow(a))
            continue;
        Walk dot = tree_walk(g, tree, g.arrows[a].dom, g.arrows[a].cod);
        Walk hat{g.arrows[a].dom, {Letter{a, +1}}};
        c.cells.push_back(WalkCell{"alpha_" + g.arrows[a].name, std::move(dot), std::move(hat)});
    }
    return c;
}

namespace {

// Search a pair of distinct positive parallel paths (f0, f1) in the support
// graph of (tree walk, extra arrow) with f0 inside the tree and joint image
// the whole support. Exists for every non-tree arrow of a maximal weak tree.
struct LiftPair {
    Path inside_tree;
    Path other;
};

std::optional<LiftPair> find_lift_pair(const Graph& g, const Subgraph& tree, int extra) {
    Subgraph support = Subgraph::empty(g);
    Walk dot = tree_walk(g, tree, g.arrows[extra].dom, g.arrows[extra].cod);
    support.add_object(g.arrows[extra].dom);
    for (const Letter& l : dot.letters)
        support.add_arrow(l.arrow);
    support.add_arrow(extra);

    auto arrows = support.arrow_list();
    int budget = static_cast<int>(arrows.size()) + 1;

    // enumerate positive paths inside the support, by length then lex
    std::vector<Path> all;
    for (int x : support.object_list()) {
        std::vector<Path> frontier{identity_path(x)};
        for (int len = 0; len <= budget && !frontier.empty(); ++len) {
            std::vector<Path> next;
            for (const Path& p : frontier) {
                all.push_back(p);
                if (len == budget)
                    continue;
                int at = path_end(g, p);
                for (int a : arrows)
                    if (g.arrows[a].dom == at) {
                        Path q = p;
                        q.arrows.push_back(a);
                        next.push_back(std::move(q));
                    }
            }
            frontier = std::move(next);
        }
    }
    std::sort(all.begin(), all.end(), [](const Path& a, const Path& b) {
        if (a.start != b.start)
            return a.start < b.start;
        return compare_paths(a, b) < 0;
    });

    auto in_tree = [&](const Path& p) {
        for (int a : p.arrows)
            if (!tree.has_arrow(a))
                return false;
        return true;
    };
    auto covers = [&](const Path& p, const Path& q) {
        std::vector<char> used(g.num_arrows(), 0);
        for (int a : p.arrows)
            used[a] = 1;
        for (int a : q.arrows)
            used[a] = 1;
        for (int a : arrows)
            if (!used[a])
                return false;
        return true;
    };

    for (const Path& f0 : all) {
        if (!in_tree(f0))
            continue;
        for (const Path& f1 : all) {
            if (f0 == f1 || f1.start != f0.start)
                continue;
            if (path_end(g, f1) != path_end(g, f0))
                continue;
            if (!covers(f0, f1))
                continue;
            return LiftPair{f0, f1};
        }
    }
    return std::nullopt;
}

} // namespace

std::variant<Computad2, NotFair> lift_to_category_presentation(const Graph& g) {
    require_connected(g, "lift_to_category_presentation");
    FairResult fair = is_fair(g);
    if (!fair.fair)
        return NotFair{};
    const Subgraph& tree = *fair.witness;

    Computad2 c;
    c.base = g;
    for (int a = 0; a < g.num_arrows(); ++a) {
        if (tree.has_arrow(a))
            continue;
        auto pair = find_lift_pair(g, tree, a);
        if (!pair)
            fail(Errc::Internal, "lift pair not found for arrow '" + g.arrows[a].name + "'");
        c.cells.push_back(PathCell{"alpha_" + g.arrows[a].name, pair->other, pair->inside_tree});
    }
    return c;
}

Computad2 synth_strictly_increasing(const Graph& g, const Subgraph& tree) {
    MonotoneClass cls;
    try {
        cls = classify_monotone(g, tree);
    } catch (const Error& e) {
        fail(Errc::NotStrictlyIncreasing, e.what());
    }
    if (cls.kind != MonotoneKind::StrictlyIncreasing)
        fail(Errc::NotStrictlyIncreasing, "graph is not strictly increasing over the tree");

    Computad2 c;
    c.base = g;
    for (int a = 0; a < g.num_arrows(); ++a) {
        if (tree.has_arrow(a))
            continue;
        auto dot = tree_positive_path(g, tree, g.arrows[a].dom, g.arrows[a].cod);
        if (!dot)
            fail(Errc::Internal, "increasing arrow without a tree path");
        c.cells.push_back(PathCell{"alpha_" + g.arrows[a].name, arrow_path(g, a), *dot});
    }
    return c;
}

Computad2 synth_monotone(const Graph& g, const Subgraph& tree) {
    MonotoneClass cls;
    try {
        cls = classify_monotone(g, tree);
    } catch (const Error& e) {
        fail(Errc::NotMonotone, e.what());
    }
    if (cls.kind == MonotoneKind::NotMonotone)
        fail(Errc::NotMonotone, "graph is not monotone over the tree");

    Computad2 c;
    c.base = g;
    for (int a = 0; a < g.num_arrows(); ++a) {
        if (tree.has_arrow(a))
            continue;
        int x = g.arrows[a].dom;
        int y = g.arrows[a].cod;
        auto down = tree_positive_path(g, tree, y, x); // cod <= dom?
        if (down) {
            // nonincreasing: f.dot(f) and dot(f).f both collapse to identities
            Path ff = arrow_path(g, a);
            ff.arrows.insert(ff.arrows.end(), down->arrows.begin(), down->arrows.end());
            Path df = *down;
            df.arrows.push_back(a);
            c.cells.push_back(PathCell{"beta_" + g.arrows[a].name + "_1", ff, identity_path(x)});
            c.cells.push_back(PathCell{"beta_" + g.arrows[a].name + "_-1", df, identity_path(y)});
        } else {
            auto dot = tree_positive_path(g, tree, x, y);
            if (!dot)
                fail(Errc::Internal, "monotone arrow with no tree comparison");
            c.cells.push_back(PathCell{"alpha_" + g.arrows[a].name, arrow_path(g, a), *dot});
        }
    }
    return c;
}

long long deficiency_of_category_presentation(const Computad2& c) {
    require_connected(c.base, "deficiency_of_category_presentation");
    return 1 - euler_char(f_top2(c));
}

} // namespace cmpd
