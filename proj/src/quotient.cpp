#include "cmpd/quotient.hpp"

#include <algorithm>
#include <map>
#include <numeric>

namespace cmpd {

long long FinQuotient::total_morphisms() const {
    long long t = 0;
    for (const auto& row : hom_sizes)
        for (long long v : row)
            t += v;
    return t;
}

int FinQuotient::find_by_rep(const Path& p) const {
    for (size_t i = 0; i < morphisms.size(); ++i)
        if (morphisms[i].rep == p)
            return static_cast<int>(i);
    return -1;
}

namespace {

std::vector<Path> all_paths(const Graph& g) {
    std::vector<Path> out;
    for (int x = 0; x < g.num_objects(); ++x)
        for (int z = 0; z < g.num_objects(); ++z) {
            auto e = enumerate_paths(g, x, z, g.num_objects());
            out.insert(out.end(), e.paths.begin(), e.paths.end());
        }
    return out;
}

struct PathLess {
    bool operator()(const Path& a, const Path& b) const {
        if (a.start != b.start)
            return a.start < b.start;
        return a.arrows < b.arrows;
    }
};

FinQuotient build_from_classes(const Graph& g, const std::vector<std::vector<Path>>& classes) {
    FinQuotient q;
    q.objects = g.objects;

    // representative: least in (length, lex); class order by representative
    std::vector<Path> reps;
    for (const auto& cls : classes) {
        Path best = cls.front();
        for (const auto& p : cls)
            if (compare_paths(p, best) < 0)
                best = p;
        reps.push_back(best);
    }
    std::vector<int> order(classes.size());
    std::iota(order.begin(), order.end(), 0);
    std::sort(order.begin(), order.end(), [&](int a, int b) {
        if (reps[a].start != reps[b].start)
            return reps[a].start < reps[b].start;
        return compare_paths(reps[a], reps[b]) < 0;
    });

    std::map<Path, int, PathLess> path_class;
    for (size_t rank = 0; rank < order.size(); ++rank) {
        int c = order[rank];
        for (const auto& p : classes[c])
            path_class[p] = static_cast<int>(rank);
        q.morphisms.push_back(FinQuotient::Mor{reps[c], reps[c].start, path_end(g, reps[c])});
    }

    q.identity.assign(g.num_objects(), -1);
    for (int o = 0; o < g.num_objects(); ++o)
        q.identity[o] = path_class.at(identity_path(o));

    int n = static_cast<int>(q.morphisms.size());
    q.then_table.assign(n, std::vector<int>(n, -1));
    for (int f = 0; f < n; ++f)
        for (int h = 0; h < n; ++h) {
            if (q.morphisms[f].cod != q.morphisms[h].dom)
                continue;
            Path comp = compose_paths(g, q.morphisms[f].rep, q.morphisms[h].rep);
            auto it = path_class.find(comp);
            if (it == path_class.end())
                fail(Errc::Internal, "composite escaped the enumerated classes");
            q.then_table[f][h] = it->second;
        }

    q.hom_sizes.assign(g.num_objects(), std::vector<long long>(g.num_objects(), 0));
    for (const auto& m : q.morphisms)
        ++q.hom_sizes[m.dom][m.cod];

    // The emitted table must be a category.
    FiniteCategoryTable t = to_table(q);
    auto rep = validate_table(t);
    if (!rep.ok())
        fail(Errc::Internal, "quotient table is not a category: " + rep.problems.front());
    return q;
}

} // namespace

FinQuotient present_category_finite(const Computad2& c) {
    if (!is_acyclic(c.base))
        fail(Errc::InfiniteFreeCategory, "present_category_finite requires an acyclic base");
    auto rep = validate_computad(c);
    if (!rep.ok())
        fail(Errc::Internal, "invalid computad: " + rep.problems.front());

    const Graph& g = c.base;
    std::vector<Path> paths = all_paths(g);
    std::map<Path, int, PathLess> index;
    for (size_t i = 0; i < paths.size(); ++i)
        index[paths[i]] = static_cast<int>(i);

    std::vector<int> parent(paths.size());
    std::iota(parent.begin(), parent.end(), 0);
    auto find = [&](int x) {
        while (parent[x] != x)
            x = parent[x] = parent[parent[x]];
        return x;
    };
    auto join = [&](int a, int b) {
        a = find(a);
        b = find(b);
        if (a != b)
            parent[b] = a;
    };

    // Whiskered instances of every cell; transitive closure then comes from
    // union-find. One-step rewrites whisker to one-step rewrites, so this
    // generates the whole congruence.
    for (const auto& cell : c.cells) {
        int s = cell.src.start;
        int e = path_end(g, cell.src);
        for (int x = 0; x < g.num_objects(); ++x) {
            auto lefts = enumerate_paths(g, x, s, g.num_objects()).paths;
            if (lefts.empty())
                continue;
            for (int z = 0; z < g.num_objects(); ++z) {
                auto rights = enumerate_paths(g, e, z, g.num_objects()).paths;
                for (const auto& l : lefts)
                    for (const auto& r : rights) {
                        Path a = compose_paths(g, compose_paths(g, l, cell.src), r);
                        Path b = compose_paths(g, compose_paths(g, l, cell.tgt), r);
                        join(index.at(a), index.at(b));
                    }
            }
        }
    }

    std::map<int, std::vector<Path>> by_root;
    for (size_t i = 0; i < paths.size(); ++i)
        by_root[find(static_cast<int>(i))].push_back(paths[i]);
    std::vector<std::vector<Path>> classes;
    for (auto& [root, members] : by_root)
        classes.push_back(std::move(members));
    return build_from_classes(g, classes);
}

FinQuotient quotient_from_complete_system(const Graph& g, const RewriteSystem& rs) {
    if (!rs.complete)
        fail(Errc::Internal, "quotient_from_complete_system requires a complete system");
    std::vector<std::vector<Path>> classes;
    for (int x = 0; x < g.num_objects(); ++x)
        for (int z = 0; z < g.num_objects(); ++z) {
            if (!irreducible_finite(g, rs, x, z))
                fail(Errc::InfiniteFreeCategory, "hom-set " + g.objects[x] + " -> " + g.objects[z] + " is infinite");
            for (const auto& p : irreducible_paths(g, rs, x, z))
                classes.push_back({p});
        }

    // build_from_classes composes representatives literally; compose via
    // normal forms instead.
    FinQuotient q;
    q.objects = g.objects;
    for (const auto& cls : classes)
        q.morphisms.push_back(FinQuotient::Mor{cls.front(), cls.front().start, path_end(g, cls.front())});
    std::sort(q.morphisms.begin(), q.morphisms.end(), [&](const auto& a, const auto& b) {
        if (a.rep.start != b.rep.start)
            return a.rep.start < b.rep.start;
        return compare_paths(a.rep, b.rep) < 0;
    });

    auto class_of = [&](const Path& p) {
        Path nf = normal_form(g, p, rs);
        int i = q.find_by_rep(nf);
        if (i < 0)
            fail(Errc::Internal, "normal form missing from the irreducible enumeration");
        return i;
    };

    q.identity.assign(g.num_objects(), -1);
    for (int o = 0; o < g.num_objects(); ++o)
        q.identity[o] = class_of(identity_path(o));

    int n = static_cast<int>(q.morphisms.size());
    q.then_table.assign(n, std::vector<int>(n, -1));
    for (int f = 0; f < n; ++f)
        for (int h = 0; h < n; ++h) {
            if (q.morphisms[f].cod != q.morphisms[h].dom)
                continue;
            q.then_table[f][h] = class_of(compose_paths(g, q.morphisms[f].rep, q.morphisms[h].rep));
        }

    q.hom_sizes.assign(g.num_objects(), std::vector<long long>(g.num_objects(), 0));
    for (const auto& m : q.morphisms)
        ++q.hom_sizes[m.dom][m.cod];

    FiniteCategoryTable t = to_table(q);
    auto rep = validate_table(t);
    if (!rep.ok())
        fail(Errc::Internal, "quotient table is not a category: " + rep.problems.front());
    return q;
}

bool satisfies_cancellation_finite(const FinQuotient& q) {
    int n = static_cast<int>(q.morphisms.size());
    for (int h = 0; h < n; ++h) {
        for (int f = 0; f < n; ++f)
            for (int g2 = 0; g2 < n; ++g2) {
                if (f == g2)
                    continue;
                // right cancellation: f;h = g;h => f = g
                if (q.then_table[f][h] >= 0 && q.then_table[f][h] == q.then_table[g2][h])
                    return false;
                // left cancellation: h;f = h;g => f = g
                if (q.then_table[h][f] >= 0 && q.then_table[h][f] == q.then_table[h][g2])
                    return false;
            }
    }
    return true;
}

FiniteCategoryTable to_table(const FinQuotient& q) {
    FiniteCategoryTable t;
    t.objects = q.objects;
    for (size_t i = 0; i < q.morphisms.size(); ++i) {
        t.morphisms.push_back(FiniteCategoryTable::Mor{"m" + std::to_string(i), q.morphisms[i].dom, q.morphisms[i].cod});
    }
    t.identity = q.identity;
    t.then_table = q.then_table;
    return t;
}

} // namespace cmpd
