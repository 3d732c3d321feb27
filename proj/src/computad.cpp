#include "cmpd/computad.hpp"

#include <algorithm>
#include <map>
#include <set>

namespace cmpd {

namespace {

template <typename Cells>
int cell_index_impl(const Cells& cells, std::string_view name) {
    for (size_t i = 0; i < cells.size(); ++i)
        if (cells[i].name == name)
            return static_cast<int>(i);
    return -1;
}

} // namespace

int Computad2::cell_index(std::string_view name) const {
    return cell_index_impl(cells, name);
}

int GroupoidalComputad2::cell_index(std::string_view name) const {
    return cell_index_impl(cells, name);
}

int ReflexiveComputad2::cell_index(std::string_view name) const {
    return cell_index_impl(cells, name);
}

bool ReflexiveComputad2::is_identity_arrow(int a) const {
    for (int id : base.identity_arrow)
        if (id == a)
            return true;
    return false;
}

namespace {

void check_cell_names(const std::vector<std::string>& names, ValidationReport& rep) {
    std::set<std::string> seen;
    for (const auto& n : names)
        if (!seen.insert(n).second)
            rep.problems.push_back("duplicate id '" + n + "'");
}

} // namespace

ValidationReport validate_computad(const Computad2& c) {
    ValidationReport rep = validate_graph(c.base);
    std::vector<std::string> names;
    for (const auto& cell : c.cells) {
        names.push_back(cell.name);
        if (!path_valid(c.base, cell.src) || !path_valid(c.base, cell.tgt)) {
            rep.problems.push_back("cell '" + cell.name + "' has an unknown arrow or broken path");
            continue;
        }
        if (cell.src.start != cell.tgt.start || path_end(c.base, cell.src) != path_end(c.base, cell.tgt))
            rep.problems.push_back("cell '" + cell.name + "' not parallel");
    }
    check_cell_names(names, rep);
    return rep;
}

ValidationReport validate_computad(const GroupoidalComputad2& c) {
    ValidationReport rep = validate_graph(c.base);
    std::vector<std::string> names;
    for (const auto& cell : c.cells) {
        names.push_back(cell.name);
        if (!walk_valid(c.base, cell.src) || !walk_valid(c.base, cell.tgt)) {
            rep.problems.push_back("cell '" + cell.name + "' has an unknown arrow or unreduced walk");
            continue;
        }
        if (cell.src.start != cell.tgt.start || walk_end(c.base, cell.src) != walk_end(c.base, cell.tgt))
            rep.problems.push_back("cell '" + cell.name + "' not parallel");
    }
    check_cell_names(names, rep);
    return rep;
}

ValidationReport validate_computad(const ReflexiveComputad2& c) {
    ValidationReport rep = validate_reflexive_graph(c.base);
    std::vector<std::string> names;
    for (const auto& cell : c.cells) {
        names.push_back(cell.name);
        if (!path_valid(c.base.base, cell.src) || !path_valid(c.base.base, cell.tgt)) {
            rep.problems.push_back("cell '" + cell.name + "' has an unknown arrow or broken path");
            continue;
        }
        if (cell.src.start != cell.tgt.start || path_end(c.base.base, cell.src) != path_end(c.base.base, cell.tgt))
            rep.problems.push_back("cell '" + cell.name + "' not parallel");
        for (int a : cell.src.arrows)
            if (c.is_identity_arrow(a))
                rep.problems.push_back("cell '" + cell.name + "' not normalized (identity letter)");
        for (int a : cell.tgt.arrows)
            if (c.is_identity_arrow(a))
                rep.problems.push_back("cell '" + cell.name + "' not normalized (identity letter)");
    }
    check_cell_names(names, rep);
    return rep;
}

Computad2 i2(const Graph& g) {
    return Computad2{g, {}};
}

GroupoidalComputad2 i2_groupoidal(const Graph& g) {
    return GroupoidalComputad2{g, {}};
}

const Graph& u2(const Computad2& c) {
    return c.base;
}

const Graph& u2(const GroupoidalComputad2& c) {
    return c.base;
}

void normalize_reflexive(ReflexiveComputad2& c) {
    auto strip_path = [&](const Path& p) {
        Path out;
        out.start = p.start;
        for (int a : p.arrows)
            if (!c.is_identity_arrow(a))
                out.arrows.push_back(a);
        return out;
    };
    for (auto& cell : c.cells) {
        cell.src = strip_path(cell.src);
        cell.tgt = strip_path(cell.tgt);
    }
}

Computad2 strip_computad(const ReflexiveComputad2& c) {
    Computad2 out;
    out.base = strip_reflexive(c.base);
    std::vector<int> remap(c.base.base.num_arrows(), -1);
    int next = 0;
    for (int a = 0; a < c.base.base.num_arrows(); ++a)
        if (!c.is_identity_arrow(a))
            remap[a] = next++;
    for (const auto& cell : c.cells) {
        PathCell pc;
        pc.name = cell.name;
        pc.src.start = cell.src.start;
        pc.tgt.start = cell.tgt.start;
        for (int a : cell.src.arrows)
            pc.src.arrows.push_back(remap[a]);
        for (int a : cell.tgt.arrows)
            pc.tgt.arrows.push_back(remap[a]);
        out.cells.push_back(std::move(pc));
    }
    return out;
}

ReflexiveComputad2 free_reflexive_computad(const Computad2& c) {
    ReflexiveComputad2 out;
    out.base = free_reflexive(c.base);
    out.cells = c.cells; // arrow indices are preserved by free_reflexive
    return out;
}

Sigma2Result sigma2(const Graph& g, std::optional<int> max_len) {
    Sigma2Result result;
    bool acyclic = is_acyclic(g);
    if (!acyclic && !max_len) {
        result.status = Sigma2Status::Unbounded;
        return result;
    }
    int bound = acyclic ? g.num_objects() : *max_len;
    Computad2 c;
    c.base = g;
    int counter = 0;
    for (int x = 0; x < g.num_objects(); ++x) {
        for (int z = 0; z < g.num_objects(); ++z) {
            auto paths = enumerate_paths(g, x, z, bound).paths;
            for (const Path& p : paths)
                for (const Path& q : paths)
                    c.cells.push_back(PathCell{"pair" + std::to_string(counter++), p, q});
        }
    }
    result.status = acyclic ? Sigma2Status::Complete : Sigma2Status::Truncated;
    result.computad = std::move(c);
    return result;
}

GroupoidalComputad2 groupoidalize(const Computad2& c) {
    GroupoidalComputad2 out;
    out.base = c.base;
    for (const auto& cell : c.cells)
        out.cells.push_back(WalkCell{cell.name, walk_of_path(cell.src), walk_of_path(cell.tgt)});
    return out;
}

namespace {

void add_path_support(const Graph& g, const Path& p, Subgraph& sub) {
    sub.add_object(p.start);
    for (int a : p.arrows)
        sub.add_arrow(a);
    (void)g;
}

void add_walk_support(const Graph& g, const Walk& w, Subgraph& sub) {
    sub.add_object(w.start);
    for (const Letter& l : w.letters)
        sub.add_arrow(l.arrow);
    (void)g;
}

} // namespace

Subgraph graph_domain(const Computad2& c) {
    Subgraph sub = Subgraph::empty(c.base);
    for (const auto& cell : c.cells)
        add_path_support(c.base, cell.src, sub);
    return sub;
}

Subgraph graph_codomain(const Computad2& c) {
    Subgraph sub = Subgraph::empty(c.base);
    for (const auto& cell : c.cells)
        add_path_support(c.base, cell.tgt, sub);
    return sub;
}

Subgraph image_subgraph(const Computad2& c) {
    Subgraph sub = graph_domain(c);
    Subgraph cod = graph_codomain(c);
    for (size_t i = 0; i < sub.object_in.size(); ++i)
        sub.object_in[i] |= cod.object_in[i];
    for (size_t i = 0; i < sub.arrow_in.size(); ++i)
        sub.arrow_in[i] |= cod.arrow_in[i];
    return sub;
}

Subgraph graph_domain(const GroupoidalComputad2& c) {
    Subgraph sub = Subgraph::empty(c.base);
    for (const auto& cell : c.cells)
        add_walk_support(c.base, cell.src, sub);
    return sub;
}

Subgraph graph_codomain(const GroupoidalComputad2& c) {
    Subgraph sub = Subgraph::empty(c.base);
    for (const auto& cell : c.cells)
        add_walk_support(c.base, cell.tgt, sub);
    return sub;
}

Subgraph image_subgraph(const GroupoidalComputad2& c) {
    Subgraph sub = graph_domain(c);
    Subgraph cod = graph_codomain(c);
    for (size_t i = 0; i < sub.object_in.size(); ++i)
        sub.object_in[i] |= cod.object_in[i];
    for (size_t i = 0; i < sub.arrow_in.size(); ++i)
        sub.arrow_in[i] |= cod.arrow_in[i];
    return sub;
}

SubComputad SubComputad::empty(int objects, int arrows, int cells) {
    SubComputad s;
    s.object_in.assign(objects, 0);
    s.arrow_in.assign(arrows, 0);
    s.cell_in.assign(cells, 0);
    return s;
}

namespace {

template <typename C>
ValidationReport validate_subcomputad_impl(const C& c, const SubComputad& sub, auto support_of) {
    ValidationReport rep;
    const Graph& g = u2(c);
    if (static_cast<int>(sub.object_in.size()) != g.num_objects() ||
        static_cast<int>(sub.arrow_in.size()) != g.num_arrows() ||
        static_cast<int>(sub.cell_in.size()) != static_cast<int>(c.cells.size())) {
        rep.problems.push_back("mask sizes do not match the computad");
        return rep;
    }
    for (int a = 0; a < g.num_arrows(); ++a)
        if (sub.arrow_in[a] && (!sub.object_in[g.arrows[a].dom] || !sub.object_in[g.arrows[a].cod]))
            rep.problems.push_back("arrow '" + g.arrows[a].name + "' has an endpoint outside the sub-computad");
    for (size_t i = 0; i < c.cells.size(); ++i) {
        if (!sub.cell_in[i])
            continue;
        for (int a : support_of(c.cells[i]))
            if (!sub.arrow_in[a])
                rep.problems.push_back("cell '" + c.cells[i].name + "' boundary leaves the sub-computad");
        if (!sub.object_in[c.cells[i].src.start])
            rep.problems.push_back("cell '" + c.cells[i].name + "' boundary leaves the sub-computad");
    }
    return rep;
}

std::vector<int> path_cell_support(const PathCell& cell) {
    std::vector<int> s = cell.src.arrows;
    s.insert(s.end(), cell.tgt.arrows.begin(), cell.tgt.arrows.end());
    return s;
}

std::vector<int> walk_cell_support(const WalkCell& cell) {
    std::vector<int> s;
    for (const Letter& l : cell.src.letters)
        s.push_back(l.arrow);
    for (const Letter& l : cell.tgt.letters)
        s.push_back(l.arrow);
    return s;
}

} // namespace

ValidationReport validate_subcomputad(const Computad2& c, const SubComputad& sub) {
    return validate_subcomputad_impl(c, sub, path_cell_support);
}

ValidationReport validate_subcomputad(const GroupoidalComputad2& c, const SubComputad& sub) {
    return validate_subcomputad_impl(c, sub, walk_cell_support);
}

namespace {

struct CollapseMap {
    Graph quotient;
    std::vector<int> object_map; // old object -> new object
    std::vector<int> arrow_map;  // old arrow -> new arrow, -1 if deleted
};

CollapseMap collapse_base(const Graph& g, const SubComputad& sub) {
    CollapseMap m;
    m.object_map.assign(g.num_objects(), -1);
    m.arrow_map.assign(g.num_arrows(), -1);

    bool any_object = std::find(sub.object_in.begin(), sub.object_in.end(), 1) != sub.object_in.end();
    int point = -1;
    for (int o = 0; o < g.num_objects(); ++o) {
        if (sub.object_in[o]) {
            if (point < 0)
                point = m.quotient.add_object(g.objects[o]);
            m.object_map[o] = point;
        } else {
            m.object_map[o] = m.quotient.add_object(g.objects[o]);
        }
    }
    (void)any_object;
    for (int a = 0; a < g.num_arrows(); ++a) {
        if (sub.arrow_in[a])
            continue;
        const Arrow& ar = g.arrows[a];
        m.arrow_map[a] = m.quotient.add_arrow(ar.name, m.object_map[ar.dom], m.object_map[ar.cod]);
    }
    return m;
}

} // namespace

Computad2 quotient_collapse(const Computad2& c, const SubComputad& sub) {
    auto rep = validate_subcomputad(c, sub);
    if (!rep.ok())
        fail(Errc::NotSubcomputad, rep.problems.front());
    CollapseMap m = collapse_base(c.base, sub);
    Computad2 out;
    out.base = std::move(m.quotient);
    for (size_t i = 0; i < c.cells.size(); ++i) {
        if (sub.cell_in[i])
            continue;
        const PathCell& cell = c.cells[i];
        PathCell pc;
        pc.name = cell.name;
        pc.src.start = m.object_map[cell.src.start];
        pc.tgt.start = m.object_map[cell.tgt.start];
        for (int a : cell.src.arrows)
            if (m.arrow_map[a] >= 0)
                pc.src.arrows.push_back(m.arrow_map[a]);
        for (int a : cell.tgt.arrows)
            if (m.arrow_map[a] >= 0)
                pc.tgt.arrows.push_back(m.arrow_map[a]);
        out.cells.push_back(std::move(pc));
    }
    return out;
}

GroupoidalComputad2 quotient_collapse(const GroupoidalComputad2& c, const SubComputad& sub) {
    auto rep = validate_subcomputad(c, sub);
    if (!rep.ok())
        fail(Errc::NotSubcomputad, rep.problems.front());
    CollapseMap m = collapse_base(c.base, sub);
    GroupoidalComputad2 out;
    out.base = std::move(m.quotient);
    for (size_t i = 0; i < c.cells.size(); ++i) {
        if (sub.cell_in[i])
            continue;
        const WalkCell& cell = c.cells[i];
        auto map_walk = [&](const Walk& w) {
            std::vector<Letter> letters;
            for (const Letter& l : w.letters)
                if (m.arrow_map[l.arrow] >= 0)
                    letters.push_back(Letter{m.arrow_map[l.arrow], l.sign});
            return reduce_walk(out.base, m.object_map[w.start], std::move(letters));
        };
        out.cells.push_back(WalkCell{cell.name, map_walk(cell.src), map_walk(cell.tgt)});
    }
    return out;
}

Computad2 suspend_monoid_presentation(
    const std::vector<std::string>& generators,
    const std::vector<std::pair<std::vector<std::string>, std::vector<std::string>>>& relations) {
    Computad2 c;
    int pt = c.base.add_object("*");
    for (const auto& gname : generators)
        c.base.add_arrow(gname, pt, pt);
    auto to_path = [&](const std::vector<std::string>& word) {
        Path p = identity_path(pt);
        for (const auto& tok : word) {
            int a = c.base.arrow_index(tok);
            if (a < 0)
                fail(Errc::UnknownGenerator, "unknown generator '" + tok + "'");
            p.arrows.push_back(a);
        }
        return p;
    };
    int counter = 0;
    for (const auto& [lhs, rhs] : relations)
        c.cells.push_back(PathCell{"rel" + std::to_string(counter++), to_path(lhs), to_path(rhs)});
    return c;
}

GroupoidalComputad2 suspend_group_presentation(const std::vector<std::string>& generators,
                                               const std::vector<std::pair<SignedWord, SignedWord>>& relations) {
    GroupoidalComputad2 c;
    int pt = c.base.add_object("*");
    for (const auto& gname : generators)
        c.base.add_arrow(gname, pt, pt);
    auto to_walk = [&](const SignedWord& word) {
        std::vector<Letter> letters;
        for (const auto& [tok, sign] : word) {
            int a = c.base.arrow_index(tok);
            if (a < 0)
                fail(Errc::UnknownGenerator, "unknown generator '" + tok + "'");
            letters.push_back(Letter{a, sign});
        }
        return reduce_walk(c.base, pt, std::move(letters));
    };
    int counter = 0;
    for (const auto& [lhs, rhs] : relations)
        c.cells.push_back(WalkCell{"rel" + std::to_string(counter++), to_walk(lhs), to_walk(rhs)});
    return c;
}

} // namespace cmpd
