#include "cmpd/two_dim.hpp"

#include <algorithm>
#include <map>
#include <queue>
#include <set>

#include "cmpd/cw.hpp"
#include "cmpd/group.hpp"

namespace cmpd {

namespace {

const Graph& base_graph(const ReflexiveComputad2& c) {
    return c.base.base;
}

Path side_path(const ReflexiveComputad2& c, int gen, int exp, bool source) {
    const PathCell& cell = c.cells[gen];
    bool take_src = (exp > 0) == source;
    return take_src ? cell.src : cell.tgt;
}

} // namespace

Path factor_source(const ReflexiveComputad2& c, const WhiskerFactor& f) {
    const Graph& g = base_graph(c);
    return compose_paths(g, compose_paths(g, f.left, side_path(c, f.gen, f.exp, true)), f.right);
}

Path factor_target(const ReflexiveComputad2& c, const WhiskerFactor& f) {
    const Graph& g = base_graph(c);
    return compose_paths(g, compose_paths(g, f.left, side_path(c, f.gen, f.exp, false)), f.right);
}

Path word_source(const ReflexiveComputad2& c, const TwoCellWord& w) {
    if (w.empty()) {
        if (!w.anchor)
            fail(Errc::InvalidTwoCellWord, "empty 2-cell word without anchor path");
        return *w.anchor;
    }
    return factor_source(c, w.factors.front());
}

Path word_target(const ReflexiveComputad2& c, const TwoCellWord& w) {
    if (w.empty()) {
        if (!w.anchor)
            fail(Errc::InvalidTwoCellWord, "empty 2-cell word without anchor path");
        return *w.anchor;
    }
    return factor_target(c, w.factors.back());
}

ValidationReport validate_2word(const ReflexiveComputad2& c, const TwoCellWord& w) {
    ValidationReport rep;
    const Graph& g = base_graph(c);
    if (w.empty()) {
        if (!w.anchor)
            rep.problems.push_back("empty word without anchor path");
        else if (!path_valid(g, *w.anchor))
            rep.problems.push_back("anchor path invalid");
        return rep;
    }
    Path prev_target;
    for (size_t i = 0; i < w.factors.size(); ++i) {
        const WhiskerFactor& f = w.factors[i];
        if (f.gen < 0 || f.gen >= static_cast<int>(c.cells.size())) {
            rep.problems.push_back("factor " + std::to_string(i) + " references an unknown 2-cell");
            return rep;
        }
        if (!path_valid(g, f.left) || !path_valid(g, f.right)) {
            rep.problems.push_back("factor " + std::to_string(i) + " has an invalid whisker path");
            return rep;
        }
        Path src, tgt;
        try {
            src = factor_source(c, f);
            tgt = factor_target(c, f);
        } catch (const Error&) {
            rep.problems.push_back("factor " + std::to_string(i) + " does not compose");
            return rep;
        }
        if (i > 0 && !(prev_target == src)) {
            rep.problems.push_back("chain break at position " + std::to_string(i));
            return rep;
        }
        prev_target = tgt;
    }
    return rep;
}

std::vector<long long> exponent_sums(const ReflexiveComputad2& c, const TwoCellWord& w) {
    std::vector<long long> sums(c.cells.size(), 0);
    for (const auto& f : w.factors)
        sums[f.gen] += f.exp;
    return sums;
}

std::string word_to_string(const ReflexiveComputad2& c, const TwoCellWord& w) {
    const Graph& g = base_graph(c);
    if (w.empty())
        return "id(" + (w.anchor ? path_to_string(g, *w.anchor) : std::string("?")) + ")";
    std::string s;
    for (size_t i = 0; i < w.factors.size(); ++i) {
        if (i)
            s += " ; ";
        const WhiskerFactor& f = w.factors[i];
        s += "[ " + path_to_string(g, f.left) + " | " + c.cells[f.gen].name;
        if (f.exp < 0)
            s += "^-1";
        s += " | " + path_to_string(g, f.right) + " ]";
    }
    return s;
}

namespace {

bool factors_cancel(const WhiskerFactor& a, const WhiskerFactor& b) {
    return a.gen == b.gen && a.exp == -b.exp && a.left == b.left && a.right == b.right;
}

struct FactorGeometry {
    int pos = 0;   // start of the rewritten segment
    int src_len = 0;
    int tgt_len = 0;
};

FactorGeometry geometry(const ReflexiveComputad2& c, const WhiskerFactor& f) {
    FactorGeometry geo;
    geo.pos = f.left.length();
    geo.src_len = side_path(c, f.gen, f.exp, true).length();
    geo.tgt_len = side_path(c, f.gen, f.exp, false).length();
    return geo;
}

Path subword(const Graph& g, const Path& whole, int from, int to) {
    Path p;
    p.arrows.assign(whole.arrows.begin() + from, whole.arrows.begin() + to);
    if (from == 0)
        p.start = whole.start;
    else
        p.start = g.arrows[whole.arrows[from - 1]].cod;
    return p;
}

// Swap adjacent commuting factors A;B into B';A'. Pre: their segments are
// disjoint.
std::pair<WhiskerFactor, WhiskerFactor> interchange_swap(const ReflexiveComputad2& c, const WhiskerFactor& A,
                                                         const WhiskerFactor& B) {
    const Graph& g = base_graph(c);
    FactorGeometry ga = geometry(c, A);
    FactorGeometry gb = geometry(c, B);
    Path sA = side_path(c, A.gen, A.exp, true);
    Path tB = side_path(c, B.gen, B.exp, false);

    if (gb.pos + gb.src_len <= ga.pos) {
        // B acts left of A's block
        Path tail = subword(g, A.left, gb.pos + gb.src_len, ga.pos);
        WhiskerFactor Bp = B;
        Path bright;
        bright.arrows = tail.arrows;
        bright.arrows.insert(bright.arrows.end(), sA.arrows.begin(), sA.arrows.end());
        bright.arrows.insert(bright.arrows.end(), A.right.arrows.begin(), A.right.arrows.end());
        Path btleft = compose_paths(g, B.left, tB);
        bright.start = path_end(g, btleft);
        Bp.right = bright;
        WhiskerFactor Ap = A;
        Path aleft = btleft;
        aleft.arrows.insert(aleft.arrows.end(), tail.arrows.begin(), tail.arrows.end());
        Ap.left = aleft;
        return {Bp, Ap};
    }
    // B acts right of A's block
    int off = gb.pos - ga.pos - ga.tgt_len; // offset into A.right
    Path head = subword(g, A.right, 0, off);
    Path rest = subword(g, A.right, off + gb.src_len, A.right.length());
    WhiskerFactor Bp = B;
    Path bleft = compose_paths(g, A.left, sA);
    bleft.arrows.insert(bleft.arrows.end(), head.arrows.begin(), head.arrows.end());
    Bp.left = bleft;
    Bp.right = rest;
    WhiskerFactor Ap = A;
    Path aright = head;
    aright.arrows.insert(aright.arrows.end(), tB.arrows.begin(), tB.arrows.end());
    aright.arrows.insert(aright.arrows.end(), rest.arrows.begin(), rest.arrows.end());
    aright.start = A.right.start;
    Ap.right = aright;
    return {Bp, Ap};
}

} // namespace

TwoCellWord normalize_2word(const ReflexiveComputad2& c, const TwoCellWord& w) {
    auto rep = validate_2word(c, w);
    if (!rep.ok())
        fail(Errc::InvalidTwoCellWord, rep.problems.front());

    TwoCellWord out = w;
    if (!out.anchor && !w.factors.empty())
        out.anchor = word_source(c, w); // survives total cancellation

    long long guard = 1000000;
    bool changed = true;
    while (changed) {
        changed = false;
        for (size_t i = 0; i + 1 < out.factors.size(); ++i) {
            if (factors_cancel(out.factors[i], out.factors[i + 1])) {
                out.factors.erase(out.factors.begin() + i, out.factors.begin() + i + 2);
                changed = true;
                break;
            }
            const WhiskerFactor& A = out.factors[i];
            const WhiskerFactor& B = out.factors[i + 1];
            FactorGeometry ga = geometry(c, A);
            FactorGeometry gb = geometry(c, B);
            bool left_of = gb.pos + gb.src_len <= ga.pos;
            bool right_of = gb.pos >= ga.pos + ga.tgt_len;
            if (!left_of && !right_of)
                continue;
            int b_pos_w0 = left_of ? gb.pos : gb.pos - ga.tgt_len + ga.src_len;
            auto key = [](int pos, int gen, int exp) { return std::tuple<int, int, int>(pos, gen, exp); };
            if (key(b_pos_w0, B.gen, B.exp) < key(ga.pos, A.gen, A.exp)) {
                auto [Bp, Ap] = interchange_swap(c, A, B);
                out.factors[i] = Bp;
                out.factors[i + 1] = Ap;
                changed = true;
                break;
            }
        }
        if (--guard < 0)
            fail(Errc::Internal, "normalize_2word did not converge");
    }
    return out;
}

int Computad3::cell3_index(std::string_view name) const {
    for (size_t i = 0; i < cells3.size(); ++i)
        if (cells3[i].name == name)
            return static_cast<int>(i);
    return -1;
}

ValidationReport validate_computad3(const Computad3& c) {
    ValidationReport rep = validate_computad(c.base);
    std::set<std::string> names;
    for (const auto& cell : c.cells3) {
        if (!names.insert(cell.name).second)
            rep.problems.push_back("duplicate id '" + cell.name + "'");
        auto rs = validate_2word(c.base, cell.src);
        auto rt = validate_2word(c.base, cell.tgt);
        for (const auto& p : rs.problems)
            rep.problems.push_back("cell '" + cell.name + "' source: " + p);
        for (const auto& p : rt.problems)
            rep.problems.push_back("cell '" + cell.name + "' target: " + p);
        if (!rs.ok() || !rt.ok())
            continue;
        if (!(word_source(c.base, cell.src) == word_source(c.base, cell.tgt)) ||
            !(word_target(c.base, cell.src) == word_target(c.base, cell.tgt)))
            rep.problems.push_back("cell '" + cell.name + "' not parallel");
    }
    return rep;
}

std::optional<std::vector<int>> greedy_fcs_pairing(const Computad2& collapsed) {
    if (collapsed.base.num_objects() != 1)
        return std::nullopt;
    int narrows = collapsed.base.num_arrows();
    std::vector<char> arrow_paired(narrows, 0);
    std::vector<char> cell_used(collapsed.cells.size(), 0);
    std::vector<int> used_cells;

    auto residue = [&](const Path& p) {
        std::vector<int> r;
        for (int a : p.arrows)
            if (!arrow_paired[a])
                r.push_back(a);
        return r;
    };

    bool progress = true;
    while (progress) {
        progress = false;
        for (size_t i = 0; i < collapsed.cells.size(); ++i) {
            if (cell_used[i])
                continue;
            auto u = residue(collapsed.cells[i].src);
            auto v = residue(collapsed.cells[i].tgt);
            int x = -1;
            if (u.size() == 1 && v.empty())
                x = u[0];
            else if (u.empty() && v.size() == 1)
                x = v[0];
            if (x < 0 || arrow_paired[x])
                continue;
            arrow_paired[x] = 1;
            cell_used[i] = 1;
            used_cells.push_back(static_cast<int>(i));
            progress = true;
        }
    }
    for (int a = 0; a < narrows; ++a)
        if (!arrow_paired[a])
            return std::nullopt;
    std::sort(used_cells.begin(), used_cells.end());
    return used_cells;
}

namespace {

// ---- derivation search in the free group on the 1-cells (used by is_fcs)

using DStep = std::tuple<int, int, GWord>; // (cell, exp, conjugator)

GWord conj_relator(const GWord& rel, const GWord& u, int exp) {
    GWord w = u;
    GWord core = exp > 0 ? rel : invert_word(rel);
    w.insert(w.end(), core.begin(), core.end());
    GWord ui = invert_word(u);
    w.insert(w.end(), ui.begin(), ui.end());
    return free_reduce(std::move(w));
}

GWord apply_step(const GWord& w, const GWord& element) {
    GWord out = element;
    out.insert(out.end(), w.begin(), w.end());
    return free_reduce(std::move(out));
}

struct DerivationSearch {
    std::vector<GWord> relators; // per candidate cell, src . tgt^-1 form
    std::vector<int> cell_ids;
    std::vector<GWord> conjugators;
    int word_cap = 8;

    std::vector<std::pair<DStep, GWord>> moves(const GWord& w) const {
        std::vector<std::pair<DStep, GWord>> out;
        for (size_t r = 0; r < relators.size(); ++r)
            for (int exp : {+1, -1})
                for (const auto& u : conjugators) {
                    GWord next = apply_step(w, conj_relator(relators[r], u, exp));
                    if (static_cast<int>(next.size()) > word_cap)
                        continue;
                    out.emplace_back(DStep{cell_ids[r], exp, u}, std::move(next));
                }
        return out;
    }
};

struct WordLess {
    bool operator()(const GWord& a, const GWord& b) const { return a < b; }
};

// Normal form of a derivation: cancel inverse neighbours, bubble commuting
// neighbours into (cell, exp, conjugator) order. This is the implementation's
// equality notion for derivations, not crossed-module equality.
std::vector<DStep> normalize_derivation(const DerivationSearch& ds, std::vector<DStep> steps) {
    auto element_of = [&](const DStep& s) {
        auto [cell, exp, u] = s;
        int r = -1;
        for (size_t i = 0; i < ds.cell_ids.size(); ++i)
            if (ds.cell_ids[i] == cell)
                r = static_cast<int>(i);
        return conj_relator(ds.relators[r], u, exp);
    };
    bool changed = true;
    while (changed) {
        changed = false;
        for (size_t i = 0; i + 1 < steps.size(); ++i) {
            auto& [c1, e1, u1] = steps[i];
            auto& [c2, e2, u2] = steps[i + 1];
            if (c1 == c2 && e1 == -e2 && u1 == u2) {
                steps.erase(steps.begin() + i, steps.begin() + i + 2);
                changed = true;
                break;
            }
            GWord g1 = element_of(steps[i]);
            GWord g2 = element_of(steps[i + 1]);
            GWord ab = free_reduce([&] {
                GWord w = g1;
                w.insert(w.end(), g2.begin(), g2.end());
                return w;
            }());
            GWord ba = free_reduce([&] {
                GWord w = g2;
                w.insert(w.end(), g1.begin(), g1.end());
                return w;
            }());
            if (ab == ba && steps[i + 1] < steps[i]) {
                std::swap(steps[i], steps[i + 1]);
                changed = true;
                break;
            }
        }
    }
    return steps;
}

// Collect geodesic derivations from `start` to the empty word. The move set
// is closed under inverses, so distances from the empty word are computed by
// one bounded BFS and the geodesics are enumerated against that map.
std::vector<std::vector<DStep>> collect_derivations(const DerivationSearch& ds, const GWord& start, int max_depth,
                                                    int max_results) {
    std::map<GWord, int, WordLess> dist;
    dist[GWord{}] = 0;
    std::queue<GWord> q;
    q.push(GWord{});
    long long visited = 0;
    while (!q.empty() && visited < 50000) {
        GWord w = q.front();
        q.pop();
        ++visited;
        int d = dist[w];
        if (d >= max_depth)
            continue;
        for (auto& [step, next] : ds.moves(w)) {
            (void)step;
            if (dist.count(next))
                continue;
            dist[next] = d + 1;
            q.push(next);
        }
    }
    std::vector<std::vector<DStep>> results;
    auto it = dist.find(start);
    if (it == dist.end())
        return results;
    std::vector<DStep> current;
    auto dfs = [&](auto&& self, const GWord& w, int d) -> void {
        if (static_cast<int>(results.size()) >= max_results)
            return;
        if (w.empty()) {
            results.push_back(current);
            return;
        }
        for (auto& [step, next] : ds.moves(w)) {
            auto dn = dist.find(next);
            if (dn == dist.end() || dn->second != d - 1)
                continue;
            current.push_back(step);
            self(self, next, d - 1);
            current.pop_back();
            if (static_cast<int>(results.size()) >= max_results)
                break;
        }
    };
    dfs(dfs, start, it->second);
    return results;
}

std::string derivation_to_string(const ReflexiveComputad2& c, const std::vector<DStep>& d) {
    std::string s;
    for (const auto& [cell, exp, u] : d) {
        if (!s.empty())
            s += " . ";
        s += c.cells[cell].name;
        if (exp < 0)
            s += "^-1";
        if (!u.empty())
            s += "(conjugated)";
    }
    return s;
}

} // namespace

FcsResult is_fcs(const FcsCandidate& candidate, const ReflexiveComputad2& ambient) {
    if (ambient.base.base.num_objects() != 1)
        fail(Errc::MultipleZeroCells, "f.c.s. candidates live over one-object computads");
    if (candidate.cell_in.size() != ambient.cells.size())
        fail(Errc::Internal, "candidate mask size mismatch");

    Computad2 plain = strip_computad(ambient);
    int narrows = plain.base.num_arrows();

    // Syntactic sufficient criterion: bijection via singleton comparison
    // cells.
    {
        std::vector<int> owner(narrows, -1);
        bool syntactic = true;
        int cells_in = 0;
        for (size_t i = 0; i < plain.cells.size() && syntactic; ++i) {
            if (!candidate.cell_in[i])
                continue;
            ++cells_in;
            const auto& s = plain.cells[i].src.arrows;
            const auto& t = plain.cells[i].tgt.arrows;
            int x = -1;
            if (s.size() == 1 && t.empty())
                x = s[0];
            else if (s.empty() && t.size() == 1)
                x = t[0];
            if (x < 0 || owner[x] >= 0)
                syntactic = false;
            else
                owner[x] = static_cast<int>(i);
        }
        if (syntactic && cells_in == narrows &&
            std::all_of(owner.begin(), owner.end(), [](int o) { return o >= 0; }))
            return FcsResult{FcsVerdict::Yes, "singleton comparison cells pair every 1-cell"};
    }

    // No: some 1-cell has no comparison cell at all (rational rank test on
    // the relator exponent matrix).
    GroupPresentation pres;
    for (int a = 0; a < narrows; ++a)
        pres.generators.push_back(plain.base.arrows[a].name);
    DerivationSearch ds;
    for (size_t i = 0; i < plain.cells.size(); ++i) {
        if (!candidate.cell_in[i])
            continue;
        GWord rel;
        for (int a : plain.cells[i].tgt.arrows)
            rel.push_back(a + 1);
        GWord src_inv;
        for (int a : plain.cells[i].src.arrows)
            src_inv.push_back(a + 1);
        src_inv = invert_word(src_inv);
        rel.insert(rel.end(), src_inv.begin(), src_inv.end());
        ds.relators.push_back(free_reduce(rel));
        ds.cell_ids.push_back(static_cast<int>(i));
        pres.relators.push_back(ds.relators.back());
    }
    {
        int r = static_cast<int>(pres.relators.size());
        IntMat m(r, narrows);
        for (int i = 0; i < r; ++i)
            for (int letter : pres.relators[i])
                m.at(i, std::abs(letter) - 1) += letter > 0 ? 1 : -1;
        int base_rank = rank_exact(m);
        for (int a = 0; a < narrows; ++a) {
            IntMat ext(r + 1, narrows);
            ext.a.assign(m.a.begin(), m.a.end());
            ext.a.resize(static_cast<size_t>(r + 1) * narrows);
            ext.at(r, a) = 1;
            if (rank_exact(ext) > base_rank)
                return FcsResult{FcsVerdict::No,
                                 "no comparison 2-cell for '" + plain.base.arrows[a].name + "'"};
        }
    }

    // No: a pair of parallel comparison derivations that stay distinct under
    // the interchange normal form.
    ds.conjugators.push_back({});
    for (int a = 0; a < narrows; ++a) {
        ds.conjugators.push_back({a + 1});
        ds.conjugators.push_back({-(a + 1)});
    }
    {
        auto singles = ds.conjugators;
        for (const auto& u : singles)
            for (const auto& v : singles) {
                if (u.empty() || v.empty())
                    continue;
                GWord w = u;
                w.insert(w.end(), v.begin(), v.end());
                w = free_reduce(std::move(w));
                if (w.size() == 2)
                    ds.conjugators.push_back(std::move(w));
            }
        std::sort(ds.conjugators.begin(), ds.conjugators.end());
        ds.conjugators.erase(std::unique(ds.conjugators.begin(), ds.conjugators.end()), ds.conjugators.end());
    }

    for (int a = 0; a < narrows; ++a) {
        auto derivations = collect_derivations(ds, GWord{a + 1}, 4, 12);
        std::vector<std::vector<DStep>> normals;
        for (auto& d : derivations) {
            auto n = normalize_derivation(ds, d);
            bool fresh = std::find(normals.begin(), normals.end(), n) == normals.end();
            if (fresh)
                normals.push_back(n);
            if (normals.size() >= 2)
                return FcsResult{FcsVerdict::No,
                                 "two distinct 2-cells '" + plain.base.arrows[a].name + "' => id: " +
                                     derivation_to_string(ambient, normals[0]) + "  vs  " +
                                     derivation_to_string(ambient, normals[1])};
        }
    }
    return FcsResult{FcsVerdict::Unknown, "uniqueness of comparison cells undecided"};
}

namespace {

// ---- synth_320_presentation internals

struct Hstep {
    int cell = -1; // index into the ambient cell list
    int exp = +1;
    int pos = 0; // position in the collapsed word
};

// BFS over positive collapsed words (one object after tree collapse).
std::optional<std::vector<Hstep>> derive_collapsed(const std::vector<std::vector<int>>& srcs,
                                                   const std::vector<std::vector<int>>& tgts,
                                                   const std::vector<int>& fcs_cells, const std::vector<int>& from,
                                                   const std::vector<int>& to) {
    int cap_len = static_cast<int>(std::max(from.size(), to.size())) + 4;
    std::map<std::vector<int>, std::pair<std::vector<int>, Hstep>> parent; // word -> (prev, step)
    std::queue<std::vector<int>> q;
    parent[from] = {from, Hstep{}};
    q.push(from);
    long long visited = 0;
    while (!q.empty() && visited < 100000) {
        auto w = q.front();
        q.pop();
        ++visited;
        if (w == to)
            break;
        for (int cell : fcs_cells)
            for (int exp : {+1, -1}) {
                const auto& s = exp > 0 ? srcs[cell] : tgts[cell];
                const auto& t = exp > 0 ? tgts[cell] : srcs[cell];
                for (size_t pos = 0; pos + s.size() <= w.size(); ++pos) {
                    if (!std::equal(s.begin(), s.end(), w.begin() + pos))
                        continue;
                    std::vector<int> next;
                    next.insert(next.end(), w.begin(), w.begin() + pos);
                    next.insert(next.end(), t.begin(), t.end());
                    next.insert(next.end(), w.begin() + pos + s.size(), w.end());
                    if (static_cast<int>(next.size()) > cap_len)
                        continue;
                    if (parent.count(next))
                        continue;
                    parent[next] = {w, Hstep{cell, exp, static_cast<int>(pos)}};
                    q.push(next);
                }
            }
    }
    if (!parent.count(to))
        return std::nullopt;
    std::vector<Hstep> steps;
    for (std::vector<int> at = to; at != from;) {
        auto& [prev, step] = parent.at(at);
        steps.push_back(step);
        at = prev;
    }
    std::reverse(steps.begin(), steps.end());
    return steps;
}

} // namespace

Synth320Result synth_320_presentation(const ReflexiveComputad2& g2, const Subgraph& tree,
                                      const std::vector<std::string>& fcs_cells) {
    const Graph& full = g2.base.base;
    Graph stripped = strip_reflexive(g2.base);
    if (static_cast<int>(tree.arrow_in.size()) != stripped.num_arrows() ||
        static_cast<int>(tree.object_in.size()) != stripped.num_objects())
        fail(Errc::NotFcsTriple, "tree mask does not fit the nontrivial arrow graph");
    {
        Graph tg = tree.materialize();
        if (!is_tree(tg) || tree.count_objects() != stripped.num_objects())
            fail(Errc::NotFcsTriple, "the given subgraph is not a maximal tree");
    }

    // full-graph view of the tree
    std::vector<int> strip_to_full;
    for (int a = 0; a < full.num_arrows(); ++a)
        if (!g2.is_identity_arrow(a))
            strip_to_full.push_back(a);
    std::vector<char> tree_full(full.num_arrows(), 0);
    for (int s = 0; s < stripped.num_arrows(); ++s)
        if (tree.has_arrow(s))
            tree_full[strip_to_full[s]] = 1;

    // collapsed boundaries: non-tree letters only (identity letters never
    // occur in normalized cells)
    auto collapse_word = [&](const Path& p) {
        std::vector<int> w;
        for (int a : p.arrows)
            if (!tree_full[a])
                w.push_back(a);
        return w;
    };
    std::vector<std::vector<int>> csrc(g2.cells.size()), ctgt(g2.cells.size());
    for (size_t i = 0; i < g2.cells.size(); ++i) {
        csrc[i] = collapse_word(g2.cells[i].src);
        ctgt[i] = collapse_word(g2.cells[i].tgt);
    }

    // resolve and verify the f.c.s. cells by greedy pairing
    std::vector<int> fcs;
    std::vector<char> in_fcs(g2.cells.size(), 0);
    for (const auto& name : fcs_cells) {
        int i = g2.cell_index(name);
        if (i < 0)
            fail(Errc::NotFcsTriple, "unknown cell '" + name + "'");
        fcs.push_back(i);
        in_fcs[i] = 1;
    }
    {
        // pairing restricted to the candidate cells over the collapse
        std::vector<char> arrow_paired(full.num_arrows(), 1);
        int nontree = 0;
        for (int a = 0; a < full.num_arrows(); ++a)
            if (!g2.is_identity_arrow(a) && !tree_full[a]) {
                arrow_paired[a] = 0;
                ++nontree;
            }
        if (static_cast<int>(fcs.size()) != nontree)
            fail(Errc::NotFcsTriple, "f.c.s. cell count differs from the non-tree arrow count");
        std::vector<char> used(g2.cells.size(), 0);
        bool progress = true;
        int paired = 0;
        while (progress) {
            progress = false;
            for (int i : fcs) {
                if (used[i])
                    continue;
                std::vector<int> u, v;
                for (int a : csrc[i])
                    if (!arrow_paired[a])
                        u.push_back(a);
                for (int a : ctgt[i])
                    if (!arrow_paired[a])
                        v.push_back(a);
                int x = -1;
                if (u.size() == 1 && v.empty())
                    x = u[0];
                else if (u.empty() && v.size() == 1)
                    x = v[0];
                if (x < 0)
                    continue;
                arrow_paired[x] = 1;
                used[i] = 1;
                ++paired;
                progress = true;
            }
        }
        if (paired != nontree)
            fail(Errc::NotFcsTriple, "cells do not form a contractible pairing over the collapse");
    }

    Synth320Result result;
    std::vector<std::pair<int, std::vector<Hstep>>> derivations; // (outside cell, steps)
    for (size_t i = 0; i < g2.cells.size(); ++i) {
        if (in_fcs[i])
            continue;
        result.outside.push_back(static_cast<int>(i));
        auto steps = derive_collapsed(csrc, ctgt, fcs, csrc[i], ctgt[i]);
        if (!steps)
            fail(Errc::NotFcsTriple, "no comparison derivation for cell '" + g2.cells[i].name + "'");
        derivations.emplace_back(static_cast<int>(i), std::move(*steps));
    }

    // ---- attempt to lift each derivation to the original base
    auto object_at = [&](int start, const std::vector<int>& word, size_t pos) {
        int at = start;
        for (size_t k = 0; k < pos; ++k)
            at = full.arrows[word[k]].cod;
        return at;
    };

    struct LiftedCell {
        TwoCellWord src;
        TwoCellWord tgt;
    };
    std::vector<LiftedCell> lifted;
    bool all_lifted = true;

    for (auto& [alpha, steps] : derivations) {
        const Path& f = g2.cells[alpha].src;
        const Path& gpath = g2.cells[alpha].tgt;
        std::vector<int> L, R;
        bool ok = false;
        TwoCellWord target_word;
        for (int attempt = 0; attempt < 8 && !ok; ++attempt) {
            target_word.factors.clear();
            std::vector<int> W = L;
            W.insert(W.end(), f.arrows.begin(), f.arrows.end());
            W.insert(W.end(), R.begin(), R.end());
            int Wstart = L.empty() ? f.start : full.arrows[L[0]].dom;
            bool failed = false;
            bool extended = false;
            for (const Hstep& st : steps) {
                const Path& Sp = st.exp > 0 ? g2.cells[st.cell].src : g2.cells[st.cell].tgt;
                const Path& Tp = st.exp > 0 ? g2.cells[st.cell].tgt : g2.cells[st.cell].src;
                const std::vector<int>& S = Sp.arrows;
                // collapsed letter indices of W
                std::vector<int> nt;
                for (size_t k = 0; k < W.size(); ++k)
                    if (!tree_full[W[k]])
                        nt.push_back(static_cast<int>(k));
                int sbar = 0;
                for (int a : S)
                    if (!tree_full[a])
                        ++sbar;

                long long p = -1;
                if (sbar > 0) {
                    // alignment forced by the first collapsed letter
                    int first_off = 0;
                    while (first_off < static_cast<int>(S.size()) && tree_full[S[first_off]])
                        ++first_off;
                    if (st.pos >= static_cast<int>(nt.size())) {
                        failed = true;
                        break;
                    }
                    p = nt[st.pos] - first_off;
                } else {
                    // insertion: any position in the collapsed window with a
                    // literal (possibly empty) match and composable splice
                    int lo = st.pos == 0 ? 0 : nt[st.pos - 1] + 1;
                    int hi = st.pos < static_cast<int>(nt.size()) ? nt[st.pos] : static_cast<int>(W.size());
                    for (int cand = lo; cand <= hi; ++cand) {
                        if (cand + static_cast<int>(S.size()) > static_cast<int>(W.size()))
                            break;
                        if (!std::equal(S.begin(), S.end(), W.begin() + cand))
                            continue;
                        if (object_at(Wstart, W, cand) != Sp.start)
                            continue;
                        p = cand;
                        break;
                    }
                    if (p < 0) {
                        failed = true;
                        break;
                    }
                }

                // out-of-range parts become whisker extensions
                if (p < 0) {
                    std::vector<int> ext(S.begin(), S.begin() + static_cast<size_t>(-p));
                    L.insert(L.begin(), ext.begin(), ext.end());
                    extended = true;
                    break;
                }
                if (p + S.size() > W.size()) {
                    std::vector<int> ext(S.begin() + (W.size() - p), S.end());
                    R.insert(R.end(), ext.begin(), ext.end());
                    extended = true;
                    break;
                }
                if (!std::equal(S.begin(), S.end(), W.begin() + p)) {
                    failed = true;
                    break;
                }
                // record the factor and rewrite W
                WhiskerFactor factor;
                factor.left = Path{Wstart, std::vector<int>(W.begin(), W.begin() + p)};
                factor.gen = st.cell;
                factor.exp = st.exp;
                factor.right = Path{object_at(Wstart, W, p + S.size()),
                                    std::vector<int>(W.begin() + p + S.size(), W.end())};
                target_word.factors.push_back(std::move(factor));
                std::vector<int> next(W.begin(), W.begin() + p);
                next.insert(next.end(), Tp.arrows.begin(), Tp.arrows.end());
                next.insert(next.end(), W.begin() + p + S.size(), W.end());
                W = std::move(next);
            }
            if (extended)
                continue;
            if (failed)
                break;
            std::vector<int> expect = L;
            expect.insert(expect.end(), gpath.arrows.begin(), gpath.arrows.end());
            expect.insert(expect.end(), R.begin(), R.end());
            ok = W == expect;
            if (!ok)
                break;
        }
        if (!ok) {
            all_lifted = false;
            break;
        }
        int Wstart = L.empty() ? f.start : full.arrows[L[0]].dom;
        TwoCellWord source_word;
        WhiskerFactor alpha_factor;
        alpha_factor.left = Path{Wstart, L};
        alpha_factor.gen = alpha;
        alpha_factor.exp = +1;
        int rstart = object_at(Wstart, [&] {
            std::vector<int> w = L;
            w.insert(w.end(), f.arrows.begin(), f.arrows.end());
            return w;
        }(), L.size() + f.arrows.size());
        alpha_factor.right = Path{rstart, R};
        source_word.factors.push_back(std::move(alpha_factor));
        if (target_word.factors.empty())
            target_word.anchor = word_source(g2, source_word);
        lifted.push_back(LiftedCell{std::move(source_word), std::move(target_word)});
    }

    if (all_lifted) {
        result.lifted = true;
        result.computad.base = g2;
        for (size_t k = 0; k < lifted.size(); ++k)
            result.computad.cells3.push_back(
                ThreeCell{"lift_" + g2.cells[result.outside[k]].name, lifted[k].src, lifted[k].tgt});
        auto rep = validate_computad3(result.computad);
        if (!rep.ok())
            fail(Errc::Internal, "lifted 3-computad invalid: " + rep.problems.front());
        return result;
    }

    // ---- collapsed form fallback
    Computad2 strippedc = strip_computad(g2);
    SubComputad sub = SubComputad::empty(strippedc.base.num_objects(), strippedc.base.num_arrows(),
                                         static_cast<int>(strippedc.cells.size()));
    sub.object_in.assign(strippedc.base.num_objects(), 1);
    for (int s = 0; s < strippedc.base.num_arrows(); ++s)
        sub.arrow_in[s] = tree.has_arrow(s);
    Computad2 H = quotient_collapse(strippedc, sub);
    ReflexiveComputad2 Hr = free_reflexive_computad(H);

    // map full arrow ids of non-tree letters to H arrow ids
    std::vector<int> full_to_H(full.num_arrows(), -1);
    {
        int next = 0;
        for (int s = 0; s < stripped.num_arrows(); ++s)
            if (!tree.has_arrow(s))
                full_to_H[strip_to_full[s]] = next++;
    }

    result.lifted = false;
    result.computad = Computad3{};
    result.computad.base = Hr;
    int pt = 0;
    for (auto& [alpha, steps] : derivations) {
        std::vector<int> w;
        for (int a : csrc[alpha])
            w.push_back(full_to_H[a]);
        TwoCellWord src_word;
        src_word.factors.push_back(WhiskerFactor{identity_path(pt), alpha, +1, identity_path(pt)});
        TwoCellWord tgt_word;
        for (const Hstep& st : steps) {
            const auto& S = st.exp > 0 ? csrc[st.cell] : ctgt[st.cell];
            const auto& T = st.exp > 0 ? ctgt[st.cell] : csrc[st.cell];
            WhiskerFactor factor;
            factor.left = Path{pt, std::vector<int>(w.begin(), w.begin() + st.pos)};
            factor.gen = st.cell;
            factor.exp = st.exp;
            std::vector<int> rightw(w.begin() + st.pos + S.size(), w.end());
            factor.right = Path{pt, rightw};
            tgt_word.factors.push_back(factor);
            std::vector<int> next(w.begin(), w.begin() + st.pos);
            for (int a : T)
                next.push_back(full_to_H[a]);
            next.insert(next.end(), w.begin() + st.pos + S.size(), w.end());
            w = std::move(next);
        }
        if (tgt_word.factors.empty())
            tgt_word.anchor = Path{pt, [&] {
                                       std::vector<int> v;
                                       for (int a : csrc[alpha])
                                           v.push_back(full_to_H[a]);
                                       return v;
                                   }()};
        result.computad.cells3.push_back(ThreeCell{"lift_" + g2.cells[alpha].name, src_word, tgt_word});
    }
    auto rep = validate_computad3(result.computad);
    if (!rep.ok())
        fail(Errc::Internal, "collapsed 3-computad invalid: " + rep.problems.front());
    return result;
}

LocalThinnessResult locally_thin_criteria(const Computad3& c) {
    CWComplex cw = f_top3(c);
    long long chi = euler_char(cw);
    if (chi > 1)
        return LocalThinnessResult{LocalThinness::NotThin, "chi(F_Top3) = " + std::to_string(chi) + " > 1"};
    auto pi2 = pi2_rank_if_simply_connected(cw);
    if (pi2.kind == Pi2Result::Rank && pi2.rank > 0)
        return LocalThinnessResult{LocalThinness::NotThin, "pi2 rank " + std::to_string(pi2.rank)};

    // positive route: f.c.s. triple + quaseu-shaped 3-cells at exponent level
    Graph stripped = strip_reflexive(c.base.base);
    Computad2 strippedc = strip_computad(c.base);
    for (const Subgraph& tree : all_spanning_trees(stripped)) {
        SubComputad sub = SubComputad::empty(stripped.num_objects(), stripped.num_arrows(),
                                             static_cast<int>(strippedc.cells.size()));
        sub.object_in.assign(stripped.num_objects(), 1);
        for (int a = 0; a < stripped.num_arrows(); ++a)
            sub.arrow_in[a] = tree.has_arrow(a);
        Computad2 H = quotient_collapse(strippedc, sub);
        auto pairing = greedy_fcs_pairing(H);
        if (!pairing)
            continue;
        std::vector<char> in_fcs(c.base.cells.size(), 0);
        for (int i : *pairing)
            in_fcs[i] = 1;

        bool matched = true;
        for (size_t alpha = 0; alpha < c.base.cells.size() && matched; ++alpha) {
            if (in_fcs[alpha])
                continue;
            bool found = false;
            for (const auto& cell3 : c.cells3) {
                auto s = exponent_sums(c.base, cell3.src);
                auto t = exponent_sums(c.base, cell3.tgt);
                auto unit_alpha = [&](const std::vector<long long>& v) {
                    for (size_t k = 0; k < v.size(); ++k) {
                        if (k == alpha) {
                            if (v[k] != 1 && v[k] != -1)
                                return false;
                        } else if (v[k] != 0)
                            return false;
                    }
                    return true;
                };
                auto fcs_supported = [&](const std::vector<long long>& v) {
                    for (size_t k = 0; k < v.size(); ++k)
                        if (v[k] != 0 && !in_fcs[k])
                            return false;
                    return true;
                };
                if ((unit_alpha(s) && fcs_supported(t)) || (unit_alpha(t) && fcs_supported(s))) {
                    found = true;
                    break;
                }
            }
            matched = found;
        }
        if (matched)
            return LocalThinnessResult{LocalThinness::ThinByFcs,
                                       "f.c.s. triple with comparison 3-cells for every outside 2-cell"};
    }
    return LocalThinnessResult{LocalThinness::Unknown, "no criterion applied"};
}

} // namespace cmpd
