#include "cmpd/cw.hpp"

#include <algorithm>

namespace cmpd {

ChainComplexQ chain_complex(const CWComplex& cw) {
    ChainComplexQ cc;
    cc.d1 = IntMat(static_cast<int>(cw.cells0.size()), static_cast<int>(cw.cells1.size()));
    for (size_t e = 0; e < cw.cells1.size(); ++e) {
        cc.d1.at(cw.cells1[e].dst, static_cast<int>(e)) += 1;
        cc.d1.at(cw.cells1[e].src, static_cast<int>(e)) -= 1;
    }
    cc.d2 = IntMat(static_cast<int>(cw.cells1.size()), static_cast<int>(cw.cells2.size()));
    for (size_t f = 0; f < cw.cells2.size(); ++f)
        for (auto [e, s] : cw.cells2[f].word)
            cc.d2.at(e, static_cast<int>(f)) += s;
    cc.d3 = IntMat(static_cast<int>(cw.cells2.size()), static_cast<int>(cw.cells3.size()));
    for (size_t v = 0; v < cw.cells3.size(); ++v)
        for (size_t f = 0; f < cw.cells3[v].d3.size(); ++f)
            cc.d3.at(static_cast<int>(f), static_cast<int>(v)) = cw.cells3[v].d3[f];

    if (!is_zero(mat_mul(cc.d1, cc.d2)) || !is_zero(mat_mul(cc.d2, cc.d3)))
        fail(Errc::Internal, "chain-complex law violated");
    return cc;
}

CWComplex f_top1(const Graph& g) {
    CWComplex cw;
    cw.cells0 = g.objects;
    for (const auto& a : g.arrows)
        cw.cells1.push_back(CWComplex::Cell1{a.name, a.dom, a.cod});
    return cw;
}

namespace {

// Attaching word of a 2-cell src => tgt: traverse src, then tgt reversed
// with signs flipped.
template <typename CellT, typename LettersOf>
CWComplex::Cell2 attach(const CellT& cell, LettersOf letters_of, int base) {
    CWComplex::Cell2 out;
    out.name = cell.name;
    out.base = base;
    for (auto [edge, sign] : letters_of(cell.src))
        out.word.emplace_back(edge, sign);
    auto tgt = letters_of(cell.tgt);
    for (auto it = tgt.rbegin(); it != tgt.rend(); ++it)
        out.word.emplace_back(it->first, -it->second);
    return out;
}

} // namespace

CWComplex f_top2(const Computad2& c) {
    CWComplex cw = f_top1(c.base);
    auto letters = [](const Path& p) {
        std::vector<std::pair<int, int>> ls;
        for (int a : p.arrows)
            ls.emplace_back(a, +1);
        return ls;
    };
    for (const auto& cell : c.cells)
        cw.cells2.push_back(attach(cell, letters, cell.src.start));
    return cw;
}

CWComplex f_top2(const GroupoidalComputad2& c) {
    CWComplex cw = f_top1(c.base);
    auto letters = [](const Walk& w) {
        std::vector<std::pair<int, int>> ls;
        for (const Letter& l : w.letters)
            ls.emplace_back(l.arrow, l.sign);
        return ls;
    };
    for (const auto& cell : c.cells)
        cw.cells2.push_back(attach(cell, letters, cell.src.start));
    return cw;
}

CWComplex f_top2(const ReflexiveComputad2& c) {
    // identity arrows are degenerate and contribute no 1-cells
    CWComplex cw = f_top1(strip_reflexive(c.base));
    std::vector<int> remap(c.base.base.num_arrows(), -1);
    int next = 0;
    for (int a = 0; a < c.base.base.num_arrows(); ++a)
        if (!c.is_identity_arrow(a))
            remap[a] = next++;
    auto letters = [&](const Path& p) {
        std::vector<std::pair<int, int>> ls;
        for (int a : p.arrows)
            ls.emplace_back(remap[a], +1);
        return ls;
    };
    for (const auto& cell : c.cells)
        cw.cells2.push_back(attach(cell, letters, cell.src.start));
    return cw;
}

CWComplex f_top3(const Computad3& c) {
    auto rep = validate_computad3(c);
    if (!rep.ok())
        fail(Errc::InvalidTwoCellWord, rep.problems.front());
    CWComplex cw = f_top2(c.base);
    for (const auto& cell : c.cells3) {
        CWComplex::Cell3 out;
        out.name = cell.name;
        auto src = exponent_sums(c.base, cell.src);
        auto tgt = exponent_sums(c.base, cell.tgt);
        out.d3.resize(src.size());
        for (size_t i = 0; i < src.size(); ++i)
            out.d3[i] = src[i] - tgt[i];
        out.source_desc = word_to_string(c.base, cell.src);
        out.target_desc = word_to_string(c.base, cell.tgt);
        cw.cells3.push_back(std::move(out));
    }
    return cw;
}

long long euler_char(const CWComplex& cw) {
    return static_cast<long long>(cw.cells0.size()) - static_cast<long long>(cw.cells1.size()) +
           static_cast<long long>(cw.cells2.size()) - static_cast<long long>(cw.cells3.size());
}

std::array<long long, 4> betti_numbers(const CWComplex& cw) {
    ChainComplexQ cc = chain_complex(cw);
    long long n0 = static_cast<long long>(cw.cells0.size());
    long long n1 = static_cast<long long>(cw.cells1.size());
    long long n2 = static_cast<long long>(cw.cells2.size());
    long long n3 = static_cast<long long>(cw.cells3.size());
    long long r1 = rank_exact(cc.d1);
    long long r2 = rank_exact(cc.d2);
    long long r3 = rank_exact(cc.d3);
    std::array<long long, 4> b{};
    b[0] = n0 - r1;
    b[1] = (n1 - r1) - r2;
    b[2] = (n2 - r2) - r3;
    b[3] = n3 - r3;
    if (b[0] - b[1] + b[2] - b[3] != euler_char(cw))
        fail(Errc::Internal, "Betti alternating sum disagrees with the Euler characteristic");
    return b;
}

namespace {

Graph skeleton_graph(const CWComplex& cw) {
    Graph g;
    g.objects = cw.cells0;
    for (const auto& e : cw.cells1)
        g.add_arrow(e.name, e.src, e.dst);
    return g;
}

} // namespace

std::vector<std::pair<int, GroupPresentation>> pi1_from_cw(const CWComplex& cw) {
    Graph g = skeleton_graph(cw);
    Subgraph tree = spanning_forest(g);
    auto blocks = connected_components(g);

    std::vector<std::pair<int, GroupPresentation>> out;
    for (const auto& block : blocks) {
        std::vector<char> in_comp(g.objects.size(), 0);
        for (int o : block)
            in_comp[o] = 1;
        GroupPresentation p;
        std::vector<int> gen_of_edge(cw.cells1.size(), 0);
        for (int a = 0; a < g.num_arrows(); ++a) {
            if (!in_comp[g.arrows[a].dom] || tree.has_arrow(a))
                continue;
            p.generators.push_back(g.arrows[a].name);
            gen_of_edge[a] = static_cast<int>(p.generators.size());
        }
        for (const auto& f : cw.cells2) {
            if (!in_comp[f.base])
                continue;
            GWord rel;
            for (auto [e, s] : f.word) {
                int gen = gen_of_edge[e];
                if (gen == 0)
                    continue;
                rel.push_back(s > 0 ? gen : -gen);
            }
            p.relators.push_back(free_reduce(std::move(rel)));
        }
        out.emplace_back(block.front(), std::move(p));
    }
    return out;
}

Pi2Result pi2_rank_if_simply_connected(const CWComplex& cw, const TcLimits& limits) {
    auto presentations = pi1_from_cw(cw);
    if (presentations.size() != 1)
        return Pi2Result{Pi2Result::NotSimplyConnected, 0};
    auto res = is_trivial_group(presentations.front().second, limits);
    if (res.verdict == Triviality::No)
        return Pi2Result{Pi2Result::NotSimplyConnected, 0};
    if (res.verdict == Triviality::Unknown)
        return Pi2Result{Pi2Result::Unknown, 0};
    return Pi2Result{Pi2Result::Rank, betti_numbers(cw)[2]};
}

} // namespace cmpd
