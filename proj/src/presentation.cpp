#include "cmpd/presentation.hpp"

#include <algorithm>

namespace cmpd {

GroupPresentation pi1_presentation(const GroupoidalComputad2& c, int object) {
    const Graph& g = c.base;
    if (object < 0 || object >= g.num_objects())
        fail(Errc::ObjectNotFound, "pi1_presentation: no such object");

    std::vector<char> in_comp(g.objects.size(), 0);
    for (const auto& block : connected_components(g)) {
        if (std::find(block.begin(), block.end(), object) == block.end())
            continue;
        for (int o : block)
            in_comp[o] = 1;
        break;
    }

    Subgraph tree = spanning_forest(g); // per component, deterministic

    GroupPresentation p;
    std::vector<int> gen_of_arrow(g.num_arrows(), 0); // 1-based generator ids
    for (int a = 0; a < g.num_arrows(); ++a) {
        if (!in_comp[g.arrows[a].dom] || tree.has_arrow(a))
            continue;
        p.generators.push_back(g.arrows[a].name);
        gen_of_arrow[a] = static_cast<int>(p.generators.size());
    }

    auto image = [&](const Walk& w) {
        GWord word;
        for (const Letter& l : w.letters) {
            int gen = gen_of_arrow[l.arrow];
            if (gen == 0)
                continue; // tree letter
            word.push_back(l.sign > 0 ? gen : -gen);
        }
        return word;
    };

    for (const auto& cell : c.cells) {
        if (!in_comp[cell.src.start])
            continue;
        GWord rel = image(cell.src);
        GWord inv = invert_word(image(cell.tgt));
        rel.insert(rel.end(), inv.begin(), inv.end());
        rel = free_reduce(std::move(rel));
        p.relators.push_back(std::move(rel));
    }
    return p;
}

ThinnessResult is_thin_groupoid(const GroupoidalComputad2& c, const TcLimits& limits) {
    const Graph& g = c.base;
    auto blocks = connected_components(g);
    bool unknown = false;
    for (const auto& block : blocks) {
        auto pres = pi1_presentation(c, block.front());
        auto res = is_trivial_group(pres, limits);
        if (res.verdict == Triviality::No)
            return ThinnessResult{Thinness::No,
                                  "component of '" + g.objects[block.front()] + "': " + res.witness};
        if (res.verdict == Triviality::Unknown)
            unknown = true;
    }
    if (unknown)
        return ThinnessResult{Thinness::Unknown, "triviality undecided within limits"};
    return ThinnessResult{Thinness::Yes, "all vertex groups trivial"};
}

ThinnessResult is_thin_category(const Computad2& c, const KbLimits& kb, const TcLimits& tc) {
    const Graph& g = c.base;

    if (is_acyclic(g)) {
        FinQuotient q = present_category_finite(c);
        for (int x = 0; x < g.num_objects(); ++x)
            for (int z = 0; z < g.num_objects(); ++z)
                if (q.hom_sizes[x][z] > 1)
                    return ThinnessResult{Thinness::No,
                                          "hom(" + g.objects[x] + "," + g.objects[z] + ") has " +
                                              std::to_string(q.hom_sizes[x][z]) + " morphisms"};
        return ThinnessResult{Thinness::Yes, "finite quotient has singleton hom-sets"};
    }

    auto kbres = knuth_bendix(c, kb);
    if (kbres.complete) {
        for (int x = 0; x < g.num_objects(); ++x)
            for (int z = 0; z < g.num_objects(); ++z) {
                int n = count_irreducible(g, kbres.system, x, z);
                if (n > 1)
                    return ThinnessResult{Thinness::No,
                                          "hom(" + g.objects[x] + "," + g.objects[z] +
                                              ") has more than one normal form"};
            }
        return ThinnessResult{Thinness::Yes, "complete system with at most one normal form per hom-set"};
    }

    // Completion timed out; the remaining sufficient route needs the
    // cancellation law, which we can only certify in the finite regime.
    auto gthin = is_thin_groupoid(groupoidalize(c), tc);
    if (gthin.verdict == Thinness::No) {
        // Not conclusive for the category: the groupoid reflection can
        // collapse less than the category quotient only in the other
        // direction, so a non-thin groupoid does not decide this.
        return ThinnessResult{Thinness::Unknown, "completion timed out; groupoid route inconclusive"};
    }
    return ThinnessResult{Thinness::Unknown, "completion timed out"};
}

} // namespace cmpd
