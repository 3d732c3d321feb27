#ifndef CMPD_QUOTIENT_HPP
#define CMPD_QUOTIENT_HPP

#include <vector>

#include "cmpd/category_table.hpp"
#include "cmpd/computad.hpp"
#include "cmpd/rewrite.hpp"

namespace cmpd {

// Finite presented category: normal-form representatives and a composition
// table. Built either by congruence closure over all paths (acyclic base)
// or from a complete rewriting system with finite hom-sets.
struct FinQuotient {
    std::vector<std::string> objects;

    struct Mor {
        Path rep;
        int dom = -1;
        int cod = -1;
    };

    std::vector<Mor> morphisms;
    std::vector<int> identity;                     // per object
    std::vector<std::vector<int>> then_table;      // diagrammatic composition
    std::vector<std::vector<long long>> hom_sizes; // [from][to]

    long long total_morphisms() const;
    int find_by_rep(const Path& p) const;
};

// Quotient of the free category on an acyclic base by the congruence the
// 2-cells generate; union-find saturation over whiskered cell instances.
// Throws Errc::InfiniteFreeCategory on a cyclic base.
FinQuotient present_category_finite(const Computad2& c);

// Same table from a complete rewriting system; every hom-set must have
// finitely many irreducible paths. Throws Errc::InfiniteFreeCategory when a
// hom-set is infinite.
FinQuotient quotient_from_complete_system(const Graph& g, const RewriteSystem& rs);

bool satisfies_cancellation_finite(const FinQuotient& q);

FiniteCategoryTable to_table(const FinQuotient& q);

} // namespace cmpd

#endif
