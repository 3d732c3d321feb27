#ifndef CMPD_DEFICIENCY_HPP
#define CMPD_DEFICIENCY_HPP

#include <variant>

#include "cmpd/computad.hpp"
#include "cmpd/cw.hpp"

namespace cmpd {

struct DeficiencyReport {
    long long chi1 = 0;
    long long cells2 = 0;
    long long deficiency = 0; // 1 - cells2 - chi1
    bool bound_ok = false;    // chi1 + cells2 - 1 >= 0
};

DeficiencyReport deficiency_of_presentation(const GroupoidalComputad2& c); // Errc::NotConnected

enum class BoundCheck { ViolatesBound, Inconclusive };

// ViolatesBound (presented groupoid provably not thin) iff the associated
// 2-complex has Euler characteristic < 1.
BoundCheck check_not_thin_bound(const GroupoidalComputad2& c); // Errc::NotConnected

// One 2-cell per non-tree arrow: tree walk => arrow; exactly 1 - chi cells;
// presents the thin groupoid on g.
GroupoidalComputad2 synth_efficient_groupoid(const Graph& g); // Errc::NotConnected

struct NotFair {};

// Lifting of the efficient groupoid presentation to a plain computad when g
// is fair: per non-tree arrow, a 2-cell between positive parallel paths with
// the same image subgraph, one side inside the witness tree.
std::variant<Computad2, NotFair> lift_to_category_presentation(const Graph& g); // Errc::NotConnected

Computad2 synth_strictly_increasing(const Graph& g, const Subgraph& tree); // Errc::NotStrictlyIncreasing
Computad2 synth_monotone(const Graph& g, const Subgraph& tree);            // Errc::NotMonotone

// 1 - chi(F_Top2(c)).
long long deficiency_of_category_presentation(const Computad2& c); // Errc::NotConnected

} // namespace cmpd

#endif
