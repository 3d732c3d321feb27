#ifndef CMPD_PRESENTATION_HPP
#define CMPD_PRESENTATION_HPP

#include "cmpd/computad.hpp"
#include "cmpd/group.hpp"
#include "cmpd/quotient.hpp"
#include "cmpd/rewrite.hpp"

namespace cmpd {

// Fundamental-group presentation of the component containing `object`:
// spanning-tree collapse. Generators are the component's non-tree arrows in
// declaration order; each 2-cell w1 => w2 contributes the reduced relator
// image(w1) . image(w2)^-1 with tree letters erased. Throws
// Errc::ObjectNotFound.
GroupPresentation pi1_presentation(const GroupoidalComputad2& c, int object);

enum class Thinness { Yes, No, Unknown };

struct ThinnessResult {
    Thinness verdict = Thinness::Unknown;
    std::string detail;
};

// Thin iff every component's vertex group is trivial.
ThinnessResult is_thin_groupoid(const GroupoidalComputad2& c, const TcLimits& limits = {});

// Exact over an acyclic base; over a cyclic base decides via a complete
// rewriting system (irreducible-path counts per hom-set), else Unknown.
ThinnessResult is_thin_category(const Computad2& c, const KbLimits& kb = {}, const TcLimits& tc = {});

} // namespace cmpd

#endif
