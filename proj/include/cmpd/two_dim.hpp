#ifndef CMPD_TWO_DIM_HPP
#define CMPD_TWO_DIM_HPP

#include <optional>
#include <string>
#include <vector>

#include "cmpd/computad.hpp"

namespace cmpd {

// One whiskered generator 2-cell: left . gen^exp . right, with paths over
// the computad base.
struct WhiskerFactor {
    Path left;
    int gen = -1; // 2-cell index in the base computad
    int exp = +1; // +1 or -1
    Path right;
};

// Vertical composite of whiskered generators. Empty words are identity
// 2-cells of their anchor path.
struct TwoCellWord {
    std::vector<WhiskerFactor> factors;
    std::optional<Path> anchor; // required when factors is empty

    bool empty() const { return factors.empty(); }
};

Path factor_source(const ReflexiveComputad2& c, const WhiskerFactor& f);
Path factor_target(const ReflexiveComputad2& c, const WhiskerFactor& f);
Path word_source(const ReflexiveComputad2& c, const TwoCellWord& w);
Path word_target(const ReflexiveComputad2& c, const TwoCellWord& w);

ValidationReport validate_2word(const ReflexiveComputad2& c, const TwoCellWord& w);

// Cancels adjacent inverse factors and bubbles interchange-commuting
// neighbours so the factor rewriting the leftmost segment comes first.
// Fixpoint; the canonical form for whisker words modulo interchange and
// free inverses.
TwoCellWord normalize_2word(const ReflexiveComputad2& c, const TwoCellWord& w);

// Exponent sums per 2-cell generator; interchange- and
// cancellation-invariant.
std::vector<long long> exponent_sums(const ReflexiveComputad2& c, const TwoCellWord& w);

std::string word_to_string(const ReflexiveComputad2& c, const TwoCellWord& w);

// 3-computad: reflexive 2-computad plus 3-cells between parallel 2-cell
// words.
struct ThreeCell {
    std::string name;
    TwoCellWord src;
    TwoCellWord tgt;
};

struct Computad3 {
    ReflexiveComputad2 base;
    std::vector<ThreeCell> cells3;

    int cell3_index(std::string_view name) const;
};

ValidationReport validate_computad3(const Computad3& c);

enum class FcsVerdict { Yes, No, Unknown };

struct FcsResult {
    FcsVerdict verdict = FcsVerdict::Unknown;
    std::string detail;
};

// Sub-computad candidate over a one-0-cell reflexive computad, given by its
// cell subset (an f.c.s. must contain every 1-cell, so only cells vary).
struct FcsCandidate {
    std::vector<char> cell_in;
};

// Syntactic criterion for Yes; No by a missing comparison cell
// (abelianization) or an exhibited pair of parallel comparison derivations
// that stay distinct under the interchange normal form. Throws
// Errc::MultipleZeroCells.
FcsResult is_fcs(const FcsCandidate& candidate, const ReflexiveComputad2& ambient);

struct Synth320Result {
    Computad3 computad;
    bool lifted = false;         // boundaries expressed over the original base
    std::vector<int> outside;    // indices of the 2-cells outside the f.c.s.
};

// Presentation of the locally thin (2,0)-category generated by g2: one
// 3-cell per 2-cell outside the f.c.s., with the composite comparison cell
// as the other side. (g2, tree, fcs_cells) must be an f.c.s. triple; throws
// Errc::NotFcsTriple.
Synth320Result synth_320_presentation(const ReflexiveComputad2& g2, const Subgraph& tree,
                                      const std::vector<std::string>& fcs_cells);

enum class LocalThinness { NotThin, ThinByFcs, Unknown };

struct LocalThinnessResult {
    LocalThinness verdict = LocalThinness::Unknown;
    std::string detail;
};

LocalThinnessResult locally_thin_criteria(const Computad3& c);

// Greedy singleton-elimination certificate on a one-object computad: pairs
// cells with 1-cells by repeatedly taking cells whose boundary is a single
// unpaired letter modulo letters already paired away. Sound: it
// triangularizes the relator system. Returns the pairing cells when every
// arrow gets paired.
std::optional<std::vector<int>> greedy_fcs_pairing(const Computad2& collapsed);

} // namespace cmpd

#endif
