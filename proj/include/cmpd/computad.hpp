#ifndef CMPD_COMPUTAD_HPP
#define CMPD_COMPUTAD_HPP

#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "cmpd/path.hpp"

namespace cmpd {

// 2-cell between parallel paths of the free category on the base graph.
struct PathCell {
    std::string name;
    Path src;
    Path tgt;
};

// 2-cell between parallel reduced walks of the free groupoid.
struct WalkCell {
    std::string name;
    Walk src;
    Walk tgt;
};

struct Computad2 {
    Graph base;
    std::vector<PathCell> cells;

    int cell_index(std::string_view name) const;
};

struct GroupoidalComputad2 {
    Graph base;
    std::vector<WalkCell> cells;

    int cell_index(std::string_view name) const;
};

// Computad over a reflexive graph. Boundary paths are kept normalized:
// identity arrows never occur as letters.
struct ReflexiveComputad2 {
    ReflexiveGraph base;
    std::vector<PathCell> cells;

    int cell_index(std::string_view name) const;
    bool is_identity_arrow(int a) const;
};

ValidationReport validate_computad(const Computad2& c);
ValidationReport validate_computad(const GroupoidalComputad2& c);
ValidationReport validate_computad(const ReflexiveComputad2& c);

Computad2 i2(const Graph& g);
GroupoidalComputad2 i2_groupoidal(const Graph& g);
const Graph& u2(const Computad2& c);
const Graph& u2(const GroupoidalComputad2& c);

// Erases identity letters from the cell boundaries (no-op if already
// normalized). Used by parsers and constructors.
void normalize_reflexive(ReflexiveComputad2& c);

// Plain computad underlying a reflexive one: strips identity arrows and
// renumbers the cell boundaries accordingly.
Computad2 strip_computad(const ReflexiveComputad2& c);
ReflexiveComputad2 free_reflexive_computad(const Computad2& c);

enum class Sigma2Status { Complete, Truncated, Unbounded };

struct Sigma2Result {
    Sigma2Status status = Sigma2Status::Unbounded;
    std::optional<Computad2> computad;
};

// Right adjoint to the underlying-graph functor: one 2-cell per ordered pair
// of parallel paths, diagonal pairs included. Finite only over a DAG; a
// cyclic base yields Unbounded unless a truncation length is requested.
Sigma2Result sigma2(const Graph& g, std::optional<int> max_len = {});

GroupoidalComputad2 groupoidalize(const Computad2& c);

Subgraph image_subgraph(const Computad2& c);
Subgraph graph_domain(const Computad2& c);
Subgraph graph_codomain(const Computad2& c);
Subgraph image_subgraph(const GroupoidalComputad2& c);
Subgraph graph_domain(const GroupoidalComputad2& c);
Subgraph graph_codomain(const GroupoidalComputad2& c);

// Sub-computad: subsets of objects, arrows and cells, closed under boundary
// data.
struct SubComputad {
    std::vector<char> object_in;
    std::vector<char> arrow_in;
    std::vector<char> cell_in;

    static SubComputad empty(int objects, int arrows, int cells);
};

ValidationReport validate_subcomputad(const Computad2& c, const SubComputad& sub);
ValidationReport validate_subcomputad(const GroupoidalComputad2& c, const SubComputad& sub);

// Collapses sub's objects to one point, deletes sub's arrows and 2-cells,
// and erases collapsed letters from surviving boundaries. Throws
// Errc::NotSubcomputad on invalid input.
Computad2 quotient_collapse(const Computad2& c, const SubComputad& sub);
GroupoidalComputad2 quotient_collapse(const GroupoidalComputad2& c, const SubComputad& sub);

// Suspension of a monoid presentation: one object, generators as loops,
// one 2-cell per relation.
Computad2 suspend_monoid_presentation(const std::vector<std::string>& generators,
                                      const std::vector<std::pair<std::vector<std::string>, std::vector<std::string>>>& relations);

// Group words carry signs.
using SignedWord = std::vector<std::pair<std::string, int>>;

GroupoidalComputad2 suspend_group_presentation(const std::vector<std::string>& generators,
                                               const std::vector<std::pair<SignedWord, SignedWord>>& relations);

} // namespace cmpd

#endif
