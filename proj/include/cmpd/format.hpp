#ifndef CMPD_FORMAT_HPP
#define CMPD_FORMAT_HPP

#include <optional>
#include <string>

#include "cmpd/category_table.hpp"
#include "cmpd/computad.hpp"
#include "cmpd/two_dim.hpp"

namespace cmpd {

enum class DocKind {
    Graph,
    ReflexiveGraph,
    Computad,
    GroupoidalComputad,
    Computad3,
    Table,
    PresentationMonoid,
    PresentationGroup,
};

struct PresentationDecl {
    bool group = false;
    std::vector<std::string> generators;
    std::vector<std::pair<SignedWord, SignedWord>> relations;
};

// One root entity per file. Line grammar:
//   kind <kind>                  (optional; inferred otherwise)
//   pattern nat|natop|int        (graph files only)
//   object <id>
//   arrow <id> : <src> -> <tgt>
//   identity <id> : <obj>        (reflexive kinds; declares the arrow too)
//   cell2 <id> : <path> => <path>
//   cell3 <id> : <2word> => <2word>
//   mor <id> : <src> -> <tgt>    (table files)
//   id <obj> = <mor>
//   comp <f> <g> = <h>           (diagrammatic: f then g equals h)
//   generator <id>               (presentation files)
//   relation <word> = <word>
// Paths are space-separated arrow names, `id(<obj>)` when empty; `^-1`
// suffixes are allowed in groupoidal and presentation-group files. 2-cell
// words are `;`-separated factors `[ <path> | <gen>(^-1)? | <path> ]`, or
// `id(<path>)` for the empty word. `#` starts a comment. Declaration order
// is canonical and drives every tie-break.
struct CmpDocument {
    DocKind kind = DocKind::Graph;
    Graph graph;
    ReflexiveGraph rgraph;
    Computad2 computad;
    GroupoidalComputad2 gcomputad;
    Computad3 computad3;
    FiniteCategoryTable table;
    PresentationDecl presentation;
    std::optional<TotalOrderPattern> pattern;

    const Graph& any_graph() const;
};

CmpDocument parse_cmp(const std::string& text);      // Errc::ParseError / UnresolvedReference
CmpDocument parse_cmp_file(const std::string& path); // adds file context to errors
std::string print_cmp(const CmpDocument& doc);       // canonical text; parse . print = id

const char* kind_name(DocKind k);

} // namespace cmpd

#endif
