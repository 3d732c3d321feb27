#ifndef CMPD_PATH_HPP
#define CMPD_PATH_HPP

#include <vector>

#include "cmpd/graph.hpp"

namespace cmpd {

// Morphism of the free category on a graph: a composable arrow list in
// diagrammatic order (first-traversed first). The empty list is the identity
// at `start`.
struct Path {
    int start = -1;
    std::vector<int> arrows;

    int length() const { return static_cast<int>(arrows.size()); }
    bool operator==(const Path&) const = default;
};

bool path_valid(const Graph& g, const Path& p);
int path_end(const Graph& g, const Path& p);
Path identity_path(int object);
Path arrow_path(const Graph& g, int arrow);

Path compose_paths(const Graph& g, const Path& p, const Path& q); // Errc::NotComposable
std::vector<Path> ulf_factorize(const Graph& g, const Path& p);

// Length-lex order with arrow declaration indices breaking ties.
int compare_paths(const Path& a, const Path& b);

std::string path_to_string(const Graph& g, const Path& p);

// Morphism of the free groupoid: reduced signed arrow list.
struct Letter {
    int arrow = -1;
    int sign = +1; // +1 or -1
    bool operator==(const Letter&) const = default;
};

struct Walk {
    int start = -1;
    std::vector<Letter> letters;

    int length() const { return static_cast<int>(letters.size()); }
    bool operator==(const Walk&) const = default;
};

int letter_source(const Graph& g, const Letter& l);
int letter_target(const Graph& g, const Letter& l);
bool walk_valid(const Graph& g, const Walk& w); // composable and reduced
int walk_end(const Graph& g, const Walk& w);

// Validates composability of the raw chain, then cancels adjacent inverse
// pairs until reduced.
Walk reduce_walk(const Graph& g, int start, std::vector<Letter> letters);
Walk invert_walk(const Graph& g, const Walk& w);
Walk compose_walks(const Graph& g, const Walk& a, const Walk& b);
Walk walk_of_path(const Path& p);

std::string walk_to_string(const Graph& g, const Walk& w);

struct PathEnumeration {
    std::vector<Path> paths; // lexicographic by (length, arrow order)
    bool all = false;        // true when the list provably contains every path
};

PathEnumeration enumerate_paths(const Graph& g, int from, int to, int max_len);

struct HomCount {
    bool infinite = false;
    long long count = 0;
};

// Number of paths from -> to; infinite iff a directed cycle lies on a route.
HomCount hom_count_free(const Graph& g, int from, int to);

// Unique reduced walk between two objects of a tree (undirected BFS with
// signs). Throws Errc::NotConnected when no tree route exists.
Walk tree_walk(const Graph& g, const Subgraph& tree, int from, int to);

// Unique positive path in a weak tree, if one exists.
std::optional<Path> tree_positive_path(const Graph& g, const Subgraph& tree, int from, int to);

} // namespace cmpd

#endif
