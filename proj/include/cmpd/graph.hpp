#ifndef CMPD_GRAPH_HPP
#define CMPD_GRAPH_HPP

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "cmpd/error.hpp"

namespace cmpd {

// Finite directed multigraph with named objects and arrows. All iteration
// follows declaration order; that order is the tie-break everywhere else in
// the library, so it is part of the data.
struct Arrow {
    std::string name;
    int dom = -1;
    int cod = -1;
};

struct Graph {
    std::vector<std::string> objects;
    std::vector<Arrow> arrows;

    int num_objects() const { return static_cast<int>(objects.size()); }
    int num_arrows() const { return static_cast<int>(arrows.size()); }

    int object_index(std::string_view name) const;
    int arrow_index(std::string_view name) const;

    int add_object(std::string name);
    int add_arrow(std::string name, int dom, int cod);
    int add_arrow(std::string name, std::string_view dom, std::string_view cod);
};

// Reflexive graph: a graph plus a chosen identity arrow per object.
struct ReflexiveGraph {
    Graph base;
    std::vector<int> identity_arrow; // object index -> arrow index in base
};

// Subgraph of a fixed parent, stored as membership masks.
struct Subgraph {
    const Graph* parent = nullptr;
    std::vector<char> object_in;
    std::vector<char> arrow_in;

    static Subgraph empty(const Graph& g);
    static Subgraph full(const Graph& g);

    bool has_object(int o) const { return object_in[o] != 0; }
    bool has_arrow(int a) const { return arrow_in[a] != 0; }
    void add_object(int o) { object_in[o] = 1; }
    void add_arrow(int a);

    int count_objects() const;
    int count_arrows() const;
    std::vector<int> object_list() const;
    std::vector<int> arrow_list() const;

    Graph materialize() const; // standalone copy, declaration order preserved
};

struct ValidationReport {
    std::vector<std::string> problems;
    bool ok() const { return problems.empty(); }
};

ValidationReport validate_graph(const Graph& g);
ValidationReport validate_reflexive_graph(const ReflexiveGraph& g);

long long euler_char_1(const Graph& g);

// Blocks of undirected reachability, in first-seen declaration order.
std::vector<std::vector<int>> connected_components(const Graph& g);
bool is_connected(const Graph& g);

// Deterministic spanning tree: repeatedly scan the arrow list in declaration
// order, taking any arrow with exactly one endpoint visited. Throws
// Errc::NotConnected on disconnected input.
Subgraph maximal_tree(const Graph& g);

// Spanning forest by the same scan, one tree per component; never throws.
Subgraph spanning_forest(const Graph& g);

bool is_forest(const Graph& g);
bool is_tree(const Graph& g);

// True iff g is a DAG with at most one directed path between each ordered
// pair of objects.
bool is_weak_forest(const Graph& g);
bool is_weak_tree(const Graph& g);

bool is_acyclic(const Graph& g); // directed sense

struct FairLimits {
    int max_nontree_arrows = 16;
};

struct FairResult {
    bool fair = false;
    std::optional<Subgraph> witness; // a maximal weak tree that is a tree
};

// Searches for a spanning tree (per component) that is inclusion-maximal
// among weak-tree subgraphs. Exponential in the worst case; throws
// Errc::SizeLimitExceeded when a component exceeds the non-tree arrow bound.
FairResult is_fair(const Graph& g, const FairLimits& limits = {});

// True iff t is an inclusion-maximal weak tree subgraph of g.
bool is_maximal_weak_tree(const Graph& g, const Subgraph& t);

// All spanning trees of a connected graph, declaration order, capped.
std::vector<Subgraph> all_spanning_trees(const Graph& g, int cap = 1000);

enum class MonotoneKind { StrictlyIncreasing, Monotone, NotMonotone };

struct MonotoneClass {
    MonotoneKind kind = MonotoneKind::NotMonotone;
    int nonincreasing = 0;
};

// Classifies the arrows of g against the reachability order of the maximal
// weak tree t. Throws Errc::NotMaximalWeakTree if t does not qualify.
MonotoneClass classify_monotone(const Graph& g, const Subgraph& t);

// Removes exactly the identity arrows.
Graph strip_reflexive(const ReflexiveGraph& g);

// Free reflexive graph on g: adds one fresh identity arrow per object.
ReflexiveGraph free_reflexive(const Graph& g);

// Reachability x -> y along arrows of the subgraph mask (directed).
bool reachable_in(const Graph& g, const Subgraph& sub, int from, int to);

} // namespace cmpd

#endif
