#include "cmpd/graph.hpp"

#include <algorithm>
#include <functional>
#include <numeric>
#include <queue>
#include <set>

namespace cmpd {

int Graph::object_index(std::string_view name) const {
    for (size_t i = 0; i < objects.size(); ++i)
        if (objects[i] == name)
            return static_cast<int>(i);
    return -1;
}

int Graph::arrow_index(std::string_view name) const {
    for (size_t i = 0; i < arrows.size(); ++i)
        if (arrows[i].name == name)
            return static_cast<int>(i);
    return -1;
}

int Graph::add_object(std::string name) {
    objects.push_back(std::move(name));
    return num_objects() - 1;
}

int Graph::add_arrow(std::string name, int dom, int cod) {
    arrows.push_back(Arrow{std::move(name), dom, cod});
    return num_arrows() - 1;
}

int Graph::add_arrow(std::string name, std::string_view dom, std::string_view cod) {
    int d = object_index(dom);
    int c = object_index(cod);
    if (d < 0 || c < 0)
        fail(Errc::UnresolvedReference, "arrow '" + name + "' references unknown object");
    return add_arrow(std::move(name), d, c);
}

Subgraph Subgraph::empty(const Graph& g) {
    Subgraph s;
    s.parent = &g;
    s.object_in.assign(g.objects.size(), 0);
    s.arrow_in.assign(g.arrows.size(), 0);
    return s;
}

Subgraph Subgraph::full(const Graph& g) {
    Subgraph s;
    s.parent = &g;
    s.object_in.assign(g.objects.size(), 1);
    s.arrow_in.assign(g.arrows.size(), 1);
    return s;
}

void Subgraph::add_arrow(int a) {
    arrow_in[a] = 1;
    object_in[parent->arrows[a].dom] = 1;
    object_in[parent->arrows[a].cod] = 1;
}

int Subgraph::count_objects() const {
    return static_cast<int>(std::count(object_in.begin(), object_in.end(), 1));
}

int Subgraph::count_arrows() const {
    return static_cast<int>(std::count(arrow_in.begin(), arrow_in.end(), 1));
}

std::vector<int> Subgraph::object_list() const {
    std::vector<int> r;
    for (size_t i = 0; i < object_in.size(); ++i)
        if (object_in[i])
            r.push_back(static_cast<int>(i));
    return r;
}

std::vector<int> Subgraph::arrow_list() const {
    std::vector<int> r;
    for (size_t i = 0; i < arrow_in.size(); ++i)
        if (arrow_in[i])
            r.push_back(static_cast<int>(i));
    return r;
}

Graph Subgraph::materialize() const {
    Graph g;
    std::vector<int> remap(parent->objects.size(), -1);
    for (size_t i = 0; i < parent->objects.size(); ++i)
        if (object_in[i])
            remap[i] = g.add_object(parent->objects[i]);
    for (size_t a = 0; a < parent->arrows.size(); ++a)
        if (arrow_in[a]) {
            const Arrow& ar = parent->arrows[a];
            g.add_arrow(ar.name, remap[ar.dom], remap[ar.cod]);
        }
    return g;
}

ValidationReport validate_graph(const Graph& g) {
    ValidationReport rep;
    std::set<std::string> seen;
    for (const auto& o : g.objects)
        if (!seen.insert(o).second)
            rep.problems.push_back("duplicate id '" + o + "'");
    seen.clear();
    for (const auto& a : g.arrows) {
        if (!seen.insert(a.name).second)
            rep.problems.push_back("duplicate id '" + a.name + "'");
        if (a.dom < 0 || a.dom >= g.num_objects())
            rep.problems.push_back("dangling dom on arrow '" + a.name + "'");
        if (a.cod < 0 || a.cod >= g.num_objects())
            rep.problems.push_back("dangling cod on arrow '" + a.name + "'");
    }
    return rep;
}

ValidationReport validate_reflexive_graph(const ReflexiveGraph& g) {
    ValidationReport rep = validate_graph(g.base);
    if (static_cast<int>(g.identity_arrow.size()) != g.base.num_objects()) {
        rep.problems.push_back("identity map not total");
        return rep;
    }
    std::set<int> used;
    for (int o = 0; o < g.base.num_objects(); ++o) {
        int a = g.identity_arrow[o];
        if (a < 0 || a >= g.base.num_arrows()) {
            rep.problems.push_back("identity of '" + g.base.objects[o] + "' is not an arrow");
            continue;
        }
        if (g.base.arrows[a].dom != o || g.base.arrows[a].cod != o)
            rep.problems.push_back("identity of '" + g.base.objects[o] + "' is not a loop at it");
        if (!used.insert(a).second)
            rep.problems.push_back("identity arrow '" + g.base.arrows[a].name + "' shared by two objects");
    }
    return rep;
}

long long euler_char_1(const Graph& g) {
    return static_cast<long long>(g.num_objects()) - g.num_arrows();
}

namespace {

struct UnionFind {
    std::vector<int> parent;
    explicit UnionFind(int n) : parent(n) { std::iota(parent.begin(), parent.end(), 0); }
    int find(int x) {
        while (parent[x] != x)
            x = parent[x] = parent[parent[x]];
        return x;
    }
    // false if already joined
    bool join(int a, int b) {
        a = find(a);
        b = find(b);
        if (a == b)
            return false;
        parent[b] = a;
        return true;
    }
};

} // namespace

std::vector<std::vector<int>> connected_components(const Graph& g) {
    UnionFind uf(g.num_objects());
    for (const auto& a : g.arrows)
        uf.join(a.dom, a.cod);
    std::vector<int> root_block(g.num_objects(), -1);
    std::vector<std::vector<int>> blocks;
    for (int o = 0; o < g.num_objects(); ++o) {
        int r = uf.find(o);
        if (root_block[r] < 0) {
            root_block[r] = static_cast<int>(blocks.size());
            blocks.emplace_back();
        }
        blocks[root_block[r]].push_back(o);
    }
    return blocks;
}

bool is_connected(const Graph& g) {
    return connected_components(g).size() <= 1;
}

Subgraph spanning_forest(const Graph& g) {
    Subgraph t = Subgraph::empty(g);
    std::vector<char> visited(g.objects.size(), 0);
    for (int root = 0; root < g.num_objects(); ++root) {
        if (visited[root])
            continue;
        visited[root] = 1;
        t.add_object(root);
        bool grew = true;
        while (grew) {
            grew = false;
            for (int a = 0; a < g.num_arrows(); ++a) {
                if (t.has_arrow(a))
                    continue;
                int d = g.arrows[a].dom;
                int c = g.arrows[a].cod;
                if (visited[d] == visited[c])
                    continue;
                visited[d] = visited[c] = 1;
                t.add_arrow(a);
                grew = true;
            }
        }
    }
    return t;
}

Subgraph maximal_tree(const Graph& g) {
    if (!is_connected(g))
        fail(Errc::NotConnected, "maximal_tree requires a connected graph");
    return spanning_forest(g);
}

bool is_forest(const Graph& g) {
    UnionFind uf(g.num_objects());
    for (const auto& a : g.arrows)
        if (!uf.join(a.dom, a.cod))
            return false; // undirected cycle (covers loops and parallel pairs)
    return true;
}

bool is_tree(const Graph& g) {
    return is_forest(g) && is_connected(g);
}

bool is_acyclic(const Graph& g) {
    std::vector<int> indeg(g.objects.size(), 0);
    for (const auto& a : g.arrows)
        ++indeg[a.cod];
    std::queue<int> q;
    for (int o = 0; o < g.num_objects(); ++o)
        if (indeg[o] == 0)
            q.push(o);
    int seen = 0;
    while (!q.empty()) {
        int o = q.front();
        q.pop();
        ++seen;
        for (const auto& a : g.arrows)
            if (a.dom == o && --indeg[a.cod] == 0)
                q.push(a.cod);
    }
    return seen == g.num_objects();
}

namespace {

std::vector<int> topological_order(const Graph& g) {
    std::vector<int> indeg(g.objects.size(), 0);
    for (const auto& a : g.arrows)
        ++indeg[a.cod];
    std::vector<int> order;
    std::queue<int> q;
    for (int o = 0; o < g.num_objects(); ++o)
        if (indeg[o] == 0)
            q.push(o);
    while (!q.empty()) {
        int o = q.front();
        q.pop();
        order.push_back(o);
        for (const auto& a : g.arrows)
            if (a.dom == o && --indeg[a.cod] == 0)
                q.push(a.cod);
    }
    return order; // shorter than |objects| if cyclic
}

} // namespace

bool is_weak_forest(const Graph& g) {
    if (!is_acyclic(g))
        return false;
    auto order = topological_order(g);
    // Saturating path counts from each source; more than one path between an
    // ordered pair kills thinness.
    for (int src = 0; src < g.num_objects(); ++src) {
        std::vector<int> count(g.objects.size(), 0);
        count[src] = 1;
        for (int o : order) {
            if (count[o] == 0)
                continue;
            for (const auto& a : g.arrows) {
                if (a.dom != o)
                    continue;
                count[a.cod] = std::min(2, count[a.cod] + count[o]);
                if (count[a.cod] > 1)
                    return false;
            }
        }
    }
    return true;
}

bool is_weak_tree(const Graph& g) {
    return is_connected(g) && is_weak_forest(g);
}

namespace {

Graph subgraph_plus_arrow(const Subgraph& t, int extra) {
    Subgraph s = t;
    s.add_arrow(extra);
    return s.materialize();
}

} // namespace

bool is_maximal_weak_tree(const Graph& g, const Subgraph& t) {
    if (!is_weak_tree(t.materialize()))
        return false;
    for (int a = 0; a < g.num_arrows(); ++a) {
        if (t.has_arrow(a))
            continue;
        Graph ext = subgraph_plus_arrow(t, a);
        // The extension is a weak tree iff it is connected and a weak
        // forest; it is connected iff the new arrow touches t.
        if (is_weak_tree(ext))
            return false;
    }
    return true;
}

namespace {

// Enumerate spanning trees of the component containing `objects`, declared
// arrow order, stopping at the first tree accepted by `accept`.
bool enumerate_spanning_trees(const Graph& g, const std::vector<int>& component_arrows, int num_objects,
                              const std::vector<int>& object_ids, const std::function<bool(const std::vector<int>&)>& accept) {
    std::vector<int> chosen;
    std::vector<int> obj_pos(g.num_objects(), -1);
    for (size_t i = 0; i < object_ids.size(); ++i)
        obj_pos[object_ids[i]] = static_cast<int>(i);

    std::function<bool(size_t, UnionFind&)> rec = [&](size_t idx, UnionFind& uf) -> bool {
        if (static_cast<int>(chosen.size()) == num_objects - 1)
            return accept(chosen);
        if (idx >= component_arrows.size())
            return false;
        int remaining = static_cast<int>(component_arrows.size() - idx);
        if (static_cast<int>(chosen.size()) + remaining < num_objects - 1)
            return false;
        int a = component_arrows[idx];
        int d = obj_pos[g.arrows[a].dom];
        int c = obj_pos[g.arrows[a].cod];
        if (uf.find(d) != uf.find(c)) {
            UnionFind uf2 = uf;
            uf2.join(d, c);
            chosen.push_back(a);
            if (rec(idx + 1, uf2))
                return true;
            chosen.pop_back();
        }
        return rec(idx + 1, uf);
    };
    UnionFind uf(num_objects);
    return rec(0, uf);
}

} // namespace

std::vector<Subgraph> all_spanning_trees(const Graph& g, int cap) {
    std::vector<Subgraph> out;
    if (!is_connected(g) || g.num_objects() == 0)
        return out;
    std::vector<int> objects(g.num_objects());
    std::iota(objects.begin(), objects.end(), 0);
    std::vector<int> arrows(g.num_arrows());
    std::iota(arrows.begin(), arrows.end(), 0);
    auto accept = [&](const std::vector<int>& chosen) {
        Subgraph t = Subgraph::full(g);
        t.arrow_in.assign(g.arrows.size(), 0);
        for (int a : chosen)
            t.arrow_in[a] = 1;
        out.push_back(t);
        return static_cast<int>(out.size()) >= cap; // stop at the cap
    };
    enumerate_spanning_trees(g, arrows, g.num_objects(), objects, accept);
    return out;
}

FairResult is_fair(const Graph& g, const FairLimits& limits) {
    FairResult result;
    for (const auto& block : connected_components(g)) {
        std::vector<char> in_block(g.objects.size(), 0);
        for (int o : block)
            in_block[o] = 1;
        std::vector<int> block_arrows;
        for (int a = 0; a < g.num_arrows(); ++a)
            if (in_block[g.arrows[a].dom])
                block_arrows.push_back(a);
        int n = static_cast<int>(block.size());
        int nontree = static_cast<int>(block_arrows.size()) - (n - 1);
        if (nontree > limits.max_nontree_arrows)
            fail(Errc::SizeLimitExceeded, "is_fair: component exceeds non-tree arrow bound");

        auto accept = [&](const std::vector<int>& tree_arrows) -> bool {
            Subgraph t = Subgraph::empty(g);
            for (int o : block)
                t.add_object(o);
            for (int a : tree_arrows)
                t.add_arrow(a);
            for (int a : block_arrows) {
                if (t.has_arrow(a))
                    continue;
                if (is_weak_tree(subgraph_plus_arrow(t, a)))
                    return false; // extendable, not maximal
            }
            result.witness = t;
            return true;
        };
        if (enumerate_spanning_trees(g, block_arrows, n, block, accept)) {
            result.fair = true;
            return result;
        }
    }
    return result;
}

bool reachable_in(const Graph& g, const Subgraph& sub, int from, int to) {
    if (from == to)
        return sub.has_object(from);
    std::vector<char> seen(g.objects.size(), 0);
    std::queue<int> q;
    q.push(from);
    seen[from] = 1;
    while (!q.empty()) {
        int o = q.front();
        q.pop();
        for (int a = 0; a < g.num_arrows(); ++a) {
            if (!sub.has_arrow(a) || g.arrows[a].dom != o)
                continue;
            int c = g.arrows[a].cod;
            if (c == to)
                return true;
            if (!seen[c]) {
                seen[c] = 1;
                q.push(c);
            }
        }
    }
    return false;
}

MonotoneClass classify_monotone(const Graph& g, const Subgraph& t) {
    if (!is_maximal_weak_tree(g, t))
        fail(Errc::NotMaximalWeakTree, "classify_monotone requires a maximal weak tree");
    MonotoneClass result;
    result.kind = MonotoneKind::StrictlyIncreasing;
    for (const auto& a : g.arrows) {
        bool up = reachable_in(g, t, a.dom, a.cod);
        bool down = reachable_in(g, t, a.cod, a.dom);
        if (!up && !down)
            return MonotoneClass{MonotoneKind::NotMonotone, 0};
        if (down) { // cod <= dom, nonincreasing (loops included)
            result.kind = MonotoneKind::Monotone;
            ++result.nonincreasing;
        }
    }
    if (result.nonincreasing == 0)
        result.kind = MonotoneKind::StrictlyIncreasing;
    return result;
}

Graph strip_reflexive(const ReflexiveGraph& g) {
    std::vector<char> is_identity(g.base.arrows.size(), 0);
    for (int a : g.identity_arrow)
        is_identity[a] = 1;
    Graph out;
    out.objects = g.base.objects;
    for (int a = 0; a < g.base.num_arrows(); ++a)
        if (!is_identity[a])
            out.arrows.push_back(g.base.arrows[a]);
    return out;
}

ReflexiveGraph free_reflexive(const Graph& g) {
    ReflexiveGraph r;
    r.base = g;
    for (int o = 0; o < g.num_objects(); ++o)
        r.identity_arrow.push_back(r.base.add_arrow("id_" + g.objects[o], o, o));
    return r;
}

} // namespace cmpd
