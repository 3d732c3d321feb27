#include "cmpd/path.hpp"

#include <algorithm>
#include <queue>

namespace cmpd {

bool path_valid(const Graph& g, const Path& p) {
    if (p.start < 0 || p.start >= g.num_objects())
        return false;
    int at = p.start;
    for (int a : p.arrows) {
        if (a < 0 || a >= g.num_arrows() || g.arrows[a].dom != at)
            return false;
        at = g.arrows[a].cod;
    }
    return true;
}

int path_end(const Graph& g, const Path& p) {
    return p.arrows.empty() ? p.start : g.arrows[p.arrows.back()].cod;
}

Path identity_path(int object) {
    return Path{object, {}};
}

Path arrow_path(const Graph& g, int arrow) {
    return Path{g.arrows[arrow].dom, {arrow}};
}

Path compose_paths(const Graph& g, const Path& p, const Path& q) {
    if (path_end(g, p) != q.start)
        fail(Errc::NotComposable, "paths do not compose");
    Path r = p;
    r.arrows.insert(r.arrows.end(), q.arrows.begin(), q.arrows.end());
    return r;
}

std::vector<Path> ulf_factorize(const Graph& g, const Path& p) {
    std::vector<Path> factors;
    for (int a : p.arrows)
        factors.push_back(arrow_path(g, a));
    return factors;
}

int compare_paths(const Path& a, const Path& b) {
    if (a.length() != b.length())
        return a.length() < b.length() ? -1 : 1;
    if (a.arrows < b.arrows)
        return -1;
    if (b.arrows < a.arrows)
        return 1;
    return 0;
}

std::string path_to_string(const Graph& g, const Path& p) {
    if (p.arrows.empty())
        return "id(" + g.objects[p.start] + ")";
    std::string s;
    for (size_t i = 0; i < p.arrows.size(); ++i) {
        if (i)
            s += ' ';
        s += g.arrows[p.arrows[i]].name;
    }
    return s;
}

int letter_source(const Graph& g, const Letter& l) {
    return l.sign > 0 ? g.arrows[l.arrow].dom : g.arrows[l.arrow].cod;
}

int letter_target(const Graph& g, const Letter& l) {
    return l.sign > 0 ? g.arrows[l.arrow].cod : g.arrows[l.arrow].dom;
}

bool walk_valid(const Graph& g, const Walk& w) {
    if (w.start < 0 || w.start >= g.num_objects())
        return false;
    int at = w.start;
    for (size_t i = 0; i < w.letters.size(); ++i) {
        const Letter& l = w.letters[i];
        if (l.arrow < 0 || l.arrow >= g.num_arrows() || (l.sign != 1 && l.sign != -1))
            return false;
        if (letter_source(g, l) != at)
            return false;
        at = letter_target(g, l);
        if (i > 0 && w.letters[i - 1].arrow == l.arrow && w.letters[i - 1].sign == -l.sign)
            return false; // not reduced
    }
    return true;
}

int walk_end(const Graph& g, const Walk& w) {
    return w.letters.empty() ? w.start : letter_target(g, w.letters.back());
}

Walk reduce_walk(const Graph& g, int start, std::vector<Letter> letters) {
    int at = start;
    std::vector<Letter> out;
    for (const Letter& l : letters) {
        if (letter_source(g, l) != at)
            fail(Errc::NotComposable, "walk letters do not chain");
        at = letter_target(g, l);
        if (!out.empty() && out.back().arrow == l.arrow && out.back().sign == -l.sign)
            out.pop_back();
        else
            out.push_back(l);
    }
    return Walk{start, std::move(out)};
}

Walk invert_walk(const Graph& g, const Walk& w) {
    Walk r;
    r.start = walk_end(g, w);
    for (auto it = w.letters.rbegin(); it != w.letters.rend(); ++it)
        r.letters.push_back(Letter{it->arrow, -it->sign});
    return r;
}

Walk compose_walks(const Graph& g, const Walk& a, const Walk& b) {
    if (walk_end(g, a) != b.start)
        fail(Errc::NotComposable, "walks do not compose");
    std::vector<Letter> letters = a.letters;
    letters.insert(letters.end(), b.letters.begin(), b.letters.end());
    return reduce_walk(g, a.start, std::move(letters));
}

Walk walk_of_path(const Path& p) {
    Walk w;
    w.start = p.start;
    for (int a : p.arrows)
        w.letters.push_back(Letter{a, +1});
    return w;
}

std::string walk_to_string(const Graph& g, const Walk& w) {
    if (w.letters.empty())
        return "id(" + g.objects[w.start] + ")";
    std::string s;
    for (size_t i = 0; i < w.letters.size(); ++i) {
        if (i)
            s += ' ';
        s += g.arrows[w.letters[i].arrow].name;
        if (w.letters[i].sign < 0)
            s += "^-1";
    }
    return s;
}

PathEnumeration enumerate_paths(const Graph& g, int from, int to, int max_len) {
    PathEnumeration result;
    bool acyclic = is_acyclic(g);
    // In a DAG no path revisits an object, so |objects| - 1 bounds all paths.
    int bound = acyclic ? std::max(max_len, g.num_objects() - 1) : max_len;

    std::vector<Path> frontier{identity_path(from)};
    for (int len = 0; len <= bound && !frontier.empty(); ++len) {
        std::vector<Path> next;
        for (const Path& p : frontier) {
            if (path_end(g, p) == to)
                result.paths.push_back(p);
            if (len == bound)
                continue;
            int at = path_end(g, p);
            for (int a = 0; a < g.num_arrows(); ++a)
                if (g.arrows[a].dom == at) {
                    Path q = p;
                    q.arrows.push_back(a);
                    next.push_back(std::move(q));
                }
        }
        frontier = std::move(next);
    }
    HomCount total = hom_count_free(g, from, to);
    result.all = !total.infinite && total.count == static_cast<long long>(result.paths.size());
    return result;
}

HomCount hom_count_free(const Graph& g, int from, int to) {
    int n = g.num_objects();
    // forward reachability from `from`, backward from `to`
    auto reach = [&](int src, bool forward) {
        std::vector<char> seen(n, 0);
        std::queue<int> q;
        q.push(src);
        seen[src] = 1;
        while (!q.empty()) {
            int o = q.front();
            q.pop();
            for (const auto& a : g.arrows) {
                int u = forward ? a.dom : a.cod;
                int v = forward ? a.cod : a.dom;
                if (u == o && !seen[v]) {
                    seen[v] = 1;
                    q.push(v);
                }
            }
        }
        return seen;
    };
    auto fwd = reach(from, true);
    auto bwd = reach(to, false);

    std::vector<char> route(n, 0);
    for (int o = 0; o < n; ++o)
        route[o] = fwd[o] && bwd[o];
    if (!route[from] || !route[to])
        return HomCount{false, 0};

    Subgraph sub = Subgraph::empty(g);
    for (int o = 0; o < n; ++o)
        if (route[o])
            sub.add_object(o);
    for (int a = 0; a < g.num_arrows(); ++a)
        if (route[g.arrows[a].dom] && route[g.arrows[a].cod])
            sub.arrow_in[a] = 1;
    Graph induced = sub.materialize();
    if (!is_acyclic(induced))
        return HomCount{true, 0};

    // Path counting over the induced DAG.
    std::vector<int> remap(n, -1);
    auto objs = sub.object_list();
    for (size_t i = 0; i < objs.size(); ++i)
        remap[objs[i]] = static_cast<int>(i);

    int m = induced.num_objects();
    std::vector<long long> count(m, 0);
    count[remap[from]] = 1;
    // relax in topological order
    std::vector<int> indeg(m, 0);
    for (const auto& a : induced.arrows)
        ++indeg[a.cod];
    std::queue<int> q;
    for (int o = 0; o < m; ++o)
        if (indeg[o] == 0)
            q.push(o);
    while (!q.empty()) {
        int o = q.front();
        q.pop();
        for (const auto& a : induced.arrows)
            if (a.dom == o) {
                count[a.cod] += count[o];
                if (--indeg[a.cod] == 0)
                    q.push(a.cod);
            }
    }
    return HomCount{false, count[remap[to]]};
}

Walk tree_walk(const Graph& g, const Subgraph& tree, int from, int to) {
    // BFS over the undirected tree, arrows in declaration order.
    std::vector<int> via_arrow(g.objects.size(), -1);
    std::vector<int> via_sign(g.objects.size(), 0);
    std::vector<int> pred(g.objects.size(), -1);
    std::vector<char> seen(g.objects.size(), 0);
    std::queue<int> q;
    q.push(from);
    seen[from] = 1;
    while (!q.empty() && !seen[to]) {
        int o = q.front();
        q.pop();
        for (int a = 0; a < g.num_arrows(); ++a) {
            if (!tree.has_arrow(a))
                continue;
            int d = g.arrows[a].dom;
            int c = g.arrows[a].cod;
            int nxt = -1, sign = 0;
            if (d == o && !seen[c]) {
                nxt = c;
                sign = +1;
            } else if (c == o && !seen[d]) {
                nxt = d;
                sign = -1;
            }
            if (nxt < 0)
                continue;
            seen[nxt] = 1;
            pred[nxt] = o;
            via_arrow[nxt] = a;
            via_sign[nxt] = sign;
            q.push(nxt);
        }
    }
    if (!seen[to])
        fail(Errc::NotConnected, "no tree route between the requested objects");
    std::vector<Letter> rev;
    for (int at = to; at != from; at = pred[at])
        rev.push_back(Letter{via_arrow[at], via_sign[at]});
    std::reverse(rev.begin(), rev.end());
    return reduce_walk(g, from, std::move(rev));
}

std::optional<Path> tree_positive_path(const Graph& g, const Subgraph& tree, int from, int to) {
    // Directed BFS within the subgraph; in a weak tree the positive path is
    // unique when it exists.
    if (!tree.has_object(from) || !tree.has_object(to))
        return std::nullopt;
    std::vector<int> via_arrow(g.objects.size(), -1);
    std::vector<int> pred(g.objects.size(), -1);
    std::vector<char> seen(g.objects.size(), 0);
    std::queue<int> q;
    q.push(from);
    seen[from] = 1;
    while (!q.empty() && !seen[to]) {
        int o = q.front();
        q.pop();
        for (int a = 0; a < g.num_arrows(); ++a) {
            if (!tree.has_arrow(a) || g.arrows[a].dom != o || seen[g.arrows[a].cod])
                continue;
            int nxt = g.arrows[a].cod;
            seen[nxt] = 1;
            pred[nxt] = o;
            via_arrow[nxt] = a;
            q.push(nxt);
        }
    }
    if (!seen[to])
        return std::nullopt;
    std::vector<int> rev;
    for (int at = to; at != from; at = pred[at])
        rev.push_back(via_arrow[at]);
    std::reverse(rev.begin(), rev.end());
    return Path{from, std::move(rev)};
}

} // namespace cmpd
