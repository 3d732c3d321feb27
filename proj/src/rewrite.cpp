#include "cmpd/rewrite.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <queue>

namespace cmpd {

namespace {

bool matches_at(const std::vector<int>& word, const std::vector<int>& pattern, size_t pos) {
    if (pos + pattern.size() > word.size())
        return false;
    return std::equal(pattern.begin(), pattern.end(), word.begin() + pos);
}

std::vector<int> splice(const std::vector<int>& word, size_t pos, size_t len, const std::vector<int>& repl) {
    std::vector<int> out;
    out.reserve(word.size() - len + repl.size());
    out.insert(out.end(), word.begin(), word.begin() + pos);
    out.insert(out.end(), repl.begin(), repl.end());
    out.insert(out.end(), word.begin() + pos + len, word.end());
    return out;
}

// Leftmost-innermost reduction with an optional step budget; returns false
// if the budget ran out.
bool reduce_word(const std::vector<RewriteRule>& rules, std::vector<int>& word, long long* budget) {
    bool changed = true;
    while (changed) {
        changed = false;
        for (size_t pos = 0; pos < word.size() && !changed; ++pos) {
            for (const auto& r : rules) {
                if (budget && --*budget < 0)
                    return false;
                if (matches_at(word, r.lhs.arrows, pos)) {
                    word = splice(word, pos, r.lhs.arrows.size(), r.rhs.arrows);
                    changed = true;
                    break;
                }
            }
        }
    }
    return true;
}

} // namespace

Path normal_form(const Graph& g, const Path& p, const RewriteSystem& rs) {
    (void)g;
    Path out = p;
    reduce_word(rs.rules, out.arrows, nullptr);
    return out;
}

namespace {

struct Completion {
    const Graph& g;
    std::vector<RewriteRule> rules;
    std::deque<std::pair<int, int>> agenda;
    long long budget;
    int max_rules;
    bool out_of_budget = false;

    Completion(const Graph& graph, const KbLimits& limits)
        : g(graph), budget(limits.max_steps), max_rules(limits.max_rules) {}

    bool add_rule(Path lhs, Path rhs) {
        int cmp = compare_paths(lhs, rhs);
        if (cmp == 0)
            return true; // joined already
        if (cmp < 0)
            std::swap(lhs, rhs);
        for (const auto& r : rules)
            if (r.lhs.arrows == lhs.arrows && r.rhs.arrows == rhs.arrows)
                return true;
        if (static_cast<int>(rules.size()) >= max_rules) {
            out_of_budget = true;
            return false;
        }
        int k = static_cast<int>(rules.size());
        rules.push_back(RewriteRule{std::move(lhs), std::move(rhs)});
        for (int j = 0; j <= k; ++j) {
            agenda.emplace_back(k, j);
            if (j != k)
                agenda.emplace_back(j, k);
        }
        return true;
    }

    // Reduce both sides of a critical pair and record a new rule if needed.
    bool resolve(Path a, Path b) {
        if (!reduce_word(rules, a.arrows, &budget) || !reduce_word(rules, b.arrows, &budget)) {
            out_of_budget = true;
            return false;
        }
        if (a.arrows == b.arrows)
            return true;
        return add_rule(std::move(a), std::move(b));
    }

    bool process_pair(int i, int j) {
        // Copies: `rules` may reallocate while resolving.
        const RewriteRule r1 = rules[i];
        const RewriteRule r2 = rules[j];
        const auto& l1 = r1.lhs.arrows;
        const auto& l2 = r2.lhs.arrows;

        // Proper suffix/prefix overlaps: w = l1 + tail(l2).
        size_t kmax = std::min(l1.size(), l2.size());
        for (size_t k = 1; k <= kmax; ++k) {
            if (k == l1.size() && k == l2.size())
                continue; // identical-word overlap handled as containment
            if (budget-- < 0) {
                out_of_budget = true;
                return false;
            }
            if (!std::equal(l2.begin(), l2.begin() + k, l1.end() - k))
                continue;
            Path reduct1;
            reduct1.start = r1.lhs.start;
            reduct1.arrows = r1.rhs.arrows;
            reduct1.arrows.insert(reduct1.arrows.end(), l2.begin() + k, l2.end());
            Path reduct2;
            reduct2.start = r1.lhs.start;
            reduct2.arrows.assign(l1.begin(), l1.end() - k);
            reduct2.arrows.insert(reduct2.arrows.end(), r2.rhs.arrows.begin(), r2.rhs.arrows.end());
            if (!resolve(std::move(reduct1), std::move(reduct2)))
                return false;
        }

        // Containments: l2 a factor of l1.
        if (l2.size() <= l1.size()) {
            for (size_t pos = 0; pos + l2.size() <= l1.size(); ++pos) {
                if (i == j && pos == 0 && l1.size() == l2.size())
                    continue;
                if (budget-- < 0) {
                    out_of_budget = true;
                    return false;
                }
                if (!matches_at(l1, l2, pos))
                    continue;
                Path reduct1;
                reduct1.start = r1.lhs.start;
                reduct1.arrows = r1.rhs.arrows;
                Path reduct2;
                reduct2.start = r1.lhs.start;
                reduct2.arrows = splice(l1, pos, l2.size(), r2.rhs.arrows);
                if (!resolve(std::move(reduct1), std::move(reduct2)))
                    return false;
            }
        }
        return true;
    }
};

} // namespace

KbResult knuth_bendix(const Computad2& c, const KbLimits& limits) {
    Completion comp(c.base, limits);
    for (const auto& cell : c.cells) {
        if (cell.src.arrows == cell.tgt.arrows)
            continue; // vacuous equation
        if (!comp.add_rule(cell.src, cell.tgt))
            return KbResult{false, RewriteSystem{c.base, comp.rules, false}};
    }
    while (!comp.agenda.empty()) {
        auto [i, j] = comp.agenda.front();
        comp.agenda.pop_front();
        if (!comp.process_pair(i, j))
            return KbResult{false, RewriteSystem{c.base, comp.rules, false}};
    }

    // Interreduce: drop rules whose lhs is reducible by the others and
    // normalize the surviving right-hand sides.
    std::vector<RewriteRule> kept = comp.rules;
    bool removed = true;
    while (removed) {
        removed = false;
        for (size_t i = 0; i < kept.size(); ++i) {
            std::vector<RewriteRule> others;
            for (size_t j = 0; j < kept.size(); ++j)
                if (j != i)
                    others.push_back(kept[j]);
            std::vector<int> lhs = kept[i].lhs.arrows;
            reduce_word(others, lhs, nullptr);
            if (lhs != kept[i].lhs.arrows) {
                kept.erase(kept.begin() + i);
                removed = true;
                break;
            }
        }
    }
    for (auto& r : kept)
        reduce_word(kept, r.rhs.arrows, nullptr);

    return KbResult{true, RewriteSystem{c.base, std::move(kept), true}};
}

namespace {

// Aho-Corasick automaton over arrow ids recognizing the rule left-hand
// sides as factors.
struct FactorAutomaton {
    struct Node {
        std::map<int, int> next;
        int fail = 0;
        bool dead = false;
    };
    std::vector<Node> nodes;

    explicit FactorAutomaton(const std::vector<RewriteRule>& rules) {
        nodes.emplace_back();
        for (const auto& r : rules) {
            int at = 0;
            for (int a : r.lhs.arrows) {
                auto it = nodes[at].next.find(a);
                if (it == nodes[at].next.end()) {
                    nodes.emplace_back();
                    it = nodes[at].next.emplace(a, static_cast<int>(nodes.size()) - 1).first;
                }
                at = it->second;
            }
            nodes[at].dead = true;
        }
        std::queue<int> q;
        for (auto& [a, v] : nodes[0].next)
            q.push(v);
        while (!q.empty()) {
            int u = q.front();
            q.pop();
            for (auto& [a, v] : nodes[u].next) {
                int f = nodes[u].fail;
                while (f != 0 && !nodes[f].next.count(a))
                    f = nodes[f].fail;
                auto it = nodes[f].next.find(a);
                nodes[v].fail = (it != nodes[f].next.end() && it->second != v) ? it->second : 0;
                nodes[v].dead = nodes[v].dead || nodes[nodes[v].fail].dead;
                q.push(v);
            }
        }
    }

    // -1 when the step completes a forbidden factor
    int step(int state, int a) const {
        int s = state;
        for (;;) {
            auto it = nodes[s].next.find(a);
            if (it != nodes[s].next.end()) {
                s = it->second;
                break;
            }
            if (s == 0)
                break;
            s = nodes[s].fail;
        }
        return nodes[s].dead ? -1 : s;
    }
};

struct ProductAutomaton {
    // state = object * |ac| + node
    int num_states = 0;
    int ac_size = 0;
    std::vector<std::vector<std::pair<int, int>>> edges; // state -> (arrow, state)
    int start = -1;
    std::vector<char> accepting;

    ProductAutomaton(const Graph& g, const RewriteSystem& rs, int from, int to) {
        FactorAutomaton ac(rs.rules);
        ac_size = static_cast<int>(ac.nodes.size());
        num_states = g.num_objects() * ac_size;
        edges.assign(num_states, {});
        accepting.assign(num_states, 0);
        start = from * ac_size + 0;
        for (int o = 0; o < g.num_objects(); ++o)
            for (int s = 0; s < ac_size; ++s) {
                if (ac.nodes[s].dead)
                    continue;
                int u = o * ac_size + s;
                if (o == to)
                    accepting[u] = 1;
                for (int a = 0; a < g.num_arrows(); ++a) {
                    if (g.arrows[a].dom != o)
                        continue;
                    int s2 = ac.step(s, a);
                    if (s2 < 0)
                        continue;
                    edges[u].emplace_back(a, g.arrows[a].cod * ac_size + s2);
                }
            }
    }
};

// states reachable from start and co-reachable to an accepting state
std::vector<char> route_states(const ProductAutomaton& pa) {
    std::vector<char> fwd(pa.num_states, 0);
    std::queue<int> q;
    fwd[pa.start] = 1;
    q.push(pa.start);
    while (!q.empty()) {
        int u = q.front();
        q.pop();
        for (auto [a, v] : pa.edges[u])
            if (!fwd[v]) {
                fwd[v] = 1;
                q.push(v);
            }
    }
    std::vector<std::vector<int>> redges(pa.num_states);
    for (int u = 0; u < pa.num_states; ++u)
        for (auto [a, v] : pa.edges[u])
            redges[v].push_back(u);
    std::vector<char> bwd(pa.num_states, 0);
    for (int u = 0; u < pa.num_states; ++u)
        if (pa.accepting[u] && fwd[u] && !bwd[u]) {
            bwd[u] = 1;
            q.push(u);
        }
    while (!q.empty()) {
        int u = q.front();
        q.pop();
        for (int v : redges[u])
            if (fwd[v] && !bwd[v]) {
                bwd[v] = 1;
                q.push(v);
            }
    }
    std::vector<char> route(pa.num_states, 0);
    for (int u = 0; u < pa.num_states; ++u)
        route[u] = fwd[u] && bwd[u];
    return route;
}

bool route_has_cycle(const ProductAutomaton& pa, const std::vector<char>& route) {
    std::vector<int> state(pa.num_states, 0);
    auto dfs = [&](auto&& self, int u) -> bool {
        state[u] = 1;
        for (auto [a, v] : pa.edges[u]) {
            if (!route[v])
                continue;
            if (state[v] == 1)
                return true;
            if (state[v] == 0 && self(self, v))
                return true;
        }
        state[u] = 2;
        return false;
    };
    for (int u = 0; u < pa.num_states; ++u)
        if (route[u] && state[u] == 0 && dfs(dfs, u))
            return true;
    return false;
}

} // namespace

int count_irreducible(const Graph& g, const RewriteSystem& rs, int from, int to) {
    ProductAutomaton pa(g, rs, from, to);
    auto route = route_states(pa);
    if (!route[pa.start])
        return 0;
    if (route_has_cycle(pa, route))
        return 2;
    // saturating path count over the route DAG from start to accepting
    std::vector<int> memo(pa.num_states, -1);
    auto count = [&](auto&& self, int u) -> int {
        if (memo[u] >= 0)
            return memo[u];
        int total = pa.accepting[u] ? 1 : 0;
        for (auto [a, v] : pa.edges[u]) {
            if (!route[v])
                continue;
            total = std::min(2, total + self(self, v));
            if (total >= 2)
                break;
        }
        return memo[u] = total;
    };
    return count(count, pa.start);
}

bool irreducible_finite(const Graph& g, const RewriteSystem& rs, int from, int to) {
    ProductAutomaton pa(g, rs, from, to);
    auto route = route_states(pa);
    if (!route[pa.start])
        return true;
    return !route_has_cycle(pa, route);
}

std::vector<Path> irreducible_paths(const Graph& g, const RewriteSystem& rs, int from, int to) {
    ProductAutomaton pa(g, rs, from, to);
    auto route = route_states(pa);
    std::vector<Path> out;
    if (!route[pa.start])
        return out;
    if (route_has_cycle(pa, route))
        fail(Errc::Internal, "irreducible_paths on an infinite hom-set");
    std::vector<int> word;
    auto dfs = [&](auto&& self, int u) -> void {
        if (pa.accepting[u])
            out.push_back(Path{from, word});
        for (auto [a, v] : pa.edges[u]) {
            if (!route[v])
                continue;
            word.push_back(a);
            self(self, v);
            word.pop_back();
        }
    };
    dfs(dfs, pa.start);
    std::sort(out.begin(), out.end(), [](const Path& a, const Path& b) { return compare_paths(a, b) < 0; });
    return out;
}

std::string rule_to_string(const Graph& g, const RewriteRule& r) {
    return path_to_string(g, r.lhs) + " -> " + path_to_string(g, r.rhs);
}

} // namespace cmpd
