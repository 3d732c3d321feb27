#ifndef CMPD_RANDOMGEN_HPP
#define CMPD_RANDOMGEN_HPP

#include <random>

#include "cmpd/computad.hpp"

namespace cmpd {

// Seeded generators for the randomized property runs. Everything is
// deterministic given the engine state.

inline Graph random_connected_graph(std::mt19937& rng, int num_objects, int extra_arrows) {
    Graph g;
    for (int i = 0; i < num_objects; ++i)
        g.add_object("v" + std::to_string(i));
    int arrow = 0;
    for (int i = 1; i < num_objects; ++i) {
        int other = static_cast<int>(rng() % i);
        bool flip = rng() % 2 == 0;
        g.add_arrow("a" + std::to_string(arrow++), flip ? other : i, flip ? i : other);
    }
    for (int k = 0; k < extra_arrows; ++k) {
        int x = static_cast<int>(rng() % num_objects);
        int y = static_cast<int>(rng() % num_objects);
        g.add_arrow("a" + std::to_string(arrow++), x, y);
    }
    return g;
}

inline Path random_path(std::mt19937& rng, const Graph& g, int from, int max_len) {
    Path p = identity_path(from);
    int len = static_cast<int>(rng() % (max_len + 1));
    for (int i = 0; i < len; ++i) {
        int at = path_end(g, p);
        std::vector<int> out;
        for (int a = 0; a < g.num_arrows(); ++a)
            if (g.arrows[a].dom == at)
                out.push_back(a);
        if (out.empty())
            break;
        p.arrows.push_back(out[rng() % out.size()]);
    }
    return p;
}

// Connected computad with parallel-pair 2-cells; falls back to diagonal
// pairs when no distinct parallel path exists.
inline Computad2 random_computad(std::mt19937& rng, int num_objects, int extra_arrows, int num_cells) {
    Computad2 c;
    c.base = random_connected_graph(rng, num_objects, extra_arrows);
    for (int k = 0; k < num_cells; ++k) {
        int from = static_cast<int>(rng() % c.base.num_objects());
        Path p = random_path(rng, c.base, from, 4);
        int to = path_end(c.base, p);
        auto candidates = enumerate_paths(c.base, from, to, 4).paths;
        Path q = p;
        for (const Path& cand : candidates)
            if (!(cand == p)) {
                q = cand;
                break;
            }
        c.cells.push_back(PathCell{"c" + std::to_string(k), p, q});
    }
    return c;
}

} // namespace cmpd

#endif
