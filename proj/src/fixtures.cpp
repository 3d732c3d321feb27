#include "cmpd/fixtures.hpp"

namespace cmpd {

namespace {

Graph make_circle() {
    Graph g;
    int v = g.add_object("v");
    g.add_arrow("a", v, v);
    return g;
}

Graph make_ghat() {
    Graph g;
    int x = g.add_object("x");
    int y = g.add_object("y");
    g.add_arrow("u", x, y);
    g.add_arrow("v", x, y);
    return g;
}

Graph make_weak_tree() {
    // a: w->x, b: y->x, c: y->z, e: w->z; no nontrivial composition
    Graph g;
    int w = g.add_object("w");
    int x = g.add_object("x");
    int y = g.add_object("y");
    int z = g.add_object("z");
    g.add_arrow("a", w, x);
    g.add_arrow("b", y, x);
    g.add_arrow("c", y, z);
    g.add_arrow("e", w, z);
    return g;
}

Graph make_sigma_demo() {
    // a: 0->1, b: 1->3, x: 1->2, y: 2->3
    Graph g;
    g.add_object("p0");
    g.add_object("p1");
    g.add_object("p2");
    g.add_object("p3");
    g.add_arrow("a", 0, 1);
    g.add_arrow("b", 1, 3);
    g.add_arrow("x", 1, 2);
    g.add_arrow("y", 2, 3);
    return g;
}

Graph make_delta2dot_graph() {
    Graph g;
    g.add_object("0");
    g.add_object("1");
    g.add_object("2");
    g.add_arrow("d", 0, 1);
    g.add_arrow("s0", 2, 1);
    g.add_arrow("d0", 1, 2);
    g.add_arrow("d1", 1, 2);
    return g;
}

Computad2 make_delta2dot() {
    Computad2 c;
    c.base = make_delta2dot_graph();
    int d = 0, s0 = 1, d0 = 2, d1 = 3;
    // n0: s0.d0 => id_1 ; n1: id_1 => s0.d1 ; theta: d1.d => d0.d
    c.cells.push_back(PathCell{"n0", Path{1, {d0, s0}}, identity_path(1)});
    c.cells.push_back(PathCell{"n1", identity_path(1), Path{1, {d1, s0}}});
    c.cells.push_back(PathCell{"theta", Path{0, {d, d1}}, Path{0, {d, d0}}});
    return c;
}

Computad2 make_torus_category() {
    Computad2 c;
    int pt = c.base.add_object("*");
    int a = c.base.add_arrow("a", pt, pt);
    int b = c.base.add_arrow("b", pt, pt);
    c.cells.push_back(PathCell{"t", Path{pt, {a, b}}, Path{pt, {b, a}}});
    return c;
}

ReflexiveComputad2 make_ddot_str() {
    ReflexiveComputad2 c;
    Graph g;
    g.add_object("0");
    g.add_object("1");
    g.add_object("2");
    g.add_object("3");
    int d = g.add_arrow("d", 0, 1);
    int s0 = g.add_arrow("s0", 2, 1);
    int d0 = g.add_arrow("d0", 1, 2);
    int d1 = g.add_arrow("d1", 1, 2);
    int p0 = g.add_arrow("p0", 2, 3);
    int p1 = g.add_arrow("p1", 2, 3);
    int p2 = g.add_arrow("p2", 2, 3);
    c.base = free_reflexive(g);
    c.cells.push_back(PathCell{"n0", Path{1, {d0, s0}}, identity_path(1)});
    c.cells.push_back(PathCell{"n1", identity_path(1), Path{1, {d1, s0}}});
    c.cells.push_back(PathCell{"theta", Path{0, {d, d1}}, Path{0, {d, d0}}});
    c.cells.push_back(PathCell{"sigma01", Path{1, {d0, p1}}, Path{1, {d0, p0}}});
    c.cells.push_back(PathCell{"sigma02", Path{1, {d0, p2}}, Path{1, {d1, p0}}});
    c.cells.push_back(PathCell{"sigma12", Path{1, {d1, p2}}, Path{1, {d1, p1}}});
    return c;
}

ReflexiveComputad2 make_d_str() {
    ReflexiveComputad2 c;
    Graph g;
    g.add_object("1");
    g.add_object("2");
    g.add_object("3");
    int s0 = g.add_arrow("s0", 1, 0);
    int d0 = g.add_arrow("d0", 0, 1);
    int d1 = g.add_arrow("d1", 0, 1);
    int p0 = g.add_arrow("p0", 1, 2);
    int p1 = g.add_arrow("p1", 1, 2);
    int p2 = g.add_arrow("p2", 1, 2);
    c.base = free_reflexive(g);
    c.cells.push_back(PathCell{"n0", Path{0, {d0, s0}}, identity_path(0)});
    c.cells.push_back(PathCell{"n1", identity_path(0), Path{0, {d1, s0}}});
    c.cells.push_back(PathCell{"sigma01", Path{0, {d0, p1}}, Path{0, {d0, p0}}});
    c.cells.push_back(PathCell{"sigma02", Path{0, {d0, p2}}, Path{0, {d1, p0}}});
    c.cells.push_back(PathCell{"sigma12", Path{0, {d1, p2}}, Path{0, {d1, p1}}});
    return c;
}

ReflexiveComputad2 make_x_counterexample() {
    ReflexiveComputad2 c;
    Graph g;
    int pt = g.add_object("*");
    int f = g.add_arrow("f", pt, pt);
    int gg = g.add_arrow("g", pt, pt);
    c.base = free_reflexive(g);
    // alpha: gf => id (diagrammatic f then g), beta: id => g
    c.cells.push_back(PathCell{"alpha", Path{pt, {f, gg}}, identity_path(pt)});
    c.cells.push_back(PathCell{"beta", identity_path(pt), Path{pt, {gg}}});
    return c;
}

Computad2 make_delta_dot_truncated() {
    // Faces and degeneracies between the ordinals 0..4 with the simplicial
    // relations whose boundaries stay inside the truncation.
    constexpr int kTop = 4;
    Computad2 c;
    for (int n = 0; n <= kTop; ++n)
        c.base.add_object(std::to_string(n));
    // d(i,n): n -> n+1 for 0 <= i <= n ; s(j,n): n+1 -> n for 0 <= j <= n-1
    std::vector<std::vector<int>> dd(kTop), ss(kTop);
    for (int n = 0; n < kTop; ++n)
        for (int i = 0; i <= n; ++i)
            dd[n].push_back(c.base.add_arrow("d" + std::to_string(i) + "_" + std::to_string(n), n, n + 1));
    for (int n = 1; n < kTop; ++n)
        for (int j = 0; j + 1 <= n; ++j)
            ss[n].push_back(c.base.add_arrow("s" + std::to_string(j) + "_" + std::to_string(n), n + 1, n));

    auto cell = [&](std::string name, Path a, Path b) { c.cells.push_back(PathCell{std::move(name), a, b}); };

    // d^j d^i = d^i d^{j-1} for i < j (composites n -> n+2)
    for (int n = 0; n + 2 <= kTop; ++n)
        for (int j = 0; j <= n + 1; ++j)
            for (int i = 0; i < j && i <= n; ++i)
                cell("dd" + std::to_string(i) + std::to_string(j) + "_" + std::to_string(n),
                     Path{n, {dd[n][i], dd[n + 1][j]}}, Path{n, {dd[n][j - 1], dd[n + 1][i]}});
    // s^j s^i = s^i s^{j+1} for i <= j (composites n+2 -> n)
    for (int n = 1; n + 1 < kTop; ++n)
        for (int j = 0; j + 1 <= n; ++j)
            for (int i = 0; i <= j; ++i)
                cell("ss" + std::to_string(i) + std::to_string(j) + "_" + std::to_string(n),
                     Path{n + 2, {ss[n + 1][i], ss[n][j]}}, Path{n + 2, {ss[n + 1][j + 1], ss[n][i]}});
    // s^j d^i : composites n -> n
    for (int n = 1; n < kTop; ++n)
        for (int j = 0; j + 1 <= n; ++j)
            for (int i = 0; i <= n; ++i) {
                std::string name = "sd" + std::to_string(i) + std::to_string(j) + "_" + std::to_string(n);
                Path lhs{n, {dd[n][i], ss[n][j]}};
                if (i == j || i == j + 1)
                    cell(name, lhs, identity_path(n));
                else if (i < j)
                    cell(name, lhs, Path{n, {ss[n - 1][j - 1], dd[n - 1][i]}});
                else // i > j + 1
                    cell(name, lhs, Path{n, {ss[n - 1][j], dd[n - 1][i - 1]}});
            }
    return c;
}

TwoCellWord identity_descent_source(const ReflexiveComputad2& base) {
    const Graph& g = base.base.base;
    int s0 = g.arrow_index("s0");
    int theta = base.cell_index("theta");
    TwoCellWord w;
    w.factors.push_back(WhiskerFactor{identity_path(0), theta, +1, Path{2, {s0}}});
    return w;
}

TwoCellWord identity_descent_target(const ReflexiveComputad2& base) {
    const Graph& g = base.base.base;
    int d = g.arrow_index("d");
    int n0 = base.cell_index("n0");
    int n1 = base.cell_index("n1");
    TwoCellWord w;
    w.factors.push_back(WhiskerFactor{Path{0, {d}}, n1, -1, identity_path(1)});
    w.factors.push_back(WhiskerFactor{Path{0, {d}}, n0, -1, identity_path(1)});
    return w;
}

Computad3 make_h_delta2(const ReflexiveComputad2& base) {
    Computad3 c;
    c.base = base;
    c.cells3.push_back(ThreeCell{"iddescent", identity_descent_source(base), identity_descent_target(base)});
    return c;
}

Computad3 make_h_delta_dot(const ReflexiveComputad2& base) {
    const Graph& g = base.base.base;
    int d = g.arrow_index("d");
    int p0 = g.arrow_index("p0");
    int p1 = g.arrow_index("p1");
    int p2 = g.arrow_index("p2");
    int theta = base.cell_index("theta");
    int s01 = base.cell_index("sigma01");
    int s02 = base.cell_index("sigma02");
    int s12 = base.cell_index("sigma12");

    Computad3 c;
    c.base = base;
    c.cells3.push_back(ThreeCell{"iddescent", identity_descent_source(base), identity_descent_target(base)});

    TwoCellWord src;
    src.factors.push_back(WhiskerFactor{Path{0, {d}}, s12, +1, identity_path(3)});
    src.factors.push_back(WhiskerFactor{identity_path(0), theta, +1, Path{2, {p1}}});
    src.factors.push_back(WhiskerFactor{Path{0, {d}}, s01, +1, identity_path(3)});
    TwoCellWord tgt;
    tgt.factors.push_back(WhiskerFactor{identity_path(0), theta, +1, Path{2, {p2}}});
    tgt.factors.push_back(WhiskerFactor{Path{0, {d}}, s02, +1, identity_path(3)});
    tgt.factors.push_back(WhiskerFactor{identity_path(0), theta, +1, Path{2, {p0}}});
    c.cells3.push_back(ThreeCell{"assocdescent", std::move(src), std::move(tgt)});
    return c;
}

Fixtures make_all() {
    Fixtures f;
    f.circle = make_circle();
    f.ghat = make_ghat();
    f.weak_tree = make_weak_tree();
    f.sigma_demo = make_sigma_demo();
    f.delta2dot = make_delta2dot();
    f.delta_dot_truncated = make_delta_dot_truncated();
    f.torus_category = make_torus_category();
    f.torus = groupoidalize(f.torus_category);
    f.delta2dot_reflexive = free_reflexive_computad(f.delta2dot);
    f.ddot_str = make_ddot_str();
    f.d_str = make_d_str();
    f.x_counterexample = make_x_counterexample();
    f.h_delta2 = make_h_delta2(f.delta2dot_reflexive);
    f.h_delta_dot = make_h_delta_dot(f.ddot_str);
    return f;
}

} // namespace

const Fixtures& fixtures() {
    static Fixtures f = make_all();
    return f;
}

} // namespace cmpd
