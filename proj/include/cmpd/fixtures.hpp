#ifndef CMPD_FIXTURES_HPP
#define CMPD_FIXTURES_HPP

#include "cmpd/computad.hpp"
#include "cmpd/two_dim.hpp"

namespace cmpd {

// The named corpus used across the test suites and the `fixtures` command.
struct Fixtures {
    Graph circle;     // one object, one loop
    Graph ghat;       // two objects, two parallel arrows
    Graph weak_tree;  // a weak tree that is not a tree
    Graph sigma_demo; // the four-object graph with two routes to the end

    Computad2 delta2dot;           // faces/degeneracy presentation of the 2-truncation
    Computad2 delta_dot_truncated; // faces and degeneracies up to ordinal 4
    Computad2 torus_category;      // ab => ba over two loops
    GroupoidalComputad2 torus;     // the same as a groupoidal presentation

    ReflexiveComputad2 delta2dot_reflexive;
    ReflexiveComputad2 ddot_str; // four objects, seven arrows, six 2-cells
    ReflexiveComputad2 d_str;    // full subcomputad on the last three objects
    ReflexiveComputad2 x_counterexample; // two 1-cells, two 2-cells, no f.c.s.

    Computad3 h_delta2;    // delta2dot with the identity-descent 3-cell
    Computad3 h_delta_dot; // ddot_str with both descent 3-cells
};

const Fixtures& fixtures();

} // namespace cmpd

#endif
