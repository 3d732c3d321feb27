#ifndef CMPD_REWRITE_HPP
#define CMPD_REWRITE_HPP

#include <string>
#include <vector>

#include "cmpd/computad.hpp"

namespace cmpd {

// Oriented parallel path pair; lhs strictly greater in length-lex order and
// nonempty.
struct RewriteRule {
    Path lhs;
    Path rhs;
};

struct RewriteSystem {
    Graph base;
    std::vector<RewriteRule> rules;
    bool complete = false; // all critical pairs known to join
};

struct KbLimits {
    int max_rules = 10000;
    // Deterministic step budget standing in for the CPU cap: counts rewrite
    // and critical-pair steps.
    long long max_steps = 1000000;
};

struct KbResult {
    bool complete = false; // false means the limits were hit (timeout)
    RewriteSystem system;  // partial when not complete
};

// Orients the 2-cells by length-lex (declaration-order tie-break) and runs
// completion. Timeout is a value, not an error.
KbResult knuth_bendix(const Computad2& c, const KbLimits& limits = {});

// Leftmost-innermost exhaustive rewriting. For a complete system this is the
// normal form; otherwise just a reduct.
Path normal_form(const Graph& g, const Path& p, const RewriteSystem& rs);

// Number of irreducible paths from -> to, saturating at 2 (2 also stands for
// infinitely many). Exact for 0 and 1.
int count_irreducible(const Graph& g, const RewriteSystem& rs, int from, int to);

// All irreducible paths between a pair; requires the count to be finite.
std::vector<Path> irreducible_paths(const Graph& g, const RewriteSystem& rs, int from, int to);

// True when the count of irreducible from->to paths is finite.
bool irreducible_finite(const Graph& g, const RewriteSystem& rs, int from, int to);

std::string rule_to_string(const Graph& g, const RewriteRule& r);

} // namespace cmpd

#endif
