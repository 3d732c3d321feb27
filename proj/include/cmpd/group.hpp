#ifndef CMPD_GROUP_HPP
#define CMPD_GROUP_HPP

#include <string>
#include <vector>

#include "cmpd/numeric.hpp"

namespace cmpd {

// Letters are +-(index+1) over the generator list.
using GWord = std::vector<int>;

struct GroupPresentation {
    std::vector<std::string> generators;
    std::vector<GWord> relators;
};

GWord free_reduce(GWord w);
GWord invert_word(const GWord& w);
std::string word_to_string(const GroupPresentation& p, const GWord& w);

struct AbelianInvariants {
    std::vector<BigInt> divisors; // elementary divisors > 1
    int free_rank = 0;

    bool trivial() const { return divisors.empty() && free_rank == 0; }
    std::string to_string() const;
};

AbelianInvariants abelianization_invariants(const GroupPresentation& p);

// Deletes generators killed by length-1 relators, free-reduces, drops empty
// relators; repeats to fixpoint.
GroupPresentation tietze_simplify(GroupPresentation p);

struct TcLimits {
    int max_cosets = 50000;
};

struct TcResult {
    bool closed = false;
    long long cosets = 0; // live cosets when closed
};

// HLT coset enumeration over the trivial subgroup, no lookahead.
TcResult todd_coxeter(const GroupPresentation& p, const TcLimits& limits = {});

enum class Triviality { Yes, No, Unknown };

struct TrivialityResult {
    Triviality verdict = Triviality::Unknown;
    std::string witness;    // what decided it
    long long tc_cosets = -1; // closed coset count when Todd-Coxeter ran to completion
};

TrivialityResult is_trivial_group(const GroupPresentation& p, const TcLimits& limits = {});

} // namespace cmpd

#endif
