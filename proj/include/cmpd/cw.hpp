#ifndef CMPD_CW_HPP
#define CMPD_CW_HPP

#include <array>
#include <string>
#include <vector>

#include "cmpd/computad.hpp"
#include "cmpd/group.hpp"
#include "cmpd/numeric.hpp"
#include "cmpd/two_dim.hpp"

namespace cmpd {

// Combinatorial CW complex of dimension <= 3. Attaching words of 2-cells
// are composable signed edge cycles; 3-cells carry their boundary exponent
// record over the 2-cells plus the originating word descriptions.
struct CWComplex {
    struct Cell1 {
        std::string name;
        int src = -1;
        int dst = -1;
    };
    struct Cell2 {
        std::string name;
        int base = -1;                         // start vertex of the word
        std::vector<std::pair<int, int>> word; // (edge, sign)
    };
    struct Cell3 {
        std::string name;
        std::vector<long long> d3; // exponent sums over the 2-cells
        std::string source_desc;
        std::string target_desc;
    };

    std::vector<std::string> cells0;
    std::vector<Cell1> cells1;
    std::vector<Cell2> cells2;
    std::vector<Cell3> cells3;
};

// Exact boundary matrices; construction asserts the chain-complex law.
struct ChainComplexQ {
    IntMat d1; // cells0 x cells1
    IntMat d2; // cells1 x cells2
    IntMat d3; // cells2 x cells3
};

ChainComplexQ chain_complex(const CWComplex& cw);

CWComplex f_top1(const Graph& g);
CWComplex f_top2(const Computad2& c);
CWComplex f_top2(const GroupoidalComputad2& c);
CWComplex f_top2(const ReflexiveComputad2& c); // identity arrows are degenerate
CWComplex f_top3(const Computad3& c);          // Errc::InvalidTwoCellWord

long long euler_char(const CWComplex& cw);

// Ranks over Q of the cellular chain complex; the alternating sum is checked
// against the Euler characteristic.
std::array<long long, 4> betti_numbers(const CWComplex& cw);

// One presentation per connected component, keyed by its first vertex;
// generators/relators exactly as the tree-collapse route produces them.
std::vector<std::pair<int, GroupPresentation>> pi1_from_cw(const CWComplex& cw);

struct Pi2Result {
    enum Kind { Rank, NotSimplyConnected, Unknown } kind = Unknown;
    long long rank = 0;
};

Pi2Result pi2_rank_if_simply_connected(const CWComplex& cw, const TcLimits& limits = {});

} // namespace cmpd

#endif
