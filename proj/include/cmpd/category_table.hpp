#ifndef CMPD_CATEGORY_TABLE_HPP
#define CMPD_CATEGORY_TABLE_HPP

#include <optional>
#include <string>
#include <vector>

#include "cmpd/graph.hpp"

namespace cmpd {

// A finite category given by an explicit composition table. `then_table`
// composes diagrammatically: then_table[f][g] is "f then g", or -1 when the
// pair is not composable.
struct FiniteCategoryTable {
    struct Mor {
        std::string name;
        int dom = -1;
        int cod = -1;
    };

    std::vector<std::string> objects;
    std::vector<Mor> morphisms;
    std::vector<int> identity; // per object
    std::vector<std::vector<int>> then_table;

    int morphism_index(std::string_view name) const;
    bool is_identity(int m) const;
};

ValidationReport validate_table(const FiniteCategoryTable& t);

struct RecognizeResult {
    bool free = false;
    Graph generating;   // graph of indecomposables when free
    std::string reason; // violated clause otherwise
};

// Decides whether the table is a free category: no nontrivial isomorphism
// and unique factorization into indecomposables. Throws Errc::InvalidTable
// on a malformed table.
RecognizeResult recognize_free_category(const FiniteCategoryTable& t);

enum class TotalOrderClass { FinOrdinal, NatOrder, OpNatOrder, IntOrder, NotTotalOrder };

// Infinite families are matched only through explicitly declared fixture
// patterns; a bare finite graph can only be a finite ordinal.
enum class TotalOrderPattern { Nat, OpNat, Int };

struct TotalOrderResult {
    TotalOrderClass cls = TotalOrderClass::NotTotalOrder;
    int n = 0; // number of objects for FinOrdinal
};

TotalOrderResult classify_total_order(const Graph& g, std::optional<TotalOrderPattern> declared = {});

} // namespace cmpd

#endif
