#include "cmpd/category_table.hpp"

#include <algorithm>

namespace cmpd {

int FiniteCategoryTable::morphism_index(std::string_view name) const {
    for (size_t i = 0; i < morphisms.size(); ++i)
        if (morphisms[i].name == name)
            return static_cast<int>(i);
    return -1;
}

bool FiniteCategoryTable::is_identity(int m) const {
    for (int id : identity)
        if (id == m)
            return true;
    return false;
}

ValidationReport validate_table(const FiniteCategoryTable& t) {
    ValidationReport rep;
    int n = static_cast<int>(t.morphisms.size());
    if (static_cast<int>(t.identity.size()) != static_cast<int>(t.objects.size())) {
        rep.problems.push_back("identity map not total");
        return rep;
    }
    if (static_cast<int>(t.then_table.size()) != n) {
        rep.problems.push_back("composition table has wrong shape");
        return rep;
    }
    for (const auto& row : t.then_table)
        if (static_cast<int>(row.size()) != n) {
            rep.problems.push_back("composition table has wrong shape");
            return rep;
        }
    for (int o = 0; o < static_cast<int>(t.objects.size()); ++o) {
        int id = t.identity[o];
        if (id < 0 || id >= n || t.morphisms[id].dom != o || t.morphisms[id].cod != o)
            rep.problems.push_back("bad identity for object '" + t.objects[o] + "'");
    }
    for (int f = 0; f < n; ++f) {
        for (int g = 0; g < n; ++g) {
            bool composable = t.morphisms[f].cod == t.morphisms[g].dom;
            int h = t.then_table[f][g];
            if (!composable) {
                if (h != -1)
                    rep.problems.push_back("composite defined for non-composable pair");
                continue;
            }
            if (h < 0 || h >= n) {
                rep.problems.push_back("missing composite " + t.morphisms[f].name + ";" + t.morphisms[g].name);
                continue;
            }
            if (t.morphisms[h].dom != t.morphisms[f].dom || t.morphisms[h].cod != t.morphisms[g].cod)
                rep.problems.push_back("composite with wrong endpoints");
        }
    }
    if (!rep.ok())
        return rep;
    for (int f = 0; f < n; ++f) {
        if (t.then_table[t.identity[t.morphisms[f].dom]][f] != f ||
            t.then_table[f][t.identity[t.morphisms[f].cod]] != f)
            rep.problems.push_back("identity law fails at '" + t.morphisms[f].name + "'");
    }
    for (int f = 0; f < n; ++f)
        for (int g = 0; g < n; ++g) {
            if (t.morphisms[f].cod != t.morphisms[g].dom)
                continue;
            for (int h = 0; h < n; ++h) {
                if (t.morphisms[g].cod != t.morphisms[h].dom)
                    continue;
                if (t.then_table[t.then_table[f][g]][h] != t.then_table[f][t.then_table[g][h]])
                    rep.problems.push_back("associativity fails");
            }
        }
    return rep;
}

RecognizeResult recognize_free_category(const FiniteCategoryTable& t) {
    auto rep = validate_table(t);
    if (!rep.ok())
        fail(Errc::InvalidTable, rep.problems.front());

    int n = static_cast<int>(t.morphisms.size());

    for (int f = 0; f < n; ++f) {
        if (t.is_identity(f))
            continue;
        for (int g = 0; g < n; ++g) {
            if (t.morphisms[f].cod != t.morphisms[g].dom || t.morphisms[g].cod != t.morphisms[f].dom)
                continue;
            if (t.then_table[f][g] == t.identity[t.morphisms[f].dom] &&
                t.then_table[g][f] == t.identity[t.morphisms[g].dom])
                return RecognizeResult{false, {}, "nontrivial isomorphism"};
        }
    }

    std::vector<char> indecomposable(n, 0);
    for (int m = 0; m < n; ++m) {
        if (t.is_identity(m))
            continue;
        bool dec = false;
        for (int f = 0; f < n && !dec; ++f) {
            if (t.is_identity(f) || t.morphisms[f].dom != t.morphisms[m].dom)
                continue;
            for (int g = 0; g < n; ++g) {
                if (t.is_identity(g) || t.morphisms[f].cod != t.morphisms[g].dom)
                    continue;
                if (t.then_table[f][g] == m) {
                    dec = true;
                    break;
                }
            }
        }
        indecomposable[m] = !dec;
    }

    // Count factorizations into indecomposables; memoized with in-progress
    // marking, so a self-feeding composite reports as non-unique.
    std::vector<int> state(n, 0); // 0 unseen, 1 in progress, 2 done
    std::vector<long long> fact(n, 0);
    bool cyclic = false;
    auto count = [&](auto&& self, int m) -> long long {
        if (state[m] == 1) {
            cyclic = true;
            return 2;
        }
        if (state[m] == 2)
            return fact[m];
        state[m] = 1;
        long long total = t.is_identity(m) ? 1 : 0;
        for (int i = 0; i < n && total < 2; ++i) {
            if (!indecomposable[i] || t.morphisms[i].dom != t.morphisms[m].dom)
                continue;
            for (int rest = 0; rest < n && total < 2; ++rest) {
                if (t.morphisms[rest].dom != t.morphisms[i].cod || t.morphisms[rest].cod != t.morphisms[m].cod)
                    continue;
                if (t.then_table[i][rest] == m)
                    total += self(self, rest);
            }
        }
        state[m] = 2;
        fact[m] = std::min<long long>(total, 2);
        return fact[m];
    };

    for (int m = 0; m < n; ++m) {
        long long c = count(count, m);
        if (cyclic || c > 1)
            return RecognizeResult{false, {}, "non-unique factorization"};
        if (c == 0)
            return RecognizeResult{false, {}, "no factorization into indecomposables"};
    }

    Graph g;
    g.objects = t.objects;
    for (int m = 0; m < n; ++m)
        if (indecomposable[m])
            g.add_arrow(t.morphisms[m].name, t.morphisms[m].dom, t.morphisms[m].cod);
    return RecognizeResult{true, std::move(g), ""};
}

TotalOrderResult classify_total_order(const Graph& g, std::optional<TotalOrderPattern> declared) {
    if (!is_weak_forest(g))
        return TotalOrderResult{TotalOrderClass::NotTotalOrder, 0};

    // totality: each ordered pair comparable via directed reachability
    Subgraph all = Subgraph::full(g);
    for (int x = 0; x < g.num_objects(); ++x)
        for (int y = x + 1; y < g.num_objects(); ++y)
            if (!reachable_in(g, all, x, y) && !reachable_in(g, all, y, x))
                return TotalOrderResult{TotalOrderClass::NotTotalOrder, 0};

    if (declared) {
        // The finite stub of each infinite family is a chain; the declared
        // pattern carries the intent.
        switch (*declared) {
        case TotalOrderPattern::Nat:
            return TotalOrderResult{TotalOrderClass::NatOrder, 0};
        case TotalOrderPattern::OpNat:
            return TotalOrderResult{TotalOrderClass::OpNatOrder, 0};
        case TotalOrderPattern::Int:
            return TotalOrderResult{TotalOrderClass::IntOrder, 0};
        }
    }
    return TotalOrderResult{TotalOrderClass::FinOrdinal, g.num_objects()};
}

} // namespace cmpd
