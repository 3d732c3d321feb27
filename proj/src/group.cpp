#include "cmpd/group.hpp"

#include <algorithm>
#include <deque>
#include <numeric>

#include "cmpd/error.hpp"

namespace cmpd {

GWord free_reduce(GWord w) {
    GWord out;
    for (int letter : w) {
        if (!out.empty() && out.back() == -letter)
            out.pop_back();
        else
            out.push_back(letter);
    }
    return out;
}

GWord invert_word(const GWord& w) {
    GWord out;
    for (auto it = w.rbegin(); it != w.rend(); ++it)
        out.push_back(-*it);
    return out;
}

std::string word_to_string(const GroupPresentation& p, const GWord& w) {
    if (w.empty())
        return "1";
    std::string s;
    for (size_t i = 0; i < w.size(); ++i) {
        if (i)
            s += ' ';
        int g = std::abs(w[i]) - 1;
        s += p.generators[g];
        if (w[i] < 0)
            s += "^-1";
    }
    return s;
}

std::string AbelianInvariants::to_string() const {
    std::string s;
    for (const auto& d : divisors) {
        if (!s.empty())
            s += " x ";
        s += "Z/" + d.str();
    }
    if (free_rank > 0) {
        if (!s.empty())
            s += " x ";
        s += "Z^" + std::to_string(free_rank);
    }
    if (s.empty())
        s = "0";
    return s;
}

AbelianInvariants abelianization_invariants(const GroupPresentation& p) {
    int g = static_cast<int>(p.generators.size());
    int r = static_cast<int>(p.relators.size());
    IntMat m(r, g);
    for (int i = 0; i < r; ++i)
        for (int letter : p.relators[i]) {
            int idx = std::abs(letter) - 1;
            m.at(i, idx) += letter > 0 ? 1 : -1;
        }
    auto diag = smith_diagonal(m);
    AbelianInvariants inv;
    for (const auto& d : diag)
        if (d > 1)
            inv.divisors.push_back(d);
    inv.free_rank = g - static_cast<int>(diag.size());
    return inv;
}

GroupPresentation tietze_simplify(GroupPresentation p) {
    for (auto& r : p.relators)
        r = free_reduce(std::move(r));

    for (;;) {
        p.relators.erase(std::remove_if(p.relators.begin(), p.relators.end(),
                                        [](const GWord& w) { return w.empty(); }),
                         p.relators.end());
        int killed = -1;
        for (const auto& r : p.relators)
            if (r.size() == 1) {
                killed = std::abs(r[0]) - 1;
                break;
            }
        if (killed < 0)
            break;
        std::vector<std::string> gens;
        std::vector<int> remap(p.generators.size(), 0); // 1-based, 0 = deleted
        for (size_t i = 0; i < p.generators.size(); ++i) {
            if (static_cast<int>(i) == killed)
                continue;
            gens.push_back(p.generators[i]);
            remap[i] = static_cast<int>(gens.size());
        }
        std::vector<GWord> rels;
        for (const auto& r : p.relators) {
            GWord w;
            for (int letter : r) {
                int idx = std::abs(letter) - 1;
                if (idx == killed)
                    continue;
                w.push_back(letter > 0 ? remap[idx] : -remap[idx]);
            }
            w = free_reduce(std::move(w));
            if (!w.empty())
                rels.push_back(std::move(w));
        }
        p.generators = std::move(gens);
        p.relators = std::move(rels);
    }
    return p;
}

namespace {

// Coset table with columns 2k (generator k) and 2k+1 (its inverse).
struct CosetTable {
    int ngens;
    int max_cosets;
    std::vector<std::vector<int>> row; // -1 undefined
    std::vector<int> rep;
    std::deque<std::pair<int, int>> coincidences;
    bool overflow = false;

    CosetTable(int gens, int cap) : ngens(gens), max_cosets(cap) { new_coset(); }

    int col(int letter) const {
        int g = std::abs(letter) - 1;
        return 2 * g + (letter > 0 ? 0 : 1);
    }
    static int inv_col(int c) { return c ^ 1; }

    int new_coset() {
        if (static_cast<int>(row.size()) >= max_cosets) {
            overflow = true;
            return -1;
        }
        row.emplace_back(2 * ngens, -1);
        rep.push_back(static_cast<int>(rep.size()));
        return static_cast<int>(row.size()) - 1;
    }

    int find(int x) {
        while (rep[x] != x)
            x = rep[x] = rep[rep[x]];
        return x;
    }

    bool live(int x) { return find(x) == x; }

    // Record a.g = b in both directions, queueing coincidences on conflict.
    void set_checked(int a, int c, int b) {
        int pa = row[a][c];
        if (pa >= 0 && find(pa) != find(b))
            coincidences.emplace_back(pa, b);
        int pb = row[b][inv_col(c)];
        if (pb >= 0 && find(pb) != find(a))
            coincidences.emplace_back(pb, a);
        row[a][c] = b;
        row[b][inv_col(c)] = a;
    }

    void merge(int a, int b) {
        coincidences.emplace_back(a, b);
        process_coincidences();
    }

    void process_coincidences() {
        while (!coincidences.empty()) {
            auto [a, b] = coincidences.front();
            coincidences.pop_front();
            a = find(a);
            b = find(b);
            if (a == b)
                continue;
            if (a > b)
                std::swap(a, b);
            rep[b] = a;
            for (int c = 0; c < 2 * ngens; ++c) {
                int bi = row[b][c];
                if (bi < 0)
                    continue;
                int ai = row[a][c];
                if (ai < 0) {
                    int prev = row[bi][inv_col(c)];
                    row[a][c] = bi;
                    row[bi][inv_col(c)] = a;
                    if (prev >= 0 && find(prev) != a)
                        coincidences.emplace_back(prev, a);
                } else if (find(ai) != find(bi)) {
                    coincidences.emplace_back(ai, bi);
                }
            }
        }
    }
};

} // namespace

TcResult todd_coxeter(const GroupPresentation& p, const TcLimits& limits) {
    int ngens = static_cast<int>(p.generators.size());
    if (ngens == 0)
        return TcResult{true, 1};

    CosetTable t(ngens, limits.max_cosets);

    // Classic two-pointer scan-and-fill (HLT). Returns false on overflow.
    auto scan_and_fill = [&](int coset, const GWord& w) -> bool {
        int f = t.find(coset);
        int b = f;
        int i = 0;
        int j = static_cast<int>(w.size()) - 1;
        for (;;) {
            while (i <= j) {
                int nxt = t.row[f][t.col(w[i])];
                if (nxt < 0)
                    break;
                f = t.find(nxt);
                ++i;
            }
            if (i > j) {
                if (f != b)
                    t.merge(f, b);
                return true;
            }
            while (j >= i) {
                int nxt = t.row[b][t.col(-w[j])];
                if (nxt < 0)
                    break;
                b = t.find(nxt);
                --j;
            }
            if (j < i) {
                if (f != b)
                    t.merge(f, b);
                return true;
            }
            if (i == j) {
                t.set_checked(f, t.col(w[i]), b);
                t.process_coincidences();
                return true;
            }
            int fresh = t.new_coset();
            if (fresh < 0)
                return false;
            t.set_checked(f, t.col(w[i]), fresh);
            t.process_coincidences();
            f = t.find(f);
            b = t.find(b);
        }
    };

    for (size_t scan = 0; scan < t.row.size(); ++scan) {
        int c = static_cast<int>(scan);
        if (!t.live(c))
            continue;
        for (const auto& w : p.relators) {
            if (!scan_and_fill(c, w))
                return TcResult{false, 0};
            if (!t.live(c))
                break;
        }
        if (!t.live(c))
            continue;
        for (int col = 0; col < 2 * ngens; ++col) {
            int cur = t.find(c);
            if (cur != c)
                break;
            if (t.row[cur][col] >= 0)
                continue;
            int fresh = t.new_coset();
            if (fresh < 0)
                return TcResult{false, 0};
            t.set_checked(cur, col, fresh);
            t.process_coincidences();
        }
    }

    long long live = 0;
    for (size_t i = 0; i < t.row.size(); ++i)
        if (t.live(static_cast<int>(i)))
            ++live;
    return TcResult{true, live};
}

TrivialityResult is_trivial_group(const GroupPresentation& p, const TcLimits& limits) {
    GroupPresentation simp = tietze_simplify(p);

    auto ab = abelianization_invariants(simp);
    if (!ab.trivial())
        return TrivialityResult{Triviality::No, "abelianization " + ab.to_string(), -1};

    auto tc = todd_coxeter(simp, limits);
    if (!tc.closed)
        return TrivialityResult{Triviality::Unknown, "coset cap reached", -1};
    if (tc.cosets == 1)
        return TrivialityResult{Triviality::Yes, "coset table closed at 1 coset", tc.cosets};
    return TrivialityResult{Triviality::No, "coset count = " + std::to_string(tc.cosets), tc.cosets};
}

} // namespace cmpd
