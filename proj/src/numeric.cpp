#include "cmpd/numeric.hpp"

#include <algorithm>
#include <cstdlib>

namespace cmpd {

int rank_exact(const IntMat& m) {
    std::vector<std::vector<BigRat>> w(m.rows, std::vector<BigRat>(m.cols));
    for (int i = 0; i < m.rows; ++i)
        for (int j = 0; j < m.cols; ++j)
            w[i][j] = BigRat(m.at(i, j));

    int rank = 0;
    int row = 0;
    for (int col = 0; col < m.cols && row < m.rows; ++col) {
        int pivot = -1;
        for (int i = row; i < m.rows; ++i) {
            if (w[i][col] != 0) {
                pivot = i;
                break;
            }
        }
        if (pivot < 0)
            continue;
        std::swap(w[pivot], w[row]);
        for (int i = row + 1; i < m.rows; ++i) {
            if (w[i][col] == 0)
                continue;
            BigRat f = w[i][col] / w[row][col];
            for (int j = col; j < m.cols; ++j)
                w[i][j] -= f * w[row][j];
        }
        ++row;
        ++rank;
    }
    return rank;
}

namespace {

void swap_rows(IntMat& m, int i, int j) {
    for (int c = 0; c < m.cols; ++c)
        std::swap(m.at(i, c), m.at(j, c));
}

void swap_cols(IntMat& m, int i, int j) {
    for (int r = 0; r < m.rows; ++r)
        std::swap(m.at(r, i), m.at(r, j));
}

// Index of the entry with smallest nonzero absolute value in the trailing
// submatrix starting at (t, t); {-1,-1} if the submatrix is zero.
std::pair<int, int> smallest_pivot(const IntMat& m, int t) {
    std::pair<int, int> best{-1, -1};
    BigInt best_abs = 0;
    for (int i = t; i < m.rows; ++i) {
        for (int j = t; j < m.cols; ++j) {
            const BigInt& v = m.at(i, j);
            if (v == 0)
                continue;
            BigInt av = abs(v);
            if (best.first < 0 || av < best_abs) {
                best = {i, j};
                best_abs = av;
            }
        }
    }
    return best;
}

} // namespace

std::vector<BigInt> smith_diagonal(IntMat m) {
    std::vector<BigInt> diag;
    int n = std::min(m.rows, m.cols);
    for (int t = 0; t < n; ++t) {
        for (;;) {
            auto [pi, pj] = smallest_pivot(m, t);
            if (pi < 0)
                goto done;
            if (pi != t)
                swap_rows(m, pi, t);
            if (pj != t)
                swap_cols(m, pj, t);

            bool dirty = false;
            for (int i = t + 1; i < m.rows; ++i) {
                if (m.at(i, t) == 0)
                    continue;
                BigInt q = m.at(i, t) / m.at(t, t);
                if (q != 0)
                    for (int c = t; c < m.cols; ++c)
                        m.at(i, c) -= q * m.at(t, c);
                if (m.at(i, t) != 0)
                    dirty = true;
            }
            for (int j = t + 1; j < m.cols; ++j) {
                if (m.at(t, j) == 0)
                    continue;
                BigInt q = m.at(t, j) / m.at(t, t);
                if (q != 0)
                    for (int r = t; r < m.rows; ++r)
                        m.at(r, j) -= q * m.at(r, t);
                if (m.at(t, j) != 0)
                    dirty = true;
            }
            if (dirty)
                continue;

            // Row and column are clear; enforce divisibility of the rest.
            bool fixed = true;
            for (int i = t + 1; i < m.rows && fixed; ++i)
                for (int j = t + 1; j < m.cols && fixed; ++j)
                    if (m.at(i, j) % m.at(t, t) != 0) {
                        for (int c = t; c < m.cols; ++c)
                            m.at(t, c) += m.at(i, c);
                        fixed = false;
                    }
            if (fixed)
                break;
        }
        diag.push_back(abs(m.at(t, t)));
    }
done:
    return diag;
}

IntMat mat_mul(const IntMat& a, const IntMat& b) {
    IntMat r(a.rows, b.cols);
    for (int i = 0; i < a.rows; ++i)
        for (int k = 0; k < a.cols; ++k) {
            if (a.at(i, k) == 0)
                continue;
            for (int j = 0; j < b.cols; ++j)
                r.at(i, j) += a.at(i, k) * b.at(k, j);
        }
    return r;
}

bool is_zero(const IntMat& m) {
    for (const auto& v : m.a)
        if (v != 0)
            return false;
    return true;
}

} // namespace cmpd
