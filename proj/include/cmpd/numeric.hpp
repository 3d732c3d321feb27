#ifndef CMPD_NUMERIC_HPP
#define CMPD_NUMERIC_HPP

#include <boost/multiprecision/cpp_int.hpp>
#include <vector>

namespace cmpd {

using BigInt = boost::multiprecision::cpp_int;
using BigRat = boost::multiprecision::cpp_rational;

// Small dense integer matrix, row-major. Everything in this project that
// needs linear algebra (boundary maps, relator exponent matrices) is
// integer-valued and desk-sized, so we keep one exact representation.
struct IntMat {
    int rows = 0;
    int cols = 0;
    std::vector<BigInt> a;

    IntMat() = default;
    IntMat(int r, int c) : rows(r), cols(c), a(static_cast<size_t>(r) * c) {}

    BigInt& at(int r, int c) { return a[static_cast<size_t>(r) * cols + c]; }
    const BigInt& at(int r, int c) const { return a[static_cast<size_t>(r) * cols + c]; }
};

// Rank over Q, computed by exact rational Gaussian elimination.
int rank_exact(const IntMat& m);

// Diagonal of the Smith normal form: d1 | d2 | ... | dk, all positive,
// zeros trimmed. k equals the rank of the matrix.
std::vector<BigInt> smith_diagonal(IntMat m);

// Product of two matrices, exact.
IntMat mat_mul(const IntMat& a, const IntMat& b);

bool is_zero(const IntMat& m);

} // namespace cmpd

#endif
