#pragma once

#include <cstddef>
#include <optional>

#include "rayfan/rational.hpp"

namespace rayfan::polycore {

// Dense arbitrary-precision integer matrix, row-major. Small and immutable
// in spirit; used for degree matrices, grading maps and lattice maps.
struct IntMatrix {
    size_t rows = 0;
    size_t cols = 0;
    IntVec entries;  // rows*cols, row-major

    IntMatrix() = default;
    IntMatrix(size_t r, size_t c) : rows(r), cols(c), entries(r * c, Int(0)) {}
    IntMatrix(size_t r, size_t c, IntVec e) : rows(r), cols(c), entries(std::move(e)) {
        if (rows * cols != entries.size())
            throw std::invalid_argument("IntMatrix: rows*cols != number of entries");
    }

    Int& at(size_t i, size_t j) { return entries[i * cols + j]; }
    const Int& at(size_t i, size_t j) const { return entries[i * cols + j]; }

    IntVec row(size_t i) const {
        return IntVec(entries.begin() + i * cols, entries.begin() + (i + 1) * cols);
    }
    IntVec col(size_t j) const {
        IntVec c(rows);
        for (size_t i = 0; i < rows; ++i) c[i] = at(i, j);
        return c;
    }

    static IntMatrix identity(size_t n) {
        IntMatrix m(n, n);
        for (size_t i = 0; i < n; ++i) m.at(i, i) = 1;
        return m;
    }

    static IntMatrix from_rows(const std::vector<IntVec>& rows_in, size_t ncols) {
        IntMatrix m(rows_in.size(), ncols);
        for (size_t i = 0; i < rows_in.size(); ++i) {
            if (rows_in[i].size() != ncols)
                throw std::invalid_argument("IntMatrix: ragged rows");
            for (size_t j = 0; j < ncols; ++j) m.at(i, j) = rows_in[i][j];
        }
        return m;
    }

    std::vector<IntVec> to_rows() const {
        std::vector<IntVec> r(rows);
        for (size_t i = 0; i < rows; ++i) r[i] = row(i);
        return r;
    }

    IntMatrix transposed() const {
        IntMatrix t(cols, rows);
        for (size_t i = 0; i < rows; ++i)
            for (size_t j = 0; j < cols; ++j) t.at(j, i) = at(i, j);
        return t;
    }

    bool operator==(const IntMatrix& o) const = default;
};

IntMatrix mat_mul(const IntMatrix& a, const IntMatrix& b);
IntVec mat_apply(const IntMatrix& m, const IntVec& v);
RatVec mat_apply(const IntMatrix& m, const RatVec& v);

inline Int dot(const IntVec& a, const IntVec& b) {
    Int s = 0;
    for (size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
    return s;
}

inline Rat dot(const RatVec& a, const IntVec& b) {
    Rat s = 0;
    for (size_t i = 0; i < a.size(); ++i) s += a[i] * Rat(b[i]);
    return s;
}

inline Rat dot(const RatVec& a, const RatVec& b) {
    Rat s = 0;
    for (size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
    return s;
}

inline bool is_zero(const IntVec& v) {
    for (const auto& x : v)
        if (x != 0) return false;
    return true;
}

inline bool is_zero(const RatVec& v) {
    for (const auto& x : v)
        if (x != 0) return false;
    return true;
}

// Divides by the gcd of the entries; the zero vector stays zero. Sign is
// kept, so a primitive vector still spans the same ray.
IntVec make_primitive(const IntVec& v);

// Clears denominators and makes the result primitive.
IntVec primitive_of(const RatVec& v);

// Lexicographic order used for the canonical form of cones.
bool lex_less(const IntVec& a, const IntVec& b);

// Rank over Q by fraction-free Gaussian elimination.
size_t rank_of(const std::vector<IntVec>& vectors, size_t dim);

// Unique solution x of  basis^T x = v  when v lies in the column span of
// basis^T (vectors are rows of length dim, x has one entry per vector).
// Returns nullopt when v is outside the span.
std::optional<RatVec> coordinates_in_span(const std::vector<IntVec>& basis,
                                          const IntVec& v, size_t dim);

}  // namespace rayfan::polycore
