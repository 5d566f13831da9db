#pragma once

#include "rayfan/linalg.hpp"

namespace rayfan::polycore {

// L * A * R = diag(invariant_factors, 0, ...), L and R unimodular,
// d1 | d2 | ... | d_rank, all positive.
struct SNFResult {
    std::vector<Int> invariant_factors;  // rank entries
    size_t rank = 0;
    IntMatrix left;
    IntMatrix right;
    IntMatrix diagonal;  // same shape as the input
};

// Finitely generated abelian group given by invariants: Z^free_rank + sum Z/d.
struct AbelianGroup {
    size_t free_rank = 0;
    std::vector<Int> torsion;  // nontrivial invariant factors, d1 | d2 | ...

    bool trivial() const { return free_rank == 0 && torsion.empty(); }
    bool operator==(const AbelianGroup& o) const = default;
    std::string describe() const;
};

SNFResult smith_normal_form(const IntMatrix& m);

// Cokernel of the map Z^cols -> Z^rows given by m.
AbelianGroup cokernel(const IntMatrix& m);

// Z^dim modulo the lattice generated by the given row vectors.
AbelianGroup quotient_by_rowspan(const std::vector<IntVec>& rows, size_t dim);

// Basis of { x in Z^cols : m x = 0 }; saturated by construction.
std::vector<IntVec> kernel_basis(const IntMatrix& m);

// Integer solution of m x = b, if one exists.
std::optional<IntVec> solve_integer(const IntMatrix& m, const IntVec& b);

// Rational solution of m x = b, if one exists.
std::optional<RatVec> solve_rational(const IntMatrix& m, const IntVec& b);

// Basis (as rows) of the saturation (span_Q(rows) intersect Z^dim).
std::vector<IntVec> saturated_lattice_basis(const std::vector<IntVec>& rows, size_t dim);

// Unique row-style Hermite normal form basis of the lattice generated by
// the rows (pivots positive, entries above a pivot reduced, zero rows
// dropped).
std::vector<IntVec> hermite_basis(std::vector<IntVec> rows, size_t dim);

// True if the lattice generated by the rows is all of Z^dim.
bool rows_generate_full_lattice(const std::vector<IntVec>& rows, size_t dim);

}  // namespace rayfan::polycore
