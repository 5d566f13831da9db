#include "rayfan/snf.hpp"

#include <algorithm>

namespace rayfan::polycore {

std::string AbelianGroup::describe() const {
    if (trivial()) return "0";
    std::string s;
    for (size_t i = 0; i < free_rank; ++i) s += (s.empty() ? "Z" : " + Z");
    for (const auto& d : torsion) s += (s.empty() ? "Z/" : " + Z/") + d.get_str();
    return s;
}

namespace {

void swap_rows(IntMatrix& a, IntMatrix& l, size_t i, size_t j) {
    for (size_t c = 0; c < a.cols; ++c) std::swap(a.at(i, c), a.at(j, c));
    for (size_t c = 0; c < l.cols; ++c) std::swap(l.at(i, c), l.at(j, c));
}

void swap_cols(IntMatrix& a, IntMatrix& r, size_t i, size_t j) {
    for (size_t q = 0; q < a.rows; ++q) std::swap(a.at(q, i), a.at(q, j));
    for (size_t q = 0; q < r.rows; ++q) std::swap(r.at(q, i), r.at(q, j));
}

// row_i -= f * row_j
void add_row(IntMatrix& a, IntMatrix& l, size_t i, size_t j, const Int& f) {
    for (size_t c = 0; c < a.cols; ++c) a.at(i, c) -= f * a.at(j, c);
    for (size_t c = 0; c < l.cols; ++c) l.at(i, c) -= f * l.at(j, c);
}

// col_i -= f * col_j
void add_col(IntMatrix& a, IntMatrix& r, size_t i, size_t j, const Int& f) {
    for (size_t q = 0; q < a.rows; ++q) a.at(q, i) -= f * a.at(q, j);
    for (size_t q = 0; q < r.rows; ++q) r.at(q, i) -= f * r.at(q, j);
}

void negate_row(IntMatrix& a, IntMatrix& l, size_t i) {
    for (size_t c = 0; c < a.cols; ++c) a.at(i, c) = -a.at(i, c);
    for (size_t c = 0; c < l.cols; ++c) l.at(i, c) = -l.at(i, c);
}

Int fdiv_q(const Int& a, const Int& b) {
    Int q;
    mpz_fdiv_q(q.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return q;
}

}  // namespace

SNFResult smith_normal_form(const IntMatrix& m) {
    IntMatrix a = m;
    IntMatrix l = IntMatrix::identity(m.rows);
    IntMatrix r = IntMatrix::identity(m.cols);
    size_t t = 0;
    size_t bound = std::min(m.rows, m.cols);

    while (t < bound) {
        // pick the entry of smallest absolute value in the working block
        size_t pi = t, pj = t;
        bool found = false;
        Int best = 0;
        for (size_t i = t; i < a.rows; ++i)
            for (size_t j = t; j < a.cols; ++j) {
                const Int& e = a.at(i, j);
                if (e == 0) continue;
                Int mag;
                mpz_abs(mag.get_mpz_t(), e.get_mpz_t());
                if (!found || mag < best) {
                    best = mag;
                    pi = i;
                    pj = j;
                    found = true;
                }
            }
        if (!found) break;
        if (pi != t) swap_rows(a, l, t, pi);
        if (pj != t) swap_cols(a, r, t, pj);

        bool dirty = true;
        while (dirty) {
            dirty = false;
            for (size_t i = t + 1; i < a.rows; ++i) {
                if (a.at(i, t) == 0) continue;
                Int q = fdiv_q(a.at(i, t), a.at(t, t));
                add_row(a, l, i, t, q);
                if (a.at(i, t) != 0) {
                    swap_rows(a, l, t, i);  // remainder is smaller, repeat
                    dirty = true;
                }
            }
            for (size_t j = t + 1; j < a.cols; ++j) {
                if (a.at(t, j) == 0) continue;
                Int q = fdiv_q(a.at(t, j), a.at(t, t));
                add_col(a, r, j, t, q);
                if (a.at(t, j) != 0) {
                    swap_cols(a, r, t, j);
                    dirty = true;
                }
            }
        }

        if (a.at(t, t) < 0) negate_row(a, l, t);

        // enforce divisibility d_t | every remaining entry
        bool redo = false;
        for (size_t i = t + 1; i < a.rows && !redo; ++i)
            for (size_t j = t + 1; j < a.cols && !redo; ++j) {
                if (a.at(i, j) % a.at(t, t) != 0) {
                    add_row(a, l, t, i, Int(-1));  // row_t += row_i
                    redo = true;
                }
            }
        if (redo) continue;  // re-run elimination at the same t
        ++t;
    }

    SNFResult res;
    res.rank = t;
    res.left = std::move(l);
    res.right = std::move(r);
    res.diagonal = a;
    for (size_t i = 0; i < t; ++i) res.invariant_factors.push_back(a.at(i, i));
    return res;
}

AbelianGroup cokernel(const IntMatrix& m) {
    SNFResult s = smith_normal_form(m);
    AbelianGroup g;
    g.free_rank = m.rows - s.rank;
    for (const auto& d : s.invariant_factors)
        if (d != 1) g.torsion.push_back(d);
    return g;
}

AbelianGroup quotient_by_rowspan(const std::vector<IntVec>& rows, size_t dim) {
    if (rows.empty()) return AbelianGroup{dim, {}};
    return cokernel(IntMatrix::from_rows(rows, dim).transposed());
}

std::vector<IntVec> kernel_basis(const IntMatrix& m) {
    SNFResult s = smith_normal_form(m);
    std::vector<IntVec> basis;
    for (size_t j = s.rank; j < m.cols; ++j) basis.push_back(s.right.col(j));
    return basis;
}

namespace {

// Shared back-substitution through the SNF transforms.
std::optional<RatVec> solve_core(const IntMatrix& m, const IntVec& b, bool integral) {
    SNFResult s = smith_normal_form(m);
    IntVec y = mat_apply(s.left, b);
    RatVec z(m.cols, Rat(0));
    for (size_t i = 0; i < m.rows; ++i) {
        if (i < s.rank) {
            if (integral && y[i] % s.invariant_factors[i] != 0) return std::nullopt;
            z[i] = rat(y[i], s.invariant_factors[i]);
        } else if (y[i] != 0) {
            return std::nullopt;
        }
    }
    RatVec x(m.cols, Rat(0));
    for (size_t i = 0; i < m.cols; ++i)
        for (size_t j = 0; j < m.cols; ++j) x[i] += Rat(s.right.at(i, j)) * z[j];
    return x;
}

}  // namespace

std::optional<IntVec> solve_integer(const IntMatrix& m, const IntVec& b) {
    auto x = solve_core(m, b, true);
    if (!x) return std::nullopt;
    IntVec out(x->size());
    for (size_t i = 0; i < x->size(); ++i) out[i] = (*x)[i].get_num();
    return out;
}

std::optional<RatVec> solve_rational(const IntMatrix& m, const IntVec& b) {
    return solve_core(m, b, false);
}

std::vector<IntVec> saturated_lattice_basis(const std::vector<IntVec>& rows, size_t dim) {
    // Saturation of the row span: kernel of (kernel of the rows).
    if (rows.empty()) return {};
    auto orth = kernel_basis(IntMatrix::from_rows(rows, dim));
    if (orth.empty()) {
        std::vector<IntVec> full;
        for (size_t i = 0; i < dim; ++i) {
            IntVec e(dim, Int(0));
            e[i] = 1;
            full.push_back(e);
        }
        return full;
    }
    return kernel_basis(IntMatrix::from_rows(orth, dim));
}

bool rows_generate_full_lattice(const std::vector<IntVec>& rows, size_t dim) {
    return quotient_by_rowspan(rows, dim).trivial();
}

std::vector<IntVec> hermite_basis(std::vector<IntVec> rows, size_t dim) {
    auto& m = rows;
    size_t r = 0;
    for (size_t c = 0; c < dim && r < m.size(); ++c) {
        size_t p = r;
        while (p < m.size() && m[p][c] == 0) ++p;
        if (p == m.size()) continue;
        std::swap(m[r], m[p]);
        bool again = true;
        while (again) {
            again = false;
            for (size_t i = r + 1; i < m.size(); ++i) {
                if (m[i][c] == 0) continue;
                Int q;
                mpz_fdiv_q(q.get_mpz_t(), m[i][c].get_mpz_t(), m[r][c].get_mpz_t());
                for (size_t j = 0; j < dim; ++j) m[i][j] -= q * m[r][j];
                if (m[i][c] != 0) {
                    std::swap(m[r], m[i]);
                    again = true;
                }
            }
        }
        if (m[r][c] < 0)
            for (auto& e : m[r]) e = -e;
        for (size_t i = 0; i < r; ++i) {
            Int q;
            mpz_fdiv_q(q.get_mpz_t(), m[i][c].get_mpz_t(), m[r][c].get_mpz_t());
            if (q != 0)
                for (size_t j = 0; j < dim; ++j) m[i][j] -= q * m[r][j];
        }
        ++r;
    }
    m.resize(r);
    return m;
}

}  // namespace rayfan::polycore
