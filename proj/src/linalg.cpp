#include "rayfan/linalg.hpp"

namespace rayfan::polycore {

IntMatrix mat_mul(const IntMatrix& a, const IntMatrix& b) {
    if (a.cols != b.rows) throw std::invalid_argument("mat_mul: shape mismatch");
    IntMatrix c(a.rows, b.cols);
    for (size_t i = 0; i < a.rows; ++i)
        for (size_t k = 0; k < a.cols; ++k) {
            if (a.at(i, k) == 0) continue;
            for (size_t j = 0; j < b.cols; ++j) c.at(i, j) += a.at(i, k) * b.at(k, j);
        }
    return c;
}

IntVec mat_apply(const IntMatrix& m, const IntVec& v) {
    if (m.cols != v.size()) throw std::invalid_argument("mat_apply: shape mismatch");
    IntVec out(m.rows, Int(0));
    for (size_t i = 0; i < m.rows; ++i)
        for (size_t j = 0; j < m.cols; ++j) out[i] += m.at(i, j) * v[j];
    return out;
}

RatVec mat_apply(const IntMatrix& m, const RatVec& v) {
    if (m.cols != v.size()) throw std::invalid_argument("mat_apply: shape mismatch");
    RatVec out(m.rows, Rat(0));
    for (size_t i = 0; i < m.rows; ++i)
        for (size_t j = 0; j < m.cols; ++j) out[i] += Rat(m.at(i, j)) * v[j];
    return out;
}

IntVec make_primitive(const IntVec& v) {
    Int g = 0;
    for (const auto& x : v) mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), x.get_mpz_t());
    if (g == 0 || g == 1) return v;
    IntVec out(v.size());
    for (size_t i = 0; i < v.size(); ++i) out[i] = v[i] / g;
    return out;
}

IntVec primitive_of(const RatVec& v) {
    Int lcm = 1;
    for (const auto& q : v) mpz_lcm(lcm.get_mpz_t(), lcm.get_mpz_t(), q.get_den().get_mpz_t());
    IntVec w(v.size());
    for (size_t i = 0; i < v.size(); ++i) {
        Rat scaled = v[i] * Rat(lcm);
        w[i] = scaled.get_num();
    }
    return make_primitive(w);
}

bool lex_less(const IntVec& a, const IntVec& b) {
    for (size_t i = 0; i < a.size() && i < b.size(); ++i) {
        if (a[i] != b[i]) return a[i] < b[i];
    }
    return a.size() < b.size();
}

size_t rank_of(const std::vector<IntVec>& vectors, size_t dim) {
    std::vector<RatVec> m;
    m.reserve(vectors.size());
    for (const auto& v : vectors) m.push_back(to_rat(v));
    size_t rank = 0;
    for (size_t col = 0; col < dim && rank < m.size(); ++col) {
        size_t pivot = rank;
        while (pivot < m.size() && m[pivot][col] == 0) ++pivot;
        if (pivot == m.size()) continue;
        std::swap(m[rank], m[pivot]);
        for (size_t i = 0; i < m.size(); ++i) {
            if (i == rank || m[i][col] == 0) continue;
            Rat f = m[i][col] / m[rank][col];
            for (size_t j = col; j < dim; ++j) m[i][j] -= f * m[rank][j];
        }
        ++rank;
    }
    return rank;
}

std::optional<RatVec> coordinates_in_span(const std::vector<IntVec>& basis,
                                          const IntVec& v, size_t dim) {
    // Gaussian elimination on the augmented system  sum_i x_i basis[i] = v.
    size_t k = basis.size();
    std::vector<RatVec> aug(dim, RatVec(k + 1, Rat(0)));
    for (size_t j = 0; j < dim; ++j) {
        for (size_t i = 0; i < k; ++i) aug[j][i] = Rat(basis[i][j]);
        aug[j][k] = Rat(v[j]);
    }
    std::vector<long> pivot_col(dim, -1);
    size_t r = 0;
    for (size_t c = 0; c < k && r < dim; ++c) {
        size_t p = r;
        while (p < dim && aug[p][c] == 0) ++p;
        if (p == dim) continue;
        std::swap(aug[r], aug[p]);
        for (size_t i = 0; i < dim; ++i) {
            if (i == r || aug[i][c] == 0) continue;
            Rat f = aug[i][c] / aug[r][c];
            for (size_t j = c; j <= k; ++j) aug[i][j] -= f * aug[r][j];
        }
        pivot_col[r] = static_cast<long>(c);
        ++r;
    }
    RatVec x(k, Rat(0));
    for (size_t i = 0; i < r; ++i) x[pivot_col[i]] = aug[i][k] / aug[i][pivot_col[i]];
    // Rows below the pivots must have zero right-hand side, else v is
    // outside the span.
    for (size_t i = r; i < dim; ++i)
        if (aug[i][k] != 0) return std::nullopt;
    return x;
}

}  // namespace rayfan::polycore
