#include "rayfan/lp.hpp"

#include <algorithm>
#include <cassert>

namespace rayfan::polycore {

namespace {

// Primal simplex on the standard form  max c.y, A y = b, y >= 0, b >= 0.
// Rows are length nvars+1 with the right-hand side last.
class Tableau {
public:
    Tableau(std::vector<RatVec> rows, std::vector<size_t> basis, size_t nvars)
        : rows_(std::move(rows)), basis_(std::move(basis)), nvars_(nvars) {}

    // Runs simplex for the objective c (size nvars_), letting only columns
    // below entering_limit enter the basis (phase 2 must keep the
    // artificial columns out). Returns false when unbounded.
    bool maximize(const RatVec& c, size_t entering_limit) {
        build_objective(c);
        while (true) {
            size_t enter = nvars_;
            for (size_t j = 0; j < entering_limit; ++j) {  // Bland: smallest index
                if (obj_[j] < 0) {
                    enter = j;
                    break;
                }
            }
            if (enter == nvars_) return true;
            size_t leave = rows_.size();
            Rat best_ratio = 0;
            for (size_t i = 0; i < rows_.size(); ++i) {
                if (rows_[i][enter] <= 0) continue;
                Rat ratio = rows_[i][nvars_] / rows_[i][enter];
                if (leave == rows_.size() || ratio < best_ratio ||
                    (ratio == best_ratio && basis_[i] < basis_[leave])) {
                    leave = i;
                    best_ratio = ratio;
                }
            }
            if (leave == rows_.size()) return false;
            pivot(leave, enter);
        }
    }

    void pivot(size_t row, size_t col) {
        Rat p = rows_[row][col];
        for (auto& e : rows_[row]) e /= p;
        for (size_t i = 0; i < rows_.size(); ++i) {
            if (i == row || rows_[i][col] == 0) continue;
            Rat f = rows_[i][col];
            for (size_t j = 0; j <= nvars_; ++j) rows_[i][j] -= f * rows_[row][j];
        }
        if (!obj_.empty() && obj_[col] != 0) {
            Rat f = obj_[col];
            for (size_t j = 0; j <= nvars_; ++j) obj_[j] -= f * rows_[row][j];
        }
        basis_[row] = col;
    }

    Rat objective_value() const { return obj_[nvars_]; }

    RatVec solution() const {
        RatVec y(nvars_, Rat(0));
        for (size_t i = 0; i < rows_.size(); ++i) y[basis_[i]] = rows_[i][nvars_];
        return y;
    }

    const std::vector<size_t>& basis() const { return basis_; }
    std::vector<RatVec>& rows() { return rows_; }
    std::vector<size_t>& basis_mut() { return basis_; }

private:
    void build_objective(const RatVec& c) {
        // obj_[j] = c_B B^-1 A_j - c_j, obj_[n] = current objective value
        obj_.assign(nvars_ + 1, Rat(0));
        for (size_t j = 0; j < nvars_; ++j) obj_[j] = -c[j];
        obj_[nvars_] = 0;
        for (size_t i = 0; i < rows_.size(); ++i) {
            const Rat& cb = c[basis_[i]];
            if (cb == 0) continue;
            for (size_t j = 0; j <= nvars_; ++j) obj_[j] += cb * rows_[i][j];
        }
    }

    std::vector<RatVec> rows_;
    RatVec obj_;
    std::vector<size_t> basis_;
    size_t nvars_;
};

struct StandardForm {
    std::vector<RatVec> rows;  // equality rows, rhs last, rhs >= 0
    size_t nvars = 0;
    RatVec objective;
    size_t dim = 0;  // original free variables; y-layout: x+ (dim), x- (dim), surplus...
};

StandardForm to_standard(const std::vector<LinearConstraint>& cs, const RatVec& objective,
                         size_t dim) {
    size_t nsurplus = 0;
    for (const auto& c : cs)
        if (c.rel != Relation::Equal) ++nsurplus;
    StandardForm sf;
    sf.dim = dim;
    sf.nvars = 2 * dim + nsurplus;
    sf.objective.assign(sf.nvars, Rat(0));
    for (size_t j = 0; j < dim; ++j) {
        sf.objective[j] = objective[j];
        sf.objective[dim + j] = -objective[j];
    }
    size_t surplus_at = 2 * dim;
    for (const auto& c : cs) {
        if (c.normal.size() != dim)
            throw std::invalid_argument("lp: constraint dimension mismatch");
        RatVec row(sf.nvars + 1, Rat(0));
        for (size_t j = 0; j < dim; ++j) {
            row[j] = c.normal[j];
            row[dim + j] = -c.normal[j];
        }
        row[sf.nvars] = c.rhs;
        if (c.rel != Relation::Equal) row[surplus_at++] = -1;  // a.x - u = rhs
        if (row[sf.nvars] < 0)
            for (auto& e : row) e = -e;
        sf.rows.push_back(std::move(row));
    }
    return sf;
}

LpOptimum run_two_phase(const StandardForm& sf) {
    size_t m = sf.rows.size();
    size_t n_art = sf.nvars + m;
    std::vector<RatVec> rows(m, RatVec(n_art + 1, Rat(0)));
    std::vector<size_t> basis(m);
    for (size_t i = 0; i < m; ++i) {
        for (size_t j = 0; j < sf.nvars; ++j) rows[i][j] = sf.rows[i][j];
        rows[i][sf.nvars + i] = 1;
        rows[i][n_art] = sf.rows[i][sf.nvars];
        basis[i] = sf.nvars + i;
    }
    Tableau tab(std::move(rows), std::move(basis), n_art);

    RatVec phase1(n_art, Rat(0));
    for (size_t j = sf.nvars; j < n_art; ++j) phase1[j] = -1;
    bool bounded = tab.maximize(phase1, n_art);
    assert(bounded);
    (void)bounded;
    if (tab.objective_value() != 0) return {LpStatus::Infeasible, Rat(0), {}};

    // Drive leftover artificials out of the basis; a row with no usable
    // pivot is a redundant constraint and can be dropped.
    for (size_t i = 0; i < tab.rows().size();) {
        if (tab.basis()[i] < sf.nvars) {
            ++i;
            continue;
        }
        size_t col = sf.nvars;
        for (size_t j = 0; j < sf.nvars; ++j)
            if (tab.rows()[i][j] != 0) {
                col = j;
                break;
            }
        if (col < sf.nvars) {
            tab.pivot(i, col);
            ++i;
        } else {
            tab.rows().erase(tab.rows().begin() + static_cast<long>(i));
            tab.basis_mut().erase(tab.basis_mut().begin() + static_cast<long>(i));
        }
    }

    RatVec phase2(n_art, Rat(0));
    for (size_t j = 0; j < sf.nvars; ++j) phase2[j] = sf.objective[j];
    if (!tab.maximize(phase2, sf.nvars)) return {LpStatus::Unbounded, Rat(0), {}};

    RatVec y = tab.solution();
    RatVec x(sf.dim);
    for (size_t j = 0; j < sf.dim; ++j) x[j] = y[j] - y[sf.dim + j];
    return {LpStatus::Optimal, tab.objective_value(), std::move(x)};
}

}  // namespace

LpOptimum lp_optimize(const std::vector<LinearConstraint>& constraints,
                      const RatVec& objective, size_t dim) {
    for (const auto& c : constraints)
        if (c.rel == Relation::StrictlyGreater)
            throw std::invalid_argument("lp_optimize: strict constraints not supported here");
    if (objective.size() != dim) throw std::invalid_argument("lp: objective dimension mismatch");
    return run_two_phase(to_standard(constraints, objective, dim));
}

LpFeasibility lp_feasible(const std::vector<LinearConstraint>& constraints, size_t dim) {
    bool any_strict = false;
    for (const auto& c : constraints)
        if (c.rel == Relation::StrictlyGreater) any_strict = true;

    if (!any_strict) {
        auto opt = lp_optimize(constraints, RatVec(dim, Rat(0)), dim);
        if (opt.status == LpStatus::Infeasible) return {false, {}};
        return {true, std::move(opt.witness)};
    }

    // One extra variable s, a.x - s >= rhs on the strict rows, s <= 1,
    // maximize s; strictly feasible iff the optimum is positive.
    std::vector<LinearConstraint> relaxed;
    relaxed.reserve(constraints.size() + 1);
    for (const auto& c : constraints) {
        LinearConstraint w;
        w.normal = c.normal;
        w.normal.resize(dim + 1, Rat(0));
        w.rhs = c.rhs;
        w.rel = c.rel == Relation::Equal ? Relation::Equal : Relation::GreaterEqual;
        if (c.rel == Relation::StrictlyGreater) w.normal[dim] = -1;
        relaxed.push_back(std::move(w));
    }
    LinearConstraint cap;  // -s >= -1
    cap.normal.assign(dim + 1, Rat(0));
    cap.normal[dim] = -1;
    cap.rhs = -1;
    relaxed.push_back(std::move(cap));

    RatVec obj(dim + 1, Rat(0));
    obj[dim] = 1;
    auto opt = lp_optimize(relaxed, obj, dim + 1);
    if (opt.status != LpStatus::Optimal || opt.value <= 0) return {false, {}};
    opt.witness.resize(dim);
    return {true, std::move(opt.witness)};
}

}  // namespace rayfan::polycore
