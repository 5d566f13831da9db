#include "rayfan/gradedring.hpp"

#include <algorithm>
#include <functional>
#include <map>

#include "rayfan/snf.hpp"

namespace rayfan::gradedring {

using namespace polycore;

namespace {

void sort_faces(std::vector<std::vector<size_t>>& faces) {
    std::sort(faces.begin(), faces.end(), [](const auto& a, const auto& b) {
        if (a.size() != b.size()) return a.size() < b.size();
        return a < b;
    });
    faces.erase(std::unique(faces.begin(), faces.end()), faces.end());
}

// Positivity (the A_0 = k condition for these presentations): reject when
// some nonzero nonnegative rational combination of the degrees vanishes.
void check_positivity(const std::vector<IntVec>& degrees, size_t n) {
    size_t s = degrees.size();
    std::vector<LinearConstraint> cs;
    for (size_t i = 0; i < s; ++i) {
        RatVec row(s, Rat(0));
        row[i] = 1;
        cs.push_back(ge(std::move(row)));
    }
    RatVec ones(s, Rat(1));
    cs.push_back(eq(ones, Rat(1)));
    for (size_t j = 0; j < n; ++j) {
        RatVec row(s, Rat(0));
        for (size_t i = 0; i < s; ++i) row[i] = Rat(degrees[i][j]);
        cs.push_back(eq(std::move(row)));
    }
    auto fe = lp_feasible(cs, s);
    if (fe.feasible) {
        std::string lam;
        for (size_t i = 0; i < s; ++i) lam += (i ? "," : "") + format_rat(fe.witness[i]);
        throw SpecError(
            "positivity check failed: the nonnegative combination lambda=(" + lam +
            ") of the generator degrees is zero, so the degree-zero part would contain "
            "non-constant elements (the A_0 = k hypothesis fails); such gradings are "
            "rejected");
    }
}

RatVec find_positive_functional(const std::vector<IntVec>& degrees, size_t n) {
    std::vector<LinearConstraint> cs;
    for (const auto& d : degrees) cs.push_back(ge(to_rat(d), Rat(1)));
    auto fe = lp_feasible(cs, n);
    if (!fe.feasible)
        throw std::logic_error("no positive functional despite positivity check");
    return fe.witness;
}

std::vector<RationalCone> suffix_cones(const std::vector<IntVec>& cols, size_t dim) {
    std::vector<RationalCone> out(cols.size() + 1, zero_cone(dim));
    for (size_t i = cols.size(); i-- > 0;) {
        std::vector<IntVec> tail(cols.begin() + static_cast<long>(i), cols.end());
        out[i] = cone_from_generators(tail, dim);
    }
    return out;
}

void finish_spec(GradedRingSpec& spec) {
    if (spec.variable_names.size() != spec.num_generators()) {
        spec.variable_names.clear();
        static const char* short_names[] = {"x", "y", "z", "w", "u", "v"};
        for (size_t i = 0; i < spec.num_generators(); ++i)
            spec.variable_names.push_back(spec.num_generators() <= 6
                                              ? short_names[i]
                                              : "x" + std::to_string(i + 1));
    }
    check_positivity(spec.generator_degrees, spec.grading_rank);
    spec.positive_functional_ = find_positive_functional(spec.generator_degrees, spec.grading_rank);
    spec.degree_suffix_cones_ = suffix_cones(spec.generator_degrees, spec.grading_rank);

    size_t s = spec.num_generators();
    if (spec.kind == RingKind::Polynomial) {
        if (s > 16) throw SpecError("too many generators for face enumeration (max 16)");
        spec.exponent_cone_ = full_orthant(s);
        spec.faces_.clear();
        for (size_t mask = 0; mask < (size_t(1) << s); ++mask) {
            std::vector<size_t> f;
            for (size_t i = 0; i < s; ++i)
                if (mask & (size_t(1) << i)) f.push_back(i);
            spec.faces_.push_back(std::move(f));
        }
    } else {
        spec.exponent_cone_ = cone_from_generators(spec.exponent_vectors, spec.ambient_rank,
                                                   &spec.warnings);
        spec.exponent_suffix_cones_ = suffix_cones(spec.exponent_vectors, spec.ambient_rank);
        spec.faces_.clear();
        for (const auto& face : face_lattice(spec.exponent_cone_)) {
            std::vector<size_t> members;
            for (size_t i = 0; i < s; ++i) {
                bool on = true;
                for (size_t hi : face.active_halfspaces)
                    if (dot(spec.exponent_vectors[i], spec.exponent_cone_.halfspaces[hi]) != 0) {
                        on = false;
                        break;
                    }
                if (on) members.push_back(i);
            }
            spec.faces_.push_back(std::move(members));
        }
    }
    sort_faces(spec.faces_);
}

// Exhaustive enumeration of the nonnegative integer combinations
//   sum_i c_i cols[i] = target
// with two sound pruning rules: a strictly positive functional on the
// columns caps every coefficient (termination), and a residual target
// outside the rational cone of the remaining columns cannot be finished.
// Positive answers are always backed by an explicit witness; negative
// answers come from exhausting the bounded space.
class CombinationSolver {
public:
    CombinationSolver(const std::vector<IntVec>* cols, const std::vector<RationalCone>* suffix,
                      RatVec ambient_phi)
        : cols_(cols), suffix_(suffix), ambient_phi_(std::move(ambient_phi)) {
        for (const auto& col : *cols_) {
            phi_cols_.push_back(dot(ambient_phi_, col));
            if (phi_cols_.back() <= 0)
                throw std::logic_error("combination solver needs a positive functional");
        }
    }

    // Visits every solution with c >= lower (componentwise); the visitor
    // returns false to stop (used for existence queries). Returns false
    // iff the visitor stopped the walk.
    bool enumerate(const IntVec& target, const IntVec& lower,
                   const std::function<bool(const IntVec&)>& visit) const {
        IntVec rem = target;
        for (size_t i = 0; i < cols_->size(); ++i)
            if (lower[i] != 0)
                for (size_t j = 0; j < rem.size(); ++j) rem[j] -= lower[i] * (*cols_)[i][j];
        IntVec c(cols_->size(), Int(0));
        return dfs(0, rem, dot(ambient_phi_, rem), lower, c, visit);
    }

    bool exists(const IntVec& target, const IntVec& lower) const {
        return !enumerate(target, lower, [](const IntVec&) { return false; });
    }

private:
    bool dfs(size_t i, const IntVec& rem, const Rat& phi_rem, const IntVec& lower, IntVec& c,
             const std::function<bool(const IntVec&)>& visit) const {
        if (phi_rem < 0) return true;
        if (!contains((*suffix_)[i], to_rat(rem))) return true;
        if (i == cols_->size()) {
            if (!is_zero(rem)) return true;
            IntVec full = c;
            for (size_t t = 0; t < full.size(); ++t) full[t] += lower[t];
            return visit(full);
        }
        Rat cmax_q = phi_rem / phi_cols_[i];
        long cmax = static_cast<long>(mpz_class(cmax_q.get_num() / cmax_q.get_den()).get_si());
        IntVec cur = rem;
        Rat phi_cur = phi_rem;
        for (long k = 0; k <= cmax; ++k) {
            c[i] = k;
            if (!dfs(i + 1, cur, phi_cur, lower, c, visit)) return false;
            for (size_t j = 0; j < cur.size(); ++j) cur[j] -= (*cols_)[i][j];
            phi_cur -= phi_cols_[i];
        }
        c[i] = 0;
        return true;
    }

    const std::vector<IntVec>* cols_;
    const std::vector<RationalCone>* suffix_;
    RatVec ambient_phi_;
    RatVec phi_cols_;
};

RatVec exponent_phi(const GradedRingSpec& ring) {
    // phi composed with the grading map, as a functional on exponents
    RatVec out(ring.ambient_rank, Rat(0));
    for (size_t j = 0; j < ring.ambient_rank; ++j)
        for (size_t i = 0; i < ring.grading_rank; ++i)
            out[j] += ring.positive_functional()[i] * Rat(ring.grading_map.at(i, j));
    return out;
}

CombinationSolver degree_solver(const GradedRingSpec& ring) {
    return CombinationSolver(&ring.generator_degrees, &ring.degree_suffix_cones_,
                             ring.positive_functional());
}

CombinationSolver exponent_solver(const GradedRingSpec& ring) {
    return CombinationSolver(&ring.exponent_vectors, &ring.exponent_suffix_cones_,
                             exponent_phi(ring));
}

}  // namespace

bool GradedRingSpec::same_ring(const GradedRingSpec& o) const {
    return kind == o.kind && grading_rank == o.grading_rank &&
           generator_degrees == o.generator_degrees && exponent_vectors == o.exponent_vectors &&
           grading_map == o.grading_map;
}

GradedRingSpec make_polynomial_ring(std::vector<IntVec> degrees, size_t grading_rank,
                                    std::vector<std::string> names) {
    GradedRingSpec spec;
    spec.kind = RingKind::Polynomial;
    spec.grading_rank = grading_rank;
    for (size_t i = 0; i < degrees.size(); ++i) {
        if (degrees[i].size() != grading_rank)
            throw SpecError("generator degree has wrong length");
        if (is_zero(degrees[i])) {
            spec.warnings.push_back("zero degree row dropped (generator " +
                                    std::to_string(i + 1) + ")");
            continue;
        }
        spec.generator_degrees.push_back(std::move(degrees[i]));
        if (i < names.size()) spec.variable_names.push_back(names[i]);
    }
    if (spec.generator_degrees.empty()) throw SpecError("ring needs at least one generator");
    if (!names.empty() && spec.variable_names.size() != spec.num_generators())
        spec.variable_names.clear();
    finish_spec(spec);
    return spec;
}

GradedRingSpec make_semigroup_ring(std::vector<IntVec> exponent_vectors, IntMatrix grading_map,
                                   std::vector<std::string> names) {
    GradedRingSpec spec;
    spec.kind = RingKind::Semigroup;
    spec.grading_rank = grading_map.rows;
    spec.ambient_rank = grading_map.cols;
    spec.grading_map = std::move(grading_map);
    for (auto& e : exponent_vectors) {
        if (e.size() != spec.ambient_rank)
            throw SpecError("exponent vector has wrong length");
        if (is_zero(e)) throw SpecError("zero exponent vector is not a ring generator");
    }
    spec.exponent_vectors = std::move(exponent_vectors);
    for (const auto& e : spec.exponent_vectors)
        spec.generator_degrees.push_back(mat_apply(spec.grading_map, e));
    if (spec.generator_degrees.empty()) throw SpecError("ring needs at least one generator");
    spec.variable_names = std::move(names);
    finish_spec(spec);
    return spec;
}

RationalCone weight_cone(const GradedRingSpec& ring) {
    return cone_from_generators(ring.generator_degrees, ring.grading_rank);
}

namespace {

// a in cone(degrees[i] : i in subset)?
bool in_degree_cone(const GradedRingSpec& ring, const std::vector<size_t>& subset,
                    const IntVec& a) {
    if (subset.empty()) return is_zero(a);
    std::vector<LinearConstraint> cs;
    size_t k = subset.size();
    for (size_t j = 0; j < ring.grading_rank; ++j) {
        RatVec row(k);
        for (size_t t = 0; t < k; ++t) row[t] = Rat(ring.degree(subset[t])[j]);
        cs.push_back(eq(std::move(row), Rat(a[j])));
    }
    for (size_t t = 0; t < k; ++t) {
        RatVec row(k, Rat(0));
        row[t] = 1;
        cs.push_back(ge(std::move(row)));
    }
    return lp_feasible(cs, k).feasible;
}

bool subset_contains(const std::vector<size_t>& small, const std::vector<size_t>& big) {
    return std::includes(big.begin(), big.end(), small.begin(), small.end());
}

}  // namespace

RayIdeal ray_ideal(const GradedRingSpec& ring, const RatVec& a) {
    if (a.size() != ring.grading_rank) throw SpecError("ray_ideal: point dimension mismatch");
    RayIdeal j;
    j.ring = &ring;
    j.ray = primitive_of(a);

    // Faces are sorted by size, so every member face strictly below the
    // current one has already been seen: membership is inherited upward
    // and only the antichain of minimal members needs an LP decision.
    for (const auto& face : ring.faces()) {
        bool inherited = false;
        for (const auto& m : j.minimal_member_faces)
            if (subset_contains(m, face)) {
                inherited = true;
                break;
            }
        if (inherited) {
            j.member_faces.insert(face);
        } else if (in_degree_cone(ring, face, j.ray)) {
            j.member_faces.insert(face);
            j.minimal_member_faces.push_back(face);
        }
    }
    j.is_zero = j.member_faces.empty();
    j.is_unit = !ring.faces().empty() && j.member_faces.count(ring.faces().front()) > 0;

    if (ring.kind == RingKind::Polynomial && !j.is_zero) {
        j.squarefree_generators = j.minimal_member_faces;
        size_t s = ring.num_generators();
        // minimal primes: complements of the maximal non-member supports
        for (size_t mask = 0; mask < (size_t(1) << s); ++mask) {
            std::vector<size_t> f;
            for (size_t i = 0; i < s; ++i)
                if (mask & (size_t(1) << i)) f.push_back(i);
            if (j.member_faces.count(f)) continue;
            bool maximal = true;
            for (size_t i = 0; i < s && maximal; ++i) {
                if (mask & (size_t(1) << i)) continue;
                std::vector<size_t> g = f;
                g.insert(std::lower_bound(g.begin(), g.end(), i), i);
                if (!j.member_faces.count(g)) maximal = false;
            }
            if (maximal) {
                std::vector<size_t> prime;
                for (size_t i = 0; i < s; ++i)
                    if (!(mask & (size_t(1) << i))) prime.push_back(i);
                j.minimal_primes.push_back(std::move(prime));
            }
        }
        std::sort(j.minimal_primes.begin(), j.minimal_primes.end());
    }
    return j;
}

RayIdeal ray_ideal(const GradedRingSpec& ring, const IntVec& a) {
    return ray_ideal(ring, to_rat(a));
}

std::vector<size_t> monomial_face(const GradedRingSpec& ring, const Monomial& m) {
    const auto& K = ring.exponent_cone();
    if (m.exponents.size() != ring.exponent_dim())
        throw SpecError("monomial has wrong exponent length");
    RatVec u = to_rat(m.exponents);
    if (!contains(K, u)) throw SpecError("monomial outside the exponent cone");
    std::vector<size_t> members;
    std::vector<const IntVec*> active;
    for (const auto& h : K.halfspaces)
        if (dot(u, h) == 0) active.push_back(&h);
    auto gen_vec = [&](size_t i) -> IntVec {
        if (ring.kind == RingKind::Polynomial) {
            IntVec e(ring.num_generators(), Int(0));
            e[i] = 1;
            return e;
        }
        return ring.exponent_vectors[i];
    };
    for (size_t i = 0; i < ring.num_generators(); ++i) {
        IntVec g = gen_vec(i);
        bool on = true;
        for (const IntVec* h : active)
            if (dot(g, *h) != 0) {
                on = false;
                break;
            }
        if (on) members.push_back(i);
    }
    return members;
}

bool in_semigroup(const GradedRingSpec& ring, const IntVec& u) {
    if (u.size() != ring.exponent_dim()) throw SpecError("exponent vector has wrong length");
    if (ring.kind == RingKind::Polynomial) {
        for (const auto& e : u)
            if (e < 0) return false;
        return true;
    }
    if (is_zero(u)) return true;
    return exponent_solver(ring).exists(u, IntVec(ring.num_generators(), Int(0)));
}

bool monomial_in_ray_ideal(const GradedRingSpec& ring, const Monomial& m, const RatVec& a) {
    for (const auto& e : m.exponents)
        if (e < 0) throw SpecError("monomial with negative exponent");
    if (ring.kind == RingKind::Semigroup && !in_semigroup(ring, m.exponents))
        throw SpecError("exponent vector is not in the semigroup");
    RayIdeal j = ray_ideal(ring, a);
    return j.member_faces.count(monomial_face(ring, m)) > 0;
}

IdealOrder ray_ideal_compare(const RayIdeal& j1, const RayIdeal& j2) {
    if (!j1.ring || !j2.ring || !j1.ring->same_ring(*j2.ring))
        throw SpecError("ray_ideal_compare: ideals belong to different rings");
    bool le = std::includes(j2.member_faces.begin(), j2.member_faces.end(),
                            j1.member_faces.begin(), j1.member_faces.end());
    bool ge_ = std::includes(j1.member_faces.begin(), j1.member_faces.end(),
                             j2.member_faces.begin(), j2.member_faces.end());
    if (le && ge_) return IdealOrder::Equal;
    if (le) return IdealOrder::LessThan;
    if (ge_) return IdealOrder::GreaterThan;
    return IdealOrder::Incomparable;
}

namespace {

Int det_of(const std::vector<IntVec>& rows) {
    size_t k = rows.size();
    if (k == 0) return 1;
    if (k == 1) return rows[0][0];
    Int d = 0;
    for (size_t i = 0; i < k; ++i) {
        std::vector<IntVec> minor;
        for (size_t r = 0; r < k; ++r) {
            if (r == i) continue;
            IntVec m(rows[r].begin() + 1, rows[r].end());
            minor.push_back(std::move(m));
        }
        Int term = rows[i][0] * det_of(minor);
        d += (i % 2 == 0) ? term : -term;
    }
    return d;
}

// Largest |det| over all square submatrices of the degree matrix. By
// Caratheodory plus Cramer, whenever a lies in the cone of some support
// there is an integer factorization witness whose degree is k*a with
// 1 <= k <= this bound, so searching k up to it is exhaustive.
Int minor_bound(const GradedRingSpec& ring) {
    size_t n = ring.grading_rank, s = ring.num_generators();
    Int best = 1;
    size_t kmax = std::min(n, s);
    std::vector<size_t> cols, rows;
    std::function<void(size_t, size_t, size_t)> pick_rows = [&](size_t k, size_t start,
                                                                size_t depth) {
        if (depth == k) {
            std::vector<IntVec> sub;
            for (size_t r : rows) {
                IntVec v(k);
                for (size_t t = 0; t < k; ++t) v[t] = ring.degree(cols[t])[r];
                sub.push_back(std::move(v));
            }
            Int d = det_of(sub);
            mpz_abs(d.get_mpz_t(), d.get_mpz_t());
            if (d > best) best = d;
            return;
        }
        for (size_t r = start; r < n; ++r) {
            rows.push_back(r);
            pick_rows(k, r + 1, depth + 1);
            rows.pop_back();
        }
    };
    std::function<void(size_t, size_t, size_t)> pick_cols = [&](size_t k, size_t start,
                                                                size_t depth) {
        if (depth == k) {
            rows.clear();
            pick_rows(k, 0, 0);
            return;
        }
        for (size_t c = start; c < s; ++c) {
            cols.push_back(c);
            pick_cols(k, c + 1, depth + 1);
            cols.pop_back();
        }
    };
    for (size_t k = 1; k <= kmax; ++k) {
        cols.clear();
        pick_cols(k, 0, 0);
    }
    return best;
}

IntVec scaled(const IntVec& v, const Int& k) {
    IntVec out(v.size());
    for (size_t j = 0; j < v.size(); ++j) out[j] = k * v[j];
    return out;
}

}  // namespace

std::vector<IntVec> enumerate_monomials(const GradedRingSpec& ring, long bound) {
    std::set<IntVec> out;
    size_t s = ring.num_generators();
    IntVec c(s, Int(0));
    std::function<void(size_t, long)> rec = [&](size_t i, long left) {
        if (i == s) {
            if (ring.kind == RingKind::Polynomial) {
                out.insert(c);
            } else {
                IntVec u(ring.ambient_rank, Int(0));
                for (size_t t = 0; t < s; ++t)
                    for (size_t j = 0; j < ring.ambient_rank; ++j)
                        u[j] += c[t] * ring.exponent_vectors[t][j];
                out.insert(std::move(u));
            }
            return;
        }
        for (long v = 0; v <= left; ++v) {
            c[i] = v;
            rec(i + 1, left - v);
        }
        c[i] = 0;
    };
    rec(0, bound);
    return {out.begin(), out.end()};
}

std::vector<IntVec> monomials_of_degree(const GradedRingSpec& ring, const IntVec& r) {
    if (r.size() != ring.grading_rank) throw SpecError("degree has wrong length");
    std::set<IntVec> out;
    auto solver = degree_solver(ring);
    solver.enumerate(r, IntVec(ring.num_generators(), Int(0)), [&](const IntVec& c) {
        if (ring.kind == RingKind::Polynomial) {
            out.insert(c);
        } else {
            IntVec u(ring.ambient_rank, Int(0));
            for (size_t i = 0; i < ring.num_generators(); ++i)
                for (size_t j = 0; j < ring.ambient_rank; ++j)
                    u[j] += c[i] * ring.exponent_vectors[i][j];
            out.insert(std::move(u));
        }
        return true;
    });
    return {out.begin(), out.end()};
}

std::set<IntVec> brute_force_ray_ideal(const GradedRingSpec& ring, const RatVec& a, long bound) {
    IntVec ray = primitive_of(a);
    auto monomials = enumerate_monomials(ring, bound);
    std::set<IntVec> result;
    if (is_zero(ray)) {  // J_0 is the unit ideal
        return {monomials.begin(), monomials.end()};
    }
    Int kmax = minor_bound(ring);
    size_t s = ring.num_generators();

    if (ring.kind == RingKind::Polynomial) {
        // x^v lies in J_a iff some monomial g with supp(g) inside supp(v)
        // has degree k*a for some k >= 1: such a g divides x^{mv} for every
        // large m, and conversely a factor of a power can be rescaled onto
        // the ray. Enumerate every factor with k up to the minor bound and
        // keep the support-minimal ones.
        std::vector<IntVec> minimal;
        auto add_minimal = [&](const IntVec& g) {
            for (const auto& m : minimal) {
                bool leq = true;
                for (size_t j = 0; j < m.size(); ++j)
                    if (m[j] > 0 && g[j] == 0) {
                        leq = false;
                        break;
                    }
                if (leq) return;  // an already-known factor has smaller support
            }
            std::erase_if(minimal, [&](const IntVec& m) {
                for (size_t j = 0; j < m.size(); ++j)
                    if (g[j] > 0 && m[j] == 0) return false;
                return true;
            });
            minimal.push_back(g);
        };
        auto solver = degree_solver(ring);
        IntVec zero_lower(s, Int(0));
        for (Int k = 1; k <= kmax; ++k)
            solver.enumerate(scaled(ray, k), zero_lower, [&](const IntVec& c) {
                add_minimal(c);
                return true;
            });
        for (const auto& v : monomials) {
            if (is_zero(v)) continue;
            for (const auto& g : minimal) {
                bool supp_ok = true;
                for (size_t j = 0; j < s; ++j)
                    if (g[j] > 0 && v[j] == 0) {
                        supp_ok = false;
                        break;
                    }
                if (supp_ok) {
                    result.insert(v);
                    break;
                }
            }
        }
        return result;
    }

    // Semigroup kind: collect the factors g in the semigroup with degree
    // k*a (k up to the minor bound), then search m up to the reported
    // bound for a factorization t^{mv} = t^g . t^{mv-g} inside the
    // semigroup; mv - g must itself be a semigroup element.
    std::set<IntVec> factors;
    auto dsolver = degree_solver(ring);
    for (Int k = 1; k <= kmax; ++k) {
        dsolver.enumerate(scaled(ray, k), IntVec(s, Int(0)), [&](const IntVec& c) {
            IntVec u(ring.ambient_rank, Int(0));
            for (size_t i = 0; i < s; ++i)
                for (size_t j = 0; j < ring.ambient_rank; ++j)
                    u[j] += c[i] * ring.exponent_vectors[i][j];
            factors.insert(std::move(u));
            return true;
        });
    }
    if (factors.empty()) return result;
    CombinationSolver esolver = exponent_solver(ring);
    long m_bound = std::max<long>(12, bound);
    IntVec zero_lower(s, Int(0));
    for (const auto& v : monomials) {
        if (is_zero(v)) continue;
        bool in = false;
        for (long m = 1; m <= m_bound && !in; ++m) {
            for (const auto& g : factors) {
                IntVec h(v.size());
                for (size_t j = 0; j < v.size(); ++j) h[j] = Int(m) * v[j] - g[j];
                if (esolver.exists(h, zero_lower)) {
                    in = true;
                    break;
                }
            }
        }
        if (in) result.insert(v);
    }
    return result;
}

namespace {

GradedRingSpec restrict_core(const GradedRingSpec& ring,
                             const std::function<bool(const IntVec&)>& degree_in,
                             long degree_bound, const std::string& what) {
    auto degree_of = [&](const IntVec& u) {
        if (ring.kind == RingKind::Polynomial) {
            IntVec d(ring.grading_rank, Int(0));
            for (size_t i = 0; i < ring.num_generators(); ++i)
                for (size_t j = 0; j < ring.grading_rank; ++j) d[j] += u[i] * ring.degree(i)[j];
            return d;
        }
        return mat_apply(ring.grading_map, u);
    };

    std::optional<CombinationSolver> membership;
    if (ring.kind == RingKind::Semigroup) membership.emplace(exponent_solver(ring));
    auto is_ring_monomial = [&](const IntVec& u) {
        if (ring.kind == RingKind::Polynomial) {
            for (const auto& e : u)
                if (e < 0) return false;
            return true;
        }
        return membership->exists(u, IntVec(ring.num_generators(), Int(0)));
    };

    auto monomials = enumerate_monomials(ring, degree_bound);
    std::vector<IntVec> candidates;
    for (const auto& u : monomials) {
        if (is_zero(u)) continue;
        if (degree_in(degree_of(u))) candidates.push_back(u);
    }
    std::sort(candidates.begin(), candidates.end(), [](const IntVec& a, const IntVec& b) {
        Int sa = 0, sb = 0;
        for (const auto& e : a) sa += e;
        for (const auto& e : b) sb += e;
        if (sa != sb) return sa < sb;
        return lex_less(a, b);
    });

    std::vector<IntVec> kept;
    for (const auto& u : candidates) {
        bool decomposable = false;
        for (const auto& w : kept) {
            IntVec diff(u.size());
            for (size_t j = 0; j < u.size(); ++j) diff[j] = u[j] - w[j];
            if (is_zero(diff)) continue;
            if (!is_ring_monomial(diff)) continue;
            if (degree_in(degree_of(diff))) {
                decomposable = true;
                break;
            }
        }
        if (!decomposable) kept.push_back(u);
    }
    if (kept.empty())
        throw SpecError("restriction is the trivial ring at bound " +
                        std::to_string(degree_bound));

    IntMatrix gmap;
    if (ring.kind == RingKind::Polynomial) {
        gmap = IntMatrix(ring.grading_rank, ring.num_generators());
        for (size_t j = 0; j < ring.num_generators(); ++j)
            for (size_t i = 0; i < ring.grading_rank; ++i) gmap.at(i, j) = ring.degree(j)[i];
    } else {
        gmap = ring.grading_map;
    }
    std::vector<std::string> names;
    for (size_t i = 0; i < kept.size(); ++i) names.push_back("m" + std::to_string(i + 1));
    GradedRingSpec out = make_semigroup_ring(kept, gmap, names);
    out.truncation_bound = degree_bound;
    out.warnings.push_back("restriction to " + what + " truncated at total exponent " +
                           std::to_string(degree_bound));
    return out;
}

}  // namespace

GradedRingSpec restrict_to_cone(const GradedRingSpec& ring, const RationalCone& sigma,
                                long degree_bound) {
    if (sigma.ambient_dim != ring.grading_rank)
        throw SpecError("restrict_to_cone: cone lives in the wrong space");
    return restrict_core(
        ring, [&](const IntVec& d) { return contains(sigma, to_rat(d)); }, degree_bound,
        "a cone");
}

GradedRingSpec restrict_to_subgroup(const GradedRingSpec& ring,
                                    const std::vector<IntVec>& sublattice_basis,
                                    long degree_bound) {
    for (const auto& b : sublattice_basis)
        if (b.size() != ring.grading_rank)
            throw SpecError("restrict_to_subgroup: basis vector has wrong length");
    if (rank_of(sublattice_basis, ring.grading_rank) != ring.grading_rank)
        throw SpecError("restrict_to_subgroup: basis is not full-rank");
    IntMatrix cols(ring.grading_rank, sublattice_basis.size());
    for (size_t j = 0; j < sublattice_basis.size(); ++j)
        for (size_t i = 0; i < ring.grading_rank; ++i) cols.at(i, j) = sublattice_basis[j][i];
    return restrict_core(
        ring, [&](const IntVec& d) { return solve_integer(cols, d).has_value(); }, degree_bound,
        "a sublattice");
}

}  // namespace rayfan::gradedring
