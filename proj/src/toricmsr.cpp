#include "rayfan/toricmsr.hpp"

#include <algorithm>
#include <map>

#include "rayfan/lp.hpp"

namespace rayfan::toricmsr {

using namespace polycore;
using gradedring::GradedRingSpec;
using gradedring::RingKind;

ToricVarietySpec make_toric_variety(std::vector<IntVec> rays,
                                    std::vector<std::vector<size_t>> max_cones) {
    ToricVarietySpec X;
    if (rays.empty()) throw SpecError("toric fan needs at least one ray");
    X.lattice_rank = rays[0].size();
    for (auto& v : rays) {
        if (v.size() != X.lattice_rank) throw SpecError("fan rays have mixed dimensions");
        if (is_zero(v)) throw SpecError("zero vector is not a ray");
        if (!(make_primitive(v) == v)) throw SpecError("fan rays must be primitive");
    }
    for (size_t i = 0; i < rays.size(); ++i)
        for (size_t j = i + 1; j < rays.size(); ++j)
            if (rays[i] == rays[j]) throw SpecError("duplicate fan ray");
    X.rays = std::move(rays);
    X.max_cones = std::move(max_cones);

    std::vector<bool> used(X.rays.size(), false);
    for (auto& c : X.max_cones) {
        std::sort(c.begin(), c.end());
        if (c.empty()) throw SpecError("empty maximal cone");
        std::vector<IntVec> gens;
        for (size_t i : c) {
            if (i >= X.rays.size()) throw SpecError("maximal cone uses an unknown ray index");
            used[i] = true;
            gens.push_back(X.rays[i]);
        }
        RationalCone geom = cone_from_generators(gens, X.lattice_rank);
        if (!geom.is_strongly_convex())
            throw SpecError("maximal cone is not strongly convex");
        if (geom.generators.size() != c.size())
            throw SpecError("maximal cone ray list contains non-extreme rays");
        if (geom.dim != X.lattice_rank)
            throw SpecError("maximal cone is not full-dimensional (fan cannot be complete)");
        X.max_cone_geometry.push_back(std::move(geom));
    }
    for (size_t i = 0; i < X.rays.size(); ++i)
        if (!used[i]) throw SpecError("ray " + std::to_string(i) + " lies in no maximal cone");

    // fan axioms: pairwise intersections are faces of both
    for (size_t i = 0; i < X.max_cone_geometry.size(); ++i)
        for (size_t j = i + 1; j < X.max_cone_geometry.size(); ++j) {
            RationalCone common = intersect(X.max_cone_geometry[i], X.max_cone_geometry[j]);
            if (!is_face_of(common, X.max_cone_geometry[i]) ||
                !is_face_of(common, X.max_cone_geometry[j]))
                throw SpecError("fan axiom violated: intersection of maximal cones " +
                                std::to_string(i) + " and " + std::to_string(j) +
                                " is not a common face");
        }

    // completeness: every facet of a maximal cone is shared by exactly two
    std::map<std::vector<IntVec>, int> facet_count;
    for (const auto& geom : X.max_cone_geometry)
        for (const auto& f : face_lattice(geom)) {
            if (f.dim + 1 != X.lattice_rank) continue;
            facet_count[face_cone(f).generators] += 1;
        }
    for (const auto& [gens, count] : facet_count)
        if (count != 2)
            throw SpecError("fan is not complete: a facet lies on " + std::to_string(count) +
                            " maximal cone(s)");
    return X;
}

MultiSectionRingSpec make_multi_section_ring(ToricVarietySpec variety,
                                             std::vector<QDivisor> divisors) {
    MultiSectionRingSpec spec;
    spec.variety = std::move(variety);
    if (divisors.empty()) throw SpecError("need at least one divisor (n >= 1)");
    for (const auto& d : divisors)
        if (d.coefficients.size() != spec.variety.rays.size())
            throw SpecError("divisor needs one coefficient per ray");
    spec.divisors = std::move(divisors);
    for (size_t f = 0; f < spec.variety.rays.size(); ++f) {
        Int q = 1;
        for (const auto& d : spec.divisors)
            mpz_lcm(q.get_mpz_t(), q.get_mpz_t(), d.coefficients[f].get_den().get_mpz_t());
        spec.q_per_ray.push_back(q);  // q_{i,F} = 1 whenever m_{i,F} = 0
    }
    return spec;
}

long graded_piece_dim(const MultiSectionRingSpec& spec, const IntVec& r) {
    if (r.size() != spec.num_divisors()) throw SpecError("degree has wrong length");
    size_t d = spec.variety.lattice_rank;
    // u counts iff <u, v_F> + sum_i r_i m_{i,F} >= 0 for every ray F
    std::vector<LinearConstraint> cs;
    RatVec rhs(spec.num_rays(), Rat(0));
    for (size_t f = 0; f < spec.num_rays(); ++f) {
        Rat shift = 0;
        for (size_t i = 0; i < spec.num_divisors(); ++i)
            shift += Rat(r[i]) * spec.divisors[i].coefficients[f];
        rhs[f] = -shift;
        cs.push_back(ge(to_rat(spec.variety.rays[f]), rhs[f]));
    }
    IntVec lo(d), hi(d);
    for (size_t j = 0; j < d; ++j) {
        RatVec obj(d, Rat(0));
        obj[j] = 1;
        auto up = lp_optimize(cs, obj, d);
        if (up.status == LpStatus::Infeasible) return 0;
        if (up.status == LpStatus::Unbounded)
            throw SpecError("section polytope unbounded; the fan is not complete");
        obj[j] = -1;
        auto down = lp_optimize(cs, obj, d);
        if (down.status != LpStatus::Optimal)
            throw SpecError("section polytope unbounded; the fan is not complete");
        Int f, c;
        mpz_fdiv_q(f.get_mpz_t(), up.value.get_num().get_mpz_t(), up.value.get_den().get_mpz_t());
        Rat low = -down.value;
        mpz_cdiv_q(c.get_mpz_t(), low.get_num().get_mpz_t(), low.get_den().get_mpz_t());
        hi[j] = f;
        lo[j] = c;
    }
    long count = 0;
    IntVec u = lo;
    while (true) {
        bool ok = true;
        for (size_t f = 0; f < spec.num_rays() && ok; ++f)
            if (Rat(dot(u, spec.variety.rays[f])) < rhs[f]) ok = false;
        if (ok) ++count;
        size_t j = 0;
        while (j < d) {
            if (u[j] < hi[j]) {
                ++u[j];
                break;
            }
            u[j] = lo[j];
            ++j;
        }
        if (j == d) break;
    }
    return count;
}

AmpleCertificate find_ample_combination(const MultiSectionRingSpec& spec, long box) {
    size_t n = spec.num_divisors();
    size_t d = spec.variety.lattice_rank;
    AmpleCertificate cert;

    std::vector<IntVec> candidates;
    IntVec c(n, Int(0));
    std::function<void(size_t)> gen = [&](size_t i) {
        if (i == n) {
            if (!is_zero(c)) candidates.push_back(c);
            return;
        }
        for (long v = -box; v <= box; ++v) {
            c[i] = v;
            gen(i + 1);
        }
        c[i] = 0;
    };
    gen(0);
    std::sort(candidates.begin(), candidates.end(), [](const IntVec& a, const IntVec& b) {
        Int na = 0, nb = 0;
        for (const auto& e : a) {
            Int t;
            mpz_abs(t.get_mpz_t(), e.get_mpz_t());
            if (t > na) na = t;
        }
        for (const auto& e : b) {
            Int t;
            mpz_abs(t.get_mpz_t(), e.get_mpz_t());
            if (t > nb) nb = t;
        }
        if (na != nb) return na < nb;  // smallest box shell first
        return lex_less(a, b);
    });

    for (const auto& cand : candidates) {
        RatVec coeff(spec.num_rays(), Rat(0));
        bool integral = true;
        for (size_t f = 0; f < spec.num_rays() && integral; ++f) {
            for (size_t i = 0; i < n; ++i)
                coeff[f] += Rat(cand[i]) * spec.divisors[i].coefficients[f];
            if (coeff[f].get_den() != 1) integral = false;
        }
        if (!integral) continue;
        std::vector<IntVec> data;
        bool cartier = true;
        for (size_t s = 0; s < spec.variety.max_cones.size() && cartier; ++s) {
            const auto& cone_rays = spec.variety.max_cones[s];
            IntMatrix m(cone_rays.size(), d);
            IntVec b(cone_rays.size());
            for (size_t t = 0; t < cone_rays.size(); ++t) {
                for (size_t j = 0; j < d; ++j) m.at(t, j) = spec.variety.rays[cone_rays[t]][j];
                b[t] = -coeff[cone_rays[t]].get_num();
            }
            auto sol = solve_integer(m, b);
            if (!sol) {
                cartier = false;
                break;
            }
            data.push_back(*sol);
        }
        if (!cartier) continue;
        bool ample = true;
        for (size_t s = 0; s < spec.variety.max_cones.size() && ample; ++s) {
            for (size_t f = 0; f < spec.num_rays() && ample; ++f) {
                if (std::find(spec.variety.max_cones[s].begin(), spec.variety.max_cones[s].end(),
                              f) != spec.variety.max_cones[s].end())
                    continue;
                if (Rat(dot(data[s], spec.variety.rays[f])) <= -coeff[f]) ample = false;
            }
        }
        if (!ample) continue;
        cert.found = true;
        cert.combination = cand;
        cert.cartier_data = std::move(data);
        return cert;
    }
    return cert;
}

HeightOneReport height_one_prime_data(const MultiSectionRingSpec& spec) {
    HeightOneReport rep;
    rep.ample = find_ample_combination(spec);
    rep.conditional = !rep.ample.found;
    for (size_t f = 0; f < spec.num_rays(); ++f) {
        HeightOnePrimeData p;
        p.ray_index = f;
        p.q = spec.q_per_ray[f];
        for (size_t i = 0; i < spec.num_divisors(); ++i) {
            Rat v = Rat(p.q) * spec.divisors[i].coefficients[f];
            if (v.get_den() != 1)
                throw std::logic_error("q_F * m_{i,F} not an integer");
            p.valuations.push_back(v.get_num());
        }
        rep.primes.push_back(std::move(p));
    }
    return rep;
}

ClassGroupData class_group(const MultiSectionRingSpec& spec) {
    ClassGroupData data;
    data.ample = find_ample_combination(spec);
    data.conditional = !data.ample.found;

    size_t nrays = spec.num_rays();
    size_t d = spec.variety.lattice_rank;
    size_t n = spec.num_divisors();
    for (size_t f = 0; f < nrays; ++f)
        for (size_t i = 0; i < n; ++i)
            if (spec.divisors[i].coefficients[f] != 0) {
                data.support_rays.push_back(f);
                break;
            }
    size_t ell = data.support_rays.size();

    // Cl(X): rays modulo the characters
    std::vector<IntVec> char_rows;
    for (size_t j = 0; j < d; ++j) {
        IntVec row(nrays);
        for (size_t f = 0; f < nrays; ++f) row[f] = spec.variety.rays[f][j];
        char_rows.push_back(std::move(row));
    }
    data.cl_x = quotient_by_rowspan(char_rows, nrays);

    // Cl(R): P_F for the fan rays modulo q-weighted characters and the
    // divisors of the t_i, all integral by the choice of q_F.
    std::vector<IntVec> r_rows;
    for (size_t j = 0; j < d; ++j) {
        IntVec row(nrays);
        for (size_t f = 0; f < nrays; ++f) row[f] = spec.q_per_ray[f] * spec.variety.rays[f][j];
        r_rows.push_back(std::move(row));
    }
    for (size_t i = 0; i < n; ++i) {
        IntVec row(nrays);
        for (size_t f = 0; f < nrays; ++f) {
            Rat v = Rat(spec.q_per_ray[f]) * spec.divisors[i].coefficients[f];
            row[f] = v.get_num();  // denominator is 1
        }
        r_rows.push_back(std::move(row));
    }
    data.cl_r = quotient_by_rowspan(r_rows, nrays);

    // M / (L + Z^l) in coordinates scaled by q_{F_j}: M becomes Z^l,
    // Z^l becomes the rows q_j e_j, and L the q-scaled coefficient rows.
    std::vector<IntVec> ml_rows;
    for (size_t j = 0; j < ell; ++j) {
        IntVec row(ell, Int(0));
        row[j] = spec.q_per_ray[data.support_rays[j]];
        ml_rows.push_back(std::move(row));
    }
    for (size_t i = 0; i < n; ++i) {
        IntVec row(ell);
        for (size_t j = 0; j < ell; ++j) {
            size_t f = data.support_rays[j];
            Rat v = Rat(spec.q_per_ray[f]) * spec.divisors[i].coefficients[f];
            row[j] = v.get_num();
        }
        ml_rows.push_back(std::move(row));
    }
    data.m_mod_l_plus_z = ell == 0 ? AbelianGroup{} : quotient_by_rowspan(ml_rows, ell);
    data.m_equals_l_plus_z = data.m_mod_l_plus_z.trivial();

    // Integer combinations sum b_i D_i (those with integral coefficient
    // rows) and whether their classes generate Cl(X).
    std::vector<IntVec> b_lattice;
    if (ell == 0) {
        for (size_t i = 0; i < n; ++i) {
            IntVec e(n, Int(0));
            e[i] = 1;
            b_lattice.push_back(std::move(e));
        }
    } else {
        // kernel of (b, t) -> sum_i b_i (q_j m_ij) + t_j q_j, projected to b
        IntMatrix m(ell, n + ell);
        for (size_t j = 0; j < ell; ++j) {
            size_t f = data.support_rays[j];
            for (size_t i = 0; i < n; ++i) {
                Rat v = Rat(spec.q_per_ray[f]) * spec.divisors[i].coefficients[f];
                m.at(j, i) = v.get_num();
            }
            m.at(j, n + j) = spec.q_per_ray[f];
        }
        for (const auto& k : kernel_basis(m))
            b_lattice.push_back(IntVec(k.begin(), k.begin() + static_cast<long>(n)));
    }
    std::vector<IntVec> gen_rows = char_rows;
    for (const auto& b : b_lattice) {
        IntVec row(nrays, Int(0));
        for (size_t f = 0; f < nrays; ++f) {
            Rat v = 0;
            for (size_t i = 0; i < n; ++i) v += Rat(b[i]) * spec.divisors[i].coefficients[f];
            if (v.get_den() != 1) throw std::logic_error("b-lattice row not integral");
            row[f] = v.get_num();
        }
        gen_rows.push_back(std::move(row));
    }
    data.image_generates_cl_x = quotient_by_rowspan(gen_rows, nrays).trivial();
    return data;
}

FactorialityResult is_factorial(const MultiSectionRingSpec& spec) {
    FactorialityResult res;
    res.data = class_group(spec);
    res.factorial = res.data.m_equals_l_plus_z && res.data.image_generates_cl_x;
    return res;
}

namespace {

// Key used to canonicalize lifts: fewest negative entries, then smallest
// total size, then lexicographic.
std::tuple<size_t, Int, IntVec> lift_key(const IntVec& w) {
    size_t negs = 0;
    Int l1 = 0;
    for (const auto& e : w) {
        if (e < 0) ++negs;
        Int t;
        mpz_abs(t.get_mpz_t(), e.get_mpz_t());
        l1 += t;
    }
    return {negs, l1, w};
}

IntVec canonical_lift(IntVec w, const std::vector<IntVec>& kernel) {
    bool improved = true;
    while (improved) {
        improved = false;
        for (const auto& k : kernel) {
            for (int s : {+1, -1}) {
                IntVec cand(w.size());
                for (size_t j = 0; j < w.size(); ++j) cand[j] = w[j] + s * k[j];
                if (lift_key(cand) < lift_key(w)) {
                    w = std::move(cand);
                    improved = true;
                }
            }
        }
    }
    return w;
}

}  // namespace

RoundtripReport demazure_roundtrip(const GradedRingSpec& ring, const RationalCone& sigma,
                                   long grid_bound) {
    if (ring.kind != RingKind::Polynomial)
        throw SpecError("demazure_roundtrip expects a polynomial ring presentation");
    size_t n = ring.grading_rank;
    size_t s = ring.num_generators();
    if (sigma.ambient_dim != n) throw SpecError("chamber lives in the wrong space");
    if (rank_of(ring.generator_degrees, n) != n)
        throw SpecError("degrees do not span Z^n (restrict the grading first)");
    if (sigma.dim != n) throw SpecError("sigma is not a full-dimensional chamber");

    // chamber check: the ray ideal must be constant on the interior
    RatVec base = relint_point(sigma);
    gradedring::RayIdeal j_sigma = gradedring::ray_ideal(ring, base);
    if (j_sigma.is_zero) throw SpecError("sigma is not contained in the weight cone");
    for (long t = 2; t <= 3; ++t) {
        RatVec p = base;
        for (size_t i = 0; i < n; ++i) p[i] += rat(1, t) * Rat(sigma.generators[0][i]);
        if (!(gradedring::ray_ideal(ring, p) == j_sigma))
            throw SpecError("sigma is not a ray ideal cone (ideal varies on its interior)");
    }

    if (s == n)
        throw SpecError(
            "the quotient would be a point (dim X = 0, every Q-divisor is 0); "
            "nothing to reconstruct");
    // height surrogate: every minimal prime of J_sigma needs >= 2 variables
    for (const auto& p : j_sigma.minimal_primes)
        if (p.size() < 2)
            throw SpecError(
                "the ray ideal of sigma has a height-one minimal prime; only the "
                "cone-restriction form of the construction applies to this input");

    IntMatrix deg_map(n, s);
    for (size_t j = 0; j < s; ++j)
        for (size_t i = 0; i < n; ++i) deg_map.at(i, j) = ring.degree(j)[i];
    std::vector<IntVec> kernel = hermite_basis(kernel_basis(deg_map), s);
    size_t d = kernel.size();  // = s - n

    // Gale-dual images of the variables
    std::vector<IntVec> images(s, IntVec(d));
    for (size_t j = 0; j < s; ++j)
        for (size_t t = 0; t < d; ++t) images[j][t] = kernel[t][j];
    RoundtripReport rep;
    std::vector<IntVec> prim_rays(s);
    for (size_t j = 0; j < s; ++j) {
        if (is_zero(images[j]))
            throw SpecError("a variable vanishes on the quotient lattice; the unstable locus "
                            "has codimension one");
        prim_rays[j] = make_primitive(images[j]);
        Int mult = 0;
        for (size_t t = 0; t < d; ++t)
            if (prim_rays[j][t] != 0) {
                mult = images[j][t] / prim_rays[j][t];
                break;
            }
        rep.ray_multipliers.push_back(mult);
    }
    std::vector<IntVec> fan_rays;
    std::vector<size_t> ray_of_var(s);
    for (size_t j = 0; j < s; ++j) {
        auto it = std::find(fan_rays.begin(), fan_rays.end(), prim_rays[j]);
        if (it != fan_rays.end())
            throw SpecError("two variables land on the same quotient ray; the unstable locus "
                            "has codimension one");
        ray_of_var[j] = fan_rays.size();
        fan_rays.push_back(prim_rays[j]);
    }

    // quotient fan: subsets S with sigma inside cone(degrees outside S)
    auto sigma_in_complement = [&](size_t mask) {
        std::vector<size_t> complement;
        for (size_t j = 0; j < s; ++j)
            if (!(mask & (size_t(1) << j))) complement.push_back(j);
        for (const auto& g : sigma.generators) {
            std::vector<LinearConstraint> cs;
            size_t k = complement.size();
            if (k == 0) return is_zero(g);
            for (size_t row = 0; row < n; ++row) {
                RatVec coeffs(k);
                for (size_t t = 0; t < k; ++t) coeffs[t] = Rat(ring.degree(complement[t])[row]);
                cs.push_back(eq(std::move(coeffs), Rat(g[row])));
            }
            for (size_t t = 0; t < k; ++t) {
                RatVec row(k, Rat(0));
                row[t] = 1;
                cs.push_back(ge(std::move(row)));
            }
            if (!lp_feasible(cs, k).feasible) return false;
        }
        return true;
    };
    std::vector<size_t> good_masks;
    for (size_t mask = 0; mask < (size_t(1) << s); ++mask)
        if (sigma_in_complement(mask)) good_masks.push_back(mask);
    std::vector<std::vector<size_t>> max_cones;
    for (size_t m1 : good_masks) {
        bool maximal = true;
        for (size_t m2 : good_masks)
            if (m1 != m2 && (m1 & m2) == m1) {
                maximal = false;
                break;
            }
        if (!maximal) continue;
        std::vector<size_t> cone_rays;
        for (size_t j = 0; j < s; ++j)
            if (m1 & (size_t(1) << j)) cone_rays.push_back(ray_of_var[j]);
        std::sort(cone_rays.begin(), cone_rays.end());
        if (std::find(max_cones.begin(), max_cones.end(), cone_rays) == max_cones.end())
            max_cones.push_back(std::move(cone_rays));
    }
    ToricVarietySpec X = make_toric_variety(fan_rays, max_cones);

    // canonical lifts of the unit degrees and the divisor coefficients
    std::vector<QDivisor> divisors;
    for (size_t i = 0; i < n; ++i) {
        IntVec e(n, Int(0));
        e[i] = 1;
        auto w = solve_integer(deg_map, e);
        if (!w)
            throw SpecError("unit degree e_" + std::to_string(i + 1) +
                            " is not in the degree lattice; no multi-section presentation "
                            "with this grading");
        IntVec lift = canonical_lift(*w, kernel);
        QDivisor div;
        div.coefficients.assign(fan_rays.size(), Rat(0));
        for (size_t j = 0; j < s; ++j)
            div.coefficients[ray_of_var[j]] = rat(lift[j], rep.ray_multipliers[j]);
        divisors.push_back(std::move(div));
        rep.lifts.push_back(std::move(lift));
    }
    rep.msr = make_multi_section_ring(std::move(X), std::move(divisors));

    // the grid check is the ground truth for the construction
    rep.grid_bound = grid_bound;
    rep.dims_match = true;
    IntVec r(n, Int(-grid_bound));
    while (true) {
        long lhs = static_cast<long>(gradedring::monomials_of_degree(ring, r).size());
        long rhs = graded_piece_dim(rep.msr, r);
        ++rep.grid_points;
        if (lhs != rhs) {
            rep.dims_match = false;
            rep.mismatches.push_back(r);
        }
        size_t j = 0;
        while (j < n) {
            if (r[j] < grid_bound) {
                ++r[j];
                break;
            }
            r[j] = -grid_bound;
            ++j;
        }
        if (j == n) break;
    }
    return rep;
}

}  // namespace rayfan::toricmsr
