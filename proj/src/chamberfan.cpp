#include "rayfan/chamberfan.hpp"

#include <algorithm>
#include <map>
#include <random>

#include "rayfan/snf.hpp"

namespace rayfan::chamberfan {

using namespace polycore;
using gradedring::ray_ideal;
using gradedring::IdealOrder;
using gradedring::ray_ideal_compare;

namespace {

std::vector<IntVec> identity_basis(size_t n) {
    std::vector<IntVec> b;
    for (size_t i = 0; i < n; ++i) {
        IntVec e(n, Int(0));
        e[i] = 1;
        b.push_back(std::move(e));
    }
    return b;
}

RatVec to_original(const Arrangement& arr, const RatVec& coords) {
    size_t n = arr.basis.empty() ? arr.ambient_rank : arr.basis[0].size();
    RatVec out(n, Rat(0));
    for (size_t i = 0; i < arr.basis.size(); ++i)
        for (size_t j = 0; j < n; ++j) out[j] += coords[i] * Rat(arr.basis[i][j]);
    return out;
}

IntVec to_original(const Arrangement& arr, const IntVec& coords) {
    size_t n = arr.basis.empty() ? arr.ambient_rank : arr.basis[0].size();
    IntVec out(n, Int(0));
    for (size_t i = 0; i < arr.basis.size(); ++i)
        for (size_t j = 0; j < n; ++j) out[j] += coords[i] * arr.basis[i][j];
    return out;
}

RationalCone cone_to_original(const Arrangement& arr, const RationalCone& c) {
    std::vector<IntVec> gens;
    for (const auto& g : c.generators) gens.push_back(to_original(arr, g));
    size_t n = arr.basis.empty() ? arr.ambient_rank : arr.basis[0].size();
    return cone_from_generators(gens, n);
}

}  // namespace

Arrangement build_arrangement(const GradedRingSpec& ring) {
    size_t n = ring.grading_rank;
    size_t s = ring.num_generators();
    if (s > 16) throw SpecError("too many generators for arrangement enumeration (max 16)");

    Arrangement arr;
    size_t k = rank_of(ring.generator_degrees, n);
    if (k == n) {
        arr.basis = identity_basis(n);
    } else {
        arr.basis = saturated_lattice_basis(ring.generator_degrees, n);
    }
    arr.ambient_rank = k;
    for (const auto& d : ring.generator_degrees) {
        auto coords = coordinates_in_span(arr.basis, d, n);
        if (!coords) throw std::logic_error("degree outside its own span");
        IntVec c(k);
        for (size_t i = 0; i < k; ++i) {
            if (coords->at(i).get_den() != 1)
                throw std::logic_error("saturated basis gave fractional coordinates");
            c[i] = coords->at(i).get_num();
        }
        arr.degree_coords.push_back(std::move(c));
    }

    if (k < 2) return arr;  // no (k-1)-dimensional spans from nonzero vectors

    std::map<IntVec, std::vector<size_t>> seen;
    for (size_t mask = 1; mask < (size_t(1) << s); ++mask) {
        std::vector<size_t> subset;
        std::vector<IntVec> vecs;
        for (size_t i = 0; i < s; ++i)
            if (mask & (size_t(1) << i)) {
                subset.push_back(i);
                vecs.push_back(arr.degree_coords[i]);
            }
        if (rank_of(vecs, k) != k - 1) continue;
        auto kern = kernel_basis(IntMatrix::from_rows(vecs, k));
        if (kern.size() != 1) throw std::logic_error("hyperplane normal not unique");
        IntVec normal = make_primitive(kern[0]);
        for (const auto& e : normal) {
            if (e > 0) break;
            if (e < 0) {
                for (auto& x : normal) x = -x;
                break;
            }
        }
        if (!seen.count(normal)) seen.emplace(normal, subset);
    }
    for (auto& [normal, subset] : seen) {
        arr.hyperplane_normals.push_back(normal);
        arr.source_subsets.push_back(subset);
    }
    return arr;
}

namespace {

struct CellData {
    std::vector<int> signs;
    RatVec witness;  // interior point in arrangement coordinates
};

// Open sign cells meeting C(A), found by refining one hyperplane at a
// time; only feasible prefixes survive, so the work tracks the number of
// real cells instead of 2^l.
std::vector<CellData> enumerate_cells(const Arrangement& arr, const RationalCone& weight_coords) {
    std::vector<CellData> cells{{{}, {}}};
    for (size_t h = 0; h < arr.hyperplane_normals.size(); ++h) {
        std::vector<CellData> next;
        for (const auto& cell : cells) {
            for (int sign : {+1, -1}) {
                std::vector<LinearConstraint> cs;
                for (size_t j = 0; j < h; ++j) {
                    RatVec normal = to_rat(arr.hyperplane_normals[j]);
                    if (cell.signs[j] < 0)
                        for (auto& e : normal) e = -e;
                    cs.push_back(gt(std::move(normal)));
                }
                RatVec normal = to_rat(arr.hyperplane_normals[h]);
                if (sign < 0)
                    for (auto& e : normal) e = -e;
                cs.push_back(gt(std::move(normal)));
                for (const auto& hs : weight_coords.halfspaces) cs.push_back(ge(to_rat(hs)));
                auto fe = lp_feasible(cs, arr.ambient_rank);
                if (!fe.feasible) continue;
                CellData c;
                c.signs = cell.signs;
                c.signs.push_back(sign);
                c.witness = std::move(fe.witness);
                next.push_back(std::move(c));
            }
        }
        cells = std::move(next);
    }
    if (arr.hyperplane_normals.empty()) cells[0].witness = relint_point(weight_coords);
    return cells;
}

}  // namespace

std::vector<Chamber> chamber_decomposition(const GradedRingSpec& ring) {
    Arrangement arr = build_arrangement(ring);
    RationalCone weight_coords = cone_from_generators(arr.degree_coords, arr.ambient_rank);
    std::vector<Chamber> out;
    for (const auto& cell : enumerate_cells(arr, weight_coords)) {
        std::vector<IntVec> halfspaces;
        for (size_t j = 0; j < cell.signs.size(); ++j) {
            IntVec normal = arr.hyperplane_normals[j];
            if (cell.signs[j] < 0)
                for (auto& e : normal) e = -e;
            halfspaces.push_back(std::move(normal));
        }
        RationalCone closed = cone_from_halfspaces(halfspaces, arr.ambient_rank);
        closed = intersect(closed, weight_coords);

        Chamber ch;
        ch.sign_vector = cell.signs;
        ch.interior_point = to_original(arr, cell.witness);
        ch.cone = cone_to_original(arr, closed);
        ch.ideal = ray_ideal(ring, ch.interior_point);
        out.push_back(std::move(ch));
    }
    return out;
}

RationalCone maximal_ray_ideal_cone(const GradedRingSpec& ring, const RatVec& a) {
    RayIdeal j = ray_ideal(ring, a);
    if (j.is_zero)
        throw SpecError("maximal_ray_ideal_cone: the ray ideal is zero (point outside C(A))");
    RationalCone sigma = weight_cone(ring);
    for (const auto& face : j.minimal_member_faces) {
        std::vector<IntVec> degs;
        for (size_t i : face) degs.push_back(ring.degree(i));
        sigma = intersect(sigma, cone_from_generators(degs, ring.grading_rank));
    }
    return sigma;
}

namespace {

std::string face_key(const RayIdeal& j) {
    std::string key;
    for (const auto& f : j.member_faces) {
        for (size_t i : f) key += std::to_string(i) + ",";
        key += ";";
    }
    return key;
}

RationalCone orbit_cone_intersection(const GradedRingSpec& ring, const RayIdeal& j) {
    RationalCone sigma = weight_cone(ring);
    for (const auto& face : j.minimal_member_faces) {
        std::vector<IntVec> degs;
        for (size_t i : face) degs.push_back(ring.degree(i));
        sigma = intersect(sigma, cone_from_generators(degs, ring.grading_rank));
    }
    return sigma;
}

}  // namespace

ChamberFan assemble_fan(const GradedRingSpec& ring, unsigned sample_seed,
                        size_t coverage_samples) {
    ChamberFan fan;
    fan.cells = chamber_decomposition(ring);
    fan.report.pre_merge_cell_count = fan.cells.size();

    std::map<std::string, size_t> index_of;  // ideal key -> entry index
    auto add_entry = [&](const RayIdeal& j, const RationalCone& sigma) -> size_t {
        std::string key = face_key(j);
        auto it = index_of.find(key);
        if (it != index_of.end()) {
            if (!(fan.maximal_cones[it->second].cone == sigma))
                fan.report.notes.push_back("ideal met with two different maximal cones");
            return it->second;
        }
        fan.maximal_cones.push_back({sigma, j});
        index_of.emplace(key, fan.maximal_cones.size() - 1);
        return fan.maximal_cones.size() - 1;
    };

    for (const auto& cell : fan.cells)
        add_entry(cell.ideal, orbit_cone_intersection(ring, cell.ideal));

    // Saturate with faces: every face of a listed cone carries a ray ideal
    // whose maximal cone should be that face.
    bool face_closure_ok = true;
    for (size_t idx = 0; idx < fan.maximal_cones.size(); ++idx) {
        RationalCone sigma = fan.maximal_cones[idx].cone;  // copy: list may grow
        for (const auto& face : face_lattice(sigma)) {
            RationalCone fc = face_cone(face);
            RayIdeal j = ray_ideal(ring, relint_point(fc));
            RationalCone expected = orbit_cone_intersection(ring, j);
            if (!(expected == fc)) {
                face_closure_ok = false;
                fan.report.notes.push_back(
                    "face of a listed cone is not the maximal cone of its own ideal");
            }
            add_entry(j, expected);
        }
    }

    size_t m = fan.maximal_cones.size();

    // unique maximality: recomputed relint ideal matches, cones distinct
    bool unique_ok = true;
    for (size_t i = 0; i < m; ++i) {
        RayIdeal at_relint = ray_ideal(ring, relint_point(fan.maximal_cones[i].cone));
        if (!(at_relint == fan.maximal_cones[i].ideal)) unique_ok = false;
        for (size_t j2 = i + 1; j2 < m; ++j2)
            if (fan.maximal_cones[i].cone == fan.maximal_cones[j2].cone) unique_ok = false;
    }

    // face sets per entry, for cheap is-face-of queries
    std::vector<std::vector<RationalCone>> faces_of(m);
    for (size_t i = 0; i < m; ++i)
        for (const auto& f : face_lattice(fan.maximal_cones[i].cone))
            faces_of[i].push_back(face_cone(f));
    auto is_listed = [&](const RationalCone& c) {
        for (const auto& e : fan.maximal_cones)
            if (e.cone == c) return true;
        return false;
    };
    auto is_face_of_entry = [&](const RationalCone& c, size_t j2) {
        for (const auto& f : faces_of[j2])
            if (f == c) return true;
        return false;
    };

    for (size_t i = 0; i < m && face_closure_ok; ++i)
        for (const auto& f : faces_of[i])
            if (!is_listed(f)) face_closure_ok = false;

    // order reversal (strict containment of ideals vs proper faces)
    bool order_ok = true;
    std::vector<std::pair<size_t, size_t>> relation;  // (i,j): cone i proper face of cone j
    for (size_t i = 0; i < m; ++i)
        for (size_t j2 = 0; j2 < m; ++j2) {
            if (i == j2) continue;
            bool contains_strictly =
                ray_ideal_compare(fan.maximal_cones[i].ideal, fan.maximal_cones[j2].ideal) ==
                IdealOrder::GreaterThan;
            bool proper_face = !(fan.maximal_cones[i].cone == fan.maximal_cones[j2].cone) &&
                               is_face_of_entry(fan.maximal_cones[i].cone, j2);
            if (contains_strictly != proper_face) order_ok = false;
            if (proper_face) relation.emplace_back(i, j2);
        }

    // Hasse edges: covers of the face relation
    for (const auto& [i, j2] : relation) {
        bool cover = true;
        for (const auto& [a, b] : relation)
            if (a == i && b != j2) {
                for (const auto& [c, d] : relation)
                    if (c == b && d == j2) {
                        cover = false;
                        break;
                    }
                if (!cover) break;
            }
        if (cover) fan.hasse.emplace_back(i, j2);
    }

    // fan axioms: strong convexity and pairwise intersections common faces
    bool fan_ok = true;
    for (size_t i = 0; i < m && fan_ok; ++i)
        if (!fan.maximal_cones[i].cone.is_strongly_convex()) fan_ok = false;
    for (size_t i = 0; i < m && fan_ok; ++i)
        for (size_t j2 = i + 1; j2 < m && fan_ok; ++j2) {
            RationalCone inter = intersect(fan.maximal_cones[i].cone, fan.maximal_cones[j2].cone);
            if (!is_face_of_entry(inter, i) || !is_face_of_entry(inter, j2) || !is_listed(inter))
                fan_ok = false;
        }

    // constancy per cell: three interior samples give the same ideal
    bool constancy_ok = true;
    for (const auto& cell : fan.cells) {
        RatVec base = relint_point(cell.cone);
        IntVec dir = cell.cone.generators.empty() ? IntVec(ring.grading_rank, Int(0))
                                                  : cell.cone.generators.front();
        for (long t = 2; t <= 4; ++t) {
            RatVec p = base;
            for (size_t j2 = 0; j2 < p.size(); ++j2) p[j2] += rat(1, t) * Rat(dir[j2]);
            if (!relint_contains(cell.cone, p)) {
                constancy_ok = false;
                continue;
            }
            if (!(ray_ideal(ring, p) == cell.ideal)) constancy_ok = false;
        }
        if (!(ray_ideal(ring, cell.interior_point) == cell.ideal)) constancy_ok = false;
    }

    // coverage of C(A) by the full-dimensional chambers
    RationalCone weight = weight_cone(ring);
    size_t full_dim = weight.dim;
    auto covered = [&](const RatVec& p) {
        for (const auto& cell : fan.cells)
            if (contains(cell.cone, p)) return true;
        return false;
    };
    bool coverage_ok = true;
    for (const auto& d : ring.generator_degrees)
        if (!covered(to_rat(d))) coverage_ok = false;
    for (const auto& cell : fan.cells)
        for (const auto& face : face_lattice(cell.cone)) {
            if (face.dim + 1 != cell.cone.dim) continue;
            if (!covered(relint_point(face_cone(face)))) coverage_ok = false;
        }
    std::mt19937_64 rng(sample_seed);
    for (size_t t = 0; t < coverage_samples && coverage_ok; ++t) {
        RatVec p(ring.grading_rank, Rat(0));
        for (const auto& d : ring.generator_degrees) {
            long c = static_cast<long>(rng() % 7);
            for (size_t j2 = 0; j2 < p.size(); ++j2) p[j2] += Rat(c) * Rat(d[j2]);
        }
        if (!covered(p)) coverage_ok = false;
    }

    // cross validation: the sign-cell chambers and the full-dimensional
    // maximal cones describe the same decomposition
    bool cross_ok = true;
    size_t full_entries = 0;
    for (size_t i = 0; i < m; ++i)
        if (fan.maximal_cones[i].cone.dim == full_dim) ++full_entries;
    for (const auto& cell : fan.cells) {
        auto it = index_of.find(face_key(cell.ideal));
        if (it == index_of.end()) {
            cross_ok = false;
            continue;
        }
        const RationalCone& sigma = fan.maximal_cones[it->second].cone;
        for (const auto& g : cell.cone.generators)
            if (!contains(sigma, g)) cross_ok = false;
        if (fan.cells.size() == full_entries && !(sigma == cell.cone)) cross_ok = false;
    }
    if (full_entries > fan.cells.size()) cross_ok = false;
    if (fan.cells.size() != full_entries)
        fan.report.notes.push_back(std::to_string(fan.cells.size()) + " cells merged into " +
                                   std::to_string(full_entries) + " chambers by ideal equality");

    fan.report.unique_maximality = unique_ok;
    fan.report.face_closure = face_closure_ok;
    fan.report.order_reversal = order_ok;
    fan.report.fan_axioms = fan_ok;
    fan.report.coverage = coverage_ok;
    fan.report.constancy = constancy_ok;
    fan.report.cross_validation = cross_ok;
    return fan;
}

MorphismPoset morphism_poset(const GradedRingSpec& ring) {
    MorphismPoset poset;
    poset.fan = assemble_fan(ring);
    size_t m = poset.fan.maximal_cones.size();
    for (size_t i = 0; i < m; ++i)
        for (size_t j = 0; j < m; ++j) {
            if (i == j) continue;
            // J_j strictly contains J_i: morphism X_{sigma_i} -> X_{sigma_j}
            if (ray_ideal_compare(poset.fan.maximal_cones[j].ideal,
                                  poset.fan.maximal_cones[i].ideal) == IdealOrder::GreaterThan)
                poset.edges.emplace_back(i, j);
        }
    return poset;
}

Theorem4Report theorem4_check(const GradedRingSpec& ring) {
    if (!(weight_cone(ring) == full_orthant(ring.grading_rank)))
        throw SpecError("theorem4_check requires C(A) to be the full positive orthant");
    Theorem4Report rep;
    auto chambers = chamber_decomposition(ring);
    rep.one_chamber = true;
    for (size_t i = 1; i < chambers.size(); ++i) {
        if (!(chambers[i].ideal == chambers[0].ideal)) {
            rep.one_chamber = false;
            rep.witness = {chambers[0].interior_point, chambers[i].interior_point};
            break;
        }
    }
    rep.faces_are_ray_ideal_cones = rep.one_chamber;
    rep.finite_over_axis_subring = rep.one_chamber;
    return rep;
}

}  // namespace rayfan::chamberfan
