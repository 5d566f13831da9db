#include "rayfan/cone.hpp"

#include <algorithm>
#include <map>
#include <set>

#include "rayfan/snf.hpp"

namespace rayfan::polycore {

namespace {

std::vector<IntVec> clean_vectors(const std::vector<IntVec>& input, size_t dim,
                                  std::vector<std::string>* warnings) {
    std::vector<IntVec> out;
    for (const auto& v : input) {
        if (v.size() != dim) throw std::invalid_argument("cone: vector dimension mismatch");
        if (is_zero(v)) {
            if (warnings) warnings->push_back("zero vector dropped from cone input");
            continue;
        }
        IntVec p = make_primitive(v);
        if (std::find(out.begin(), out.end(), p) == out.end()) out.push_back(std::move(p));
    }
    return out;
}

struct DDResult {
    std::vector<IntVec> rays;
    std::vector<IntVec> lineality;
};

// Incremental double description for { x : <x, b> >= 0 for all b }.
// Maintains extreme rays modulo the current lineality space; adjacency is
// the Fukuda-Prodon combinatorial test over the processed constraints.
DDResult double_description(const std::vector<IntVec>& constraints, size_t dim) {
    DDResult dd;
    for (size_t i = 0; i < dim; ++i) {
        IntVec e(dim, Int(0));
        e[i] = 1;
        dd.lineality.push_back(std::move(e));
    }
    std::vector<IntVec> processed;

    auto zero_set = [&](const IntVec& r) {
        std::vector<size_t> z;
        for (size_t k = 0; k < processed.size(); ++k)
            if (dot(r, processed[k]) == 0) z.push_back(k);
        return z;
    };

    for (const auto& b : constraints) {
        size_t pivot = dd.lineality.size();
        for (size_t i = 0; i < dd.lineality.size(); ++i)
            if (dot(dd.lineality[i], b) != 0) {
                pivot = i;
                break;
            }

        if (pivot < dd.lineality.size()) {
            IntVec l0 = dd.lineality[pivot];
            Int v0 = dot(l0, b);
            if (v0 < 0) {
                for (auto& e : l0) e = -e;
                v0 = -v0;
            }
            std::vector<IntVec> new_lin;
            for (size_t i = 0; i < dd.lineality.size(); ++i) {
                if (i == pivot) continue;
                const IntVec& l = dd.lineality[i];
                Int vl = dot(l, b);
                IntVec adj(dim);
                for (size_t j = 0; j < dim; ++j) adj[j] = v0 * l[j] - vl * l0[j];
                new_lin.push_back(make_primitive(adj));
            }
            for (auto& r : dd.rays) {
                Int vr = dot(r, b);
                if (vr != 0) {
                    IntVec adj(dim);
                    for (size_t j = 0; j < dim; ++j) adj[j] = v0 * r[j] - vr * l0[j];
                    r = make_primitive(adj);
                }
            }
            dd.rays.push_back(make_primitive(l0));
            dd.lineality = std::move(new_lin);
        } else {
            std::vector<size_t> pos, zero, neg;
            for (size_t i = 0; i < dd.rays.size(); ++i) {
                int s = sgn(dot(dd.rays[i], b));
                (s > 0 ? pos : s < 0 ? neg : zero).push_back(i);
            }
            if (!neg.empty()) {
                std::vector<IntVec> next;
                for (size_t i : pos) next.push_back(dd.rays[i]);
                for (size_t i : zero) next.push_back(dd.rays[i]);
                std::vector<std::vector<size_t>> zsets(dd.rays.size());
                for (size_t i = 0; i < dd.rays.size(); ++i) zsets[i] = zero_set(dd.rays[i]);
                for (size_t p : pos)
                    for (size_t n : neg) {
                        std::vector<size_t> common;
                        std::set_intersection(zsets[p].begin(), zsets[p].end(),
                                              zsets[n].begin(), zsets[n].end(),
                                              std::back_inserter(common));
                        bool adjacent = true;
                        for (size_t r = 0; r < dd.rays.size() && adjacent; ++r) {
                            if (r == p || r == n) continue;
                            if (std::includes(zsets[r].begin(), zsets[r].end(), common.begin(),
                                              common.end()))
                                adjacent = false;
                        }
                        if (!adjacent) continue;
                        Int vp = dot(dd.rays[p], b);
                        Int vn = dot(dd.rays[n], b);
                        IntVec w(dim);
                        for (size_t j = 0; j < dim; ++j)
                            w[j] = vp * dd.rays[n][j] - vn * dd.rays[p][j];
                        w = make_primitive(w);
                        if (std::find(next.begin(), next.end(), w) == next.end())
                            next.push_back(std::move(w));
                    }
                dd.rays = std::move(next);
            }
        }
        processed.push_back(b);
    }
    return dd;
}

// Reduce a ray representative modulo the lineality space (orthogonal
// projection over Q, then primitive), so equal cones get equal generators.
IntVec reduce_mod_lineality(const IntVec& ray, const std::vector<IntVec>& lin, size_t dim) {
    if (lin.empty()) return make_primitive(ray);
    size_t k = lin.size();
    // Solve (L L^T) c = L ray, then project: ray - L^T c.
    std::vector<RatVec> aug(k, RatVec(k + 1, Rat(0)));
    for (size_t i = 0; i < k; ++i) {
        for (size_t j = 0; j < k; ++j) aug[i][j] = Rat(dot(lin[i], lin[j]));
        aug[i][k] = Rat(dot(lin[i], ray));
    }
    for (size_t c = 0; c < k; ++c) {
        size_t p = c;
        while (aug[p][c] == 0) ++p;  // Gram matrix of a basis is invertible
        std::swap(aug[c], aug[p]);
        for (size_t i = 0; i < k; ++i) {
            if (i == c || aug[i][c] == 0) continue;
            Rat f = aug[i][c] / aug[c][c];
            for (size_t j = c; j <= k; ++j) aug[i][j] -= f * aug[c][j];
        }
    }
    RatVec proj(dim);
    for (size_t j = 0; j < dim; ++j) proj[j] = Rat(ray[j]);
    for (size_t i = 0; i < k; ++i) {
        Rat c = aug[i][k] / aug[i][i];
        for (size_t j = 0; j < dim; ++j) proj[j] -= c * Rat(lin[i][j]);
    }
    return primitive_of(proj);
}

// Drop rays that are nonnegative combinations of the others (plus the
// lineality space); canonical form wants extreme rays only.
void remove_redundant_rays(std::vector<IntVec>& rays, const std::vector<IntVec>& lin,
                           size_t dim) {
    for (size_t i = 0; i < rays.size();) {
        std::vector<LinearConstraint> cs;
        size_t nvars = rays.size() - 1 + lin.size();
        for (size_t d = 0; d < dim; ++d) {
            RatVec row(nvars, Rat(0));
            size_t v = 0;
            for (size_t j = 0; j < rays.size(); ++j) {
                if (j == i) continue;
                row[v++] = Rat(rays[j][d]);
            }
            for (const auto& l : lin) row[v++] = Rat(l[d]);
            cs.push_back(eq(std::move(row), Rat(rays[i][d])));
        }
        for (size_t j = 0; j + lin.size() < nvars; ++j) {
            RatVec row(nvars, Rat(0));
            row[j] = 1;
            cs.push_back(ge(std::move(row)));
        }
        if (lp_feasible(cs, nvars).feasible)
            rays.erase(rays.begin() + static_cast<long>(i));
        else
            ++i;
    }
}

std::vector<IntVec> canonical_lineality(const std::vector<IntVec>& lin, size_t dim) {
    if (lin.empty()) return {};
    // Hermite form of the saturation: a unique basis of the subspace lattice.
    return hermite_basis(saturated_lattice_basis(lin, dim), dim);
}

std::vector<IntVec> canonical_rays(std::vector<IntVec> rays, const std::vector<IntVec>& lin,
                                   size_t dim) {
    for (auto& r : rays) r = reduce_mod_lineality(r, lin, dim);
    std::sort(rays.begin(), rays.end(), lex_less);
    rays.erase(std::unique(rays.begin(), rays.end()), rays.end());
    remove_redundant_rays(rays, lin, dim);
    return rays;
}

RationalCone assemble(std::vector<IntVec> rays, std::vector<IntVec> lin, size_t dim) {
    RationalCone c;
    c.ambient_dim = dim;
    c.lineality = canonical_lineality(lin, dim);
    c.lineality_dim = c.lineality.size();
    std::vector<IntVec> gens = canonical_rays(std::move(rays), c.lineality, dim);
    for (const auto& l : c.lineality) {
        gens.push_back(l);
        IntVec neg(dim);
        for (size_t j = 0; j < dim; ++j) neg[j] = -l[j];
        gens.push_back(std::move(neg));
    }
    std::sort(gens.begin(), gens.end(), lex_less);
    gens.erase(std::unique(gens.begin(), gens.end()), gens.end());
    c.generators = std::move(gens);

    // Canonical facet normals via the dual cone.
    std::vector<IntVec> dual_constraints = c.generators;
    DDResult dual = double_description(dual_constraints, dim);
    std::vector<IntVec> facets = canonical_rays(dual.rays, canonical_lineality(dual.lineality, dim), dim);
    std::vector<IntVec> span_normals = canonical_lineality(dual.lineality, dim);
    std::vector<IntVec> hs = facets;
    for (const auto& nrm : span_normals) {
        hs.push_back(nrm);
        IntVec neg(dim);
        for (size_t j = 0; j < dim; ++j) neg[j] = -nrm[j];
        hs.push_back(std::move(neg));
    }
    std::sort(hs.begin(), hs.end(), lex_less);
    hs.erase(std::unique(hs.begin(), hs.end()), hs.end());
    c.halfspaces = std::move(hs);
    c.dim = dim - span_normals.size();

    for (const auto& g : c.generators)
        for (const auto& h : c.halfspaces)
            if (dot(g, h) < 0) throw std::logic_error("cone: inconsistent descriptions");
    return c;
}

}  // namespace

std::vector<size_t> RationalCone::facet_indices() const {
    std::vector<size_t> out;
    std::set<IntVec> all(halfspaces.begin(), halfspaces.end());
    for (size_t i = 0; i < halfspaces.size(); ++i) {
        IntVec neg(ambient_dim);
        for (size_t j = 0; j < ambient_dim; ++j) neg[j] = -halfspaces[i][j];
        if (!all.count(neg)) out.push_back(i);
    }
    return out;
}

bool RationalCone::verify_descriptions() const {
    for (const auto& g : generators)
        for (const auto& h : halfspaces)
            if (dot(g, h) < 0) return false;
    // Every point satisfying the halfspaces is generated: it is enough to
    // check the recomputed generator description matches.
    RationalCone rebuilt = cone_from_halfspaces(halfspaces, ambient_dim);
    return rebuilt == *this;
}

RationalCone cone_from_generators(const std::vector<IntVec>& vectors, size_t ambient_dim,
                                  std::vector<std::string>* warnings) {
    auto vs = clean_vectors(vectors, ambient_dim, warnings);
    // Halfspaces are the extreme rays of the dual cone { b : <v,b> >= 0 }.
    DDResult dual = double_description(vs, ambient_dim);
    std::vector<IntVec> span_normals = canonical_lineality(dual.lineality, ambient_dim);
    std::vector<IntVec> hs = canonical_rays(dual.rays, span_normals, ambient_dim);
    for (const auto& nrm : span_normals) {
        hs.push_back(nrm);
        IntVec neg(ambient_dim);
        for (size_t j = 0; j < ambient_dim; ++j) neg[j] = -nrm[j];
        hs.push_back(std::move(neg));
    }
    return cone_from_halfspaces(hs, ambient_dim);
}

RationalCone cone_from_halfspaces(const std::vector<IntVec>& normals, size_t ambient_dim) {
    auto ns = clean_vectors(normals, ambient_dim, nullptr);
    DDResult dd = double_description(ns, ambient_dim);
    return assemble(std::move(dd.rays), std::move(dd.lineality), ambient_dim);
}

RationalCone zero_cone(size_t ambient_dim) { return cone_from_generators({}, ambient_dim); }

RationalCone full_orthant(size_t ambient_dim) {
    std::vector<IntVec> gens;
    for (size_t i = 0; i < ambient_dim; ++i) {
        IntVec e(ambient_dim, Int(0));
        e[i] = 1;
        gens.push_back(std::move(e));
    }
    return cone_from_generators(gens, ambient_dim);
}

bool contains(const RationalCone& cone, const RatVec& point) {
    if (point.size() != cone.ambient_dim)
        throw std::invalid_argument("contains: dimension mismatch");
    for (const auto& h : cone.halfspaces)
        if (dot(point, h) < 0) return false;
    return true;
}

bool contains(const RationalCone& cone, const IntVec& point) {
    return contains(cone, to_rat(point));
}

bool relint_contains(const RationalCone& cone, const RatVec& point) {
    if (point.size() != cone.ambient_dim)
        throw std::invalid_argument("relint_contains: dimension mismatch");
    auto facets = cone.facet_indices();
    std::set<size_t> facet_set(facets.begin(), facets.end());
    for (size_t i = 0; i < cone.halfspaces.size(); ++i) {
        Rat v = dot(point, cone.halfspaces[i]);
        if (facet_set.count(i) ? v <= 0 : v != 0) return false;
    }
    return true;
}

namespace {

Face face_from_generator_set(const RationalCone& cone, std::vector<size_t> gen_idx) {
    Face f;
    f.parent = &cone;
    f.generator_indices = std::move(gen_idx);
    for (size_t i = 0; i < cone.halfspaces.size(); ++i) {
        bool vanishes = true;
        for (size_t g : f.generator_indices)
            if (dot(cone.generators[g], cone.halfspaces[i]) != 0) {
                vanishes = false;
                break;
            }
        if (vanishes) f.active_halfspaces.push_back(i);
    }
    std::vector<IntVec> vecs;
    for (size_t g : f.generator_indices) vecs.push_back(cone.generators[g]);
    f.dim = rank_of(vecs, cone.ambient_dim);
    return f;
}

}  // namespace

Face minimal_face(const RationalCone& cone, const RatVec& point) {
    if (!contains(cone, point)) throw std::invalid_argument("minimal_face: point outside cone");
    std::vector<size_t> active;
    for (size_t i = 0; i < cone.halfspaces.size(); ++i)
        if (dot(point, cone.halfspaces[i]) == 0) active.push_back(i);
    std::vector<size_t> gens;
    for (size_t g = 0; g < cone.generators.size(); ++g) {
        bool on = true;
        for (size_t i : active)
            if (dot(cone.generators[g], cone.halfspaces[i]) != 0) {
                on = false;
                break;
            }
        if (on) gens.push_back(g);
    }
    return face_from_generator_set(cone, std::move(gens));
}

std::vector<Face> face_lattice(const RationalCone& cone) {
    std::map<std::vector<size_t>, Face> found;
    std::vector<size_t> all(cone.generators.size());
    for (size_t i = 0; i < all.size(); ++i) all[i] = i;
    Face top = face_from_generator_set(cone, all);
    std::vector<std::vector<size_t>> queue{top.generator_indices};
    found.emplace(top.generator_indices, std::move(top));
    auto facets = cone.facet_indices();
    while (!queue.empty()) {
        std::vector<size_t> cur = queue.back();
        queue.pop_back();
        for (size_t fi : facets) {
            std::vector<size_t> sub;
            for (size_t g : cur)
                if (dot(cone.generators[g], cone.halfspaces[fi]) == 0) sub.push_back(g);
            if (sub == cur || found.count(sub)) continue;
            Face f = face_from_generator_set(cone, sub);
            queue.push_back(f.generator_indices);
            found.emplace(f.generator_indices, std::move(f));
        }
    }
    std::vector<Face> out;
    for (auto& [k, f] : found) out.push_back(std::move(f));
    std::sort(out.begin(), out.end(), [](const Face& a, const Face& b) {
        if (a.dim != b.dim) return a.dim < b.dim;
        return a.generator_indices < b.generator_indices;
    });
    return out;
}

RationalCone face_cone(const Face& face) {
    std::vector<IntVec> gens;
    for (size_t g : face.generator_indices) gens.push_back(face.parent->generators[g]);
    return cone_from_generators(gens, face.parent->ambient_dim);
}

RationalCone intersect(const RationalCone& a, const RationalCone& b) {
    if (a.ambient_dim != b.ambient_dim)
        throw std::invalid_argument("intersect: dimension mismatch");
    std::vector<IntVec> hs = a.halfspaces;
    hs.insert(hs.end(), b.halfspaces.begin(), b.halfspaces.end());
    return cone_from_halfspaces(hs, a.ambient_dim);
}

bool is_face_of(const RationalCone& candidate, const RationalCone& cone) {
    if (candidate.ambient_dim != cone.ambient_dim)
        throw std::invalid_argument("is_face_of: dimension mismatch");
    for (const auto& g : candidate.generators)
        if (!contains(cone, g)) return false;
    std::vector<size_t> active;
    for (size_t i = 0; i < cone.halfspaces.size(); ++i) {
        bool vanishes = true;
        for (const auto& g : candidate.generators)
            if (dot(g, cone.halfspaces[i]) != 0) {
                vanishes = false;
                break;
            }
        if (vanishes) active.push_back(i);
    }
    std::vector<IntVec> gens;
    for (const auto& g : cone.generators) {
        bool on = true;
        for (size_t i : active)
            if (dot(g, cone.halfspaces[i]) != 0) {
                on = false;
                break;
            }
        if (on) gens.push_back(g);
    }
    return cone_from_generators(gens, cone.ambient_dim) == candidate;
}

RatVec relint_point(const RationalCone& cone) {
    RatVec p(cone.ambient_dim, Rat(0));
    for (const auto& g : cone.generators)
        for (size_t j = 0; j < cone.ambient_dim; ++j) p[j] += Rat(g[j]);
    // The +-lineality generator pairs cancel, leaving the sum of the
    // extreme rays, which hits every facet strictly.
    return p;
}

}  // namespace rayfan::polycore
