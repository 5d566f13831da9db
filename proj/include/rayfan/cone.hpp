#pragma once

#include <vector>

#include "rayfan/lp.hpp"

namespace rayfan::polycore {

// A rational polyhedral cone with both descriptions kept in a canonical
// form, so that set equality is structural equality:
//   - generators: primitive extreme rays plus +-(lineality basis), sorted
//     lexicographically, extreme rays reduced modulo the lineality space;
//   - halfspaces: primitive facet normals plus +-(basis of span(cone)^perp),
//     sorted lexicographically (an equality shows up as an opposite pair);
//   - lineality: Hermite-canonical basis of the largest linear subspace.
struct RationalCone {
    size_t ambient_dim = 0;
    std::vector<IntVec> generators;
    std::vector<IntVec> halfspaces;
    std::vector<IntVec> lineality;
    size_t lineality_dim = 0;
    size_t dim = 0;  // dim(cone - cone)

    bool operator==(const RationalCone& o) const {
        return ambient_dim == o.ambient_dim && generators == o.generators &&
               halfspaces == o.halfspaces && lineality == o.lineality;
    }

    bool is_strongly_convex() const { return lineality_dim == 0; }

    // Indices of halfspaces that are genuine facets (their negation is not
    // also a halfspace). The rest pair up into equations of span(cone).
    std::vector<size_t> facet_indices() const;

    // Mutual-containment check of the two descriptions; used by tests and
    // the CLI selftest.
    bool verify_descriptions() const;
};

struct Face {
    const RationalCone* parent = nullptr;
    std::vector<size_t> active_halfspaces;  // indices into parent->halfspaces
    std::vector<size_t> generator_indices;  // parent generators lying on the face
    size_t dim = 0;

    bool operator==(const Face& o) const {
        return parent == o.parent && generator_indices == o.generator_indices;
    }
};

RationalCone cone_from_generators(const std::vector<IntVec>& vectors, size_t ambient_dim,
                                  std::vector<std::string>* warnings = nullptr);
RationalCone cone_from_halfspaces(const std::vector<IntVec>& normals, size_t ambient_dim);

RationalCone zero_cone(size_t ambient_dim);
RationalCone full_orthant(size_t ambient_dim);

bool contains(const RationalCone& cone, const RatVec& point);
bool contains(const RationalCone& cone, const IntVec& point);
bool relint_contains(const RationalCone& cone, const RatVec& point);

// The smallest face containing the point; the point must be in the cone.
Face minimal_face(const RationalCone& cone, const RatVec& point);

// All faces, each once, ordered by (dim, generator set). Contains the cone
// itself and the lineality-minimal face.
std::vector<Face> face_lattice(const RationalCone& cone);

RationalCone face_cone(const Face& face);

RationalCone intersect(const RationalCone& a, const RationalCone& b);

// True iff candidate is a face of cone (including cone itself), decided by
// the halfspaces of cone that vanish on candidate.
bool is_face_of(const RationalCone& candidate, const RationalCone& cone);

// A rational point in the relative interior (sum of the extreme rays; the
// zero vector for the lineality-minimal cone).
RatVec relint_point(const RationalCone& cone);

}  // namespace rayfan::polycore
