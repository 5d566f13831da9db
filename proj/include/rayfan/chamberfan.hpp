#pragma once

#include "rayfan/gradedring.hpp"

namespace rayfan::chamberfan {

using gradedring::GradedRingSpec;
using gradedring::RayIdeal;
using polycore::IntMatrix;
using polycore::RationalCone;

// Hyperplanes spanned by (k-1)-dimensional subsets of the degree vectors,
// in the coordinates of the saturated sublattice spanned by the degrees
// (identity basis when the degrees already span Z^n).
struct Arrangement {
    size_t ambient_rank = 0;                       // k = dim C(A)
    std::vector<IntVec> basis;                     // k rows in Z^n
    std::vector<IntVec> degree_coords;             // degrees in basis coordinates
    std::vector<IntVec> hyperplane_normals;        // primitive, first nonzero entry > 0
    std::vector<std::vector<size_t>> source_subsets;
};

struct Chamber {
    RationalCone cone;             // back in the original Z^n coordinates
    std::vector<int> sign_vector;  // +1 / -1 per hyperplane (0 would mean mixed)
    RayIdeal ideal;
    RatVec interior_point;         // rational witness in Z^n coordinates
};

struct FanEntry {
    RationalCone cone;
    RayIdeal ideal;
};

struct FanVerification {
    bool unique_maximality = false;  // one cone per ideal; relint ideal matches
    bool face_closure = false;       // faces of listed cones are listed
    bool order_reversal = false;     // J1 > J2 iff cone(J1) proper face of cone(J2)
    bool fan_axioms = false;         // strong convexity + intersections are common faces
    bool coverage = false;           // chambers cover C(A)
    bool constancy = false;          // chamber ideal constant on sampled interior points
    bool cross_validation = false;   // sign cells and orbit cones give the same chambers
    size_t pre_merge_cell_count = 0;
    std::vector<std::string> notes;

    bool all_ok() const {
        return unique_maximality && face_closure && order_reversal && fan_axioms && coverage &&
               constancy && cross_validation;
    }
};

struct ChamberFan {
    std::vector<FanEntry> maximal_cones;            // one per nonzero ray ideal
    std::vector<std::pair<size_t, size_t>> hasse;   // (i,j): cone i is a cover face of cone j
    std::vector<Chamber> cells;                     // the pre-merge sign cells
    FanVerification report;
};

// Morphism edge (i, j): the variety of cone i maps to the variety of cone
// j, i.e. the ideal of cone j strictly contains the ideal of cone i.
struct MorphismPoset {
    ChamberFan fan;
    std::vector<std::pair<size_t, size_t>> edges;
};

struct Theorem4Report {
    bool one_chamber = false;              // C(A) itself is a ray ideal cone
    bool faces_are_ray_ideal_cones = false;  // equivalent condition
    bool finite_over_axis_subring = false;   // equivalent condition
    // Two interior points with different ray ideals when the answer is no.
    std::optional<std::pair<RatVec, RatVec>> witness;
};

Arrangement build_arrangement(const GradedRingSpec& ring);

std::vector<Chamber> chamber_decomposition(const GradedRingSpec& ring);

RationalCone maximal_ray_ideal_cone(const GradedRingSpec& ring, const RatVec& a);

ChamberFan assemble_fan(const GradedRingSpec& ring, unsigned sample_seed = 0,
                        size_t coverage_samples = 1000);

MorphismPoset morphism_poset(const GradedRingSpec& ring);

Theorem4Report theorem4_check(const GradedRingSpec& ring);

}  // namespace rayfan::chamberfan
