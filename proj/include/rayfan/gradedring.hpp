#pragma once

#include <optional>
#include <set>
#include <string>

#include "rayfan/cone.hpp"
#include "rayfan/errors.hpp"

namespace rayfan::gradedring {

using polycore::IntMatrix;
using polycore::RationalCone;

enum class RingKind { Polynomial, Semigroup };

// A Z^n-graded ring presented combinatorially: either a polynomial ring
// k[x_1..x_s] with deg(x_i) given, or the semigroup ring of an affine
// semigroup in Z^N with a grading map Z^N -> Z^n. Validation enforces the
// positivity condition (no nontrivial nonnegative combination of the
// generator degrees is zero), which is what makes the degree-zero part a
// field for these inputs.
struct GradedRingSpec {
    RingKind kind = RingKind::Polynomial;
    size_t grading_rank = 0;  // n
    std::vector<IntVec> generator_degrees;  // s vectors in Z^n

    // Semigroup kind only:
    size_t ambient_rank = 0;                // N
    std::vector<IntVec> exponent_vectors;   // s vectors in Z^N
    IntMatrix grading_map;                  // n x N, maps exponents to degrees

    std::vector<std::string> variable_names;
    std::vector<std::string> warnings;
    std::optional<long> truncation_bound;  // set for truncated restrictions

    size_t num_generators() const { return generator_degrees.size(); }
    size_t exponent_dim() const {
        return kind == RingKind::Polynomial ? num_generators() : ambient_rank;
    }

    // Exponent cone K: the positive orthant for a polynomial ring, the
    // cone over the exponent vectors otherwise.
    const RationalCone& exponent_cone() const { return exponent_cone_; }

    // Faces of K, each as the sorted set of generator indices lying on it.
    const std::vector<std::vector<size_t>>& faces() const { return faces_; }

    // Degree of generator i as a column of the grading map picture.
    const IntVec& degree(size_t i) const { return generator_degrees[i]; }

    // A rational functional strictly positive on all generator degrees;
    // exists by the positivity check and bounds every enumeration below.
    const RatVec& positive_functional() const { return positive_functional_; }

    bool same_ring(const GradedRingSpec& o) const;

    // Filled in by the factory functions.
    RationalCone exponent_cone_;
    std::vector<std::vector<size_t>> faces_;
    RatVec positive_functional_;
    // suffix_cones[i] = cone spanned by columns i.. ; used to prune the
    // exhaustive combination searches (a target outside the rational cone
    // of the remaining columns has no nonnegative integer combination).
    std::vector<RationalCone> degree_suffix_cones_;
    std::vector<RationalCone> exponent_suffix_cones_;  // Semigroup kind only
};

GradedRingSpec make_polynomial_ring(std::vector<IntVec> degrees, size_t grading_rank,
                                    std::vector<std::string> names = {});
GradedRingSpec make_semigroup_ring(std::vector<IntVec> exponent_vectors, IntMatrix grading_map,
                                   std::vector<std::string> names = {});

// Canonical representation of the ray ideal J_a: the up-closed family of
// faces G of the exponent cone with a in deg(G), stored both in full (for
// comparisons) and as the antichain of minimal members. Two ray ideals of
// one ring are equal iff the face families are equal.
struct RayIdeal {
    const GradedRingSpec* ring = nullptr;
    IntVec ray;  // primitive direction of a (the zero vector for a = 0)
    bool is_zero = false;
    bool is_unit = false;
    std::set<std::vector<size_t>> member_faces;
    std::vector<std::vector<size_t>> minimal_member_faces;

    // Polynomial kind only:
    std::vector<std::vector<size_t>> minimal_primes;         // variable index sets
    std::vector<std::vector<size_t>> squarefree_generators;  // minimal member supports

    bool operator==(const RayIdeal& o) const { return member_faces == o.member_faces; }
};

struct Monomial {
    IntVec exponents;  // length s (Polynomial) or N (Semigroup)
};

enum class IdealOrder { Equal, LessThan, GreaterThan, Incomparable };

RationalCone weight_cone(const GradedRingSpec& ring);

RayIdeal ray_ideal(const GradedRingSpec& ring, const RatVec& a);
RayIdeal ray_ideal(const GradedRingSpec& ring, const IntVec& a);

bool monomial_in_ray_ideal(const GradedRingSpec& ring, const Monomial& m, const RatVec& a);

IdealOrder ray_ideal_compare(const RayIdeal& j1, const RayIdeal& j2);

// Model of A_sigma (resp. A_T): a Semigroup-kind spec over the same
// exponent space whose monomials are those of A with degree in sigma
// (resp. in the sublattice spanned by the rows of T), generated up to the
// given total-exponent bound and flagged as truncated.
GradedRingSpec restrict_to_cone(const GradedRingSpec& ring, const RationalCone& sigma,
                                long degree_bound = 8);
GradedRingSpec restrict_to_subgroup(const GradedRingSpec& ring,
                                    const std::vector<IntVec>& sublattice_basis,
                                    long degree_bound = 8);

// Independent oracle: enumerates monomials of total exponent <= bound and
// decides membership in J_a by exhaustive search over factorizations
// x^{mv} = g.h with deg(g) on the open ray through a. For polynomial
// rings the search over the degree multiple k of g runs up to the largest
// square-minor determinant of the degree matrix, which a Caratheodory /
// Cramer argument shows is enough for the search to be complete.
std::set<IntVec> brute_force_ray_ideal(const GradedRingSpec& ring, const RatVec& a,
                                       long bound);

// Semigroup membership of an ambient exponent vector, by bounded search
// over nonnegative combinations of the exponent vectors.
bool in_semigroup(const GradedRingSpec& ring, const IntVec& u);

// All monomials with combination size / total exponent <= bound.
std::vector<IntVec> enumerate_monomials(const GradedRingSpec& ring, long bound);

// Exponent vectors of the monomials of degree exactly r (finite by
// positivity); for the Polynomial kind this is dim_k A_r.
std::vector<IntVec> monomials_of_degree(const GradedRingSpec& ring, const IntVec& r);

// Face of the exponent cone a monomial sits on (its minimal face), as a
// generator index set.
std::vector<size_t> monomial_face(const GradedRingSpec& ring, const Monomial& m);

}  // namespace rayfan::gradedring
