#pragma once

#include <random>

#include "rayfan/chamberfan.hpp"

namespace rayfan::testing {

inline IntVec iv(std::initializer_list<long> xs) {
    IntVec v;
    for (long x : xs) v.push_back(Int(x));
    return v;
}

inline RatVec rv(std::initializer_list<long> xs) {
    RatVec v;
    for (long x : xs) v.push_back(Rat(x));
    return v;
}

// Rejection-samples a polynomial spec passing the positivity check:
// n in 1..max_n, s in 2..max_s, degree entries in [-3, 3].
inline gradedring::GradedRingSpec random_poly_spec(std::mt19937_64& rng, size_t max_n = 3,
                                                   size_t max_s = 5) {
    while (true) {
        size_t n = 1 + rng() % max_n;
        size_t s = 2 + rng() % (max_s - 1);
        std::vector<IntVec> degrees;
        for (size_t i = 0; i < s; ++i) {
            IntVec d(n);
            for (size_t j = 0; j < n; ++j) d[j] = static_cast<long>(rng() % 7) - 3;
            degrees.push_back(std::move(d));
        }
        try {
            return gradedring::make_polynomial_ring(std::move(degrees), n);
        } catch (const SpecError&) {
            continue;
        }
    }
}

// A rational point that usually lies in C(A): a random small nonnegative
// combination of the degrees; occasionally a plain box point, to exercise
// the outside-the-cone paths too.
inline RatVec random_point(std::mt19937_64& rng, const gradedring::GradedRingSpec& ring) {
    size_t n = ring.grading_rank;
    RatVec p(n, Rat(0));
    if (rng() % 4 == 0) {
        for (size_t j = 0; j < n; ++j)
            p[j] = rayfan::rat(static_cast<long>(rng() % 13) - 6, 1 + static_cast<long>(rng() % 4));
        return p;
    }
    for (const auto& d : ring.generator_degrees) {
        long num = static_cast<long>(rng() % 4);
        long den = 1 + static_cast<long>(rng() % 4);
        for (size_t j = 0; j < n; ++j) p[j] += rayfan::rat(num, den) * Rat(d[j]);
    }
    return p;
}

}  // namespace rayfan::testing
