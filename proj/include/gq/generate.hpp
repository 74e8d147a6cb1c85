#pragma once

#include <cstdint>
#include <random>
#include <vector>

#include "gq/ideal.hpp"

namespace gq {

/// Deterministic generator of random exact elements, shared by the sampling
/// oracle, the property tests and the acceptance suite.
///
/// Bounds are chosen so the fixed oracle sample schedule (block midpoints,
/// k = 20..40) is decisive: exponents are half-integers in [-3, 3] (leading
/// terms dominate by eps^{1/2} gaps) and coefficient magnitudes lie in
/// [1/9, 20] (refutations clear the association threshold 1e-3 and unit
/// threshold eps^{V+1} with a wide margin).
class ElementGen {
public:
    explicit ElementGen(std::uint64_t seed) : rng_(seed) {}

    long pick(long lo, long hi);  // uniform inclusive

    Rat coefficient();             // nonzero, |num| <= 20, den <= 9
    Rat exponent();                // half-integer in [-3, 3]
    BlockSet blockset(int max_period = 6);
    std::vector<BlockSet> partition(int max_parts = 3, int max_period = 6);

    PuiseuxGerm germ(int max_terms = 3);  // may be zero, one, or a sum of terms
    GenScalar scalar();
    GenScalar nonzero_scalar();
    GenScalar qpositive_scalar() { return scalar().abs(); }
    GenScalar unit_scalar();

    GenQuaternion quaternion();
    GenQuaternion nonzero_quaternion();
    GenQuaternion unit_quaternion();

    /// f.g. ideal whose support misses an accumulating set.
    FgIdeal proper_ideal(int max_gens = 3);

    std::mt19937_64& rng() { return rng_; }

private:
    std::mt19937_64 rng_;
};

}  // namespace gq
