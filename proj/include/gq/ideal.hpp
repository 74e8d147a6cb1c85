#pragma once

#include <string>
#include <vector>

#include "gq/quaternion.hpp"

namespace gq {

enum class RingTag { scalar, quaternion };

/// Finitely generated (two-sided, by the duo property) ideal in Bezout normal
/// form. The normal form is the principal generator g = sum of normsq(a_i) —
/// exact, scalar and q-positive — together with its accumulating support.
/// In this model germ quotients on the support are automatically moderate, so
/// membership is exactly support containment; that is what makes every ideal
/// predicate here decidable.
///
/// Immutable after construction.
class FgIdeal {
public:
    static FgIdeal span_scalars(std::vector<GenScalar> gens);
    static FgIdeal span(std::vector<GenQuaternion> gens);

    RingTag ring() const { return ring_; }
    const std::vector<GenQuaternion>& generators() const { return gens_; }
    const GenScalar& principal() const { return principal_; }
    const BlockSet& support() const { return support_; }

    bool contains_element(const GenQuaternion& x) const;
    bool contains_element(const GenScalar& x) const;
    bool contains_ideal(const FgIdeal& other) const { return other.support_.subset_of(support_); }
    /// Ideals here are determined by their supports.
    bool same_ideal(const FgIdeal& other) const { return support_ == other.support_; }

    /// Proper iff the support complement accumulates (g is a blockwise unit
    /// on its support, so support = N means the ideal is the whole ring).
    bool is_proper() const { return !support_.is_full(); }

    /// chi of the support complement when that accumulates, the zero
    /// idempotent otherwise. Nonzero exactly for proper ideals.
    IdempotentScalar right_annihilator_idempotent() const {
        return IdempotentScalar(support_.complement());
    }

    /// Essential iff not contained in a proper principal idempotent ideal,
    /// i.e. iff the right annihilator is zero.
    bool is_essential() const { return right_annihilator_idempotent().is_zero(); }

    /// The scalar ideal generated by the norms of the elements; has the same
    /// support, hence the same essentiality.
    FgIdeal norm_ideal() const;

    /// Verifies I*I = I by comparing the supports of the pairwise-product
    /// ideal with this one.
    bool idempotency_check() const;

    /// Verifies x^n in I implies x in I (powers preserve supports).
    bool radical_membership(const GenQuaternion& x, unsigned n) const;

    /// Quotient witness q with x = q*g + (residual of order > N on every
    /// branch, exactly zero off the support). Throws BadValue on non-members.
    GenQuaternion membership_witness(const GenQuaternion& x, const Rat& target_order) const;

    /// Witnesses c_i with g = sum of a_i * c_i exactly (c_i = conj(a_i)).
    std::vector<GenQuaternion> bezout_witnesses() const;

    std::string to_string() const;

private:
    FgIdeal(RingTag ring, std::vector<GenQuaternion> gens);

    RingTag ring_;
    std::vector<GenQuaternion> gens_;
    GenScalar principal_;
    BlockSet support_;
};

}  // namespace gq
