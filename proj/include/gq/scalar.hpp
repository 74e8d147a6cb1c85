#pragma once

#include <optional>
#include <string>
#include <vector>

#include "gq/blockset.hpp"
#include "gq/germ.hpp"

namespace gq {

class GenScalar;

/// Characteristic-function idempotent chi_A of a block set A. These exhaust
/// the idempotents of the scalar ring; nontrivial exactly when both A and its
/// complement accumulate.
class IdempotentScalar {
public:
    explicit IdempotentScalar(BlockSet set) : set_(std::move(set)) {}

    const BlockSet& set() const { return set_; }
    bool is_zero() const { return set_.is_empty(); }
    bool is_one() const { return set_.is_full(); }
    GenScalar to_scalar() const;
    std::string to_string() const;

private:
    BlockSet set_;
};

struct ScalarBranch {
    BlockSet set;
    PuiseuxGerm germ;
};

/// Generalized scalar: a finite partition of N into block sets, one germ per
/// part. Canonical form merges branches with equal exact germs, replaces each
/// part by its periodic core (finite blocks never affect the germ at 0) and
/// sorts; canonical forms are unique, so structural equality decides element
/// equality.
///
/// Immutable; all operations return new values.
class GenScalar {
public:
    GenScalar() : GenScalar(PuiseuxGerm::zero()) {}  // zero

    static GenScalar zero() { return GenScalar(); }
    static GenScalar one() { return constant(Rat(1)); }
    static GenScalar constant(const Rat& c) { return GenScalar(PuiseuxGerm::constant(c)); }
    explicit GenScalar(PuiseuxGerm whole);  // single branch over all of N
    static GenScalar chi(const BlockSet& a);
    /// The canonical scale element with representative eps^r.
    static GenScalar alpha(const Rat& r) { return GenScalar(PuiseuxGerm::eps_power(r)); }
    /// Validates that the sets form a partition of N, then canonicalizes.
    static GenScalar piecewise(std::vector<ScalarBranch> branches);

    const std::vector<ScalarBranch>& branches() const { return branches_; }
    /// Germ on the branch containing block k.
    const PuiseuxGerm& germ_at(std::size_t k) const;

    GenScalar operator-() const;
    GenScalar operator+(const GenScalar& o) const;
    GenScalar operator-(const GenScalar& o) const { return *this + (-o); }
    GenScalar operator*(const GenScalar& o) const;
    GenScalar pow(unsigned n) const;

    bool has_approx() const;
    bool is_exact_zero() const;
    /// Structural equality; throws NotExact on approx-tagged operands.
    bool equals(const GenScalar& o) const;

    /// Union of branches with (certified) nonzero germ; the complement is the
    /// zero set Z(x). Throws IndeterminateAtPrecision when a branch germ is
    /// empty modulo O(eps^N).
    BlockSet support() const;
    BlockSet zero_set() const { return support().complement(); }

    /// Unit test: every branch germ nonzero, i.e. the zero set does not
    /// accumulate. Decision; requires exact input.
    bool is_unit() const;

    /// Inverse with x*result = 1 + (residual of order > N) on every branch.
    /// Throws ZeroInput on 0 and NotInvertible (with the annihilating
    /// idempotent attached as witness) on nonzero non-units.
    GenScalar invert(const Rat& target_order) const;

    /// Branchwise inverse on the support, zero elsewhere:
    /// x * pseudo_invert(x) = chi_supp + (residual of order > N).
    GenScalar pseudo_invert(const Rat& target_order) const;

    /// The nonzero idempotent e = chi_Z with x*e = 0 exactly, for nonzero
    /// non-units. Throws IsUnit / ZeroInput otherwise.
    IdempotentScalar annihilator_idempotent() const;

    /// min over branches of the leading exponent; nullopt means +infinity
    /// (exactly for x = 0). A(x) is the open interval (-inf, V(x)).
    std::optional<Rat> valuation() const;

    /// e^{-V(x)}, 0 when V = +infinity.
    double sharp_norm() const;
    double ultrametric(const GenScalar& y) const { return (*this - y).sharp_norm(); }

    /// Every branch germ is zero or has positive leading coefficient.
    bool is_qpositive() const;
    /// Flips the sign of negative-leading branches; abs(x)^2 = x^2.
    GenScalar abs() const;

    /// q-positive square root, y*y = x + (residual of order > N) per branch.
    /// Throws NotQPositive when a branch leading coefficient is negative.
    GenScalar sqrt(const Rat& target_order) const;

    /// x associated to 0: every branch germ vanishes as eps -> 0.
    bool associates_zero() const;
    /// The real constant a with x - a associated to 0, when one exists.
    std::optional<Rat> shadow() const;

    /// Idempotent e with is_unit(x + e): chi over the zero set (0 for units,
    /// 1 for x = 0).
    IdempotentScalar exchange_idempotent() const;

    /// A unit u with d(x, u) <= e^{-s}: u = x + alpha(s) * chi_Z.
    GenScalar unit_within_radius(const Rat& s) const;

    /// The set A when x = chi_A exactly; nullopt otherwise.
    std::optional<BlockSet> as_idempotent() const;

    double eval(double eps) const { return germ_at(block_of(eps)).eval(eps); }

    std::string to_string() const;

private:
    std::vector<ScalarBranch> branches_;  // canonical

    static GenScalar canonical(std::vector<ScalarBranch> branches);
    void require_exact(const char* op) const;
};

inline bool order_leq(const GenScalar& x, const GenScalar& y) { return (y - x).is_qpositive(); }

}  // namespace gq
