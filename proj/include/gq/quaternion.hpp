#pragma once

#include <array>
#include <optional>
#include <string>
#include <utility>

#include "gq/scalar.hpp"

namespace gq {

/// Quaternion over the generalized scalars, components on the basis
/// {1, i, j, k}. Multiplication is the Hamilton product (noncommutative);
/// scalars embed centrally.
class GenQuaternion {
public:
    GenQuaternion() = default;  // zero

    GenQuaternion(GenScalar x0, GenScalar x1, GenScalar x2, GenScalar x3)
        : c_{std::move(x0), std::move(x1), std::move(x2), std::move(x3)} {}

    static GenQuaternion from_scalar(GenScalar s) {
        return GenQuaternion(std::move(s), GenScalar::zero(), GenScalar::zero(), GenScalar::zero());
    }
    static GenQuaternion unit_i();
    static GenQuaternion unit_j();
    static GenQuaternion unit_k();

    const GenScalar& component(std::size_t n) const { return c_[n]; }
    const GenScalar& x0() const { return c_[0]; }
    const GenScalar& x1() const { return c_[1]; }
    const GenScalar& x2() const { return c_[2]; }
    const GenScalar& x3() const { return c_[3]; }

    GenQuaternion operator-() const;
    GenQuaternion operator+(const GenQuaternion& o) const;
    GenQuaternion operator-(const GenQuaternion& o) const { return *this + (-o); }
    GenQuaternion operator*(const GenQuaternion& o) const;

    GenQuaternion conj() const;
    /// x0^2 + x1^2 + x2^2 + x3^2 = x * conj(x); exact and q-positive.
    GenScalar normsq() const;
    /// sqrt(normsq), q-positive, possibly approx-tagged.
    GenScalar norm(const Rat& target_order) const { return normsq().sqrt(target_order); }

    bool has_approx() const;
    bool is_exact_zero() const;
    bool equals(const GenQuaternion& o) const;

    /// Unit iff normsq is a unit of the scalar ring.
    bool is_unit() const;
    /// conj(x) * normsq(x)^{-1}; x * invert(x) = 1 + (residual of order > N).
    GenQuaternion invert(const Rat& target_order) const;
    /// Central idempotent e with x*e = e*x = 0, e != 0 (nonzero non-units).
    IdempotentScalar zero_divisor_witness() const;

    /// min over components; nullopt = +infinity (exactly for 0).
    std::optional<Rat> valuation() const;
    double sharp_norm() const;
    /// e^{-V(x-y)}.
    double metric_d(const GenQuaternion& y) const;
    /// max over components of e^{-V(x_n - y_n)}; equals metric_d here.
    double metric_dpi(const GenQuaternion& y) const;

    /// Polar pair (theta, n) with theta * n = x and normsq(theta) = 1, both
    /// up to residuals of order > N. Requires a unit.
    std::pair<GenQuaternion, GenScalar> polar(const Rat& target_order) const;

    bool associates_zero() const;
    bool associates(const GenQuaternion& y) const { return (*this - y).associates_zero(); }
    /// Componentwise shadows, when all four exist.
    std::optional<std::array<Rat, 4>> shadow() const;

    /// Idempotent e with is_unit(x + e); the annihilator of normsq.
    IdempotentScalar exchange_idempotent() const;

    /// The set A when x is the scalar embedding of chi_A (equivalently, when
    /// x*x = x); nullopt otherwise.
    std::optional<BlockSet> as_idempotent() const;

    std::array<double, 4> eval(double eps) const;
    /// Euclidean length of eval(eps).
    double eval_abs(double eps) const;

    std::string to_string() const;

private:
    std::array<GenScalar, 4> c_{};
};

inline GenQuaternion operator*(const GenScalar& s, const GenQuaternion& q) {
    return GenQuaternion::from_scalar(s) * q;
}

}  // namespace gq
