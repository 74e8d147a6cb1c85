#include "gq/quaternion.hpp"

#include <cmath>

#include "gq/error.hpp"

namespace gq {

GenQuaternion GenQuaternion::unit_i() {
    return GenQuaternion(GenScalar::zero(), GenScalar::one(), GenScalar::zero(), GenScalar::zero());
}
GenQuaternion GenQuaternion::unit_j() {
    return GenQuaternion(GenScalar::zero(), GenScalar::zero(), GenScalar::one(), GenScalar::zero());
}
GenQuaternion GenQuaternion::unit_k() {
    return GenQuaternion(GenScalar::zero(), GenScalar::zero(), GenScalar::zero(), GenScalar::one());
}

GenQuaternion GenQuaternion::operator-() const {
    return GenQuaternion(-c_[0], -c_[1], -c_[2], -c_[3]);
}

GenQuaternion GenQuaternion::operator+(const GenQuaternion& o) const {
    return GenQuaternion(c_[0] + o.c_[0], c_[1] + o.c_[1], c_[2] + o.c_[2], c_[3] + o.c_[3]);
}

GenQuaternion GenQuaternion::operator*(const GenQuaternion& o) const {
    const GenScalar& a0 = c_[0];
    const GenScalar& a1 = c_[1];
    const GenScalar& a2 = c_[2];
    const GenScalar& a3 = c_[3];
    const GenScalar& b0 = o.c_[0];
    const GenScalar& b1 = o.c_[1];
    const GenScalar& b2 = o.c_[2];
    const GenScalar& b3 = o.c_[3];
    return GenQuaternion(a0 * b0 - a1 * b1 - a2 * b2 - a3 * b3,
                         a0 * b1 + a1 * b0 + a2 * b3 - a3 * b2,
                         a0 * b2 - a1 * b3 + a2 * b0 + a3 * b1,
                         a0 * b3 + a1 * b2 - a2 * b1 + a3 * b0);
}

GenQuaternion GenQuaternion::conj() const {
    return GenQuaternion(c_[0], -c_[1], -c_[2], -c_[3]);
}

GenScalar GenQuaternion::normsq() const {
    return c_[0] * c_[0] + c_[1] * c_[1] + c_[2] * c_[2] + c_[3] * c_[3];
}

bool GenQuaternion::has_approx() const {
    for (const auto& c : c_)
        if (c.has_approx()) return true;
    return false;
}

bool GenQuaternion::is_exact_zero() const {
    for (const auto& c : c_)
        if (!c.is_exact_zero()) return false;
    return true;
}

bool GenQuaternion::equals(const GenQuaternion& o) const {
    for (std::size_t n = 0; n < 4; ++n)
        if (!c_[n].equals(o.c_[n])) return false;
    return true;
}

bool GenQuaternion::is_unit() const { return normsq().is_unit(); }

GenQuaternion GenQuaternion::invert(const Rat& target_order) const {
    if (is_exact_zero()) throw Error(ErrKind::ZeroInput, "0 has no inverse");
    GenScalar s = normsq();
    BlockSet z = s.zero_set();
    if (!z.is_empty())
        throw Error(ErrKind::NotInvertible,
                    "norm-square vanishes on an accumulating branch; annihilated by " +
                        IdempotentScalar(z).to_string())
            .with_witness(z.to_string());
    GenScalar sinv = s.invert(target_order);
    GenQuaternion xbar = conj();
    return GenQuaternion(xbar.c_[0] * sinv, xbar.c_[1] * sinv, xbar.c_[2] * sinv,
                         xbar.c_[3] * sinv);
}

IdempotentScalar GenQuaternion::zero_divisor_witness() const {
    // Annihilating the norm-square annihilates the element, centrally.
    return normsq().annihilator_idempotent();
}

std::optional<Rat> GenQuaternion::valuation() const {
    std::optional<Rat> v;
    for (const auto& c : c_) v = min_opt(v, c.valuation());
    return v;
}

double GenQuaternion::sharp_norm() const {
    auto v = valuation();
    return v ? std::exp(-v->to_double()) : 0.0;
}

double GenQuaternion::metric_d(const GenQuaternion& y) const { return (*this - y).sharp_norm(); }

double GenQuaternion::metric_dpi(const GenQuaternion& y) const {
    double m = 0.0;
    for (std::size_t n = 0; n < 4; ++n)
        m = std::max(m, (c_[n] - y.c_[n]).sharp_norm());
    return m;
}

std::pair<GenQuaternion, GenScalar> GenQuaternion::polar(const Rat& target_order) const {
    if (is_exact_zero()) throw Error(ErrKind::ZeroInput, "0 has no polar decomposition");
    GenScalar s = normsq();
    BlockSet z = s.zero_set();
    if (!z.is_empty())
        throw Error(ErrKind::NotInvertible,
                    "polar decomposition needs a unit; norm vanishes on " + z.to_string())
            .with_witness(z.to_string());
    // Work deeper than target_order so the verified residuals still clear it:
    // theta*n - x loses the fastest branch valuation (when negative) and
    // normsq(theta) - 1 loses twice the slowest one (when positive). Branch
    // valuations of normsq are twice those of x.
    Rat fastest = *s.valuation();
    Rat slowest = fastest;
    for (const auto& b : s.branches()) {
        auto lead = b.germ.leading();
        if (lead && lead->exp > slowest) slowest = lead->exp;
    }
    Rat working = target_order + max(Rat(0), -(fastest / Rat(2))) + max(Rat(0), slowest) + Rat(1);
    GenScalar n = s.sqrt(working);
    GenScalar ninv = n.pseudo_invert(working);
    GenQuaternion theta(c_[0] * ninv, c_[1] * ninv, c_[2] * ninv, c_[3] * ninv);
    return {theta, n};
}

bool GenQuaternion::associates_zero() const {
    for (const auto& c : c_)
        if (!c.associates_zero()) return false;
    return true;
}

std::optional<std::array<Rat, 4>> GenQuaternion::shadow() const {
    std::array<Rat, 4> a;
    for (std::size_t n = 0; n < 4; ++n) {
        auto s = c_[n].shadow();
        if (!s) return std::nullopt;
        a[n] = *s;
    }
    return a;
}

IdempotentScalar GenQuaternion::exchange_idempotent() const {
    return normsq().exchange_idempotent();
}

std::optional<BlockSet> GenQuaternion::as_idempotent() const {
    GenQuaternion sq = *this * *this;
    if (!sq.equals(*this)) return std::nullopt;
    // x*x = x forces a scalar chi_A: imaginary square sums cannot be
    // q-negative.
    for (std::size_t n = 1; n < 4; ++n)
        if (!c_[n].is_exact_zero())
            throw Error(ErrKind::BadValue, "internal: non-scalar idempotent " + to_string());
    auto a = c_[0].as_idempotent();
    if (!a) throw Error(ErrKind::BadValue, "internal: idempotent scalar not a chi " + to_string());
    return a;
}

std::array<double, 4> GenQuaternion::eval(double eps) const {
    return {c_[0].eval(eps), c_[1].eval(eps), c_[2].eval(eps), c_[3].eval(eps)};
}

double GenQuaternion::eval_abs(double eps) const {
    auto v = eval(eps);
    return std::sqrt(v[0] * v[0] + v[1] * v[1] + v[2] * v[2] + v[3] * v[3]);
}

namespace {

const char* basis_name(std::size_t n) {
    switch (n) {
        case 1: return "i";
        case 2: return "j";
        case 3: return "k";
        default: return "";
    }
}

/// Single exact term with exponent 0 and integer coefficient, printable as a
/// bare coefficient in front of a basis unit.
std::optional<Rat> simple_int_constant(const GenScalar& s) {
    if (s.branches().size() != 1) return std::nullopt;
    const PuiseuxGerm& g = s.branches().front().germ;
    if (!g.is_exact() || g.terms().size() != 1) return std::nullopt;
    const GermTerm& t = g.terms().front();
    if (!t.exp.is_zero() || t.coeff.is_approx() || !t.coeff.exact().is_integer())
        return std::nullopt;
    return t.coeff.exact();
}

}  // namespace

std::string GenQuaternion::to_string() const {
    std::string s;
    for (std::size_t n = 0; n < 4; ++n) {
        if (c_[n].is_exact_zero()) continue;
        std::string part;
        bool neg = false;
        if (n == 0) {
            part = c_[0].to_string();
        } else if (auto c = simple_int_constant(c_[n])) {
            neg = c->sign() < 0;
            Rat mag = c->abs();
            part = (mag == Rat(1) ? "" : mag.to_string()) + basis_name(n);
        } else {
            part = "(" + c_[n].to_string() + ")" + basis_name(n);
        }
        if (s.empty())
            s = (neg ? "-" : "") + part;
        else
            s += (neg ? " - " : " + ") + part;
    }
    return s.empty() ? "0" : s;
}

}  // namespace gq
