#pragma once

#include <optional>
#include <string>
#include <vector>

#include "gq/rational.hpp"

namespace gq {

/// Term coefficient: an exact rational, or an approximate double introduced
/// by an inexact operation (square roots of non-squares). Approximation is
/// contagious: any arithmetic touching an approx coefficient stays approx.
class Coeff {
public:
    Coeff() : exact_(0) {}
    explicit Coeff(Rat r) : exact_(std::move(r)) {}
    static Coeff approximate(double v);

    bool is_approx() const { return approx_; }
    bool is_zero() const { return approx_ ? value_ == 0.0 : exact_.is_zero(); }
    /// Sign of the stored value (approx compares the double against 0).
    int sign() const { return approx_ ? (value_ < 0 ? -1 : (value_ > 0 ? 1 : 0)) : exact_.sign(); }

    /// Exact value; only meaningful when !is_approx().
    const Rat& exact() const { return exact_; }
    double to_double() const { return approx_ ? value_ : exact_.to_double(); }

    Coeff operator-() const;
    Coeff operator+(const Coeff& o) const;
    Coeff operator*(const Coeff& o) const;
    Coeff inverse() const;
    /// Square root; exact when the rational is a perfect square, otherwise
    /// approx. Caller guarantees positivity.
    Coeff sqrt() const;

    std::string to_string() const;

private:
    Rat exact_;
    double value_ = 0.0;
    bool approx_ = false;
};

struct GermTerm {
    Rat exp;
    Coeff coeff;
};

/// Single-branch asymptotic germ: a finite sum of c * eps^r terms with
/// strictly increasing rational exponents, plus an optional precision bound.
/// `order() == N` means the germ is only known modulo O(eps^N); every stored
/// exponent is then < N. No order bound means the sum is exact.
class PuiseuxGerm {
public:
    PuiseuxGerm() = default;  // exact zero

    static PuiseuxGerm zero() { return PuiseuxGerm(); }
    static PuiseuxGerm one() { return constant(Rat(1)); }
    static PuiseuxGerm constant(const Rat& c);
    static PuiseuxGerm monomial(const Rat& exp, const Coeff& c);
    /// eps^r
    static PuiseuxGerm eps_power(const Rat& r) { return monomial(r, Coeff(Rat(1))); }
    /// Empty germ known modulo O(eps^N).
    static PuiseuxGerm o_term(const Rat& n);
    /// Sorts, merges duplicate exponents, drops zeros, truncates to `order`.
    static PuiseuxGerm make(std::vector<GermTerm> terms, std::optional<Rat> order);

    const std::vector<GermTerm>& terms() const { return terms_; }
    const std::optional<Rat>& order() const { return order_; }

    bool is_exact() const { return !order_.has_value(); }
    bool has_approx() const;
    bool is_exact_zero() const { return terms_.empty() && !order_; }

    /// Smallest-exponent term; nullopt for the exact zero germ. Throws
    /// IndeterminateAtPrecision when the term list is empty but the germ is
    /// only known modulo O(eps^N) (vanishing cannot be certified).
    std::optional<GermTerm> leading() const;

    PuiseuxGerm operator-() const;
    PuiseuxGerm operator+(const PuiseuxGerm& o) const;
    PuiseuxGerm operator-(const PuiseuxGerm& o) const { return *this + (-o); }
    PuiseuxGerm operator*(const PuiseuxGerm& o) const;
    PuiseuxGerm pow(unsigned n) const;

    /// Inverse g with f*g = 1 + (residual of order > N). The leading exponent
    /// of g is -V(f). Exact only for monomials; otherwise tagged with the
    /// first undetermined exponent. Throws NotInvertible on the exact zero,
    /// IndeterminateAtPrecision on an undetermined leading term.
    PuiseuxGerm invert(const Rat& target_order) const;

    /// Square root g with g*g = f + (residual of order > N), leading exponent
    /// halved. sqrt(0) = 0. Throws NotQPositiveLeading when the leading
    /// coefficient is <= 0.
    PuiseuxGerm sqrt(const Rat& target_order) const;

    /// Imposes an additional precision bound (keeps the tighter of the two).
    PuiseuxGerm truncated(const Rat& order) const;

    /// Sum of c * eps^r in double arithmetic; an order bound is ignored.
    double eval(double eps) const;

    /// True when every stored term has exponent > n and any order bound also
    /// exceeds n, i.e. the germ lies in O(eps^{>n}). The exact zero qualifies.
    bool is_higher_order_than(const Rat& n) const;

    /// Structural equality of exact data; throws NotExact when either side
    /// carries an approx coefficient (equality is never answered numerically).
    bool equals(const PuiseuxGerm& o) const;

    std::string to_string() const;

private:
    std::vector<GermTerm> terms_;
    std::optional<Rat> order_;
};

}  // namespace gq
