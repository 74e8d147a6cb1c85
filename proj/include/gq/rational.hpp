#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <compare>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>

namespace gq {

using BigInt = boost::multiprecision::cpp_int;

/// Exact rational number. Thin value wrapper around cpp_rational so that
/// expression templates never leak into our containers and the printed form
/// ("3", "-3/4") is uniform across the project.
class Rat {
public:
    Rat() : v_(0) {}
    Rat(long n) : v_(n) {}                          // NOLINT: implicit by design
    Rat(const BigInt& n) : v_(n) {}                 // NOLINT
    Rat(const BigInt& num, const BigInt& den) : v_(num, den) {
        if (den == 0) throw std::domain_error("rational with zero denominator");
    }
    explicit Rat(const boost::multiprecision::cpp_rational& v) : v_(v) {}

    static Rat of(long num, long den) { return Rat(BigInt(num), BigInt(den)); }

    BigInt num() const { return numerator(v_); }
    BigInt den() const { return denominator(v_); }

    bool is_zero() const { return v_ == 0; }
    bool is_integer() const { return denominator(v_) == 1; }
    int sign() const { return v_ < 0 ? -1 : (v_ > 0 ? 1 : 0); }

    Rat operator-() const { return Rat(boost::multiprecision::cpp_rational(-v_)); }
    Rat operator+(const Rat& o) const { return Rat(boost::multiprecision::cpp_rational(v_ + o.v_)); }
    Rat operator-(const Rat& o) const { return Rat(boost::multiprecision::cpp_rational(v_ - o.v_)); }
    Rat operator*(const Rat& o) const { return Rat(boost::multiprecision::cpp_rational(v_ * o.v_)); }
    Rat operator/(const Rat& o) const {
        if (o.is_zero()) throw std::domain_error("rational division by zero");
        return Rat(boost::multiprecision::cpp_rational(v_ / o.v_));
    }
    Rat& operator+=(const Rat& o) { v_ += o.v_; return *this; }
    Rat& operator-=(const Rat& o) { v_ -= o.v_; return *this; }
    Rat& operator*=(const Rat& o) { v_ *= o.v_; return *this; }

    bool operator==(const Rat& o) const { return v_ == o.v_; }
    bool operator!=(const Rat& o) const { return v_ != o.v_; }
    bool operator<(const Rat& o) const { return v_ < o.v_; }
    bool operator<=(const Rat& o) const { return v_ <= o.v_; }
    bool operator>(const Rat& o) const { return v_ > o.v_; }
    bool operator>=(const Rat& o) const { return v_ >= o.v_; }

    Rat abs() const { return v_ < 0 ? -*this : *this; }

    double to_double() const { return v_.convert_to<double>(); }

    /// Integer power, negative exponents allowed for nonzero base.
    Rat pow(long e) const;

    /// Exact square root when both numerator and denominator are perfect
    /// squares (requires *this >= 0), otherwise nullopt.
    std::optional<Rat> sqrt_exact() const;

    std::string to_string() const;

    /// Parses "p", "-p", "p/q". Throws std::invalid_argument on junk.
    static Rat parse(const std::string& text);

private:
    boost::multiprecision::cpp_rational v_;
};

inline Rat min(const Rat& a, const Rat& b) { return a <= b ? a : b; }
inline Rat max(const Rat& a, const Rat& b) { return a >= b ? a : b; }

/// min on the one-point extension by +infinity (nullopt).
inline std::optional<Rat> min_opt(const std::optional<Rat>& a, const std::optional<Rat>& b) {
    if (!a) return b;
    if (!b) return a;
    return min(*a, *b);
}

/// a + b where nullopt means +infinity.
inline std::optional<Rat> add_opt(const std::optional<Rat>& a, const std::optional<Rat>& b) {
    if (!a || !b) return std::nullopt;
    return *a + *b;
}

}  // namespace gq
