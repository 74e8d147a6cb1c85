#include "gq/rational.hpp"

namespace gq {

Rat Rat::pow(long e) const {
    if (e == 0) return Rat(1);
    if (is_zero()) {
        if (e < 0) throw std::domain_error("zero to a negative power");
        return Rat(0);
    }
    bool invert = e < 0;
    unsigned long k = invert ? static_cast<unsigned long>(-e) : static_cast<unsigned long>(e);
    BigInt n = boost::multiprecision::pow(num(), static_cast<unsigned>(k));
    BigInt d = boost::multiprecision::pow(den(), static_cast<unsigned>(k));
    return invert ? Rat(d, n) : Rat(n, d);
}

std::optional<Rat> Rat::sqrt_exact() const {
    if (sign() < 0) return std::nullopt;
    BigInt rn = boost::multiprecision::sqrt(num());
    BigInt rd = boost::multiprecision::sqrt(den());
    if (rn * rn != num() || rd * rd != den()) return std::nullopt;
    return Rat(rn, rd);
}

std::string Rat::to_string() const {
    std::string s = num().str();
    if (!is_integer()) s += "/" + den().str();
    return s;
}

Rat Rat::parse(const std::string& text) {
    auto slash = text.find('/');
    try {
        if (slash == std::string::npos) return Rat(BigInt(text));
        BigInt n(text.substr(0, slash));
        BigInt d(text.substr(slash + 1));
        if (d == 0) throw std::invalid_argument("zero denominator");
        return Rat(n, d);
    } catch (const std::runtime_error&) {
        throw std::invalid_argument("bad rational literal: " + text);
    }
}

}  // namespace gq
