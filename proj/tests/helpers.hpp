#pragma once

#include <string>

#include "gq/error.hpp"
#include "gq/expr.hpp"
#include "gq/generate.hpp"

namespace gqt {

inline gq::Value ev(const std::string& text, long order = 8) {
    gq::Env env;
    gq::EvalConfig cfg;
    cfg.order = gq::Rat(order);
    return gq::run_statement(gq::parse_statement(text), env, cfg);
}

inline gq::GenScalar sc(const std::string& text, long order = 8) {
    return std::get<gq::GenScalar>(ev(text, order));
}

inline gq::GenQuaternion qt(const std::string& text, long order = 8) {
    gq::Value v = ev(text, order);
    if (auto* s = std::get_if<gq::GenScalar>(&v)) return gq::GenQuaternion::from_scalar(*s);
    return std::get<gq::GenQuaternion>(v);
}

inline gq::BlockSet bs(const std::string& text) { return gq::BlockSet::parse(text); }

inline gq::Rat rat(const std::string& text) { return gq::Rat::parse(text); }

inline const gq::BlockSet evens = gq::BlockSet::parse("pre=;per=10");
inline const gq::BlockSet odds = gq::BlockSet::parse("pre=;per=01");

/// Residual symbolically beyond order n on every branch: stored exponents and
/// any precision tag all exceed n, with exact zero coefficients below.
inline bool higher_order_than(const gq::GenScalar& x, const gq::Rat& n) {
    for (const auto& b : x.branches())
        if (!b.germ.is_higher_order_than(n)) return false;
    return true;
}

inline bool higher_order_than(const gq::GenQuaternion& x, const gq::Rat& n) {
    for (std::size_t c = 0; c < 4; ++c)
        if (!higher_order_than(x.component(c), n)) return false;
    return true;
}

template <typename Fn>
gq::ErrKind error_kind(Fn&& fn) {
    try {
        fn();
    } catch (const gq::Error& e) {
        return e.kind();
    }
    throw std::runtime_error("expected an error");
}

}  // namespace gqt
