#include "gq/ideal.hpp"

#include "gq/error.hpp"

namespace gq {

FgIdeal::FgIdeal(RingTag ring, std::vector<GenQuaternion> gens)
    : ring_(ring), gens_(std::move(gens)), principal_(GenScalar::zero()) {
    if (gens_.empty()) throw Error(ErrKind::BadValue, "an ideal needs at least one generator");
    for (const auto& g : gens_)
        if (g.has_approx())
            throw Error(ErrKind::NotExact, "ideal normal forms need exact generators");
    for (const auto& g : gens_) principal_ = principal_ + g.normsq();
    support_ = principal_.support();
}

FgIdeal FgIdeal::span_scalars(std::vector<GenScalar> gens) {
    std::vector<GenQuaternion> qs;
    qs.reserve(gens.size());
    for (auto& g : gens) qs.push_back(GenQuaternion::from_scalar(std::move(g)));
    return FgIdeal(RingTag::scalar, std::move(qs));
}

FgIdeal FgIdeal::span(std::vector<GenQuaternion> gens) {
    return FgIdeal(RingTag::quaternion, std::move(gens));
}

bool FgIdeal::contains_element(const GenQuaternion& x) const {
    return x.normsq().support().subset_of(support_);
}

bool FgIdeal::contains_element(const GenScalar& x) const {
    return contains_element(GenQuaternion::from_scalar(x));
}

FgIdeal FgIdeal::norm_ideal() const { return span_scalars({principal_}); }

bool FgIdeal::idempotency_check() const {
    std::vector<GenQuaternion> products;
    products.reserve(gens_.size() * gens_.size());
    for (const auto& a : gens_)
        for (const auto& b : gens_) products.push_back(a * b);
    FgIdeal squared(ring_, std::move(products));
    return squared.same_ideal(*this);
}

bool FgIdeal::radical_membership(const GenQuaternion& x, unsigned n) const {
    GenQuaternion p = GenQuaternion::from_scalar(GenScalar::one());
    for (unsigned i = 0; i < n; ++i) p = p * x;
    return !contains_element(p) || contains_element(x);
}

GenQuaternion FgIdeal::membership_witness(const GenQuaternion& x, const Rat& target_order) const {
    if (!contains_element(x))
        throw Error(ErrKind::BadValue, "no membership witness: support containment fails");
    if (x.is_exact_zero()) return GenQuaternion();
    // Invert deep enough that x * (residual of g * g^-) still clears the
    // requested order when x has negative valuation.
    Rat working = target_order;
    if (auto v = x.valuation(); v && v->sign() < 0) working = working - *v;
    GenScalar pinv = principal_.pseudo_invert(working);
    GenQuaternion q = pinv * x;
    return q;
}

std::vector<GenQuaternion> FgIdeal::bezout_witnesses() const {
    std::vector<GenQuaternion> ws;
    ws.reserve(gens_.size());
    for (const auto& a : gens_) ws.push_back(a.conj());
    return ws;
}

std::string FgIdeal::to_string() const {
    std::string s = ring_ == RingTag::scalar ? "ideal<R>(" : "ideal<H>(";
    for (std::size_t i = 0; i < gens_.size(); ++i) {
        if (i) s += ", ";
        s += gens_[i].to_string();
    }
    s += ") = <" + principal_.to_string() + "> on " + support_.to_string();
    return s;
}

}  // namespace gq
