#include "gq/scalar.hpp"

#include <algorithm>
#include <cmath>

#include "gq/error.hpp"

namespace gq {

GenScalar IdempotentScalar::to_scalar() const { return GenScalar::chi(set_); }

std::string IdempotentScalar::to_string() const { return to_scalar().to_string(); }

GenScalar::GenScalar(PuiseuxGerm whole) {
    branches_.push_back({BlockSet::full_set(), std::move(whole)});
}

GenScalar GenScalar::chi(const BlockSet& a) {
    BlockSet core = a.periodic_core();
    if (core.is_empty()) return zero();
    if (core.is_full()) return one();
    std::vector<ScalarBranch> bs;
    bs.push_back({core, PuiseuxGerm::one()});
    bs.push_back({core.complement(), PuiseuxGerm::zero()});
    return canonical(std::move(bs));
}

GenScalar GenScalar::piecewise(std::vector<ScalarBranch> branches) {
    if (branches.empty()) throw Error(ErrKind::BadValue, "a scalar needs at least one branch");
    BlockSet seen;
    for (const auto& b : branches) {
        if (!seen.intersect(b.set).is_empty())
            throw Error(ErrKind::BadValue, "branch sets overlap at " + b.set.to_string());
        seen = seen.unite(b.set);
    }
    if (!seen.is_full())
        throw Error(ErrKind::BadValue, "branch sets do not cover N (missing " +
                                           seen.complement().to_string() + ")");
    return canonical(std::move(branches));
}

GenScalar GenScalar::canonical(std::vector<ScalarBranch> branches) {
    // Merge branches whose exact germs coincide. Approx-tagged germs are
    // never compared, hence never merged.
    std::vector<ScalarBranch> merged;
    for (auto& b : branches) {
        bool joined = false;
        if (!b.germ.has_approx()) {
            for (auto& m : merged) {
                if (!m.germ.has_approx() && m.germ.equals(b.germ)) {
                    m.set = m.set.unite(b.set);
                    joined = true;
                    break;
                }
            }
        }
        if (!joined) merged.push_back(std::move(b));
    }
    // Finite blocks cannot affect the germ at 0: replace every part by its
    // periodic core. The cores of a partition-mod-finite partition N exactly.
    std::vector<ScalarBranch> cored;
    for (auto& b : merged) {
        BlockSet core = b.set.periodic_core();
        if (core.is_empty()) continue;
        cored.push_back({std::move(core), std::move(b.germ)});
    }
    std::sort(cored.begin(), cored.end(),
              [](const ScalarBranch& a, const ScalarBranch& b) { return a.set < b.set; });
    GenScalar x = zero();
    x.branches_ = std::move(cored);
    return x;
}

const PuiseuxGerm& GenScalar::germ_at(std::size_t k) const {
    for (const auto& b : branches_)
        if (b.set.contains(k)) return b.germ;
    throw Error(ErrKind::BadValue, "internal: block not covered by any branch");
}

GenScalar GenScalar::operator-() const {
    std::vector<ScalarBranch> out;
    out.reserve(branches_.size());
    for (const auto& b : branches_) out.push_back({b.set, -b.germ});
    return canonical(std::move(out));
}

namespace {

template <typename GermOp>
GenScalar pointwise(const GenScalar& a, const GenScalar& b, GermOp op) {
    std::vector<ScalarBranch> out;
    for (const auto& ba : a.branches())
        for (const auto& bb : b.branches()) {
            BlockSet s = ba.set.intersect(bb.set);
            if (s.is_empty()) continue;
            out.push_back({std::move(s), op(ba.germ, bb.germ)});
        }
    return GenScalar::piecewise(std::move(out));
}

}  // namespace

GenScalar GenScalar::operator+(const GenScalar& o) const {
    return pointwise(*this, o, [](const PuiseuxGerm& f, const PuiseuxGerm& g) { return f + g; });
}

GenScalar GenScalar::operator*(const GenScalar& o) const {
    return pointwise(*this, o, [](const PuiseuxGerm& f, const PuiseuxGerm& g) { return f * g; });
}

GenScalar GenScalar::pow(unsigned n) const {
    GenScalar acc = one();
    for (unsigned i = 0; i < n; ++i) acc = acc * *this;
    return acc;
}

bool GenScalar::has_approx() const {
    for (const auto& b : branches_)
        if (b.germ.has_approx()) return true;
    return false;
}

bool GenScalar::is_exact_zero() const {
    for (const auto& b : branches_)
        if (!b.germ.is_exact_zero()) return false;
    return true;
}

void GenScalar::require_exact(const char* op) const {
    if (has_approx())
        throw Error(ErrKind::NotExact,
                    std::string(op) + " is a decision and is refused on approx-tagged input");
}

bool GenScalar::equals(const GenScalar& o) const {
    require_exact("equality");
    o.require_exact("equality");
    if (branches_.size() != o.branches_.size()) return false;
    for (std::size_t i = 0; i < branches_.size(); ++i)
        if (branches_[i].set != o.branches_[i].set ||
            !branches_[i].germ.equals(o.branches_[i].germ))
            return false;
    return true;
}

BlockSet GenScalar::support() const {
    BlockSet s;
    for (const auto& b : branches_) {
        if (b.germ.terms().empty() && b.germ.order())
            throw Error(ErrKind::IndeterminateAtPrecision,
                        "branch " + b.set.to_string() + " is empty modulo O(e^" +
                            b.germ.order()->to_string() + ")");
        if (!b.germ.terms().empty()) s = s.unite(b.set);
    }
    return s;
}

bool GenScalar::is_unit() const {
    require_exact("is-unit");
    return zero_set().is_empty();
}

GenScalar GenScalar::invert(const Rat& target_order) const {
    if (is_exact_zero()) throw Error(ErrKind::ZeroInput, "0 has no inverse");
    BlockSet z = zero_set();
    if (!z.is_empty()) {
        IdempotentScalar e(z);
        throw Error(ErrKind::NotInvertible,
                    "element vanishes on an accumulating branch; annihilated by " + e.to_string())
            .with_witness(z.to_string());
    }
    std::vector<ScalarBranch> out;
    out.reserve(branches_.size());
    for (const auto& b : branches_) out.push_back({b.set, b.germ.invert(target_order)});
    return canonical(std::move(out));
}

GenScalar GenScalar::pseudo_invert(const Rat& target_order) const {
    std::vector<ScalarBranch> out;
    out.reserve(branches_.size());
    for (const auto& b : branches_) {
        if (b.germ.terms().empty() && b.germ.order())
            throw Error(ErrKind::IndeterminateAtPrecision,
                        "branch " + b.set.to_string() + " undetermined at its precision");
        out.push_back({b.set, b.germ.terms().empty() ? PuiseuxGerm::zero()
                                                     : b.germ.invert(target_order)});
    }
    return canonical(std::move(out));
}

IdempotentScalar GenScalar::annihilator_idempotent() const {
    require_exact("annihilator-idempotent");
    if (is_exact_zero()) throw Error(ErrKind::ZeroInput, "0 is annihilated by everything");
    BlockSet z = zero_set();
    if (z.is_empty())
        throw Error(ErrKind::IsUnit, "units have no nonzero annihilating idempotent");
    return IdempotentScalar(z);
}

std::optional<Rat> GenScalar::valuation() const {
    require_exact("valuation");
    std::optional<Rat> v;
    for (const auto& b : branches_) {
        auto lead = b.germ.leading();  // throws IndeterminateAtPrecision
        if (!lead) continue;           // zero germ contributes +infinity
        v = min_opt(v, lead->exp);
    }
    return v;
}

double GenScalar::sharp_norm() const {
    auto v = valuation();
    return v ? std::exp(-v->to_double()) : 0.0;
}

bool GenScalar::is_qpositive() const {
    require_exact("is-qpositive");
    for (const auto& b : branches_) {
        auto lead = b.germ.leading();
        if (lead && lead->coeff.sign() < 0) return false;
    }
    return true;
}

GenScalar GenScalar::abs() const {
    require_exact("abs");
    std::vector<ScalarBranch> out;
    out.reserve(branches_.size());
    for (const auto& b : branches_) {
        auto lead = b.germ.leading();
        out.push_back({b.set, (lead && lead->coeff.sign() < 0) ? -b.germ : b.germ});
    }
    return canonical(std::move(out));
}

GenScalar GenScalar::sqrt(const Rat& target_order) const {
    if (!is_qpositive())
        throw Error(ErrKind::NotQPositive, "square roots exist for q-positive scalars only");
    std::vector<ScalarBranch> out;
    out.reserve(branches_.size());
    for (const auto& b : branches_) out.push_back({b.set, b.germ.sqrt(target_order)});
    return canonical(std::move(out));
}

bool GenScalar::associates_zero() const {
    require_exact("associates-zero");
    for (const auto& b : branches_) {
        auto lead = b.germ.leading();
        if (lead && !(lead->exp > Rat(0))) return false;
    }
    return true;
}

std::optional<Rat> GenScalar::shadow() const {
    require_exact("shadow");
    std::optional<Rat> a;
    for (const auto& b : branches_) {
        auto lead = b.germ.leading();
        Rat here(0);
        if (lead) {
            if (lead->exp.sign() < 0) return std::nullopt;  // unbounded branch
            if (lead->exp.is_zero()) here = lead->coeff.exact();
        }
        if (!a)
            a = here;
        else if (*a != here)
            return std::nullopt;  // branch constants disagree
    }
    return a;
}

IdempotentScalar GenScalar::exchange_idempotent() const {
    require_exact("exchange-idempotent");
    return IdempotentScalar(zero_set());
}

GenScalar GenScalar::unit_within_radius(const Rat& s) const {
    require_exact("unit-within-radius");
    BlockSet z = zero_set();
    if (z.is_empty()) return *this;
    return *this + alpha(s) * chi(z);
}

std::optional<BlockSet> GenScalar::as_idempotent() const {
    require_exact("is-idempotent");
    BlockSet a;
    for (const auto& b : branches_) {
        if (b.germ.is_exact_zero()) continue;
        if (b.germ.equals(PuiseuxGerm::one())) {
            a = a.unite(b.set);
            continue;
        }
        return std::nullopt;
    }
    return a;
}

std::string GenScalar::to_string() const {
    if (branches_.size() == 1) return branches_.front().germ.to_string();
    std::string s = "{";
    for (std::size_t i = 0; i < branches_.size(); ++i) {
        if (i) s += " | ";
        s += branches_[i].set.to_string() + " : " + branches_[i].germ.to_string();
    }
    return s + "}";
}

}  // namespace gq
