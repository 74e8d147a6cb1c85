#include "gq/generate.hpp"

#include <algorithm>
#include <set>

namespace gq {

long ElementGen::pick(long lo, long hi) {
    return std::uniform_int_distribution<long>(lo, hi)(rng_);
}

Rat ElementGen::coefficient() {
    long num = pick(1, 20) * (pick(0, 1) ? 1 : -1);
    long den = pick(1, 9);
    return Rat::of(num, den);
}

Rat ElementGen::exponent() { return Rat::of(pick(-6, 6), 2); }

BlockSet ElementGen::blockset(int max_period) {
    long p = pick(1, max_period);
    std::string per(static_cast<std::size_t>(p), '0');
    for (char& c : per) c = pick(0, 1) ? '1' : '0';
    return BlockSet::from_bits("", std::move(per));
}

std::vector<BlockSet> ElementGen::partition(int max_parts, int max_period) {
    long p = pick(1, max_period);
    long parts = pick(1, std::min<long>(max_parts, p));
    std::vector<std::string> pers(static_cast<std::size_t>(parts),
                                  std::string(static_cast<std::size_t>(p), '0'));
    for (long r = 0; r < p; ++r) pers[static_cast<std::size_t>(pick(0, parts - 1))][static_cast<std::size_t>(r)] = '1';
    std::vector<BlockSet> out;
    for (auto& s : pers) {
        BlockSet b = BlockSet::from_bits("", std::move(s));
        if (!b.is_empty()) out.push_back(std::move(b));
    }
    return out;
}

PuiseuxGerm ElementGen::germ(int max_terms) {
    long shape = pick(0, 9);
    if (shape < 2) return PuiseuxGerm::zero();
    if (shape < 4) return PuiseuxGerm::one();
    long nterms = pick(1, max_terms);
    std::set<Rat> exps;
    while (static_cast<long>(exps.size()) < nterms) exps.insert(exponent());
    std::vector<GermTerm> terms;
    for (const Rat& e : exps) terms.push_back({e, Coeff(coefficient())});
    return PuiseuxGerm::make(std::move(terms), std::nullopt);
}

GenScalar ElementGen::scalar() {
    std::vector<BlockSet> parts = partition();
    std::vector<ScalarBranch> branches;
    branches.reserve(parts.size());
    for (auto& p : parts) branches.push_back({std::move(p), germ()});
    return GenScalar::piecewise(std::move(branches));
}

GenScalar ElementGen::nonzero_scalar() {
    for (;;) {
        GenScalar x = scalar();
        if (!x.is_exact_zero()) return x;
    }
}

GenScalar ElementGen::unit_scalar() {
    for (;;) {
        GenScalar x = scalar();
        if (x.is_unit()) return x;
    }
}

GenQuaternion ElementGen::quaternion() {
    GenScalar c[4];
    for (auto& s : c) s = pick(0, 2) == 0 ? GenScalar::zero() : scalar();
    return GenQuaternion(c[0], c[1], c[2], c[3]);
}

GenQuaternion ElementGen::nonzero_quaternion() {
    for (;;) {
        GenQuaternion q = quaternion();
        if (!q.is_exact_zero()) return q;
    }
}

GenQuaternion ElementGen::unit_quaternion() {
    for (;;) {
        GenQuaternion q = quaternion();
        if (q.is_unit()) return q;
    }
}

FgIdeal ElementGen::proper_ideal(int max_gens) {
    // Confine every generator to a support whose complement accumulates.
    BlockSet s;
    for (;;) {
        s = blockset();
        if (!s.is_empty() && !s.is_full()) break;
    }
    GenScalar mask = GenScalar::chi(s);
    long n = pick(1, max_gens);
    std::vector<GenQuaternion> gens;
    for (long i = 0; i < n; ++i) gens.push_back(mask * quaternion());
    return FgIdeal::span(std::move(gens));
}

}  // namespace gq
