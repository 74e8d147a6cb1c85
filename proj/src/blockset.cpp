#include "gq/blockset.hpp"

#include <cmath>
#include <numeric>

#include "gq/error.hpp"

namespace gq {

namespace {

bool valid_bits(const std::string& s) {
    for (char c : s)
        if (c != '0' && c != '1') return false;
    return true;
}

std::string minimize_period(const std::string& per) {
    std::size_t n = per.size();
    for (std::size_t d = 1; d < n; ++d) {
        if (n % d != 0) continue;
        bool ok = true;
        for (std::size_t i = d; i < n && ok; ++i) ok = per[i] == per[i % d];
        if (ok) return per.substr(0, d);
    }
    return per;
}

}  // namespace

BlockSet BlockSet::from_bits(std::string pre, std::string per) {
    if (per.empty() || !valid_bits(pre) || !valid_bits(per))
        throw Error(ErrKind::BadValue, "block set needs bit strings and a nonempty period");
    BlockSet b;
    b.pre_ = std::move(pre);
    b.per_ = std::move(per);
    b.canonicalize();
    return b;
}

void BlockSet::canonicalize() {
    per_ = minimize_period(per_);
    // The preperiod bit m-1 can join the cycle when it matches the value the
    // period already forces there; rotating keeps the pattern aligned.
    while (!pre_.empty() && pre_.back() == per_.back()) {
        per_ = per_.back() + per_.substr(0, per_.size() - 1);
        pre_.pop_back();
    }
}

BlockSet BlockSet::parse(std::string_view text) {
    auto semi = text.find(';');
    if (text.substr(0, 4) != "pre=" || semi == std::string_view::npos ||
        text.substr(semi + 1, 4) != "per=")
        throw Error(ErrKind::BadValue, "block set literal must look like pre=<bits>;per=<bits>");
    std::string pre(text.substr(4, semi - 4));
    std::string per(text.substr(semi + 5));
    return from_bits(std::move(pre), std::move(per));
}

BlockSet BlockSet::combine(const BlockSet& a, const BlockSet& b, bool (*op)(bool, bool)) {
    std::size_t m = std::max(a.pre_.size(), b.pre_.size());
    std::size_t p = std::lcm(a.per_.size(), b.per_.size());
    std::string pre(m, '0'), per(p, '0');
    for (std::size_t k = 0; k < m; ++k)
        pre[k] = op(a.contains(k), b.contains(k)) ? '1' : '0';
    for (std::size_t i = 0; i < p; ++i)
        per[i] = op(a.contains(m + i), b.contains(m + i)) ? '1' : '0';
    return from_bits(std::move(pre), std::move(per));
}

BlockSet BlockSet::complement() const {
    std::string pre = pre_, per = per_;
    for (char& c : pre) c = c == '1' ? '0' : '1';
    for (char& c : per) c = c == '1' ? '0' : '1';
    return from_bits(std::move(pre), std::move(per));
}

BlockSet BlockSet::unite(const BlockSet& o) const {
    return combine(*this, o, [](bool x, bool y) { return x || y; });
}

BlockSet BlockSet::intersect(const BlockSet& o) const {
    return combine(*this, o, [](bool x, bool y) { return x && y; });
}

BlockSet BlockSet::difference(const BlockSet& o) const {
    return combine(*this, o, [](bool x, bool y) { return x && !y; });
}

BlockSet BlockSet::periodic_core() const {
    if (pre_.empty()) return *this;
    std::size_t m = pre_.size(), p = per_.size();
    std::string per(p, '0');
    // core(k) = per[(k - m) mod p] for every k, i.e. the tail pattern
    // continued backwards over the preperiod.
    for (std::size_t i = 0; i < p; ++i) per[i] = per_[(i + p - (m % p)) % p];
    return from_bits("", std::move(per));
}

std::vector<double> BlockSet::sample_epsilons(std::size_t count) const {
    if (!accumulates())
        throw Error(ErrKind::NotAccumulating,
                    "sampling needs a set that accumulates at 0; " + to_string() + " is finite");
    std::vector<double> eps;
    eps.reserve(count);
    for (std::size_t k = 0; eps.size() < count; ++k)
        if (contains(k)) eps.push_back(block_midpoint(k));
    return eps;
}

std::vector<std::size_t> BlockSet::blocks_in(std::size_t lo, std::size_t hi) const {
    std::vector<std::size_t> ks;
    for (std::size_t k = lo; k <= hi; ++k)
        if (contains(k)) ks.push_back(k);
    return ks;
}

double block_midpoint(std::size_t k) { return std::ldexp(3.0, -static_cast<int>(k) - 2); }

std::size_t block_of(double eps) {
    if (!(eps > 0.0) || eps > 1.0) throw Error(ErrKind::BadValue, "eps must lie in (0,1]");
    auto k = static_cast<long>(std::floor(-std::log2(eps)));
    if (k < 0) k = 0;
    // Guard the boundary eps == 2^{-k}, which belongs to block k.
    while (eps <= std::ldexp(1.0, -static_cast<int>(k) - 1)) ++k;
    return static_cast<std::size_t>(k);
}

const char* err_name(ErrKind k) {
    switch (k) {
        case ErrKind::NotAccumulating: return "NotAccumulating";
        case ErrKind::IndeterminateAtPrecision: return "IndeterminateAtPrecision";
        case ErrKind::NotInvertible: return "NotInvertible";
        case ErrKind::ZeroInput: return "ZeroInput";
        case ErrKind::IsUnit: return "IsUnit";
        case ErrKind::NotQPositive: return "NotQPositive";
        case ErrKind::NotQPositiveLeading: return "NotQPositiveLeading";
        case ErrKind::NotExact: return "NotExact";
        case ErrKind::BadValue: return "BadValue";
        case ErrKind::ParseError: return "ParseError";
        case ErrKind::EvalError: return "EvalError";
    }
    return "Error";
}

}  // namespace gq
