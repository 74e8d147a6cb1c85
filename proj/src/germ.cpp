#include "gq/germ.hpp"

#include <cmath>
#include <cstdio>
#include <map>
#include <utility>

#include "gq/error.hpp"

namespace gq {

Coeff Coeff::approximate(double v) {
    Coeff c;
    c.approx_ = true;
    c.value_ = v;
    return c;
}

Coeff Coeff::operator-() const {
    return approx_ ? approximate(-value_) : Coeff(-exact_);
}

Coeff Coeff::operator+(const Coeff& o) const {
    if (!approx_ && !o.approx_) return Coeff(exact_ + o.exact_);
    return approximate(to_double() + o.to_double());
}

Coeff Coeff::operator*(const Coeff& o) const {
    if (!approx_ && !o.approx_) return Coeff(exact_ * o.exact_);
    return approximate(to_double() * o.to_double());
}

Coeff Coeff::inverse() const {
    if (is_zero()) throw Error(ErrKind::ZeroInput, "coefficient inverse of zero");
    if (!approx_) return Coeff(Rat(1) / exact_);
    return approximate(1.0 / value_);
}

Coeff Coeff::sqrt() const {
    if (!approx_) {
        if (auto r = exact_.sqrt_exact()) return Coeff(*r);
        return approximate(std::sqrt(exact_.to_double()));
    }
    return approximate(std::sqrt(value_));
}

std::string Coeff::to_string() const {
    if (!approx_) return exact_.to_string();
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.17g", value_);
    return std::string(buf) + "~";
}

namespace {

using TermMap = std::map<Rat, Coeff>;

void add_term(TermMap& m, const Rat& e, const Coeff& c) {
    if (c.is_zero()) return;
    auto it = m.find(e);
    if (it == m.end()) {
        m.emplace(e, c);
        return;
    }
    Coeff s = it->second + c;
    if (s.is_zero())
        m.erase(it);
    else
        it->second = s;
}

std::vector<GermTerm> map_to_terms(const TermMap& m) {
    std::vector<GermTerm> out;
    out.reserve(m.size());
    for (const auto& [e, c] : m) out.push_back({e, c});
    return out;
}

/// Term-list product keeping only exponents <= bound; the smallest dropped
/// exponent is folded into *undetermined.
std::vector<GermTerm> mul_keep_leq(const std::vector<GermTerm>& a, const std::vector<GermTerm>& b,
                                   const Rat& bound, std::optional<Rat>& undetermined) {
    TermMap m;
    for (const auto& ta : a)
        for (const auto& tb : b) {
            Rat e = ta.exp + tb.exp;
            if (e > bound)
                undetermined = min_opt(undetermined, e);
            else
                add_term(m, e, ta.coeff * tb.coeff);
        }
    return map_to_terms(m);
}

}  // namespace

PuiseuxGerm PuiseuxGerm::constant(const Rat& c) {
    return make({{Rat(0), Coeff(c)}}, std::nullopt);
}

PuiseuxGerm PuiseuxGerm::monomial(const Rat& exp, const Coeff& c) {
    return make({{exp, c}}, std::nullopt);
}

PuiseuxGerm PuiseuxGerm::o_term(const Rat& n) { return make({}, n); }

PuiseuxGerm PuiseuxGerm::make(std::vector<GermTerm> terms, std::optional<Rat> order) {
    TermMap m;
    for (auto& t : terms) add_term(m, t.exp, t.coeff);
    PuiseuxGerm g;
    for (auto& [e, c] : m) {
        if (order && e >= *order) continue;  // beyond the precision bound
        g.terms_.push_back({e, c});
    }
    g.order_ = std::move(order);
    return g;
}

bool PuiseuxGerm::has_approx() const {
    for (const auto& t : terms_)
        if (t.coeff.is_approx()) return true;
    return false;
}

std::optional<GermTerm> PuiseuxGerm::leading() const {
    if (!terms_.empty()) return terms_.front();
    if (order_)
        throw Error(ErrKind::IndeterminateAtPrecision,
                    "germ is empty modulo O(e^" + order_->to_string() +
                        "); vanishing cannot be certified");
    return std::nullopt;
}

PuiseuxGerm PuiseuxGerm::operator-() const {
    PuiseuxGerm g;
    g.terms_.reserve(terms_.size());
    for (const auto& t : terms_) g.terms_.push_back({t.exp, -t.coeff});
    g.order_ = order_;
    return g;
}

PuiseuxGerm PuiseuxGerm::operator+(const PuiseuxGerm& o) const {
    std::vector<GermTerm> all = terms_;
    all.insert(all.end(), o.terms_.begin(), o.terms_.end());
    return make(std::move(all), min_opt(order_, o.order_));
}

PuiseuxGerm PuiseuxGerm::operator*(const PuiseuxGerm& o) const {
    if (is_exact_zero() || o.is_exact_zero()) return zero();
    std::optional<Rat> va = terms_.empty() ? std::nullopt : std::optional<Rat>(terms_.front().exp);
    std::optional<Rat> vb = o.terms_.empty() ? std::nullopt : std::optional<Rat>(o.terms_.front().exp);
    // Error terms: F*O(eps^{N_g}), G*O(eps^{N_f}) and O(eps^{N_f+N_g}).
    std::optional<Rat> n_out =
        min_opt(min_opt(add_opt(va, o.order_), add_opt(vb, order_)), add_opt(order_, o.order_));
    std::vector<GermTerm> prod;
    prod.reserve(terms_.size() * o.terms_.size());
    for (const auto& ta : terms_)
        for (const auto& tb : o.terms_) {
            Rat e = ta.exp + tb.exp;
            if (n_out && e >= *n_out) continue;  // beyond the precision bound anyway
            prod.push_back({std::move(e), ta.coeff * tb.coeff});
        }
    return make(std::move(prod), std::move(n_out));
}

PuiseuxGerm PuiseuxGerm::pow(unsigned n) const {
    PuiseuxGerm acc = one();
    for (unsigned i = 0; i < n; ++i) acc = acc * *this;
    return acc;
}

PuiseuxGerm PuiseuxGerm::invert(const Rat& target_order) const {
    auto lead = leading();
    if (!lead) throw Error(ErrKind::NotInvertible, "the exact zero germ has no inverse");
    const Rat v = lead->exp;
    const Coeff cinv = lead->coeff.inverse();

    // f = c eps^v (1 + u); invert the unit part with a Neumann series.
    std::vector<GermTerm> neg_u;
    for (std::size_t i = 1; i < terms_.size(); ++i)
        neg_u.push_back({terms_[i].exp - v, -(terms_[i].coeff * cinv)});

    std::optional<Rat> undetermined;  // smallest relative exponent not pinned down
    if (order_) undetermined = *order_ - v;

    TermMap acc;
    acc.emplace(Rat(0), Coeff(Rat(1)));
    if (!neg_u.empty()) {
        const Rat delta = neg_u.front().exp;
        std::vector<GermTerm> pw = {{Rat(0), Coeff(Rat(1))}};
        Rat val(0);
        while (true) {
            val += delta;  // lower bound for the next power's valuation
            if (val > target_order) {
                undetermined = min_opt(undetermined, val);
                break;
            }
            pw = mul_keep_leq(pw, neg_u, target_order, undetermined);
            if (pw.empty()) break;
            val = pw.front().exp;
            for (const auto& t : pw) add_term(acc, t.exp, t.coeff);
        }
    }

    std::vector<GermTerm> out;
    out.reserve(acc.size());
    for (const auto& [e, c] : acc) out.push_back({e - v, c * cinv});
    std::optional<Rat> tag;
    if (undetermined) tag = *undetermined - v;
    return make(std::move(out), std::move(tag));
}

PuiseuxGerm PuiseuxGerm::sqrt(const Rat& target_order) const {
    if (is_exact_zero()) return zero();
    auto lead = leading();
    if (lead->coeff.sign() <= 0)
        throw Error(ErrKind::NotQPositiveLeading,
                    "square root needs a positive leading coefficient, got " +
                        lead->coeff.to_string());
    const Rat v = lead->exp;
    const Coeff root = lead->coeff.sqrt();
    const Coeff cinv = lead->coeff.inverse();

    // f = c eps^v (1 + u); take the binomial series of (1 + u)^{1/2}.
    // Residuals are verified at the squared level, so the relative cutoff is
    // target_order - v.
    std::vector<GermTerm> u;
    for (std::size_t i = 1; i < terms_.size(); ++i)
        u.push_back({terms_[i].exp - v, terms_[i].coeff * cinv});
    const Rat cutoff = target_order - v;

    std::optional<Rat> undetermined;
    if (order_) undetermined = *order_ - v;

    TermMap acc;
    acc.emplace(Rat(0), Coeff(Rat(1)));
    if (!u.empty()) {
        const Rat delta = u.front().exp;
        std::vector<GermTerm> pw = {{Rat(0), Coeff(Rat(1))}};
        Rat val(0);
        Rat binom(1);
        long n = 0;
        while (true) {
            val += delta;
            ++n;
            binom = binom * (Rat::of(1, 2) - Rat(n - 1)) / Rat(n);
            if (val > cutoff) {
                undetermined = min_opt(undetermined, val);
                break;
            }
            pw = mul_keep_leq(pw, u, cutoff, undetermined);
            if (pw.empty()) break;
            val = pw.front().exp;
            const Coeff b(binom);
            for (const auto& t : pw) add_term(acc, t.exp, t.coeff * b);
        }
    }

    const Rat half_v = v / Rat(2);
    std::vector<GermTerm> out;
    out.reserve(acc.size());
    for (const auto& [e, c] : acc) out.push_back({half_v + e, c * root});
    std::optional<Rat> tag;
    if (undetermined) tag = half_v + *undetermined;
    return make(std::move(out), std::move(tag));
}

PuiseuxGerm PuiseuxGerm::truncated(const Rat& order) const {
    return make(terms_, min_opt(order_, order));
}

double PuiseuxGerm::eval(double eps) const {
    double sum = 0.0;
    for (const auto& t : terms_) sum += t.coeff.to_double() * std::pow(eps, t.exp.to_double());
    return sum;
}

bool PuiseuxGerm::is_higher_order_than(const Rat& n) const {
    if (order_ && !(*order_ > n)) return false;
    return terms_.empty() || terms_.front().exp > n;
}

bool PuiseuxGerm::equals(const PuiseuxGerm& o) const {
    if (has_approx() || o.has_approx())
        throw Error(ErrKind::NotExact,
                    "equality of approx-tagged germs is refused, not answered numerically");
    if (order_.has_value() != o.order_.has_value()) return false;
    if (order_ && *order_ != *o.order_) return false;
    if (terms_.size() != o.terms_.size()) return false;
    for (std::size_t i = 0; i < terms_.size(); ++i)
        if (terms_[i].exp != o.terms_[i].exp ||
            terms_[i].coeff.exact() != o.terms_[i].coeff.exact())
            return false;
    return true;
}

namespace {

std::string exp_text(const Rat& r) {
    if (r.is_integer() && r.sign() >= 0) return r.to_string();
    return "(" + r.to_string() + ")";
}

}  // namespace

std::string PuiseuxGerm::to_string() const {
    std::string s;
    for (const auto& t : terms_) {
        bool neg = t.coeff.sign() < 0;
        std::string mag = (-t.coeff).to_string();
        std::string pos = t.coeff.to_string();
        std::string body;
        if (t.exp.is_zero()) {
            body = neg ? mag : pos;
        } else {
            std::string c = neg ? mag : pos;
            body = (c == "1") ? "" : c + "*";
            body += "e^" + exp_text(t.exp);
        }
        if (s.empty())
            s = (neg ? "-" : "") + body;
        else
            s += (neg ? " - " : " + ") + body;
    }
    if (order_) {
        std::string o = "O(e^" + exp_text(*order_) + ")";
        s = s.empty() ? o : s + " + " + o;
    }
    return s.empty() ? "0" : s;
}

}  // namespace gq
