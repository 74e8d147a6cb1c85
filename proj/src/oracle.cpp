#include "gq/oracle.hpp"

#include <cmath>
#include <functional>
#include <limits>

#include "gq/generate.hpp"

namespace gq {

const char* verdict_name(Verdict v) {
    switch (v) {
        case Verdict::confirm: return "confirm";
        case Verdict::refute: return "refute";
        case Verdict::inconclusive: return "inconclusive";
    }
    return "?";
}

namespace {

constexpr double kAssocThreshold = 1e-3;
constexpr double kTrendSlack = 1.05;  // tolerated per-step wobble factor
constexpr double kApproxRelMargin = 1e-6;

double pow_eps(double eps, const Rat& r) { return std::pow(eps, r.to_double()); }

using AbsEval = std::function<double(double)>;

OracleReport unit_impl(const AbsEval& absval, bool approx_input, const Rat& r, std::size_t k_max,
                       std::string decision) {
    OracleReport rep;
    rep.decision = std::move(decision);
    double margin = std::numeric_limits<double>::infinity();
    double rel_min = std::numeric_limits<double>::infinity();
    for (std::size_t k = kOracleFirstBlock; k <= k_max; ++k) {
        double eps = block_midpoint(k);
        double v = absval(eps);
        rep.samples.push_back({eps, v});
        double thr = pow_eps(eps, r);
        double slack = v - thr;
        if (slack < margin) margin = slack;
        double rel = std::abs(slack) / std::max({v, thr, 1e-300});
        if (rel < rel_min) rel_min = rel;
        if (slack < 0 && !rep.counterexample) rep.counterexample = Sample{eps, v};
    }
    rep.margin = margin;
    rep.verdict = rep.counterexample ? Verdict::refute : Verdict::confirm;
    if (approx_input && rel_min < kApproxRelMargin) rep.verdict = Verdict::inconclusive;
    return rep;
}

OracleReport assoc_impl(const AbsEval& absval, const std::vector<BlockSet>& parts,
                        bool approx_input, std::size_t k_max, std::string decision) {
    OracleReport rep;
    rep.decision = std::move(decision);
    double margin = std::numeric_limits<double>::infinity();
    double scale = kAssocThreshold;
    for (const auto& part : parts) {
        auto ks = part.blocks_in(kOracleFirstBlock, k_max);
        double prev = 0.0;
        bool have_prev = false;
        double last = 0.0;
        for (std::size_t k : ks) {
            double eps = block_midpoint(k);
            double v = absval(eps);
            rep.samples.push_back({eps, v});
            scale = std::max(scale, v);
            if (have_prev) {
                double slack = kTrendSlack * prev + 1e-12 - v;
                if (slack < margin) margin = slack;
                if (slack < 0 && !rep.counterexample) rep.counterexample = Sample{eps, v};
            }
            prev = v;
            have_prev = true;
            last = v;
        }
        if (ks.empty()) continue;
        double slack = kAssocThreshold - last;
        if (slack < margin) margin = slack;
        if (slack <= 0 && !rep.counterexample)
            rep.counterexample = Sample{block_midpoint(ks.back()), last};
    }
    rep.margin = margin;
    rep.verdict = rep.counterexample ? Verdict::refute : Verdict::confirm;
    if (approx_input && std::abs(margin) / scale < kApproxRelMargin)
        rep.verdict = Verdict::inconclusive;
    return rep;
}

std::vector<BlockSet> scalar_parts(const GenScalar& x) {
    std::vector<BlockSet> parts;
    parts.reserve(x.branches().size());
    for (const auto& b : x.branches()) parts.push_back(b.set);
    return parts;
}

std::vector<BlockSet> common_parts(const GenQuaternion& q) {
    std::vector<BlockSet> parts{BlockSet::full_set()};
    for (std::size_t n = 0; n < 4; ++n) {
        std::vector<BlockSet> next;
        for (const auto& p : parts)
            for (const auto& b : q.component(n).branches()) {
                BlockSet s = p.intersect(b.set);
                if (!s.is_empty()) next.push_back(std::move(s));
            }
        parts = std::move(next);
    }
    return parts;
}

std::size_t first_block(const BlockSet& s) {
    for (std::size_t k = 0;; ++k)
        if (s.contains(k)) return k;
}

}  // namespace

// The per-element pick V(x)+1 (the fastest branch) is not a valid witness
// once branch valuations spread by more than 1; the slowest branch is.
Rat scale_witness_exponent(const GenScalar& x) {
    std::optional<Rat> slowest;
    for (const auto& b : x.branches()) {
        auto lead = b.germ.leading();
        if (!lead) continue;
        if (!slowest || lead->exp > *slowest) slowest = lead->exp;
    }
    return slowest ? *slowest + Rat(1) : Rat(1);
}

Rat scale_witness_exponent(const GenQuaternion& q) {
    std::optional<Rat> slowest;
    for (const auto& part : common_parts(q)) {
        std::size_t k = first_block(part);
        std::optional<Rat> branch_val;  // min over components on this part
        for (std::size_t n = 0; n < 4; ++n) {
            auto lead = q.component(n).germ_at(k).leading();
            if (lead) branch_val = min_opt(branch_val, lead->exp);
        }
        if (branch_val && (!slowest || *branch_val > *slowest)) slowest = branch_val;
    }
    return slowest ? *slowest + Rat(1) : Rat(1);
}

OracleReport check_unit_threshold(const GenScalar& x, const Rat& r, std::size_t k_max) {
    return unit_impl([&x](double eps) { return std::abs(x.eval(eps)); }, x.has_approx(), r, k_max,
                     "unit-threshold");
}

OracleReport check_unit_threshold(const GenQuaternion& x, const Rat& r, std::size_t k_max) {
    return unit_impl([&x](double eps) { return x.eval_abs(eps); }, x.has_approx(), r, k_max,
                     "unit-threshold");
}

OracleReport check_association(const GenScalar& x, std::size_t k_max) {
    return assoc_impl([&x](double eps) { return std::abs(x.eval(eps)); }, scalar_parts(x),
                      x.has_approx(), k_max, "association");
}

OracleReport check_association(const GenQuaternion& x, std::size_t k_max) {
    return assoc_impl([&x](double eps) { return x.eval_abs(eps); }, common_parts(x),
                      x.has_approx(), k_max, "association");
}

OracleReport check_qpositivity(const GenScalar& x, std::size_t k_max) {
    OracleReport rep;
    rep.decision = "qpositivity";
    double margin = std::numeric_limits<double>::infinity();
    double rel_min = std::numeric_limits<double>::infinity();
    for (std::size_t k = kOracleFirstBlock; k <= k_max; ++k) {
        double eps = block_midpoint(k);
        double v = x.eval(eps);
        rep.samples.push_back({eps, v});
        double slack = v + eps;
        if (slack < margin) margin = slack;
        double rel = std::abs(slack) / std::max({std::abs(v), eps, 1e-300});
        if (rel < rel_min) rel_min = rel;
        if (slack <= 0 && !rep.counterexample) rep.counterexample = Sample{eps, v};
    }
    rep.margin = margin;
    rep.verdict = rep.counterexample ? Verdict::refute : Verdict::confirm;
    if (x.has_approx() && rel_min < kApproxRelMargin) rep.verdict = Verdict::inconclusive;
    return rep;
}

bool concordant_unit(bool symbolic, const OracleReport& r) {
    if (r.verdict == Verdict::inconclusive) return true;
    return symbolic ? r.verdict == Verdict::confirm : r.verdict == Verdict::refute;
}

bool concordant_association(bool symbolic, const OracleReport& r) {
    if (r.verdict == Verdict::inconclusive) return true;
    return symbolic ? r.verdict == Verdict::confirm : r.verdict == Verdict::refute;
}

bool concordant_qpositivity(bool symbolic, const OracleReport& r) {
    if (r.verdict == Verdict::inconclusive) return true;
    // The b = 1 screen is necessary, not sufficient: surviving it proves
    // nothing for q-negative elements of valuation >= 1.
    return !symbolic || r.verdict == Verdict::confirm;
}

SuiteSummary cross_validate_suite(std::uint64_t seed, int trials) {
    SuiteSummary sum;
    sum.seed = seed;
    sum.trials = trials;
    ElementGen gen(seed);
    for (int t = 0; t < trials; ++t) {
        GenScalar x = gen.scalar();
        {
            OracleReport rep = check_unit_threshold(x, scale_witness_exponent(x));
            if (!concordant_unit(x.is_unit(), rep))
                sum.mismatches.push_back({t, "scalar-unit-threshold", std::move(rep)});
        }
        {
            OracleReport rep = check_association(x);
            if (!concordant_association(x.associates_zero(), rep))
                sum.mismatches.push_back({t, "scalar-association", std::move(rep)});
        }
        {
            OracleReport rep = check_qpositivity(x);
            if (!concordant_qpositivity(x.is_qpositive(), rep))
                sum.mismatches.push_back({t, "scalar-qpositivity", std::move(rep)});
        }
        GenQuaternion q = gen.quaternion();
        {
            OracleReport rep = check_unit_threshold(q, scale_witness_exponent(q));
            if (!concordant_unit(q.is_unit(), rep))
                sum.mismatches.push_back({t, "quat-unit-threshold", std::move(rep)});
        }
        {
            OracleReport rep = check_association(q);
            if (!concordant_association(q.associates_zero(), rep))
                sum.mismatches.push_back({t, "quat-association", std::move(rep)});
        }
        sum.checks_run += 5;
    }
    return sum;
}

}  // namespace gq
