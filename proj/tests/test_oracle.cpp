#include <doctest.h>

#include <cmath>

#include "gq/io.hpp"
#include "gq/oracle.hpp"
#include "helpers.hpp"

using namespace gq;
using gqt::sc;
using gqt::qt;

TEST_CASE("unit threshold confirms units and refutes vanishing branches") {
    GenScalar x = sc("1 + e^1");
    OracleReport r = check_unit_threshold(x, Rat(1));
    CHECK(r.verdict == Verdict::confirm);
    CHECK(r.samples.size() == kOracleLastBlock - kOracleFirstBlock + 1);
    CHECK(r.margin > 0.0);

    OracleReport rc = check_unit_threshold(sc("chi(pre=;per=10)"), Rat(2));
    CHECK(rc.verdict == Verdict::refute);
    REQUIRE(rc.counterexample.has_value());
    CHECK(rc.counterexample->value == 0.0);  // a sampled eps in the complement

    OracleReport rz = check_unit_threshold(GenScalar::zero(), Rat(1));
    CHECK(rz.verdict == Verdict::refute);
    for (const auto& s : rz.samples) CHECK(s.value < std::pow(s.eps, 1.0));
}

TEST_CASE("association trends") {
    CHECK(check_association(sc("e^(1/2)")).verdict == Verdict::confirm);
    CHECK(check_association(GenScalar::zero()).verdict == Verdict::confirm);
    CHECK(check_association(sc("2 + e^1")).verdict == Verdict::refute);
    CHECK(check_association(sc("invert(alpha(1))")).verdict == Verdict::refute);
    CHECK(check_association(qt("e^(1/2) + e^1 * j")).verdict == Verdict::confirm);
}

TEST_CASE("q-positivity at b = 1") {
    CHECK(check_qpositivity(sc("e^(1/2)")).verdict == Verdict::confirm);
    CHECK(check_qpositivity(GenScalar::zero()).verdict == Verdict::confirm);
    // -eps sits exactly on the bound, which the check treats as a violation.
    OracleReport r = check_qpositivity(sc("0 - e^1"));
    CHECK(r.verdict == Verdict::refute);
    REQUIRE(r.counterexample.has_value());
    // The b = 1 screen is one-sided: -eps^2 survives it.
    CHECK(check_qpositivity(sc("0 - e^2")).verdict == Verdict::confirm);
    CHECK(concordant_qpositivity(false, check_qpositivity(sc("0 - e^2"))));
}

TEST_CASE("planted inconsistency is flagged") {
    // A germ with negative leading coefficient claimed q-positive: the sample
    // check refutes the claim.
    GenScalar bad = sc("0 - e^(1/2)");
    OracleReport r = check_qpositivity(bad);
    CHECK(r.verdict == Verdict::refute);
    CHECK_FALSE(concordant_qpositivity(true, r));   // claimed verdict: mismatch
    CHECK(concordant_qpositivity(bad.is_qpositive(), r));  // honest verdict: fine
}

TEST_CASE("refutations recompute to the same violation") {
    GenScalar x = sc("chi(pre=;per=10) - chi(pre=;per=01) * e^1");
    OracleReport r = check_qpositivity(x);
    REQUIRE(r.verdict == Verdict::refute);
    REQUIRE(r.counterexample.has_value());
    double again = x.eval(r.counterexample->eps);
    CHECK(again == r.counterexample->value);
    CHECK(again + r.counterexample->eps <= 0.0);
}

TEST_CASE("reports are deterministic in the seed") {
    SuiteSummary a = cross_validate_suite(7, 40);
    SuiteSummary b = cross_validate_suite(7, 40);
    CHECK(a.checks_run == b.checks_run);
    CHECK(a.mismatches.size() == b.mismatches.size());
    CHECK(summary_json(a) == summary_json(b));
    GenScalar x = sc("1 + e^1");
    CHECK(report_json(check_unit_threshold(x, Rat(1))) ==
          report_json(check_unit_threshold(x, Rat(1))));
}

TEST_CASE("small cross validation run is clean") {
    SuiteSummary s = cross_validate_suite(1, 100);
    CHECK(s.checks_run == 500);
    CHECK(s.mismatches.empty());
    SuiteSummary empty = cross_validate_suite(5, 0);
    CHECK(empty.checks_run == 0);
    CHECK(empty.mismatches.empty());
}

TEST_CASE("approx inputs with thin margins go inconclusive") {
    // sqrt(2)-ish scale is fine, but an approx germ hugging the threshold
    // cannot be decided: |x(eps)| = eps^2 + tiny against r = 2.
    GenScalar hug = GenScalar(PuiseuxGerm::make(
        {{Rat(2), Coeff::approximate(1.0 + 1e-9)}}, std::nullopt));
    OracleReport r = check_unit_threshold(hug, Rat(2));
    CHECK(r.verdict == Verdict::inconclusive);
    // Exact inputs never go inconclusive.
    CHECK(check_unit_threshold(sc("e^2"), Rat(2)).verdict != Verdict::inconclusive);
}

TEST_CASE("scale witness exponent") {
    CHECK(scale_witness_exponent(sc("1 + e^1")) == Rat(1));
    // Slowest branch governs: {evens: 1, odds: e^2} needs r > 2.
    CHECK(scale_witness_exponent(sc("{pre=;per=10 : 1 | pre=;per=01 : e^2}")) == Rat(3));
    CHECK(scale_witness_exponent(GenScalar::zero()) == Rat(1));
    CHECK(scale_witness_exponent(qt("e^2 + e^1 * i")) == Rat(2));
}
