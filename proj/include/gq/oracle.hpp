#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "gq/quaternion.hpp"

namespace gq {

enum class Verdict { confirm, refute, inconclusive };

const char* verdict_name(Verdict v);

struct Sample {
    double eps;
    double value;
};

/// Result of one sampled-epsilon check against an analytic definition.
/// Refutes always carry a concrete counterexample sample; reports are
/// deterministic functions of the input and the fixed sample schedule.
struct OracleReport {
    std::string decision;
    std::vector<Sample> samples;
    Verdict verdict = Verdict::confirm;
    double margin = 0.0;  // smallest observed slack
    std::optional<Sample> counterexample;
};

/// Default sample schedule: block midpoints for k = 20..40, deep enough for
/// leading-term dominance at |exponent| <= 3 in double precision.
inline constexpr std::size_t kOracleFirstBlock = 20;
inline constexpr std::size_t kOracleLastBlock = 40;

/// Checks |x(eps)| >= eps^r at the sampled midpoints (the unit threshold with
/// alpha_r). Inconclusive on approx-tagged inputs with relative margins under
/// 1e-6.
OracleReport check_unit_threshold(const GenScalar& x, const Rat& r,
                                  std::size_t k_max = kOracleLastBlock);
OracleReport check_unit_threshold(const GenQuaternion& x, const Rat& r,
                                  std::size_t k_max = kOracleLastBlock);

/// Checks that |x(eps_k)| trends monotonically to 0 on every accumulating
/// branch with the deepest sample below 1e-3.
OracleReport check_association(const GenScalar& x, std::size_t k_max = kOracleLastBlock);
OracleReport check_association(const GenQuaternion& x, std::size_t k_max = kOracleLastBlock);

/// Checks x(eps_k) > -eps_k at every sample (the order condition at b = 1).
OracleReport check_qpositivity(const GenScalar& x, std::size_t k_max = kOracleLastBlock);

/// One more than the slowest branch valuation: the least scale exponent r for
/// which |x(eps)| >= eps^r can hold on every branch of a unit (1 for zero
/// input). This is the r the suite feeds to check_unit_threshold.
Rat scale_witness_exponent(const GenScalar& x);
Rat scale_witness_exponent(const GenQuaternion& x);

/// Concordance rules between a symbolic verdict and a sampled report.
/// Unit threshold and association are decisive for the generated germ class,
/// so both directions count. The b = 1 positivity screen is only a necessary
/// condition (it cannot refute q-negative elements of valuation >= 1), so
/// only a refutation of a symbolically positive element counts against it.
bool concordant_unit(bool symbolic, const OracleReport& r);
bool concordant_association(bool symbolic, const OracleReport& r);
bool concordant_qpositivity(bool symbolic, const OracleReport& r);

struct SuiteMismatch {
    int trial;
    std::string decision;
    OracleReport report;
};

struct SuiteSummary {
    std::uint64_t seed = 0;
    int trials = 0;
    int checks_run = 0;
    std::vector<SuiteMismatch> mismatches;
};

/// Generates `trials` random exact scalars and quaternions, runs every
/// symbolic decision against its sampled counterpart and reports mismatches
/// (expected: none). Deterministic in the seed.
SuiteSummary cross_validate_suite(std::uint64_t seed, int trials);

}  // namespace gq
