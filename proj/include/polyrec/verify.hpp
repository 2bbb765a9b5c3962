#pragma once

#include "polyrec/geometry.hpp"
#include "polyrec/roots.hpp"

#include <string>
#include <vector>

namespace polyrec {

struct DetailRecord {
    int n;
    bool passed;
    Real margin;       // most adverse slack for this record; positive = pass
    std::string note;
};

struct VerificationReport {
    std::string claim;
    RecurrenceParams params;
    int horizon = 0;
    bool passed = false;
    Real worst_margin;
    std::vector<DetailRecord> details;

    void add(int n, bool ok, const Real& margin, std::string note = {});
};

struct VerifyConfig {
    unsigned precision_bits = 256;
    // gap tolerance for strict interlacing and snapping; < 0 selects the
    // precision-scaled default
    double interlace_tol = 1e-15;
    double convergence_tol = 0.1;
};

// x_A <= x_B, the real-rootedness criterion for the (+,-,+,-) sign case.
// Equivalent to a*d <= b*c there. Throws outside that sign case.
bool real_rooted_criterion(const RecurrenceParams& params);

// Every W_n for n = 1..N is real-rooted with R_n inside (u, v) and R_{n+1}
// strictly interlacing R_n.
VerificationReport verify_interlacing_chain(const RecurrenceParams& params, int N,
                                            const VerifyConfig& cfg = {});

// W_n(u)(-1)^n > 0 and W_n(v) > 0 for n = 0..N, plus the static orderings
// u <= x_delta^- < x_A < x_delta^+ <= v < x_B and u < 0 < v.
VerificationReport verify_sign_conditions(const RecurrenceParams& params, int N,
                                          const VerifyConfig& cfg = {});

// Extreme roots of W_n approach u and v: final gaps below tol and no larger
// than the mid-horizon gaps. Monotonicity past the burn-in is reported per n.
VerificationReport verify_bound_sharpness(const RecurrenceParams& params, int N,
                                          const VerifyConfig& cfg = {});

// Roots of W_n converge to the classified limit set: the worst root-to-set
// distance at n = N is below tol and no worse than at n = N/2.
VerificationReport verify_limit_convergence(const RecurrenceParams& params, int N,
                                            const VerifyConfig& cfg = {});

// Junction point and segment lengths of the lollipop, with the outside part
// strictly longer.
VerificationReport verify_lollipop(const RecurrenceParams& params,
                                   const VerifyConfig& cfg = {});

// The x_A = x_B case: U_n degrees, reality, bounds in (u, x_B), the
// left-interlacing pattern, endpoint signs, and extreme-root convergence.
VerificationReport verify_normalized_case(const RecurrenceParams& params, int N,
                                          const VerifyConfig& cfg = {});

enum class ScanOutcome { CriterionTruePass, CriterionTrueFail, FailureFound, Inconclusive };

struct ScanPoint {
    RecurrenceParams params;
    bool criterion;       // x_A <= x_B
    ScanOutcome outcome;
    int first_failure_n;  // first n with a non-real root; -1 when none found
};

struct ScanSummary {
    int horizon;
    std::vector<ScanPoint> points;
    int false_negatives = 0;  // criterion-true points that were not real-rooted
    int inconclusive = 0;
};

// Grid scan over the (+,-,+,-) region comparing the criterion against
// real-rootedness up to the horizon. The per-n decision is exact (integer
// Sturm sequences), so near-endpoint root clusters cannot produce spurious
// non-real verdicts at any degree.
ScanSummary scan_sign_region(const std::vector<double>& a_values,
                             const std::vector<double>& b_values,
                             const std::vector<double>& c_values,
                             const std::vector<double>& d_values,
                             int horizon = 60);

}  // namespace polyrec
