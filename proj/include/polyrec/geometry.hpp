#pragma once

#include "polyrec/recurrence.hpp"

#include <vector>

namespace polyrec {

enum class LimitKind { Arc, Circle, Lollipop, Interval };

const char* limit_kind_name(LimitKind k);

// Geometric description of the limit sets of zeros: the non-isolated
// component (arc / circle / lollipop / interval) plus at most two isolated
// points.
struct LimitSet {
    LimitKind kind;
    Real circle_center;   // x_B
    Real circle_radius;   // |x_A - x_B|
    Complex arc_endpoint_minus;  // Arc only
    Complex arc_endpoint_plus;
    Real arc_through;     // x_A, Arc only
    Real interval_lo;     // x_delta^-, Interval and Lollipop
    Real interval_hi;     // x_delta^+
    std::vector<Complex> isolated;
    CriticalScalars scalars;
};

LimitSet classify(const RecurrenceParams& params,
                  unsigned precision_bits = Polynomial::kDefaultPrecision);

// Zeros z of g with Re(A(z) conj(h(z))) < 0, strictly below a scaled
// tolerance so boundary points are excluded.
std::vector<Complex> isolated_limits(const RecurrenceParams& params,
                                     unsigned precision_bits = Polynomial::kDefaultPrecision);

// Euclidean distance from z to the union of the non-isolated component and
// the isolated points.
Real distance_to(const LimitSet& ls, const Complex& z);

struct LollipopJunction {
    Real point;        // 2 x_B - x_A
    Real inside_len;   // length of J_Delta inside the closed disk of C_0
    Real outside_len;  // length of J_Delta outside
};

// Only defined in the Lollipop case; throws std::invalid_argument otherwise.
LollipopJunction lollipop_junction(const RecurrenceParams& params,
                                   unsigned precision_bits = Polynomial::kDefaultPrecision);

}  // namespace polyrec
