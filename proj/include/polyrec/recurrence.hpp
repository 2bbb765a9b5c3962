#pragma once

#include "polyrec/polynomial.hpp"

#include <array>
#include <optional>
#include <string>
#include <vector>

namespace polyrec {

// Coefficients of the recurrence W_n = (a z + b) W_{n-1} + (c z + d) W_{n-2},
// with the standing assumption a != 0 and c != 0. The values are exact
// doubles as supplied by the caller; every derived quantity widens them to
// the requested working precision.
struct RecurrenceParams {
    double a;
    double b;
    double c;
    double d;

    bool valid() const { return a != 0.0 && c != 0.0; }
    void require_valid() const;
};

enum class Sign { Negative, Zero, Positive };

using SignCase = std::array<Sign, 4>;

SignCase sign_case(const RecurrenceParams& params);
char sign_char(Sign s);
std::string sign_case_string(const SignCase& sc);

// (+,-,+,-): a,c > 0 and b,d < 0
bool is_pmpm_case(const SignCase& sc);

// A = az+b, B = cz+d, Delta = A^2+4B, h = 2z-A, g = (h^2-Delta)/4
struct DerivedPolys {
    Polynomial A;
    Polynomial B;
    Polynomial Delta;
    Polynomial h;
    Polynomial g;
};

DerivedPolys derived_polys(const RecurrenceParams& params,
                           unsigned precision_bits = Polynomial::kDefaultPrecision);

// All scalar quantities attached to a parameter set. Optional fields are
// absent exactly when their defining expression degenerates (x_h at a = 2,
// x_g at a = 1 with b + c = 0, u/v when complex).
struct CriticalScalars {
    Real x_A;
    Real x_B;
    Real B_at_xA;
    Real delta_delta;        // c^2 - a^2 B(x_A), discriminant of Delta
    Complex x_delta_minus;   // zeros of Delta; conjugate pair when delta_delta < 0
    Complex x_delta_plus;
    Real delta_g;            // (b+c)^2 + 4d(1-a)
    Real F;                  // delta_g - delta_delta
    std::optional<Real> x_g_minus;
    std::optional<Real> x_g_plus;
    std::optional<Real> x_h;
    std::optional<Real> u;
    std::optional<Real> v;
};

CriticalScalars critical_scalars(const RecurrenceParams& params,
                                 unsigned precision_bits = Polynomial::kDefaultPrecision);

// W_0 .. W_N with W_0 = 1, W_1 = z.
std::vector<Polynomial> generate_sequence(const RecurrenceParams& params, int N,
                                          unsigned precision_bits = Polynomial::kDefaultPrecision);

// W_n(z) through the two-eigenvalue closed form, falling back to the
// repeated-root branch when Delta(z) is too small for the split to be
// numerically meaningful.
Complex closed_form_eval(const RecurrenceParams& params, int n, const Complex& z,
                         unsigned precision_bits = Polynomial::kDefaultPrecision);

// Scalar recurrence evaluation of W_n at a fixed point; avoids coefficient
// growth in the polynomial representation.
Real eval_recurrence_at(const RecurrenceParams& params, int n, const Real& x,
                        unsigned precision_bits = Polynomial::kDefaultPrecision);

// U_0 .. U_N with U_n = W_n / A^floor(n/2), defined when x_A = x_B.
// Built by the alternating recurrence and cross-checked against exact
// division. Throws std::invalid_argument when x_A != x_B.
std::vector<Polynomial> normalized_sequence(const RecurrenceParams& params, int N,
                                            unsigned precision_bits = Polynomial::kDefaultPrecision);

}  // namespace polyrec
