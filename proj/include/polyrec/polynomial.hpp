#pragma once

#include "polyrec/scalar.hpp"

#include <cstddef>
#include <initializer_list>
#include <utility>
#include <vector>

namespace polyrec {

// Dense univariate polynomial with real coefficients in ascending degree
// order. The zero polynomial is the empty coefficient sequence. After
// normalization the trailing coefficient is nonzero and coefficients that
// are negligible against the largest one are flushed to exact zero.
class Polynomial {
public:
    static constexpr unsigned kDefaultPrecision = 53;

    Polynomial() : precision_(kDefaultPrecision) {}
    explicit Polynomial(std::vector<Real> coeffs, unsigned precision_bits = kDefaultPrecision);
    Polynomial(std::initializer_list<double> coeffs, unsigned precision_bits = kDefaultPrecision);

    static Polynomial zero(unsigned precision_bits = kDefaultPrecision);
    static Polynomial constant(const Real& c, unsigned precision_bits = kDefaultPrecision);
    // b + a*z
    static Polynomial linear(const Real& b, const Real& a, unsigned precision_bits = kDefaultPrecision);

    bool is_zero() const { return coeffs_.empty(); }
    // degree of the zero polynomial is reported as -1
    int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
    unsigned precision_bits() const { return precision_; }
    const std::vector<Real>& coeffs() const { return coeffs_; }
    const Real& coeff(std::size_t k) const;
    const Real& leading() const;
    Real max_abs_coeff() const;

    Polynomial with_precision(unsigned precision_bits) const;

    Real eval(const Real& x) const;
    Complex eval(const Complex& z) const;
    // Horner evaluation of the derivative alongside the value.
    std::pair<Complex, Complex> eval_with_derivative(const Complex& z) const;

    Polynomial derivative() const;

    friend Polynomial operator+(const Polynomial& p, const Polynomial& q);
    friend Polynomial operator-(const Polynomial& p, const Polynomial& q);
    friend Polynomial operator*(const Polynomial& p, const Polynomial& q);
    Polynomial& operator*=(const Real& s);
    friend Polynomial operator*(const Real& s, Polynomial p) { p *= s; return p; }

private:
    void normalize();

    std::vector<Real> coeffs_;
    unsigned precision_;
};

// L1*p + L2*q with deg(L1), deg(L2) <= 1; one step of the recurrence.
// Throws std::invalid_argument when a multiplier has degree above one.
Polynomial linear_combine(const Polynomial& p, const Polynomial& l1,
                          const Polynomial& q, const Polynomial& l2);

struct DivisionResult {
    Polynomial quotient;
    // max-norm of the remainder relative to the max-norm of the dividend
    Real relative_remainder;
};

// Synthetic long division p = quotient*q + remainder. Throws
// std::domain_error when q is the zero polynomial.
DivisionResult divide_exact(const Polynomial& p, const Polynomial& q);

Polynomial pow(const Polynomial& p, unsigned n);

}  // namespace polyrec
