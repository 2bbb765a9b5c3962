#pragma once

#include <boost/multiprecision/mpfr.hpp>

#include <cmath>
#include <stdexcept>

namespace polyrec {

// Arbitrary-precision real scalar. Precision is controlled through the
// thread-local default; every public operation that cares about precision
// installs a PrecisionGuard first.
using Real = boost::multiprecision::number<
    boost::multiprecision::mpfr_float_backend<0>,
    boost::multiprecision::et_off>;

inline unsigned digits10_for_bits(unsigned bits) {
    // ceil(bits * log10(2)) plus guard digits so mpfr allocates >= bits.
    return static_cast<unsigned>(std::ceil(bits * 0.30103)) + 3;
}

// Scoped override of the working precision, in bits of significand.
class PrecisionGuard {
public:
    explicit PrecisionGuard(unsigned bits)
        : saved_(Real::default_precision()) {
        Real::default_precision(digits10_for_bits(bits));
    }
    ~PrecisionGuard() { Real::default_precision(saved_); }
    PrecisionGuard(const PrecisionGuard&) = delete;
    PrecisionGuard& operator=(const PrecisionGuard&) = delete;

private:
    unsigned saved_;
};

// Fresh value at the current working precision.
inline Real make_real(double v = 0.0) {
    Real r(0);
    r = v;
    return r;
}

// Complex scalar over Real. std::complex is not usable with mpfr-backed
// numbers, so we carry our own minimal arithmetic.
struct Complex {
    Real re;
    Real im;

    Complex() : re(0), im(0) {}
    Complex(Real r) : re(std::move(r)), im(0) {}
    Complex(Real r, Real i) : re(std::move(r)), im(std::move(i)) {}
    Complex(double r, double i = 0.0) : re(r), im(i) {}

    bool is_real() const { return im.is_zero(); }
};

inline Complex operator+(const Complex& a, const Complex& b) {
    return {a.re + b.re, a.im + b.im};
}
inline Complex operator-(const Complex& a, const Complex& b) {
    return {a.re - b.re, a.im - b.im};
}
inline Complex operator-(const Complex& a) { return {-a.re, -a.im}; }
inline Complex operator*(const Complex& a, const Complex& b) {
    return {a.re * b.re - a.im * b.im, a.re * b.im + a.im * b.re};
}
inline Complex operator*(const Real& s, const Complex& a) {
    return {s * a.re, s * a.im};
}
inline Complex operator/(const Complex& a, const Complex& b) {
    Real d = b.re * b.re + b.im * b.im;
    if (d.is_zero()) throw std::domain_error("complex division by zero");
    return {(a.re * b.re + a.im * b.im) / d, (a.im * b.re - a.re * b.im) / d};
}
inline bool operator==(const Complex& a, const Complex& b) {
    return a.re == b.re && a.im == b.im;
}

inline Complex conj(const Complex& z) { return {z.re, -z.im}; }

inline Real abs2(const Complex& z) { return z.re * z.re + z.im * z.im; }

inline Real abs(const Complex& z) {
    using boost::multiprecision::sqrt;
    using boost::multiprecision::hypot;
    return hypot(z.re, z.im);
}

// Principal branch: argument of the result lies in (-pi/2, pi/2], so
// negative reals map to the positive imaginary axis.
inline Complex principal_sqrt(const Complex& z) {
    using boost::multiprecision::sqrt;
    if (z.im.is_zero()) {
        if (z.re >= 0) return {sqrt(z.re), Real(0)};
        return {Real(0), sqrt(-z.re)};
    }
    Real r = abs(z);
    Real sre = sqrt((r + z.re) / 2);
    Real sim = sqrt((r - z.re) / 2);
    if (z.im < 0) sim = -sim;
    return {sre, sim};
}

}  // namespace polyrec
