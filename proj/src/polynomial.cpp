#include "polyrec/polynomial.hpp"

#include <algorithm>
#include <stdexcept>

namespace polyrec {

namespace {
const Real kZero{0};

Real ldexp1(int e) {
    // 2^e at current working precision
    using boost::multiprecision::ldexp;
    return ldexp(Real(1), e);
}
}  // namespace

Polynomial::Polynomial(std::vector<Real> coeffs, unsigned precision_bits)
    : coeffs_(std::move(coeffs)), precision_(precision_bits) {
    normalize();
}

Polynomial::Polynomial(std::initializer_list<double> coeffs, unsigned precision_bits)
    : precision_(precision_bits) {
    PrecisionGuard guard(precision_);
    coeffs_.reserve(coeffs.size());
    for (double c : coeffs) coeffs_.push_back(make_real(c));
    normalize();
}

Polynomial Polynomial::zero(unsigned precision_bits) {
    return Polynomial(std::vector<Real>{}, precision_bits);
}

Polynomial Polynomial::constant(const Real& c, unsigned precision_bits) {
    return Polynomial(std::vector<Real>{c}, precision_bits);
}

Polynomial Polynomial::linear(const Real& b, const Real& a, unsigned precision_bits) {
    return Polynomial(std::vector<Real>{b, a}, precision_bits);
}

const Real& Polynomial::coeff(std::size_t k) const {
    return k < coeffs_.size() ? coeffs_[k] : kZero;
}

const Real& Polynomial::leading() const {
    if (coeffs_.empty()) return kZero;
    return coeffs_.back();
}

Real Polynomial::max_abs_coeff() const {
    using boost::multiprecision::abs;
    Real m(0);
    for (const Real& c : coeffs_) m = std::max(m, Real(abs(c)));
    return m;
}

Polynomial Polynomial::with_precision(unsigned precision_bits) const {
    PrecisionGuard guard(precision_bits);
    std::vector<Real> cs;
    cs.reserve(coeffs_.size());
    for (const Real& c : coeffs_) {
        Real v = make_real(0);
        v = c;  // rounds to the new working precision
        v.precision(digits10_for_bits(precision_bits));
        cs.push_back(v);
    }
    return Polynomial(std::move(cs), precision_bits);
}

void Polynomial::normalize() {
    using boost::multiprecision::abs;
    for (const Real& c : coeffs_) {
        if (!mpfr_number_p(c.backend().data()))
            throw std::invalid_argument("polynomial coefficient is not finite");
    }
    PrecisionGuard guard(precision_);
    Real m = max_abs_coeff();
    if (m.is_zero()) {
        coeffs_.clear();
        return;
    }
    Real cutoff = m * ldexp1(-static_cast<int>(precision_) + 8);
    for (Real& c : coeffs_)
        if (abs(c) < cutoff) c = 0;
    while (!coeffs_.empty() && coeffs_.back().is_zero()) coeffs_.pop_back();
}

Real Polynomial::eval(const Real& x) const {
    PrecisionGuard guard(precision_);
    Real acc(0);
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it)
        acc = acc * x + *it;
    return acc;
}

Complex Polynomial::eval(const Complex& z) const {
    if (z.is_real()) return Complex(eval(z.re));
    PrecisionGuard guard(precision_);
    Complex acc;
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it)
        acc = acc * z + Complex(*it);
    return acc;
}

std::pair<Complex, Complex> Polynomial::eval_with_derivative(const Complex& z) const {
    PrecisionGuard guard(precision_);
    Complex p, dp;
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) {
        dp = dp * z + p;
        p = p * z + Complex(*it);
    }
    return {p, dp};
}

Polynomial Polynomial::derivative() const {
    PrecisionGuard guard(precision_);
    if (coeffs_.size() <= 1) return zero(precision_);
    std::vector<Real> out(coeffs_.size() - 1);
    for (std::size_t k = 1; k < coeffs_.size(); ++k)
        out[k - 1] = Real(static_cast<long>(k)) * coeffs_[k];
    return Polynomial(std::move(out), precision_);
}

Polynomial operator+(const Polynomial& p, const Polynomial& q) {
    unsigned prec = std::max(p.precision_, q.precision_);
    PrecisionGuard guard(prec);
    std::vector<Real> out(std::max(p.coeffs_.size(), q.coeffs_.size()), Real(0));
    for (std::size_t k = 0; k < out.size(); ++k) out[k] = p.coeff(k) + q.coeff(k);
    return Polynomial(std::move(out), prec);
}

Polynomial operator-(const Polynomial& p, const Polynomial& q) {
    unsigned prec = std::max(p.precision_, q.precision_);
    PrecisionGuard guard(prec);
    std::vector<Real> out(std::max(p.coeffs_.size(), q.coeffs_.size()), Real(0));
    for (std::size_t k = 0; k < out.size(); ++k) out[k] = p.coeff(k) - q.coeff(k);
    return Polynomial(std::move(out), prec);
}

Polynomial operator*(const Polynomial& p, const Polynomial& q) {
    unsigned prec = std::max(p.precision_, q.precision_);
    if (p.is_zero() || q.is_zero()) return Polynomial::zero(prec);
    PrecisionGuard guard(prec);
    std::vector<Real> out(p.coeffs_.size() + q.coeffs_.size() - 1, Real(0));
    for (std::size_t i = 0; i < p.coeffs_.size(); ++i)
        for (std::size_t j = 0; j < q.coeffs_.size(); ++j)
            out[i + j] += p.coeffs_[i] * q.coeffs_[j];
    return Polynomial(std::move(out), prec);
}

Polynomial& Polynomial::operator*=(const Real& s) {
    PrecisionGuard guard(precision_);
    for (Real& c : coeffs_) c *= s;
    normalize();
    return *this;
}

Polynomial linear_combine(const Polynomial& p, const Polynomial& l1,
                          const Polynomial& q, const Polynomial& l2) {
    if (l1.degree() > 1 || l2.degree() > 1)
        throw std::invalid_argument("linear_combine: multiplier degree exceeds one");
    return l1 * p + l2 * q;
}

DivisionResult divide_exact(const Polynomial& p, const Polynomial& q) {
    using boost::multiprecision::abs;
    if (q.is_zero()) throw std::domain_error("division by zero polynomial");
    unsigned prec = std::max(p.precision_bits(), q.precision_bits());
    PrecisionGuard guard(prec);
    std::vector<Real> rem(p.coeffs());
    int dq = q.degree();
    int dr = p.degree();
    std::vector<Real> quot(dr >= dq ? dr - dq + 1 : 0, Real(0));
    const Real& lead = q.leading();
    for (int k = dr - dq; k >= 0; --k) {
        Real factor = rem[k + dq] / lead;
        quot[k] = factor;
        for (int j = 0; j <= dq; ++j) rem[k + j] -= factor * q.coeff(j);
    }
    Real rem_norm(0);
    for (int j = 0; j < dq && j < static_cast<int>(rem.size()); ++j)
        rem_norm = std::max(rem_norm, Real(abs(rem[j])));
    Real p_norm = p.max_abs_coeff();
    Real rel = p_norm.is_zero() ? rem_norm : Real(rem_norm / p_norm);
    return {Polynomial(std::move(quot), prec), rel};
}

Polynomial pow(const Polynomial& p, unsigned n) {
    Polynomial result = Polynomial::constant(Real(1), p.precision_bits());
    for (unsigned i = 0; i < n; ++i) result = result * p;
    return result;
}

}  // namespace polyrec
