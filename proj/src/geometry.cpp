#include "polyrec/geometry.hpp"

#include <boost/math/constants/constants.hpp>

#include <algorithm>
#include <stdexcept>

namespace polyrec {

using boost::multiprecision::abs;
using boost::multiprecision::atan2;
using boost::multiprecision::hypot;
using boost::multiprecision::sqrt;

const char* limit_kind_name(LimitKind k) {
    switch (k) {
        case LimitKind::Arc: return "arc";
        case LimitKind::Circle: return "circle";
        case LimitKind::Lollipop: return "lollipop";
        case LimitKind::Interval: return "interval";
    }
    return "?";
}

std::vector<Complex> isolated_limits(const RecurrenceParams& p, unsigned prec) {
    p.require_valid();
    PrecisionGuard guard(prec);
    DerivedPolys dp = derived_polys(p, prec);

    std::vector<Complex> candidates;
    const Polynomial& g = dp.g;
    if (g.degree() == 2) {
        Complex disc(g.coeff(1) * g.coeff(1) - 4 * g.coeff(2) * g.coeff(0));
        Complex root = principal_sqrt(disc);
        Complex two_a(2 * g.coeff(2));
        candidates.push_back((Complex(-g.coeff(1)) - root) / two_a);
        candidates.push_back((Complex(-g.coeff(1)) + root) / two_a);
    } else if (g.degree() == 1) {
        candidates.push_back(Complex(-g.coeff(0) / g.coeff(1)));
    }
    // g constant (a = 1, b + c = 0, d != 0) or zero: no candidates beyond
    // those above; a zero g never occurs since d = 0 forces g = (1-a)z^2-(b+c)z.

    std::vector<Complex> out;
    for (const Complex& z : candidates) {
        Complex A = dp.A.eval(z);
        Complex h = dp.h.eval(z);
        Real lhs = (A * conj(h)).re;
        Real threshold = Real(1e-12) * (1 + abs(A) * abs(h));
        if (lhs < -threshold) out.push_back(z);
    }
    std::sort(out.begin(), out.end(), [](const Complex& x, const Complex& y) {
        if (x.re != y.re) return x.re < y.re;
        return x.im < y.im;
    });
    return out;
}

LimitSet classify(const RecurrenceParams& p, unsigned prec) {
    p.require_valid();
    PrecisionGuard guard(prec);
    CriticalScalars s = critical_scalars(p, prec);

    LimitSet ls;
    ls.scalars = s;
    ls.circle_center = s.x_B;
    ls.circle_radius = abs(s.x_A - s.x_B);
    ls.isolated = isolated_limits(p, prec);

    // The Circle case is a measure-zero boundary; detect it with a scaled
    // tolerance since an exact zero test is meaningless here.
    Real a = make_real(p.a), c = make_real(p.c);
    Real circle_tol = Real(1e-12) * (c * c + a * a * abs(s.B_at_xA));
    if (abs(s.delta_delta) <= circle_tol) {
        ls.kind = LimitKind::Circle;
    } else if (s.delta_delta < 0) {
        ls.kind = LimitKind::Arc;
        ls.arc_endpoint_minus = s.x_delta_minus;
        ls.arc_endpoint_plus = s.x_delta_plus;
        ls.arc_through = s.x_A;
    } else if (s.B_at_xA > 0) {
        ls.kind = LimitKind::Lollipop;
        ls.interval_lo = s.x_delta_minus.re;
        ls.interval_hi = s.x_delta_plus.re;
    } else {
        ls.kind = LimitKind::Interval;
        ls.interval_lo = s.x_delta_minus.re;
        ls.interval_hi = s.x_delta_plus.re;
    }
    return ls;
}

namespace {

Real circle_distance(const Real& center, const Real& radius, const Complex& z) {
    return abs(hypot(z.re - center, z.im) - radius);
}

Real interval_distance(const Real& lo, const Real& hi, const Complex& z) {
    Real x = std::clamp(z.re, lo, hi);
    return hypot(z.re - x, z.im);
}

Real arc_distance(const LimitSet& ls, const Complex& z) {
    // Arc on the circle |w - center| = radius between the conjugate
    // endpoints, passing through the real point arc_through.
    const Real& center = ls.circle_center;
    const Real& radius = ls.circle_radius;
    Real phi_end = atan2(ls.arc_endpoint_plus.im, ls.arc_endpoint_plus.re - center);
    Real theta = atan2(z.im, z.re - center);
    bool through_right = ls.arc_through > center;  // through-angle 0 vs pi
    bool on_arc = through_right ? abs(theta) <= phi_end : abs(theta) >= phi_end;
    if (on_arc) return circle_distance(center, radius, z);
    Real d1 = hypot(z.re - ls.arc_endpoint_minus.re, z.im - ls.arc_endpoint_minus.im);
    Real d2 = hypot(z.re - ls.arc_endpoint_plus.re, z.im - ls.arc_endpoint_plus.im);
    return std::min(d1, d2);
}

}  // namespace

Real distance_to(const LimitSet& ls, const Complex& z) {
    Real d;
    switch (ls.kind) {
        case LimitKind::Arc:
            d = arc_distance(ls, z);
            break;
        case LimitKind::Circle:
            d = circle_distance(ls.circle_center, ls.circle_radius, z);
            break;
        case LimitKind::Interval:
            d = interval_distance(ls.interval_lo, ls.interval_hi, z);
            break;
        case LimitKind::Lollipop:
            d = std::min(interval_distance(ls.interval_lo, ls.interval_hi, z),
                         circle_distance(ls.circle_center, ls.circle_radius, z));
            break;
    }
    for (const Complex& iso : ls.isolated)
        d = std::min(d, Real(hypot(z.re - iso.re, z.im - iso.im)));
    return d;
}

LollipopJunction lollipop_junction(const RecurrenceParams& p, unsigned prec) {
    PrecisionGuard guard(prec);
    LimitSet ls = classify(p, prec);
    if (ls.kind != LimitKind::Lollipop)
        throw std::invalid_argument("lollipop_junction requires delta_delta > 0 and B(x_A) > 0");

    LollipopJunction j;
    j.point = 2 * ls.scalars.x_B - ls.scalars.x_A;
    Real disk_lo = ls.circle_center - ls.circle_radius;
    Real disk_hi = ls.circle_center + ls.circle_radius;
    Real lo = std::max(ls.interval_lo, disk_lo);
    Real hi = std::min(ls.interval_hi, disk_hi);
    j.inside_len = hi > lo ? hi - lo : Real(0);
    j.outside_len = (ls.interval_hi - ls.interval_lo) - j.inside_len;
    if (!(j.outside_len > j.inside_len))
        throw std::runtime_error("lollipop_junction: outside part not longer than inside part");
    return j;
}

}  // namespace polyrec
