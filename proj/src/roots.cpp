#include "polyrec/roots.hpp"

#include <boost/math/constants/constants.hpp>

#include <algorithm>
#include <stdexcept>

namespace polyrec {

using boost::multiprecision::abs;
using boost::multiprecision::ldexp;

namespace {

Real scaled_magnitude(const Polynomial& p, const Complex& z) {
    // sum_k |c_k| |z|^k, the natural scale for |p(z)|
    Real az = abs(z);
    Real pw(1), acc(0);
    for (const Real& c : p.coeffs()) {
        acc += abs(c) * pw;
        pw *= az;
    }
    return acc;
}

}  // namespace

Real root_radius_bound(const Polynomial& p) {
    // Fujiwara: 2 * max_k |c_{n-k}/c_n|^(1/k). Stays moderate even when the
    // raw coefficient ratios overflow double.
    int n = p.degree();
    const Real lead = abs(p.leading());
    Real best(0);
    for (int k = 1; k <= n; ++k) {
        Real r = abs(p.coeff(n - k)) / lead;
        if (r.is_zero()) continue;
        best = std::max(best, Real(exp(log(r) / k)));
    }
    return 2 * best + Real(0.5);
}

namespace {

std::vector<Complex> initial_guesses(const Polynomial& p) {
    int n = p.degree();
    Real bound = root_radius_bound(p);
    // Fixed irrational angular offset breaks the conjugate symmetry of the
    // guess ring, which otherwise stalls the iteration on real polynomials.
    const Real offset = sqrt(Real(2)) - 1;
    const Real two_pi = 2 * boost::math::constants::pi<Real>();
    std::vector<Complex> z(n);
    for (int k = 0; k < n; ++k) {
        Real theta = two_pi * Real(k) / Real(n) + offset;
        z[k] = Complex(bound * cos(theta), bound * sin(theta));
    }
    return z;
}

void sort_roots(RootSet& rs) {
    std::vector<std::size_t> order(rs.roots.size());
    for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
    std::sort(order.begin(), order.end(), [&](std::size_t i, std::size_t j) {
        if (rs.roots[i].re != rs.roots[j].re) return rs.roots[i].re < rs.roots[j].re;
        return rs.roots[i].im < rs.roots[j].im;
    });
    RootSet out = rs;
    for (std::size_t i = 0; i < order.size(); ++i) {
        out.roots[i] = rs.roots[order[i]];
        out.is_real[i] = rs.is_real[order[i]];
        out.residuals[i] = rs.residuals[order[i]];
    }
    rs = std::move(out);
}

RootSet solve_at_precision(const Polynomial& p, const RootConfig& cfg, unsigned prec) {
    PrecisionGuard guard(prec);
    int n = p.degree();
    std::vector<Complex> z;
    if (!cfg.initial.empty()) {
        if (static_cast<int>(cfg.initial.size()) != n)
            throw std::invalid_argument("warm start size does not match degree");
        z = cfg.initial;
        for (Complex& zi : z) {
            Real re = make_real(0), im = make_real(0);
            re = zi.re;
            im = zi.im;
            zi = Complex(re, im);
        }
    } else {
        z = initial_guesses(p);
    }

    Real step_tol = ldexp(Real(1), -static_cast<int>(prec) + 4);
    Real residual_bound = Real(n) * ldexp(Real(1), -static_cast<int>(prec) + 16);
    int iters = 0;
    bool settled = false;
    for (; iters < cfg.max_iters && !settled; ++iters) {
        settled = true;
        for (int i = 0; i < n; ++i) {
            auto [pv, dv] = p.eval_with_derivative(z[i]);
            if (pv.re.is_zero() && pv.im.is_zero()) continue;
            // clustered (multiple) roots stall the step criterion while the
            // residual is already at the attainable floor
            if (abs(pv) <= Real(0.25) * residual_bound * scaled_magnitude(p, z[i]))
                continue;
            Complex ratio;
            if (dv.re.is_zero() && dv.im.is_zero()) {
                // stationary point: nudge off it deterministically
                ratio = Complex(step_tol, step_tol);
            } else {
                ratio = pv / dv;
            }
            Complex s;
            for (int j = 0; j < n; ++j) {
                if (j == i) continue;
                Complex diff = z[i] - z[j];
                if (diff.re.is_zero() && diff.im.is_zero())
                    diff = Complex(step_tol, Real(0));
                s = s + Complex(Real(1)) / diff;
            }
            Complex denom = Complex(Real(1)) - ratio * s;
            Complex w = (denom.re.is_zero() && denom.im.is_zero()) ? ratio : ratio / denom;
            z[i] = z[i] - w;
            if (abs(w) > step_tol * (1 + abs(z[i]))) settled = false;
        }
    }

    // Newton polish at doubled precision tightens residuals by orders of
    // magnitude at negligible cost.
    unsigned polish_prec = 2 * prec;
    Polynomial hp = p.with_precision(polish_prec);
    {
        PrecisionGuard polish_guard(polish_prec);
        for (int i = 0; i < n; ++i) {
            Real re = make_real(0), im = make_real(0);
            re = z[i].re;
            im = z[i].im;
            Complex x(re, im);
            for (int it = 0; it < 4; ++it) {
                auto [pv, dv] = hp.eval_with_derivative(x);
                if (dv.re.is_zero() && dv.im.is_zero()) break;
                x = x - pv / dv;
            }
            z[i] = x;
        }
    }

    RootSet rs;
    rs.precision_bits = prec;
    rs.iterations = iters;
    rs.roots = std::move(z);
    rs.is_real.assign(n, false);
    rs.residuals.resize(n);
    rs.converged = true;
    for (int i = 0; i < n; ++i) {
        Real scale = scaled_magnitude(p, rs.roots[i]);
        Real res = abs(p.eval(rs.roots[i]));
        rs.residuals[i] = scale.is_zero() ? res : Real(res / scale);
        if (rs.residuals[i] > residual_bound) rs.converged = false;
        rs.is_real[i] = rs.roots[i].im.is_zero();
    }
    sort_roots(rs);
    return rs;
}

}  // namespace

RootSet find_roots(const Polynomial& p, const RootConfig& cfg) {
    if (p.degree() < 1)
        throw std::invalid_argument("find_roots requires degree >= 1");
    unsigned prec = p.precision_bits();
    RootSet rs = solve_at_precision(p, cfg, prec);
    if (!rs.converged && cfg.escalate_precision)
        rs = solve_at_precision(p.with_precision(2 * prec), cfg, 2 * prec);
    return rs;
}

Real default_snap_tol(unsigned precision_bits) {
    if (precision_bits <= 64) return Real(1e-12);
    if (precision_bits <= 128) return Real(1e-18);
    return Real(1e-25);
}

RootSet snap_real(const RootSet& rs, const Real& tol) {
    RootSet out = rs;
    for (std::size_t i = 0; i < out.roots.size(); ++i) {
        if (abs(out.roots[i].im) <= tol * (1 + abs(out.roots[i].re))) {
            out.roots[i].im = 0;
            out.is_real[i] = true;
        } else {
            out.is_real[i] = false;
        }
    }
    sort_roots(out);
    return out;
}

RootSet snap_real(const RootSet& rs) {
    return snap_real(rs, default_snap_tol(rs.precision_bits));
}

bool is_real_rooted(const RootSet& rs) {
    return std::all_of(rs.is_real.begin(), rs.is_real.end(), [](bool b) { return b; });
}

std::vector<Real> real_parts_sorted(const RootSet& rs) {
    std::vector<Real> xs;
    xs.reserve(rs.roots.size());
    for (const Complex& z : rs.roots) xs.push_back(z.re);
    std::sort(xs.begin(), xs.end());
    return xs;
}

Real interlacing_margin(const std::vector<Real>& xs, const std::vector<Real>& ys) {
    std::vector<Real> merged;
    merged.reserve(xs.size() + ys.size());
    for (std::size_t i = 0; i < xs.size(); ++i) {
        merged.push_back(xs[i]);
        if (i < ys.size()) merged.push_back(ys[i]);
    }
    if (merged.size() < 2) return Real(std::numeric_limits<double>::infinity());
    Real margin = merged[1] - merged[0];
    for (std::size_t i = 2; i < merged.size(); ++i)
        margin = std::min(margin, Real(merged[i] - merged[i - 1]));
    return margin;
}

bool strictly_interlaces(const std::vector<Real>& xs, const std::vector<Real>& ys,
                         const Real& tol) {
    std::size_t nx = xs.size(), ny = ys.size();
    if (nx != ny && nx != ny + 1)
        throw std::invalid_argument("strictly_interlaces: |X| - |Y| must be 0 or 1");
    if (nx + ny < 2) return true;
    return interlacing_margin(xs, ys) > tol;
}

}  // namespace polyrec
