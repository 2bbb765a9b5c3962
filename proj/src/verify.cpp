#include "polyrec/verify.hpp"

#include "polyrec/sturm.hpp"

#include <algorithm>
#include <limits>
#include <stdexcept>

namespace polyrec {

using boost::multiprecision::abs;

namespace {

Real infinity() { return Real(std::numeric_limits<double>::infinity()); }

void require_pmpm(const RecurrenceParams& p) {
    SignCase sc = sign_case(p);
    if (!is_pmpm_case(sc))
        throw std::invalid_argument("requires sign case (+,-,+,-), got " +
                                    sign_case_string(sc));
}

bool x_equal(const CriticalScalars& s) {
    return abs(s.x_A - s.x_B) <= Real(1e-12) * (1 + abs(s.x_A));
}

// Solves the roots of consecutive W_n, seeding each solve with the previous
// root set. Interlacing makes the previous roots excellent guesses, which
// cuts the iteration count by an order of magnitude along a chain.
class ChainSolver {
public:
    RootSet solve(const Polynomial& p) {
        RootConfig cfg;
        if (static_cast<int>(prev_.size()) == p.degree() - 1 && !prev_.empty()) {
            cfg.initial = prev_;
            cfg.initial.push_back(Complex(root_radius_bound(p), Real(0)));
        }
        RootSet rs = find_roots(p, cfg);
        if (!rs.converged && !cfg.initial.empty())
            rs = find_roots(p);  // cold restart
        prev_ = rs.roots;
        return rs;
    }

private:
    std::vector<Complex> prev_;
};

}  // namespace

void VerificationReport::add(int n, bool ok, const Real& margin, std::string note) {
    details.push_back({n, ok, margin, std::move(note)});
    if (!ok) passed = false;
    if (details.size() == 1 || margin < worst_margin) worst_margin = margin;
}

bool real_rooted_criterion(const RecurrenceParams& p) {
    require_pmpm(p);
    CriticalScalars s = critical_scalars(p);
    return s.x_A <= s.x_B;
}

VerificationReport verify_interlacing_chain(const RecurrenceParams& p, int N,
                                            const VerifyConfig& cfg) {
    require_pmpm(p);
    PrecisionGuard guard(cfg.precision_bits);
    CriticalScalars s = critical_scalars(p, cfg.precision_bits);
    if (x_equal(s))
        throw std::invalid_argument(
            "requires x_A < x_B; use the normalized suite when x_A = x_B");
    if (s.x_A > s.x_B) throw std::invalid_argument("requires x_A < x_B");

    VerificationReport rep;
    rep.claim = "interlacing-chain";
    rep.params = p;
    rep.horizon = N;
    rep.passed = true;

    const Real u = *s.u, v = *s.v;
    Real tol(cfg.interlace_tol);
    auto w = generate_sequence(p, N + 1, cfg.precision_bits);
    ChainSolver solver;
    std::vector<Real> prev_roots;
    for (int n = 1; n <= N + 1; ++n) {
        RootSet rs = snap_real(solver.solve(w[n]));
        if (!rs.converged) {
            rep.add(n, false, Real(-1), "solver non-convergence");
            return rep;
        }
        bool all_real = is_real_rooted(rs);
        std::vector<Real> roots = real_parts_sorted(rs);
        Real bound_margin = std::min(roots.front() - u, v - roots.back());
        Real gap = interlacing_margin(roots, prev_roots);
        bool interlaced = all_real && (n == 1 || gap > tol);
        bool in_bounds = bound_margin > 0;
        Real margin = all_real ? std::min(bound_margin, gap) : Real(-1);
        rep.add(n, all_real && in_bounds && interlaced, margin,
                all_real ? "" : "non-real root");
        prev_roots = std::move(roots);
    }
    return rep;
}

VerificationReport verify_sign_conditions(const RecurrenceParams& p, int N,
                                          const VerifyConfig& cfg) {
    require_pmpm(p);
    PrecisionGuard guard(cfg.precision_bits);
    CriticalScalars s = critical_scalars(p, cfg.precision_bits);
    if (!(s.x_A < s.x_B)) throw std::invalid_argument("requires x_A < x_B");

    VerificationReport rep;
    rep.claim = "sign-conditions";
    rep.params = p;
    rep.horizon = N;
    rep.passed = true;

    const Real u = *s.u, v = *s.v;
    Real xd_minus = s.x_delta_minus.re, xd_plus = s.x_delta_plus.re;
    Real order_margin = std::min({Real(xd_minus - u), Real(s.x_A - xd_minus),
                                  Real(xd_plus - s.x_A), Real(v - xd_plus),
                                  Real(s.x_B - v)});
    // u <= x_delta^- and x_delta^+ <= v allow equality
    bool ordering = xd_minus >= u && xd_minus < s.x_A && s.x_A < xd_plus &&
                    xd_plus <= v && v < s.x_B;
    rep.add(-1, ordering, order_margin, "ordering u <= xd- < x_A < xd+ <= v < x_B");
    rep.add(-1, u < 0 && v > 0, std::min(-u, v), "u < 0 < v");

    for (int n = 0; n <= N; ++n) {
        Real wu = eval_recurrence_at(p, n, u, cfg.precision_bits);
        Real wv = eval_recurrence_at(p, n, v, cfg.precision_bits);
        Real signed_u = n % 2 == 0 ? wu : Real(-wu);
        rep.add(n, signed_u > 0 && wv > 0, std::min(signed_u, wv));
    }
    return rep;
}

VerificationReport verify_bound_sharpness(const RecurrenceParams& p, int N,
                                          const VerifyConfig& cfg) {
    require_pmpm(p);
    PrecisionGuard guard(cfg.precision_bits);
    CriticalScalars s = critical_scalars(p, cfg.precision_bits);
    if (!(s.x_A < s.x_B)) throw std::invalid_argument("requires x_A < x_B");

    VerificationReport rep;
    rep.claim = "bound-sharpness";
    rep.params = p;
    rep.horizon = N;
    rep.passed = true;

    const Real u = *s.u, v = *s.v;
    const int burn_in = 10;
    auto w = generate_sequence(p, N, cfg.precision_bits);
    ChainSolver solver;
    Real tol(cfg.convergence_tol);
    Real g_mid = infinity(), h_mid = infinity(), g_prev = infinity(), h_prev = infinity();
    Real g_final = infinity(), h_final = infinity();
    for (int n = 1; n <= N; ++n) {
        RootSet rs = snap_real(solver.solve(w[n]));
        if (!rs.converged) {
            rep.add(n, false, Real(-1), "solver non-convergence");
            return rep;
        }
        std::vector<Real> roots = real_parts_sorted(rs);
        Real g = roots.front() - u;
        Real h = v - roots.back();
        // monotonicity past the burn-in is informational only; the theorem
        // asserts the limit, not the rate
        bool shrinking = n <= burn_in || (g <= g_prev + tol / 10 && h <= h_prev + tol / 10);
        rep.add(n, true, std::min(g, h), shrinking ? "" : "gap not decreasing");
        if (n == N / 2) { g_mid = g; h_mid = h; }
        if (n == N) { g_final = g; h_final = h; }
        g_prev = g;
        h_prev = h;
    }
    rep.add(N, g_final < tol && h_final < tol,
            tol - std::max(g_final, h_final), "final gaps below tolerance");
    rep.add(N, g_final <= g_mid && h_final <= h_mid,
            std::min(g_mid - g_final, h_mid - h_final), "gaps shrank since N/2");
    return rep;
}

VerificationReport verify_limit_convergence(const RecurrenceParams& p, int N,
                                            const VerifyConfig& cfg) {
    p.require_valid();
    PrecisionGuard guard(cfg.precision_bits);
    LimitSet ls = classify(p, cfg.precision_bits);

    VerificationReport rep;
    rep.claim = "limit-convergence";
    rep.params = p;
    rep.horizon = N;
    rep.passed = true;

    Real tol(cfg.convergence_tol);
    Real d_mid(0), d_final(0);
    for (int n : {N / 2, N}) {
        Polynomial wn = generate_sequence(p, n, cfg.precision_bits).back();
        RootSet rs = find_roots(wn);
        if (!rs.converged) {
            rep.add(n, false, Real(-1), "solver non-convergence");
            return rep;
        }
        Real worst(0);
        for (const Complex& r : rs.roots) worst = std::max(worst, distance_to(ls, r));
        rep.add(n, true, tol - worst, "max root distance to limit set");
        (n == N ? d_final : d_mid) = worst;
    }
    rep.add(N, d_final < tol, tol - d_final, "final distance below tolerance");
    rep.add(N, d_final <= d_mid + tol / 10, d_mid + tol / 10 - d_final,
            "distance not increasing");
    return rep;
}

VerificationReport verify_lollipop(const RecurrenceParams& p, const VerifyConfig& cfg) {
    LollipopJunction j = lollipop_junction(p, cfg.precision_bits);
    PrecisionGuard guard(cfg.precision_bits);
    LimitSet ls = classify(p, cfg.precision_bits);

    VerificationReport rep;
    rep.claim = "lollipop-junction";
    rep.params = p;
    rep.passed = true;

    Real on_circle = abs(abs(j.point - ls.circle_center) - ls.circle_radius);
    rep.add(0, on_circle < Real(1e-12) * (1 + ls.circle_radius), Real(1e-12) - on_circle,
            "junction lies on C_0");
    rep.add(0, j.point >= ls.interval_lo && j.point <= ls.interval_hi,
            std::min(j.point - ls.interval_lo, ls.interval_hi - j.point),
            "junction lies in J_Delta");
    rep.add(0, j.outside_len > j.inside_len, j.outside_len - j.inside_len,
            "outside part longer than inside part");
    return rep;
}

VerificationReport verify_normalized_case(const RecurrenceParams& p, int N,
                                          const VerifyConfig& cfg) {
    require_pmpm(p);
    PrecisionGuard guard(cfg.precision_bits);
    CriticalScalars s = critical_scalars(p, cfg.precision_bits);
    if (!x_equal(s)) throw std::invalid_argument("requires x_A = x_B");

    VerificationReport rep;
    rep.claim = "normalized-case";
    rep.params = p;
    rep.horizon = N;
    rep.passed = true;

    const Real u = *s.u;
    const Real x_B = s.x_B;
    Real tol(cfg.convergence_tol);
    auto useq = normalized_sequence(p, N, cfg.precision_bits);

    // scalar recurrence values of U_n at x_B and u
    Real cprime = Real(p.c) / Real(p.a);
    Real a_at_u = Real(p.a) * u + Real(p.b);
    Real un_b0(1), un_b1 = x_B, un_u0(1), un_u1 = u;
    // A(x_B) = A(x_A) = 0, so odd steps at x_B only keep the c' term
    Real a_at_b = Real(p.a) * x_B + Real(p.b);

    ChainSolver solver;
    std::vector<Real> prev_roots;
    Real final_lo_gap = infinity(), final_hi_gap = infinity();
    for (int n = 2; n <= N; ++n) {
        Real un_b = n % 2 == 0 ? un_b1 + cprime * un_b0 : a_at_b * un_b1 + cprime * un_b0;
        un_b0 = un_b1;
        un_b1 = un_b;
        Real un_u = n % 2 == 0 ? un_u1 + cprime * un_u0 : a_at_u * un_u1 + cprime * un_u0;
        un_u0 = un_u1;
        un_u1 = un_u;

        const Polynomial& un = useq[n];
        bool deg_ok = un.degree() == (n + 1) / 2;
        RootSet rs = snap_real(solver.solve(un));
        if (!rs.converged) {
            rep.add(n, false, Real(-1), "solver non-convergence");
            return rep;
        }
        bool all_real = is_real_rooted(rs);
        std::vector<Real> roots = real_parts_sorted(rs);
        Real bound_margin = std::min(roots.front() - u, x_B - roots.back());
        Real gap = interlacing_margin(roots, prev_roots);
        bool pattern = n == 2 || gap > Real(cfg.interlace_tol);
        Real sign_b = un_b;  // U_n(x_B) > 0
        Real sign_u = (n + 1) / 2 % 2 == 0 ? un_u : Real(-un_u);  // U_n(u)(-1)^ceil(n/2) > 0
        bool ok = deg_ok && all_real && bound_margin > 0 && pattern && sign_b > 0 &&
                  sign_u > 0;
        Real margin = std::min({bound_margin, gap, sign_b, sign_u});
        rep.add(n, ok, margin, deg_ok ? "" : "degree mismatch");
        if (n == N && !roots.empty()) {
            final_lo_gap = roots.front() - u;
            final_hi_gap = x_B - roots.back();
        }
        prev_roots = std::move(roots);
    }
    rep.add(N, final_lo_gap < tol && final_hi_gap < tol,
            tol - std::max(final_lo_gap, final_hi_gap),
            "extreme roots approach u and x_B");
    return rep;
}

ScanSummary scan_sign_region(const std::vector<double>& a_values,
                             const std::vector<double>& b_values,
                             const std::vector<double>& c_values,
                             const std::vector<double>& d_values,
                             int horizon) {
    ScanSummary sum;
    sum.horizon = horizon;
    for (double a : a_values)
        for (double c : c_values)
            for (double b : b_values)
                for (double d : d_values) {
                    RecurrenceParams p{a, b, c, d};
                    require_pmpm(p);
                    ScanPoint pt;
                    pt.params = p;
                    pt.criterion = real_rooted_criterion(p);
                    pt.first_failure_n = -1;
                    auto w = exact_sequence(p, horizon);
                    for (int n = 2; n <= horizon && pt.first_failure_n < 0; ++n)
                        if (!real_rooted_exact(w[n])) pt.first_failure_n = n;
                    if (pt.criterion) {
                        pt.outcome = pt.first_failure_n < 0 ? ScanOutcome::CriterionTruePass
                                                            : ScanOutcome::CriterionTrueFail;
                        if (pt.first_failure_n >= 0) ++sum.false_negatives;
                    } else if (pt.first_failure_n >= 0) {
                        pt.outcome = ScanOutcome::FailureFound;
                    } else {
                        pt.outcome = ScanOutcome::Inconclusive;
                        ++sum.inconclusive;
                    }
                    sum.points.push_back(pt);
                }
    return sum;
}

}  // namespace polyrec
