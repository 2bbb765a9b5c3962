#pragma once

#include "polyrec/polynomial.hpp"

#include <vector>

namespace polyrec {

struct RootConfig {
    int max_iters = 200;
    // Retry once at doubled precision when not converged.
    bool escalate_precision = true;
    // Optional warm start; must have size deg(p) when supplied.
    std::vector<Complex> initial;
};

struct RootSet {
    std::vector<Complex> roots;       // sorted by (re, im)
    std::vector<bool> is_real;
    std::vector<Real> residuals;      // |p(r)| / (sum_k |c_k||r|^k)
    int iterations = 0;
    bool converged = false;
    unsigned precision_bits = 53;
};

// Inclusion radius for all roots (Fujiwara bound), used for the initial
// guess circle.
Real root_radius_bound(const Polynomial& p);

// All complex zeros by simultaneous Aberth-Ehrlich iteration with Newton
// polishing at doubled precision. Deterministic for fixed cfg. Throws
// std::invalid_argument for degree < 1.
RootSet find_roots(const Polynomial& p, const RootConfig& cfg = {});

// Project roots with |im| <= tol * (1 + |re|) onto the real axis.
// tol < 0 selects the precision-scaled default.
RootSet snap_real(const RootSet& rs, const Real& tol);
RootSet snap_real(const RootSet& rs);

Real default_snap_tol(unsigned precision_bits);

bool is_real_rooted(const RootSet& rs);

std::vector<Real> real_parts_sorted(const RootSet& rs);

// Strict interlacing x_1 < y_1 < x_2 < ... with every gap > tol.
// Requires |X| - |Y| in {0, 1}; both inputs sorted ascending.
bool strictly_interlaces(const std::vector<Real>& xs, const std::vector<Real>& ys,
                         const Real& tol);

// Smallest gap in the interlaced ordering; negative when the ordering is
// violated. Used for margin reporting.
Real interlacing_margin(const std::vector<Real>& xs, const std::vector<Real>& ys);

}  // namespace polyrec
