"""Polynomial sequences from order-two recurrences with linear coefficients.

Thin wrapper over the C++ core: sequence generation, root finding,
limit-set classification, and theorem verification suites.
"""

from ._polyrec import (
    classify,
    closed_form,
    critical_scalars,
    limit_distance,
    real_rooted_criterion,
    real_rooted_exact,
    render_svg,
    roots,
    scan,
    sequence,
    verify,
)

__all__ = [
    "classify",
    "closed_form",
    "critical_scalars",
    "limit_distance",
    "real_rooted_criterion",
    "real_rooted_exact",
    "render_svg",
    "roots",
    "scan",
    "sequence",
    "verify",
]
