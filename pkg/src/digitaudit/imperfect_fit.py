"""Fitting the imperfect first-digit law to an observed histogram.

The count model is c(d) = N_s * log10(1/d + 1 + s*d) for d = 1..9, with
s >= 0 controlling the upturn at large digits (continuous minimum at
1/sqrt(s), minimum value log10(1 + 2*sqrt(s))) and N_s an integer scale.
Because N_s is constrained to integers, the fitted curve's total surface
S = sum c(d) need not equal the number of data points.

Search protocol (deterministic, reproducible):
  * N_s ranges over the integers [ceil(N/2), 2N] for histogram total N;
  * for each N_s, s is located on a coarse grid over [0, 1] with step
    1e-4, then refined by golden-section search to below 1e-7;
  * the Pearson statistic sum (O_d - c(d))^2 / c(d) (expected-count
    denominator) is minimized; ties break toward smaller s, then smaller
    N_s.

The enlarged family contains the plain first-digit law (s = 0, N_s = N),
so the optimal fit never does worse than it on the search grid.
"""

from __future__ import annotations

import math
import warnings
from dataclasses import dataclass

import numpy as np

from . import _kernels
from .digit_laws import FIRST_DIGITS, imperfect_counts
from .errors import DegenerateHistogramWarning, DomainError
from .gof_tests import DigitHistogram

S_GRID_STEP = 1e-4
S_REFINE_TOL = 1e-7

_INVPHI = (math.sqrt(5.0) - 1.0) / 2.0


@dataclass(frozen=True)
class ImperfectFitResult:
    s: float
    n_s: int
    chi2: float
    surface: float
    minimum_location: float
    degenerate: bool = False


def imperfect_curve(s: float, n_s: int) -> tuple[float, ...]:
    """Expected counts for digits 1..9 at the given parameters."""
    return tuple(imperfect_counts(d, s, n_s) for d in FIRST_DIGITS)


def minimum_location(s: float) -> float:
    """Argmin 1/sqrt(s) of the continuous count curve (inf at s = 0)."""
    if s < 0:
        raise DomainError(f"curl parameter s must be >= 0, got {s}")
    return math.inf if s == 0 else 1.0 / math.sqrt(s)


def minimum_value(s: float) -> float:
    """Value log10(1 + 2*sqrt(s)) of the continuous curve at its minimum."""
    if s < 0:
        raise DomainError(f"curl parameter s must be >= 0, got {s}")
    return math.log10(1.0 + 2.0 * math.sqrt(s))


def fit_chi2(observed, s: float, n_s: int) -> float:
    """Pearson statistic of the observed nine counts against c(d; s, N_s)."""
    return math.fsum(
        (o - c) ** 2 / c for o, c in zip(observed, imperfect_curve(s, n_s))
    )


def fit_imperfect(hist: DigitHistogram) -> ImperfectFitResult:
    """Best (s, N_s) for a first-digit histogram under the search protocol."""
    if hist.position != 1:
        raise DomainError("imperfect-law fitting applies to first-digit histograms only")
    observed = hist.count_vector()
    total = hist.total
    if total < 9:
        raise DomainError(f"histogram total must be at least 9, got {total}")

    degenerate = sum(1 for o in observed if o > 0) == 1
    if degenerate:
        warnings.warn(
            "all histogram mass sits on a single digit; fit is ill-conditioned",
            DegenerateHistogramWarning,
            stacklevel=2,
        )

    n = int(round(total))
    ns_values = np.arange(math.ceil(n / 2), 2 * n + 1, dtype=np.float64)
    n_grid = int(round(1.0 / S_GRID_STEP)) + 1
    s_grid = np.linspace(0.0, 1.0, n_grid)
    digits = np.arange(1.0, 10.0)
    l_matrix = np.log10(1.0 / digits + 1.0 + s_grid[:, None] * digits)
    obs_arr = np.ascontiguousarray(observed, dtype=np.float64)

    coarse_chi2, coarse_idx = _kernels.imperfect_scan(obs_arr, l_matrix, ns_values)

    best: tuple[float, float, int] | None = None  # (chi2, s, n_s)
    for i, ns_f in enumerate(ns_values):
        ns = int(ns_f)
        idx = int(coarse_idx[i])
        candidate = (float(coarse_chi2[i]), float(s_grid[idx]), ns)
        lo = float(s_grid[max(idx - 1, 0)])
        hi = float(s_grid[min(idx + 1, n_grid - 1)])
        s_ref, chi2_ref = _golden_min(lambda s: fit_chi2(observed, s, ns), lo, hi)
        refined = (chi2_ref, s_ref, ns)
        if refined[:2] < candidate[:2]:  # tie on chi2 keeps the smaller s
            candidate = refined
        if best is None or candidate < best:
            best = candidate
    assert best is not None
    _, s_best, ns_best = best

    chi2_best = fit_chi2(observed, s_best, ns_best)
    return ImperfectFitResult(
        s=s_best,
        n_s=ns_best,
        chi2=chi2_best,
        surface=math.fsum(imperfect_curve(s_best, ns_best)),
        minimum_location=minimum_location(s_best),
        degenerate=degenerate,
    )


def _golden_min(func, lo: float, hi: float) -> tuple[float, float]:
    """Golden-section minimum of func on [lo, hi], tracking the best probe.

    Shrinks the bracket below S_REFINE_TOL and returns the best point
    actually evaluated, so the reported value is never extrapolated.
    """
    a, b = lo, hi
    c = b - _INVPHI * (b - a)
    d = a + _INVPHI * (b - a)
    fc, fd = func(c), func(d)
    best_x, best_f = (c, fc) if (fc, c) <= (fd, d) else (d, fd)
    while b - a > S_REFINE_TOL:
        if fc < fd:
            b, d, fd = d, c, fc
            c = b - _INVPHI * (b - a)
            fc = func(c)
            if (fc, c) < (best_f, best_x):
                best_x, best_f = c, fc
        else:
            a, c, fc = c, d, fd
            d = a + _INVPHI * (b - a)
            fd = func(d)
            if (fd, d) < (best_f, best_x):
                best_x, best_f = d, fd
    return best_x, best_f
