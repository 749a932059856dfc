"""Bracketed scalar root finding with a residual guarantee."""
from __future__ import annotations

from typing import Callable

import numpy as np
from scipy.optimize import brentq

from .errors import NumericalError

RESIDUAL_TOL = 1e-12


def find_root(func: Callable[[float], float], lo: float, hi: float, *,
              lo_limit: float | None = None, hi_limit: float | None = None,
              residual_tol: float = RESIDUAL_TOL, max_widen: int = 60) -> float:
    """Root of a continuous monotone ``func`` on ``[lo, hi]``.

    If the initial bracket does not change sign it is widened geometrically
    towards ``lo_limit`` / ``hi_limit`` (never past them).  Raises
    NumericalError when no bracket is found or the residual at the returned
    point exceeds ``residual_tol``.
    """
    flo, fhi = func(lo), func(hi)
    widen = 0
    while flo * fhi > 0:
        if widen >= max_widen:
            raise NumericalError(
                f"no sign change on [{lo!r}, {hi!r}]", residual=(flo, fhi))
        widen += 1
        if lo_limit is not None and lo > lo_limit:
            lo = lo_limit + 0.5 * (lo - lo_limit)
            flo = func(lo)
        if hi_limit is not None and hi < hi_limit:
            hi = hi_limit - 0.5 * (hi_limit - hi)
            fhi = func(hi)
        if lo_limit is None and hi_limit is None:
            width = hi - lo
            lo, hi = lo - width, hi + width
            flo, fhi = func(lo), func(hi)
    if flo == 0.0:
        return lo
    if fhi == 0.0:
        return hi

    root, info = brentq(func, lo, hi, xtol=1e-300, rtol=4 * np.finfo(float).eps,
                        maxiter=500, full_output=True, disp=False)
    residual = abs(func(root))
    if not info.converged or residual > residual_tol:
        raise NumericalError(
            f"root finder stopped at x={root!r} with residual {residual:.3e} "
            f"after {info.iterations} iterations", residual=residual)
    return root
