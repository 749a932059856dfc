"""Cone-deformation bounds for Dehn filling in terms of normalized length.

The functions F, f, A and I below are the ones used to turn a lower bound on
normalized filling length into a lower bound on the tube radius of the
filled cores (via I) or an upper bound on their total length (via A).
"""
from __future__ import annotations

import enum
import math
from dataclasses import dataclass
from typing import Sequence

from scipy.integrate import quad

from .errors import DomainError, NumericalError, UsageError, ValidityError
from .hypcore import (IsotopyVerdict, PUBLISHED_LENGTH_CUTOFF, Reason,
                      TUBE_RADIUS_CHI2, h_threshold, length_cutoff)
from .roots import find_root

HK_CONSTANT = 3.3957
# Normalized lengths must exceed this for the cone-deformation bounds to apply.
HK_MIN_NORMALIZED_LENGTH = 7.5832
TWO_PI_SQ = (2.0 * math.pi) ** 2

# Per-slope constants (times sqrt(k)) valid for |chi| <= 2.
PUBLISHED_RADIUS_CONSTANT = 14.90
PUBLISHED_LENGTH_CONSTANT = 20.76
# Bound quoted for I(tanh(2 ln(1+sqrt 2))).
PUBLISHED_I_BOUND = 222.01

QUAD_TOL = 1e-12


class Mode(enum.Enum):
    RADIUS = "Radius"
    LENGTH = "Length"


@dataclass(frozen=True)
class SlopeSpec:
    p: int
    q: int
    normalized_length: float

    def __post_init__(self):
        if math.gcd(abs(self.p), abs(self.q)) != 1:
            raise DomainError(f"slope ({self.p}, {self.q}) is not primitive")
        if not self.normalized_length > 0:
            raise DomainError("normalized_length must be positive")


@dataclass(frozen=True)
class HKState:
    z: float
    f_value: float
    A_value: float
    I_value: float

    @property
    def radius(self) -> float:
        return math.atanh(self.z)


def _check_z(z, closed_right=False):
    ok = 0 < z <= 1 if closed_right else 0 < z < 1
    if not ok:
        raise DomainError(f"z must lie in (0, 1{']' if closed_right else ')'}, got {z!r}")


def F_integrand(w: float) -> float:
    _check_z(w, closed_right=True)
    num = 1.0 + 4.0 * w + 6.0 * w * w + w ** 4
    return -num / ((w + 1.0) * (1.0 + w * w) ** 2)


def integral_F(z: float) -> float:
    """int_1^z F(w) dw by adaptive Gauss-Kronrod; positive for z < 1 since F < 0."""
    _check_z(z)
    val, err = quad(F_integrand, 1.0, z, epsabs=1e-13, epsrel=1e-13, limit=200)
    if err > QUAD_TOL:
        raise NumericalError(f"quadrature error estimate {err:.3e} > {QUAD_TOL}", residual=err)
    return val


def f_hk(z: float) -> float:
    _check_z(z)
    return HK_CONSTANT * (1.0 - z) * math.exp(-integral_F(z))


def A_visual(z: float) -> float:
    """Upper bound A(z) on the total visual area of the filled tubes."""
    _check_z(z)
    return HK_CONSTANT * z * (1.0 - z * z) / (1.0 + z * z)


def I_hk(z: float) -> float:
    return TWO_PI_SQ / f_hk(z)


def hk_state(z: float) -> HKState:
    f = f_hk(z)
    return HKState(z=z, f_value=f, A_value=A_visual(z), I_value=TWO_PI_SQ / f)


def _gate(L: float) -> float:
    if not L > HK_MIN_NORMALIZED_LENGTH:
        raise ValidityError(
            f"normalized length {L:.6g} does not exceed {HK_MIN_NORMALIZED_LENGTH}")
    return L


def min_L_for_radius(R_target: float) -> float:
    """Smallest combined normalized length forcing every filled core to have
    tube radius greater than R_target: sqrt(I(tanh R_target))."""
    if not R_target > 0:
        raise DomainError(f"R_target must be positive, got {R_target!r}")
    z = math.tanh(R_target)
    if z >= 1.0:
        raise DomainError(f"tanh({R_target!r}) rounds to 1")
    return _gate(math.sqrt(I_hk(z)))


def visual_area_root(target: float) -> float:
    """z* in (0.5, 1) with A(z*) = 2 pi target; A decreases there so it is unique
    and is the root nearest 1."""
    if not 0 < target < 0.1:
        raise DomainError(f"target total length must lie in (0, 0.1), got {target!r}")
    goal = 2.0 * math.pi * target
    return find_root(lambda z: A_visual(z) - goal, 0.5, 1.0 - 1e-9)


def min_L_for_total_length(target: float) -> float:
    """Smallest combined normalized length forcing the filled cores to have
    total length below ``target``."""
    z = visual_area_root(target)
    return _gate(math.sqrt(TWO_PI_SQ / f_hk(z)))


def published_I_check() -> tuple[float, bool]:
    """(I at tanh(2 ln(1+sqrt 2)), whether it respects the quoted 222.01)."""
    value = I_hk(math.tanh(TUBE_RADIUS_CHI2))
    return value, value <= PUBLISHED_I_BOUND


def combine_slopes(lengths: Sequence[float]) -> float:
    """Combined normalized length: 1/L^2 = sum 1/L_i^2."""
    if len(lengths) == 0:
        raise UsageError("need at least one slope")
    if any(not L > 0 for L in lengths):
        raise DomainError("normalized lengths must be positive")
    return math.fsum(1.0 / (L * L) for L in lengths) ** -0.5


def per_slope_constant(chi_abs: float, mode: Mode) -> float:
    """Constant c such that every slope >= c sqrt(k) certifies the given mode.

    For |chi| <= 2 the published 14.90 / 20.76 are used; otherwise the
    constant is recomputed from h(|chi|) or the derived length cutoff.
    """
    if not chi_abs > 0:
        raise DomainError(f"chi_abs must be positive, got {chi_abs!r}")
    mode = Mode(mode)
    if chi_abs <= 2:
        return PUBLISHED_RADIUS_CONSTANT if mode is Mode.RADIUS else PUBLISHED_LENGTH_CONSTANT
    if mode is Mode.RADIUS:
        return min_L_for_radius(h_threshold(chi_abs))
    cutoff, _ = length_cutoff(chi_abs)
    return min_L_for_total_length(cutoff)


def filling_verdict(slopes: Sequence[SlopeSpec], chi_abs: float,
                    mode: Mode | str) -> IsotopyVerdict:
    """Certify that every filled core misses an incompressible surface.

    Certified iff each slope has normalized length >= c sqrt(k) (k the slope
    count) and the combined normalized length exceeds 7.5832.  In Length mode
    a certificate also means every core is shorter than 0.015 (|chi| <= 2)
    or than the derived cutoff.
    """
    mode = Mode(mode)
    if len(slopes) == 0:
        raise UsageError("need at least one slope")
    k = len(slopes)
    threshold = per_slope_constant(chi_abs, mode) * math.sqrt(k)
    combined = combine_slopes([s.normalized_length for s in slopes])
    ok = combined > HK_MIN_NORMALIZED_LENGTH and all(
        s.normalized_length >= threshold for s in slopes)
    if ok:
        return IsotopyVerdict(True, Reason.NORMALIZED_LENGTH, threshold)
    return IsotopyVerdict(False, Reason.NONE, threshold)


def core_length_bound(mode: Mode | str, chi_abs: float = 2.0) -> float | None:
    """Length bound on each core implied by a Length-mode certificate."""
    if Mode(mode) is not Mode.LENGTH:
        return None
    return PUBLISHED_LENGTH_CUTOFF if chi_abs <= 2 else length_cutoff(chi_abs)[0]
