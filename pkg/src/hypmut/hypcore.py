"""Closed-form hyperbolic geometry: disk and cone areas, mass ratio, the collar
lemma and the Euler-characteristic thresholds for pushing a geodesic off an
incompressible surface.

All lengths are hyperbolic (dimensionless), all angles in radians.
"""
from __future__ import annotations

import enum
import math
from dataclasses import dataclass

from .errors import CollarDomainError, DomainError, UsageError
from .roots import find_root

# 2 ln(1 + sqrt 2) = h(2): tube radius that guarantees disjointness when |chi| <= 2.
TUBE_RADIUS_CHI2 = 2.0 * math.log1p(math.sqrt(2.0))

# Published length cutoff for |chi| <= 2 (truncated from the derived 0.01515...).
PUBLISHED_LENGTH_CUTOFF = 0.015

# Collar lemma applies for length < sqrt(3)/(4 pi) ln(1+sqrt 2)^2 = 0.10707...;
# the published, rounded-down value is used as the hard upper bound.
COLLAR_LENGTH_EXACT = math.sqrt(3.0) / (4.0 * math.pi) * math.log1p(math.sqrt(2.0)) ** 2
COLLAR_LENGTH_BOUND = 0.107


def _require_positive(name, value):
    if not value > 0 or not math.isfinite(value):
        raise DomainError(f"{name} must be a positive finite real, got {value!r}")


@dataclass(frozen=True)
class TubeData:
    length: float
    radius: float

    def __post_init__(self):
        _require_positive("length", self.length)
        _require_positive("radius", self.radius)


@dataclass(frozen=True)
class ComplexLength:
    """l + i*theta for a closed geodesic; theta is reduced into [0, 2pi)."""
    real_part: float
    rotation: float = 0.0

    def __post_init__(self):
        _require_positive("real_part", self.real_part)
        object.__setattr__(self, "rotation", math.fmod(self.rotation, 2 * math.pi) % (2 * math.pi))

    def __complex__(self):
        return complex(self.real_part, self.rotation)


class Reason(enum.Enum):
    TUBE_RADIUS = "TubeRadius"
    LENGTH = "Length"
    NORMALIZED_LENGTH = "NormalizedLength"
    NONE = "None"


@dataclass(frozen=True)
class IsotopyVerdict:
    certified: bool
    reason: Reason
    threshold_used: float
    # derived (untruncated) threshold when a published constant was used instead
    derived_threshold: float | None = None

    def __post_init__(self):
        if self.certified != (self.reason is not Reason.NONE):
            raise ValueError("certified must hold exactly when a reason is given")


def geodesic_disk_area(r: float) -> float:
    """Area 4 pi sinh^2(r/2) of a totally geodesic hyperbolic disk of radius r."""
    _require_positive("r", r)
    return 4.0 * math.pi * math.sinh(0.5 * r) ** 2


def cone_area(boundary_length: float, r: float) -> float:
    """Area of the geodesic cone from a point to a curve of the given length
    lying on the sphere of radius r about that point."""
    _require_positive("r", r)
    if boundary_length < 0:
        raise DomainError(f"boundary_length must be >= 0, got {boundary_length!r}")
    # cosh r - 1 written as 2 sinh^2(r/2) to avoid cancellation at small r
    return boundary_length * 2.0 * math.sinh(0.5 * r) ** 2 / math.sinh(r)


def mass_ratio(disk_area: float, r: float) -> float:
    if disk_area < 0:
        raise DomainError(f"disk_area must be >= 0, got {disk_area!r}")
    return disk_area / geodesic_disk_area(r)


def collar_k(length: float) -> float:
    """k(x) = cosh(sqrt(4 pi x / sqrt 3)) - 1."""
    _require_positive("length", length)
    u = math.sqrt(4.0 * math.pi * length / math.sqrt(3.0))
    return 2.0 * math.sinh(0.5 * u) ** 2  # = cosh u - 1 without cancellation


def collar_ratio(length: float) -> float:
    """sqrt(1 - 2k)/k at k = k(length); the quantity compared against g(|chi|)."""
    k = collar_k(length)
    if k >= 0.5:
        raise CollarDomainError(f"k({length!r}) = {k!r} >= 1/2")
    return math.sqrt(1.0 - 2.0 * k) / k


def collar_radius(length: float) -> float:
    """Embedded tube radius guaranteed by the collar lemma for a short geodesic."""
    _require_positive("length", length)
    if length >= COLLAR_LENGTH_BOUND:
        raise DomainError(
            f"collar lemma needs length < {COLLAR_LENGTH_BOUND}, got {length!r}")
    sinh2 = 0.5 * (collar_ratio(length) - 1.0)
    return math.asinh(math.sqrt(sinh2))


def h_threshold(chi_abs: float) -> float:
    """Tube radius 2 asinh(sqrt(x/2)) beyond which a geodesic misses F."""
    _require_positive("chi_abs", chi_abs)
    return 2.0 * math.asinh(math.sqrt(0.5 * chi_abs))


def g_threshold(chi_abs: float) -> float:
    """2x^2 + 4x + 1, i.e. 2 sinh^2(h(x)) + 1."""
    if chi_abs < 0:
        raise DomainError(f"chi_abs must be >= 0, got {chi_abs!r}")
    return 2.0 * chi_abs ** 2 + 4.0 * chi_abs + 1.0


def max_length_for_chi(chi_abs: float) -> float:
    """Largest geodesic length l* with collar_ratio(l*) = g(chi_abs).

    collar_ratio decreases from +inf (l -> 0) to 0 (k = 1/2), so the root is
    unique; every l < l* satisfies the strict hypothesis.
    """
    _require_positive("chi_abs", chi_abs)
    target = g_threshold(chi_abs)
    # k = 1/2 at l = acosh(3/2)^2 sqrt(3)/(4 pi)
    l_half = math.acosh(1.5) ** 2 * math.sqrt(3.0) / (4.0 * math.pi)
    hi = l_half * (1.0 - 1e-12)
    # compared on a log scale: the ratio spans many orders of magnitude
    log_target = math.log(target)
    return find_root(lambda x: math.log(collar_ratio(x)) - log_target, 1e-3, 0.05,
                     lo_limit=0.0, hi_limit=hi)


def length_cutoff(chi_abs: float) -> tuple[float, float]:
    """(cutoff used for certification, derived root) for a given |chi|.

    At |chi| = 2 the published 0.015 is used when it is the smaller value.
    """
    derived = max_length_for_chi(chi_abs)
    if chi_abs == 2:
        return min(derived, PUBLISHED_LENGTH_CUTOFF), derived
    return derived, derived


def isotopy_verdict(chi_abs: float, tube_radius: float | None = None,
                    length: float | None = None) -> IsotopyVerdict:
    """Decide whether a geodesic with the given tube radius and/or length can
    be isotoped off an incompressible surface with |chi| = chi_abs."""
    if tube_radius is None and length is None:
        raise UsageError("supply at least one of tube_radius, length")
    _require_positive("chi_abs", chi_abs)

    h = h_threshold(chi_abs)
    if tube_radius is not None:
        _require_positive("tube_radius", tube_radius)
        if tube_radius > h:
            return IsotopyVerdict(True, Reason.TUBE_RADIUS, h)

    cutoff, derived = length_cutoff(chi_abs)
    if length is not None:
        _require_positive("length", length)
        if length < cutoff:
            return IsotopyVerdict(True, Reason.LENGTH, cutoff, derived)

    used = cutoff if length is not None else h
    return IsotopyVerdict(False, Reason.NONE, used,
                          derived if length is not None else None)
