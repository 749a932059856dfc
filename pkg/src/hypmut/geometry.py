"""Generalized circles in the plane and the Moebius maps used on them."""
from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .errors import DomainError

_EPS = 1e-12


@dataclass(frozen=True)
class GeneralizedCircle:
    """Either a circle (center, radius) or a line {x : normal . x = offset}."""
    kind: str
    center: tuple[float, float] | None = None
    radius: float | None = None
    normal: tuple[float, float] | None = None
    offset: float | None = None

    def __post_init__(self):
        if self.kind == "circle":
            if self.radius is None or not self.radius > 0:
                raise DomainError(f"circle radius must be positive, got {self.radius!r}")
        elif self.kind == "line":
            nx, ny = self.normal
            if abs(math.hypot(nx, ny) - 1.0) > 1e-9:
                raise DomainError("line normal must have unit norm")
        else:
            raise DomainError(f"unknown kind {self.kind!r}")

    @classmethod
    def circle(cls, x, y, r):
        return cls("circle", center=(float(x), float(y)), radius=float(r))

    @classmethod
    def line(cls, normal, offset):
        n = np.asarray(normal, dtype=float)
        n = n / np.linalg.norm(n)
        return cls("line", normal=(float(n[0]), float(n[1])), offset=float(offset))

    @property
    def is_line(self):
        return self.kind == "line"

    @property
    def diameter(self):
        return 2.0 * self.radius

    def center_array(self):
        return np.asarray(self.center)

    def invert(self, p, k=1.0) -> "GeneralizedCircle":
        """Image under inversion in the circle of radius sqrt(k) about p."""
        p = np.asarray(p, dtype=float)
        if self.is_line:
            n = np.asarray(self.normal)
            dist = float(n @ p) - self.offset
            if abs(dist) < _EPS:
                return self
            # line not through p -> circle through p, diameter k/|dist| along -n
            r = k / (2.0 * abs(dist))
            c = p - np.sign(dist) * r * n
            return GeneralizedCircle.circle(c[0], c[1], r)
        c = self.center_array()
        d = c - p
        power = float(d @ d) - self.radius ** 2
        if abs(power) < _EPS * max(1.0, self.radius ** 2):
            n = d / np.linalg.norm(d)
            return GeneralizedCircle.line(n, float(n @ p) + k / (2.0 * self.radius))
        c2 = p + k * d / power
        return GeneralizedCircle.circle(c2[0], c2[1], k * self.radius / abs(power))

    def similarity(self, scale=1.0, angle=0.0, shift=(0.0, 0.0)) -> "GeneralizedCircle":
        """x -> scale * Rot(angle) x + shift."""
        rot = np.array([[math.cos(angle), -math.sin(angle)],
                        [math.sin(angle), math.cos(angle)]])
        shift = np.asarray(shift, dtype=float)
        if self.is_line:
            n = rot @ np.asarray(self.normal)
            return GeneralizedCircle.line(n, scale * self.offset + float(n @ shift))
        c = scale * (rot @ self.center_array()) + shift
        return GeneralizedCircle.circle(c[0], c[1], scale * self.radius)

    def reflect(self, axis: str, at: float) -> "GeneralizedCircle":
        """Mirror image in the line x = at (axis 'x') or y = at (axis 'y')."""
        i = 0 if axis == "x" else 1
        if self.is_line:
            n = list(self.normal)
            n[i] = -n[i]
            off = self.offset - 2.0 * at * self.normal[i]
            return GeneralizedCircle.line(n, off)
        c = list(self.center)
        c[i] = 2.0 * at - c[i]
        return GeneralizedCircle.circle(c[0], c[1], self.radius)


def tangency_residual(a: GeneralizedCircle, b: GeneralizedCircle) -> float:
    """Zero iff a and b are externally tangent (circle-circle) or the circle
    touches the line."""
    if a.is_line and b.is_line:
        raise DomainError("tangency between two lines is not a constraint")
    if a.is_line:
        a, b = b, a
    if b.is_line:
        return abs(float(np.asarray(b.normal) @ a.center_array()) - b.offset) - a.radius
    return float(np.linalg.norm(a.center_array() - b.center_array())) - (a.radius + b.radius)


def line_spacing(a: GeneralizedCircle, b: GeneralizedCircle) -> float:
    """Distance between two parallel lines."""
    na, nb = np.asarray(a.normal), np.asarray(b.normal)
    if abs(abs(float(na @ nb)) - 1.0) > 1e-9:
        raise DomainError("lines are not parallel")
    return abs(a.offset - float(na @ nb) * b.offset)
