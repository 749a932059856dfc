"""Rotational symmetry of doubly periodic horoball patterns, and the checklist
of criteria that rules out commensurable knot complements."""
from __future__ import annotations

import math
from dataclasses import dataclass, field
from itertools import product
from typing import Sequence

import numpy as np

from . import packing
from .errors import DomainError

CANDIDATE_ORDERS = (2, 3, 4, 6)
DEFAULT_TOL = 1e-9

LIMIT_CAVEAT = ("valid for the limit pattern; the filled manifolds approach it only "
                "once every q_i is sufficiently large, and no explicit bound is known")


@dataclass(frozen=True)
class HoroballPattern:
    """Marks (position, diameter) repeated over the lattice spanned by the rows
    of ``basis``.  Positions are stored reduced into the fundamental domain."""
    basis: np.ndarray
    marks: tuple[tuple[tuple[float, float], float], ...]

    def __init__(self, basis, marks: Sequence):
        b = np.asarray(basis, dtype=float).reshape(2, 2)
        if abs(np.linalg.det(b)) < 1e-12 * max(1.0, float(np.abs(b).max()) ** 2):
            raise DomainError("basis vectors are linearly dependent")
        if len(marks) == 0:
            raise DomainError("pattern needs at least one mark")
        reduced = []
        for pos, diam in marks:
            if not 0 < diam <= 1:
                raise DomainError(f"mark diameter must lie in (0, 1], got {diam!r}")
            frac = np.linalg.solve(b.T, np.asarray(pos, dtype=float))
            frac = frac - np.floor(frac)
            p = frac @ b
            reduced.append(((float(p[0]), float(p[1])), float(diam)))
        object.__setattr__(self, "basis", b)
        object.__setattr__(self, "marks", tuple(reduced))

    @property
    def scale(self) -> float:
        return math.sqrt(abs(float(np.linalg.det(self.basis))))

    def positions(self) -> np.ndarray:
        return np.array([p for p, _ in self.marks])

    def diameters(self) -> np.ndarray:
        return np.array([d for _, d in self.marks])

    def lattice_distance(self, a, b) -> float:
        """Distance from a to the nearest translate of b."""
        d = np.asarray(a, dtype=float) - np.asarray(b, dtype=float)
        frac = np.linalg.solve(self.basis.T, d)
        base = np.round(frac)
        best = math.inf
        for i, j in product((-1, 0, 1), repeat=2):
            v = (frac - base - (i, j)) @ self.basis
            best = min(best, float(np.hypot(*v)))
        return best

    def scaled(self, factor: float) -> "HoroballPattern":
        """Pattern scaled by ``factor``; diameters are kept (they are labels)."""
        return HoroballPattern(self.basis * factor,
                               [((p[0] * factor, p[1] * factor), d) for p, d in self.marks])


def crossing_pattern(n: int, rect: packing.CuspRectangle) -> HoroballPattern:
    """Unit-diameter marks at the rectangle corners, repeated with step 2 ell(s)
    along s and ell(w) along w.  Basis rows are (s-step, w-step)."""
    if n < 2:
        raise DomainError(f"n must be >= 2, got {n!r}")
    s_step = 2.0 * rect.ell_s
    return HoroballPattern([[s_step, 0.0], [0.0, rect.ell_w]], [((0.0, 0.0), 1.0)])


def _rotation(order: int) -> np.ndarray:
    a = 2.0 * math.pi / order
    return np.array([[math.cos(a), -math.sin(a)], [math.sin(a), math.cos(a)]])


def _is_period(p: HoroballPattern, v: np.ndarray, tol: float) -> bool:
    pos, diam = p.positions(), p.diameters()
    return all(any(abs(d - d2) <= tol and p.lattice_distance(x + v, x2) <= tol * p.scale
                   for x2, d2 in zip(pos, diam))
               for x, d in zip(pos, diam))


def _is_symmetry(p: HoroballPattern, rot: np.ndarray, center: np.ndarray, tol: float) -> bool:
    """Rotation about center maps the lattice to itself and every mark onto
    a translate of a mark with the same diameter."""
    # rotated periods must again be periods of the mark set
    if not all(_is_period(p, rot @ v, tol) for v in p.basis):
        return False
    pos, diam = p.positions(), p.diameters()
    for x, d in zip(pos, diam):
        y = rot @ (x - center) + center
        if not any(abs(d - d2) <= tol and p.lattice_distance(y, x2) <= tol * p.scale
                   for x2, d2 in zip(pos, diam)):
            return False
    return True


def candidate_centers(p: HoroballPattern, order: int) -> list[np.ndarray]:
    """Every point about which a rotation of the given order could carry the
    first mark onto some mark, modulo the lattice.

    A rotation R about c sends x0 to y iff (I - R) c = y - R x0, so each target
    translate fixes c.  Translates by lattice vectors with coefficients in
    [-2, 2] cover all classes of the lattice modulo (I - R) times itself.
    This includes the lattice points, edge midpoints and cell centers.
    """
    rot = _rotation(order)
    m = np.eye(2) - rot
    x0 = np.asarray(p.marks[0][0])
    d0 = p.marks[0][1]
    out = []
    for y, d in p.marks:
        if abs(d - d0) > 1e-12:
            continue
        for i, j in product(range(-2, 3), repeat=2):
            target = np.asarray(y) + i * p.basis[0] + j * p.basis[1]
            out.append(np.linalg.solve(m, target - rot @ x0))
    return out


def rotation_orders(p: HoroballPattern, tol: float = DEFAULT_TOL) -> set[int]:
    """Orders k in {2, 3, 4, 6} for which some rotation by 2 pi / k maps the
    pattern onto itself (positions within tol * sqrt(cell area))."""
    if not 0 < tol <= 1e-3:
        raise DomainError(f"tol must lie in (0, 1e-3], got {tol!r}")
    found = set()
    for order in CANDIDATE_ORDERS:
        rot = _rotation(order)
        if any(_is_symmetry(p, rot, c, tol) for c in candidate_centers(p, order)):
            found.add(order)
    return found


@dataclass(frozen=True)
class NearestStringReport:
    ell_w: float
    s_step: float
    distances: dict[str, float]
    minimum: float
    unique: bool
    direction: str | None
    in_range: bool
    assertion_holds: bool | None


def nearest_string_analysis(p: HoroballPattern, tol: float = DEFAULT_TOL) -> NearestStringReport:
    """Compare the three candidate nearest-neighbour distances between maximal
    marks: along w, along s, and across the diagonal of the cell."""
    s_step = float(np.hypot(*p.basis[0]))
    ell_w = float(np.hypot(*p.basis[1]))
    dist = {"w": ell_w, "s": s_step, "diagonal": math.hypot(s_step, ell_w)}
    dmin = min(dist.values())
    winners = [k for k, v in dist.items() if v - dmin <= tol * max(1.0, dmin)]
    unique = len(winners) == 1
    in_range = 1.0 < ell_w < 2.0
    holds = None
    if in_range:
        holds = unique and winners[0] == "w"
    return NearestStringReport(ell_w=ell_w, s_step=s_step, distances=dist, minimum=dmin,
                               unique=unique, direction=winners[0] if unique else None,
                               in_range=in_range, assertion_holds=holds)


@dataclass(frozen=True)
class ChecklistItem:
    name: str
    passed: bool
    detail: str


@dataclass
class ChecklistReport:
    tuple: tuple[int, ...]
    items: list[ChecklistItem] = field(default_factory=list)
    rotation_orders: set[int] | None = None
    conclusion: object = None

    @property
    def all_passed(self) -> bool:
        return bool(self.items) and all(i.passed for i in self.items)

    def as_notes(self) -> list[str]:
        out = [f"{i.name}: {'pass' if i.passed else 'fail'} ({i.detail})" for i in self.items]
        out.append(f"incommensurability: {self.conclusion.value}")
        return out


_LENS_EXCEPTION = (-2, 3, 7)


def commensurability_checklist(t) -> ChecklistReport:
    """Assemble the three criteria (no lens space surgery, only the strong
    inversion as symmetry, no hidden symmetry) for the pretzel knot of t."""
    from .pretzel import Incommensurability, canonical_form

    q = tuple(t.q if hasattr(t, "q") else t)
    report = ChecklistReport(tuple=q)
    if len(q) < 5 or len(q) % 2 == 0:
        report.conclusion = Incommensurability.NOT_APPLICABLE
        report.items.append(ChecklistItem(
            "scope", False, "requires an odd number m = 2n+1 >= 5 of entries"))
        return report
    n = (len(q) - 1) // 2

    lens_form = canonical_form(q) in {canonical_form(_LENS_EXCEPTION),
                                      canonical_form(tuple(-x for x in _LENS_EXCEPTION))}
    report.items.append(ChecklistItem(
        "no lens space surgery", not lens_form,
        "cited classification: among these pretzel knots only the (-2, 3, 7) form has one"))

    evens = sum(1 for x in q if x % 2 == 0)
    report.items.append(ChecklistItem(
        "symmetry group is the strong inversion", evens == 1,
        "cited fact, conditional on exactly one even entry" if evens == 1
        else f"{evens} even entries; the cited fact does not apply"))

    rect = packing.solve_knot_rectangle(n, cross_check=False)
    pat = crossing_pattern(n, rect)
    orders = rotation_orders(pat)
    strings = nearest_string_analysis(pat)
    report.rotation_orders = orders
    ok = orders == {2} and bool(strings.assertion_holds)
    report.items.append(ChecklistItem(
        "no hidden symmetry", ok,
        f"rotation orders {sorted(orders)} on the knot-cusp pattern with "
        f"ell(w) = {rect.ell_w:.6f}; {LIMIT_CAVEAT}"))

    report.conclusion = (Incommensurability.CERTIFIED_CONDITIONAL if report.all_passed
                         else Incommensurability.NOT_APPLICABLE)
    return report
