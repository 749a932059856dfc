"""Circle packings of the cusp rectangles of the untwisted augmented link.

Cusp rectangles are drawn in the Euclidean picture seen from the cusp point:
the two circles through the point sent to infinity become the horizontal
lines y = 0 and y = 1 (so l(s) = 1), the rectangle's shaded walls are
vertical lines, and l(w) is their horizontal separation.

White-face circles are labelled around the ring P1, ..., P(2n+1) that every
P is tangent to (together with A and B):

* crossing rectangle (P1 n P2 sent to infinity): P1 is the bottom line, P2
  the top line, A and B are diameter-1 circles whose centers carry the walls,
  and P3 ... P(2n+1) form a vertical chain on the bisector, P3 touching the
  top line.
* knot rectangle (P2 n A sent to infinity): A is the bottom line, P2 the top
  line, P1 and P3 are diameter-1 circles carrying the walls, B hangs from the
  top line, and P4 ... P(2n+1) form a chain along the bottom under B, P4
  touching P3 and P(2n+1) touching P1.

Both rectangles are built two ways: a Newton solve of the tangency graph and
the image of the concentric Steiner chain under an inversion.
"""
from __future__ import annotations

import enum
import math
from dataclasses import dataclass, field

import numpy as np

from .errors import ConsistencyError, DomainError, NumericalError, UsageError
from .geometry import GeneralizedCircle, line_spacing, tangency_residual

RESIDUAL_TOL = 1e-10
MAX_ITER = 100
ROUTE_TOL = 1e-8


class RectKind(enum.Enum):
    CROSSING_CIRCLE = "CrossingCircle"
    KNOT_CUSP = "KnotCusp"


# --------------------------------------------------------------------------
# tangency graphs and the Newton solver
# --------------------------------------------------------------------------

@dataclass
class Node:
    name: str
    circle: GeneralizedCircle
    free: tuple[bool, bool, bool] = (False, False, False)  # x, y, radius


@dataclass(frozen=True)
class Mirror:
    """``target`` is the reflection of ``source`` in x = at or y = at."""
    source: str
    target: str
    axis: str
    at: float


@dataclass
class TangencyGraph:
    nodes: list[Node]
    edges: list[tuple[str, str]]
    mirrors: list[Mirror] = field(default_factory=list)

    def __post_init__(self):
        names = [nd.name for nd in self.nodes]
        if len(set(names)) != len(names):
            raise UsageError("duplicate node names")
        known = set(names)
        for a, b in self.edges:
            if a not in known or b not in known:
                raise UsageError(f"edge ({a}, {b}) references an unknown node")
        targets = [m.target for m in self.mirrors]
        if len(set(targets)) != len(targets):
            raise UsageError("a node may be the target of at most one mirror")
        for m in self.mirrors:
            if m.source not in known or m.target not in known or m.source == m.target:
                raise UsageError(f"bad mirror {m}")
            if m.source in targets:
                raise UsageError("mirror chains are not supported")
        if not self._connected():
            raise UsageError("tangency graph is not connected")

    def _connected(self):
        adj = {nd.name: set() for nd in self.nodes}
        for a, b in self.edges:
            adj[a].add(b)
            adj[b].add(a)
        for m in self.mirrors:
            adj[m.source].add(m.target)
            adj[m.target].add(m.source)
        start = self.nodes[0].name
        seen, stack = {start}, [start]
        while stack:
            for nb in adj[stack.pop()]:
                if nb not in seen:
                    seen.add(nb)
                    stack.append(nb)
        return len(seen) == len(adj)

    def node(self, name):
        for nd in self.nodes:
            if nd.name == name:
                return nd
        raise KeyError(name)


@dataclass
class SolveResult:
    circles: dict[str, GeneralizedCircle]
    residual: float
    iterations: int
    trace: list[float]


class _Layout:
    """Maps the reduced parameter vector to a full circle assignment."""

    def __init__(self, graph, initial):
        self.graph = graph
        self.base = {nd.name: initial.get(nd.name, nd.circle) for nd in graph.nodes}
        self.mirror_of = {m.target: m for m in graph.mirrors}
        self.slots = []
        for nd in graph.nodes:
            if nd.name in self.mirror_of:
                continue
            if nd.circle.is_line and any(nd.free):
                raise UsageError(f"line {nd.name} cannot have free parameters")
            for i, flag in enumerate(nd.free):
                if flag:
                    self.slots.append((nd.name, i))

    def initial_vector(self):
        out = []
        for name, i in self.slots:
            c = self.base[name]
            out.append(c.radius if i == 2 else c.center[i])
        return np.array(out, dtype=float)

    def assemble(self, vec):
        vals = {}
        for (name, i), v in zip(self.slots, vec):
            vals.setdefault(name, {})[i] = v
        circles = {}
        for nd in self.graph.nodes:
            if nd.name in self.mirror_of:
                continue
            c = self.base[nd.name]
            if nd.name in vals:
                x, y, r = c.center[0], c.center[1], c.radius
                upd = vals[nd.name]
                x, y, r = upd.get(0, x), upd.get(1, y), upd.get(2, r)
                if not r > 0:
                    return None
                c = GeneralizedCircle.circle(x, y, r)
            circles[nd.name] = c
        for tgt, m in self.mirror_of.items():
            circles[tgt] = circles[m.source].reflect(m.axis, m.at)
        return circles


def _residuals(graph, circles):
    return np.array([tangency_residual(circles[a], circles[b]) for a, b in graph.edges])


def solve_tangency(graph: TangencyGraph,
                   initial: dict[str, GeneralizedCircle] | None = None,
                   *, tol: float = RESIDUAL_TOL, max_iter: int = MAX_ITER) -> SolveResult:
    """Gauss-Newton on the tangency residuals of ``graph``.

    Mirror targets are eliminated before solving, so a symmetric graph may
    list more edges than unknowns; the reduced Jacobian must still have full
    column rank.  Iterates until the largest residual stops improving below
    ``tol`` (usually near machine precision) and raises NumericalError on a
    singular Jacobian, a non-positive radius or divergence.
    """
    layout = _Layout(graph, initial or {})
    x = layout.initial_vector()
    nfree = len(x)
    circles = layout.assemble(x)
    if circles is None:
        raise NumericalError("initial assignment has a non-positive radius")
    res = _residuals(graph, circles)
    trace = [float(np.max(np.abs(res)))]
    if nfree == 0:
        if trace[-1] >= tol:
            raise NumericalError("fixed configuration is not tangent", residual=trace)
        return SolveResult(circles, trace[-1], 0, trace)

    it = 0
    for it in range(1, max_iter + 1):
        J = np.empty((len(res), nfree))
        for j in range(nfree):
            h = 1e-7 * max(1.0, abs(x[j]))
            xp, xm = x.copy(), x.copy()
            xp[j] += h
            xm[j] -= h
            cp, cm = layout.assemble(xp), layout.assemble(xm)
            if cp is None or cm is None:
                raise NumericalError("radius collapsed while differencing", residual=trace)
            J[:, j] = (_residuals(graph, cp) - _residuals(graph, cm)) / (2 * h)
        if np.linalg.matrix_rank(J, tol=1e-10 * max(1.0, np.abs(J).max())) < nfree:
            raise NumericalError("tangency Jacobian is singular", residual=trace)
        step = np.linalg.lstsq(J, -res, rcond=None)[0]

        norm0 = float(res @ res)
        t = 1.0
        while True:
            trial = layout.assemble(x + t * step)
            if trial is not None:
                r_trial = _residuals(graph, trial)
                if float(r_trial @ r_trial) <= norm0 or t < 1e-6:
                    break
            t *= 0.5
            if t < 1e-12:
                raise NumericalError("line search failed", residual=trace)
        if trial is None:
            raise NumericalError("radius became non-positive", residual=trace)
        x = x + t * step
        circles, res = trial, r_trial
        trace.append(float(np.max(np.abs(res))))
        if trace[-1] < tol and (trace[-1] < 1e-14 or trace[-1] >= 0.5 * trace[-2]):
            break
    if not trace[-1] < tol:
        raise NumericalError(
            f"no convergence after {it} iterations (max residual {trace[-1]:.3e})",
            residual=trace)
    return SolveResult(circles, trace[-1], it, trace)


# --------------------------------------------------------------------------
# cusp rectangles
# --------------------------------------------------------------------------

@dataclass
class CuspRectangle:
    n: int
    rect_kind: RectKind
    ell_s: float
    ell_w: float
    circle_diameters: dict[str, float]
    residual: float
    circles: dict[str, GeneralizedCircle]
    route: str
    walls: tuple[float, float] = (0.0, 0.0)

    @property
    def chain(self) -> list[str]:
        first = 3 if self.rect_kind is RectKind.CROSSING_CIRCLE else 4
        return [f"P{j}" for j in range(first, 2 * self.n + 2)]

    @property
    def smallest_chain_circle(self) -> str:
        return min(self.chain, key=lambda nm: self.circle_diameters[nm])

    def max_residual(self) -> float:
        return max_tangency_residual(self)


def _strip_lines():
    return (GeneralizedCircle.line((0.0, 1.0), 0.0),
            GeneralizedCircle.line((0.0, 1.0), 1.0))


def crossing_graph(n: int) -> TangencyGraph:
    """Tangency graph of the crossing-circle rectangle, centered on x = 0.

    Unknowns: the x coordinate of A (B is its mirror) and the heights and
    radii of the upper half of the chain (the lower half is mirrored in
    y = 1/2, the middle circle is pinned to the center).
    """
    _check_n(n)
    k = 2 * n - 1
    bottom, top = _strip_lines()
    d0 = 1.0 + 1.0 / k
    r0 = 1.0 / (2 * k)
    chain = [f"P{j}" for j in range(3, 2 * n + 2)]  # top to bottom
    nodes = [Node("P1", bottom), Node("P2", top),
             Node("A", GeneralizedCircle.circle(-d0 / 2, 0.5, 0.5), (True, False, False)),
             Node("B", GeneralizedCircle.circle(d0 / 2, 0.5, 0.5))]
    mirrors = [Mirror("A", "B", "x", 0.0)]
    mid = (k - 1) // 2
    for j, name in enumerate(chain):
        y = 1.0 - (2 * j + 1) * r0
        if j < mid:
            free = (False, True, True)
        elif j == mid:
            free = (False, False, True)
        else:
            free = (False, False, False)
            mirrors.append(Mirror(chain[k - 1 - j], name, "y", 0.5))
        nodes.append(Node(name, GeneralizedCircle.circle(0.0, y, r0), free))
    edges = [("A", "P1"), ("A", "P2"), ("B", "P1"), ("B", "P2"),
             (chain[0], "P2"), (chain[-1], "P1")]
    for j, name in enumerate(chain):
        edges += [(name, "A"), (name, "B")]
        if j + 1 < k:
            edges.append((name, chain[j + 1]))
    return TangencyGraph(nodes, edges, mirrors)


def knot_graph(n: int) -> TangencyGraph:
    """Tangency graph of the knot-cusp rectangle, centered on x = 0.

    The adjacency of the chain under B follows the ring order: P4 touches P3,
    P(2n+1) touches P1, every chain circle touches A (bottom line), B and its
    ring neighbours.
    """
    _check_n(n)
    bottom, top = _strip_lines()
    d0 = 2.0 - 0.8 / n
    rb = d0 * d0 / 8.0
    m = 2 * n - 2
    chain = [f"P{j}" for j in range(4, 2 * n + 2)]  # right to left
    a = d0 / 2 - 0.45
    xs = np.linspace(a, -a, m) if m > 1 else np.array([0.0])
    r0 = min(0.9 * (2 * a / max(m - 1, 1)) / 2, 0.25)
    nodes = [Node("A", bottom), Node("P2", top),
             Node("P1", GeneralizedCircle.circle(-d0 / 2, 0.5, 0.5), (True, False, False)),
             Node("P3", GeneralizedCircle.circle(d0 / 2, 0.5, 0.5)),
             Node("B", GeneralizedCircle.circle(0.0, 1.0 - rb, rb), (False, True, True))]
    mirrors = [Mirror("P1", "P3", "x", 0.0)]
    for j, name in enumerate(chain):
        if j < m // 2:
            free = (True, True, True)
        else:
            free = (False, False, False)
            mirrors.append(Mirror(chain[m - 1 - j], name, "x", 0.0))
        nodes.append(Node(name, GeneralizedCircle.circle(xs[j], r0, r0), free))
    edges = [("P1", "A"), ("P1", "P2"), ("P3", "A"), ("P3", "P2"),
             ("B", "P2"), ("B", "P1"), ("B", "P3"),
             (chain[0], "P3"), (chain[-1], "P1")]
    for j, name in enumerate(chain):
        edges += [(name, "A"), (name, "B")]
        if j + 1 < m:
            edges.append((name, chain[j + 1]))
    return TangencyGraph(nodes, edges, mirrors)


def _check_n(n):
    if not isinstance(n, (int, np.integer)) or n < 2:
        raise DomainError(f"n must be an integer >= 2, got {n!r}")


def _shift_x(circles, dx):
    return {k: c.similarity(shift=(dx, 0.0)) for k, c in circles.items()}


def _graph_residual(graph, circles):
    return float(np.max(np.abs(_residuals(graph, circles))))


def solve_crossing_rectangle(n: int) -> CuspRectangle:
    """Newton solve of the crossing-circle rectangle; l(w) = 1 + D(P*)."""
    graph = crossing_graph(n)
    sol = solve_tangency(graph)
    ell_w = sol.circles["B"].center[0] - sol.circles["A"].center[0]
    circles = _shift_x(sol.circles, ell_w / 2)
    return _crossing_rect(n, circles, _graph_residual(graph, sol.circles), "newton")


def _crossing_rect(n, circles, residual, route):
    ell_w = circles["B"].center[0] - circles["A"].center[0]
    diam = {k: c.diameter for k, c in circles.items() if not c.is_line}
    rect = CuspRectangle(n, RectKind.CROSSING_CIRCLE, 1.0, ell_w, diam, residual,
                         circles, route, walls=(circles["A"].center[0], circles["B"].center[0]))
    diam["P*"] = diam[f"P{n + 2}"]
    return rect


# --------------------------------------------------------------------------
# Steiner chain / Moebius route
# --------------------------------------------------------------------------

def steiner_outer_radius(n: int) -> float:
    """Outer radius R of the concentric Steiner chain of 2n+1 circles around
    the unit circle: sin(pi/(2n+1)) = (R-1)/(R+1)."""
    _check_n(n)
    s = math.sin(math.pi / (2 * n + 1))
    return (1.0 + s) / (1.0 - s)


def steiner_normal_form(n: int) -> dict[str, GeneralizedCircle]:
    """A = unit circle, B = outer circle of radius R, P1..P(2n+1) the chain
    (P1 centered on the positive x axis, numbered counter-clockwise)."""
    R = steiner_outer_radius(n)
    m = 2 * n + 1
    rho, rc = 0.5 * (R - 1.0), 0.5 * (R + 1.0)
    out = {"A": GeneralizedCircle.circle(0.0, 0.0, 1.0),
           "B": GeneralizedCircle.circle(0.0, 0.0, R)}
    for j in range(m):
        ang = 2.0 * math.pi * j / m
        out[f"P{j + 1}"] = GeneralizedCircle.circle(rc * math.cos(ang), rc * math.sin(ang), rho)
    return out


def _normalize_strip(circles, bottom, top):
    """Similarity taking lines ``bottom``/``top`` to y = 0 / y = 1."""
    nb = np.asarray(circles[bottom].normal)
    angle = math.pi / 2 - math.atan2(nb[1], nb[0])
    rot = {k: c.similarity(angle=angle) for k, c in circles.items()}
    y0 = rot[bottom].offset * rot[bottom].normal[1]
    y1 = rot[top].offset * rot[top].normal[1]
    scale = 1.0 / abs(y1 - y0)
    out = {k: c.similarity(shift=(0.0, -y0)).similarity(scale=scale) for k, c in rot.items()}
    if y1 < y0:
        out = {k: c.reflect("y", 0.0) for k, c in out.items()}
    # canonical line representation: normal (0, 1)
    for k, c in out.items():
        if c.is_line and c.normal[1] < 0:
            out[k] = GeneralizedCircle.line((0.0, 1.0), -c.offset)
    return out


def _crossing_residual(circles, n):
    return _graph_residual(crossing_graph(n), circles)


def steiner_cross_check(n: int) -> CuspRectangle:
    """Crossing rectangle as the image of the concentric Steiner chain under
    inversion at the tangency point of P1 and P2."""
    base = steiner_normal_form(n)
    c1, c2 = base["P1"].center_array(), base["P2"].center_array()
    p = 0.5 * (c1 + c2)
    img = {k: c.invert(p) for k, c in base.items()}
    if not (img["P1"].is_line and img["P2"].is_line):
        raise NumericalError("inversion did not straighten P1 and P2")
    line_spacing(img["P1"], img["P2"])  # raises if not parallel
    out = _normalize_strip(img, "P1", "P2")
    out = _shift_x(out, -out["A"].center[0])
    if out["B"].center[0] < 0:
        out = {k: c.reflect("x", 0.0) for k, c in out.items()}
    return _crossing_rect(n, out, _crossing_residual_shifted(out, n), "mobius")


def _crossing_residual_shifted(circles, n):
    ell_w = circles["B"].center[0] - circles["A"].center[0]
    return _crossing_residual(_shift_x(circles, -ell_w / 2), n)


def knot_rectangle_mobius(n: int) -> CuspRectangle:
    """Knot-cusp rectangle from inversion at the tangency point of P2 and A."""
    base = steiner_normal_form(n)
    # relabel so the inversion point lies on P2 (ring index shift by one)
    m = 2 * n + 1
    ring = {f"P{j + 1}": base[f"P{(j - 1) % m + 1}"] for j in range(m)}
    ring["A"], ring["B"] = base["A"], base["B"]
    c2 = ring["P2"].center_array()
    p = c2 / np.linalg.norm(c2)
    img = {k: c.invert(p) for k, c in ring.items()}
    if not (img["A"].is_line and img["P2"].is_line):
        raise NumericalError("inversion did not straighten A and P2")
    out = _normalize_strip(img, "A", "P2")
    mid = 0.5 * (out["P1"].center[0] + out["P3"].center[0])
    out = _shift_x(out, -mid)
    if out["P1"].center[0] > 0:
        out = {k: c.reflect("x", 0.0) for k, c in out.items()}
    graph = knot_graph(n)
    return _knot_rect(n, out, _graph_residual(graph, out), "mobius")


def knot_rectangle_newton(n: int) -> CuspRectangle:
    graph = knot_graph(n)
    sol = solve_tangency(graph)
    return _knot_rect(n, sol.circles, _graph_residual(graph, sol.circles), "newton")


def _knot_rect(n, circles, residual, route):
    ell_w = circles["P3"].center[0] - circles["P1"].center[0]
    shifted = _shift_x(circles, ell_w / 2)
    diam = {k: c.diameter for k, c in shifted.items() if not c.is_line}
    rect = CuspRectangle(n, RectKind.KNOT_CUSP, 1.0, ell_w, diam, residual, shifted,
                         route, walls=(0.0, ell_w))
    diam["P*"] = diam[rect.smallest_chain_circle]
    return rect


def solve_knot_rectangle(n: int, *, cross_check: bool = True) -> CuspRectangle:
    """Knot-cusp rectangle via the Moebius route, checked against Newton.

    Raises ConsistencyError when l(w) or any diameter differs by more than
    1e-8 between the two constructions.
    """
    rect = knot_rectangle_mobius(n)
    if cross_check:
        other = knot_rectangle_newton(n)
        diffs = [abs(rect.ell_w - other.ell_w)]
        diffs += [abs(rect.circle_diameters[k] - other.circle_diameters[k])
                  for k in rect.circle_diameters]
        worst = max(diffs)
        if worst > ROUTE_TOL:
            raise ConsistencyError(
                f"Moebius and Newton knot rectangles differ by {worst:.3e}", residual=worst)
    return rect


def max_tangency_residual(rect: CuspRectangle) -> float:
    if rect.rect_kind is RectKind.CROSSING_CIRCLE:
        return _crossing_residual(_shift_x(rect.circles, -rect.ell_w / 2), rect.n)
    return _graph_residual(knot_graph(rect.n), _shift_x(rect.circles, -rect.ell_w / 2))


# --------------------------------------------------------------------------
# normalized lengths, bounds and the knot-cusp tiling
# --------------------------------------------------------------------------

def surgery_slope(q: int) -> tuple[int, int]:
    """Filling slope (1, (q-1)/2) for odd q (half twist), (1, q/2) for even q."""
    if q <= 0:
        raise DomainError(f"q must be positive, got {q!r}")
    return (1, (q - 1) // 2) if q % 2 else (1, q // 2)


def normalized_slope_length(rect: CuspRectangle, q_i: int, half_twist: bool) -> float:
    """Normalized length of the slope w +- q_i s on a crossing-circle cusp,
    which is tiled by two rectangles: sqrt(l(w)^2 + q^2) / sqrt(2 l(w))."""
    if rect.rect_kind is not RectKind.CROSSING_CIRCLE:
        raise DomainError("normalized slope length needs a crossing-circle rectangle")
    if not q_i > 0:
        raise DomainError(f"q_i must be positive, got {q_i!r}")
    if bool(q_i % 2) != bool(half_twist):
        raise DomainError(f"q_i = {q_i} is {'odd' if q_i % 2 else 'even'} "
                          f"but half_twist = {half_twist}")
    lw, ls = rect.ell_w, rect.ell_s
    return math.sqrt(lw * lw + q_i * q_i * ls * ls) / math.sqrt(2.0 * lw * ls)


def normalized_length_lower_bound(n: int, q: int) -> float:
    """sqrt((2n-1)(1+q^2)/(4n)), the bound that only uses l(w) <= 2n/(2n-1)."""
    _check_n(n)
    return math.sqrt((2 * n - 1) * (1 + q * q) / (4.0 * n))


@dataclass(frozen=True)
class BoundCheck:
    name: str
    value: float
    lower: float | None
    upper: float | None

    @property
    def holds(self) -> bool:
        ok = True
        if self.lower is not None:
            ok &= self.value > self.lower
        if self.upper is not None:
            ok &= self.value < self.upper
        return ok

    @property
    def margin(self) -> float:
        gaps = []
        if self.lower is not None:
            gaps.append(self.value - self.lower)
        if self.upper is not None:
            gaps.append(self.upper - self.value)
        return min(gaps)


def knot_rectangle_bounds(rect: CuspRectangle) -> list[BoundCheck]:
    """Size bounds for a knot-cusp rectangle, as strict inequalities."""
    if rect.rect_kind is not RectKind.KNOT_CUSP:
        raise DomainError("need a knot-cusp rectangle")
    n = rect.n
    dB = rect.circle_diameters["B"]
    return [
        BoundCheck("1 < l(w) < 2", rect.ell_w, 1.0, 2.0),
        BoundCheck("(n-2)/(n-1) < D(B) < 1", dB, (n - 2) / (n - 1), 1.0),
        BoundCheck("D(B) > 1/2", dB, 0.5, None),
        BoundCheck("D(P*) < 1/(n-1)", rect.circle_diameters["P*"], None, 1.0 / (n - 1)),
    ]


def crossing_rectangle_bounds(rect: CuspRectangle) -> list[BoundCheck]:
    if rect.rect_kind is not RectKind.CROSSING_CIRCLE:
        raise DomainError("need a crossing-circle rectangle")
    n = rect.n
    return [
        BoundCheck("1 < l(w) < 2n/(2n-1)", rect.ell_w, 1.0, 2 * n / (2 * n - 1)),
        BoundCheck("D(P*) < 1/(2n-1)", rect.circle_diameters["P*"], None, 1.0 / (2 * n - 1)),
    ]


def chain_diameter_sum(rect: CuspRectangle) -> float:
    return math.fsum(rect.circle_diameters[k] for k in rect.chain)


@dataclass(frozen=True)
class KnotCuspTiling:
    n: int
    rectangle_count: int
    ell_w: float
    # (s, w) coefficients; the longitude carries an undetermined integer k
    meridian: tuple[int, int]
    longitude_w: int
    longitude_k_coeff: int

    def basis(self, k: int) -> np.ndarray:
        """Euclidean fundamental-domain basis (rows) for a given integer k,
        with s vertical (length 1) and w horizontal (length l(w))."""
        mer = np.array([0.0, float(self.meridian[0])])
        lon = np.array([self.longitude_w * self.ell_w, float(self.longitude_k_coeff * k)])
        return np.vstack([mer, lon])

    def reduced_basis(self, k: int) -> np.ndarray:
        """Basis after subtracting k meridians from the longitude."""
        b = self.basis(k)
        b[1] = b[1] - k * (self.longitude_k_coeff / self.meridian[0]) * b[0]
        return b

    @property
    def sides(self) -> tuple[float, float]:
        return float(self.meridian[0]), self.longitude_w * self.ell_w

    @property
    def is_square(self) -> bool:
        a, b = self.sides
        return math.isclose(a, b, rel_tol=1e-12)


def knot_cusp_tiling(n: int, rect: CuspRectangle) -> KnotCuspTiling:
    """Tiling of the knot cusp by 4(2n+1) rectangles; meridian 2s, longitude
    2(2n+1)w + 2ks."""
    _check_n(n)
    if rect.rect_kind is not RectKind.KNOT_CUSP or rect.n != n:
        raise DomainError("need the knot-cusp rectangle for the same n")
    return KnotCuspTiling(n=n, rectangle_count=4 * (2 * n + 1), ell_w=rect.ell_w,
                          meridian=(2, 0), longitude_w=2 * (2 * n + 1), longitude_k_coeff=2)
