"""Pretzel tuples, their dihedral classification, mutation orbits and the
end-to-end certification of a parameter tuple."""
from __future__ import annotations

import enum
import math
from collections import deque
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Sequence

from . import dehn, packing
from .errors import DomainError, SizeGuardError

# Volume of the regular ideal octahedron, 8 * Catalan's constant.
V_OCT = 3.66386237670887
V_OCT_PUBLISHED = 3.6638

SIZE_GUARD_M = 11


class Violation(enum.Enum):
    EVEN_LENGTH = "EvenLength"
    TOO_SHORT = "TooShort"
    DUPLICATE_ENTRY = "DuplicateEntry"
    MORE_THAN_ONE_EVEN = "MoreThanOneEven"
    NO_EVEN_ENTRY = "NoEvenEntry"
    ENTRY_TOO_SMALL = "EntryTooSmall"
    CLASSIFICATION = "ClassificationHypothesis"


class Mode(enum.Enum):
    CUSPED = "Cusped"
    CLOSED = "Closed"


class Incommensurability(enum.Enum):
    CERTIFIED_CONDITIONAL = "CertifiedConditional"
    NOT_APPLICABLE = "NotApplicable"


@dataclass(frozen=True, order=True)
class PretzelTuple:
    q: tuple[int, ...]

    def __init__(self, q: Sequence[int]):
        object.__setattr__(self, "q", tuple(int(x) for x in q))

    @property
    def m(self) -> int:
        return len(self.q)

    @property
    def n(self) -> int:
        if self.m % 2 == 0:
            raise DomainError(f"tuple of even length {self.m} has no n")
        return (self.m - 1) // 2

    def __iter__(self):
        return iter(self.q)

    def __len__(self):
        return len(self.q)

    def __str__(self):
        return "(" + ", ".join(map(str, self.q)) + ")"


def _as_tuple(t) -> tuple[int, ...]:
    return t.q if isinstance(t, PretzelTuple) else tuple(t)


def validate(t) -> list[Violation]:
    """Family constraints: odd length >= 5, distinct entries, exactly one even
    entry (in any slot), every entry > 6, and the classification hypothesis."""
    q = _as_tuple(t)
    out = []
    m = len(q)
    if m % 2 == 0:
        out.append(Violation.EVEN_LENGTH)
    if m < 5:
        out.append(Violation.TOO_SHORT)
    if len(set(q)) != m:
        out.append(Violation.DUPLICATE_ENTRY)
    evens = sum(1 for x in q if x % 2 == 0)
    if evens > 1:
        out.append(Violation.MORE_THAN_ONE_EVEN)
    elif evens == 0:
        out.append(Violation.NO_EVEN_ENTRY)
    if any(x <= 6 for x in q):
        out.append(Violation.ENTRY_TOO_SMALL)
    if 0 in q or (m >= 3 and sum(Fraction(1, x) for x in q) > m - 2):
        out.append(Violation.CLASSIFICATION)
    return out


def validation_notes(t) -> list[str]:
    q = _as_tuple(t)
    evens = [i for i, x in enumerate(q) if x % 2 == 0]
    if len(evens) == 1 and evens[0] != 0:
        return [f"even entry {q[evens[0]]} sits in slot {evens[0] + 1}, not slot 1 "
                f"(a mutation of the standard ordering)"]
    return []


def dihedral_images(t) -> list[tuple[int, ...]]:
    """All 2m images under cyclic rotation and reversal (with repeats)."""
    q = _as_tuple(t)
    m = len(q)
    out = []
    for seq in (q, q[::-1]):
        for i in range(m):
            out.append(seq[i:] + seq[:i])
    return out


def canonical_form(t) -> PretzelTuple:
    """Lexicographically least dihedral image; equal iff same pretzel link."""
    return PretzelTuple(min(dihedral_images(t)))


def _canon(q: tuple[int, ...]) -> tuple[int, ...]:
    return min(dihedral_images(q))


def stabilizer_order(t) -> int:
    """Number of dihedral elements fixing the tuple (1 means a free action)."""
    q = _as_tuple(t)
    return sum(1 for img in dihedral_images(q) if img == q)


def mutate(t, a: int) -> PretzelTuple:
    """Swap the tangles in slots a and a+1 (1-based)."""
    q = list(_as_tuple(t))
    if not 1 <= a <= len(q) - 1:
        raise DomainError(f"mutation index {a} outside 1..{len(q) - 1}")
    q[a - 1], q[a] = q[a], q[a - 1]
    return PretzelTuple(q)


class GeneratorKind(enum.Enum):
    ALL = "All"
    UNLINKED_ONLY = "UnlinkedOnly"


@dataclass(frozen=True)
class MutationGenerators:
    kind: GeneratorKind
    indices: tuple[int, ...]

    @classmethod
    def for_n(cls, n: int, kind: GeneratorKind | str = GeneratorKind.ALL):
        kind = GeneratorKind(kind)
        start = 1 if kind is GeneratorKind.ALL else 2
        return cls(kind, tuple(range(start, 2 * n + 1)))


def mutant_count_formula(n: int, kind: GeneratorKind | str = GeneratorKind.ALL) -> int:
    """(2n)!/2 for all Conway spheres, (2n-1)!/2 for the unlinked ones."""
    if GeneratorKind(kind) is GeneratorKind.ALL:
        return math.factorial(2 * n) // 2
    return math.factorial(2 * n - 1) // 2


def enumerate_mutants(t, generators: MutationGenerators | None = None,
                      *, force: bool = False) -> list[PretzelTuple]:
    """Distinct pretzel links (as sorted canonical forms) reachable from t by
    the generator mutations.

    With all generators the orbit is every rearrangement of the entries, and
    the breadth-first search runs directly on canonical forms: from a
    representative, the swaps of every cyclically adjacent pair (including
    slots m and 1) reach exactly the classes obtained by adjacent swaps of
    every dihedral image.  A restricted generator set is tied to the slot
    labelling, so that search runs on raw tuples.
    """
    q = _as_tuple(t)
    m = len(q)
    if generators is None:
        generators = MutationGenerators.for_n((m - 1) // 2)
    if m > SIZE_GUARD_M and not force:
        raise SizeGuardError(
            f"{m} entries exceed the enumeration guard of {SIZE_GUARD_M}; use the force override (--force)")
    for a in generators.indices:
        if not 1 <= a <= m - 1:
            raise DomainError(f"generator index {a} outside 1..{m - 1}")

    if generators.kind is GeneratorKind.ALL and set(generators.indices) == set(range(1, m)):
        start = _canon(q)
        seen = {start}
        frontier = deque([start])
        pairs = [(i, (i + 1) % m) for i in range(m)]
        while frontier:
            cur = frontier.popleft()
            for i, j in pairs:
                nxt = list(cur)
                nxt[i], nxt[j] = nxt[j], nxt[i]
                c = _canon(tuple(nxt))
                if c not in seen:
                    seen.add(c)
                    frontier.append(c)
        classes = seen
    else:
        classes = {_canon(r) for r in _raw_orbit(q, generators.indices)}
    return [PretzelTuple(c) for c in sorted(classes)]


def _raw_orbit(q, indices):
    seen = {q}
    frontier = deque([q])
    while frontier:
        cur = frontier.popleft()
        for a in indices:
            nxt = list(cur)
            nxt[a - 1], nxt[a] = nxt[a], nxt[a - 1]
            nxt = tuple(nxt)
            if nxt not in seen:
                seen.add(nxt)
                frontier.append(nxt)
    return seen


def q_threshold(n: int, length_constant: float = dehn.PUBLISHED_LENGTH_CONSTANT) -> float:
    """Q(n) = sqrt(c^2 (2n+1)(4n)/(2n-1) - 1): every q_i >= Q(n) makes the
    normalized-length lower bound exceed c sqrt(2n+1)."""
    if n < 2:
        raise DomainError(f"n must be >= 2, got {n!r}")
    return math.sqrt(length_constant ** 2 * (2 * n + 1) * (4 * n) / (2 * n - 1) - 1.0)


def q_threshold_derived(n: int) -> float:
    """Q(n) with the published 20.76 replaced by the computed constant."""
    return q_threshold(n, dehn.min_L_for_total_length(0.015))


def volume_bounds(n: int, v_oct: float = V_OCT) -> tuple[float, float]:
    """[(2n-1)/2 v_oct, (4n+2) v_oct] for the mutant knot complements."""
    if n < 2:
        raise DomainError(f"n must be >= 2, got {n!r}")
    return (2 * n - 1) / 2 * v_oct, (4 * n + 2) * v_oct


@dataclass
class CertificationReport:
    n: int
    tuple: PretzelTuple
    mode: Mode
    q_threshold: float
    q_threshold_derived: float
    thresholds_met: bool
    mutant_count_enumerated: int
    mutant_count_formula: int
    preserved_lengths: int
    volume_bounds: tuple[float | None, float]
    normalized_lengths: list[float]
    normalized_length_bounds: list[float]
    normalized_length_threshold: float
    ell_w: float
    incommensurability: Incommensurability
    failing_entries: list[int] = field(default_factory=list)
    notes: list[str] = field(default_factory=list)

    def to_dict(self) -> dict:
        return {
            "n": self.n,
            "tuple": list(self.tuple.q),
            "mode": self.mode.value,
            "q_threshold": self.q_threshold,
            "q_threshold_derived": self.q_threshold_derived,
            "thresholds_met": self.thresholds_met,
            "mutant_count_enumerated": self.mutant_count_enumerated,
            "mutant_count_formula": self.mutant_count_formula,
            "preserved_lengths": self.preserved_lengths,
            "volume_bounds": list(self.volume_bounds),
            "normalized_lengths": list(self.normalized_lengths),
            "normalized_length_bounds": list(self.normalized_length_bounds),
            "normalized_length_threshold": self.normalized_length_threshold,
            "ell_w": self.ell_w,
            "incommensurability": self.incommensurability.value,
            "failing_entries": list(self.failing_entries),
            "notes": list(self.notes),
        }


def certify(t, mode: Mode | str = Mode.CUSPED) -> CertificationReport:
    """Check every q_i >= Q(n) and every filling slope's normalized length
    >= 20.76 sqrt(2n+1), then assemble counts, bounds and the commensurability
    checklist.  Failures are recorded in the report, never raised."""
    from .commens import commensurability_checklist

    mode = Mode(mode)
    t = t if isinstance(t, PretzelTuple) else PretzelTuple(t)
    violations = validate(t)
    notes = [f"violation: {v.value}" for v in violations] + validation_notes(t)
    if Violation.EVEN_LENGTH in violations or Violation.TOO_SHORT in violations:
        return CertificationReport(
            n=(t.m - 1) // 2, tuple=t, mode=mode, q_threshold=float("nan"),
            q_threshold_derived=float("nan"), thresholds_met=False,
            mutant_count_enumerated=0, mutant_count_formula=0, preserved_lengths=0,
            volume_bounds=(None, float("nan")), normalized_lengths=[],
            normalized_length_bounds=[], normalized_length_threshold=float("nan"),
            ell_w=float("nan"), incommensurability=Incommensurability.NOT_APPLICABLE,
            failing_entries=list(t.q), notes=notes + ["tuple outside the family; nothing certified"])

    n = t.n
    Q = q_threshold(n)
    rect = packing.solve_crossing_rectangle(n)
    lengths, bounds = [], []
    for qi in t.q:
        lengths.append(packing.normalized_slope_length(rect, abs(qi), bool(qi % 2)))
        bounds.append(packing.normalized_length_lower_bound(n, qi))
    L_needed = dehn.PUBLISHED_LENGTH_CONSTANT * math.sqrt(2 * n + 1)
    failing = sorted({qi for qi, L in zip(t.q, lengths) if qi < Q or L < L_needed})
    met = not violations and not failing
    if failing:
        notes.append(f"entries below Q({n}) = {Q:.6f}: {failing}")

    if mode is Mode.CUSPED:
        kind = GeneratorKind.ALL
        preserved = 2 * n + 1 if met else 0
        vb = volume_bounds(n)
    else:
        kind = GeneratorKind.UNLINKED_ONLY
        preserved = 2 * n + 2 if met else 0
        vb = (None, volume_bounds(n)[1])
        notes.append("closed mode: the filling (p, q) on the knot must be sufficiently "
                     "large, a non-effective condition; volume has only an upper bound")

    formula = mutant_count_formula(n, kind)
    enumerated = 0
    if not (Violation.DUPLICATE_ENTRY in violations):
        try:
            enumerated = len(enumerate_mutants(t, MutationGenerators.for_n(n, kind)))
        except SizeGuardError as exc:
            notes.append(f"mutant enumeration skipped: {exc}")
    if enumerated and enumerated != formula:
        notes.append(f"enumerated mutant count {enumerated} differs from formula {formula} "
                     f"for {kind.value} generators")

    incom = Incommensurability.NOT_APPLICABLE
    if mode is Mode.CUSPED and not violations:
        check = commensurability_checklist(t)
        notes.extend(check.as_notes())
        incom = check.conclusion

    return CertificationReport(
        n=n, tuple=t, mode=mode, q_threshold=Q, q_threshold_derived=q_threshold_derived(n),
        thresholds_met=met, mutant_count_enumerated=enumerated, mutant_count_formula=formula,
        preserved_lengths=preserved, volume_bounds=vb, normalized_lengths=lengths,
        normalized_length_bounds=bounds, normalized_length_threshold=L_needed,
        ell_w=rect.ell_w, incommensurability=incom, failing_entries=failing, notes=notes)
