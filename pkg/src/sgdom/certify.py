"""Sign certificates and polynomial-time verifiers for signed k-domination,
signed total k-domination, and minimality of signed k-dominating functions."""

from __future__ import annotations

import enum
from dataclasses import dataclass
from typing import Iterable, Sequence

from .graph import Graph, GraphFormatError


class Mode(enum.Enum):
    """Which neighborhood a vertex constraint sums over."""

    CLOSED = "closed"  # N[v]; parameter sigma_kS
    TOTAL = "total"    # N(v); parameter sigma_tkS

    def __str__(self) -> str:
        return self.value


def _mode_neighborhood(g: Graph, v: int, mode: Mode) -> tuple[int, ...]:
    if mode is Mode.CLOSED:
        return g.closed_neighbors(v)
    return g.neighbors(v)


@dataclass(frozen=True)
class SignFunction:
    """A total assignment V -> {-1, +1}."""

    values: tuple[int, ...]

    def __post_init__(self):
        for x in self.values:
            if x not in (-1, 1):
                raise ValueError(f"sign values must be -1 or +1, got {x}")

    @classmethod
    def from_plus_set(cls, n: int, plus: Iterable[int]) -> "SignFunction":
        plus = set(plus)
        return cls(tuple(1 if v in plus else -1 for v in range(n)))

    @property
    def weight(self) -> int:
        return sum(self.values)

    def flip(self, v: int) -> "SignFunction":
        vals = list(self.values)
        vals[v] = -vals[v]
        return SignFunction(tuple(vals))

    def plus_set(self) -> frozenset[int]:
        return frozenset(v for v, x in enumerate(self.values) if x == 1)

    def __len__(self) -> int:
        return len(self.values)

    def __getitem__(self, v: int) -> int:
        return self.values[v]


@dataclass(frozen=True)
class VerifyReport:
    feasible: bool
    per_vertex_sum: tuple[int, ...]
    violations: frozenset[int]
    min_slack: int | None  # None only on the empty graph


def verify(g: Graph, k: int, mode: Mode, f: SignFunction) -> VerifyReport:
    """Check whether every neighborhood sum reaches k.

    Closed mode sums f over N[v], total mode over N(v). Pure function; degree
    preconditions are not enforced here, an impossible instance simply comes
    back infeasible.
    """
    if k < 1:
        raise ValueError("k must be a positive integer")
    if len(f) != g.n:
        raise ValueError(f"certificate length {len(f)} != graph order {g.n}")
    sums = tuple(
        sum(f[u] for u in _mode_neighborhood(g, v, mode)) for v in range(g.n)
    )
    violations = frozenset(v for v in range(g.n) if sums[v] < k)
    min_slack = min(sums) - k if g.n else None
    return VerifyReport(not violations, sums, violations, min_slack)


@dataclass(frozen=True)
class MinimalityReport:
    minimal: bool
    witnesses: dict[int, int]  # +1 vertex -> a neighbor with tight closed sum
    offending: int | None      # a +1 vertex with no tight closed neighbor


def is_minimal_skdf(g: Graph, k: int, f: SignFunction) -> MinimalityReport:
    """Single-flip minimality test for a feasible signed k-dominating function.

    f is minimal iff every vertex with value +1 has some u in N[v] whose
    closed sum lies in {k, k+1}. The constraints are monotone nondecreasing in
    f, so a pointwise-dominated feasible function exists exactly when a single
    +1 can be flipped; flipping v lowers each closed sum over N[v] by 2.
    """
    report = verify(g, k, Mode.CLOSED, f)
    if not report.feasible:
        raise ValueError("minimality is only defined for feasible SkDFs")
    sums = report.per_vertex_sum
    tight = [s in (k, k + 1) for s in sums]
    witnesses: dict[int, int] = {}
    for v in range(g.n):
        if f[v] != 1:
            continue
        for u in g.closed_neighbors(v):
            if tight[u]:
                witnesses[v] = u
                break
        else:
            return MinimalityReport(False, witnesses, v)
    return MinimalityReport(True, witnesses, None)


def forced_plus_vertices(g: Graph, k: int, mode: Mode) -> frozenset[int]:
    """Vertices that take value +1 in every feasible certificate of the mode.

    Closed mode: a vertex of degree k-1 or k has a closed neighborhood of
    size k or k+1, leaving no room for a -1 at the vertex itself. Total mode:
    if d(v) <= k+1, a -1 among v's neighbors caps the open sum below k, so
    every neighbor of v is forced.
    """
    if k < 1:
        raise ValueError("k must be a positive integer")
    forced: set[int] = set()
    if mode is Mode.CLOSED:
        for v in range(g.n):
            if g.degree(v) in (k - 1, k):
                forced.add(v)
    else:
        for v in range(g.n):
            if g.degree(v) in (k, k + 1):
                forced.update(g.neighbors(v))
    return frozenset(forced)


# ---------------------------------------------------------------------------
# Certificate text format

def parse_certificate(text: str | bytes) -> tuple[int, Mode, SignFunction]:
    """Parse `s sgd-cert <n> <k> <mode>` plus n `v <i> <+1|-1>` lines.

    Returns (k, mode, sign function).
    """
    if isinstance(text, bytes):
        text = text.decode("utf-8")
    n = k = None
    mode: Mode | None = None
    values: dict[int, int] = {}
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line or line.startswith("c"):
            continue
        fields = line.split()
        if fields[0] == "s":
            if n is not None:
                raise GraphFormatError("duplicate header", lineno)
            if len(fields) != 5 or fields[1] != "sgd-cert":
                raise GraphFormatError(f"malformed header {line!r}", lineno)
            try:
                n, k = int(fields[2]), int(fields[3])
                mode = Mode(fields[4])
            except ValueError:
                raise GraphFormatError(f"malformed header {line!r}", lineno) from None
        elif fields[0] == "v":
            if n is None:
                raise GraphFormatError("value line before header", lineno)
            if len(fields) != 3 or fields[2] not in ("+1", "-1", "1"):
                raise GraphFormatError(f"malformed value line {line!r}", lineno)
            try:
                i = int(fields[1])
            except ValueError:
                raise GraphFormatError(f"malformed value line {line!r}", lineno) from None
            if not (1 <= i <= n):
                raise GraphFormatError(f"vertex {i} out of range", lineno)
            if i - 1 in values:
                raise GraphFormatError(f"vertex {i} assigned twice", lineno)
            values[i - 1] = 1 if fields[2] in ("+1", "1") else -1
        else:
            raise GraphFormatError(f"unrecognized line {line!r}", lineno)
    if n is None or mode is None:
        raise GraphFormatError("missing header")
    if len(values) != n:
        raise GraphFormatError(f"expected {n} vertex values, found {len(values)}")
    return k, mode, SignFunction(tuple(values[v] for v in range(n)))


def emit_certificate(f: SignFunction, k: int, mode: Mode) -> str:
    lines = [f"s sgd-cert {len(f)} {k} {mode.value}"]
    lines.extend(f"v {v + 1} {'+1' if f[v] == 1 else '-1'}" for v in range(len(f)))
    return "\n".join(lines) + "\n"


def certificate_sums(g: Graph, mode: Mode, f: Sequence[int]) -> list[int]:
    """Raw neighborhood sums without the k threshold; helper for reports."""
    return [sum(f[u] for u in _mode_neighborhood(g, v, mode)) for v in range(g.n)]
