"""Generators for the extremal families attaining the degree-based lower
bounds: t disjoint copies of K_{a,b} regularized inside each side, together
with the optimal certificate (+1 on the a-sides, -1 on the b-sides)."""

from __future__ import annotations

from dataclasses import dataclass

from .bounds import DegreeProfile, indicator, lower_bound
from .certify import Mode, SignFunction
from .graph import Graph, complete_bipartite, disjoint_union, regularize_independent_set


def extremal_params(k: int, delta: int, Delta: int, mode: Mode) -> tuple[int, int]:
    """Block side sizes (a, b) for the extremal construction.

    Closed mode requires Delta >= delta >= k+1, total mode Delta >= delta >=
    k+2; the indicator terms force a and b to be integers.
    """
    if k < 1:
        raise ValueError("k must be a positive integer")
    if Delta < delta:
        raise ValueError("need Delta >= delta")
    i_d = indicator(delta, k)
    i_D = indicator(Delta, k)
    if mode is Mode.CLOSED:
        if delta < k + 1:
            raise ValueError("closed-mode construction requires delta >= k+1")
        a2, b2 = delta + k + 1 + i_d, Delta - k + 1 - i_D
    else:
        if delta < k + 2:
            raise ValueError("total-mode construction requires delta >= k+2")
        a2, b2 = delta + k - i_d + 1, Delta - k + i_D - 1
    assert a2 % 2 == 0 and b2 % 2 == 0
    a, b = a2 // 2, b2 // 2
    assert 1 <= a <= delta and 1 <= b <= Delta
    return a, b


@dataclass(frozen=True)
class ExtremalSpec:
    k: int
    delta: int
    Delta: int
    t: int
    mode: Mode

    def __post_init__(self):
        extremal_params(self.k, self.delta, self.Delta, self.mode)
        if self.t % 2 != 0 or self.t <= self.Delta:
            raise ValueError("t must be an even integer larger than Delta")

    @property
    def a(self) -> int:
        return extremal_params(self.k, self.delta, self.Delta, self.mode)[0]

    @property
    def b(self) -> int:
        return extremal_params(self.k, self.delta, self.Delta, self.mode)[1]

    @property
    def order(self) -> int:
        return self.t * (self.a + self.b)

    @property
    def p_vertices(self) -> tuple[int, ...]:
        a, b = self.a, self.b
        return tuple(
            i * (a + b) + j for i in range(self.t) for j in range(a)
        )

    @property
    def q_vertices(self) -> tuple[int, ...]:
        a, b = self.a, self.b
        return tuple(
            i * (a + b) + a + j for i in range(self.t) for j in range(b)
        )

    @classmethod
    def smallest(cls, k: int, delta: int, Delta: int, mode: Mode) -> "ExtremalSpec":
        """The family member with the smallest admissible t."""
        t = Delta + 1 if (Delta + 1) % 2 == 0 else Delta + 2
        return cls(k, delta, Delta, t, mode)


def build_extremal(spec: ExtremalSpec) -> tuple[Graph, SignFunction]:
    """Build the extremal graph and its optimal certificate.

    Blocks are laid out in order, a-side before b-side; the added edges come
    from the deterministic 1-factorization in ascending factor order, so the
    output is byte-for-byte reproducible. Every p-vertex ends with degree
    Delta and every q-vertex with degree delta, and the certificate weight
    equals the rational lower bound exactly.
    """
    a, b = spec.a, spec.b
    g = Graph(0)
    for _ in range(spec.t):
        g = disjoint_union(g, complete_bipartite(a, b))
    g = regularize_independent_set(g, spec.p_vertices, spec.Delta - b)
    g = regularize_independent_set(g, spec.q_vertices, spec.delta - a)
    cert = SignFunction.from_plus_set(g.n, spec.p_vertices)
    profile = DegreeProfile(g.n, spec.delta, spec.Delta, spec.k)
    assert cert.weight == lower_bound(profile, spec.mode)
    return g, cert
