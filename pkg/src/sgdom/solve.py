"""Exact solvers: brute-force oracles and a propagating branch-and-bound for
the signed (total) k-domination numbers, a filtered brute force for the upper
signed k-domination number, and baseline solvers for domination numbers and
1-in-3 SAT used in reduction cross-validation."""

from __future__ import annotations

from dataclasses import dataclass
from collections import deque
from itertools import combinations

import numpy as np

from . import config
from .certify import Mode, SignFunction
from .graph import Graph

OPTIMAL = "optimal"
INFEASIBLE = "infeasible"
CAP_EXCEEDED = "cap_exceeded"

_CHUNK = 1 << 17


class CapExceededError(RuntimeError):
    """An enumeration cap or node budget was exceeded."""


class InfeasibleError(ValueError):
    """The requested parameter does not exist on this input."""


@dataclass(frozen=True)
class SolveResult:
    status: str
    value: int | None
    certificate: SignFunction | None
    nodes_explored: int


def _mode_matrix(g: Graph, mode: Mode) -> np.ndarray:
    """Row v marks the vertices of N[v] (closed) or N(v) (total)."""
    m = np.zeros((g.n, g.n), dtype=np.float32)
    for v in range(g.n):
        m[v, list(g.neighbors(v))] = 1.0
        if mode is Mode.CLOSED:
            m[v, v] = 1.0
    return m


def _sign_chunk(lo: int, hi: int, n: int) -> np.ndarray:
    """Rows lo..hi-1 of the lexicographic enumeration of {-1,+1}^n.

    Vertex 0 is the most significant bit and bit 0 encodes -1, so increasing
    row index is lexicographic order with -1 < +1.
    """
    idx = np.arange(lo, hi, dtype=np.int64)
    shifts = np.arange(n - 1, -1, -1, dtype=np.int64)
    bits = (idx[:, None] >> shifts[None, :]) & 1
    return (2 * bits - 1).astype(np.float32)


def _certificate_at(index: int, n: int) -> SignFunction:
    return SignFunction(
        tuple(1 if (index >> (n - 1 - v)) & 1 else -1 for v in range(n))
    )


def brute_force_sigma(
    g: Graph, k: int, mode: Mode, max_n: int | None = None
) -> SolveResult:
    """Exhaustive minimum over all 2^n sign functions.

    Returns the lexicographically first optimal certificate (-1 < +1, vertex
    order 0..n-1); deterministic and bit-identical across runs.
    """
    if k < 1:
        raise ValueError("k must be a positive integer")
    cap = config.max_brute_n() if max_n is None else max_n
    n = g.n
    if n > cap:
        return SolveResult(CAP_EXCEEDED, None, None, 0)
    if n == 0:
        return SolveResult(OPTIMAL, 0, SignFunction(()), 1)
    m = _mode_matrix(g, mode)
    total = 1 << n
    best_w: int | None = None
    best_idx: int | None = None
    for lo in range(0, total, _CHUNK):
        hi = min(lo + _CHUNK, total)
        signs = _sign_chunk(lo, hi, n)
        sums = signs @ m.T
        feasible = (sums >= k).all(axis=1)
        if not feasible.any():
            continue
        weights = signs.sum(axis=1)
        weights[~feasible] = np.inf
        chunk_min = weights.min()
        if best_w is None or chunk_min < best_w:
            best_w = int(chunk_min)
            best_idx = lo + int(np.argmax(weights == chunk_min))
    if best_w is None:
        return SolveResult(INFEASIBLE, None, None, total)
    return SolveResult(OPTIMAL, best_w, _certificate_at(best_idx, n), total)


def brute_force_upper(g: Graph, k: int, max_n: int | None = None) -> SolveResult:
    """Exhaustive maximum weight over minimal signed k-dominating functions."""
    if k < 1:
        raise ValueError("k must be a positive integer")
    cap = config.max_brute_n() if max_n is None else max_n
    n = g.n
    if n > cap:
        return SolveResult(CAP_EXCEEDED, None, None, 0)
    if n == 0:
        return SolveResult(OPTIMAL, 0, SignFunction(()), 1)
    m = _mode_matrix(g, Mode.CLOSED)
    total = 1 << n
    best_w: int | None = None
    best_idx: int | None = None
    for lo in range(0, total, _CHUNK):
        hi = min(lo + _CHUNK, total)
        signs = _sign_chunk(lo, hi, n)
        sums = signs @ m.T
        feasible = (sums >= k).all(axis=1)
        if not feasible.any():
            continue
        # Minimal iff every +1 vertex sees a closed sum of k or k+1 in N[v].
        tight = ((sums == k) | (sums == k + 1)).astype(np.float32)
        has_tight = (tight @ m.T) > 0
        minimal = ((signs < 0) | has_tight).all(axis=1) & feasible
        if not minimal.any():
            continue
        weights = signs.sum(axis=1)
        weights[~minimal] = -np.inf
        chunk_max = weights.max()
        if best_w is None or chunk_max > best_w:
            best_w = int(chunk_max)
            best_idx = lo + int(np.argmax(weights == chunk_max))
    if best_w is None:
        return SolveResult(INFEASIBLE, None, None, total)
    return SolveResult(OPTIMAL, best_w, _certificate_at(best_idx, n), total)


def bnb_sigma(
    g: Graph, k: int, mode: Mode, node_budget: int | None = None
) -> SolveResult:
    """Branch-and-bound for sigma_kS / sigma_tkS.

    Uses parity-strengthened per-vertex thresholds (a neighborhood whose size
    has the opposite parity of k must reach k+1), unit propagation when a
    neighborhood's achievable maximum gets tight, and weight pruning against
    the incumbent. Always agrees with brute_force_sigma on the value.
    """
    if k < 1:
        raise ValueError("k must be a positive integer")
    budget = config.node_budget() if node_budget is None else node_budget
    n = g.n
    if n == 0:
        return SolveResult(OPTIMAL, 0, SignFunction(()), 1)
    min_deg = g.min_degree
    if (mode is Mode.CLOSED and min_deg < k - 1) or (
        mode is Mode.TOTAL and min_deg < k
    ):
        return SolveResult(INFEASIBLE, None, None, 0)

    if mode is Mode.CLOSED:
        nbhd = [g.closed_neighbors(v) for v in range(n)]
    else:
        nbhd = [g.neighbors(v) for v in range(n)]
    thr = [k if (len(nbhd[v]) - k) % 2 == 0 else k + 1 for v in range(n)]

    assign = [0] * n
    sum_dec = [0] * n
    und = [len(nbhd[v]) for v in range(n)]
    trail: list[int] = []
    state = {"w": 0, "und_total": n, "nodes": 0, "capped": False}
    best: dict = {"w": None, "f": None}

    def place(u: int, val: int) -> None:
        assign[u] = val
        trail.append(u)
        state["w"] += val
        state["und_total"] -= 1
        for v in nbhd[u]:
            sum_dec[v] += val
            und[v] -= 1

    def undo(mark: int) -> None:
        while len(trail) > mark:
            u = trail.pop()
            val = assign[u]
            assign[u] = 0
            state["w"] -= val
            state["und_total"] += 1
            for v in nbhd[u]:
                sum_dec[v] -= val
                und[v] += 1

    def propagate(seeds: list[tuple[int, int]]) -> bool:
        queue = deque(seeds)
        while queue:
            u, val = queue.popleft()
            if assign[u] != 0:
                if assign[u] != val:
                    return False
                continue
            place(u, val)
            for v in nbhd[u]:
                slack = sum_dec[v] + und[v] - thr[v]
                if slack < 0:
                    return False
                if slack <= 1 and und[v] > 0:
                    for w in nbhd[v]:
                        if assign[w] == 0:
                            queue.append((w, 1))
        return True

    # Root propagation: per-vertex achievability plus the forced seeds.
    root_seeds: list[tuple[int, int]] = []
    for v in range(n):
        slack = und[v] - thr[v]
        if slack < 0:
            return SolveResult(INFEASIBLE, None, None, 0)
        if slack <= 1:
            root_seeds.extend((w, 1) for w in nbhd[v])
    if not propagate(root_seeds):
        return SolveResult(INFEASIBLE, None, None, 1)

    order = sorted(range(n), key=lambda v: (g.degree(v), v))

    def dfs() -> None:
        state["nodes"] += 1
        if state["nodes"] > budget:
            state["capped"] = True
            return
        if best["w"] is not None and state["w"] - state["und_total"] >= best["w"]:
            return
        if state["und_total"] == 0:
            best["w"] = state["w"]
            best["f"] = SignFunction(tuple(assign))
            return
        branch = next(v for v in order if assign[v] == 0)
        for val in (-1, 1):
            mark = len(trail)
            if propagate([(branch, val)]):
                dfs()
            undo(mark)
            if state["capped"]:
                return

    dfs()
    nodes = state["nodes"]
    if state["capped"]:
        return SolveResult(CAP_EXCEEDED, best["w"], best["f"], nodes)
    if best["w"] is None:
        return SolveResult(INFEASIBLE, None, None, nodes)
    return SolveResult(OPTIMAL, best["w"], best["f"], nodes)


# ---------------------------------------------------------------------------
# Baseline solvers for reduction cross-validation

def _min_cover(masks: list[int], n: int, max_n: int) -> int:
    if n > max_n:
        raise CapExceededError(f"subset enumeration capped at n={max_n}")
    full = (1 << n) - 1
    if n == 0:
        return 0
    for size in range(n + 1):
        for subset in combinations(range(n), size):
            covered = 0
            for v in subset:
                covered |= masks[v]
            if covered == full:
                return size
    raise AssertionError("the full vertex set always covers")


def gamma(g: Graph, max_n: int = config.DEFAULT_MAX_SUBSET_N) -> int:
    """Domination number by subset enumeration in increasing size."""
    masks = [
        (1 << v) | sum(1 << u for u in g.neighbors(v)) for v in range(g.n)
    ]
    return _min_cover(masks, g.n, max_n)


def gamma_t(g: Graph, max_n: int = config.DEFAULT_MAX_SUBSET_N) -> int:
    """Total domination number by subset enumeration in increasing size."""
    if g.n > 0 and g.min_degree == 0:
        raise InfeasibleError("total domination undefined with isolated vertices")
    masks = [sum(1 << u for u in g.neighbors(v)) for v in range(g.n)]
    return _min_cover(masks, g.n, max_n)


def one_in_three_sat(formula, max_vars: int = config.DEFAULT_MAX_SAT_VARS):
    """First assignment (lexicographic, FALSE < TRUE, variable 1 most
    significant) with exactly one TRUE per clause, or None."""
    nv = formula.num_vars
    if nv > max_vars:
        raise CapExceededError(f"SAT enumeration capped at {max_vars} variables")
    clauses = formula.clauses
    for i in range(1 << nv):
        truth = tuple(bool((i >> (nv - j)) & 1) for j in range(1, nv + 1))
        if all(sum(truth[x - 1] for x in clause) == 1 for clause in clauses):
            return truth
    return None
