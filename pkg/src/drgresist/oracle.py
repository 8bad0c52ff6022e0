"""Explicit vertex-level graphs used as ground truth for the recursion.

Resistances here come from Kirchhoff's equations on the whole graph, solved
exactly; commute times come from simulated random walks. Neither path uses
the intersection array, so agreement with :mod:`drgresist.resistance` is an
independent check.
"""
from __future__ import annotations

from collections import deque
from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations
from typing import Hashable, Iterable, Sequence

import numpy as np

from .core import IntersectionArray
from .errors import (
    InvalidGraph,
    IntersectionArrayError,
    NotDistanceRegular,
    ParamOutOfDomain,
    SingularSystem,
    TooLarge,
)
from .exact_linalg import bareiss_solve
from .families import FamilySpec, family_array

__all__ = [
    "ExplicitGraph",
    "Stratification",
    "build_graph",
    "stratify",
    "distance_matrix",
    "distance_matrices",
    "verify_distance_regular",
    "oracle_resistance",
    "oracle_resistances_from",
    "mc_commute_time",
    "EXPLICIT_FAMILIES",
    "MAX_GRAPH_ORDER",
    "MAX_ORACLE_ORDER",
]

MAX_GRAPH_ORDER = 5000
MAX_ORACLE_ORDER = 400
EXPLICIT_FAMILIES = ("cycle", "hypercube", "johnson", "complete")


@dataclass(frozen=True, eq=False)
class ExplicitGraph:
    """Unit-resistance regular graph. Vertices are addressed by index 0..N-1;
    ``labels[i]`` is the human-readable name of vertex i."""

    labels: tuple[Hashable, ...]
    neighbors: tuple[tuple[int, ...], ...]

    def __post_init__(self):
        n = len(self.labels)
        if len(self.neighbors) != n or n == 0:
            raise InvalidGraph("need one neighbor list per vertex and at least one vertex")
        nbr_sets = [set(nb) for nb in self.neighbors]
        for v, nb in enumerate(self.neighbors):
            if len(nb) != len(nbr_sets[v]):
                raise InvalidGraph(f"vertex {v} has repeated neighbors")
            if v in nbr_sets[v]:
                raise InvalidGraph(f"vertex {v} has a loop")
            for u in nb:
                if not 0 <= u < n or v not in nbr_sets[u]:
                    raise InvalidGraph(f"edge {v}-{u} is not symmetric")
        degrees = {len(nb) for nb in self.neighbors}
        if len(degrees) != 1:
            raise InvalidGraph(f"graph is not regular (degrees {sorted(degrees)})")
        if n > 1 and len(_bfs(self.neighbors, 0)) != n:
            raise InvalidGraph("graph is not connected")

    @property
    def N(self) -> int:
        return len(self.labels)

    @property
    def degree(self) -> int:
        return len(self.neighbors[0])

    def edges(self) -> list[tuple[int, int]]:
        return [(u, v) for u, nb in enumerate(self.neighbors) for v in nb if u < v]

    def adjacency(self) -> np.ndarray:
        A = np.zeros((self.N, self.N), dtype=np.int64)
        for u, nb in enumerate(self.neighbors):
            A[u, list(nb)] = 1
        return A

    def index(self, label: Hashable) -> int:
        return self.labels.index(label)

    @classmethod
    def from_edges(cls, n: int, edges: Iterable[tuple[int, int]], labels: Sequence | None = None) -> "ExplicitGraph":
        nbrs: list[list[int]] = [[] for _ in range(n)]
        for u, v in edges:
            nbrs[u].append(v)
            nbrs[v].append(u)
        labels = tuple(range(n)) if labels is None else tuple(labels)
        return cls(labels, tuple(tuple(sorted(nb)) for nb in nbrs))


def _bfs(neighbors, source: int) -> dict[int, int]:
    dist = {source: 0}
    queue = deque([source])
    while queue:
        u = queue.popleft()
        for v in neighbors[u]:
            if v not in dist:
                dist[v] = dist[u] + 1
                queue.append(v)
    return dist


@dataclass(frozen=True)
class Stratification:
    reference: int
    strata: tuple[frozenset[int], ...]

    def sizes(self) -> tuple[int, ...]:
        return tuple(len(s) for s in self.strata)

    def distance(self, v: int) -> int:
        for i, s in enumerate(self.strata):
            if v in s:
                return i
        raise KeyError(v)


def stratify(g: ExplicitGraph, alpha: int) -> Stratification:
    """BFS layers Gamma_0(alpha), Gamma_1(alpha), ... by shortest-path distance."""
    dist = _bfs(g.neighbors, alpha)
    layers: list[set[int]] = [set() for _ in range(max(dist.values()) + 1)]
    for v, k in dist.items():
        layers[k].add(v)
    return Stratification(alpha, tuple(frozenset(s) for s in layers))


def _graph_from_pred(labels, adjacent) -> ExplicitGraph:
    n = len(labels)
    nbrs: list[list[int]] = [[] for _ in range(n)]
    for i, j in combinations(range(n), 2):
        if adjacent(labels[i], labels[j]):
            nbrs[i].append(j)
            nbrs[j].append(i)
    return ExplicitGraph(tuple(labels), tuple(tuple(nb) for nb in nbrs))


def build_graph(spec: FamilySpec) -> ExplicitGraph:
    if spec.name not in EXPLICIT_FAMILIES:
        raise ParamOutOfDomain(
            f"no explicit construction for {spec.name!r}; supported: {', '.join(EXPLICIT_FAMILIES)}"
        )
    arr = family_array(spec)  # validates the parameters
    if arr.N > MAX_GRAPH_ORDER:
        raise TooLarge(f"{spec.label()} has {arr.N} vertices > {MAX_GRAPH_ORDER}")
    p = spec.params
    if spec.name == "cycle":
        n = p["N"]
        return ExplicitGraph(tuple(range(n)), tuple(tuple(sorted({(i - 1) % n, (i + 1) % n})) for i in range(n)))
    if spec.name == "complete":
        n = p["N"]
        return ExplicitGraph(tuple(range(n)), tuple(tuple(j for j in range(n) if j != i) for i in range(n)))
    if spec.name == "hypercube":
        d = p["d"]
        # vertex x is the bitstring of the integer x; neighbours differ in one bit
        return ExplicitGraph(tuple(range(2**d)), tuple(tuple(sorted(x ^ (1 << k) for k in range(d))) for x in range(2**d)))
    n, d = p["n"], p["d"]
    subsets = [frozenset(s) for s in combinations(range(1, n + 1), d)]
    return _graph_from_pred(subsets, lambda x, y: len(x & y) == d - 1)


def distance_matrix(g: ExplicitGraph) -> np.ndarray:
    D = np.empty((g.N, g.N), dtype=np.int64)
    for v in range(g.N):
        for u, k in _bfs(g.neighbors, v).items():
            D[v, u] = k
    return D


def distance_matrices(g: ExplicitGraph, D: np.ndarray | None = None) -> list[np.ndarray]:
    """A_0..A_d with (A_i)[u, v] = 1 iff dist(u, v) = i."""
    if D is None:
        D = distance_matrix(g)
    return [(D == i).astype(np.int64) for i in range(int(D.max()) + 1)]


def verify_distance_regular(g: ExplicitGraph) -> IntersectionArray:
    """Recover the intersection array from neighbour counts, or raise NotDistanceRegular.

    For every ordered pair at distance i, counts the neighbours of the second
    vertex at distance i-1, i, i+1 from the first and requires the counts to
    depend on i only. Then checks A_1 A_i = b_{i-1} A_{i-1} + a_i A_i + c_{i+1} A_{i+1}
    on the explicit distance matrices.
    """
    D = distance_matrix(g)
    d = int(D.max())
    nbr = np.array(g.neighbors, dtype=np.int64).reshape(g.N, g.degree)
    counts: list[set[tuple[int, int, int]]] = [set() for _ in range(d + 1)]
    for alpha in range(g.N):
        row = D[alpha]
        nd = row[nbr]  # distances of each vertex's neighbours from alpha
        own = row[:, None]
        c = (nd == own - 1).sum(axis=1)
        a = (nd == own).sum(axis=1)
        b = (nd == own + 1).sum(axis=1)
        for i in range(d + 1):
            mask = row == i
            counts[i].update(zip(c[mask].tolist(), a[mask].tolist(), b[mask].tolist()))
    for i, seen in enumerate(counts):
        if len(seen) != 1:
            raise NotDistanceRegular(f"(c, a, b) counts at distance {i} vary: {sorted(seen)}")
    cab = [next(iter(s)) for s in counts]
    b = [cab[i][2] for i in range(d)]
    c = [cab[i][0] for i in range(1, d + 1)]
    try:
        arr = IntersectionArray(tuple(b), tuple(c))
    except IntersectionArrayError as exc:
        raise NotDistanceRegular(f"recovered counts do not form a valid array: {exc}") from exc

    A = distance_matrices(g, D)
    zero = np.zeros_like(A[0])
    for i in range(d + 1):
        rhs = arr.b_at(i - 1) * (A[i - 1] if i >= 1 else zero) + arr.a[i] * A[i]
        if i < d:
            rhs = rhs + arr.c_at(i + 1) * A[i + 1]
        if not np.array_equal(A[1] @ A[i], rhs):
            raise NotDistanceRegular(f"A_1 A_{i} does not satisfy the three-term relation")
    return arr


def _grounded_laplacian(g: ExplicitGraph, ground: int) -> list[list[int]]:
    keep = [v for v in range(g.N) if v != ground]
    pos = {v: i for i, v in enumerate(keep)}
    k = g.degree
    L = [[0] * len(keep) for _ in keep]
    for v in keep:
        i = pos[v]
        L[i][i] = k
        for u in g.neighbors[v]:
            if u != ground:
                L[i][pos[u]] = -1
    return L


def _check_oracle_size(g: ExplicitGraph):
    if g.N > MAX_ORACLE_ORDER:
        raise TooLarge(f"exact oracle limited to N <= {MAX_ORACLE_ORDER}, got {g.N}")


def oracle_resistance(g: ExplicitGraph, alpha: int, beta: int) -> Fraction:
    """Exact two-point resistance: ground beta, inject 1 A at alpha, read V_alpha."""
    if alpha == beta:
        raise ValueError("alpha and beta must differ")
    _check_oracle_size(g)
    L = _grounded_laplacian(g, beta)
    i = alpha if alpha < beta else alpha - 1
    rhs = [[1 if r == i else 0] for r in range(g.N - 1)]
    try:
        V = bareiss_solve(L, rhs)
    except SingularSystem as exc:
        raise SingularSystem(f"grounded Laplacian singular; graph disconnected? ({exc})") from exc
    return V[i][0]


def oracle_resistances_from(g: ExplicitGraph, alpha: int) -> dict[int, Fraction]:
    """R(alpha, beta) for every beta != alpha from a single exact solve.

    Grounding alpha makes R(alpha, beta) the beta-th diagonal entry of the
    inverse grounded Laplacian.
    """
    _check_oracle_size(g)
    L = _grounded_laplacian(g, alpha)
    n = g.N - 1
    identity = [[1 if r == c else 0 for c in range(n)] for r in range(n)]
    X = bareiss_solve(L, identity)
    others = [v for v in range(g.N) if v != alpha]
    return {v: X[i][i] for i, v in enumerate(others)}


def mc_commute_time(g: ExplicitGraph, alpha: int, beta: int, walks: int, seed: int) -> tuple[float, float]:
    """Monte Carlo commute time alpha -> beta -> alpha of the simple random walk.

    Returns (mean, standard error). All walks advance in lock step from one
    seeded generator, so the result is a pure function of the arguments.
    The standard error is nan for a single walk.
    """
    if alpha == beta:
        raise ValueError("alpha and beta must differ")
    if walks < 1:
        raise ValueError("walks must be >= 1")
    rng = np.random.Generator(np.random.PCG64(seed))
    nbr = np.array(g.neighbors, dtype=np.int64).reshape(g.N, g.degree)
    k = g.degree

    pos = np.full(walks, alpha, dtype=np.int64)
    target = np.full(walks, beta, dtype=np.int64)
    returning = np.zeros(walks, dtype=bool)
    steps = np.zeros(walks, dtype=np.int64)
    active = np.arange(walks)
    while active.size:
        pos[active] = nbr[pos[active], rng.integers(0, k, size=active.size)]
        steps[active] += 1
        hit = pos[active] == target[active]
        if hit.any():
            hit_idx = active[hit]
            finished = returning[hit_idx]
            turning = hit_idx[~finished]
            returning[turning] = True
            target[turning] = alpha
            active = np.concatenate([active[~hit], turning])
            active.sort()
    mean = float(steps.mean())
    stderr = float(steps.std(ddof=1) / np.sqrt(walks)) if walks > 1 else float("nan")
    return mean, stderr
