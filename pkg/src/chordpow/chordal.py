"""Chordality recognition, clique machinery and the chordal critical exponent."""
from __future__ import annotations

import itertools
from collections import deque
from dataclasses import dataclass, field
from functools import lru_cache
from typing import FrozenSet, List, NamedTuple, Optional, Tuple

import numpy as np

from .errors import ArgumentError, DomainError
from .graph import DEFAULT_VERTEX_CAP, Graph, bron_kerbosch

# clique-matrix route is skipped above this many entries of M^T M
FORMULA_THRESHOLD = 250_000


class McsResult(NamedTuple):
    order: Tuple[int, ...]
    is_chordal: bool

    @property
    def peo(self) -> Tuple[int, ...]:
        """Perfect elimination ordering candidate: the visit order reversed."""
        return tuple(reversed(self.order))


def _mcs_order(g: Graph) -> Tuple[int, ...]:
    weight = {v: 0 for v in g.vertices}
    left = set(g.vertices)
    order = []
    while left:
        best = max(weight[v] for v in left)
        v = min(u for u in left if weight[u] == best)
        order.append(v)
        left.discard(v)
        for w in g.adjacency[v]:
            if w in left:
                weight[w] += 1
    return tuple(order)


def peo_violation(g: Graph, peo) -> Optional[Tuple[int, int, int]]:
    """One-pass check of an elimination ordering.

    Returns None when ``peo`` is perfect, else ``(v, x, y)``: x and y are
    later neighbours of v that are not adjacent.
    """
    pos = {v: i for i, v in enumerate(peo)}
    for v in peo:
        later = [w for w in g.adjacency[v] if pos[w] > pos[v]]
        if len(later) < 2:
            continue
        p = min(later, key=pos.__getitem__)
        for w in later:
            if w != p and not g.has_edge(p, w):
                return v, p, w
    return None


@lru_cache(maxsize=4096)
def maximum_cardinality_search(g: Graph) -> McsResult:
    """Maximum cardinality search with lowest-label tie-breaking.

    The success flag is true iff the reversed visit order is a perfect
    elimination ordering, i.e. iff g is chordal.
    """
    order = _mcs_order(g)
    return McsResult(order, peo_violation(g, tuple(reversed(order))) is None)


def is_chordal(g: Graph) -> bool:
    return maximum_cardinality_search(g).is_chordal


def chordless_cycle(g: Graph) -> Optional[Tuple[int, ...]]:
    """An induced cycle of length >= 4, or None when g is chordal."""
    if is_chordal(g):
        return None
    adj = g.adjacency
    best = None
    for v in g.vertices:
        for x, y in itertools.combinations(sorted(adj[v]), 2):
            if g.has_edge(x, y):
                continue
            # shortest x-y path avoiding v and its other neighbours closes an induced cycle
            blocked = (adj[v] | {v}) - {x, y}
            prev = {x: None}
            dq = deque([x])
            while dq and y not in prev:
                a = dq.popleft()
                for b in sorted(adj[a]):
                    if b not in prev and b not in blocked:
                        prev[b] = a
                        dq.append(b)
            if y not in prev:
                continue
            path = [y]
            while prev[path[-1]] is not None:
                path.append(prev[path[-1]])
            cyc = (v,) + tuple(reversed(path))
            if best is None or len(cyc) < len(best):
                best = cyc
    return best


def _require_chordal(g: Graph):
    if not is_chordal(g):
        cyc = chordless_cycle(g)
        raise DomainError(f"graph is not chordal: chordless cycle {list(cyc)}")


@lru_cache(maxsize=4096)
def _peo_cliques(g: Graph) -> Tuple[Tuple[int, ...], ...]:
    peo = maximum_cardinality_search(g).peo
    pos = {v: i for i, v in enumerate(peo)}
    cands = [frozenset([v]) | {w for w in g.adjacency[v] if pos[w] > pos[v]} for v in peo]
    maximal = [c for c in set(cands) if not any(c < d for d in cands)]
    return tuple(sorted(tuple(sorted(c)) for c in maximal))


def maximal_cliques(g: Graph, cap: Optional[int] = DEFAULT_VERTEX_CAP) -> List[Tuple[int, ...]]:
    """All maximal cliques, each sorted, list sorted lexicographically.

    Chordal graphs use the elimination ordering (no cap); others fall back
    to Bron-Kerbosch, which refuses graphs above ``cap`` vertices.
    """
    if g.n == 0:
        return []
    if is_chordal(g):
        return list(_peo_cliques(g))
    return bron_kerbosch(g, cap)


@dataclass(frozen=True)
class CliqueOrdering:
    """Maximal cliques ``C_1..C_k`` with histories, residuals and separators.

    ``histories[j] = C_1 | .. | C_j``, ``residuals[j] = C_j - H_{j-1}``,
    ``separators[j] = H_{j-1} & C_j`` (empty for j = 0).
    """

    cliques: Tuple[FrozenSet[int], ...]
    histories: Tuple[FrozenSet[int], ...] = field(init=False)
    residuals: Tuple[FrozenSet[int], ...] = field(init=False)
    separators: Tuple[FrozenSet[int], ...] = field(init=False)

    def __post_init__(self):
        hist, res, sep = [], [], []
        h: FrozenSet[int] = frozenset()
        for c in self.cliques:
            sep.append(h & c)
            res.append(c - h)
            h = h | c
            hist.append(h)
        object.__setattr__(self, "histories", tuple(hist))
        object.__setattr__(self, "residuals", tuple(res))
        object.__setattr__(self, "separators", tuple(sep))

    @property
    def max_separator(self) -> int:
        return max((len(s) for s in self.separators), default=0)

    def violations(self, g: Graph) -> List[str]:
        """Empty when every ordering invariant holds for g."""
        problems = []
        maxi = set(maximal_cliques(g, cap=None))
        for i, c in enumerate(self.cliques):
            if tuple(sorted(c)) not in maxi:
                problems.append(f"C_{i + 1} is not a maximal clique")
        if len(set(self.cliques)) != len(maxi):
            problems.append("ordering does not list every maximal clique exactly once")
        if self.histories and self.histories[-1] != frozenset(g.vertices):
            problems.append("some vertex lies in no clique")
        for i in range(1, len(self.cliques)):
            s = self.separators[i]
            if not g.is_clique(s):
                problems.append(f"S_{i + 1} is not complete")
            if not any(s <= self.cliques[j] for j in range(i)):
                problems.append(f"S_{i + 1} lies in no earlier clique")
        return problems


def perfect_clique_ordering(g: Graph) -> CliqueOrdering:
    """Maximal cliques ordered by the latest MCS visit among their vertices.

    Raises DomainError (with a chordless cycle) on non-chordal input.
    """
    _require_chordal(g)
    visit = {v: i for i, v in enumerate(maximum_cardinality_search(g).order)}
    cliques = sorted(_peo_cliques(g), key=lambda c: (max(visit[v] for v in c), c))
    return CliqueOrdering(tuple(frozenset(c) for c in cliques))


def clique_matrix(g: Graph, cap: Optional[int] = DEFAULT_VERTEX_CAP) -> np.ndarray:
    """0/1 vertex-by-clique incidence matrix, columns in canonical clique order."""
    cl = maximal_cliques(g, cap)
    m = np.zeros((g.n, len(cl)), dtype=np.int64)
    for j, c in enumerate(cl):
        for v in c:
            m[v - 1, j] = 1
    return m


def clique_matrix_ce(m: np.ndarray) -> int:
    """Largest entry of ``M^T M - 2I``."""
    k = m.shape[1]
    return int((m.T @ m - 2 * np.eye(k, dtype=np.int64)).max())


@dataclass(frozen=True)
class ChordalExponent:
    """Raw chordal data: the critical exponent and how it was obtained."""

    ce: int
    omega: int
    s: int
    formula_ce: Optional[int]
    ordering: CliqueOrdering


def chordal_exponent(g: Graph, formula_threshold: int = FORMULA_THRESHOLD) -> ChordalExponent:
    """Critical exponent of a chordal graph with at least one edge.

    Two routes: the largest entry of ``M^T M - 2I`` for the clique matrix M,
    and ``max(omega - 2, s)`` with s the largest separator of a perfect
    ordering. The matrix route is skipped when ``k^2`` exceeds
    ``formula_threshold``; when both run they must agree.
    """
    if g.n < 2:
        raise ArgumentError("critical exponent needs n >= 2")
    _require_chordal(g)
    if g.m == 0:
        raise DomainError("graph has no edges; every real power preserves its cone")
    order = perfect_clique_ordering(g)
    omega = max(len(c) for c in order.cliques)
    s = order.max_separator
    sep_ce = max(omega - 2, s)
    formula = None
    if len(order.cliques) ** 2 <= formula_threshold:
        formula = clique_matrix_ce(clique_matrix(g, cap=None))
        if formula != sep_ce:
            raise AssertionError(f"clique-matrix route gives {formula}, separator route {sep_ce}")
    return ChordalExponent(sep_ce, omega, s, formula, order)


def minimal_triangulation(g: Graph) -> Graph:
    """Chordal supergraph by MCS-M (minimal, not minimum, fill). Chordal input is returned as is."""
    if is_chordal(g):
        return g
    adj = g.adjacency
    weight = {v: 0 for v in g.vertices}
    left = set(g.vertices)
    fill = set()
    while left:
        best = max(weight[v] for v in left)
        z = min(u for u in left if weight[u] == best)
        left.discard(z)
        reach = set()
        # y is reached if a path z..y runs through unnumbered vertices lighter than y
        for y in left:
            if y in adj[z]:
                reach.add(y)
                continue
            wy = weight[y]
            seen = {z}
            dq = deque([z])
            found = False
            while dq and not found:
                a = dq.popleft()
                for b in adj[a]:
                    if b == y:
                        found = True
                        break
                    if b in left and b not in seen and weight[b] < wy:
                        seen.add(b)
                        dq.append(b)
            if found:
                reach.add(y)
        for y in reach:
            weight[y] += 1
            if y not in adj[z]:
                fill.add((min(y, z), max(y, z)))
    return Graph(g.n, g.edges | frozenset(fill))


class DecompositionCheck(NamedTuple):
    ok: bool
    violating_path: Optional[Tuple[int, ...]]
    missing_edge: Optional[Tuple[int, int]]

    def __bool__(self):
        return self.ok


def verify_decomposition(g: Graph, a, c, b) -> DecompositionCheck:
    """Does c separate a from b, with c complete? Returns a certificate on failure."""
    a, c, b = frozenset(a), frozenset(c), frozenset(b)
    if (a & b) or (a & c) or (b & c) or (a | b | c) != frozenset(g.vertices):
        raise ArgumentError("a, c, b must partition the vertex set")
    for x, y in itertools.combinations(sorted(c), 2):
        if not g.has_edge(x, y):
            return DecompositionCheck(False, None, (x, y))
    prev = {s: None for s in a}
    dq = deque(sorted(a))
    while dq:
        u = dq.popleft()
        for w in sorted(g.adjacency[u]):
            if w in c or w in prev:
                continue
            prev[w] = u
            if w in b:
                path = [w]
                while prev[path[-1]] is not None:
                    path.append(prev[path[-1]])
                return DecompositionCheck(False, tuple(reversed(path)), None)
            dq.append(w)
    return DecompositionCheck(True, None, None)
