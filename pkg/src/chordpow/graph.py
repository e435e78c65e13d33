"""Simple undirected graphs on vertices ``1..n`` and the constructions used on them.

Graphs are immutable and hashable, so they can key caches. Every public
function takes and returns 1-based vertex labels.
"""
from __future__ import annotations

import itertools
from dataclasses import dataclass
from functools import cached_property
from typing import Dict, FrozenSet, Iterable, List, Optional, Sequence, Tuple

import numpy as np

from .errors import ArgumentError, CapacityError, ParseError, ValidationError

DEFAULT_VERTEX_CAP = 64

Edge = Tuple[int, int]


def _norm_edge(i, j) -> Edge:
    i, j = int(i), int(j)
    return (i, j) if i < j else (j, i)


@dataclass(frozen=True)
class Graph:
    """Simple graph with vertices ``1..n``.

    Parameters
    ----------
    n : int
        Number of vertices.
    edges : iterable of pairs
        Unordered pairs ``{i, j}`` with ``i != j``. Stored normalised as
        ``(min, max)`` tuples in a frozenset, so duplicates collapse.
    """

    n: int
    edges: FrozenSet[Edge] = frozenset()

    def __post_init__(self):
        if isinstance(self.n, bool) or int(self.n) != self.n or self.n < 0:
            raise ArgumentError(f"vertex count must be a non-negative integer, got {self.n!r}")
        object.__setattr__(self, "n", int(self.n))
        norm = set()
        for e in self.edges:
            i, j = e
            if i == j:
                raise ValidationError(f"self-loop at vertex {i}")
            i, j = _norm_edge(i, j)
            if i < 1 or j > self.n:
                raise ArgumentError(f"edge ({i}, {j}) out of range 1..{self.n}")
            norm.add((i, j))
        object.__setattr__(self, "edges", frozenset(norm))

    @classmethod
    def from_edges(cls, n: int, edges: Iterable[Sequence[int]], strict: bool = False) -> "Graph":
        """Build a graph; with ``strict`` a repeated edge raises ValidationError."""
        edges = [_norm_edge(*e) for e in edges]
        if strict:
            seen = set()
            for e in edges:
                if e in seen:
                    raise ValidationError(f"duplicate edge {e}")
                seen.add(e)
        return cls(n, frozenset(edges))

    @cached_property
    def adjacency(self) -> Dict[int, FrozenSet[int]]:
        adj: Dict[int, set] = {v: set() for v in range(1, self.n + 1)}
        for i, j in self.edges:
            adj[i].add(j)
            adj[j].add(i)
        return {v: frozenset(s) for v, s in adj.items()}

    @property
    def m(self) -> int:
        return len(self.edges)

    @property
    def vertices(self) -> range:
        return range(1, self.n + 1)

    def neighbors(self, v: int) -> FrozenSet[int]:
        self._check_vertex(v)
        return self.adjacency[v]

    def degree(self, v: int) -> int:
        return len(self.neighbors(v))

    def has_edge(self, i: int, j: int) -> bool:
        return i != j and _norm_edge(i, j) in self.edges

    def sorted_edges(self) -> List[Edge]:
        return sorted(self.edges)

    def _check_vertex(self, v):
        if isinstance(v, bool) or int(v) != v or not 1 <= v <= self.n:
            raise ArgumentError(f"vertex {v!r} out of range 1..{self.n}")

    def is_complete(self) -> bool:
        return self.m == self.n * (self.n - 1) // 2

    def is_clique(self, vs: Iterable[int]) -> bool:
        vs = list(vs)
        return all(self.has_edge(a, b) for a, b in itertools.combinations(vs, 2))

    def components(self) -> List[FrozenSet[int]]:
        """Connected components, sorted by smallest vertex."""
        seen = set()
        out = []
        for s in self.vertices:
            if s in seen:
                continue
            comp = {s}
            stack = [s]
            while stack:
                x = stack.pop()
                for y in self.adjacency[x]:
                    if y not in comp:
                        comp.add(y)
                        stack.append(y)
            seen |= comp
            out.append(frozenset(comp))
        return out

    def is_connected(self) -> bool:
        return self.n <= 1 or len(self.components()) == 1

    def is_subgraph_of(self, other: "Graph") -> bool:
        """True when both graphs share the vertex set and every edge of self is in other."""
        return self.n == other.n and self.edges <= other.edges

    def __repr__(self):
        return f"Graph(n={self.n}, edges={self.sorted_edges()})"


# ---------------------------------------------------------------------------
# families

FAMILY_KINDS = (
    "complete",
    "complete_minus_edge",
    "path",
    "cycle",
    "star",
    "complete_bipartite",
    "band",
    "split",
    "fan",
)


@dataclass(frozen=True)
class FamilySpec:
    """A named graph family with integer parameters, e.g. ``band:8,3``."""

    kind: str
    params: Tuple[int, ...]

    def __post_init__(self):
        object.__setattr__(self, "params", tuple(int(p) for p in self.params))
        self.validate()

    @classmethod
    def parse(cls, text: str) -> "FamilySpec":
        kind, sep, rest = text.strip().partition(":")
        kind = kind.strip()
        if not sep or not rest.strip():
            raise ArgumentError(f"family {text!r} must look like name:params")
        try:
            params = tuple(int(x) for x in rest.split(","))
        except ValueError:
            raise ArgumentError(f"family parameters must be integers: {rest!r}") from None
        return cls(kind, params)

    def validate(self):
        k, p = self.kind, self.params

        def need(count):
            if len(p) != count:
                raise ArgumentError(f"{k} takes {count} parameter(s), got {len(p)}")

        if k == "complete":
            need(1)
            if p[0] < 1:
                raise ArgumentError("complete needs n >= 1")
        elif k == "complete_minus_edge":
            need(1)
            if p[0] < 2:
                raise ArgumentError("complete_minus_edge needs n >= 2")
        elif k == "path":
            need(1)
            if p[0] < 1:
                raise ArgumentError("path needs n >= 1")
        elif k == "cycle":
            need(1)
            if p[0] < 3:
                raise ArgumentError("cycle needs n >= 3")
        elif k == "star":
            need(1)
            if p[0] < 1:
                raise ArgumentError("star needs k >= 1 leaves")
        elif k == "complete_bipartite":
            need(2)
            if min(p) < 1:
                raise ArgumentError("complete_bipartite needs m, n >= 1")
        elif k == "band":
            need(2)
            if not 1 <= p[1] < p[0]:
                raise ArgumentError("band(n, d) needs 1 <= d < n")
        elif k == "split":
            if len(p) < 1 or p[0] < 1:
                raise ArgumentError("split needs a clique size c >= 1")
            c = p[0]
            for d in p[1:]:
                if not 0 <= d <= c:
                    raise ArgumentError(f"split pendant degree {d} must satisfy 0 <= d <= c = {c}")
        elif k == "fan":
            need(1)
            if p[0] < 2:
                raise ArgumentError("fan needs n >= 2")
        else:
            raise ArgumentError(f"unknown family {k!r}; expected one of {', '.join(FAMILY_KINDS)}")

    def __str__(self):
        return f"{self.kind}:{','.join(map(str, self.params))}"


def generate(spec) -> Graph:
    """Build a family member with its canonical labelling.

    ``spec`` may be a FamilySpec or its ``name:params`` text form.

    - band(n, d): ``i ~ j`` iff ``0 < |i - j| <= d``
    - complete_bipartite(m, n): parts ``1..m`` and ``m+1..m+n``
    - complete_minus_edge(n): K_n without ``{1, n}``
    - star(k): centre 1, leaves ``2..k+1``
    - split(c, d_1, .., d_k): clique ``1..c``; vertex ``c+i`` joined to ``1..d_i``
    - fan(n): vertex 1 joined to every vertex of the path ``2..n``
    """
    if isinstance(spec, str):
        spec = FamilySpec.parse(spec)
    k, p = spec.kind, spec.params
    if k == "complete":
        n = p[0]
        return Graph(n, frozenset(itertools.combinations(range(1, n + 1), 2)))
    if k == "complete_minus_edge":
        n = p[0]
        return Graph(n, frozenset(e for e in itertools.combinations(range(1, n + 1), 2) if e != (1, n)))
    if k == "path":
        n = p[0]
        return Graph(n, frozenset((i, i + 1) for i in range(1, n)))
    if k == "cycle":
        n = p[0]
        return Graph(n, frozenset([(i, i + 1) for i in range(1, n)] + [(1, n)]))
    if k == "star":
        return Graph(p[0] + 1, frozenset((1, j) for j in range(2, p[0] + 2)))
    if k == "complete_bipartite":
        a, b = p
        return Graph(a + b, frozenset((i, a + j) for i in range(1, a + 1) for j in range(1, b + 1)))
    if k == "band":
        n, d = p
        return Graph(n, frozenset((i, j) for i in range(1, n + 1) for j in range(i + 1, min(n, i + d) + 1)))
    if k == "split":
        c, degs = p[0], p[1:]
        edges = set(itertools.combinations(range(1, c + 1), 2))
        for idx, d in enumerate(degs, start=1):
            edges.update((u, c + idx) for u in range(1, d + 1))
        return Graph(c + len(degs), frozenset(edges))
    if k == "fan":
        n = p[0]
        edges = {(1, j) for j in range(2, n + 1)} | {(j, j + 1) for j in range(2, n)}
        return Graph(n, frozenset(edges))
    raise ArgumentError(f"unknown family {k!r}")


# ---------------------------------------------------------------------------
# constructions


def induced_subgraph(g: Graph, s: Iterable[int]) -> Tuple[Graph, Tuple[int, ...]]:
    """Subgraph induced by ``s``, relabelled ``1..|s|`` in increasing original order.

    Returns the graph and ``labels`` with ``labels[k - 1]`` the original label of new vertex k.
    """
    labels = tuple(sorted(set(s)))
    if not labels:
        raise ArgumentError("induced_subgraph needs a nonempty vertex set")
    for v in labels:
        g._check_vertex(v)
    new = {v: k for k, v in enumerate(labels, start=1)}
    edges = frozenset((new[i], new[j]) for i, j in g.edges if i in new and j in new)
    return Graph(len(labels), edges), labels


def schur_complement_graph(g: Graph, v: int) -> Graph:
    """G/v: delete v and turn its neighbourhood into a clique. Remaining vertices keep their order."""
    g._check_vertex(v)
    if g.n < 2:
        raise ArgumentError("schur_complement_graph needs n >= 2")
    nb = g.adjacency[v]
    edges = {e for e in g.edges if v not in e}
    edges.update(itertools.combinations(sorted(nb), 2))
    relabel = {u: (u if u < v else u - 1) for u in g.vertices if u != v}
    return Graph(g.n - 1, frozenset((relabel[a], relabel[b]) for a, b in edges))


def coalesce(g1: Graph, v1: int, g2: Graph, v2: int) -> Tuple[Graph, Dict[int, int], Dict[int, int]]:
    """Disjoint union of g1 and g2 with v1 and v2 identified.

    g1 keeps its labels; vertices of g2 other than v2 follow after n1 in order.
    Returns ``(graph, map1, map2)`` with maps from old to new labels.
    """
    if g1.n < 1 or g2.n < 1:
        raise ArgumentError("coalesce needs nonempty graphs")
    g1._check_vertex(v1)
    g2._check_vertex(v2)
    map1 = {u: u for u in g1.vertices}
    map2 = {}
    nxt = g1.n + 1
    for u in g2.vertices:
        if u == v2:
            map2[u] = v1
        else:
            map2[u] = nxt
            nxt += 1
    edges = set(g1.edges) | {_norm_edge(map2[a], map2[b]) for a, b in g2.edges}
    return Graph(g1.n + g2.n - 1, frozenset(edges)), map1, map2


def add_path(g: Graph, v1: int, v2: int, m: int) -> Graph:
    """Add a v1-v2 path of edge-length m through m-1 new vertices ``n+1..n+m-1``."""
    g._check_vertex(v1)
    g._check_vertex(v2)
    if v1 == v2:
        raise ArgumentError("add_path needs distinct endpoints")
    if int(m) != m or m < 1:
        raise ArgumentError("path length must be a positive integer")
    if m == 1:
        if g.has_edge(v1, v2):
            return g
        return Graph(g.n, g.edges | {_norm_edge(v1, v2)})
    chain = [v1] + list(range(g.n + 1, g.n + m)) + [v2]
    edges = set(g.edges) | {_norm_edge(a, b) for a, b in zip(chain, chain[1:])}
    return Graph(g.n + m - 1, frozenset(edges))


def disjoint_union(g1: Graph, g2: Graph) -> Graph:
    shift = g1.n
    return Graph(g1.n + g2.n, g1.edges | frozenset((a + shift, b + shift) for a, b in g2.edges))


# ---------------------------------------------------------------------------
# cliques and near-cliques


def check_cap(g: Graph, cap: Optional[int]):
    if cap is not None and g.n > cap:
        raise CapacityError(f"graph has {g.n} vertices, above the vertex cap {cap}")


def bron_kerbosch(g: Graph, cap: Optional[int] = DEFAULT_VERTEX_CAP) -> List[Tuple[int, ...]]:
    """All maximal cliques by Bron-Kerbosch with Tomita pivoting; sorted output."""
    check_cap(g, cap)
    adj = g.adjacency
    out: List[Tuple[int, ...]] = []

    def expand(r, p, x):
        if not p and not x:
            out.append(tuple(sorted(r)))
            return
        pivot = max(p | x, key=lambda u: len(adj[u] & p))
        for v in sorted(p - adj[pivot]):
            expand(r | {v}, p & adj[v], x & adj[v])
            p = p - {v}
            x = x | {v}

    if g.n:
        expand(frozenset(), frozenset(g.vertices), frozenset())
    return sorted(out)


def clique_number(g: Graph, cap: Optional[int] = DEFAULT_VERTEX_CAP) -> int:
    if g.n == 0:
        return 0
    return max(len(c) for c in bron_kerbosch(g, cap))


def find_near_clique(g: Graph, cap: Optional[int] = DEFAULT_VERTEX_CAP, cliques=None):
    """Largest K_r or K_r minus an edge contained in g.

    Returns ``(r, x, s, y)``: ``s`` is a clique of size ``r - 2`` and ``x, y`` are
    two further vertices adjacent to all of ``s`` (they may or may not be adjacent).
    """
    if g.n < 2:
        raise ArgumentError("near-clique search needs n >= 2")
    check_cap(g, cap)
    if cliques is None:
        cliques = bron_kerbosch(g, cap)
    omega = max(len(c) for c in cliques)
    adj = g.adjacency
    # r = omega + 1 iff some (omega-1)-clique has two common neighbours outside it
    seen = set()
    for c in cliques:
        if len(c) < omega - 1:
            continue
        for sub in itertools.combinations(c, omega - 1):
            if sub in seen:
                continue
            seen.add(sub)
            common = set(g.vertices) - set(sub)
            for u in sub:
                common &= adj[u]
            if len(common) >= 2:
                x, y = sorted(common)[:2]
                return omega + 1, x, sub, y
    best = next(c for c in cliques if len(c) == omega)
    if omega == 1:
        # edgeless with n >= 2 was handled above (empty clique, all vertices common)
        raise AssertionError("unreachable")
    return omega, best[0], tuple(best[1:-1]), best[-1]


def largest_near_clique(g: Graph, cap: Optional[int] = DEFAULT_VERTEX_CAP) -> int:
    """Largest r such that K_r or K_r minus one edge is a subgraph of g."""
    return find_near_clique(g, cap)[0]


def is_disjoint_union_k2(g: Graph) -> bool:
    """True iff every component is a single edge (isolated vertices disqualify)."""
    return g.n > 0 and all(len(g.adjacency[v]) == 1 for v in g.vertices)


# ---------------------------------------------------------------------------
# structure


def is_tree(g: Graph) -> bool:
    return g.n >= 1 and g.m == g.n - 1 and g.is_connected()


def is_cycle(g: Graph) -> bool:
    return g.n >= 3 and all(len(g.adjacency[v]) == 2 for v in g.vertices) and g.is_connected()


def bipartition(g: Graph) -> Optional[Tuple[FrozenSet[int], FrozenSet[int]]]:
    """Two-colouring (side of the smallest vertex first per component), or None."""
    colour: Dict[int, int] = {}
    for s in g.vertices:
        if s in colour:
            continue
        colour[s] = 0
        stack = [s]
        while stack:
            x = stack.pop()
            for y in g.adjacency[x]:
                if y not in colour:
                    colour[y] = 1 - colour[x]
                    stack.append(y)
                elif colour[y] == colour[x]:
                    return None
    a = frozenset(v for v, c in colour.items() if c == 0)
    return a, frozenset(g.vertices) - a


def biconnected_components(g: Graph) -> List[FrozenSet[int]]:
    """Vertex sets of the blocks with at least one edge (iterative Hopcroft-Tarjan)."""
    adj = {v: sorted(g.adjacency[v]) for v in g.vertices}
    disc: Dict[int, int] = {}
    low: Dict[int, int] = {}
    blocks = []
    counter = 0
    for root in g.vertices:
        if root in disc or not adj[root]:
            continue
        disc[root] = low[root] = counter
        counter += 1
        edge_stack: List[Edge] = []
        stack = [(root, 0, iter(adj[root]))]
        while stack:
            u, parent, it = stack[-1]
            advanced = False
            for w in it:
                if w == parent:
                    continue
                if w not in disc:
                    disc[w] = low[w] = counter
                    counter += 1
                    edge_stack.append((u, w))
                    stack.append((w, u, iter(adj[w])))
                    advanced = True
                    break
                if disc[w] < disc[u]:
                    low[u] = min(low[u], disc[w])
                    edge_stack.append((u, w))
            if advanced:
                continue
            stack.pop()
            if stack:
                p = stack[-1][0]
                low[p] = min(low[p], low[u])
                if low[u] >= disc[p]:
                    block = set()
                    while True:
                        a, b = edge_stack.pop()
                        block.update((a, b))
                        if (a, b) == (p, u):
                            break
                    blocks.append(frozenset(block))
    return sorted(blocks, key=lambda b: sorted(b))


def strip_pendant_trees(g: Graph) -> Tuple[Graph, Tuple[int, ...]]:
    """Repeatedly delete degree-1 vertices; returns the induced remainder and its label map.

    A tree shrinks to a single vertex; isolated vertices are kept.
    """
    deg = {v: len(g.adjacency[v]) for v in g.vertices}
    alive = set(g.vertices)
    queue = [v for v in g.vertices if deg[v] == 1]
    while queue:
        v = queue.pop()
        if v not in alive or deg[v] != 1:
            continue
        alive.discard(v)
        for w in g.adjacency[v]:
            if w in alive:
                deg[w] -= 1
                if deg[w] == 1:
                    queue.append(w)
        deg[v] = 0
    return induced_subgraph(g, alive)


def find_c4(g: Graph) -> Optional[Tuple[int, int, int, int]]:
    """A 4-cycle subgraph ``(a, x, b, y)`` in cyclic order, or None."""
    adj = g.adjacency
    for a, b in itertools.combinations(g.vertices, 2):
        common = sorted(adj[a] & adj[b])
        if len(common) >= 2:
            return a, common[0], b, common[1]
    return None


def find_even_cycle(g: Graph, max_len: int = 12) -> Optional[Tuple[int, ...]]:
    """Shortest even cycle (as a subgraph, chords allowed) of length <= max_len, or None."""
    c4 = find_c4(g)
    if c4 is not None:
        return c4
    adj = {v: sorted(g.adjacency[v]) for v in g.vertices}
    for length in range(6, max_len + 1, 2):
        for s in g.vertices:
            # cycles through s whose other vertices all exceed s
            path = [s]
            on = {s}

            def dfs(u):
                if len(path) == length:
                    return s in adj[u]
                for w in adj[u]:
                    if w > s and w not in on:
                        path.append(w)
                        on.add(w)
                        if dfs(w):
                            return True
                        path.pop()
                        on.discard(w)
                return False

            if dfs(s):
                return tuple(path)
    return None


def find_cosine_pattern(g: Graph, m: int) -> Optional[Tuple[int, ...]]:
    """Vertices ``w_1..w_2m`` with ``w_j ~ w_k`` whenever ``|j - k| != m``, or None.

    That is the pattern of the 2m x 2m cosine matrix: K_2m minus a perfect matching.
    """
    size = 2 * m
    adj = g.adjacency
    cand = [v for v in g.vertices if len(adj[v]) >= size - 2]
    if len(cand) < size:
        return None
    seq: List[int] = []

    def ok(pos, v):
        for k, w in enumerate(seq):
            if abs(pos - k) != m and w not in adj[v]:
                return False
        return True

    def rec():
        pos = len(seq)
        if pos == size:
            return True
        for v in cand:
            if v not in seq and ok(pos, v):
                seq.append(v)
                if rec():
                    return True
                seq.pop()
        return False

    return tuple(seq) if rec() else None


# ---------------------------------------------------------------------------
# random graphs (tests and batteries)


def random_tree(n: int, rng: np.random.Generator) -> Graph:
    """Uniform labelled tree from a random Pruefer sequence."""
    if n < 1:
        raise ArgumentError("random_tree needs n >= 1")
    if n == 1:
        return Graph(1)
    if n == 2:
        return Graph(2, frozenset({(1, 2)}))
    seq = [int(x) for x in rng.integers(1, n + 1, size=n - 2)]
    degree = [1] * (n + 1)
    for x in seq:
        degree[x] += 1
    edges = []
    for x in seq:
        leaf = next(v for v in range(1, n + 1) if degree[v] == 1)
        edges.append((leaf, x))
        degree[leaf] -= 1
        degree[x] -= 1
    u, w = [v for v in range(1, n + 1) if degree[v] == 1]
    edges.append((u, w))
    return Graph.from_edges(n, edges)


def random_chordal(n: int, rng: np.random.Generator, connected: bool = True) -> Graph:
    """Random chordal graph: each new vertex attaches to a random subset of an existing clique.

    The insertion order reversed is a perfect elimination ordering.
    """
    if n < 1:
        raise ArgumentError("random_chordal needs n >= 1")
    cliques = [[1]]
    edges = []
    for v in range(2, n + 1):
        base = cliques[int(rng.integers(len(cliques)))]
        lo = 1 if connected else 0
        k = int(rng.integers(lo, len(base) + 1))
        nb = [int(x) for x in rng.choice(base, size=k, replace=False)] if k else []
        edges.extend((u, v) for u in nb)
        cliques.append(sorted(nb) + [v])
    return Graph.from_edges(n, edges)


def random_graph(n: int, p: float, rng: np.random.Generator) -> Graph:
    edges = [e for e in itertools.combinations(range(1, n + 1), 2) if rng.random() < p]
    return Graph.from_edges(n, edges)


# ---------------------------------------------------------------------------
# edge-list text format


def parse_edge_list(text: str) -> Graph:
    """Parse ``p <n> <m>`` followed by ``e <i> <j>`` lines; ``c`` lines and blanks are skipped."""
    n = None
    declared = 0
    edges = []
    seen = set()
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line or line.startswith("c"):
            continue
        parts = line.split()
        if parts[0] == "p":
            if n is not None:
                raise ParseError("second header line", lineno)
            if len(parts) != 3:
                raise ParseError("header must be 'p <n> <m>'", lineno)
            try:
                n, declared = int(parts[1]), int(parts[2])
            except ValueError:
                raise ParseError("header counts must be integers", lineno) from None
            if n < 0 or declared < 0:
                raise ParseError("header counts must be non-negative", lineno)
        elif parts[0] == "e":
            if n is None:
                raise ParseError("edge line before header", lineno)
            if len(parts) != 3:
                raise ParseError("edge line must be 'e <i> <j>'", lineno)
            try:
                i, j = int(parts[1]), int(parts[2])
            except ValueError:
                raise ParseError("edge endpoints must be integers", lineno) from None
            if not (1 <= i <= n and 1 <= j <= n):
                raise ParseError(f"endpoint out of range 1..{n}", lineno)
            if i == j:
                raise ParseError(f"self-loop at vertex {i}", lineno)
            e = _norm_edge(i, j)
            if e in seen:
                raise ValidationError(f"line {lineno}: duplicate edge {e}")
            seen.add(e)
            edges.append(e)
        else:
            raise ParseError(f"unrecognised line {line!r}", lineno)
    if n is None:
        raise ParseError("missing 'p <n> <m>' header")
    if len(edges) != declared:
        raise ParseError(f"header declares {declared} edges, found {len(edges)}")
    return Graph(n, frozenset(edges))


def format_edge_list(g: Graph) -> str:
    lines = [f"p {g.n} {g.m}"] + [f"e {i} {j}" for i, j in g.sorted_edges()]
    return "\n".join(lines) + "\n"


def parse_graph_file(path) -> Graph:
    with open(path, encoding="utf-8") as fh:
        return parse_edge_list(fh.read())


def write_graph_file(g: Graph, path):
    with open(path, "w", encoding="utf-8") as fh:
        fh.write(format_edge_list(g))
