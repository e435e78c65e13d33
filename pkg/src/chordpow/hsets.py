"""Sets of exponents whose entrywise powers preserve a cone, and the per-family dispatcher.

Every set handled here has the shape ``D | [t, inf)`` where D is empty, the
positive integers, the odd ones or the even ones, and t is a real number or
``-inf``. When only inclusions are known the set is ``bounded``: it holds a
``lower`` set known to be contained in the true set and an ``upper`` set
known to contain it, plus exponents known to be excluded.
"""
from __future__ import annotations

import math
from dataclasses import dataclass
from enum import Enum
from typing import Dict, Iterable, List, Optional, Tuple

from .chordal import chordal_exponent, is_chordal, minimal_triangulation
from .errors import ArgumentError, DomainError
from .graph import (
    DEFAULT_VERTEX_CAP,
    Graph,
    biconnected_components,
    bipartition,
    check_cap,
    clique_number,
    find_c4,
    find_even_cycle,
    find_near_clique,
    induced_subgraph,
    is_cycle,
    is_disjoint_union_k2,
    is_tree,
    strip_pendant_trees,
)

NEG_INF = -math.inf
KINDS = ("plain", "psi", "phi")


class Discrete(str, Enum):
    EMPTY = "empty"
    NATURALS = "naturals"
    ODD = "odd_naturals"
    EVEN = "even_naturals"

    def contains(self, x: float) -> bool:
        if self is Discrete.EMPTY or x < 1 or x != int(x):
            return False
        k = int(x)
        if self is Discrete.NATURALS:
            return True
        return (k % 2 == 1) == (self is Discrete.ODD)

    @property
    def symbol(self) -> str:
        return {"empty": "{}", "naturals": "N", "odd_naturals": "2N-1", "even_naturals": "2N"}[self.value]


# the discrete family attached to each power kind in the closed forms
KIND_DISCRETE = {"plain": Discrete.NATURALS, "psi": Discrete.ODD, "phi": Discrete.EVEN}


def _points_below(d: Discrete, t: float) -> Tuple[int, ...]:
    if t == NEG_INF:
        return ()
    return tuple(k for k in range(1, math.ceil(t)) if k < t and d.contains(k))


@dataclass(frozen=True, eq=False)
class HSet:
    """``discrete | [ray_start, inf)``; in bounded mode these mirror ``lower``."""

    discrete: Discrete
    ray_start: float
    mode: str = "exact"
    lower: Optional["HSet"] = None
    upper: Optional["HSet"] = None
    exclusions: Tuple[float, ...] = ()

    # -- construction

    @classmethod
    def exact(cls, discrete, ray_start) -> "HSet":
        t = float(ray_start)
        if math.isnan(t) or t == math.inf:
            raise ArgumentError("ray start must be finite or -inf")
        return cls(Discrete(discrete), t)

    @classmethod
    def ray(cls, t) -> "HSet":
        return cls.exact(Discrete.EMPTY, t)

    @classmethod
    def bounded(cls, lower: "HSet", upper: "HSet", exclusions: Iterable[float] = ()) -> "HSet":
        """Set known to contain ``lower`` and lie in ``upper`` minus ``exclusions``.

        Collapses to an exact set when the bounds meet.
        """
        lower, upper = lower.inner, upper.outer
        excl = tuple(sorted({float(x) for x in exclusions if upper.contains(x)}))
        for x in excl:
            if lower.contains(x):
                raise ArgumentError(f"exclusion {x} lies in the lower bound")
        if not lower.issubset(upper):
            raise ArgumentError(f"lower bound {lower} is not inside upper bound {upper}")
        if lower == upper:
            return lower
        return cls(lower.discrete, lower.ray_start, "bounded", lower, upper, excl)

    # -- views

    @property
    def is_exact(self) -> bool:
        return self.mode == "exact"

    @property
    def inner(self) -> "HSet":
        return self if self.is_exact else self.lower

    @property
    def outer(self) -> "HSet":
        return self if self.is_exact else self.upper

    def _key(self):
        return (self.ray_start, _points_below(self.discrete, self.ray_start))

    def contains(self, alpha: float) -> Optional[bool]:
        """Membership; None when a bounded set cannot decide."""
        if not self.is_exact:
            if self.lower.contains(alpha):
                return True
            if not self.upper.contains(alpha) or float(alpha) in self.exclusions:
                return False
            return None
        return alpha >= self.ray_start or self.discrete.contains(alpha)

    def points_below_ray(self) -> Tuple[int, ...]:
        return _points_below(self.discrete, self.ray_start)

    def __eq__(self, other):
        if not isinstance(other, HSet):
            return NotImplemented
        if self.is_exact and other.is_exact:
            return self._key() == other._key()
        if self.is_exact or other.is_exact:
            return False
        return (self.lower == other.lower and self.upper == other.upper
                and self.exclusions == other.exclusions)

    def __hash__(self):
        if self.is_exact:
            return hash(self._key())
        return hash((self.lower._key(), self.upper._key(), self.exclusions))

    def issubset(self, other: "HSet") -> bool:
        """Inclusion of exact sets."""
        if not (self.is_exact and other.is_exact):
            raise ArgumentError("issubset is defined for exact sets only")
        if self.ray_start < other.ray_start:
            return False
        return all(other.contains(k) for k in self.points_below_ray())

    def intersect(self, other: "HSet") -> "HSet":
        if self.is_exact and other.is_exact:
            return _intersect_exact(self, other)
        return HSet.bounded(
            self.inner.intersect(other.inner),
            self.outer.intersect(other.outer),
            self.exclusions + other.exclusions,
        )

    def with_ray(self, t: float) -> "HSet":
        """Same discrete family with another ray start (exact sets only)."""
        if not self.is_exact:
            raise ArgumentError("with_ray is defined for exact sets only")
        return HSet.exact(self.discrete, t)

    # -- output

    def __str__(self):
        if not self.is_exact:
            s = f"{self.lower} <= H <= {self.upper}"
            if self.exclusions:
                s += f", excluding {list(self.exclusions)}"
            return s
        if self.ray_start == NEG_INF:
            return "R"
        ray = f"[{self.ray_start:g}, inf)"
        pts = self.points_below_ray()
        if not pts:
            return ray
        return f"{self.discrete.symbol} u {ray}"

    def to_dict(self) -> Dict:
        d = {"discrete": self.discrete.value, "ray_start": self.ray_start, "mode": self.mode}
        if not self.is_exact:
            d["lower"] = self.lower.to_dict()
            d["upper"] = self.upper.to_dict()
            d["exclusions"] = list(self.exclusions)
        return d

    @classmethod
    def from_dict(cls, d: Dict) -> "HSet":
        if d["mode"] == "exact":
            return cls.exact(d["discrete"], _num(d["ray_start"]))
        return cls.bounded(cls.from_dict(d["lower"]), cls.from_dict(d["upper"]),
                           [_num(x) for x in d.get("exclusions", [])])


def _num(x):
    return NEG_INF if x == "-inf" else float(x)


def _intersect_exact(a: HSet, b: HSet) -> HSet:
    t = max(a.ray_start, b.ray_start)
    pts = tuple(k for k in range(1, math.ceil(t)) if k < t and a.contains(k) and b.contains(k)) \
        if t != NEG_INF else ()
    order = [a.discrete, b.discrete] + list(Discrete)
    for d in order:
        if _points_below(d, t) == pts:
            return HSet.exact(d, t)
    raise DomainError(f"intersection of {a} and {b} is not of the form D u [t, inf)")


def _tighten(a: HSet, b: HSet) -> HSet:
    """Combine two sound descriptions of the same set."""
    li, lj = a.inner, b.inner
    if li.issubset(lj):
        lower = lj
    elif lj.issubset(li):
        lower = li
    else:
        lower = li if li.ray_start <= lj.ray_start else lj
    return HSet.bounded(lower, a.outer.intersect(b.outer), a.exclusions + b.exclusions)


# ---------------------------------------------------------------------------
# reports


METHODS = ("complete_formula", "chordal_formula", "tree", "cycle", "bipartite",
           "coalescence", "k2_union", "triangulation_bounds")


@dataclass(frozen=True)
class HSetReport:
    """Power-preserving sets for the three power kinds plus the graph data used."""

    hset_plain: HSet
    hset_psi: HSet
    hset_phi: HSet
    omega: int
    r: int
    s: Optional[int]
    method: str

    def hset(self, kind: str) -> HSet:
        return {"plain": self.hset_plain, "psi": self.hset_psi, "phi": self.hset_phi}[_kind(kind)]

    # critical exponent: for bounded sets the lower set's ray, an upper bound on the true value
    @property
    def ce_plain(self) -> float:
        return self.hset_plain.ray_start

    @property
    def ce_psi(self) -> float:
        return self.hset_psi.ray_start

    @property
    def ce_phi(self) -> float:
        return self.hset_phi.ray_start

    def ce(self, kind: str) -> float:
        return self.hset(kind).ray_start

    def ce_bounds(self, kind: str) -> Tuple[float, float]:
        """Interval known to contain the critical exponent."""
        h = self.hset(kind)
        return h.outer.ray_start, h.inner.ray_start

    @property
    def is_exact(self) -> bool:
        return all(self.hset(k).is_exact for k in KINDS)

    def to_dict(self) -> Dict:
        return {
            "method": self.method,
            "omega": self.omega,
            "r": self.r,
            "s": self.s,
            "ce": {k: self.ce(k) for k in KINDS},
            "ce_bounds": {k: list(self.ce_bounds(k)) for k in KINDS},
            "hsets": {k: self.hset(k).to_dict() for k in KINDS},
        }

    @classmethod
    def from_dict(cls, d: Dict) -> "HSetReport":
        hs = d["hsets"]
        return cls(HSet.from_dict(hs["plain"]), HSet.from_dict(hs["psi"]), HSet.from_dict(hs["phi"]),
                   d["omega"], d["r"], d["s"], d["method"])


def _kind(kind: str) -> str:
    aliases = {"odd_psi": "psi", "even_phi": "phi"}
    kind = aliases.get(kind, kind)
    if kind not in KINDS:
        raise ArgumentError(f"unknown power kind {kind!r}")
    return kind


def _closed_forms(t: float) -> Dict[str, HSet]:
    return {k: HSet.exact(KIND_DISCRETE[k], t) for k in KINDS}


def _report(sets: Dict[str, HSet], omega, r, s, method) -> HSetReport:
    return HSetReport(sets["plain"], sets["psi"], sets["phi"], omega, r, s, method)


def critical_exponent_chordal(g: Graph, formula_threshold: Optional[int] = None) -> HSetReport:
    """Exact report for a chordal graph with at least one edge.

    CE is the largest entry of ``M^T M - 2I`` for the clique matrix M, checked
    against ``max(omega - 2, s)``; the sets are ``N``, odd and even integers
    each joined with ``[CE, inf)``.
    """
    kw = {} if formula_threshold is None else {"formula_threshold": formula_threshold}
    ce = chordal_exponent(g, **kw)
    if g.is_complete():
        method = "complete_formula"
    elif is_tree(g) and g.n >= 3:
        method = "tree"
    else:
        method = "chordal_formula"
    return _report(_closed_forms(ce.ce), ce.omega, ce.ce + 2, ce.s, method)


# ---------------------------------------------------------------------------
# dispatcher


def hset(g: Graph, cap: Optional[int] = DEFAULT_VERTEX_CAP) -> HSetReport:
    """Power-preserving exponent sets for plain, odd and even powers on the cone of g.

    Exact for K_2 unions, chordal graphs (with any pendant trees), cycles,
    connected bipartite graphs (plain kind; odd/even in special cases) and
    coalescences of such pieces. Anything else gets bounds: the inner set
    from a minimal triangulation, the outer one from the largest
    near-clique. Graphs above ``cap`` vertices on the non-chordal path raise
    CapacityError.
    """
    if g.n < 2:
        raise ArgumentError("hset needs n >= 2")
    active = [v for v in g.vertices if g.adjacency[v]]
    if not active:
        # edgeless: every real power preserves the (diagonal) cone
        all_r = HSet.ray(NEG_INF)
        return _report({k: all_r for k in KINDS}, 1, 2, 0, "k2_union")
    core, _ = induced_subgraph(g, active)
    if is_disjoint_union_k2(core):
        return _report(_closed_forms(0.0), 2, 2, 0, "k2_union")
    if is_chordal(core):
        return critical_exponent_chordal(core)
    check_cap(core, cap)
    comps = core.components()
    if len(comps) > 1:
        reps = [hset(induced_subgraph(core, c)[0], cap) for c in comps if len(c) >= 2]
        sets = {k: _intersect_all([rp.hset(k) for rp in reps]) for k in KINDS}
        chordal_parts = all(rp.s is not None for rp in reps)
        method = next((rp.method for rp in reps if rp.method not in
                       ("complete_formula", "chordal_formula", "tree", "k2_union")), reps[0].method)
        return _report(sets, max(rp.omega for rp in reps), max(rp.r for rp in reps),
                       max(rp.s for rp in reps) if chordal_parts else None, method)
    return _connected_nonchordal(core, cap)


def _intersect_all(sets: List[HSet]) -> HSet:
    out = sets[0]
    for h in sets[1:]:
        out = out.intersect(h)
    return out


def _connected_nonchordal(g: Graph, cap) -> HSetReport:
    omega = clique_number(g, cap)
    r = find_near_clique(g, cap)[0]
    core, _ = strip_pendant_trees(g)
    one = HSet.ray(1.0)
    two = HSet.ray(2.0)

    candidates = []
    if is_cycle(core):
        n = core.n
        phi = two if n == 4 else HSet.bounded(two, one, [1.0] if n % 2 == 0 else [])
        candidates.append(("cycle", {"plain": one, "psi": one, "phi": phi}))
    else:
        blocks = biconnected_components(core)
        if len(blocks) > 1:
            candidates.append(("coalescence", _coalescence_sets(core, blocks, cap)))
        parts = bipartition(core)
        if parts is not None:
            candidates.append(("bipartite", _bipartite_sets(core, parts)))
        if not candidates:
            candidates.append(("triangulation_bounds", _triangulation_sets(core, r)))

    method, sets = candidates[0]
    for _, other in candidates[1:]:
        sets = {k: _tighten(sets[k], other[k]) for k in KINDS}
    sets = _subgraph_refinements(core, sets)
    sets = _parity_propagation(sets)
    return _report(sets, omega, r, None, method)


def _bipartite_sets(g: Graph, parts) -> Dict[str, HSet]:
    one = HSet.ray(1.0)
    a, b = parts
    small = a if len(a) <= len(b) else b
    # K_{2,2} inside G inside K_{2,m}
    k2m = len(small) == 2 and find_c4(g) is not None
    if k2m:
        phi = HSet.ray(2.0)
        psi = HSet.bounded(HSet.exact(Discrete.ODD, 2.0), one)
    else:
        phi = HSet.bounded(HSet.ray(2.0), one)
        psi = HSet.bounded(HSet.exact(Discrete.ODD, 3.0), one)
    return {"plain": one, "psi": psi, "phi": phi}


def _coalescence_sets(g: Graph, blocks, cap) -> Dict[str, HSet]:
    one = HSet.ray(1.0)
    reps = [hset(induced_subgraph(g, blk)[0], cap) for blk in blocks]
    psi = _intersect_all([one] + [rp.hset_psi for rp in reps])
    phi = _intersect_all([one] + [rp.hset_phi for rp in reps])
    t = min(psi.inner.ray_start, phi.inner.ray_start)
    plain_lower = HSet.exact(Discrete.NATURALS, t)
    plain_upper = _intersect_all([one] + [rp.hset_plain.outer for rp in reps])
    return {"plain": HSet.bounded(plain_lower, plain_upper), "psi": psi, "phi": phi}


def _triangulation_sets(g: Graph, r: int) -> Dict[str, HSet]:
    inner = critical_exponent_chordal(minimal_triangulation(g))
    one = HSet.ray(1.0)
    out = {}
    for k in KINDS:
        outer = HSet.exact(KIND_DISCRETE[k], float(r - 2)).intersect(one)
        out[k] = HSet.bounded(inner.hset(k), outer)
    return out


def _subgraph_refinements(g: Graph, sets: Dict[str, HSet]) -> Dict[str, HSet]:
    """Outer bounds inherited from subgraphs: a 4-cycle caps even powers at [2, inf),
    and any even cycle excludes 1 from them."""
    phi = sets["phi"]
    if find_c4(g) is not None:
        phi = HSet.bounded(phi.inner, phi.outer.intersect(HSet.ray(2.0)), phi.exclusions)
    if phi.contains(1.0) is None and find_even_cycle(g, max_len=min(g.n, 16)) is not None:
        phi = HSet.bounded(phi.inner, phi.outer, phi.exclusions + (1.0,))
    return dict(sets, phi=phi)


def _parity_propagation(sets: Dict[str, HSet]) -> Dict[str, HSet]:
    """Shifting an even power by one gives an odd one and vice versa, so each
    kind's inner ray is at most the other's plus one."""
    psi, phi = sets["psi"], sets["phi"]
    tpsi, tphi = psi.inner.ray_start, phi.inner.ray_start
    out = dict(sets)
    if tphi + 1 < tpsi:
        out["psi"] = HSet.bounded(psi.inner.with_ray(tphi + 1), psi.outer, psi.exclusions)
    if tpsi + 1 < tphi:
        out["phi"] = HSet.bounded(phi.inner.with_ray(tpsi + 1), phi.outer, phi.exclusions)
    return out
