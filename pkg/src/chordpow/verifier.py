"""Empirical checks of power preservation on P_G.

A counterexample is certified: it lies in P_G and its powered image fails the
PSD test. "Preserved" only means no counterexample turned up.
"""
from __future__ import annotations

import math
from dataclasses import dataclass, field, replace
from functools import lru_cache
from typing import Callable, Dict, Iterator, List, Optional, Sequence, Tuple

import numpy as np

from .chordal import maximal_cliques
from .errors import ArgumentError
from .graph import (DEFAULT_VERTEX_CAP, Graph, find_cosine_pattern, find_even_cycle,
                    find_near_clique)
from .hsets import KINDS, HSet, HSetReport, hset
from .matrices import (PowerMap, PsdVerdict, embed, format_matrix, in_cone, is_psd,
                       parse_matrix, superadditivity_gap_matrix, witness_cosine,
                       witness_path3, witness_signed_cycle, witness_W)

STRATEGIES = ("clique_sum", "witness_bank", "mixed")
PATH3_GRID = tuple(round(0.1 * k, 1) for k in range(1, 10))
W_SEARCH_BUDGET = 3000
LOCAL_SEARCH_ITERS = 200
EVEN_CYCLE_MAX = 16

# RNG stream ids
_CONE, _WSEARCH, _SUPER, _LOCAL = 0, 1, 2, 3


@dataclass(frozen=True)
class SampleConfig:
    seed: int = 0
    trials: int = 1000
    strategy: str = "mixed"
    entry_scale: float = 1.0

    def __post_init__(self):
        if self.trials < 1:
            raise ArgumentError("trials must be at least 1")
        if self.strategy not in STRATEGIES:
            raise ArgumentError(f"strategy must be one of {STRATEGIES}")
        if not self.entry_scale > 0:
            raise ArgumentError("entry_scale must be positive")


def trial_rng(seed: int, trial: int, stream: int = _CONE) -> np.random.Generator:
    """Independent generator for one trial, derived from ``(seed, trial, stream)`` only."""
    return np.random.default_rng([int(seed) % 2 ** 64, int(trial), int(stream)])


@dataclass(frozen=True)
class Counterexample:
    matrix: np.ndarray
    verdict: PsdVerdict
    source: str


@dataclass(frozen=True)
class Verdict:
    preserved: bool
    counterexample: Optional[Counterexample]
    trials_run: int
    witnesses_tried: Tuple[str, ...]
    power: PowerMap


# ---------------------------------------------------------------------------
# sampling


@lru_cache(maxsize=512)
def _cliques(g: Graph) -> Tuple[Tuple[int, ...], ...]:
    return tuple(maximal_cliques(g, cap=DEFAULT_VERTEX_CAP))


def _sample_factors(g: Graph, cfg: SampleConfig, trial: int) -> List[np.ndarray]:
    rng = trial_rng(cfg.seed, trial)
    out = []
    for c in _cliques(g):
        rank = int(rng.integers(1, len(c) + 1))
        out.append(rng.standard_normal((len(c), rank)) * cfg.entry_scale)
    return out


def _assemble(g: Graph, factors: Sequence[np.ndarray], nonnegative: bool) -> np.ndarray:
    a = np.zeros((g.n, g.n))
    for c, f in zip(_cliques(g), factors):
        if nonnegative:
            f = f * f
        idx = np.asarray(c) - 1
        a[np.ix_(idx, idx)] += f @ f.T
    return (a + a.T) / 2


def sample_cone(g: Graph, cfg: SampleConfig, trial: int, nonnegative: bool = False) -> np.ndarray:
    """Random element of P_G: a sum of random Gram blocks, one per maximal clique.

    Block ranks are uniform in ``1..|C|`` with standard normal factors scaled by
    ``cfg.entry_scale``; the nonnegative variant squares the factor entries.
    """
    if g.n < 1:
        raise ArgumentError("sample_cone needs a nonempty graph")
    return _assemble(g, _sample_factors(g, cfg, trial), nonnegative)


def _normalise(a: np.ndarray) -> np.ndarray:
    top = float(np.max(np.diag(a))) if a.size else 0.0
    return a / top if top > 0 else a


def _score(a: np.ndarray, p: PowerMap) -> float:
    """Smallest eigenvalue of the powered matrix relative to its largest entry."""
    b = p(a)
    return float(np.linalg.eigvalsh(b)[0]) / max(1.0, float(np.abs(b).max(initial=0.0)))


def _check(a: np.ndarray, p: PowerMap, tol: Optional[float]) -> PsdVerdict:
    return is_psd(p(a), tol)


# ---------------------------------------------------------------------------
# search over angle vectors (u = cos theta, v = sin theta)


def _seed_angles(m: int, hi: float) -> List[np.ndarray]:
    k = np.arange(1, m + 1)
    cheb = hi / 2 - 0.72 * (hi / 2) * np.cos((2 * k - 1) * np.pi / (2 * m))
    even = (k - 0.5) * hi / m
    return [cheb, even]


def _angle_descent(obj: Callable[[np.ndarray], float], m: int, hi: float, budget: int,
                   rng: np.random.Generator, stop: float) -> Tuple[np.ndarray, float]:
    """Random screening then coordinate descent with step halving; returns the best point.

    Stops as soon as the objective drops below ``stop`` or ``budget`` evaluations are spent.
    """
    evals = 0
    best_th, best_val = None, math.inf

    def ev(th):
        nonlocal evals, best_th, best_val
        evals += 1
        val = obj(th)
        if val < best_val:
            best_th, best_val = th, val
        return val

    seeds = _seed_angles(m, hi)
    for th in seeds:
        if ev(th) < stop:
            return best_th, best_val
    pool = []
    for _ in range(max(1, budget // 4)):
        if evals >= budget:
            break
        th = rng.random(m) * hi
        val = ev(th)
        if val < stop:
            return best_th, best_val
        pool.append((val, th))
    pool.sort(key=lambda t: t[0])
    starts = seeds + [th for _, th in pool[:4]]
    for th in starts:
        val = obj(th)
        step = 0.1 * hi
        for _ in range(LOCAL_SEARCH_ITERS):
            improved = False
            for i in range(m):
                for s in (step, -step):
                    if evals >= budget:
                        return best_th, best_val
                    t = th.copy()
                    t[i] = min(hi, max(0.0, t[i] + s))
                    nv = ev(t)
                    if nv < stop:
                        return best_th, best_val
                    if nv < val:
                        th, val, improved = t, nv, True
                        break
            if not improved:
                step /= 2
                if step < 1e-10:
                    break
    return best_th, best_val


def _angle_hi(p: PowerMap) -> float:
    # radii do not matter (diagonal congruence); sign flips of (u_i, v_i) do not matter for psi/phi
    return math.pi / 2 if p.kind == "plain" else math.pi


def _uv(th: np.ndarray, p: PowerMap):
    u, v = np.cos(th), np.sin(th)
    if p.kind == "plain":
        u, v = np.clip(u, 0.0, None), np.clip(v, 0.0, None)
    return u, v


def _gap_objective(p: PowerMap):
    def obj(th):
        u, v = _uv(th, p)
        return float(np.linalg.eigvalsh(superadditivity_gap_matrix(p, u, v))[0])
    return obj


def _w_matrix(th, p):
    u, v = _uv(th, p)
    return witness_W(u, v, np.outer(u, u) + np.outer(v, v))


def superadditive_falsify(m: int, p: PowerMap, budget: int = 10_000, seed: int = 0,
                          tol: Optional[float] = None):
    """Search for ``u, v`` with ``f[uu^T + vv^T] - f[uu^T] - f[vv^T]`` not PSD.

    Returns ``(u, v)`` certified by :func:`superadditivity_gap`, or None when
    ``budget`` gap evaluations find nothing.
    """
    if m < 1:
        raise ArgumentError("dimension must be at least 1")
    stop = -(1e-9 if tol is None else tol) * 4
    th, _ = _angle_descent(_gap_objective(p), m, _angle_hi(p), budget,
                           trial_rng(seed, 0, _SUPER), stop)
    u, v = _uv(th, p)
    if not is_psd(superadditivity_gap_matrix(p, u, v), tol).is_psd:
        return u, v
    return None


# ---------------------------------------------------------------------------
# witness bank


def _path3_site(g: Graph):
    for v in g.vertices:
        nb = sorted(g.adjacency[v])
        if len(nb) >= 2:
            return nb[0], v, nb[1]
    return None


def witness_bank(g: Graph, p: PowerMap, seed: int = 0, tol: Optional[float] = None) -> Iterator[Tuple[str, np.ndarray]]:
    """Candidate matrices in P_G, most effective first."""
    n = g.n
    site = _path3_site(g)
    if site is not None:
        for a in PATH3_GRID:
            yield f"path3(a={a})", embed(witness_path3(a), site, n)
    if p.kind != "plain":
        for m in range(2, min(3, n // 2) + 1):
            seq = find_cosine_pattern(g, m)
            if seq is not None:
                yield f"cosine(n={2 * m})", embed(witness_cosine(2 * m), seq, n)
        cyc = find_even_cycle(g, max_len=min(n, EVEN_CYCLE_MAX))
        if cyc is not None:
            yield f"signed_cycle(len={len(cyc)})", embed(witness_signed_cycle(len(cyc)), cyc, n)
    if n >= 3 and g.m:
        r, x, s, y = find_near_clique(g, cap=DEFAULT_VERTEX_CAP, cliques=list(_cliques(g)))
        m = r - 2
        if m >= 1:
            stop = -4 * (1e-9 if tol is None else tol)

            def obj(th):
                return float(np.linalg.eigvalsh(p(_w_matrix(th, p)))[0])

            th, _ = _angle_descent(obj, m, _angle_hi(p), W_SEARCH_BUDGET,
                                   trial_rng(seed, 0, _WSEARCH), stop)
            yield f"W(m={m})", embed(_w_matrix(th, p), (x,) + tuple(s) + (y,), n)


# ---------------------------------------------------------------------------
# preservation and falsification


def preserves(g: Graph, p: PowerMap, cfg: SampleConfig = SampleConfig(),
              tol: Optional[float] = None) -> Verdict:
    """Witness bank (unless strategy is clique_sum), then ``cfg.trials`` random cone samples.

    Returns at the first violation.
    """
    tried = []
    if cfg.strategy != "clique_sum":
        for name, a in witness_bank(g, p, cfg.seed, tol):
            tried.append(name)
            ver = _check(a, p, tol)
            if not ver.is_psd:
                return Verdict(False, Counterexample(a, ver, name), 0, tuple(tried), p)
    runs = 0
    if cfg.strategy != "witness_bank":
        nonneg = p.kind == "plain"
        for k in range(cfg.trials):
            runs += 1
            a = _normalise(sample_cone(g, cfg, k, nonneg))
            ver = _check(a, p, tol)
            if not ver.is_psd:
                return Verdict(False, Counterexample(a, ver, f"random(trial={k})"), runs, tuple(tried), p)
    return Verdict(True, None, runs, tuple(tried), p)


def _local_search(g: Graph, p: PowerMap, factors: List[np.ndarray], scale: float,
                  rng: np.random.Generator) -> Tuple[List[np.ndarray], float]:
    """Coordinate descent on the Gram factors, minimising the powered matrix's score."""
    nonneg = p.kind == "plain"
    shapes = [f.shape for f in factors]
    x = np.concatenate([f.ravel() for f in factors])

    def unpack(vec):
        out, pos = [], 0
        for sh in shapes:
            size = sh[0] * sh[1]
            out.append(vec[pos:pos + size].reshape(sh))
            pos += size
        return out

    def obj(vec):
        return _score(_normalise(_assemble(g, unpack(vec), nonneg)), p)

    val = obj(x)
    step = 0.25 * scale
    order = rng.permutation(len(x))
    stale = 0
    for it in range(LOCAL_SEARCH_ITERS):
        i = order[it % len(x)]
        moved = False
        for s in (step, -step):
            t = x.copy()
            t[i] += s
            nv = obj(t)
            if nv < val:
                x, val, moved = t, nv, True
                break
        stale = 0 if moved else stale + 1
        if stale >= len(x):
            step /= 2
            stale = 0
    return unpack(x), val


def falsify_verdict(g: Graph, p: PowerMap, budget: int = 1000, cfg: Optional[SampleConfig] = None,
                    tol: Optional[float] = None) -> Verdict:
    """Like :func:`preserves`, plus local descent around the most negative random sample."""
    cfg = replace(cfg or SampleConfig(), trials=max(1, int(budget)))
    tried = []
    if cfg.strategy != "clique_sum":
        for name, a in witness_bank(g, p, cfg.seed, tol):
            tried.append(name)
            ver = _check(a, p, tol)
            if not ver.is_psd:
                return Verdict(False, Counterexample(a, ver, name), 0, tuple(tried), p)
    if cfg.strategy == "witness_bank":
        return Verdict(True, None, 0, tuple(tried), p)
    nonneg = p.kind == "plain"
    best_k, best_val = 0, math.inf
    for k in range(cfg.trials):
        a = _normalise(sample_cone(g, cfg, k, nonneg))
        val = _score(a, p)
        if val < best_val:
            best_k, best_val = k, val
    factors = _sample_factors(g, cfg, best_k)
    start = _normalise(_assemble(g, factors, nonneg))
    ver = _check(start, p, tol)
    refined, _ = _local_search(g, p, factors, cfg.entry_scale, trial_rng(cfg.seed, best_k, _LOCAL))
    a = _normalise(_assemble(g, refined, nonneg))
    ver2 = _check(a, p, tol)
    if not ver2.is_psd:
        cex = Counterexample(a, ver2, f"local_search(trial={best_k})")
    elif not ver.is_psd:
        cex = Counterexample(start, ver, f"random(trial={best_k})")
    else:
        cex = None
    return Verdict(cex is None, cex, cfg.trials, tuple(tried), p)


def falsify(g: Graph, p: PowerMap, budget: int = 1000, cfg: Optional[SampleConfig] = None,
            tol: Optional[float] = None) -> Optional[Counterexample]:
    """Counterexample from the witness bank, random samples or local descent; None if none found."""
    return falsify_verdict(g, p, budget, cfg, tol).counterexample


# ---------------------------------------------------------------------------
# serialisation of verdicts


def graph_to_dict(g: Graph) -> Dict:
    return {"n": g.n, "edges": [list(e) for e in g.sorted_edges()]}


def graph_from_dict(d: Dict) -> Graph:
    return Graph.from_edges(int(d["n"]), [tuple(e) for e in d["edges"]], strict=True)


def counterexample_to_dict(c: Optional[Counterexample]):
    if c is None:
        return None
    return {
        "source": c.source,
        "matrix": format_matrix(c.matrix),
        "min_eigenvalue": c.verdict.min_eigenvalue,
        "tolerance": c.verdict.tolerance_used,
    }


def verdict_to_dict(v: Verdict, g: Graph) -> Dict:
    return {
        "graph": graph_to_dict(g),
        "power": {"kind": v.power.kind, "alpha": v.power.alpha},
        "preserved": v.preserved,
        "trials_run": v.trials_run,
        "witnesses_tried": list(v.witnesses_tried),
        "counterexample": counterexample_to_dict(v.counterexample),
    }


@dataclass(frozen=True)
class ReplayResult:
    claimed: bool
    reproduced: bool
    in_cone: bool
    powered: Optional[PsdVerdict]


def replay(d: Dict) -> ReplayResult:
    """Re-check a serialised verdict from its matrix text alone."""
    g = graph_from_dict(d["graph"])
    p = PowerMap(d["power"]["kind"], d["power"]["alpha"])
    cex = d.get("counterexample")
    if not cex:
        return ReplayResult(False, False, False, None)
    a = parse_matrix(cex["matrix"])
    if a.shape[0] != g.n:
        return ReplayResult(True, False, False, None)
    inside = in_cone(a, g)
    try:
        ver = _check(a, p, None)
    except ArgumentError:
        return ReplayResult(True, False, inside, None)
    return ReplayResult(True, inside and not ver.is_psd, inside, ver)


# ---------------------------------------------------------------------------
# probing and cross-checking


@dataclass(frozen=True)
class ProbeRow:
    alpha: float
    kind: str
    preserved: bool
    source: Optional[str]


@dataclass(frozen=True)
class ProbeReport:
    rows: Tuple[ProbeRow, ...]
    empirical_ce: Dict[str, Optional[float]]
    trials: int
    closed_form: Optional[HSetReport]
    disagreements: Tuple[str, ...]
    warnings: Tuple[str, ...]

    @property
    def consistent(self) -> bool:
        return not self.disagreements


def default_grid(g: Graph, closed: Optional[HSetReport] = None) -> List[float]:
    top = max(g.n - 2, 1)
    grid = {round(0.25 * k, 10) for k in range(1, int(round(top / 0.25)) + 1)}
    if closed is not None:
        for k in KINDS:
            h = closed.hset(k)
            if h.is_exact and math.isfinite(h.ray_start):
                for a in (h.ray_start - 0.01, h.ray_start + 0.01):
                    if a > 0:
                        grid.add(round(a, 10))
    return sorted(grid)


def _empirical_ce(alphas: List[float], ok: Dict[float, bool]) -> Optional[float]:
    """Smallest grid alpha from which every larger grid alpha is preserved."""
    ce = None
    for a in sorted(alphas, reverse=True):
        if not ok[a]:
            break
        ce = a
    return ce


def probe_hset(g: Graph, alphas: Optional[Sequence[float]] = None, cfg: SampleConfig = SampleConfig(),
               kinds: Sequence[str] = KINDS, cross_check: bool = False,
               tol: Optional[float] = None) -> ProbeReport:
    """Falsification attempts on a grid of exponents for each kind.

    The empirical CE of a kind is the smallest grid value above which
    nothing was falsified; ``"all"`` does the same over every probed kind.
    In cross-check mode a counterexample at an exponent the closed form
    certifies is a disagreement; a non-member that survives is only a warning.
    """
    closed = None
    try:
        closed = hset(g)
    except Exception:  # capacity or domain limits: probe still runs without a reference
        closed = None
    if alphas is None:
        alphas = default_grid(g, closed)
    alphas = sorted({float(a) for a in alphas})
    if not alphas:
        raise ArgumentError("grid must be nonempty")
    kinds = [PowerMap(k, 1.0).short for k in kinds]
    rows = []
    ok_all = {a: True for a in alphas}
    ce = {}
    disagreements, warnings = [], []
    for kind in kinds:
        ok = {}
        for a in alphas:
            p = PowerMap(kind, a)
            cex = falsify(g, p, cfg.trials, cfg, tol)
            ok[a] = cex is None
            ok_all[a] = ok_all[a] and ok[a]
            rows.append(ProbeRow(a, kind, ok[a], None if cex is None else cex.source))
            if cross_check and closed is not None:
                claim = closed.hset(kind).contains(a)
                if claim is True and cex is not None:
                    disagreements.append(f"{kind} alpha={a:g}: closed form says preserved, {cex.source} falsifies")
                elif claim is False and cex is None:
                    warnings.append(f"{kind} alpha={a:g}: closed form says not preserved, no counterexample found")
        ce[kind] = _empirical_ce(alphas, ok)
    ce["all"] = _empirical_ce(alphas, ok_all)
    return ProbeReport(tuple(rows), ce, cfg.trials, closed, tuple(disagreements), tuple(warnings))


@dataclass(frozen=True)
class Check:
    kind: str
    alpha: float
    expect: str  # "member" or "non-member"
    preserved: bool
    source: Optional[str]
    matrix: Optional[np.ndarray] = field(default=None, compare=False)

    @property
    def ok(self) -> bool:
        return self.preserved == (self.expect == "member")


@dataclass(frozen=True)
class CrossCheckReport:
    report: HSetReport
    checks: Tuple[Check, ...]

    @property
    def consistent(self) -> bool:
        return all(c.ok for c in self.checks)

    @property
    def failures(self) -> Tuple[Check, ...]:
        return tuple(c for c in self.checks if not c.ok)


def _member_points(h: HSet) -> List[float]:
    t = h.ray_start
    if t == -math.inf:
        return [0.5, 1.0, 2.0]
    pts = [float(k) for k in h.points_below_ray()]
    return pts + [t, t + 0.5, t + 1.25]


def _outside_points(h: HSet, exclusions=()) -> List[float]:
    out = []
    t = h.ray_start
    a = t - 0.25
    if math.isfinite(t) and a > 0 and not h.discrete.contains(a):
        out.append(a)
    out.extend(float(x) for x in exclusions)
    return out


def cross_check(g: Graph, cfg: SampleConfig = SampleConfig(trials=200),
                tol: Optional[float] = None) -> CrossCheckReport:
    """Confront the closed-form sets with the falsifier.

    Members (of the exact set, or of the inner bound) must survive; the point
    just below the ray of the exact set (or of the outer bound), and every
    recorded exclusion, must be falsified.
    """
    rep = hset(g)
    checks = []
    for kind in KINDS:
        h = rep.hset(kind)
        probes = [(a, "member") for a in _member_points(h.inner)]
        probes += [(a, "non-member") for a in _outside_points(h.outer, h.exclusions)]
        for a, expect in probes:
            cex = falsify(g, PowerMap(kind, a), cfg.trials, cfg, tol)
            checks.append(Check(kind, a, expect, cex is None,
                                None if cex is None else cex.source,
                                None if cex is None else cex.matrix))
    return CrossCheckReport(rep, tuple(checks))
