"""Dense symmetric matrix kernel: PSD tests, entrywise powers, splittings and witnesses.

Matrices are plain float64 ``numpy`` arrays. Functions that take vertex
indices use 1-based labels to match ``Graph``.
"""
from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Iterable, NamedTuple, Optional, Sequence

import numpy as np

from .errors import ArgumentError, DomainError, ParseError, ValidationError
from .graph import Graph

KIND_ALIASES = {"plain": "plain", "odd_psi": "odd_psi", "psi": "odd_psi",
                "even_phi": "even_phi", "phi": "even_phi"}
SHORT_KIND = {"plain": "plain", "odd_psi": "psi", "even_phi": "phi"}


def as_symmetric(m, name: str = "matrix") -> np.ndarray:
    """Validate a square finite symmetric array and return it as float64."""
    a = np.array(m, dtype=float)
    if a.ndim != 2 or a.shape[0] != a.shape[1]:
        raise ArgumentError(f"{name} must be square, got shape {a.shape}")
    if not np.all(np.isfinite(a)):
        raise ArgumentError(f"{name} has non-finite entries")
    scale = max(1.0, float(np.abs(a).max(initial=0.0)))
    if not np.allclose(a, a.T, rtol=0.0, atol=1e-12 * scale):
        raise ValidationError(f"{name} is not symmetric")
    return (a + a.T) / 2


@dataclass(frozen=True)
class PowerMap:
    """Entrywise power ``x -> x^alpha`` (plain), ``sgn(x)|x|^alpha`` (odd_psi) or ``|x|^alpha`` (even_phi).

    Zero maps to zero for every kind and every alpha.
    """

    kind: str
    alpha: float

    def __post_init__(self):
        if self.kind not in KIND_ALIASES:
            raise ArgumentError(f"unknown power kind {self.kind!r}")
        object.__setattr__(self, "kind", KIND_ALIASES[self.kind])
        a = float(self.alpha)
        if not math.isfinite(a):
            raise ArgumentError("alpha must be finite")
        object.__setattr__(self, "alpha", a)

    @property
    def short(self) -> str:
        """``plain``, ``psi`` or ``phi``."""
        return SHORT_KIND[self.kind]

    def __call__(self, x):
        x = np.asarray(x, dtype=float)
        out = np.zeros_like(x)
        nz = x != 0
        mag = np.abs(x[nz]) ** self.alpha
        if self.kind == "odd_psi":
            mag = np.sign(x[nz]) * mag
        out[nz] = mag
        return out

    def __str__(self):
        return f"{self.short}^{self.alpha:g}"


class PsdVerdict(NamedTuple):
    is_psd: bool
    min_eigenvalue: float
    tolerance_used: float
    certificate: Optional[np.ndarray]


def default_tolerance(m: np.ndarray) -> float:
    return 1e-9 * max(1.0, float(np.abs(m).max(initial=0.0)))


def is_psd(m, tol: Optional[float] = None) -> PsdVerdict:
    """PSD test by symmetric eigendecomposition (LAPACK via numpy).

    Positive semidefinite iff the smallest eigenvalue is at least ``-tol``;
    the default is ``1e-9 * max(1, max |m_ij|)``. When the test fails the
    certificate is a unit eigenvector of the smallest eigenvalue.
    """
    a = as_symmetric(m)
    if tol is None:
        tol = default_tolerance(a)
    elif tol < 0:
        raise ArgumentError("tolerance must be non-negative")
    if a.shape[0] == 0:
        return PsdVerdict(True, math.inf, float(tol), None)
    w, v = np.linalg.eigh(a)
    lam = float(w[0])
    ok = lam >= -tol
    return PsdVerdict(bool(ok), lam, float(tol), None if ok else v[:, 0].copy())


def min_eigenvalue(m: np.ndarray) -> float:
    return float(np.linalg.eigvalsh(m)[0])


def entrywise_power(m, p: PowerMap) -> np.ndarray:
    """Apply ``p`` to every entry; plain powers reject negative entries."""
    a = np.asarray(m, dtype=float)
    if p.kind == "plain":
        neg = np.argwhere(a < 0)
        if len(neg):
            i, j = (int(x) + 1 for x in neg[0])
            raise DomainError(f"plain power of negative entry ({i}, {j}) = {a[i - 1, j - 1]!r}")
    return p(a)


def pattern_graph(m) -> Graph:
    """Graph of the nonzero off-diagonal entries."""
    a = np.asarray(m)
    n = a.shape[0]
    return Graph(n, frozenset((i + 1, j + 1) for i in range(n) for j in range(i + 1, n) if a[i, j] != 0))


def pattern_violation(m, g: Graph):
    """First non-edge with a nonzero entry (1-based), or None."""
    a = np.asarray(m)
    rows, cols = np.nonzero(np.triu(a, 1))
    for i, j in zip(rows, cols):
        if not g.has_edge(int(i) + 1, int(j) + 1):
            return int(i) + 1, int(j) + 1
    return None


def in_cone(m, g: Graph, tol: Optional[float] = None) -> bool:
    """PSD with exact zeros at every non-edge of g."""
    a = as_symmetric(m)
    if a.shape[0] != g.n:
        raise ArgumentError(f"matrix is {a.shape[0]}x{a.shape[0]} but graph has {g.n} vertices")
    if pattern_violation(a, g) is not None:
        return False
    return is_psd(a, tol).is_psd


def matrix_schur_complement(m, v: int) -> np.ndarray:
    """``M / m_vv``: drop row and column v after subtracting ``m_{.v} m_{v.} / m_vv``."""
    a = as_symmetric(m)
    n = a.shape[0]
    if not 1 <= v <= n:
        raise ArgumentError(f"index {v} out of range 1..{n}")
    k = v - 1
    piv = a[k, k]
    if piv == 0:
        raise DomainError(f"zero pivot at ({v}, {v})")
    keep = [i for i in range(n) if i != k]
    col = a[keep, k]
    out = a[np.ix_(keep, keep)] - np.outer(col, col) / piv
    return (out + out.T) / 2


class Split(NamedTuple):
    m1: np.ndarray
    m2: np.ndarray
    eps_used: float


def split_decomposition(m, a: Iterable[int], c: Iterable[int], b: Iterable[int],
                        eps: float = 1e-8, graph: Optional[Graph] = None) -> Split:
    """Write ``m`` (regularised if needed) as ``m1 + m2``, ``m1`` on a|c and ``m2`` on c|b.

    ``m1 = [[M_AA, M_AC], [M_CA, M_CA M_AA^-1 M_AC]]`` and ``m2`` carries the
    Schur complement ``M_CC - M_CA M_AA^-1 M_AC`` together with the B blocks.
    When ``M_AA`` or ``M_BB`` is singular, ``m + eps*I`` is split instead and
    ``eps_used`` reports it.
    """
    from .chordal import verify_decomposition

    mm = as_symmetric(m)
    n = mm.shape[0]
    ia = sorted(int(x) - 1 for x in a)
    ic = sorted(int(x) - 1 for x in c)
    ib = sorted(int(x) - 1 for x in b)
    if sorted(ia + ib + ic) != list(range(n)):
        raise ArgumentError("a, c, b must partition 1..n")
    if graph is not None:
        chk = verify_decomposition(graph, [i + 1 for i in ia], [i + 1 for i in ic], [i + 1 for i in ib])
        if not chk.ok:
            raise DomainError(f"(a, c, b) is not a decomposition of the graph: {chk}")
    if ia and ib and np.any(mm[np.ix_(ia, ib)] != 0):
        raise DomainError("matrix couples a and b directly")

    def singular(idx):
        if not idx:
            return False
        blk = mm[np.ix_(idx, idx)]
        return np.linalg.matrix_rank(blk) < len(idx)

    eps_used = float(eps) if (singular(ia) or singular(ib)) else 0.0
    if eps_used and eps <= 0:
        raise ArgumentError("eps must be positive")
    mm = mm + eps_used * np.eye(n)
    m1 = np.zeros((n, n))
    m2 = np.zeros((n, n))
    if ia:
        maa = mm[np.ix_(ia, ia)]
        mac = mm[np.ix_(ia, ic)]
        corr = mac.T @ np.linalg.solve(maa, mac) if ic else np.zeros((0, 0))
        m1[np.ix_(ia, ia)] = maa
        if ic:
            m1[np.ix_(ia, ic)] = mac
            m1[np.ix_(ic, ia)] = mac.T
            m1[np.ix_(ic, ic)] = corr
    else:
        corr = np.zeros((len(ic), len(ic)))
    if ic:
        m2[np.ix_(ic, ic)] = mm[np.ix_(ic, ic)] - corr
    if ib:
        m2[np.ix_(ib, ib)] = mm[np.ix_(ib, ib)]
        if ic:
            m2[np.ix_(ic, ib)] = mm[np.ix_(ic, ib)]
            m2[np.ix_(ib, ic)] = mm[np.ix_(ib, ic)]
    return Split((m1 + m1.T) / 2, (m2 + m2.T) / 2, eps_used)


# ---------------------------------------------------------------------------
# witnesses


def witness_W(u, v, mid) -> np.ndarray:
    """Bordered matrix ``[[1, u^T, 0], [u, mid, v], [0, v^T, 1]]``."""
    u = np.asarray(u, dtype=float).ravel()
    v = np.asarray(v, dtype=float).ravel()
    mid = np.asarray(mid, dtype=float)
    k = len(u)
    if len(v) != k or mid.shape != (k, k):
        raise ArgumentError("witness_W needs u, v of length m and an m x m middle block")
    w = np.zeros((k + 2, k + 2))
    w[0, 0] = w[-1, -1] = 1.0
    w[0, 1:-1] = w[1:-1, 0] = u
    w[-1, 1:-1] = w[1:-1, -1] = v
    w[1:-1, 1:-1] = mid
    return w


def witness_path3(a: float) -> np.ndarray:
    """``[[1, a, 0], [a, 1, b], [0, b, 1]]`` with ``b = sqrt(1 - a^2)``: PSD and singular."""
    if not 0.0 <= a <= 1.0:
        raise ArgumentError("witness_path3 needs a in [0, 1]")
    b = math.sqrt(1.0 - a * a)
    return np.array([[1.0, a, 0.0], [a, 1.0, b], [0.0, b, 1.0]])


def witness_cosine(n: int) -> np.ndarray:
    """``(cos((j - k) pi / n))_{j,k}``; entries with ``|j - k| = n/2`` are exactly 0."""
    if n < 4 or n % 2:
        raise ArgumentError("witness_cosine needs an even dimension n >= 4")
    idx = np.arange(n)
    d = idx[:, None] - idx[None, :]
    out = np.cos(d * np.pi / n)
    out[np.abs(d) == n // 2] = 0.0
    return out


def witness_signed_cycle(length: int) -> np.ndarray:
    """Cycle pattern ``I + t S`` where S is the cycle adjacency with one edge negated.

    Length must be even. With ``t = 1 / (2 cos(pi / length))`` the matrix is
    PSD and singular, while its entrywise absolute value has smallest
    eigenvalue ``1 - 2t < 0``.
    """
    if length < 4 or length % 2:
        raise ArgumentError("signed cycle needs an even length >= 4")
    t = 1.0 / (2.0 * math.cos(math.pi / length))
    s = np.zeros((length, length))
    for i in range(length):
        j = (i + 1) % length
        s[i, j] = s[j, i] = 1.0
    s[0, length - 1] = s[length - 1, 0] = -1.0
    return np.eye(length) + t * s


def embed(block, positions: Sequence[int], n: int) -> np.ndarray:
    """Place ``block`` at 1-based rows/columns ``positions`` of an n x n zero matrix."""
    out = np.zeros((n, n))
    idx = [p - 1 for p in positions]
    out[np.ix_(idx, idx)] = block
    return out


def superadditivity_gap_matrix(p: PowerMap, u, v) -> np.ndarray:
    """``f[uu^T + vv^T] - f[uu^T] - f[vv^T]``."""
    u = np.asarray(u, dtype=float).ravel()
    v = np.asarray(v, dtype=float).ravel()
    if u.shape != v.shape:
        raise ArgumentError("u and v must have the same length")
    if p.kind == "plain" and (np.any(u < 0) or np.any(v < 0)):
        raise DomainError("plain powers need nonnegative u and v")
    uu, vv = np.outer(u, u), np.outer(v, v)
    return p(uu + vv) - p(uu) - p(vv)


def superadditivity_gap(p: PowerMap, u, v, tol: Optional[float] = None) -> PsdVerdict:
    """PSD verdict on the Loewner gap; a failure certifies alpha outside the super-additive set."""
    return is_psd(superadditivity_gap_matrix(p, u, v), tol)


def diagonal_conjugate(m, d) -> np.ndarray:
    """``D m D`` for ``D = diag(d)`` with positive d."""
    a = as_symmetric(m)
    d = np.asarray(d, dtype=float).ravel()
    if d.shape[0] != a.shape[0]:
        raise ArgumentError("scale vector length must match the matrix")
    if np.any(d <= 0):
        raise ArgumentError("scale vector must be strictly positive")
    return d[:, None] * a * d[None, :]


def to_correlation(m):
    """Return ``(C, d)`` with unit-diagonal C and ``m = diag(d) C diag(d)``."""
    a = as_symmetric(m)
    diag = np.diag(a)
    if np.any(diag <= 0):
        raise DomainError("to_correlation needs a strictly positive diagonal")
    d = np.sqrt(diag)
    c = a / d[:, None] / d[None, :]
    np.fill_diagonal(c, 1.0)
    return c, d


# ---------------------------------------------------------------------------
# text format


def format_matrix(m) -> str:
    a = np.asarray(m, dtype=float)
    rows = [" ".join(format(float(x), ".17g") for x in row) for row in a]
    return "\n".join([str(a.shape[0])] + rows) + "\n"


def parse_matrix(text: str) -> np.ndarray:
    """Read ``n`` then n rows of n numbers; checks symmetry to 1e-12 and averages."""
    lines = [ln for ln in text.splitlines() if ln.strip()]
    if not lines:
        raise ParseError("empty matrix text")
    try:
        n = int(lines[0].strip())
    except ValueError:
        raise ParseError("first line must be the dimension", 1) from None
    if n < 0:
        raise ParseError("dimension must be non-negative", 1)
    if len(lines) != n + 1:
        raise ParseError(f"expected {n} rows, found {len(lines) - 1}")
    rows = []
    for k, ln in enumerate(lines[1:], start=2):
        try:
            vals = [float(x) for x in ln.split()]
        except ValueError:
            raise ParseError("non-numeric entry", k) from None
        if len(vals) != n:
            raise ParseError(f"expected {n} entries, found {len(vals)}", k)
        rows.append(vals)
    a = np.array(rows, dtype=float).reshape(n, n)
    if not np.all(np.isfinite(a)):
        raise ParseError("non-finite entry")
    if np.any(np.abs(a - a.T) > 1e-12 * max(1.0, float(np.abs(a).max(initial=0.0)))):
        raise ValidationError("matrix is not symmetric to 1e-12")
    return (a + a.T) / 2


def read_matrix(path) -> np.ndarray:
    with open(path, encoding="utf-8") as fh:
        return parse_matrix(fh.read())


def write_matrix(m, path):
    with open(path, "w", encoding="utf-8") as fh:
        fh.write(format_matrix(m))
