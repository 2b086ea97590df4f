"""Journal scoring: counting rates and spectral fixed points.

The spectral methods work on the column-stochastic citation matrix of a
`JournalGraph`: column j distributes journal j's outgoing citation weight
as probabilities. `invariant_scores` finds the dominant eigenvector of
that matrix by power iteration (undamped; requires strong connectivity),
`pagerank` the damped variant with uniform teleport, and `citation_rate`
is plain incoming-citations-per-article counting.
"""

from __future__ import annotations

import enum
from collections.abc import Mapping
from dataclasses import dataclass, field
from typing import Iterator, Sequence

import numpy as np

from . import _kernels
from .errors import (
    DanglingJournal,
    EmptyJournal,
    NotConverged,
    NotStronglyConnected,
    UnknownJournal,
)
from .graph import CitationGraph, JournalGraph, SelfLoopPolicy

DEFAULT_TOL = 1e-12
DEFAULT_MAX_ITER = 100_000
DEFAULT_DAMPING = 0.85

# Matrices this small keep a cached dense copy; BLAS matvec beats the
# sparse kernel there and the memory cost is negligible.
_DENSE_MATVEC_MAX = 64


class DanglingPolicy(enum.Enum):
    """How to normalize a column whose journal has zero out-weight."""

    UNIFORM = "uniform"
    ERROR = "error"


class StochasticMatrix:
    """Sparse column-stochastic matrix over a fixed journal order."""

    __slots__ = ("order", "n", "_rows", "_cols", "_vals", "_dense")

    def __init__(self, order: Sequence[str], rows, cols, vals):
        self.order = tuple(order)
        self.n = len(self.order)
        self._rows = np.ascontiguousarray(rows, dtype=np.int64)
        self._cols = np.ascontiguousarray(cols, dtype=np.int64)
        self._vals = np.ascontiguousarray(vals, dtype=np.float64)
        for arr in (self._rows, self._cols, self._vals):
            arr.setflags(write=False)
        self._dense = None

    @property
    def nnz(self) -> int:
        return int(self._vals.size)

    def entries(self) -> Iterator[tuple[int, int, float]]:
        """(row, col, probability) triples sorted by (col, row)."""
        for r, c, v in zip(self._rows, self._cols, self._vals):
            yield int(r), int(c), float(v)

    def column(self, journal: str) -> dict[str, float]:
        """One column as a target-journal -> probability map."""
        try:
            j = self.order.index(journal)
        except ValueError:
            raise UnknownJournal(journal) from None
        sel = self._cols == j
        return {
            self.order[int(r)]: float(v)
            for r, v in zip(self._rows[sel], self._vals[sel])
        }

    def matvec(self, v: np.ndarray) -> np.ndarray:
        if self.n <= _DENSE_MATVEC_MAX:
            return self.dense() @ v
        return _kernels.matvec(self.n, self._rows, self._cols, self._vals, v)

    def dense(self) -> np.ndarray:
        if self._dense is None:
            m = np.zeros((self.n, self.n))
            np.add.at(m, (self._rows, self._cols), self._vals)
            m.setflags(write=False)
            self._dense = m
        return self._dense

    def column_sums(self) -> np.ndarray:
        return np.bincount(self._cols, weights=self._vals, minlength=self.n)

    def validate(self, tol: float = 1e-12) -> None:
        """Check entries lie in (0, 1] and columns sum to 1 within `tol`."""
        if self._vals.size and (self._vals <= 0).any() or (self._vals > 1).any():
            raise ValueError("matrix entries must lie in (0, 1]")
        sums = self.column_sums()
        worst = np.abs(sums - 1.0).max() if self.n else 0.0
        if worst > tol:
            raise ValueError(f"column sums deviate from 1 by {worst:.3e}")


def normalize_columns(
    jg: JournalGraph, dangling: DanglingPolicy = DanglingPolicy.ERROR
) -> StochasticMatrix:
    """Column-normalize a journal graph's weights into citing probabilities.

    Column j holds weight(j, t) / out_weight(j). A journal with zero
    out-weight either fails (DanglingPolicy.ERROR) or becomes the uniform
    column 1/n over all journals (UNIFORM).
    """
    n = jg.n_journals
    if n == 0:
        raise ValueError("cannot normalize an empty journal graph")
    src, dst, w = jg._src, jg._dst, jg._w
    out = jg._out
    dangling_idx = np.flatnonzero(out == 0)
    if dangling_idx.size and dangling is DanglingPolicy.ERROR:
        raise DanglingJournal(jg.journals[i] for i in dangling_idx)
    cols = src
    rows = dst
    vals = w / out[src] if w.size else np.empty(0, np.float64)
    if dangling_idx.size:
        uni_cols = np.repeat(dangling_idx, n)
        uni_rows = np.tile(np.arange(n, dtype=np.int64), dangling_idx.size)
        uni_vals = np.full(uni_cols.size, 1.0 / n)
        cols = np.concatenate([cols, uni_cols])
        rows = np.concatenate([rows, uni_rows])
        vals = np.concatenate([vals, uni_vals])
    order = np.lexsort((rows, cols))
    return StochasticMatrix(jg.journals, rows[order], cols[order], vals[order])


class ScoreVector(Mapping):
    """Nonnegative per-journal scores normalized to sum 1."""

    __slots__ = ("order", "_values")

    normalization = "sum-to-one"

    def __init__(self, order: Sequence[str], values):
        self.order = tuple(order)
        vals = np.ascontiguousarray(values, dtype=np.float64)
        if vals.shape != (len(self.order),):
            raise ValueError("scores and journal order differ in length")
        if vals.size:
            if (vals < 0).any():
                raise ValueError("scores must be nonnegative")
            if abs(vals.sum() - 1.0) > 1e-9:
                raise ValueError(f"scores must sum to 1, got {vals.sum()!r}")
        vals.setflags(write=False)
        self._values = vals

    @property
    def values_array(self) -> np.ndarray:
        return self._values

    def as_dict(self) -> dict[str, float]:
        return {j: float(v) for j, v in zip(self.order, self._values)}

    def __getitem__(self, journal: str) -> float:
        try:
            return float(self._values[self.order.index(journal)])
        except ValueError:
            raise KeyError(journal) from None

    def __iter__(self):
        return iter(self.order)

    def __len__(self) -> int:
        return len(self.order)

    def __repr__(self) -> str:
        return f"ScoreVector({self.as_dict()!r})"


@dataclass(frozen=True)
class ConvergenceDiagnostics:
    iterations: int
    residual_l1: float
    converged: bool


@dataclass(frozen=True)
class RankReport:
    """Rank-ordered scores plus how they were computed."""

    method: str
    entries: list[tuple[str, float]]
    diagnostics: ConvergenceDiagnostics | None = None
    params: dict = field(default_factory=dict)


def power_iteration(
    m: StochasticMatrix,
    tol: float = DEFAULT_TOL,
    max_iter: int = DEFAULT_MAX_ITER,
) -> tuple[ScoreVector, ConvergenceDiagnostics]:
    """Dominant eigenvector of a column-stochastic matrix.

    Starts from the uniform vector and applies the lazy operator
    (M + I) / 2, which shares M's fixed points but cannot oscillate on
    periodic chains. Convergence is always judged against M itself:
    the returned vector satisfies ||M v - v||_1 <= tol.

    Raises NotConverged (carrying the last iterate and diagnostics) after
    `max_iter` lazy updates.
    """
    if tol <= 0:
        raise ValueError(f"tolerance must be positive, got {tol}")
    if max_iter < 1:
        raise ValueError(f"max_iter must be >= 1, got {max_iter}")
    n = m.n
    v = np.full(n, 1.0 / n)
    for iterations in range(max_iter + 1):
        w = m.matvec(v)
        residual = float(np.abs(w - v).sum())
        if residual <= tol:
            return (
                ScoreVector(m.order, v),
                ConvergenceDiagnostics(iterations, residual, True),
            )
        if iterations == max_iter:
            break
        v = 0.5 * (w + v)
        v /= v.sum()
    diag = ConvergenceDiagnostics(max_iter, residual, False)
    raise NotConverged(ScoreVector(m.order, v), diag)


def strongly_connected_components(jg: JournalGraph) -> tuple[tuple[str, ...], ...]:
    """SCCs of the journal graph (self-loops ignored), deterministic order.

    Iterative Tarjan; each component is sorted and components are ordered
    by their smallest journal.
    """
    n = jg.n_journals
    adj: list[list[int]] = [[] for _ in range(n)]
    for s, t in zip(jg._src, jg._dst):
        if s != t:
            adj[s].append(int(t))
    index = [-1] * n
    low = [0] * n
    on_stack = [False] * n
    stack: list[int] = []
    counter = 0
    components: list[list[int]] = []
    for root in range(n):
        if index[root] != -1:
            continue
        work = [(root, 0)]
        while work:
            v, ei = work.pop()
            if ei == 0:
                index[v] = low[v] = counter
                counter += 1
                stack.append(v)
                on_stack[v] = True
            descended = False
            while ei < len(adj[v]):
                w = adj[v][ei]
                ei += 1
                if index[w] == -1:
                    work.append((v, ei))
                    work.append((w, 0))
                    descended = True
                    break
                if on_stack[w]:
                    low[v] = min(low[v], index[w])
            if descended:
                continue
            if low[v] == index[v]:
                comp = []
                while True:
                    w = stack.pop()
                    on_stack[w] = False
                    comp.append(w)
                    if w == v:
                        break
                components.append(comp)
            if work:
                parent = work[-1][0]
                low[parent] = min(low[parent], low[v])
    named = sorted(
        tuple(sorted(jg.journals[i] for i in comp)) for comp in components
    )
    return tuple(named)


def invariant_scores(
    jg: JournalGraph,
    tol: float = DEFAULT_TOL,
    max_iter: int = DEFAULT_MAX_ITER,
) -> tuple[ScoreVector, ConvergenceDiagnostics]:
    """Spectral journal scores: stationary vector of the citation matrix.

    Self-loops are dropped before normalization; the remaining graph must
    be strongly connected (NotStronglyConnected lists the components
    otherwise). Dangling journals are an error here; use `pagerank` for
    graphs without these guarantees.
    """
    dropped = jg.without_self_loops()
    components = strongly_connected_components(dropped)
    if len(components) > 1:
        raise NotStronglyConnected(components)
    m = normalize_columns(dropped, DanglingPolicy.ERROR)
    return power_iteration(m, tol, max_iter)


def pagerank(
    jg: JournalGraph,
    damping: float = DEFAULT_DAMPING,
    tol: float = DEFAULT_TOL,
    max_iter: int = DEFAULT_MAX_ITER,
) -> tuple[ScoreVector, ConvergenceDiagnostics]:
    """Damped spectral scores: fixed point of v = d M v + (1 - d) u.

    M column-normalizes the journal graph with the uniform fallback for
    dangling journals and u is the uniform vector, so any journal graph
    with at least one journal is accepted. Plain iteration suffices: the
    damped operator is an L1 contraction with factor `damping`.
    """
    if not 0.0 < damping < 1.0:
        raise ValueError(f"damping must be in (0, 1), got {damping}")
    if tol <= 0:
        raise ValueError(f"tolerance must be positive, got {tol}")
    if max_iter < 1:
        raise ValueError(f"max_iter must be >= 1, got {max_iter}")
    m = normalize_columns(jg, DanglingPolicy.UNIFORM)
    n = m.n
    teleport = (1.0 - damping) / n
    v = np.full(n, 1.0 / n)
    for iterations in range(max_iter + 1):
        w = damping * m.matvec(v) + teleport
        residual = float(np.abs(w - v).sum())
        if residual <= tol:
            return (
                ScoreVector(m.order, v),
                ConvergenceDiagnostics(iterations, residual, True),
            )
        if iterations == max_iter:
            break
        v = w / w.sum()
    diag = ConvergenceDiagnostics(max_iter, residual, False)
    raise NotConverged(ScoreVector(m.order, v), diag)


def citation_rate(g: CitationGraph, include_intra: bool = False) -> dict[str, float]:
    """Incoming citations per article for every journal of `g`.

    Intra-journal citations count only when `include_intra` is set. Every
    journal must have at least one article (EmptyJournal otherwise).
    """
    jg = g.aggregate(SelfLoopPolicy.KEEP)
    rates: dict[str, float] = {}
    for j in jg.journals:
        count = jg.article_count[j]
        if count == 0:
            raise EmptyJournal(j)
        incoming = jg.in_weight(j)
        if not include_intra:
            incoming -= jg.weight(j, j)
        rates[j] = incoming / count
    return rates


def per_article_scores(journal_scores: ScoreVector, jg: JournalGraph) -> dict[str, float]:
    """Divide each journal's score by its article count; no renormalization.

    A journal with a nonzero score and zero articles raises EmptyJournal;
    zero-score zero-article journals get 0.0.
    """
    result: dict[str, float] = {}
    for j in journal_scores.order:
        score = journal_scores[j]
        try:
            count = jg.article_count[j]
        except KeyError:
            raise UnknownJournal(j) from None
        if count == 0:
            if score > 0:
                raise EmptyJournal(j)
            result[j] = 0.0
        else:
            result[j] = score / count
    return result


def rank_order(scores) -> list[tuple[str, float]]:
    """Descending by score, ties broken ascending by journal identifier."""
    if isinstance(scores, ScoreVector):
        items = scores.as_dict().items()
    else:
        items = scores.items()
    return sorted(items, key=lambda kv: (-kv[1], kv[0]))
