"""Independent dense linear-algebra oracle used to validate the iterative
ranking methods.

Everything here is deliberate plain-Python Gaussian elimination on small
dense systems: no numpy.linalg, no code shared with the library's power
iteration, so the two routes stay independent.
"""

from __future__ import annotations


def solve_dense(a: list[list[float]], b: list[float]) -> list[float]:
    """Solve a @ x = b by Gaussian elimination with partial pivoting."""
    n = len(a)
    m = [row[:] + [rhs] for row, rhs in zip(a, b)]
    for col in range(n):
        pivot = max(range(col, n), key=lambda r: abs(m[r][col]))
        if abs(m[pivot][col]) < 1e-300:
            raise ValueError("singular system")
        m[col], m[pivot] = m[pivot], m[col]
        inv = 1.0 / m[col][col]
        for r in range(col + 1, n):
            factor = m[r][col] * inv
            if factor == 0.0:
                continue
            for c in range(col, n + 1):
                m[r][c] -= factor * m[col][c]
    x = [0.0] * n
    for r in range(n - 1, -1, -1):
        acc = m[r][n]
        for c in range(r + 1, n):
            acc -= m[r][c] * x[c]
        x[r] = acc / m[r][r]
    return x


def column_stochastic(journals, weighted_edges):
    """Dense column-stochastic matrix from (source, target, weight) triples.

    Column j holds weight(j, t) / out_weight(j); every journal must have
    positive out-weight (no dangling handling here on purpose).
    """
    order = sorted(journals)
    idx = {j: i for i, j in enumerate(order)}
    n = len(order)
    out = [0.0] * n
    m = [[0.0] * n for _ in range(n)]
    for s, t, w in weighted_edges:
        out[idx[s]] += w
    for s, t, w in weighted_edges:
        m[idx[t]][idx[s]] += w / out[idx[s]]
    if any(o == 0 for o in out):
        raise ValueError("dangling journal in oracle input")
    return order, m


def stationary_scores(journals, weighted_edges):
    """Fixed point of M v = v with sum(v) = 1, via dense elimination.

    Builds (M - I) with its last row replaced by all-ones (the sum
    constraint) and solves against e_n.
    """
    order, m = column_stochastic(journals, weighted_edges)
    n = len(order)
    a = [[m[r][c] - (1.0 if r == c else 0.0) for c in range(n)] for r in range(n)]
    a[n - 1] = [1.0] * n
    b = [0.0] * (n - 1) + [1.0]
    x = solve_dense(a, b)
    return dict(zip(order, x))


def damped_scores(journals, weighted_edges, damping, dangling_uniform=True):
    """Fixed point of v = d M v + (1 - d) u via dense elimination.

    Dangling columns (zero out-weight) are replaced by the uniform
    distribution when `dangling_uniform` is set.
    """
    order = sorted(journals)
    idx = {j: i for i, j in enumerate(order)}
    n = len(order)
    out = [0.0] * n
    for s, t, w in weighted_edges:
        out[idx[s]] += w
    m = [[0.0] * n for _ in range(n)]
    for s, t, w in weighted_edges:
        m[idx[t]][idx[s]] += w / out[idx[s]]
    if dangling_uniform:
        for c in range(n):
            if out[c] == 0:
                for r in range(n):
                    m[r][c] = 1.0 / n
    a = [[(1.0 if r == c else 0.0) - damping * m[r][c] for c in range(n)] for r in range(n)]
    b = [(1.0 - damping) / n] * n
    x = solve_dense(a, b)
    return dict(zip(order, x))
