"""Brute-force references, independent of the package code paths they check."""

from itertools import product


def all_partitions(n, largest=None):
    if largest is None:
        largest = n
    if n == 0:
        yield ()
        return
    for first in range(min(n, largest), 0, -1):
        for rest in all_partitions(n - first, first):
            yield (first,) + rest


def conjugate_by_diagram(parts):
    cells = {(i, j) for i, p in enumerate(parts) for j in range(p)}
    flipped = {(j, i) for i, j in cells}
    rows = {}
    for i, _ in flipped:
        rows[i] = rows.get(i, 0) + 1
    return tuple(rows[i] for i in sorted(rows))


def prefix_leq(p, q):
    n = max(len(p), len(q))
    p = list(p) + [0] * (n - len(p))
    q = list(q) + [0] * (n - len(q))
    return all(sum(p[: i + 1]) <= sum(q[: i + 1]) for i in range(n))


def walk_power_11(weights, s):
    """min over closed walks 0 -> ... -> 0 of length s in the two-node graph."""
    best = float("inf")
    for mid in product((0, 1), repeat=s - 1):
        path = (0, *mid, 0)
        best = min(best, sum(weights[a][b] for a, b in zip(path, path[1:])))
    return best


def modp_rank(rows, p):
    """Rank via Gauss-Jordan over F_p (Fermat inverses)."""
    m = [list(r) for r in rows]
    rank, ncols = 0, len(m[0]) if m else 0
    for c in range(ncols):
        piv = next((i for i in range(rank, len(m)) if m[i][c] % p), None)
        if piv is None:
            continue
        m[rank], m[piv] = m[piv], m[rank]
        inv = pow(m[rank][c], p - 2, p)
        m[rank] = [x * inv % p for x in m[rank]]
        for i in range(len(m)):
            if i != rank and m[i][c] % p:
                f = m[i][c]
                m[i] = [(x - f * y) % p for x, y in zip(m[i], m[rank])]
        rank += 1
    return rank
