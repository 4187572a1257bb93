"""Exact linear algebra over F_p: module maps as matrices, ranks of powers,
Jordan types, and a Monte Carlo estimate of the generic commuting type.

All matrices act on column vectors. A cyclic block of size n has basis
1, t, ..., t^(n-1) and t acts as the lower shift.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence

from .equations import MERSENNE61, ParamAssignment, make_rng
from .partition import Partition, StableQ, conjugate, dominance_max


@dataclass(frozen=True, eq=True)
class ModMatrix:
    p: int
    rows: tuple[tuple[int, ...], ...]

    def __post_init__(self):
        p = self.p
        rows = tuple(tuple(int(x) % p for x in row) for row in self.rows)
        if any(len(row) != len(rows) for row in rows):
            raise ValueError("ModMatrix must be square")
        object.__setattr__(self, "rows", rows)

    @property
    def n(self) -> int:
        return len(self.rows)

    @classmethod
    def zeros(cls, n: int, p: int) -> ModMatrix:
        return cls(p, tuple((0,) * n for _ in range(n)))

    @classmethod
    def identity(cls, n: int, p: int) -> ModMatrix:
        return cls(p, tuple(tuple(int(i == j) for j in range(n)) for i in range(n)))

    def __matmul__(self, other: ModMatrix) -> ModMatrix:
        return ModMatrix(self.p, _matmul(self.rows, other.rows, self.p))

    def is_zero(self) -> bool:
        return not any(any(row) for row in self.rows)

    def to_tsv(self) -> str:
        return "".join("\t".join(map(str, row)) + "\n" for row in self.rows)


def _matmul(a, b, p):
    cols = list(zip(*b))
    return tuple(
        tuple(sum(x * y for x, y in zip(row, col)) % p if any(row) else 0 for col in cols)
        for row in a
    )


def rank(m: ModMatrix) -> int:
    """Rank over F_p by Gaussian elimination."""
    p = m.p
    rows = [list(row) for row in m.rows if any(row)]
    ncols = m.n
    rk = 0
    for c in range(ncols):
        pivot = next((i for i in range(rk, len(rows)) if rows[i][c]), None)
        if pivot is None:
            continue
        rows[rk], rows[pivot] = rows[pivot], rows[rk]
        prow = rows[rk]
        inv = pow(prow[c], -1, p)
        for i in range(rk + 1, len(rows)):
            row = rows[i]
            if row[c]:
                f = row[c] * inv % p
                rows[i] = row[:c] + [(x - f * y) % p for x, y in zip(row[c:], prow[c:])]
        rk += 1
        if rk == len(rows):
            break
    return rk


def is_nilpotent(m: ModMatrix) -> bool:
    """M^(2^j) == 0 for the first 2^j >= n."""
    power, e = m.rows, 1
    while e < m.n:
        power = _matmul(power, power, m.p)
        e *= 2
    return not any(any(row) for row in power)


def corank_profile(m: ModMatrix) -> list[int]:
    """Coranks of M, M^2, ... up to the first zero power.

    Raises ValueError when the coranks stall below n, i.e. M is not nilpotent.
    """
    n, p = m.n, m.p
    if n == 0:
        return []
    out = []
    power = m.rows
    for _ in range(n):
        out.append(n - rank(ModMatrix(p, power)))
        if out[-1] == n:
            return out
        if len(out) > 1 and out[-1] == out[-2]:
            break
        power = _matmul(power, m.rows, p)
    raise ValueError("matrix is not nilpotent")


def type_from_coranks(profile: Sequence[int]) -> Partition:
    """Conjugate of the first differences of corank(M^s), s = 1, 2, ..."""
    diffs = [b - a for a, b in zip([0, *profile], profile)]
    return conjugate(Partition(diffs))


def jordan_type_of(m: ModMatrix) -> Partition:
    return type_from_coranks(corank_profile(m))


def block_operator(sizes: Sequence[int], maps: Sequence[Sequence[Sequence[int]]], p: int) -> ModMatrix:
    """Matrix of the F_p[t]-linear map on the direct sum of cyclic blocks.

    ``maps[i][j]`` is the coefficient list of the series that block j's
    generator is sent to in block i. It must have order at least
    ``sizes[i] - sizes[j]`` for the map to be well defined.
    """
    offsets = [sum(sizes[:i]) for i in range(len(sizes))]
    n = sum(sizes)
    grid = [[0] * n for _ in range(n)]
    for i, ni in enumerate(sizes):
        for j, nj in enumerate(sizes):
            f = list(maps[i][j])[:ni]
            low = next((d for d, c in enumerate(f) if c % p), None)
            if low is not None and low < ni - nj:
                raise ValueError(f"map from block {j} to block {i} is not well defined")
            for m in range(nj):
                for d, c in enumerate(f[: max(0, ni - m)]):
                    if c:
                        grid[offsets[i] + m + d][offsets[j] + m] = c
    return ModMatrix(p, tuple(tuple(row) for row in grid))


@dataclass(frozen=True)
class ModuleMap:
    """(x, y) -> (a x + h t^r y, g x + b y) on F_p[t]/t^u + F_p[t]/t^(u-r)."""

    q: StableQ
    p: int
    a: tuple[int, ...]
    b: tuple[int, ...]
    g: tuple[int, ...]
    h: tuple[int, ...]

    def __post_init__(self):
        if self.a and self.a[0] % self.p or self.b and self.b[0] % self.p:
            raise ValueError("a and b need zero constant term")

    @classmethod
    def from_assignment(cls, asn: ParamAssignment) -> ModuleMap:
        return cls(
            asn.q,
            asn.p,
            tuple(asn.series("a")),
            tuple(asn.series("b")),
            tuple(asn.series("g")),
            tuple(asn.series("h")),
        )

    def matrix(self) -> ModMatrix:
        u, r = self.q.u, self.q.r
        ht_r = (0,) * r + self.h
        return block_operator((u, u - r), ((self.a, ht_r), (self.g, self.b)), self.p)


def build_matrix(asn: ParamAssignment, q: StableQ | None = None) -> ModMatrix:
    if q is not None and q != asn.q:
        raise ValueError("assignment belongs to a different Q")
    if not asn.is_complete():
        raise ValueError("assignment is missing variables")
    return ModuleMap.from_assignment(asn).matrix()


def jordan_matrix(part: Partition, p: int = MERSENNE61) -> ModMatrix:
    if not part.parts:
        raise ValueError("empty partition")
    sizes = part.parts
    shift = [0, 1]
    maps = [[shift if i == j else [] for j in range(len(sizes))] for i in range(len(sizes))]
    return block_operator(sizes, maps, p)


def commutant_sample(part: Partition, seed: int = 0, p: int = MERSENNE61) -> ModMatrix:
    """A random nilpotent matrix commuting with ``jordan_matrix(part)``.

    Between equal-size blocks the constant terms form a strictly upper
    triangular matrix; every other coefficient is uniform.
    """
    if not part.parts:
        raise ValueError("empty partition")
    sizes = part.parts
    rng = make_rng(seed, *sizes)
    maps = []
    for i, ni in enumerate(sizes):
        row = []
        for j, nj in enumerate(sizes):
            free = [int(x) for x in rng.integers(0, p, size=min(ni, nj))]
            if ni == nj and i >= j:
                free[0] = 0
            row.append([0] * max(0, ni - nj) + free)
        maps.append(row)
    m = block_operator(sizes, maps, p)
    jm = jordan_matrix(part, p)
    if m @ jm != jm @ m:
        raise AssertionError("commutant sample does not commute")
    if not is_nilpotent(m):
        raise AssertionError("commutant sample is not nilpotent")
    return m


def d_oracle(part: Partition, trials: int = 5, seed: int = 0, p: int = MERSENNE61) -> Partition:
    """Dominance-maximum Jordan type over ``trials`` commutant samples."""
    if trials < 1:
        raise ValueError("need at least one trial")
    return dominance_max(
        jordan_type_of(commutant_sample(part, seed=seed * 1_000_003 + i, p=p)) for i in range(trials)
    )
