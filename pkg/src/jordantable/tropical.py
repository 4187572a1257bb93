"""Min-plus 2x2 matrices, the order matrix and the corank-of-powers profile.

Tropical sum is ``min`` and tropical product is ``+``; ``INF`` is the
additive identity and absorbs under the product.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from typing import NamedTuple, Optional, Union

import numpy as np

from .partition import StableQ

INF = math.inf

MinPlusValue = Union[int, float]  # non-negative int, or INF


def _check_value(x: MinPlusValue) -> MinPlusValue:
    if x == INF:
        return INF
    if isinstance(x, bool) or not float(x).is_integer() or x < 0:
        raise ValueError(f"min-plus entries are non-negative integers or INF, got {x!r}")
    return int(x)


@dataclass(frozen=True)
class MinPlusMatrix2:
    entries: tuple[tuple[MinPlusValue, MinPlusValue], tuple[MinPlusValue, MinPlusValue]]

    def __post_init__(self):
        rows = tuple(tuple(_check_value(x) for x in row) for row in self.entries)
        if len(rows) != 2 or any(len(row) != 2 for row in rows):
            raise ValueError("expected a 2x2 grid")
        object.__setattr__(self, "entries", rows)

    @classmethod
    def _trusted(cls, entries) -> MinPlusMatrix2:
        # products of valid matrices are valid; skip re-checking
        obj = object.__new__(cls)
        object.__setattr__(obj, "entries", entries)
        return obj

    def __getitem__(self, ij: tuple[int, int]) -> MinPlusValue:
        i, j = ij
        return self.entries[i][j]

    def __matmul__(self, other: MinPlusMatrix2) -> MinPlusMatrix2:
        return min_plus_mul(self, other)

    def __pow__(self, s: int) -> MinPlusMatrix2:
        if s < 0:
            raise ValueError("negative min-plus power")
        out, base = IDENTITY, self
        while s:
            if s & 1:
                out = out @ base
            base = base @ base
            s >>= 1
        return out


IDENTITY = MinPlusMatrix2(((0, INF), (INF, 0)))


def min_plus_mul(x: MinPlusMatrix2, y: MinPlusMatrix2) -> MinPlusMatrix2:
    (a, b), (c, d) = x.entries
    (e, f), (g, h) = y.entries
    return MinPlusMatrix2._trusted(
        ((min(a + e, b + g), min(a + f, b + h)), (min(c + e, d + g), min(c + f, d + h)))
    )


@dataclass(frozen=True, slots=True)
class OrderMatrix:
    """Orders of the module map entries: ``[[k, 0], [r, lprime]]``."""

    k: int
    lprime: int
    r: int

    def __post_init__(self):
        if not 1 <= self.k <= self.r - 1:
            raise ValueError(f"need 1 <= k <= r-1, got k={self.k}, r={self.r}")
        if not 1 <= self.lprime <= self.r - self.k:
            raise ValueError(f"need 1 <= l' <= r-k, got l'={self.lprime}")

    @classmethod
    def for_index(cls, r: int, k: int, l: int) -> OrderMatrix:
        return cls(k=k, lprime=min(l, r - k), r=r)

    @property
    def matrix(self) -> MinPlusMatrix2:
        return MinPlusMatrix2(((self.k, 0), (self.r, self.lprime)))


def tropical_power_11(t: OrderMatrix, s: int, u: int) -> int:
    """Closed form of ``(T^s)_11`` tropically summed with ``u``.

    Even s: min(sk, (s/2)r, (s-2)l' + r, u).
    Odd s: min(sk, k + hr, l' + hr, (s-2)l' + r, u) with h = (s-1)/2.
    For ``s == 1`` this is ``k`` (as ``k < r <= u``). ``u`` may also be a numpy integer
    array, in which case the result is elementwise.
    """
    k, lp, r = t.k, t.lprime, t.r
    if s < 2:
        if s == 1:
            return _cap(k, u)
        raise ValueError(f"power must be positive, got s={s}")
    # hand-rolled min: this sits on a hot path
    m = (s - 2) * lp + r
    c = ((s - 1) >> 1) * r + (k if k < lp else lp) if s & 1 else (s >> 1) * r
    if c < m:
        m = c
    c = s * k
    if c < m:
        m = c
    return _cap(m, u)


def _cap(m: int, u):
    if isinstance(u, np.ndarray):
        return np.minimum(u, m)
    return u if u < m else m


def simplified_power_11(t: OrderMatrix, s: int, u: int) -> int:
    """``min(sk, (s-2)l' + r, u)``, valid for s >= 2 once k + l' <= r.

    Like :func:`tropical_power_11`, ``u`` may be a numpy integer array.
    """
    k, lp, r = t.k, t.lprime, t.r
    if s < 2:
        raise ValueError(f"simplified form needs s >= 2, got s={s}")
    if k + lp > r:
        raise ValueError("simplified form needs k + l' <= r")
    m = (s - 2) * lp + r
    c = s * k
    if c < m:
        m = c
    return _cap(m, u)


def _check_cell(u: int, r: int, k: int, l: int) -> StableQ:
    q = StableQ(u, r)
    q.check_index(k, l)
    return q


def lines_at(u: int, r: int, k: int, l: int, s: int) -> tuple[int, int, int, int]:
    """Values of the four corank lines L1..L4 at ``s``."""
    lp = min(l, r - k)
    return ((k + l) * s, k * s + u - r, lp * s + u - 2 * lp, 2 * u - r)


def corank_at(u: int, r: int, k: int, l: int, s: int) -> int:
    _check_cell(u, r, k, l)
    if s < 1:
        raise ValueError(f"power must be positive, got s={s}")
    if s == 1:
        return k + l
    return min(lines_at(u, r, k, l, s))


@dataclass(frozen=True)
class CorankSequence:
    u: int
    r: int
    k: int
    l: int
    values: tuple[int, ...]

    def to_json(self) -> dict:
        return {"u": self.u, "r": self.r, "k": self.k, "l": self.l, "coranks": list(self.values)}

    @classmethod
    def from_json(cls, data: dict) -> CorankSequence:
        return cls(data["u"], data["r"], data["k"], data["l"], tuple(data["coranks"]))

    def differences(self) -> list[int]:
        prev, out = 0, []
        for v in self.values:
            out.append(v - prev)
            prev = v
        return out


def corank_sequence(u: int, r: int, k: int, l: int) -> CorankSequence:
    """Coranks of A, A^2, ... up to and including the first power of full corank."""
    _check_cell(u, r, k, l)
    top = 2 * u - r
    values = []
    for s in range(1, 2 * u + 1):
        values.append(corank_at(u, r, k, l, s))
        if values[-1] == top:
            break
    if values[-1] != top or len(values) > u:
        raise RuntimeError(f"corank sequence for {(u, r, k, l)} did not stabilise by s=u: {values}")
    return CorankSequence(u, r, k, l, tuple(values))


class Intersections(NamedTuple):
    x12: Fraction
    x13: Fraction
    x23: Optional[Fraction]  # None when L2 and L3 are parallel
    x24: Fraction
    x34: Fraction


def intersection_coordinates(u: int, r: int, k: int, l: int) -> Intersections:
    _check_cell(u, r, k, l)
    lp = min(l, r - k)
    return Intersections(
        x12=Fraction(u - r, l),
        x13=Fraction(u - 2 * lp, k + l - lp),
        x23=None if k == lp else Fraction(r - 2 * lp, k - lp),
        x24=Fraction(u, k),
        x34=Fraction(u - r, lp) + 2,
    )
