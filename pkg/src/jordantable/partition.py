"""Integer partitions: conjugation, dominance, almost rectangular blocks and
the two-cluster (a, b) decomposition with its type A/B/C predicates."""

from __future__ import annotations

import enum
from collections import Counter
from dataclasses import dataclass, field
from typing import Iterable, Optional


@dataclass(frozen=True, order=False)
class Partition:
    """A weakly decreasing tuple of positive integers."""

    parts: tuple[int, ...]
    weight: int = field(init=False, compare=False, repr=False)

    def __init__(self, parts: Iterable[int] = ()):
        parts = tuple(int(x) for x in parts)
        if any(x < 1 for x in parts):
            raise ValueError(f"partition parts must be positive: {parts}")
        if any(parts[i] < parts[i + 1] for i in range(len(parts) - 1)):
            raise ValueError(f"partition parts must be weakly decreasing: {parts}")
        object.__setattr__(self, "parts", parts)
        object.__setattr__(self, "weight", sum(parts))

    @classmethod
    def from_unsorted(cls, parts: Iterable[int]) -> Partition:
        return cls(sorted(parts, reverse=True))

    @classmethod
    def parse(cls, text: str) -> Partition:
        """Parse the textual form ``"(5,3,2)"``; ``"()"`` is the empty partition."""
        body = text.strip()
        if not (body.startswith("(") and body.endswith(")")):
            raise ValueError(f"expected a parenthesised partition, got {text!r}")
        body = body[1:-1].strip()
        return cls(int(x) for x in body.split(",")) if body else cls()

    def __iter__(self):
        return iter(self.parts)

    def __len__(self) -> int:
        return len(self.parts)

    def __getitem__(self, i):
        return self.parts[i]

    def __str__(self) -> str:
        return "(" + ",".join(map(str, self.parts)) + ")"

    def multiplicity(self, part: int) -> int:
        return self.parts.count(part)

    def to_json(self) -> list[int]:
        return list(self.parts)


@dataclass(frozen=True)
class StableQ:
    """The two-part stable partition Q = (u, u - r) with u > r >= 2."""

    u: int
    r: int

    def __post_init__(self):
        if not (isinstance(self.u, int) and isinstance(self.r, int)):
            raise TypeError("u and r must be integers")
        if self.r < 2:
            raise ValueError(f"need r >= 2, got r={self.r}")
        if self.u <= self.r:
            raise ValueError(f"need u > r, got u={self.u}, r={self.r}")

    @property
    def second_part(self) -> int:
        return self.u - self.r

    @property
    def partition(self) -> Partition:
        return Partition((self.u, self.u - self.r))

    @property
    def dim(self) -> int:
        return 2 * self.u - self.r

    def check_index(self, k: int, l: int) -> None:
        if not 1 <= k <= self.r - 1:
            raise ValueError(f"k={k} outside 1..{self.r - 1} for Q={self.partition}")
        if not 1 <= l <= self.u - self.r:
            raise ValueError(f"l={l} outside 1..{self.u - self.r} for Q={self.partition}")

    def indices(self):
        """All table indices (k, l), row-major in k."""
        for k in range(1, self.r):
            for l in range(1, self.u - self.r + 1):
                yield k, l


@dataclass(frozen=True)
class AbForm:
    """P = (a^n_a, (a-1)^n_a1, b^n_b, (b-1)^n_b1) with a - b >= 2."""

    a: int
    n_a: int
    n_a1: int
    b: int
    n_b: int
    n_b1: int

    def reassemble(self) -> Partition:
        return Partition(
            [self.a] * self.n_a
            + [self.a - 1] * self.n_a1
            + [self.b] * self.n_b
            + [self.b - 1] * self.n_b1
        )


class Dominance(enum.Enum):
    LEQ = "less-or-equal"
    GREATER = "greater"
    INCOMPARABLE = "incomparable"


def conjugate(p: Partition) -> Partition:
    parts = p.parts
    if not parts:
        return Partition()
    return Partition(sum(1 for x in parts if x > j) for j in range(parts[0]))


def _prefix_sums(parts: tuple[int, ...], length: int) -> list[int]:
    out, acc = [], 0
    for i in range(length):
        acc += parts[i] if i < len(parts) else 0
        out.append(acc)
    return out


def dominance_leq(p: Partition, q: Partition) -> Dominance:
    """Compare two partitions of equal weight in the dominance order.

    ``LEQ`` means ``p <= q`` (including equality); ``GREATER`` means
    ``q < p`` strictly.
    """
    if p.weight != q.weight:
        raise ValueError(f"dominance needs equal weights: {p} has {p.weight}, {q} has {q.weight}")
    n = max(len(p), len(q))
    ps, qs = _prefix_sums(p.parts, n), _prefix_sums(q.parts, n)
    if all(x <= y for x, y in zip(ps, qs)):
        return Dominance.LEQ
    if all(x >= y for x, y in zip(ps, qs)):
        return Dominance.GREATER
    return Dominance.INCOMPARABLE


def dominance_max(partitions: Iterable[Partition]) -> Partition:
    """The element dominating all others; RuntimeError if there is none."""
    found = set(partitions)
    for cand in found:
        if all(dominance_leq(other, cand) is Dominance.LEQ for other in found):
            return cand
    raise RuntimeError(f"no dominance maximum among {sorted(map(str, found))}")


def almost_rectangular(m: int, k: int) -> Partition:
    """The unique partition of ``m`` into ``k`` parts differing by at most one."""
    if k < 1 or m < 1:
        raise ValueError(f"need positive m and k, got m={m}, k={k}")
    if k > m:
        raise ValueError(f"cannot split {m} into {k} positive parts")
    q, e = divmod(m, k)
    return Partition([q + 1] * e + [q] * (k - e))


def is_almost_rectangular(p: Partition) -> bool:
    return bool(p.parts) and p.parts[0] - p.parts[-1] <= 1


def is_stable(p: Partition) -> bool:
    if not p.parts:
        raise ValueError("stability is undefined for the empty partition")
    return all(x - y >= 2 for x, y in zip(p.parts, p.parts[1:]))


def ab_decomposition(p: Partition) -> Optional[AbForm]:
    """Greedy parse of ``p`` as two almost rectangular clusters.

    Parts equal to ``a - 1`` always join the top cluster; any other split
    would put ``b = a - 1``. Returns None when ``p`` is almost rectangular
    or has more than two clusters.
    """
    if not p.parts:
        raise ValueError("empty partition has no decomposition")
    counts = Counter(p.parts)
    a = p.parts[0]
    rest = [x for x in p.parts if x < a - 1]
    if not rest:
        return None
    b = rest[0]
    if any(x not in (b, b - 1) for x in rest):
        return None
    return AbForm(a, counts[a], counts[a - 1], b, counts[b], counts[b - 1])


def classify_type(p: Partition, u: int) -> frozenset[str]:
    """Raw truth of the type A, B and C predicates for ``p`` against ``u``.

    The predicates may overlap; no exclusions are applied.
    """
    form = ab_decomposition(p)
    if form is None:
        raise ValueError(f"{p} is not a union of two separated almost rectangular blocks")
    a, na, na1, b, nb, nb1 = form.a, form.n_a, form.n_a1, form.b, form.n_b, form.n_b1
    labels = set()
    if u == a * na + (a - 1) * na1:
        labels.add("A")
    if u == 2 * na + 2 * na1 + b * nb + (b - 1) * nb1 or (
        b == a - 2 and nb1 == 0 and u == 2 * na + (a - 1) * na1 + b * nb
    ):
        labels.add("B")
    if b == a - 2 and na and na1 and nb and nb1 and u == 2 * na + (a - 1) * na1 + b * nb:
        labels.add("C")
    return frozenset(labels)
