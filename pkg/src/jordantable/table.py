"""The (r-1) x (u-r) table of Jordan types whose generic commuting type is Q.

Each cell is computed from its corank-of-powers profile and cross-checked
against the closed forms for the three corank paths.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass
from typing import Optional

from .partition import Partition, StableQ, almost_rectangular, classify_type, conjugate
from .tropical import CorankSequence, corank_sequence, lines_at


class CasePath(str, enum.Enum):
    A = "A"  # L1 -> L2 -> L4
    B = "B"  # L1 -> L3 -> L4
    C = "C"  # L1 -> L2 -> L3 -> L4


@dataclass(frozen=True)
class UChains:
    top: int
    middle: Optional[int]
    bottom: int

    def values(self) -> list[int]:
        return [v for v in (self.top, self.middle, self.bottom) if v is not None]

    def to_json(self) -> dict:
        return {"top": self.top, "middle": self.middle, "bottom": self.bottom}


@dataclass(frozen=True)
class TableEntry:
    k: int
    l: int
    partition: Partition
    case_path: CasePath
    types: frozenset[str]
    burge: str
    coranks: CorankSequence
    u_chains: UChains

    def to_json(self) -> dict:
        return {
            "k": self.k,
            "l": self.l,
            "partition": self.partition.to_json(),
            "case": self.case_path.value,
            "types": sorted(self.types),
            "burge": self.burge,
            "coranks": list(self.coranks.values),
            "u_chains": self.u_chains.to_json(),
        }


@dataclass(frozen=True)
class JTable:
    q: StableQ
    entries: tuple[tuple[TableEntry, ...], ...]  # entries[k-1][l-1]

    def entry(self, k: int, l: int) -> TableEntry:
        self.q.check_index(k, l)
        return self.entries[k - 1][l - 1]

    def cells(self) -> list[TableEntry]:
        return [e for row in self.entries for e in row]

    def to_json(self) -> dict:
        return {"u": self.q.u, "r": self.q.r, "entries": [e.to_json() for e in self.cells()]}


def jordan_type_from_corank(q: StableQ, k: int, l: int) -> Partition:
    q.check_index(k, l)
    return conjugate(Partition(corank_sequence(q.u, q.r, k, l).differences()))


def case_path(q: StableQ, k: int, l: int) -> CasePath:
    """Which lines carry the corank profile, using strict minimisers.

    Ties never count towards path C; with both strict-minimiser sets for L2
    and L3 non-empty the path is C, with none for L3 it is A, else B.
    """
    q.check_index(k, l)
    l2_strict = l3_strict = False
    for s in range(2, 2 * q.u + 1):
        v1, v2, v3, v4 = lines_at(q.u, q.r, k, l, s)
        l2_strict |= v2 < min(v1, v3, v4)
        l3_strict |= v3 < min(v1, v2, v4)
    if l2_strict and l3_strict:
        return CasePath.C
    if not l3_strict:
        return CasePath.A
    return CasePath.B


def _union(*blocks: Partition) -> Partition:
    return Partition.from_unsorted(x for block in blocks for x in block)


def closed_form_partition(q: StableQ, k: int, l: int) -> Partition:
    u, r = q.u, q.r
    lp = min(l, r - k)
    path = case_path(q, k, l)
    if path is CasePath.A:
        return _union(almost_rectangular(u, k), almost_rectangular(u - r, l))
    if path is CasePath.B:
        return _union(almost_rectangular(u - r + 2 * lp, lp), almost_rectangular(u - 2 * lp, k + l - lp))
    # path C forces l = l' < k <= r - k.
    # Against the index-set description: t = l, q_t - 1 = s1, d_t = l - e.
    s1, e = divmod(u - r, l)
    if e == 0:
        return _union(almost_rectangular(u, k), almost_rectangular(u - r, l))
    return _union(
        almost_rectangular(u - r + 2 * l, l),
        almost_rectangular(u - 2 * l - s1 * (l - e), k - l + e),
        Partition([s1] * (l - e)),
    )


def burge_code(q: StableQ, k: int, l: int) -> str:
    """Burge word of cell (k, l), with ``a`` for alpha and ``b`` for beta."""
    q.check_index(k, l)
    u, r = q.u, q.r
    return "a" * (u - r - l) + "b" * l + "a" * (r - k) + "b" * k + "a"


def u_chain_lengths(q: StableQ, k: int, l: int) -> UChains:
    u, r = q.u, q.r
    lp = min(l, r - k)
    path = case_path(q, k, l)
    if path is CasePath.A:
        s1, e1 = divmod(u - r, l)
        s2, e2 = divmod(u, k)
        middle = u - (s2 - 1) * (e2 - e1) if e1 > 0 and e2 > 0 and s2 == s1 + 2 else None
        return UChains(top=u, middle=middle, bottom=u - r + 2 * k)
    if path is CasePath.B:
        s3, e3 = divmod(u - 2 * lp, k + l - lp)
        s4, e4 = divmod(u - r, lp)
        middle = s3 * (lp + e3 - e4) + 2 * lp + e3 if e3 > 0 and e4 > 0 and s4 == s3 else None
        return UChains(top=u - r + 2 * lp, middle=middle, bottom=u)
    s1, e = divmod(u - r, l)
    f = (r - 2 * l) - (s1 + 1) * (k - l)
    if e == 0:
        return UChains(top=u, middle=None, bottom=u - s1 * f)
    return UChains(top=(s1 + 2) * (l + f) + e, middle=u, bottom=u - s1 * f)


def table_entry(q: StableQ, k: int, l: int) -> TableEntry:
    partition = jordan_type_from_corank(q, k, l)
    closed = closed_form_partition(q, k, l)
    if closed != partition:
        raise AssertionError(f"cell {(k, l)} of {q.partition}: corank route {partition} != closed form {closed}")
    return TableEntry(
        k=k,
        l=l,
        partition=partition,
        case_path=case_path(q, k, l),
        types=classify_type(partition, q.u),
        burge=burge_code(q, k, l),
        coranks=corank_sequence(q.u, q.r, k, l),
        u_chains=u_chain_lengths(q, k, l),
    )


def full_table(q: StableQ) -> JTable:
    rows = tuple(
        tuple(table_entry(q, k, l) for l in range(1, q.u - q.r + 1)) for k in range(1, q.r)
    )
    table = JTable(q, rows)
    parts = [e.partition for e in table.cells()]
    if len(set(parts)) != len(parts):
        raise AssertionError(f"table of {q.partition} has repeated partitions")
    return table


TSV_COLUMNS = ("k", "l", "partition", "case", "types", "burge", "coranks", "u_top", "u_middle", "u_bottom")


def table_to_tsv(table: JTable) -> str:
    """One headerless row per cell; see TSV_COLUMNS for the column order."""
    rows = []
    for e in table.cells():
        ch = e.u_chains
        rows.append(
            "\t".join(
                [
                    str(e.k),
                    str(e.l),
                    ",".join(map(str, e.partition)),
                    e.case_path.value,
                    ",".join(sorted(e.types)),
                    e.burge,
                    ",".join(map(str, e.coranks.values)),
                    str(ch.top),
                    "" if ch.middle is None else str(ch.middle),
                    str(ch.bottom),
                ]
            )
        )
    return "\n".join(rows) + "\n"
