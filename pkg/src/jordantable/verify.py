"""Cell-by-cell verification of a table against the matrix oracles."""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass, field

from .equations import MERSENNE61, equation_set, evaluate, make_rng, random_assignment, sample_point
from .linalg import build_matrix, corank_profile, d_oracle, jordan_type_of, type_from_coranks
from .partition import Partition, StableQ, dominance_max
from .table import JTable, closed_form_partition, full_table, jordan_type_from_corank
from .tropical import corank_sequence


@dataclass
class CellReport:
    k: int
    l: int
    partition: Partition
    failures: list[str] = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return not self.failures


@dataclass
class SweepReport:
    samples: int
    hits: Counter
    violations: list[tuple[int, int, int]]  # (sample index, k, l)

    @property
    def ok(self) -> bool:
        return not self.violations


def sampled_type(q: StableQ, k: int, l: int, trials: int, seed: int, p: int) -> tuple[Partition, list[int]]:
    """Dominance-max Jordan type over ``trials`` generic points of the cell,
    with the corank profile of a sample attaining it."""
    profiles = {}
    for i in range(trials):
        m = build_matrix(sample_point(q, k, l, seed=seed * 1_000_003 + i, p=p))
        profile = corank_profile(m)
        profiles.setdefault(type_from_coranks(profile), profile)
    best = dominance_max(profiles)
    return best, profiles[best]


def verify_cell(q: StableQ, k: int, l: int, trials: int = 5, seed: int = 0, p: int = MERSENNE61) -> CellReport:
    expected = jordan_type_from_corank(q, k, l)
    report = CellReport(k, l, expected)
    closed = closed_form_partition(q, k, l)
    if closed != expected:
        report.failures.append(f"closed form {closed} != corank route {expected}")
    observed, profile = sampled_type(q, k, l, trials, seed, p)
    if observed != expected:
        report.failures.append(f"sampled Jordan type {observed} != {expected}")
    if profile != list(corank_sequence(q.u, q.r, k, l).values):
        report.failures.append(f"sampled coranks {profile} differ from the four-line formula")
    d = d_oracle(expected, trials=trials, seed=seed, p=p)
    if d != q.partition:
        report.failures.append(f"generic commuting type of {expected} is {d}, not {q.partition}")
    return report


def completeness_sweep(
    q: StableQ, samples: int = 1000, seed: int = 0, p: int = MERSENNE61, table: JTable | None = None
) -> SweepReport:
    """Random points of the commutator whose Jordan type is a table entry
    must satisfy that entry's equations."""
    table = table or full_table(q)
    lookup = {e.partition: e for e in table.cells()}
    rng = make_rng(seed, q.u, q.r, samples)
    hits: Counter = Counter()
    violations = []
    for i in range(samples):
        asn = random_assignment(q, rng, p)
        entry = lookup.get(jordan_type_of(build_matrix(asn)))
        if entry is None:
            continue
        hits[(entry.k, entry.l)] += 1
        if any(evaluate(g, asn) for g in equation_set(q, entry.k, entry.l)):
            violations.append((i, entry.k, entry.l))
    return SweepReport(samples, hits, violations)
