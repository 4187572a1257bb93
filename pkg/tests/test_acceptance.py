"""Exit criteria. Each prints one PASS/FAIL line with its timing.

Run alone with ``pytest tests/test_acceptance.py -s`` or
``python tests/test_acceptance.py``.
"""

from __future__ import annotations

import time

import numpy as np
import pytest

from jordantable.equations import MERSENNE61
from jordantable.linalg import d_oracle
from jordantable.partition import StableQ, almost_rectangular
from jordantable.table import burge_code, closed_form_partition, jordan_type_from_corank
from jordantable.tropical import IDENTITY, OrderMatrix, corank_sequence, simplified_power_11, tropical_power_11
from jordantable.verify import completeness_sweep, sampled_type


def qs(max_u):
    for u in range(3, max_u + 1):
        for r in range(2, u):
            yield StableQ(u, r)


def criterion_1():
    bad = []
    cells = 0
    for q in qs(14):
        seen = set()
        for k, l in q.indices():
            cells += 1
            p = jordan_type_from_corank(q, k, l)
            if closed_form_partition(q, k, l) != p or len(p) != k + l or p.weight != 2 * q.u - q.r:
                bad.append((q.u, q.r, k, l))
            seen.add(p)
        if len(seen) != (q.r - 1) * (q.u - q.r):
            bad.append((q.u, q.r, "repeated"))
    return not bad, f"{cells} cells, {len(bad)} mismatches {bad[:3]}"


def criterion_2():
    checked = mismatches = 0
    for r in range(2, 21):
        us = np.arange(r, 31)
        for k in range(1, r):
            for lp in range(1, r - k + 1):
                t = OrderMatrix(k, lp, r)
                power = t.matrix @ t.matrix
                for s in range(2, 41):
                    closed = tropical_power_11(t, s, us)
                    mismatches += int(np.count_nonzero(closed != np.minimum(us, power[0, 0])))
                    if k + lp <= r:
                        mismatches += int(np.count_nonzero(simplified_power_11(t, s, us) != closed))
                    checked += len(us)
                    power = power @ t.matrix
    return mismatches == 0, f"{checked} (r,k,l',u,s) tuples, {mismatches} mismatches"


def criterion_3(seeds=5):
    bad = []
    cells = 0
    for q in qs(9):
        for k, l in q.indices():
            cells += 1
            observed, profile = sampled_type(q, k, l, trials=seeds, seed=0, p=MERSENNE61)
            if observed != jordan_type_from_corank(q, k, l) or profile != list(
                corank_sequence(q.u, q.r, k, l).values
            ):
                bad.append((q.u, q.r, k, l))
    return not bad, f"{cells} cells x {seeds} seeds over p=2^61-1, {len(bad)} mismatches {bad[:3]}"


def criterion_4(trials=5):
    bad = []
    entries = 0
    for q in qs(9):
        if d_oracle(q.partition, trials=trials) != q.partition:
            bad.append(("stable", q.u, q.r))
        for k, l in q.indices():
            entries += 1
            if d_oracle(jordan_type_from_corank(q, k, l), trials=trials) != q.partition:
                bad.append((q.u, q.r, k, l))
    ar = 0
    for m in range(1, 13):
        for k in range(1, m + 1):
            ar += 1
            if len(d_oracle(almost_rectangular(m, k), trials=trials)) != 1:
                bad.append(("AR", m, k))
    return not bad, f"{entries} entries, {ar} almost rectangular, {len(bad)} failures {bad[:3]}"


def criterion_5(samples=1000):
    parts = []
    ok = True
    for u, r in [(7, 4), (8, 3)]:
        q = StableQ(u, r)
        sweep = completeness_sweep(q, samples=samples, seed=0)
        ok &= sweep.ok
        parts.append(
            f"Q={q.partition}: {sum(sweep.hits.values())} hits over {len(sweep.hits)} cells, "
            f"{len(sweep.violations)} violations"
        )
    return ok, "; ".join(parts)


def criterion_6():
    bad = []
    for q in qs(14):
        for k, l in q.indices():
            w = burge_code(q, k, l)
            if len(w) != q.u + 1 or not w.endswith("a") or w.count("ba") != 2 or set(w) - {"a", "b"}:
                bad.append((q.u, q.r, k, l, w))
    return not bad, f"{len(bad)} malformed words {bad[:3]}"


def criterion_7():
    bad = []
    for q in qs(14):
        for k, l in q.indices():
            v = corank_sequence(q.u, q.r, k, l).values
            d = [b - a for a, b in zip((0,) + v, v)]
            if not (
                v[0] == k + l
                and v[-1] == 2 * q.u - q.r
                and len(v) <= q.u
                and all(a <= b for a, b in zip(v, v[1:]))
                and all(a >= b for a, b in zip(d, d[1:]))
            ):
                bad.append((q.u, q.r, k, l))
    return not bad, f"{len(bad)} bad sequences {bad[:3]}"


CRITERIA = [
    ("1 table self-consistency (u<=14)", criterion_1, 1.0),
    ("2 tropical closed forms", criterion_2, 1.0),
    ("3 sampled Jordan types and coranks (u<=9)", criterion_3, 10.0),
    ("4 generic commuting types (u<=9)", criterion_4, 30.0),
    ("5 equations vanish on matching random points", criterion_5, 10.0),
    ("6 Burge words well formed (u<=14)", criterion_6, None),
    ("7 corank sequence shape (u<=14)", criterion_7, None),
]


def run_criterion(name, fn, limit):
    start = time.perf_counter()
    ok, detail = fn()
    elapsed = time.perf_counter() - start
    in_time = limit is None or elapsed < limit
    bound = "" if limit is None else f" (limit {limit:g}s)"
    line = f"[{'PASS' if ok and in_time else 'FAIL'}] criterion {name}: {detail}; {elapsed:.2f}s{bound}"
    return ok, in_time, line


@pytest.mark.parametrize("name, fn, limit", CRITERIA, ids=[c[0].split()[0] for c in CRITERIA])
def test_criterion(name, fn, limit, capsys):
    ok, in_time, line = run_criterion(name, fn, limit)
    with capsys.disabled():
        print("\n" + line)
    assert ok, line
    assert in_time, line


if __name__ == "__main__":
    results = [run_criterion(*c) for c in CRITERIA]
    for _, _, line in results:
        print(line)
    raise SystemExit(0 if all(ok and t for ok, t, _ in results) else 1)
