import pytest
from hypothesis import given, strategies as st

from jordantable.partition import (
    AbForm,
    Dominance,
    Partition,
    StableQ,
    ab_decomposition,
    almost_rectangular,
    classify_type,
    conjugate,
    dominance_leq,
    dominance_max,
    is_almost_rectangular,
    is_stable,
)
from oracles import all_partitions, conjugate_by_diagram, prefix_leq

P = Partition


def test_partition_validation():
    with pytest.raises(ValueError):
        P((2, 3))
    with pytest.raises(ValueError):
        P((3, 0))
    assert P().weight == 0
    assert P((5, 3, 2)).weight == 10
    assert str(P((5, 3, 2))) == "(5,3,2)"
    assert P.parse("(5,3,2)") == P((5, 3, 2))
    assert P.parse("()") == P()


@pytest.mark.parametrize(
    "parts, expected",
    [((4,), (1, 1, 1, 1)), ((3, 1), (2, 1, 1)), ((5, 3, 2), (3, 3, 2, 1, 1))],
)
def test_conjugate_examples(parts, expected):
    assert conjugate(P(parts)).parts == expected


def test_conjugate_exhaustive_small():
    for n in range(0, 16):
        for parts in all_partitions(n):
            c = conjugate(P(parts))
            assert c.parts == conjugate_by_diagram(parts)
            assert conjugate(c) == P(parts)


partitions = st.lists(st.integers(1, 20), max_size=12).map(lambda xs: P.from_unsorted(xs))


@given(partitions)
def test_conjugate_involution_random(p):
    assert conjugate(conjugate(p)) == p
    assert conjugate(p).weight == p.weight


@pytest.mark.parametrize(
    "a, b, expected",
    [
        ((4, 4), (5, 3), Dominance.LEQ),
        ((5, 3), (5, 3), Dominance.LEQ),
        ((4, 1, 1), (3, 3), Dominance.INCOMPARABLE),
        ((5, 3), (4, 4), Dominance.GREATER),
    ],
)
def test_dominance_examples(a, b, expected):
    assert dominance_leq(P(a), P(b)) is expected


def test_dominance_weight_mismatch():
    with pytest.raises(ValueError):
        dominance_leq(P((3,)), P((2,)))


def test_dominance_brute_force():
    for n in range(1, 13):
        parts = list(all_partitions(n))
        for a in parts:
            for b in parts:
                got = dominance_leq(P(a), P(b))
                if prefix_leq(a, b):
                    assert got is Dominance.LEQ
                elif prefix_leq(b, a):
                    assert got is Dominance.GREATER
                else:
                    assert got is Dominance.INCOMPARABLE


def test_dominance_max():
    assert dominance_max([P((4, 2)), P((3, 3)), P((2, 2, 2))]) == P((4, 2))
    with pytest.raises(RuntimeError):
        dominance_max([P((4, 1, 1)), P((3, 3))])


@pytest.mark.parametrize("m, k, expected", [(5, 2, (3, 2)), (6, 3, (2, 2, 2)), (7, 3, (3, 2, 2))])
def test_almost_rectangular_examples(m, k, expected):
    assert almost_rectangular(m, k).parts == expected


def test_almost_rectangular_unique():
    for m in range(1, 20):
        for k in range(1, m + 1):
            ar = almost_rectangular(m, k)
            matches = [p for p in all_partitions(m) if len(p) == k and p[0] - p[-1] <= 1]
            assert matches == [ar.parts]
            assert is_almost_rectangular(ar)
    with pytest.raises(ValueError):
        almost_rectangular(3, 4)


@pytest.mark.parametrize("parts, expected", [((7, 3), True), ((4, 3), False), ((5,), True)])
def test_is_stable(parts, expected):
    assert is_stable(P(parts)) is expected


def test_is_stable_empty():
    with pytest.raises(ValueError):
        is_stable(P())


def test_stable_q():
    q = StableQ(7, 4)
    assert q.second_part == 3
    assert q.partition == P((7, 3))
    assert is_stable(q.partition)
    for bad in [(3, 5), (7, 1), (4, 4)]:
        with pytest.raises(ValueError):
            StableQ(*bad)


@given(st.integers(2, 40), st.integers(1, 40))
def test_every_stable_q_is_stable(r, extra):
    assert is_stable(StableQ(r + extra, r).partition)


def test_ab_decomposition_examples():
    assert ab_decomposition(P((5, 3, 2))) == AbForm(a=5, n_a=1, n_a1=0, b=3, n_b=1, n_b1=1)
    assert ab_decomposition(P((4, 3))) is None
    assert ab_decomposition(P((9, 5, 1))) is None


def test_ab_decomposition_reassembles():
    for n in range(1, 16):
        for parts in all_partitions(n):
            form = ab_decomposition(P(parts))
            if form is None:
                continue
            assert form.reassemble() == P(parts)
            assert form.a - form.b >= 2 and form.n_a > 0 and form.n_b > 0
            if form.b == 1:
                assert form.n_b1 == 0


@pytest.mark.parametrize(
    "parts, u, expected",
    [((7, 3), 7, {"A"}), ((5, 3, 2), 7, {"B"}), ((5, 4, 3, 3, 2), 12, {"B", "C"})],
)
def test_classify_type_examples(parts, u, expected):
    assert classify_type(P(parts), u) == expected


def test_classify_type_needs_decomposition():
    with pytest.raises(ValueError):
        classify_type(P((4, 3)), 7)
