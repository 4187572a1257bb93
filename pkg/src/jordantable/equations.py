"""Generator sets cutting out the locus of a table cell, and points on it.

Coordinates on the commutator of J_Q are the coefficients of the four
truncated series a = sum a_i t^i (i = 1..u-1), b = sum b_i t^i
(i = 1..u-r-1), g = sum g_i t^i and h = sum h_i t^i (i = 0..u-r-1).
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import NamedTuple, Sequence

import numpy as np

from .partition import StableQ

MERSENNE61 = (1 << 61) - 1
FAMILIES = ("a", "b", "g", "h")


class Var(NamedTuple):
    family: str
    index: int

    def __str__(self) -> str:
        return f"{self.family}{self.index}"

    @classmethod
    def parse(cls, text: str) -> Var:
        if not text or text[0] not in FAMILIES or not text[1:].isdigit():
            raise ValueError(f"bad variable name {text!r}")
        return cls(text[0], int(text[1:]))


def variable_range(q: StableQ, family: str) -> range:
    if family == "a":
        return range(1, q.u)
    if family == "b":
        return range(1, q.u - q.r)
    if family in ("g", "h"):
        return range(0, q.u - q.r)
    raise ValueError(f"unknown variable family {family!r}")


def all_variables(q: StableQ) -> list[Var]:
    return [Var(f, i) for f in FAMILIES for i in variable_range(q, f)]


@dataclass(frozen=True)
class PolyGenerator:
    """Sparse integer polynomial: a tuple of (coefficient, monomial) terms."""

    terms: tuple[tuple[int, tuple[Var, ...]], ...]

    def __post_init__(self):
        seen = set()
        for c, mono in self.terms:
            if c == 0:
                raise ValueError("zero coefficient in generator")
            if len(mono) > 2:
                raise ValueError("generators have degree at most two")
            key = tuple(sorted(mono))
            if key in seen:
                raise ValueError(f"duplicate monomial {key}")
            seen.add(key)

    def variables(self) -> set[Var]:
        return {v for _, mono in self.terms for v in mono}

    def __str__(self) -> str:
        out = []
        for i, (c, mono) in enumerate(self.terms):
            body = "*".join(map(str, mono)) or "1"
            mag = abs(c)
            text = body if mag == 1 else f"{mag}*{body}"
            if i == 0:
                out.append(text if c > 0 else f"-{text}")
            else:
                out.append(("+ " if c > 0 else "- ") + text)
        return " ".join(out)

    def to_json(self) -> list[dict]:
        return [{"c": c, "vars": [str(v) for v in mono]} for c, mono in self.terms]

    @classmethod
    def from_json(cls, data: Sequence[dict]) -> PolyGenerator:
        return cls(tuple((int(t["c"]), tuple(Var.parse(v) for v in t["vars"])) for t in data))


@dataclass(frozen=True)
class ParamAssignment:
    q: StableQ
    p: int
    values: dict[Var, int]

    def __post_init__(self):
        for v, x in self.values.items():
            if v.index not in variable_range(self.q, v.family):
                raise ValueError(f"{v} out of range for Q={self.q.partition}")
            if not 0 <= x < self.p:
                raise ValueError(f"{v}={x} not reduced mod {self.p}")

    def __getitem__(self, v: Var) -> int:
        return self.values[v]

    def series(self, family: str) -> list[int]:
        """Dense coefficient list of a, b, g or h; absent low terms are 0."""
        length = self.q.u if family == "a" else self.q.u - self.q.r
        coeffs = [0] * length
        for i in variable_range(self.q, family):
            coeffs[i] = self.values[Var(family, i)]
        return coeffs

    def is_complete(self) -> bool:
        return all(v in self.values for v in all_variables(self.q))


def _linear(v: Var) -> PolyGenerator:
    return PolyGenerator(((1, (v,)),))


def equation_set(q: StableQ, k: int, l: int) -> list[PolyGenerator]:
    """Generators for cell (k, l).

    The m-th quadratic is the coefficient of t^(r+m) in a*b - g*h*t^r once
    the low-order a's and b's vanish.
    """
    q.check_index(k, l)
    r = q.r
    gens = [_linear(Var("a", i)) for i in range(1, k)]
    if k + l <= r:
        gens += [_linear(Var("b", i)) for i in range(1, l)]
        return gens
    gens += [_linear(Var("b", i)) for i in range(1, r - k)]
    for m in range(k + l - r):
        terms = [(1, (Var("a", k + j), Var("b", r - k + m - j))) for j in range(m + 1)]
        terms += [(-1, (Var("g", j), Var("h", m - j))) for j in range(m + 1)]
        gens.append(PolyGenerator(tuple(terms)))
    return gens


def evaluate(gen: PolyGenerator, asn: ParamAssignment) -> int:
    p = asn.p
    total = 0
    for c, mono in gen.terms:
        term = c
        for v in mono:
            if v not in asn.values:
                raise KeyError(f"variable {v} is unassigned")
            term = term * asn.values[v] % p
        total += term
    return total % p


def make_rng(*key: int) -> np.random.Generator:
    """Counter-based generator keyed by a tuple of non-negative integers."""
    return np.random.Generator(np.random.Philox(np.random.SeedSequence([int(x) for x in key])))


def _draw(rng: np.random.Generator, p: int, nonzero: bool = False) -> int:
    return int(rng.integers(1 if nonzero else 0, p))


def sample_point(q: StableQ, k: int, l: int, seed: int = 0, p: int = MERSENNE61) -> ParamAssignment:
    """A generic point of the zero set of ``equation_set(q, k, l)`` over F_p.

    The leading coefficients a_k, g_0, h_0 (and b_l when k + l <= r) are
    nonzero; when k + l > r the quadratics are solved in turn for
    b_{r-k}, ..., b_{l-1}.
    """
    q.check_index(k, l)
    if p < 1 << 31:
        raise ValueError(f"prime {p} too small for genericity sampling")
    u, r = q.u, q.r
    rng = make_rng(seed, u, r, k, l)
    vals: dict[Var, int] = {}
    for v in all_variables(q):
        forced = v in (Var("a", k), Var("g", 0), Var("h", 0)) or (k + l <= r and v == Var("b", l))
        vals[v] = _draw(rng, p, nonzero=forced)
    for i in range(1, k):
        vals[Var("a", i)] = 0
    if k + l <= r:
        for i in range(1, l):
            vals[Var("b", i)] = 0
    else:
        for i in range(1, r - k):
            vals[Var("b", i)] = 0
        inv_ak = pow(vals[Var("a", k)], -1, p)
        for m in range(k + l - r):
            rhs = sum(vals[Var("g", j)] * vals[Var("h", m - j)] for j in range(m + 1))
            rhs -= sum(vals[Var("a", k + j)] * vals[Var("b", r - k + m - j)] for j in range(1, m + 1))
            vals[Var("b", r - k + m)] = rhs * inv_ak % p
    asn = ParamAssignment(q, p, vals)
    for gen in equation_set(q, k, l):
        if evaluate(gen, asn):
            raise AssertionError(f"sampled point misses generator {gen}")
    return asn


def random_assignment(q: StableQ, rng: np.random.Generator, p: int = MERSENNE61) -> ParamAssignment:
    """An unconstrained point biased towards special strata.

    Each coordinate is zero with a per-sample probability drawn from
    {0.3, 0.5, 0.7, 0.85}. Nonzero values are +-1 nine times in ten, so
    products cancel often, and uniform otherwise.
    """
    zero_prob = float(rng.choice([0.3, 0.5, 0.7, 0.85]))
    vals = {}
    for v in all_variables(q):
        if rng.random() < zero_prob:
            vals[v] = 0
        elif rng.random() < 0.9:
            vals[v] = 1 if rng.random() < 0.5 else p - 1
        else:
            vals[v] = _draw(rng, p, nonzero=True)
    return ParamAssignment(q, p, vals)
