"""Shared helpers: fixture loading, random posets, brute-force oracles."""

from __future__ import annotations

import json
import random
from fractions import Fraction
from pathlib import Path

import pytest

from cdeposets import Distribution, build_poset
from cdeposets.posets import Poset, load_poset

FIXTURES = Path(__file__).resolve().parent.parent / "fixtures"


@pytest.fixture(scope="session")
def fix_a() -> Poset:
    return load_poset(FIXTURES / "fix-a.json")


@pytest.fixture(scope="session")
def fix_b() -> Poset:
    return load_poset(FIXTURES / "fix-b.json")


@pytest.fixture(scope="session")
def fix_c() -> Poset:
    return load_poset(FIXTURES / "fix-c.json")


@pytest.fixture(scope="session")
def fix_d() -> Poset:
    return load_poset(FIXTURES / "fix-d.json")


def load_witness_table():
    with open(FIXTURES / "witness-shifted-4-2.json", encoding="utf-8") as fh:
        return json.load(fh)


def random_poset(rng: random.Random, max_n: int = 6, density: float = 0.35) -> Poset:
    n = rng.randint(1, max_n)
    rels = [
        (i, j)
        for i in range(n)
        for j in range(i + 1, n)
        if rng.random() < density
    ]
    return build_poset(n, rels)


# --- brute-force oracles (independent of the library's DP routes) -------------


def brute_ideals(P: Poset) -> set[int]:
    """All downward-closed subsets by direct filtering of the power set."""
    out = set()
    for mask in range(1 << P.n):
        if all(P.strict_down[p] & ~mask == 0 for p in range(P.n) if mask >> p & 1):
            out.add(mask)
    return out


def brute_multichains(P: Poset, m: int) -> list[tuple[int, ...]]:
    out = []

    def rec(seq):
        if len(seq) == m + 1:
            out.append(tuple(seq))
            return
        for x in range(P.n):
            if not seq or P.leq(seq[-1], x):
                rec(seq + [x])

    rec([])
    return out


def brute_mchain(P: Poset, m: int) -> Distribution:
    mcs = brute_multichains(P, m)
    through = [sum(1 for c in mcs if p in c) for p in range(P.n)]
    return Distribution([Fraction(t, sum(through)) for t in through])


def brute_mmchain(P: Poset, m: int) -> Distribution:
    mcs = brute_multichains(P, m)
    occ = [sum(c.count(p) for c in mcs) for p in range(P.n)]
    return Distribution([Fraction(o, (m + 1) * len(mcs)) for o in occ])


def brute_kchains(P: Poset, k: int) -> list[tuple[int, ...]]:
    out = []

    def rec(seq):
        if len(seq) == k + 1:
            out.append(tuple(seq))
            return
        for x in range(P.n):
            if not seq or P.less(seq[-1], x):
                rec(seq + [x])

    rec([])
    return out


def component_key(shape) -> tuple:
    """Connected components of a skew shape, each normalized; shapes with the
    same key have identical tableau counts (their constraints decouple)."""
    comps = []
    cur = []
    for i in range(shape.a):
        lo, hi = shape.inner_cols[i], shape.outer_cols[i]
        if cur and hi <= cur[-1][0]:
            comps.append(tuple(cur))
            cur = []
        cur.append((lo, hi))
    comps.append(tuple(cur))
    normed = []
    for c in comps:
        off = min(lo for lo, _ in c)
        normed.append(tuple((lo - off, hi - off) for lo, hi in c))
    return tuple(sorted(normed))


def random_toggle_symmetric(L, rng: random.Random) -> Distribution:
    """Uniform plus a random perturbation from the toggle-symmetry kernel,
    scaled to keep all weights nonnegative."""
    from cdeposets import linalg

    rows = [[Fraction(1)] * L.n]
    for p in range(L.base.n):
        rows.append(
            [Fraction(L.t_plus[p][i] - L.t_minus[p][i]) for i in range(L.n)]
        )
    basis = linalg.nullspace(rows)
    if not basis:
        from cdeposets import uniform

        return uniform(L)
    v = [Fraction(0)] * L.n
    for vec in basis:
        c = Fraction(rng.randint(-3, 3))
        if c:
            v = [a + c * b for a, b in zip(v, vec)]
    base = Fraction(1, L.n)
    worst = min((x for x in v if x < 0), default=None)
    if worst is None:
        scale = Fraction(1)
    else:
        scale = (base / -worst) / 2
    return Distribution([base + scale * x for x in v])
