"""Standard tableau counting: determinant, hook-length, and Thrall formulas,
plus brute-force enumerators for standard barely set-valued tableaux.

The enumerators are deliberately independent of the counting formulas: they
place the values 1..N+1 one at a time into the diagram (one box doubled) and
check the row/column/primed conditions directly, so they can serve as
oracles for the formula route, which instead multiplies a standard-tableau
count by a maxchain expectation on the corresponding ideal lattice.

Primed-alphabet encoding for the shifted enumerator: value v unprimed is 2v,
primed is 2v+1, matching the total order 1 < 1' < 2 < 2' < ...
"""

from __future__ import annotations

from fractions import Fraction
from math import factorial

from .distributions import expectation, maxchain_dist
from .ideals import build_lattice
from .posets import Poset
from .shapes import Partition, ShiftedShape, SkewShape

DEFAULT_SKEW_BUDGET = 9
DEFAULT_SHIFTED_BUDGET = 6


class TableauBudgetError(RuntimeError):
    """Brute-force enumeration refused: box count above budget."""


def count_linear_extensions(P: Poset) -> int:
    """Number of linear extensions, as maximal chains of J(P)."""
    L = build_lattice(P)
    lat = L.as_poset()
    counts = [0] * lat.n
    counts[0] = 1
    for x in range(lat.n):  # canonical order is by cardinality, so topological
        for y in lat.up_covers[x]:
            counts[y] += counts[x]
    return counts[lat.n - 1] if lat.n else 1


def f_aitken(shape: SkewShape) -> int:
    """Standard tableaux of a skew shape by the factorial determinant."""
    lam, nu = shape.outer, shape.inner
    k = lam.length
    if k == 0:
        return 1
    size = lam.size - nu.size
    rows = []
    for i in range(1, k + 1):
        row = []
        for j in range(1, k + 1):
            m = lam.part(i) - i - nu.part(j) + j
            row.append(Fraction(0) if m < 0 else Fraction(1, factorial(m)))
        rows.append(row)
    det = _det(rows)
    result = factorial(size) * det
    assert result.denominator == 1
    return int(result)


def _det(rows) -> Fraction:
    n = len(rows)
    rows = [list(r) for r in rows]
    det = Fraction(1)
    for c in range(n):
        pivot = next((r for r in range(c, n) if rows[r][c] != 0), None)
        if pivot is None:
            return Fraction(0)
        if pivot != c:
            rows[c], rows[pivot] = rows[pivot], rows[c]
            det = -det
        det *= rows[c][c]
        inv = 1 / rows[c][c]
        for r in range(c + 1, n):
            if rows[r][c]:
                f = rows[r][c] * inv
                rows[r] = [a - f * b for a, b in zip(rows[r], rows[c])]
    return det


def hook_lengths(lam: Partition) -> dict[tuple[int, int], int]:
    conj = lam.conjugate()
    return {
        (i, j): lam.part(i) - j + conj.part(j) - i + 1
        for i in range(1, lam.length + 1)
        for j in range(1, lam.part(i) + 1)
    }


def f_hook(lam: Partition) -> int:
    """Hook-length formula for a straight shape."""
    prod = 1
    for h in hook_lengths(lam).values():
        prod *= h
    assert factorial(lam.size) % prod == 0
    return factorial(lam.size) // prod


def shifted_hook_lengths(lam: Partition) -> dict[tuple[int, int], int]:
    """Size of the shifted hook of each box: the box, the rest of its row,
    the rest of its column, and all of row j+1."""
    shape = ShiftedShape(lam)
    out = {}
    for i, j in shape.boxes:
        arm = sum(1 for jj in range(j + 1, i + lam.part(i)) if (i, jj) in shape)
        leg = sum(1 for ii in range(i + 1, lam.length + 1) if (ii, j) in shape)
        broken = lam.part(j + 1)
        out[(i, j)] = 1 + arm + leg + broken
    return out


def g_thrall(lam: Partition) -> int:
    """Unprimed standard shifted tableaux of a strict shape."""
    if not lam.is_strict:
        raise ValueError(f"{lam} is not strict")
    prod = 1
    for h in shifted_hook_lengths(lam).values():
        prod *= h
    assert factorial(lam.size) % prod == 0
    return factorial(lam.size) // prod


# --- brute-force enumerators ----------------------------------------------------


def _barely_backtrack(boxes, west, north, capacity):
    """Count placements of values 1..N+1 into the boxes (one box has
    capacity 2) so entries increase weakly east and strictly south.

    Placing values in increasing order, a box can receive a value iff its
    west and north neighbors are complete and its east and south neighbors
    are still empty; that reproduces exactly the row-weak/column-strict
    standardness conditions.
    """
    n_boxes = len(boxes)
    total_values = n_boxes + 1
    fill = [0] * n_boxes
    east = [None] * n_boxes
    south = [None] * n_boxes
    index = {box: k for k, box in enumerate(boxes)}
    for k, (i, j) in enumerate(boxes):
        east[k] = index.get((i, j + 1))
        south[k] = index.get((i + 1, j))

    def complete(k):
        return fill[k] == capacity[k]

    def rec(v):
        if v == total_values + 1:
            return 1
        total = 0
        for k in range(n_boxes):
            if fill[k] >= capacity[k]:
                continue
            w = west[k]
            if w is not None and not complete(w):
                continue
            nn = north[k]
            if nn is not None and not complete(nn):
                continue
            e = east[k]
            if e is not None and fill[e]:
                continue
            s = south[k]
            if s is not None and fill[s]:
                continue
            fill[k] += 1
            total += rec(v + 1)
            fill[k] -= 1
        return total

    return rec(1)


def enumerate_barely(shape: SkewShape, budget: int = DEFAULT_SKEW_BUDGET) -> int:
    """Brute-force count of standard barely set-valued tableaux."""
    n = shape.n_boxes
    if n > budget:
        raise TableauBudgetError(f"{n} boxes exceeds the brute-force budget {budget}")
    if n == 0:
        return 0
    boxes = shape.boxes
    index = {box: k for k, box in enumerate(boxes)}
    west = [index.get((i, j - 1)) for i, j in boxes]
    north = [index.get((i - 1, j)) for i, j in boxes]
    total = 0
    for dbl in range(n):
        capacity = [1] * n
        capacity[dbl] = 2
        total += _barely_backtrack(boxes, west, north, capacity)
    return total


def barely_fillings(shape: SkewShape, budget: int = 5):
    """All standard barely set-valued fillings of a tiny shape, for golden
    tests: each filling is a tuple (one sorted value tuple per box, in the
    shape's box order)."""
    n = shape.n_boxes
    if n > budget:
        raise TableauBudgetError(f"{n} boxes exceeds the emission budget {budget}")
    boxes = shape.boxes
    index = {box: k for k, box in enumerate(boxes)}
    west = [index.get((i, j - 1)) for i, j in boxes]
    north = [index.get((i - 1, j)) for i, j in boxes]
    contents: list[list[int]] = [[] for _ in range(n)]
    out = []

    def rec(v, capacity):
        if v == n + 2:
            out.append(tuple(tuple(c) for c in contents))
            return
        for k in range(n):
            if len(contents[k]) >= capacity[k]:
                continue
            w = west[k]
            if w is not None and len(contents[w]) < capacity[w]:
                continue
            nn = north[k]
            if nn is not None and len(contents[nn]) < capacity[nn]:
                continue
            e = index.get((boxes[k][0], boxes[k][1] + 1))
            if e is not None and contents[e]:
                continue
            s = index.get((boxes[k][0] + 1, boxes[k][1]))
            if s is not None and contents[s]:
                continue
            contents[k].append(v)
            rec(v + 1, capacity)
            contents[k].pop()

    for dbl in range(n):
        capacity = [1] * n
        capacity[dbl] = 2
        rec(1, capacity)
    return sorted(out)


def enumerate_shifted_barely(
    lam: Partition,
    diagonally_unprimed: bool = False,
    budget: int = DEFAULT_SHIFTED_BUDGET,
) -> int:
    """Brute-force count of standard shifted barely set-valued tableaux.

    Entries come from 1 < 1' < 2 < 2' < ...; standard means every value
    1..N+1 is used exactly once (primed or not).  The full shifted
    conditions (weak increase along the box order, unprimed once per
    column, primed once per row) are enforced on each completed filling.
    """
    if not lam.is_strict:
        raise ValueError(f"{lam} is not strict")
    n = lam.size
    if n > budget:
        raise TableauBudgetError(f"{n} boxes exceeds the brute-force budget {budget}")
    if n == 0:
        return 0
    shape = ShiftedShape(lam)
    boxes = shape.boxes
    index = shape.box_index
    west = [index.get((i, j - 1)) for i, j in boxes]
    north = [index.get((i - 1, j)) for i, j in boxes]
    diagonal = [i == j for i, j in boxes]
    total_values = n + 1
    contents: list[list[int]] = [[] for _ in range(n)]

    def valid_final():
        # weak increase along covers in the encoded order
        for k, (i, j) in enumerate(boxes):
            hi = max(contents[k])
            e = index.get((i, j + 1))
            if e is not None and hi > min(contents[e]):
                return False
            s = index.get((i + 1, j))
            if s is not None and hi > min(contents[s]):
                return False
        # each unprimed value at most once per column, primed per row
        col_seen = set()
        row_seen = set()
        for k, (i, j) in enumerate(boxes):
            for e in contents[k]:
                if e % 2 == 0:
                    if (j, e) in col_seen:
                        return False
                    col_seen.add((j, e))
                else:
                    if (i, e) in row_seen:
                        return False
                    row_seen.add((i, e))
        return True

    count = 0

    def rec(v, capacity):
        nonlocal count
        if v == total_values + 1:
            if valid_final():
                count += 1
            return
        for k in range(n):
            if len(contents[k]) >= capacity[k]:
                continue
            w = west[k]
            if w is not None and len(contents[w]) < capacity[w]:
                continue
            nn = north[k]
            if nn is not None and len(contents[nn]) < capacity[nn]:
                continue
            e = index.get((boxes[k][0], boxes[k][1] + 1))
            if e is not None and contents[e]:
                continue
            s = index.get((boxes[k][0] + 1, boxes[k][1]))
            if s is not None and contents[s]:
                continue
            variants = (2 * v,) if diagonally_unprimed and diagonal[k] else (
                2 * v,
                2 * v + 1,
            )
            for enc in variants:
                contents[k].append(enc)
                rec(v + 1, capacity)
                contents[k].pop()

    for dbl in range(n):
        capacity = [1] * n
        capacity[dbl] = 2
        rec(1, capacity)
    return count


def count_barely_formula(shape: SkewShape, budget: int | None = None) -> int:
    """(N+1) * f^{lambda/nu} * E(maxchain; ddeg) on the interval [nu, lambda]."""
    kwargs = {} if budget is None else {"budget": budget}
    L = build_lattice(shape.poset(), **kwargs)
    exp = expectation(maxchain_dist(L), L.ddeg)
    value = (shape.n_boxes + 1) * f_aitken(shape) * exp
    if value.denominator != 1:
        raise ArithmeticError(f"barely count is not an integer: {value}")
    return int(value)


def count_shifted_barely_formula(
    lam: Partition, diagonally_unprimed: bool = False, budget: int | None = None
) -> int:
    """Shifted barely counts from g^lambda and a maxchain expectation.

    Primed variant: (N+1) 2^{N+1} g E(maxchain; ddeg).  Diagonally unprimed:
    (N+1) 2^{N-l} g E(maxchain; 2 ddeg - sum_i T-_{[i,i]}).
    """
    shape = ShiftedShape(lam)
    kwargs = {} if budget is None else {"budget": budget}
    L = build_lattice(shape.poset(), **kwargs)
    mu = maxchain_dist(L)
    n = lam.size
    if not diagonally_unprimed:
        value = (n + 1) * 2 ** (n + 1) * g_thrall(lam) * expectation(mu, L.ddeg)
    else:
        diag = [shape.box_index[(i, i)] for i in range(1, lam.length + 1)]
        stat = [
            2 * L.ddeg[idx] - sum(L.t_minus[p][idx] for p in diag)
            for idx in range(L.n)
        ]
        value = (
            (n + 1)
            * 2 ** (n - lam.length)
            * g_thrall(lam)
            * expectation(mu, stat)
        )
    if value.denominator != 1:
        raise ArithmeticError(f"shifted barely count is not an integer: {value}")
    return int(value)
