import random
from fractions import Fraction

import pytest

from cdeposets import (
    build_lattice,
    count_barely_formula,
    count_linear_extensions,
    count_shifted_barely_formula,
    enumerate_barely,
    enumerate_shifted_barely,
    expectation,
    f_aitken,
    f_hook,
    g_thrall,
    maxchain_dist,
)
from cdeposets.shapes import (
    Partition,
    ShiftedShape,
    SkewShape,
    iter_partitions,
    iter_strict_partitions,
    parse_shape,
)
from cdeposets.tableaux import (
    TableauBudgetError,
    hook_lengths,
    shifted_hook_lengths,
)


def test_f_values():
    assert f_hook(Partition((2, 2))) == 2
    assert f_aitken(SkewShape(Partition((2, 2)))) == 2
    assert f_aitken(SkewShape(Partition(()))) == 1
    assert sorted(hook_lengths(Partition((2, 1))).values()) == [1, 1, 3]
    assert f_hook(Partition((2, 1))) == 2


def test_g_values():
    assert g_thrall(Partition((2, 1))) == 1
    assert g_thrall(Partition((1,))) == 1
    assert g_thrall(Partition((3, 2, 1))) == 2
    assert sorted(shifted_hook_lengths(Partition((3, 2, 1))).values()) == [
        1,
        2,
        3,
        3,
        4,
        5,
    ]
    with pytest.raises(ValueError):
        g_thrall(Partition((2, 2)))


def test_aitken_hook_linear_extensions_agree_straight():
    for lam in iter_partitions(7):
        shape = SkewShape(lam)
        le = count_linear_extensions(shape.poset())
        assert f_aitken(shape) == f_hook(lam) == le


def test_aitken_linear_extensions_agree_skew_samples():
    shapes = [
        ("4,3,3,3", "2,2"),
        ("3,2", "1"),
        ("4,4", "2"),
        ("5,1", ""),
        ("3,3,1", "2"),
        ("4,2,2", "1,1"),
    ]
    for outer, inner in shapes:
        shape = parse_shape(f"skew:{outer}/{inner}" if inner else f"straight:{outer}")
        assert f_aitken(shape) == count_linear_extensions(shape.poset())


def test_aitken_on_disconnected_shape():
    shape = SkewShape(Partition((3, 1)), Partition((1,)))
    assert not shape.is_connected()
    assert f_aitken(shape) == count_linear_extensions(shape.poset())


def test_g_matches_shifted_linear_extensions():
    for lam in iter_strict_partitions(7):
        assert g_thrall(lam) == count_linear_extensions(ShiftedShape(lam).poset())


def test_barely_2x2():
    shape = SkewShape(Partition((2, 2)))
    assert enumerate_barely(shape) == 10
    assert count_barely_formula(shape) == 10


def test_barely_budget():
    with pytest.raises(TableauBudgetError):
        enumerate_barely(SkewShape(Partition((4, 4, 2))), budget=9)
    with pytest.raises(TableauBudgetError):
        enumerate_shifted_barely(Partition((5, 4, 3, 2, 1)))


def test_shifted_barely_21():
    assert enumerate_shifted_barely(Partition((2, 1))) == 48
    assert count_shifted_barely_formula(Partition((2, 1))) == 48
    assert enumerate_shifted_barely(Partition((2, 1)), diagonally_unprimed=True) == 8
    assert count_shifted_barely_formula(Partition((2, 1)), diagonally_unprimed=True) == 8


def test_shifted_barely_321():
    lam = Partition((3, 2, 1))
    assert count_shifted_barely_formula(lam) == 4 * 7 * 32 * 2  # 1792
    assert count_shifted_barely_formula(lam, diagonally_unprimed=True) == 3 * 7 * 4 * 2
    assert enumerate_shifted_barely(lam) == 1792
    assert enumerate_shifted_barely(lam, diagonally_unprimed=True) == 168


def test_barely_formula_matches_brute_force_small():
    shapes = [
        SkewShape(Partition((3, 2))),
        SkewShape(Partition((2, 2, 1))),
        SkewShape(Partition((3, 2)), Partition((1,))),
        SkewShape(Partition((4, 3)), Partition((2,))),
        SkewShape(Partition((3, 1))),
    ]
    for shape in shapes:
        assert count_barely_formula(shape) == enumerate_barely(shape)


def test_shifted_barely_small_both_variants():
    for lam in iter_strict_partitions(5):
        assert count_shifted_barely_formula(lam) == enumerate_shifted_barely(lam)
        assert count_shifted_barely_formula(
            lam, diagonally_unprimed=True
        ) == enumerate_shifted_barely(lam, diagonally_unprimed=True)


def test_type1_diagonal_expectation_half():
    for parts in ((2, 1), (3, 2, 1), (4, 3, 1), (4, 3, 2, 1)):
        lam = Partition(parts)
        shape = ShiftedShape(lam)
        L = build_lattice(shape.poset())
        diag = [shape.box_index[(i, i)] for i in range(1, lam.length + 1)]
        stat = [
            sum(L.t_minus[p][idx] for p in diag) for idx in range(L.n)
        ]
        assert expectation(maxchain_dist(L), stat) == Fraction(1, 2)


def test_balanced_barely_product_formula():
    # balanced shapes: count = ab/(a+b) (N+1) f
    shape = SkewShape(Partition((2, 2)))
    assert count_barely_formula(shape) == Fraction(2 * 2, 2 + 2) * 5 * 2
    skew = parse_shape("skew:4,3,3,3/2,2")
    assert count_barely_formula(skew) == Fraction(4 * 4, 4 + 4) * 10 * f_aitken(skew)


def test_barely_fillings_golden():
    from cdeposets.tableaux import barely_fillings

    fillings = barely_fillings(SkewShape(Partition((2,))))
    assert fillings == [((1,), (2, 3)), ((1, 2), (3,))]
    # a column of two boxes: strict, so the double always carries a gap
    fillings = barely_fillings(SkewShape(Partition((1, 1))))
    assert fillings == [((1,), (2, 3)), ((1, 2), (3,))]
    assert len(barely_fillings(SkewShape(Partition((2, 2))))) == 10
    with pytest.raises(TableauBudgetError):
        barely_fillings(SkewShape(Partition((3, 3))))
