import random
from fractions import Fraction

import pytest

from cdeposets import (
    build_lattice,
    cde_report,
    certify_tcde,
    chain,
    direct_product,
    disjoint_union,
    dual,
    expectation,
    find_witness,
    is_toggle_symmetric,
    rank_info,
    scan_family,
    uniform,
)
from cdeposets.cde import TcdeCertificate
from cdeposets.shapes import Partition, ShiftedShape, SkewShape, rectangle

from conftest import random_poset, random_toggle_symmetric


def test_report_fix_a(fix_a):
    rep = cde_report(fix_a)
    assert rep.edge_density == 1
    assert rep.maxchain_expectation == 1
    assert rep.chain_expectations == (1, Fraction(13, 14), 1)
    assert rep.is_cde and not rep.is_mcde


def test_report_fix_b(fix_b):
    rep = cde_report(fix_b)
    assert rep.is_mcde and not rep.is_cde
    assert rep.maxchain_expectation == Fraction(17, 16)
    assert all(x == 1 for x in rep.chain_expectations)


def test_report_j_fix_c(fix_c):
    rep = cde_report(build_lattice(fix_c))
    assert rep.edge_density == Fraction(8, 5)
    assert rep.chain_expectations[1] == Fraction(83, 52)
    assert rep.is_cde and not rep.is_mcde


def test_certificate_rectangle_2x3():
    L = build_lattice(SkewShape(rectangle(2, 3)).poset())
    cert = certify_tcde(L)
    assert cert is not None and cert.c == Fraction(6, 5)
    assert cert.validate(L)


def test_certificate_e6_kappa_scaling():
    from cdeposets.minuscule import exceptional_kappa, exceptional_poset

    L = build_lattice(exceptional_poset("e6"))
    cert = certify_tcde(L)
    assert cert.c == Fraction(4, 3)
    fig = exceptional_kappa("e6")
    assert cert.kappa == tuple(k / 3 for k in fig)


def test_certificate_absent_for_shifted_42():
    L = build_lattice(ShiftedShape(Partition((4, 2))).poset())
    assert certify_tcde(L) is None


def test_certificate_soundness_random_toggle_symmetric():
    rng = random.Random(42)
    cases = [
        SkewShape(rectangle(2, 3)).poset(),
        ShiftedShape(Partition((3, 2, 1))).poset(),
        direct_product(chain(2), chain(3)),
    ]
    for P in cases:
        L = build_lattice(P)
        cert = certify_tcde(L)
        assert cert is not None
        for _ in range(200):
            mu = random_toggle_symmetric(L, rng)
            assert is_toggle_symmetric(L, mu)
            assert expectation(mu, L.ddeg) == cert.c


def test_witness_for_shifted_42():
    L = build_lattice(ShiftedShape(Partition((4, 2))).poset())
    witness = find_witness(L)
    assert witness is not None
    assert witness.validate(L)
    assert witness.expectation != Fraction(6, 5)
    # the half-step keeps the witness strictly positive
    assert all(w > 0 for w in witness.mu)


def test_witness_absent_on_tcde_lattices(fix_a):
    assert find_witness(build_lattice(chain(4))) is None
    assert find_witness(build_lattice(direct_product(chain(2), chain(2)))) is None


def test_refutation_completeness():
    rng = random.Random(55)
    refuted = 0
    for _ in range(40):
        P = random_poset(rng, 6)
        L = build_lattice(P)
        cert = certify_tcde(L)
        witness = find_witness(L)
        assert (cert is None) == (witness is not None)
        if witness is not None:
            refuted += 1
            assert witness.validate(L)
    assert refuted > 0


def test_tcde_implies_mcde_implies_cde():
    rng = random.Random(61)
    for _ in range(25):
        P = random_poset(rng, 5)
        L = build_lattice(P)
        rep = cde_report(L)
        if certify_tcde(L) is not None:
            assert rep.is_mcde
        if rep.is_mcde:
            assert rep.is_cde


def test_duality_preserves_certificates():
    rng = random.Random(77)
    for _ in range(20):
        P = random_poset(rng, 5)
        c1 = certify_tcde(build_lattice(P))
        c2 = certify_tcde(build_lattice(dual(P)))
        assert (c1 is None) == (c2 is None)
        if c1 is not None:
            assert c1.c == c2.c


def test_products_add_certificate_constants():
    rng = random.Random(83)
    found = 0
    for _ in range(20):
        P = random_poset(rng, 3)
        Q = random_poset(rng, 3)
        cp = certify_tcde(build_lattice(P))
        cq = certify_tcde(build_lattice(Q))
        if cp is None or cq is None:
            continue
        found += 1
        cpq = certify_tcde(build_lattice(disjoint_union(P, Q)))
        assert cpq is not None and cpq.c == cp.c + cq.c
    assert found > 0


def test_graded_base_density_formula():
    rng = random.Random(91)
    for _ in range(30):
        P = random_poset(rng, 5)
        info = rank_info(P)
        L = build_lattice(P)
        cert = certify_tcde(L)
        if cert is not None and info.is_graded:
            assert cert.c == Fraction(P.n, info.top_rank + 2)


def test_empty_full_constraint_flag():
    L = build_lattice(ShiftedShape(Partition((4, 2))).poset())
    cert = certify_tcde(L, empty_full_constraint=True)
    assert cert is not None and cert.c == Fraction(6, 5)


def test_propeller_lattices_density_one():
    from cdeposets.minuscule import propeller_poset

    for a in range(1, 4):
        for d in range(1, 4):
            cert = certify_tcde(build_lattice(propeller_poset(a, 1, 1, d)))
            assert cert is not None and cert.c == 1


def test_invalid_certificate_fails_validation(fix_a):
    L = build_lattice(chain(2))
    bad = TcdeCertificate(c=Fraction(5), kappa=(Fraction(0),) * 2)
    assert not bad.validate(L)


def test_scan_family():
    assert list(scan_family([], "cde")) == []
    rows = list(
        scan_family(
            [("chain3", chain(3)), ("fixture", direct_product(chain(2), chain(2)))],
            "tcde",
        )
    )
    assert [r["holds"] for r in rows] == [True, True]
    with pytest.raises(ValueError):
        list(scan_family([], "bogus"))
