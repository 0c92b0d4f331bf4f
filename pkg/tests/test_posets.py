import json
import random

import pytest

from cdeposets import (
    CycleError,
    Poset,
    antichain,
    build_poset,
    chain,
    direct_product,
    disjoint_union,
    dual,
    enumerate_chains,
    is_isomorphic,
    rank_info,
)
from cdeposets.posets import PosetError, longest_chain_length, poset_from_dict, poset_to_json

from conftest import random_poset


def test_build_reduces_redundant_relations():
    P = build_poset(3, [(0, 1), (1, 2), (0, 2)])
    assert P.covers == ((0, 1), (1, 2))


def test_singleton():
    P = build_poset(1, [])
    assert P.n == 1 and P.covers == ()


def test_fix_a_construction(fix_a):
    assert fix_a.n == 5
    assert fix_a.covers == ((0, 2), (0, 3), (1, 2), (1, 3), (2, 4))


def test_cycle_rejected_with_cycle():
    with pytest.raises(CycleError) as info:
        build_poset(3, [(0, 1), (1, 2), (2, 0)])
    cyc = info.value.cycle
    assert len(cyc) >= 3 and set(cyc) <= {0, 1, 2}
    with pytest.raises(CycleError):
        build_poset(2, [(0, 0)])


def test_out_of_range_relation():
    with pytest.raises(PosetError):
        build_poset(2, [(0, 5)])


def test_transitive_reduction_idempotent():
    rng = random.Random(3)
    for _ in range(30):
        P = random_poset(rng)
        again = build_poset(P.n, P.covers)
        assert again.covers == P.covers


def test_dual_involution(fix_a):
    assert dual(dual(fix_a)) == fix_a
    assert is_isomorphic(dual(chain(3)), chain(3))


def test_dual_reverses_covers():
    P = build_poset(3, [(0, 1), (1, 2)])
    assert dual(P).covers == ((1, 0), (2, 1))


def test_union_product_commute_up_to_iso():
    rng = random.Random(5)
    for _ in range(8):
        P = random_poset(rng, 4)
        Q = random_poset(rng, 4)
        assert is_isomorphic(disjoint_union(P, Q), disjoint_union(Q, P))
        assert is_isomorphic(direct_product(P, Q), direct_product(Q, P))


def test_product_associative_up_to_iso():
    A, B, C = chain(2), antichain(2), chain(3)
    assert is_isomorphic(
        direct_product(direct_product(A, B), C),
        direct_product(A, direct_product(B, C)),
    )
    assert is_isomorphic(
        disjoint_union(disjoint_union(A, B), C),
        disjoint_union(A, disjoint_union(B, C)),
    )


def test_product_of_graded_ranks_add():
    P = direct_product(chain(3), chain(2))
    info = rank_info(P)
    assert info.is_graded and info.top_rank == 3  # (3-1) + (2-1)


def test_rank_info_fix_a(fix_a):
    info = rank_info(fix_a)
    assert info.is_ranked and not info.is_graded
    assert info.rank == (0, 0, 1, 1, 2)


def test_rank_info_chain():
    for a in range(1, 6):
        info = rank_info(chain(a))
        assert info.is_graded and info.top_rank == a - 1


def test_rank_info_fix_d(fix_d):
    # three rank levels; every maximal chain has length 2
    info = rank_info(fix_d)
    assert info.is_graded and info.top_rank == 2


def test_rank_info_unrankable():
    # a diamond with sides of different lengths cannot carry a rank function
    P = build_poset(5, [(0, 1), (1, 2), (2, 4), (0, 3), (3, 4)])
    assert not rank_info(P).is_ranked


def test_enumerate_chains_fix_a(fix_a):
    assert len(enumerate_chains(fix_a, 1)) == 7
    assert len(enumerate_chains(fix_a, 0)) == fix_a.n


def test_maximal_chains_2x2():
    P = direct_product(chain(2), chain(2))
    maxes = enumerate_chains(P, maximal_only=True)
    assert len(maxes) == 2 and all(c.length == 2 for c in maxes)


def test_graded_maximal_chains_start_at_rank_zero():
    rng = random.Random(9)
    checked = 0
    while checked < 10:
        P = random_poset(rng)
        info = rank_info(P)
        if not info.is_graded:
            continue
        checked += 1
        for c in enumerate_chains(P, maximal_only=True):
            assert info.rank[c.elements[0]] == 0


def test_longest_chain_length(fix_a):
    assert longest_chain_length(fix_a) == 2
    assert longest_chain_length(chain(4)) == 3


def test_isomorphism_relabeling():
    rng = random.Random(12)
    for _ in range(10):
        P = random_poset(rng, 6)
        perm = list(range(P.n))
        rng.shuffle(perm)
        Q = build_poset(P.n, [(perm[a], perm[b]) for a, b in P.covers])
        assert is_isomorphic(P, Q)
    assert not is_isomorphic(chain(3), disjoint_union(chain(2), chain(1)))
    assert not is_isomorphic(chain(3), chain(4))


def test_json_round_trip(fix_b, tmp_path):
    text = poset_to_json(fix_b)
    P = poset_from_dict(json.loads(text))
    assert P == fix_b
    with pytest.raises(PosetError):
        poset_from_dict({"n": 2})


def test_connected_components(fix_b):
    assert fix_b.is_connected()
    assert len(disjoint_union(chain(2), chain(3)).connected_components()) == 2
