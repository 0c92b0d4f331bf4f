"""Exact-arithmetic combinatorics of finite posets and their ideal lattices:
chain/multichain/maxchain distributions, CDE/mCDE decisions, tCDE
certificates and witnesses, rowmotion/gyration homomesy, and standard
(barely) set-valued tableau counting."""

from .cde import (
    CdeReport,
    TcdeCertificate,
    TcdeWitness,
    cde_report,
    certify_tcde,
    find_witness,
    scan_family,
)
from .distributions import (
    Distribution,
    chain_dist,
    convert_chain_to_mchain,
    convert_chain_to_mmchain,
    expectation,
    is_toggle_symmetric,
    maxchain_dist,
    mchain_dist,
    mmchain_dist,
    necklace_count,
    rank_dist,
    uniform,
)
from .dynamics import (
    OrbitDecomposition,
    antichain_cardinality,
    gyration_map,
    homomesy_report,
    orbit_decomposition,
    rank_permuted_rowmotion_map,
    rowmotion,
    rowmotion_map,
)
from .ideals import IdealLattice, LatticeBudgetError, build_lattice, toggle, toggleability
from .posets import (
    Chain,
    CycleError,
    Poset,
    PosetError,
    RankInfo,
    antichain,
    build_poset,
    chain,
    direct_product,
    disjoint_union,
    dual,
    enumerate_chains,
    is_isomorphic,
    load_poset,
    rank_info,
)
from .shapes import (
    Partition,
    ShiftedShape,
    SkewShape,
    classify_shifted_balanced,
    parse_shape,
    rectangle,
    rook,
    rook_placement,
    shifted_rook,
    shifted_rook_placement,
    staircase,
)
from .tableaux import (
    count_barely_formula,
    count_linear_extensions,
    count_shifted_barely_formula,
    enumerate_barely,
    enumerate_shifted_barely,
    f_aitken,
    f_hook,
    g_thrall,
)

__all__ = [name for name in dir() if not name.startswith("_")]
